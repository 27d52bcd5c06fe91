#include <doctest.h>

#include "luroth/fp.hpp"
#include "luroth/matrix.hpp"
#include "luroth/rational.hpp"
#include "luroth/rng.hpp"

using namespace luroth;

namespace {

Matrix<FpField> random_matrix(const FpField& F, Rng& rng, std::size_t r, std::size_t c) {
    Matrix<FpField> m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.below(F.modulus());
    return m;
}

}  // namespace

TEST_CASE("right_kernel on the spec examples") {
    FpField F(2017);
    // 2x2 identity -> empty basis
    Matrix<FpField> id(F, 2, 2);
    id.at(0, 0) = id.at(1, 1) = 1;
    CHECK(id.right_kernel().empty());
    // 2x3 zero matrix -> standard basis
    Matrix<FpField> z(F, 2, 3);
    auto kz = z.right_kernel();
    REQUIRE(kz.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(kz[i][j] == (i == j ? 1u : 0u));
    // [[1,1,1],[2,2,2]]: rank 1 (confirmed independently), kernel dim 2, M v = 0
    Matrix<FpField> m(F, 2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        m.at(0, j) = 1;
        m.at(1, j) = 2;
    }
    CHECK(m.rank() == 1);
    auto k = m.right_kernel();
    REQUIRE(k.size() == 2);
    for (const auto& v : k)
        for (auto x : m.mul_vec(v)) CHECK(x == 0);
}

TEST_CASE("rank examples") {
    FpField F(2017);
    Matrix<FpField> id(F, 5, 5);
    for (int i = 0; i < 5; ++i) id.at(i, i) = 1;
    CHECK(id.rank() == 5);
    Matrix<FpField> z(F, 4, 6);
    CHECK(z.rank() == 0);
}

TEST_CASE("rref is idempotent and rank + kernel dim = columns (property)") {
    FpField F(10007);
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
        auto m = random_matrix(F, rng, r, c);
        auto e = m.rref();
        CHECK(e.rref() == e);
        auto k = m.right_kernel();
        CHECK(m.rank() + k.size() == c);
        for (const auto& v : k)
            for (auto x : m.mul_vec(v)) CHECK(x == 0);
    }
}

TEST_CASE("kernel basis is reduced echelon: pivot 1 at own free column") {
    FpField F(2017);
    Rng rng(5);
    auto m = random_matrix(F, rng, 4, 9);
    auto k = m.right_kernel();
    // unit coordinate at each vector's free column, zero in the others
    std::vector<std::size_t> frees;
    for (const auto& v : k) {
        std::size_t fc = 0;
        std::size_t ones = 0;
        for (std::size_t j = 0; j < 9; ++j)
            if (v[j] == 1) { fc = j; ++ones; }
        (void)ones;
        frees.push_back(fc);
    }
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j)
            CHECK(k[i][frees[j]] == (i == j ? 1u : 0u));
    // ordered by free column ascending
    for (std::size_t i = 1; i < frees.size(); ++i) CHECK(frees[i - 1] < frees[i]);
}

TEST_CASE("determinant over Fp and Q") {
    FpField F(2017);
    Matrix<FpField> m(F, 2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(1, 0) = 3; m.at(1, 1) = 4;
    CHECK(m.det() == F.from_int(-2));
    RatField Q;
    Matrix<RatField> q(Q, 2, 2);
    q.at(0, 0) = mpq_class(1, 2); q.at(0, 1) = 1;
    q.at(1, 0) = 1;               q.at(1, 1) = 1;
    CHECK(q.det() == mpq_class(-1, 2));
}

TEST_CASE("EchelonBasis reduce and contains") {
    FpField F(2017);
    std::vector<std::vector<std::uint64_t>> vecs = {{1, 2, 0, 5}, {0, 1, 1, 1}};
    auto eb = EchelonBasis<FpField>::from_vectors(F, vecs, 4);
    CHECK(eb.dim() == 2);
    CHECK(eb.contains({1, 2, 0, 5}));
    // sum of the two is inside
    CHECK(eb.contains({1, 3, 1, 6}));
    CHECK(!eb.contains({0, 0, 1, 0}));
    auto r = eb.reduce({1, 3, 1, 6});
    for (auto x : r) CHECK(x == 0);
}
