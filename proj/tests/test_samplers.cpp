#include <doctest.h>

#include "luroth/densepoly.hpp"
#include "luroth/relations.hpp"
#include "luroth/samplers.hpp"

using namespace luroth;

TEST_CASE("random_generic: determinism, {-1,0,1} range, no all-zero draws") {
    FpField F(2017);
    auto a = random_generic(F, 42, 50);
    auto b = random_generic(F, 42, 50);
    REQUIRE(a.size() == 50);
    for (std::size_t i = 0; i < 50; ++i) CHECK(a[i] == b[i]);
    auto big = random_generic(F, 7, 1000);
    for (const auto& q : big) {
        bool nz = false;
        for (auto c : q.coeffs()) {
            CHECK((c == 0 || c == 1 || c == 2016));
            nz |= c != 0;
        }
        CHECK(nz);
    }
}

TEST_CASE("pentalateral with zero c is x y z (x+y+z)") {
    FpField F(2017);
    PentalateralRecipe<FpField> r;
    r.ell5 = {1, 2, 3};
    r.c = {0, 0, 0, 0};
    auto f = pentalateral(F, r);
    // x y z (x+y+z) = x^2yz + xy^2z + xyz^2
    TernaryQuartic<FpField> want(F, 3, 4);
    want[{2, 1, 1, 0}] = want[{1, 2, 1, 0}] = want[{1, 1, 2, 0}] = 1;
    CHECK(f == want);
}

TEST_CASE("pentalateral against an independent expansion oracle") {
    // c = (1,1,1,1), ell5 = x + 2y + 3z, expanded with the sparse polynomial
    // code path instead of the dense forms
    FpField F(2017);
    PentalateralRecipe<FpField> r;
    r.ell5 = {1, 2, 3};
    r.c = {1, 1, 1, 1};
    auto f = pentalateral(F, r);

    using SP = SparsePoly<FpField>;
    auto x = SP::variable(F, 3, 0), y = SP::variable(F, 3, 1), z = SP::variable(F, 3, 2);
    auto l4 = x + y + z;
    auto l5 = x + y.scaled(2) + z.scaled(3);
    auto oracle = x * y * z * l4 + y * z * l4 * l5 + x * z * l4 * l5 + x * y * l4 * l5 + x * y * z * l5;
    const auto& ex = f.exponents();
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 15; ++i) {
        std::vector<std::uint16_t> key = {ex[i][0], ex[i][1], ex[i][2]};
        auto it = oracle.terms().find(key);
        std::uint64_t want = it == oracle.terms().end() ? 0 : it->second;
        CHECK(f.coeffs()[i] == want);
        nonzero += want != 0;
    }
    CHECK(nonzero > 0);
    CHECK_THROWS(pentalateral(F, PentalateralRecipe<FpField>{{0, 0, 0}, {1, 1, 1, 1}}));
}

TEST_CASE("l2_quartic is singular: I27 = 0 exactly") {
    FpField F(2017);
    DixmierOhnoEvaluator<FpField> dix(F);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto f = l2_quartic(F, 1234, s);
        CHECK(f == l2_quartic(F, 1234, s));   // determinism
        CHECK(dix.evaluate(f)[12] == 0);
    }
}

TEST_CASE("ciani quartic placement") {
    FpField F(2017);
    CianiCoefficients<FpField> cc{{1, 0, 0, 1, 0, 1}};
    auto f = ciani(F, cc);
    TernaryQuartic<FpField> fermat(F, 3, 4);
    fermat[{4, 0, 0, 0}] = fermat[{0, 4, 0, 0}] = fermat[{0, 0, 4, 0}] = 1;
    CHECK(f == fermat);
    CianiCoefficients<FpField> zero{{0, 0, 0, 0, 0, 0}};
    CHECK(ciani(F, zero).is_zero());
}

TEST_CASE("Ciani G formula at (1,0,0,1,0,1) is 1") {
    RatField Q;
    auto G = ciani_factor_G();
    std::vector<mpq_class> pt = {1, 0, 0, 1, 0, 1};
    CHECK(G.eval(pt) == 1);
    // and the factor degrees are 6, 9, 12 as printed
    auto deg = [](const SparsePoly<RatField>& p) {
        int d = 0;
        for (const auto& [k, c] : p.terms()) {
            int s = 0;
            for (auto e : k) s += e;
            d = std::max(d, s);
        }
        return d;
    };
    CHECK(deg(G) == 6);
    CHECK(deg(ciani_factor_H()) == 9);
    CHECK(deg(ciani_factor_J()) == 12);
}

TEST_CASE("remark_quartic: determinism and singularity of the section") {
    FpField F(2017);
    DixmierOhnoEvaluator<FpField> dix(F);
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto q = remark_quartic(F, 99, s);
        CHECK(q == remark_quartic(F, 99, s));
        CHECK(!q.is_zero());
        // tangent-plane sections of the Hessian surface are singular quartics
        CHECK(dix.evaluate(q)[12] == 0);
    }
}
