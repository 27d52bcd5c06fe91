#include <doctest.h>

#include "luroth/densepoly.hpp"
#include "luroth/rational.hpp"
#include "luroth/rng.hpp"

using namespace luroth;

TEST_CASE("SparsePoly basic ring operations over Q") {
    RatField Q;
    auto x = SparsePoly<RatField>::variable(Q, 2, 0);
    auto y = SparsePoly<RatField>::variable(Q, 2, 1);
    auto p = (x + y) * (x - y);
    auto want = x * x - y * y;
    CHECK(p == want);
    CHECK(p.support_size() == 2);
    // d/dx (x^2 y) = 2 x y
    auto q = x * x * y;
    auto d = q.partial(0);
    CHECK(d == (x * y).scaled(mpq_class(2)));
    // eval x^4+y^4 at (1,2)
    auto f = x.pow(4) + y.pow(4);
    CHECK(f.eval({mpq_class(1), mpq_class(2)}) == mpq_class(17));
}

TEST_CASE("no explicit zero terms are stored") {
    RatField Q;
    auto x = SparsePoly<RatField>::variable(Q, 1, 0);
    auto z = x - x;
    CHECK(z.is_zero());
    CHECK(z.support_size() == 0);
    SparsePoly<RatField> p(Q, 1);
    p.add_term({2}, mpq_class(0));
    CHECK(p.is_zero());
}

TEST_CASE("ring axioms on random rational polynomials (property)") {
    RatField Q;
    Rng rng(17);
    auto random_poly = [&](int nvars) {
        SparsePoly<RatField> p(Q, nvars);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::uint16_t> k(nvars);
            for (auto& e : k) e = static_cast<std::uint16_t>(rng.below(4));
            p.add_term(k, mpq_class(rng.range(-9, 9), 1 + rng.below(7)));
        }
        return p;
    };
    for (int t = 0; t < 15; ++t) {
        auto a = random_poly(3), b = random_poly(3), c = random_poly(3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}
