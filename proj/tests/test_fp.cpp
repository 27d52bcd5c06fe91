#include <doctest.h>

#include "luroth/fp.hpp"
#include "luroth/rng.hpp"

using namespace luroth;

TEST_CASE("FpField basic arithmetic") {
    FpField F(2017);
    CHECK(F.add(2016, 5) == 4);
    CHECK(F.sub(3, 5) == 2015);
    CHECK(F.mul(2016, 2016) == 1);   // (-1)^2
    CHECK(F.neg(0) == 0);
    CHECK(F.from_int(-1) == 2016);
    CHECK(F.from_int(-2017) == 0);
}

TEST_CASE("FpField inverse and pow over random elements") {
    for (std::uint64_t p : {2017ULL, 10007ULL, 100003ULL, 1000003ULL}) {
        FpField F(p);
        Rng rng(p);
        for (int i = 0; i < 200; ++i) {
            auto a = 1 + rng.below(p - 1);
            CHECK(F.mul(a, F.inv(a)) == 1);
            CHECK(F.pow(a, p - 1) == 1);   // Fermat
        }
    }
}

TEST_CASE("FpField rejects bad moduli") {
    CHECK_THROWS(FpField(4));
    CHECK_THROWS(FpField(1));
    CHECK_THROWS(FpField(2));        // even
    CHECK_THROWS(FpField(1 << 22)); // beyond the design bound
}

TEST_CASE("Barrett reduction matches plain modulo on wide inputs") {
    FpField F(1000003);
    Rng rng(99);
    const auto& br = F.barrett();
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t x = rng.below(std::uint64_t{1} << 42);
        CHECK(br.reduce(x) == x % 1000003);
    }
}

TEST_CASE("Rng is deterministic and derivation produces distinct streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
    Rng c = Rng::derive(7, 0);
    Rng d = Rng::derive(7, 1);
    bool differs = false;
    for (int i = 0; i < 8; ++i) differs |= (c.next() != d.next());
    CHECK(differs);
    // below() stays in range
    Rng e(1);
    for (int i = 0; i < 300; ++i) CHECK(e.below(3) < 3);
}
