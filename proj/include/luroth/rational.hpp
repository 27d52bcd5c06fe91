/// Arbitrary-precision rational field context backed by GMP.
///
/// Elements are mpq_class values kept in lowest terms with positive
/// denominator (GMP canonical form). Mirrors the FpField interface so the
/// linear algebra and polynomial code can be instantiated over either domain.
#ifndef LUROTH_RATIONAL_HPP
#define LUROTH_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace luroth {

class RatField {
public:
    using elt = mpq_class;

    elt zero() const { return mpq_class(0); }
    elt one() const { return mpq_class(1); }
    bool is_zero(const elt& a) const { return sgn(a) == 0; }

    elt from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }

    elt add(const elt& a, const elt& b) const { return a + b; }
    elt sub(const elt& a, const elt& b) const { return a - b; }
    elt neg(const elt& a) const { return -a; }
    elt mul(const elt& a, const elt& b) const { return a * b; }
    elt mul_add(const elt& a, const elt& b, const elt& c) const { return a + b * c; }
    elt mul_sub(const elt& a, const elt& b, const elt& c) const { return a - b * c; }
    elt inv(const elt& a) const {
        if (sgn(a) == 0) throw std::domain_error("RatField: inverse of zero");
        return 1 / a;
    }
    elt div(const elt& a, const elt& b) const { return a / inv_guard(b); }

    elt pow(elt a, std::uint64_t e) const {
        elt r(1);
        while (e) {
            if (e & 1) r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }

    /// exact square root when the fraction is a perfect square
    std::optional<elt> sqrt(const elt& a) const {
        if (sgn(a) < 0) return std::nullopt;
        mpz_class num = a.get_num(), den = a.get_den();
        mpz_class rn, rd;
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
            return std::nullopt;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return mpq_class(rn, rd);
    }

    bool operator==(const RatField&) const { return true; }
    bool operator!=(const RatField&) const { return false; }

    static std::string name() { return "Q"; }

private:
    const elt& inv_guard(const elt& b) const {
        if (sgn(b) == 0) throw std::domain_error("RatField: division by zero");
        return b;
    }
};

}  // namespace luroth

#endif
