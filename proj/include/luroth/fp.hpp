/// Prime field arithmetic on machine-word residues.
///
/// All supported moduli are odd primes below 2^21 (the paper-scale primes are
/// 2017, 10007, 100003 and 1000003), so products of two reduced residues fit
/// comfortably in 64 bits and a single Barrett reduction step suffices.
#ifndef LUROTH_FP_HPP
#define LUROTH_FP_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace luroth {

/// Barrett reducer for a fixed modulus p < 2^21; valid for inputs < 2^42.
struct Barrett {
    std::uint64_t p = 0;
    std::uint64_t mu = 0;   // floor(2^64 / p)

    Barrett() = default;
    explicit Barrett(std::uint64_t p_) : p(p_) {
        assert(p >= 2);
        mu = ~std::uint64_t{0} / p;   // floor((2^64 - 1) / p) == floor(2^64/p) for p not a power of 2
    }

    std::uint64_t reduce(std::uint64_t x) const {
        std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * mu) >> 64);
        std::uint64_t r = x - q * p;
        while (r >= p) r -= p;
        return r;
    }
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Field context for F_p. Elements are plain uint64_t residues in [0, p).
class FpField {
public:
    using elt = std::uint64_t;

    FpField() = default;
    explicit FpField(std::uint64_t p) : p_(p), br_(p) {
        if (p < 3 || !is_prime_u64(p))
            throw std::invalid_argument("FpField: modulus " + std::to_string(p) + " is not an odd prime");
        if (p >= (std::uint64_t{1} << 21))
            throw std::invalid_argument("FpField: modulus exceeds the machine-word design bound 2^21");
    }

    std::uint64_t modulus() const { return p_; }

    elt zero() const { return 0; }
    elt one() const { return 1; }
    bool is_zero(elt a) const { return a == 0; }

    elt from_int(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return static_cast<elt>(r);
    }

    elt add(elt a, elt b) const {
        elt s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    elt sub(elt a, elt b) const { return a >= b ? a - b : a + p_ - b; }
    elt neg(elt a) const { return a == 0 ? 0 : p_ - a; }
    elt mul(elt a, elt b) const { return br_.reduce(a * b); }

    /// a + b*c in one reduction; b*c < 2^42 and a < 2^21 keep the sum in range.
    elt mul_add(elt a, elt b, elt c) const { return br_.reduce(a + b * c); }
    /// a - b*c via a + b*(p-c).
    elt mul_sub(elt a, elt b, elt c) const { return br_.reduce(a + b * (p_ - c)); }

    elt inv(elt a) const {
        if (a == 0) throw std::domain_error("FpField: inverse of zero");
        // extended gcd
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        assert(r == 1);
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<elt>(t);
    }
    elt div(elt a, elt b) const { return mul(a, inv(b)); }

    elt pow(elt a, std::uint64_t e) const {
        elt r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// Square root via Tonelli-Shanks, smaller representative of the pair;
    /// empty when a is a nonresidue.
    std::optional<elt> sqrt(elt a) const {
        if (a == 0) return elt{0};
        if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
        std::uint64_t q = p_ - 1;
        unsigned s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        elt z = 2;
        while (pow(z, (p_ - 1) / 2) == 1) ++z;
        elt m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
        while (t != 1) {
            elt t2 = t;
            unsigned i = 0;
            while (t2 != 1) { t2 = mul(t2, t2); ++i; }
            elt b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return std::min(r, p_ - r);
    }

    const Barrett& barrett() const { return br_; }

    bool operator==(const FpField& o) const { return p_ == o.p_; }
    bool operator!=(const FpField& o) const { return p_ != o.p_; }

    static std::string name() { return "Fp"; }

private:
    std::uint64_t p_ = 0;
    Barrett br_;
};

}  // namespace luroth

#endif
