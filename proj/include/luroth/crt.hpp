/// Chinese remainder combination and bounded rational reconstruction,
/// the lifting path from prime-field results toward rational coefficients.
#ifndef LUROTH_CRT_HPP
#define LUROTH_CRT_HPP

#include <gmpxx.h>

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace luroth {

/// Combine residues r_i mod pairwise-distinct primes p_i into the unique
/// residue modulo the product. Returns (residue, modulus).
inline std::pair<mpz_class, mpz_class> crt_combine(
    const std::vector<std::pair<mpz_class, mpz_class>>& residues) {
    if (residues.empty()) throw std::invalid_argument("crt_combine: no residues");
    std::set<mpz_class> seen;
    for (const auto& [r, p] : residues)
        if (!seen.insert(p).second)
            throw std::invalid_argument("crt_combine: duplicate prime " + p.get_str());
    mpz_class x = residues[0].first % residues[0].second;
    if (x < 0) x += residues[0].second;
    mpz_class m = residues[0].second;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const mpz_class& r = residues[i].first;
        const mpz_class& p = residues[i].second;
        mpz_class minv;
        if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::invalid_argument("crt_combine: moduli not coprime");
        mpz_class t = ((r - x) * minv) % p;
        if (t < 0) t += p;
        x += m * t;
        m *= p;
    }
    return {x, m};
}

struct Reconstructed {
    mpz_class num;
    mpz_class den;   // > 0, coprime to num
};

/// Recover n/d with |n| <= bound, 0 < d <= bound, gcd(d, modulus) = 1 and
/// n == d * residue (mod modulus). Requires 2*bound^2 < modulus for
/// uniqueness; returns nullopt when no such fraction exists (the caller
/// should add primes and retry).
inline std::optional<Reconstructed> rational_reconstruct(const mpz_class& residue,
                                                         const mpz_class& modulus,
                                                         const mpz_class& bound) {
    if (bound <= 0 || 2 * bound * bound >= modulus)
        throw std::invalid_argument("rational_reconstruct: need 2*bound^2 < modulus");
    mpz_class r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    mpz_class n = r1, d = t1;
    if (d < 0) { d = -d; n = -n; }
    if (d == 0 || d > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Reconstructed{n, d};
}

}  // namespace luroth

#endif
