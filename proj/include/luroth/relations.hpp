/// The relation-finding core: weighted monomial enumeration in the 13
/// generators, evaluation matrices, kernel comparison, extraction and
/// canonicalization of the degree-54 expression, the singular-locus probes,
/// and the Ciani-family verification and interpolation.
#ifndef LUROTH_RELATIONS_HPP
#define LUROTH_RELATIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "luroth/densepoly.hpp"
#include "luroth/invariants.hpp"
#include "luroth/matrix.hpp"
#include "luroth/parallel.hpp"
#include "luroth/rational.hpp"
#include "luroth/samplers.hpp"

namespace luroth {

/// A monomial in the 13 generators; weighted degree is the dot product with
/// the degree list (3,6,9,9,12,12,15,15,18,18,21,21,27).
struct ExponentVector {
    std::array<std::uint8_t, 13> e{};

    int weighted_degree() const {
        int d = 0;
        for (int i = 0; i < 13; ++i) d += e[i] * kInvariantDegrees[i];
        return d;
    }
    bool operator==(const ExponentVector& o) const { return e == o.e; }
    /// lex order on the tuple, I3 major
    bool operator<(const ExponentVector& o) const { return e < o.e; }
};

/// All exponent vectors of the given weighted degree, lex-descending
/// (so degree 54 starts at I3^18). Exhaustive by construction.
inline std::vector<ExponentVector> weighted_monomials(int degree) {
    if (degree < 0) throw std::invalid_argument("weighted_monomials: negative degree");
    std::vector<ExponentVector> out;
    ExponentVector cur;
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == 13) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int maxe = rem / kInvariantDegrees[pos];
        for (int v = maxe; v >= 0; --v) {
            cur.e[pos] = static_cast<std::uint8_t>(v);
            self(self, pos + 1, rem - v * kInvariantDegrees[pos]);
        }
        cur.e[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

/// Sparse expression in the generators: the Luroth invariant and every probe
/// relation live here. Terms are kept lex-descending with no zero
/// coefficients; all exponent vectors must have the stated weighted degree.
template <class F>
struct InvariantExpression {
    using elt = typename F::elt;

    int degree = 0;
    std::optional<std::uint64_t> modulus;   // empty means rational coefficients
    std::vector<std::pair<ExponentVector, elt>> terms;

    static InvariantExpression from_vector(const F& fld, int degree,
                                           const std::vector<ExponentVector>& mons,
                                           const std::vector<elt>& coeffs) {
        InvariantExpression ex;
        ex.degree = degree;
        if constexpr (std::is_same_v<F, FpField>) ex.modulus = fld.modulus();
        for (std::size_t i = 0; i < mons.size(); ++i) {
            if (fld.is_zero(coeffs[i])) continue;
            if (mons[i].weighted_degree() != degree)
                throw std::invalid_argument("InvariantExpression: monomial degree mismatch");
            ex.terms.push_back({mons[i], coeffs[i]});
        }
        return ex;
    }

    std::size_t support_size() const { return terms.size(); }
};

/// Monomial values for one invariant tuple, via per-generator power tables.
template <class F>
std::vector<typename F::elt> monomial_row(const F& fld, const InvariantTuple<F>& t,
                                          const std::vector<ExponentVector>& mons,
                                          const std::array<int, 13>& maxexp) {
    std::array<std::vector<typename F::elt>, 13> pw;
    for (int g = 0; g < 13; ++g) {
        pw[g].resize(maxexp[g] + 1);
        pw[g][0] = fld.one();
        for (int e = 1; e <= maxexp[g]; ++e) pw[g][e] = fld.mul(pw[g][e - 1], t[g]);
    }
    std::vector<typename F::elt> row;
    row.reserve(mons.size());
    for (const auto& m : mons) {
        typename F::elt v = fld.one();
        for (int g = 0; g < 13; ++g)
            if (m.e[g]) v = fld.mul(v, pw[g][m.e[g]]);
        row.push_back(v);
    }
    return row;
}

inline std::array<int, 13> max_exponents(const std::vector<ExponentVector>& mons) {
    std::array<int, 13> mx{};
    for (const auto& m : mons)
        for (int g = 0; g < 13; ++g) mx[g] = std::max(mx[g], static_cast<int>(m.e[g]));
    return mx;
}

/// rows = quartics, columns = monomials; invariant tuples are computed once
/// per quartic (in parallel) and reused across the row.
template <class F>
Matrix<F> eval_matrix(const DixmierOhnoEvaluator<F>& dix,
                      const std::vector<TernaryQuartic<F>>& quartics,
                      const std::vector<ExponentVector>& mons) {
    if (quartics.empty() || mons.empty())
        throw std::invalid_argument("eval_matrix: empty input");
    const F& fld = dix.field();
    for (const auto& q : quartics)
        if (q.field() != fld) throw std::invalid_argument("eval_matrix: domain mismatch");
    auto mx = max_exponents(mons);
    Matrix<F> M(fld, quartics.size(), mons.size());
    parallel_for(quartics.size(), [&](std::size_t i) {
        auto t = dix.evaluate(quartics[i]);
        auto row = monomial_row(fld, t, mons, mx);
        for (std::size_t j = 0; j < row.size(); ++j) M.at(i, j) = row[j];
    });
    return M;
}

template <class F>
typename F::elt evaluate_expression(const DixmierOhnoEvaluator<F>& dix,
                                    const InvariantExpression<F>& ex,
                                    const TernaryQuartic<F>& f) {
    const F& fld = dix.field();
    if constexpr (std::is_same_v<F, FpField>) {
        if (ex.modulus && *ex.modulus != fld.modulus())
            throw std::invalid_argument("evaluate_expression: modulus mismatch");
    }
    auto t = dix.evaluate(f);
    std::array<int, 13> mx{};
    for (const auto& [m, c] : ex.terms)
        for (int g = 0; g < 13; ++g) mx[g] = std::max(mx[g], static_cast<int>(m.e[g]));
    std::array<std::vector<typename F::elt>, 13> pw;
    for (int g = 0; g < 13; ++g) {
        pw[g].resize(mx[g] + 1);
        pw[g][0] = fld.one();
        for (int e = 1; e <= mx[g]; ++e) pw[g][e] = fld.mul(pw[g][e - 1], t[g]);
    }
    typename F::elt s = fld.zero();
    for (const auto& [m, c] : ex.terms) {
        typename F::elt v = c;
        for (int g = 0; g < 13; ++g)
            if (m.e[g]) v = fld.mul(v, pw[g][m.e[g]]);
        s = fld.add(s, v);
    }
    return s;
}

template <class F>
struct LurothSearchResult {
    InvariantExpression<F> expression;
    std::size_t rank = 0;       // rank of the generic evaluation matrix
    std::size_t dim_n1 = 0;     // generic degree-54 relations
    std::size_t dim_n2 = 0;     // Luroth degree-54 relations
};

/// The full degree-54 search: kernels N1 (generic) and N2 (pentalateral),
/// nesting check, extraction of the one new direction, canonicalization.
///
/// Canonical form: the chosen vector is reduced against the echelon basis of
/// N1 computed with the column scan running from the lex-smallest monomial
/// upward (so the eliminated 215 coordinates sit at the I27-heavy end and the
/// I3^18 coordinate survives), then scaled monic in I3^18. This makes the
/// expression independent of the seed and comparable across primes.
template <class F>
LurothSearchResult<F> find_luroth(const DixmierOhnoEvaluator<F>& dix, std::size_t generic_count,
                                  std::size_t luroth_count, std::uint64_t seed) {
    const F& fld = dix.field();
    auto mons = weighted_monomials(54);
    const std::size_t ncols = mons.size();
    std::size_t margin = ncols / 12;   // >= 8% above column count
    if (generic_count < ncols + margin || luroth_count < ncols + margin)
        throw std::invalid_argument("find_luroth: batch sizes must exceed " +
                                    std::to_string(ncols + margin) + " (monomials plus margin)");

    auto generic = random_generic(fld, seed, generic_count);
    auto luroth = random_luroth(fld, seed, luroth_count);
    auto M1 = eval_matrix(dix, generic, mons);
    auto M2 = eval_matrix(dix, luroth, mons);
    auto N1 = M1.right_kernel();
    auto N2 = M2.right_kernel();

    LurothSearchResult<F> res;
    res.dim_n1 = N1.size();
    res.dim_n2 = N2.size();
    res.rank = ncols - N1.size();
    if (N1.size() != 215 || N2.size() != 216)
        throw std::runtime_error("find_luroth: kernel dimensions (" + std::to_string(N1.size()) +
                                 ", " + std::to_string(N2.size()) +
                                 ") off the expected (215, 216); insufficient genericity -- reseed or enlarge batch");

    auto E2 = EchelonBasis<F>::from_vectors(fld, N2, ncols);
    for (const auto& v : N1)
        if (!E2.contains(v))
            throw std::runtime_error(
                "find_luroth: generic relations not contained in the Luroth relations; "
                "internal inconsistency in the invariant evaluator");

    std::vector<std::size_t> revorder(ncols);
    for (std::size_t i = 0; i < ncols; ++i) revorder[i] = ncols - 1 - i;
    auto E1rev = EchelonBasis<F>::from_vectors(fld, N1, ncols, &revorder);

    std::vector<typename F::elt> lvec;
    for (const auto& v : N2) {
        auto r = E1rev.reduce(v);
        bool nz = false;
        for (const auto& x : r) nz |= !fld.is_zero(x);
        if (nz) {
            lvec = std::move(r);
            break;
        }
    }
    if (lvec.empty())
        throw std::runtime_error("find_luroth: N2 did not extend N1 (dimension bookkeeping broken)");
    // monic in I3^18 (the lex-largest monomial, column 0)
    if (fld.is_zero(lvec[0]))
        throw std::runtime_error("find_luroth: I3^18 coefficient vanished; cannot normalize monic");
    auto s = fld.inv(lvec[0]);
    for (auto& x : lvec) x = fld.mul(x, s);
    res.expression = InvariantExpression<F>::from_vector(fld, 54, mons, lvec);
    return res;
}

template <class F>
struct ProbeRelation {
    InvariantExpression<F> expression;
    bool matches_i3_i27 = false;
};

template <class F>
struct ProbeReport {
    int degree = 0;
    std::size_t monomial_count = 0;
    std::size_t generic_kernel_dim = 0;
    std::size_t locus_kernel_dim = 0;
    std::vector<ProbeRelation<F>> new_relations;
};

/// Compare the relation lattice of a sampled locus against the generic one at
/// the given degree: new relations are a reduced basis of (locus kernel)
/// modulo (generic kernel). Each new relation is pattern-matched against the
/// monomial I3 * I27.
template <class F>
ProbeReport<F> probe_locus(const DixmierOhnoEvaluator<F>& dix,
                           const std::vector<TernaryQuartic<F>>& samples, int degree,
                           std::uint64_t generic_seed) {
    const F& fld = dix.field();
    auto mons = weighted_monomials(degree);
    std::size_t margin = std::max<std::size_t>(16, mons.size() / 8);
    if (samples.size() < mons.size() + margin)
        throw std::invalid_argument("probe_locus: sample starvation (need at least " +
                                    std::to_string(mons.size() + margin) + " samples)");
    auto generic = random_generic(fld, generic_seed, mons.size() + margin);
    auto G = eval_matrix(dix, generic, mons);
    auto S = eval_matrix(dix, samples, mons);
    auto KG = G.right_kernel();
    auto KS = S.right_kernel();

    ProbeReport<F> rep;
    rep.degree = degree;
    rep.monomial_count = mons.size();
    rep.generic_kernel_dim = KG.size();
    rep.locus_kernel_dim = KS.size();

    auto EG = EchelonBasis<F>::from_vectors(fld, KG, mons.size());
    std::vector<std::vector<typename F::elt>> fresh;
    for (const auto& v : KS) {
        auto r = EG.reduce(v);
        bool nz = false;
        for (const auto& x : r) nz |= !fld.is_zero(x);
        if (nz) fresh.push_back(std::move(r));
    }
    auto EN = EchelonBasis<F>::from_vectors(fld, fresh, mons.size());

    // reduced representative of the monomial I3*I27 when it lives here
    std::vector<typename F::elt> i3i27;
    ExponentVector m27;
    m27.e[0] = 1;
    m27.e[12] = 1;
    if (m27.weighted_degree() == degree) {
        std::vector<typename F::elt> unit(mons.size(), fld.zero());
        for (std::size_t j = 0; j < mons.size(); ++j)
            if (mons[j] == m27) unit[j] = fld.one();
        i3i27 = EG.reduce(std::move(unit));
    }

    for (const auto& row : EN.rows) {
        ProbeRelation<F> pr;
        pr.expression = InvariantExpression<F>::from_vector(fld, degree, mons, row);
        if (!i3i27.empty()) {
            // proportionality test against the reduced I3*I27 representative
            typename F::elt lam = fld.zero();
            bool ok = true, have = false;
            for (std::size_t j = 0; j < mons.size() && ok; ++j) {
                bool za = fld.is_zero(row[j]), zb = fld.is_zero(i3i27[j]);
                if (za != zb) ok = false;
                else if (!za && !have) { lam = fld.div(i3i27[j], row[j]); have = true; }
                else if (!za) ok = fld.is_zero(fld.sub(fld.mul(lam, row[j]), i3i27[j]));
            }
            pr.matches_i3_i27 = ok && have;
        }
        rep.new_relations.push_back(std::move(pr));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Ciani family: the printed factors G, H, J and their weighted monomial basis
// ---------------------------------------------------------------------------

/// All exponent tuples of (a,b,c,d,e,f) of total degree 54 that are isobaric
/// of tri-degree (72,72,72): coefficient a sits on x^4, b on x^2y^2, c on
/// x^2z^2, d on y^4, e on y^2z^2, f on z^4, and a degree-54 invariant has
/// weight 72 in each variable. Lex-descending order.
inline std::vector<std::array<std::uint16_t, 6>> ciani_weighted_monomials() {
    std::vector<std::array<std::uint16_t, 6>> out;
    for (int alpha = 18; alpha >= 0; --alpha)
        for (int beta = 54; beta >= 0; --beta) {
            if (alpha + beta > 54) continue;
            for (int gamma = 54; gamma >= 0; --gamma) {
                if (alpha + beta + gamma > 54) continue;
                int xd = 4 * alpha + 2 * beta + 2 * gamma;
                if (xd != 72) continue;
                for (int delta = 18; delta >= 0; --delta) {
                    if (alpha + beta + gamma + delta > 54) continue;
                    for (int eps = 54; eps >= 0; --eps) {
                        int phi = 54 - alpha - beta - gamma - delta - eps;
                        if (phi < 0) continue;
                        if (2 * beta + 4 * delta + 2 * eps != 72) continue;
                        if (2 * gamma + 2 * eps + 4 * phi != 72) continue;
                        out.push_back({static_cast<std::uint16_t>(alpha), static_cast<std::uint16_t>(beta),
                                       static_cast<std::uint16_t>(gamma), static_cast<std::uint16_t>(delta),
                                       static_cast<std::uint16_t>(eps), static_cast<std::uint16_t>(phi)});
                    }
                }
            }
        }
    return out;
}

/// The three factors of the restriction of L to the Ciani family, exactly as
/// printed: G = a d f (a d f - 1/4 a e^2 - 1/4 b^2 f - 1/4 b c e - 1/4 c^2 d),
/// H a product of three similar brackets and J a degree-12 polynomial with
/// denominators built from powers of 2 and 7.
SparsePoly<RatField> ciani_factor_G();
SparsePoly<RatField> ciani_factor_H();
SparsePoly<RatField> ciani_factor_J();

/// Exact expansion of G^4 H^2 J over the rationals (support size 1695).
SparsePoly<RatField> expand_ciani_product();

/// Reduce a rational polynomial mod p (rejects p dividing a denominator).
template <class F>
SparsePoly<F> reduce_poly(const SparsePoly<RatField>& q, const F& fld) {
    SparsePoly<F> out(fld, q.nvars());
    for (const auto& [k, c] : q.terms()) {
        if constexpr (std::is_same_v<F, FpField>) {
            mpz_class num = c.get_num(), den = c.get_den();
            mpz_class pz(static_cast<unsigned long>(fld.modulus()));
            if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
                throw std::invalid_argument("reduce_poly: prime divides a denominator");
            mpz_class nr = num % pz; if (nr < 0) nr += pz;
            mpz_class dr = den % pz;
            auto val = fld.div(static_cast<std::uint64_t>(nr.get_ui()),
                               static_cast<std::uint64_t>(dr.get_ui()));
            out.add_term(k, val);
        } else {
            out.add_term(k, c);
        }
    }
    return out;
}

template <class F>
typename F::elt random_element(const F& fld, Rng& rng) {
    if constexpr (std::is_same_v<F, FpField>) {
        return rng.below(fld.modulus());
    } else {
        return fld.from_int(rng.range(-(1 << 20), 1 << 20));
    }
}

template <class F>
struct CianiVerification {
    bool ok = false;
    typename F::elt lambda{};
    std::size_t trials = 0;
    std::optional<CianiCoefficients<F>> witness;   // first failing tuple
};

/// Check L(ciani(cc)) = lambda * G^4 H^2 J(cc) for `trials` random tuples
/// with G H J != 0; lambda is fixed by the first trial.
template <class F>
CianiVerification<F> verify_ciani(const DixmierOhnoEvaluator<F>& dix,
                                  const InvariantExpression<F>& L, std::size_t trials,
                                  std::uint64_t seed) {
    const F& fld = dix.field();
    CianiVerification<F> out;
    if (L.terms.empty()) return out;   // degenerate input flagged as failure
    auto G = reduce_poly(ciani_factor_G(), fld);
    auto H = reduce_poly(ciani_factor_H(), fld);
    auto J = reduce_poly(ciani_factor_J(), fld);
    Rng rng = Rng::derive(seed, 0x41C1);
    bool have_lambda = false;
    std::size_t done = 0;
    while (done < trials) {
        CianiCoefficients<F> cc;
        for (auto& x : cc.v) x = random_element(fld, rng);
        std::vector<typename F::elt> pt(cc.v.begin(), cc.v.end());
        auto g = G.eval(pt), h = H.eval(pt), j = J.eval(pt);
        auto ghj = fld.mul(fld.mul(fld.pow(g, 4), fld.mul(h, h)), j);
        if (fld.is_zero(fld.mul(fld.mul(g, h), j))) continue;
        ++done;
        auto lv = evaluate_expression(dix, L, ciani(fld, cc));
        auto lam = fld.div(lv, ghj);
        if (!have_lambda) {
            out.lambda = lam;
            have_lambda = true;
        } else if (!fld.is_zero(fld.sub(lam, out.lambda))) {
            out.witness = cc;
            out.trials = done;
            return out;
        }
    }
    out.ok = have_lambda;
    out.trials = done;
    return out;
}

template <class F>
struct CianiInterpolation {
    SparsePoly<F> poly;            // L restricted to the family in the weighted basis
    std::size_t rank = 0;          // rank of the interpolation matrix
    std::size_t basis_size = 0;    // 3439
    bool consistent = false;
};

/// Solve for L on the Ciani family in the 3439-monomial weighted basis. The
/// returned polynomial equals lambda * G^4 H^2 J exactly when the family
/// evaluation has full rank.
template <class F>
CianiInterpolation<F> interpolate_ciani(const DixmierOhnoEvaluator<F>& dix,
                                        const InvariantExpression<F>& L, std::size_t samples,
                                        std::uint64_t seed) {
    const F& fld = dix.field();
    auto basis = ciani_weighted_monomials();
    if (samples < basis.size())
        throw std::invalid_argument("interpolate_ciani: need at least " +
                                    std::to_string(basis.size()) + " samples");
    CianiInterpolation<F> out{SparsePoly<F>(fld, 6), 0, basis.size(), false};

    // augmented matrix [ monomial values | L value ]
    Matrix<F> M(fld, samples, basis.size() + 1);
    std::vector<CianiCoefficients<F>> tuples(samples);
    {
        Rng rng = Rng::derive(seed, 0x41C2);
        for (auto& cc : tuples)
            for (auto& x : cc.v) x = random_element(fld, rng);
    }
    parallel_for(samples, [&](std::size_t i) {
        const auto& cc = tuples[i];
        std::vector<typename F::elt> pw[6];
        for (int v = 0; v < 6; ++v) {
            pw[v].resize(55);
            pw[v][0] = fld.one();
            for (int e = 1; e < 55; ++e) pw[v][e] = fld.mul(pw[v][e - 1], cc.v[v]);
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            typename F::elt t = fld.one();
            for (int v = 0; v < 6; ++v)
                if (basis[j][v]) t = fld.mul(t, pw[v][basis[j][v]]);
            M.at(i, j) = t;
        }
        M.at(i, basis.size()) = evaluate_expression(dix, L, ciani(fld, cc));
    });

    auto pivots = M.forward_eliminate_in_place();
    bool rhs_pivot = !pivots.empty() && pivots.back() == basis.size();
    out.rank = rhs_pivot ? pivots.size() - 1 : pivots.size();
    out.consistent = !rhs_pivot;
    if (!out.consistent) return out;
    if (out.rank < basis.size()) return out;   // rank deficiency: enlarge sample
    // back substitution on the echelon system (pivot entries are 1)
    std::vector<typename F::elt> sol(basis.size(), fld.zero());
    for (std::size_t i = pivots.size(); i-- > 0;) {
        typename F::elt v = M.at(i, basis.size());
        for (std::size_t j = pivots[i] + 1; j < basis.size(); ++j)
            if (!fld.is_zero(M.at(i, j))) v = fld.mul_sub(v, M.at(i, j), sol[j]);
        sol[pivots[i]] = v;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (fld.is_zero(sol[j])) continue;
        std::vector<std::uint16_t> key(basis[j].begin(), basis[j].end());
        out.poly.add_term(key, sol[j]);
    }
    return out;
}

}  // namespace luroth

#endif
