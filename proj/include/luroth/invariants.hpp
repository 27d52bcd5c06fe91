/// The thirteen Dixmier-Ohno invariant generators of ternary quartics.
///
/// The primary invariants I3..I27 follow Dixmier's construction: the
/// contravariants sigma (degree 2, order 4) and psi (degree 3, order 6) are
/// the transfers of the binary-quartic invariants I and J along the
/// restriction of the quartic to a variable line, and the covariant conics
/// rho, tau, xi, eta, nu are produced by pairing them against the form and
/// its Hessian with differential operations. The secondary invariants
/// J9..J21 pair the same conics the other way around. I27 is the quartic
/// discriminant, computed as the Macaulay resultant of the three partials.
///
/// Normalizations here are the plain ones induced by the construction (no
/// rescaling constants). Every acceptance checkpoint except the printed
/// reference expansion is normalization-independent.
#ifndef LUROTH_INVARIANTS_HPP
#define LUROTH_INVARIANTS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "luroth/forms.hpp"
#include "luroth/fp.hpp"
#include "luroth/matrix.hpp"
#include "luroth/rng.hpp"

namespace luroth {

inline constexpr std::array<int, 13> kInvariantDegrees = {3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27};
inline constexpr std::array<const char*, 13> kInvariantNames = {
    "I3", "I6", "I9", "J9", "I12", "J12", "I15", "J15", "I18", "J18", "I21", "J21", "I27"};

template <class F>
using TernaryQuartic = Form<F>;   // 3 variables, degree 4: 15 coefficients

template <class F>
struct InvariantTuple {
    std::array<typename F::elt, 13> v;

    const typename F::elt& operator[](std::size_t i) const { return v[i]; }
    typename F::elt& operator[](std::size_t i) { return v[i]; }
};

template <class F>
TernaryQuartic<F> quartic_from_coeffs(const F& fld,
                                      const std::array<typename F::elt, 15>& c) {
    TernaryQuartic<F> f(fld, 3, 4);
    for (std::size_t i = 0; i < 15; ++i) f.coeffs()[i] = c[i];
    return f;
}

namespace detail {

/// exact division by var^k; the callers' divisibility is a polynomial identity
template <class F>
Form<F> divide_var_power(const Form<F>& f, int var, int k) {
    const F& fld = f.field();
    Form<F> out(fld, f.nvars(), f.degree() - k);
    const auto& ex = f.exponents();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (fld.is_zero(f.coeffs()[i])) continue;
        if (ex[i][var] < k)
            throw std::logic_error("divide_var_power: form not divisible (internal inconsistency)");
        Expo e = ex[i];
        e[var] = static_cast<std::uint8_t>(e[var] - k);
        out[e] = f.coeffs()[i];
    }
    return out;
}

/// symmetric 3x3 matrix of a ternary conic (entries with halved cross terms)
template <class F>
std::array<std::array<typename F::elt, 3>, 3> conic_matrix(const Form<F>& q) {
    const F& fld = q.field();
    auto half = fld.inv(fld.from_int(2));
    auto g = [&](int a, int b, int c) { return q[Expo{static_cast<std::uint8_t>(a),
                                                      static_cast<std::uint8_t>(b),
                                                      static_cast<std::uint8_t>(c), 0}]; };
    std::array<std::array<typename F::elt, 3>, 3> m;
    m[0][0] = g(2, 0, 0);
    m[1][1] = g(0, 2, 0);
    m[2][2] = g(0, 0, 2);
    m[0][1] = m[1][0] = fld.mul(g(1, 1, 0), half);
    m[0][2] = m[2][0] = fld.mul(g(1, 0, 1), half);
    m[1][2] = m[2][1] = fld.mul(g(0, 1, 1), half);
    return m;
}

template <class F>
typename F::elt mat3_det(const F& fld, const std::array<std::array<typename F::elt, 3>, 3>& a) {
    using elt = typename F::elt;
    elt t0 = fld.sub(fld.mul(a[1][1], a[2][2]), fld.mul(a[1][2], a[2][1]));
    elt t1 = fld.sub(fld.mul(a[1][0], a[2][2]), fld.mul(a[1][2], a[2][0]));
    elt t2 = fld.sub(fld.mul(a[1][0], a[2][1]), fld.mul(a[1][1], a[2][0]));
    elt d = fld.mul(a[0][0], t0);
    d = fld.sub(d, fld.mul(a[0][1], t1));
    d = fld.add(d, fld.mul(a[0][2], t2));
    return d;
}

template <class F>
std::array<std::array<typename F::elt, 3>, 3> mat3_adj(
    const F& fld, const std::array<std::array<typename F::elt, 3>, 3>& a) {
    std::array<std::array<typename F::elt, 3>, 3> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[i][j] = fld.sub(fld.mul(a[i1][j1], a[i2][j2]), fld.mul(a[i1][j2], a[i2][j1]));
        }
    return r;
}

template <class F>
typename F::elt mat3_pair(const F& fld, const std::array<std::array<typename F::elt, 3>, 3>& a,
                          const std::array<std::array<typename F::elt, 3>, 3>& b) {
    typename F::elt s = fld.zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = fld.add(s, fld.mul(a[i][j], b[j][i]));
    return s;
}

}  // namespace detail

// J-operations on conic pairs (one covariant, one contravariant slot each):
// J11 = trace pairing, J30/J03 = determinant, J22 = adjugate trace pairing.
template <class F>
typename F::elt j_operation_11(const Form<F>& a, const Form<F>& b) {
    return detail::mat3_pair(a.field(), detail::conic_matrix(a), detail::conic_matrix(b));
}
template <class F>
typename F::elt j_operation_30(const Form<F>& a) {
    return detail::mat3_det(a.field(), detail::conic_matrix(a));
}
template <class F>
typename F::elt j_operation_03(const Form<F>& b) {
    return detail::mat3_det(b.field(), detail::conic_matrix(b));
}
template <class F>
typename F::elt j_operation_22(const Form<F>& a, const Form<F>& b) {
    const F& fld = a.field();
    return detail::mat3_pair(fld, detail::mat3_adj(fld, detail::conic_matrix(a)),
                             detail::mat3_adj(fld, detail::conic_matrix(b)));
}

/// Macaulay resultant of n forms of equal degree d in n variables, n = 3 or 4.
/// Returns det(M)/det(M') with the classical reduced/non-reduced split; the
/// caller handles a vanishing extraneous minor by a change of coordinates.
template <class F>
std::pair<bool, typename F::elt> macaulay_resultant(const std::vector<Form<F>>& fs) {
    const F& fld = fs[0].field();
    int n = static_cast<int>(fs.size());
    int d = fs[0].degree();
    for (const auto& f : fs)
        if (f.nvars() != n || f.degree() != d)
            throw std::invalid_argument("macaulay_resultant: need n forms of one degree in n variables");
    int t = n * (d - 1) + 1;
    const auto& monT = detail::MonTable::get(n, t).exps;
    std::size_t N = monT.size();
    Matrix<F> M(fld, N, N);
    std::vector<std::size_t> nonreduced;
    for (std::size_t r = 0; r < N; ++r) {
        const Expo& a = monT[r];
        int cls = -1, big = 0;
        for (int i = 0; i < n; ++i) {
            if (a[i] >= d) {
                ++big;
                if (cls < 0) cls = i;
            }
        }
        assert(cls >= 0);
        if (big >= 2) nonreduced.push_back(r);
        Expo q = a;
        q[cls] = static_cast<std::uint8_t>(q[cls] - d);
        const auto& ef = fs[cls].exponents();
        for (std::size_t k = 0; k < fs[cls].coeffs().size(); ++k) {
            if (fld.is_zero(fs[cls].coeffs()[k])) continue;
            Expo e{};
            for (int v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(ef[k][v] + q[v]);
            M.at(r, detail::mon_rank(n, t, e)) = fs[cls].coeffs()[k];
        }
    }
    Matrix<F> Mp(fld, nonreduced.size(), nonreduced.size());
    for (std::size_t i = 0; i < nonreduced.size(); ++i)
        for (std::size_t j = 0; j < nonreduced.size(); ++j)
            Mp.at(i, j) = M.at(nonreduced[i], nonreduced[j]);
    auto dp = Mp.det();
    if (fld.is_zero(dp)) return {false, fld.zero()};
    return {true, fld.div(M.det(), dp)};
}

/// Surjectivity test behind Macaulay's theorem: the resultant of the system
/// is nonzero exactly when the degree-t multiples of the forms span the full
/// degree-t space. Decides vanishing when the extraneous minor degenerates.
template <class F>
bool macaulay_system_full_rank(const std::vector<Form<F>>& fs) {
    const F& fld = fs[0].field();
    int n = static_cast<int>(fs.size());
    int d = fs[0].degree();
    int t = n * (d - 1) + 1;
    const auto& target = detail::MonTable::get(n, t).exps;
    const auto& mult = detail::MonTable::get(n, t - d).exps;
    Matrix<F> M(fld, fs.size() * mult.size(), target.size());
    std::size_t r = 0;
    for (const auto& f : fs) {
        const auto& ef = f.exponents();
        for (const auto& q : mult) {
            for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
                if (fld.is_zero(f.coeffs()[k])) continue;
                Expo e{};
                for (int v = 0; v < 4; ++v) e[v] = static_cast<std::uint8_t>(ef[k][v] + q[v]);
                M.at(r, detail::mon_rank(n, t, e)) = f.coeffs()[k];
            }
            ++r;
        }
    }
    return M.rank() == target.size();
}

/// Discriminant-style resultant of the partials of a form in n variables,
/// with a deterministic sequence of unimodular coordinate changes when the
/// extraneous Macaulay minor degenerates.
template <class F>
typename F::elt partials_resultant(const Form<F>& f) {
    const F& fld = f.field();
    int n = f.nvars();
    if (f.is_zero()) return fld.zero();
    auto attempt = [&](const Form<F>& g) {
        std::vector<Form<F>> parts;
        for (int i = 0; i < n; ++i) parts.push_back(g.partial(i));
        return macaulay_resultant(parts);
    };
    auto [ok, val] = attempt(f);
    if (!ok) {
        // quotient blocked; the vanishing question is still decidable
        std::vector<Form<F>> parts;
        for (int i = 0; i < n; ++i) parts.push_back(f.partial(i));
        if (!macaulay_system_full_rank(parts)) return fld.zero();
    }
    Rng rng = Rng::derive(0xD15C0UL, static_cast<std::uint64_t>(n));
    for (int tries = 0; !ok && tries < 64; ++tries) {
        // random unipotent lower * upper transform: determinant one
        std::vector<std::vector<typename F::elt>> L(n, std::vector<typename F::elt>(n, fld.zero()));
        std::vector<std::vector<typename F::elt>> U = L;
        for (int i = 0; i < n; ++i) {
            L[i][i] = fld.one();
            U[i][i] = fld.one();
            for (int j = 0; j < i; ++j) L[i][j] = fld.from_int(static_cast<std::int64_t>(rng.below(1 << 20)));
            for (int j = i + 1; j < n; ++j) U[i][j] = fld.from_int(static_cast<std::int64_t>(rng.below(1 << 20)));
        }
        std::vector<std::vector<typename F::elt>> T(n, std::vector<typename F::elt>(n, fld.zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                typename F::elt s = fld.zero();
                for (int k = 0; k < n; ++k) s = fld.add(s, fld.mul(L[i][k], U[k][j]));
                T[i][j] = s;
            }
        std::tie(ok, val) = attempt(f.substitute_linear(T, n));
    }
    if (!ok)
        throw std::runtime_error("partials_resultant: extraneous minor stayed singular (degenerate form)");
    return val;
}

/// Evaluator for the 13 generators. Immutable after construction; concurrent
/// evaluations at distinct quartics are independent and safe.
template <class F>
class DixmierOhnoEvaluator {
public:
    explicit DixmierOhnoEvaluator(F fld) : fld_(std::move(fld)) {
        if constexpr (std::is_same_v<F, FpField>) {
            if (fld_.modulus() < 2017)
                throw std::invalid_argument(
                    "DixmierOhnoEvaluator: prime " + std::to_string(fld_.modulus()) +
                    " below the supported bound 2017 (recipe constants would degenerate)");
        }
    }

    const F& field() const { return fld_; }

    /// Contravariants sigma (order 4, degree 2) and psi (order 6, degree 3):
    /// restrict f to the line u, with the two cross-product points
    /// p = u x e2 = (-u3, 0, u1) and q = u x e3 = (u2, -u1, 0) as coordinates.
    /// Since p x q = u1 * u, the binary invariants I and J of the restriction
    /// pick up weights u1^4 and u1^6, which divide out exactly.
    std::pair<Form<F>, Form<F>> sigma_psi(const TernaryQuartic<F>& f) const {
        const F& K = fld_;
        // coordinates of s*p + t*q as (s,t)-linear forms with u-linear coefficients:
        // we expand f monomial by monomial, tracking binary degree in (s,t).
        // g[k] = coefficient of s^(4-k) t^k, a u-quartic.
        std::array<Form<F>, 5> g{Form<F>(K, 3, 4), Form<F>(K, 3, 4), Form<F>(K, 3, 4),
                                 Form<F>(K, 3, 4), Form<F>(K, 3, 4)};
        // linear u-forms for the three coordinates: coord i = s*a[i] + t*b[i]
        auto lin = [&](std::int64_t c1, std::int64_t c2, std::int64_t c3) {
            Form<F> l(K, 3, 1);
            l[Expo{1, 0, 0, 0}] = K.from_int(c1);
            l[Expo{0, 1, 0, 0}] = K.from_int(c2);
            l[Expo{0, 0, 1, 0}] = K.from_int(c3);
            return l;
        };
        std::array<Form<F>, 3> a = {lin(0, 0, -1), lin(0, 0, 0), lin(1, 0, 0)};
        std::array<Form<F>, 3> b = {lin(0, 1, 0), lin(-1, 0, 0), lin(0, 0, 0)};
        const auto& ex = f.exponents();
        for (std::size_t m = 0; m < f.coeffs().size(); ++m) {
            if (K.is_zero(f.coeffs()[m])) continue;
            // product of 4 binary-linear factors, coefficients growing in u-degree
            std::vector<Form<F>> acc;   // acc[k]: coeff of s^(n-k) t^k, u-degree n
            acc.push_back(Form<F>(K, 3, 0));
            acc[0].coeffs()[0] = f.coeffs()[m];
            for (int v = 0; v < 3; ++v) {
                for (int e = 0; e < ex[m][v]; ++e) {
                    std::vector<Form<F>> nxt;
                    int n = static_cast<int>(acc.size());   // current u-degree of entries
                    for (int k = 0; k <= n; ++k) nxt.push_back(Form<F>(K, 3, n));
                    for (int k = 0; k < n; ++k) {
                        nxt[k] = nxt[k] + acc[k] * a[v];
                        nxt[k + 1] = nxt[k + 1] + acc[k] * b[v];
                    }
                    acc = std::move(nxt);
                }
            }
            assert(acc.size() == 5);
            for (int k = 0; k < 5; ++k) g[k] = g[k] + acc[k];
        }
        // plain-coefficient binary quartic invariants:
        //   I = 12 g0 g4 - 3 g1 g3 + g2^2
        //   J = 72 g0 g2 g4 + 9 g1 g2 g3 - 27 g0 g3^2 - 27 g4 g1^2 - 2 g2^3
        auto C = [&](std::int64_t c) { return K.from_int(c); };
        Form<F> I = (g[0] * g[4]).scaled(C(12)) - (g[1] * g[3]).scaled(C(3)) + g[2] * g[2];
        Form<F> J = (g[0] * g[2] * g[4]).scaled(C(72)) + (g[1] * g[2] * g[3]).scaled(C(9)) -
                    (g[0] * g[3] * g[3]).scaled(C(27)) - (g[4] * g[1] * g[1]).scaled(C(27)) -
                    (g[2] * g[2] * g[2]).scaled(C(2));
        return {detail::divide_var_power(I, 0, 4), detail::divide_var_power(J, 0, 6)};
    }

    InvariantTuple<F> evaluate(const TernaryQuartic<F>& f) const {
        const F& K = fld_;
        auto [sigma, psi] = sigma_psi(f);
        Form<F> he = hessian(f);                       // covariant, degree 3, order 6
        Form<F> rho = diff_op(f, psi);                 // contravariant conic, degree 4
        Form<F> tau = diff_op(rho, f);                 // covariant conic, degree 5
        Form<F> xi = diff_op(sigma, he);               // covariant conic, degree 5
        Form<F> eta = diff_op(xi, sigma);              // contravariant conic, degree 7
        Form<F> nu = diff_op(eta, diff_op(rho, he));   // covariant conic, degree 14

        InvariantTuple<F> out;
        out.v[0] = diff_op(f, sigma).coeffs()[0];      // I3
        out.v[1] = diff_op(he, psi).coeffs()[0];       // I6
        out.v[2] = j_operation_11(tau, rho);           // I9
        out.v[3] = j_operation_11(xi, rho);            // J9
        out.v[4] = j_operation_03(rho);                // I12
        out.v[5] = j_operation_11(tau, eta);           // J12
        out.v[6] = j_operation_30(tau);                // I15
        out.v[7] = j_operation_30(xi);                 // J15
        out.v[8] = j_operation_22(tau, rho);           // I18
        out.v[9] = j_operation_22(xi, rho);            // J18
        out.v[10] = j_operation_03(eta);               // I21
        out.v[11] = j_operation_11(nu, eta);           // J21
        out.v[12] = partials_resultant(f);             // I27, the discriminant
        (void)K;
        return out;
    }

private:
    F fld_;
};

}  // namespace luroth

#endif
