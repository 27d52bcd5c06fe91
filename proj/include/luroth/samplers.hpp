/// Seeded generators for every quartic family the pipeline consumes.
///
/// Each sample is a pure function of (seed, index): the generators derive an
/// independent RNG stream per index, so batches are reproducible
/// byte-for-byte and order-independent. Over F_p the draws use the same
/// small-integer sets as the rational mode ({-1,0,1} coefficients for generic
/// quartics, |c_i| <= 4 for pentalateral forms) reduced mod p, keeping the
/// prime-field runs faithful shadows of rational ones.
#ifndef LUROTH_SAMPLERS_HPP
#define LUROTH_SAMPLERS_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "luroth/forms.hpp"
#include "luroth/invariants.hpp"
#include "luroth/rng.hpp"

namespace luroth {

template <class F>
struct PentalateralRecipe {
    std::array<typename F::elt, 3> ell5;   // the fifth line; ell1..ell4 are x, y, z, x+y+z
    std::array<typename F::elt, 4> c;
};

template <class F>
struct CianiCoefficients {
    // a x^4 + b x^2 y^2 + c x^2 z^2 + d y^4 + e y^2 z^2 + f z^4
    std::array<typename F::elt, 6> v;
};

namespace detail {

template <class F>
Form<F> line_form(const F& fld, const std::array<typename F::elt, 3>& a) {
    Form<F> l(fld, 3, 1);
    l[Expo{1, 0, 0, 0}] = a[0];
    l[Expo{0, 1, 0, 0}] = a[1];
    l[Expo{0, 0, 1, 0}] = a[2];
    return l;
}

template <class F>
bool lines_parallel(const F& fld, const std::array<typename F::elt, 3>& a,
                    const std::array<typename F::elt, 3>& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto d = fld.sub(fld.mul(a[i], b[j]), fld.mul(a[j], b[i]));
            if (!fld.is_zero(d)) return false;
        }
    return true;
}

}  // namespace detail

/// Random quartics with coefficients drawn uniformly from {-1, 0, 1};
/// all-zero draws are rerolled.
template <class F>
TernaryQuartic<F> random_generic_quartic(const F& fld, std::uint64_t seed, std::uint64_t index) {
    Rng rng = Rng::derive(seed, index);
    TernaryQuartic<F> f(fld, 3, 4);
    for (;;) {
        bool nz = false;
        for (auto& c : f.coeffs()) {
            std::int64_t v = rng.range(-1, 1);
            c = fld.from_int(v);
            nz |= v != 0;
        }
        if (nz) return f;
    }
}

template <class F>
std::vector<TernaryQuartic<F>> random_generic(const F& fld, std::uint64_t seed, std::size_t count) {
    std::vector<TernaryQuartic<F>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_generic_quartic(fld, seed, i));
    return out;
}

/// Expand l1 l2 l3 l4 + c1 l2 l3 l4 l5 + c2 l1 l3 l4 l5 + c3 l1 l2 l4 l5 + c4 l1 l2 l3 l5
/// with l1 = x, l2 = y, l3 = z, l4 = x + y + z.
template <class F>
TernaryQuartic<F> pentalateral(const F& fld, const PentalateralRecipe<F>& r) {
    bool zero5 = fld.is_zero(r.ell5[0]) && fld.is_zero(r.ell5[1]) && fld.is_zero(r.ell5[2]);
    if (zero5) throw std::invalid_argument("pentalateral: ell5 must be nonzero");
    auto one = fld.one();
    std::array<Form<F>, 5> l = {
        detail::line_form(fld, {one, fld.zero(), fld.zero()}),
        detail::line_form(fld, {fld.zero(), one, fld.zero()}),
        detail::line_form(fld, {fld.zero(), fld.zero(), one}),
        detail::line_form(fld, {one, one, one}),
        detail::line_form(fld, r.ell5)};
    TernaryQuartic<F> f = ((l[0] * l[1]) * (l[2] * l[3]));
    f = f + ((l[1] * l[2]) * (l[3] * l[4])).scaled(r.c[0]);
    f = f + ((l[0] * l[2]) * (l[3] * l[4])).scaled(r.c[1]);
    f = f + ((l[0] * l[1]) * (l[3] * l[4])).scaled(r.c[2]);
    f = f + ((l[0] * l[1]) * (l[2] * l[4])).scaled(r.c[3]);
    return f;
}

/// Random pentalateral recipe: ell5 over {-4..4}, rerolled when zero or
/// parallel to one of the four fixed lines; c_i nonzero with |c_i| <= 4.
template <class F>
PentalateralRecipe<F> random_pentalateral_recipe(const F& fld, Rng& rng) {
    PentalateralRecipe<F> r;
    const std::array<std::array<std::int64_t, 3>, 4> fixed = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
    for (;;) {
        std::array<std::int64_t, 3> e;
        for (auto& x : e) x = rng.range(-4, 4);
        if (e[0] == 0 && e[1] == 0 && e[2] == 0) continue;
        r.ell5 = {fld.from_int(e[0]), fld.from_int(e[1]), fld.from_int(e[2])};
        bool bad = false;
        for (const auto& fx : fixed) {
            std::array<typename F::elt, 3> fe = {fld.from_int(fx[0]), fld.from_int(fx[1]),
                                                 fld.from_int(fx[2])};
            bad |= detail::lines_parallel(fld, r.ell5, fe);
        }
        if (!bad) break;
    }
    for (auto& c : r.c) {
        std::int64_t v;
        do { v = rng.range(-4, 4); } while (v == 0);
        c = fld.from_int(v);
    }
    return r;
}

template <class F>
TernaryQuartic<F> random_luroth_quartic(const F& fld, std::uint64_t seed, std::uint64_t index) {
    Rng rng = Rng::derive(seed, index ^ 0x1111111111111111ULL);
    auto r = random_pentalateral_recipe(fld, rng);
    return pentalateral(fld, r);
}

template <class F>
std::vector<TernaryQuartic<F>> random_luroth(const F& fld, std::uint64_t seed, std::size_t count) {
    std::vector<TernaryQuartic<F>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_luroth_quartic(fld, seed, i));
    return out;
}

/// Pentalateral form with three concurrent lines: l1 = x, l2 = y and l4
/// replaced by x + y all pass through (0:0:1), which forces a singular point
/// there. Output lies on both the Luroth hypersurface and the discriminant.
template <class F>
TernaryQuartic<F> l2_quartic(const F& fld, std::uint64_t seed, std::uint64_t index = 0) {
    Rng rng = Rng::derive(seed, index ^ 0x2222222222222222ULL);
    auto one = fld.one();
    const std::array<std::array<typename F::elt, 3>, 4> fixed = {
        {{one, fld.zero(), fld.zero()},
         {fld.zero(), one, fld.zero()},
         {fld.zero(), fld.zero(), one},
         {one, one, fld.zero()}}};
    std::array<typename F::elt, 3> e5;
    for (;;) {
        std::array<std::int64_t, 3> e;
        for (auto& x : e) x = rng.range(-4, 4);
        if (e[0] == 0 && e[1] == 0 && e[2] == 0) continue;
        e5 = {fld.from_int(e[0]), fld.from_int(e[1]), fld.from_int(e[2])};
        bool repeated = false;
        for (const auto& fx : fixed) repeated |= detail::lines_parallel(fld, e5, fx);
        if (!repeated) break;
    }
    std::array<typename F::elt, 4> cs;
    for (auto& c : cs) {
        std::int64_t v;
        do { v = rng.range(-4, 4); } while (v == 0);
        c = fld.from_int(v);
    }
    std::array<Form<F>, 5> l = {detail::line_form(fld, fixed[0]), detail::line_form(fld, fixed[1]),
                                detail::line_form(fld, fixed[2]), detail::line_form(fld, fixed[3]),
                                detail::line_form(fld, e5)};
    TernaryQuartic<F> f = ((l[0] * l[1]) * (l[2] * l[3]));
    f = f + ((l[1] * l[2]) * (l[3] * l[4])).scaled(cs[0]);
    f = f + ((l[0] * l[2]) * (l[3] * l[4])).scaled(cs[1]);
    f = f + ((l[0] * l[1]) * (l[3] * l[4])).scaled(cs[2]);
    f = f + ((l[0] * l[1]) * (l[2] * l[4])).scaled(cs[3]);
    return f;
}

template <class F>
TernaryQuartic<F> ciani(const F& fld, const CianiCoefficients<F>& cc) {
    TernaryQuartic<F> f(fld, 3, 4);
    f[Expo{4, 0, 0, 0}] = cc.v[0];
    f[Expo{2, 2, 0, 0}] = cc.v[1];
    f[Expo{2, 0, 2, 0}] = cc.v[2];
    f[Expo{0, 4, 0, 0}] = cc.v[3];
    f[Expo{0, 2, 2, 0}] = cc.v[4];
    f[Expo{0, 0, 4, 0}] = cc.v[5];
    return f;
}

/// Quartics from the Hessian construction: a quaternary cubic
/// t^2 x + t (a x^2 + 2b xy + 2c xz + d y^2 + 2e yz + f z^2) + g(x,y,z) with
/// e^2 = d f, which places p = (0:0:0:1) on the Hessian surface H; the output
/// is the tangent-plane section of H at p. Draws are rerolled until S is
/// nonsingular (Macaulay resultant of its partials) and p is a nonsingular
/// point of H.
template <class F>
TernaryQuartic<F> remark_quartic(const F& fld, std::uint64_t seed, std::uint64_t index = 0,
                                 int max_tries = 64) {
    Rng rng = Rng::derive(seed, index ^ 0x3333333333333333ULL);
    auto draw = [&](std::int64_t lo, std::int64_t hi) { return fld.from_int(rng.range(lo, hi)); };
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        typename F::elt d = draw(-9, 9);
        if (fld.is_zero(d)) continue;
        typename F::elt e = draw(-9, 9);
        typename F::elt fz = fld.div(fld.mul(e, e), d);
        typename F::elt a = draw(-9, 9), b = draw(-9, 9), c = draw(-9, 9);
        // variables (x, y, z, t)
        Form<F> S(fld, 4, 3);
        S[Expo{1, 0, 0, 2}] = fld.one();
        S[Expo{2, 0, 0, 1}] = a;
        S[Expo{1, 1, 0, 1}] = fld.mul(b, fld.from_int(2));
        S[Expo{1, 0, 1, 1}] = fld.mul(c, fld.from_int(2));
        S[Expo{0, 2, 0, 1}] = d;
        S[Expo{0, 1, 1, 1}] = fld.mul(e, fld.from_int(2));
        S[Expo{0, 0, 2, 1}] = fz;
        const auto& cubmons = detail::MonTable::get(3, 3).exps;
        for (const auto& m : cubmons) {
            Expo k = {m[0], m[1], m[2], 0};
            S[k] = fld.add(S[k], draw(-9, 9));
        }
        // nonsingular surface?
        typename F::elt discS;
        try {
            discS = partials_resultant(S);
        } catch (const std::runtime_error&) {
            continue;
        }
        if (fld.is_zero(discS)) continue;
        Form<F> H = hessian(S);
        std::vector<typename F::elt> p = {fld.zero(), fld.zero(), fld.zero(), fld.one()};
        if (!fld.is_zero(H.eval(p)))
            throw std::logic_error("remark_quartic: e^2 = df did not place p on the Hessian");
        std::array<typename F::elt, 4> grad;
        bool sing = true;
        for (int i = 0; i < 4; ++i) {
            grad[i] = H.partial(i).eval(p);
            sing &= fld.is_zero(grad[i]);
        }
        if (sing) continue;   // p singular on H
        // grad[3] = 0 since grad . p = 4 H(p) = 0; tangent basis: p plus two
        // vectors orthogonal to (n1, n2, n3) in the first three coordinates
        std::array<typename F::elt, 4> v2{}, v3{};
        if (!fld.is_zero(grad[0])) {
            v2 = {fld.neg(grad[1]), grad[0], fld.zero(), fld.zero()};
            v3 = {fld.neg(grad[2]), fld.zero(), grad[0], fld.zero()};
        } else if (!fld.is_zero(grad[1])) {
            v2 = {grad[1], fld.neg(grad[0]), fld.zero(), fld.zero()};
            v3 = {fld.zero(), fld.neg(grad[2]), grad[1], fld.zero()};
        } else {
            v2 = {grad[2], fld.zero(), fld.neg(grad[0]), fld.zero()};
            v3 = {fld.zero(), grad[2], fld.neg(grad[1]), fld.zero()};
        }
        // section quartic: H(x v2 + y v3 + z p)
        std::vector<std::vector<typename F::elt>> M(4, std::vector<typename F::elt>(3));
        for (int i = 0; i < 4; ++i) {
            M[i][0] = v2[i];
            M[i][1] = v3[i];
            M[i][2] = (i == 3) ? fld.one() : fld.zero();
        }
        Form<F> quart = H.substitute_linear(M, 3);
        if (quart.is_zero()) continue;
        return quart;
    }
    throw std::runtime_error("remark_quartic: retries exhausted");
}

}  // namespace luroth

#endif
