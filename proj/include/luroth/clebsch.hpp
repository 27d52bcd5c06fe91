/// Quartics on the first component of the singular-Luroth locus, generated
/// through the cubic-surface construction: six plane points give a Clebsch
/// cubic surface, two skew lines on it give the tangent-chord maps f and g,
/// the branch divisor of g yields a conjugate map f' over the ground field,
/// the common fiber of f and f' picks the projection center Q, and the
/// tangent-projection discriminant from Q is the output quartic.
#ifndef LUROTH_CLEBSCH_HPP
#define LUROTH_CLEBSCH_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "luroth/forms.hpp"
#include "luroth/invariants.hpp"
#include "luroth/matrix.hpp"
#include "luroth/relations.hpp"
#include "luroth/rng.hpp"
#include "luroth/samplers.hpp"

namespace luroth {

/// Pipeline failure with the stage it happened in; the generator's retry
/// loop resamples on these.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

template <class F>
using QuaternaryCubic = Form<F>;   // 4 variables, degree 3: 20 coefficients

template <class F>
struct LineInP3 {
    std::array<typename F::elt, 4> p1, p2;   // spanning points
    std::array<typename F::elt, 4> m1, m2;   // defining linear forms, m_i(p_j) = 0
};

/// Degree-two map of projective lines given by two binary quadratics.
template <class F>
struct DegreeTwoMap {
    Form<F> f1, f2;
};

template <class F>
struct BinaryQuadratic {
    typename F::elt r, s, t;   // r x^2 + s x y + t y^2
};

using PlanePoint = std::array<std::uint64_t, 3>;   // stored per-field as elts below

namespace detail {

template <class F>
bool proj_equal(const F& fld, const std::array<typename F::elt, 3>& a,
                const std::array<typename F::elt, 3>& b) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!fld.is_zero(fld.sub(fld.mul(a[i], b[j]), fld.mul(a[j], b[i])))) return false;
    return true;
}

template <class F>
typename F::elt binquad_resultant(const F& fld, const Form<F>& u, const Form<F>& v) {
    auto a1 = u[Expo{2, 0, 0, 0}], b1 = u[Expo{1, 1, 0, 0}], c1 = u[Expo{0, 2, 0, 0}];
    auto a2 = v[Expo{2, 0, 0, 0}], b2 = v[Expo{1, 1, 0, 0}], c2 = v[Expo{0, 2, 0, 0}];
    auto ac = fld.sub(fld.mul(a1, c2), fld.mul(a2, c1));
    auto ab = fld.sub(fld.mul(a1, b2), fld.mul(a2, b1));
    auto bc = fld.sub(fld.mul(b1, c2), fld.mul(b2, c1));
    return fld.sub(fld.mul(ac, ac), fld.mul(ab, bc));
}

}  // namespace detail

/// The complete linear system of plane cubics through six points: the right
/// kernel of the 6 x 10 evaluation matrix. Requires dimension exactly 4.
template <class F>
std::vector<Form<F>> cubic_system(const F& fld,
                                  const std::vector<std::array<typename F::elt, 3>>& pts) {
    if (pts.size() != 6) throw std::invalid_argument("cubic_system: need six points");
    const auto& mons = detail::MonTable::get(3, 3).exps;
    Matrix<F> M(fld, 6, 10);
    for (std::size_t i = 0; i < 6; ++i) {
        Form<F> probe(fld, 3, 3);
        std::vector<typename F::elt> pt(pts[i].begin(), pts[i].end());
        for (std::size_t j = 0; j < 10; ++j) {
            typename F::elt v = fld.one();
            for (int k = 0; k < 3; ++k)
                for (int e = 0; e < mons[j][k]; ++e) v = fld.mul(v, pt[k]);
            M.at(i, j) = v;
        }
    }
    auto ker = M.right_kernel();
    if (ker.size() != 4)
        throw StageError("cubic_system", "points not sufficiently general (dimension " +
                                             std::to_string(ker.size()) + ", expected 4)");
    std::vector<Form<F>> cubics;
    for (const auto& v : ker) {
        Form<F> c(fld, 3, 3);
        for (std::size_t j = 0; j < 10; ++j) c.coeffs()[j] = v[j];
        cubics.push_back(std::move(c));
    }
    return cubics;
}

/// The quaternary cubic F with F(c1,...,c4) = 0: the one-dimensional kernel
/// of the 55 x 20 matrix expressing degree-3 monomials in the c_i over the
/// degree-9 ternary monomials, normalized so its first nonzero coefficient is 1.
template <class F>
QuaternaryCubic<F> surface_equation(const std::vector<Form<F>>& cubics) {
    if (cubics.size() != 4) throw std::invalid_argument("surface_equation: need four cubics");
    const F& fld = cubics[0].field();
    const auto& mon43 = detail::MonTable::get(4, 3).exps;   // 20
    Matrix<F> M(fld, 55, 20);
    for (std::size_t j = 0; j < 20; ++j) {
        Form<F> prod(fld, 3, 0);
        prod.coeffs()[0] = fld.one();
        for (int v = 0; v < 4; ++v)
            for (int e = 0; e < mon43[j][v]; ++e) prod = prod * cubics[v];
        // prod has degree 9: 55 coefficients
        for (std::size_t i = 0; i < 55; ++i) M.at(i, j) = prod.coeffs()[i];
    }
    auto ker = M.right_kernel();
    if (ker.size() != 1)
        throw StageError("surface_equation", "kernel dimension " + std::to_string(ker.size()) +
                                                 " (image not a unique cubic); resample points");
    QuaternaryCubic<F> Fq(fld, 4, 3);
    std::size_t first = 0;
    while (first < 20 && fld.is_zero(ker[0][first])) ++first;
    auto inv = fld.inv(ker[0][first]);
    for (std::size_t j = 0; j < 20; ++j) Fq.coeffs()[j] = fld.mul(ker[0][j], inv);
    // composed form vanishes identically by the kernel definition
    Form<F> composed = Fq.compose(cubics);
    if (!composed.is_zero())
        throw std::logic_error("surface_equation: F(c1..c4) != 0 (internal inconsistency)");
    return Fq;
}

/// Image of the plane line through base points pa, pb under the Clebsch map.
/// Each c_i restricts to s t (a_i s + b_i t); the image line is spanned by
/// the coefficient vectors A and B, and carries two defining forms.
template <class F>
LineInP3<F> line_on_surface(const QuaternaryCubic<F>& Fq, const std::vector<Form<F>>& cubics,
                            const std::array<typename F::elt, 3>& pa,
                            const std::array<typename F::elt, 3>& pb) {
    const F& fld = Fq.field();
    LineInP3<F> L;
    for (int i = 0; i < 4; ++i) {
        // restrict cubic to s*pa + t*pb
        std::vector<std::vector<typename F::elt>> M(3, std::vector<typename F::elt>(2));
        for (int k = 0; k < 3; ++k) {
            M[k][0] = pa[k];
            M[k][1] = pb[k];
        }
        Form<F> r = cubics[i].substitute_linear(M, 2);   // binary cubic
        if (!fld.is_zero(r[Expo{3, 0, 0, 0}]) || !fld.is_zero(r[Expo{0, 3, 0, 0}]))
            throw std::logic_error("line_on_surface: restriction does not vanish at base points");
        L.p1[i] = r[Expo{2, 1, 0, 0}];
        L.p2[i] = r[Expo{1, 2, 0, 0}];
    }
    bool indep = false;
    for (int i = 0; i < 4 && !indep; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!fld.is_zero(fld.sub(fld.mul(L.p1[i], L.p2[j]), fld.mul(L.p1[j], L.p2[i])))) {
                indep = true;
                break;
            }
    if (!indep) throw StageError("line_on_surface", "image points coincide");
    // defining forms: kernel of the 2 x 4 span matrix
    Matrix<F> S(fld, 2, 4);
    for (int j = 0; j < 4; ++j) {
        S.at(0, j) = L.p1[j];
        S.at(1, j) = L.p2[j];
    }
    auto ker = S.right_kernel();
    if (ker.size() != 2) throw StageError("line_on_surface", "span matrix not of rank 2");
    for (int j = 0; j < 4; ++j) {
        L.m1[j] = ker[0][j];
        L.m2[j] = ker[1][j];
    }
    // the line must lie on the surface: F(s p1 + t p2) = 0 identically
    std::vector<std::vector<typename F::elt>> M(4, std::vector<typename F::elt>(2));
    for (int k = 0; k < 4; ++k) {
        M[k][0] = L.p1[k];
        M[k][1] = L.p2[k];
    }
    if (!Fq.substitute_linear(M, 2).is_zero())
        throw StageError("line_on_surface", "image line does not lie on the surface");
    return L;
}

template <class F>
bool lines_skew(const F& fld, const LineInP3<F>& a, const LineInP3<F>& b) {
    Matrix<F> M(fld, 4, 4);
    for (int j = 0; j < 4; ++j) {
        M.at(0, j) = a.p1[j];
        M.at(1, j) = a.p2[j];
        M.at(2, j) = b.p1[j];
        M.at(3, j) = b.p2[j];
    }
    return !fld.is_zero(M.det());
}

/// Tangent-chord map from `domain` to `target`: p = x d1 + y d2 maps to the
/// point of `target` in T_p S, the kernel of the 3 x 4 matrix with rows
/// M1, M2 (forms of the target line) and grad F(p). The kernel vector has
/// binary-quadratic coordinates and is expressed in the target span.
template <class F>
DegreeTwoMap<F> tangent_chord(const QuaternaryCubic<F>& Fq, const LineInP3<F>& domain,
                              const LineInP3<F>& target) {
    const F& fld = Fq.field();
    // grad F at x d1 + y d2: four binary quadratics
    std::vector<std::vector<typename F::elt>> M(4, std::vector<typename F::elt>(2));
    for (int k = 0; k < 4; ++k) {
        M[k][0] = domain.p1[k];
        M[k][1] = domain.p2[k];
    }
    std::array<Form<F>, 4> grad = {Form<F>(fld, 2, 2), Form<F>(fld, 2, 2), Form<F>(fld, 2, 2),
                                   Form<F>(fld, 2, 2)};
    for (int k = 0; k < 4; ++k) grad[k] = Fq.partial(k).substitute_linear(M, 2);
    // kernel of [[M1],[M2],[grad]] by signed 3x3 minors; rows 0,1 constant
    auto minor = [&](int drop) {
        // columns excluding `drop`
        std::array<int, 3> cols{};
        int idx = 0;
        for (int c = 0; c < 4; ++c)
            if (c != drop) cols[idx++] = c;
        // det of [[m1],[m2],[grad]] restricted: expand along the two constant rows
        auto d2 = [&](int ca, int cb) {
            return fld.sub(fld.mul(target.m1[ca], target.m2[cb]),
                           fld.mul(target.m1[cb], target.m2[ca]));
        };
        Form<F> det(fld, 2, 2);
        det = det + grad[cols[2]].scaled(d2(cols[0], cols[1]));
        det = det - grad[cols[1]].scaled(d2(cols[0], cols[2]));
        det = det + grad[cols[0]].scaled(d2(cols[1], cols[2]));
        return det;
    };
    std::array<Form<F>, 4> k = {minor(0), minor(1), minor(2), minor(3)};
    for (int j = 0; j < 4; ++j)
        if (j % 2 == 1) k[j] = k[j].scaled(fld.from_int(-1));
    // sanity: kernel satisfies the defining rows as polynomial identities
    {
        Form<F> c1(fld, 2, 2), c2(fld, 2, 2), c3(fld, 2, 4);
        for (int j = 0; j < 4; ++j) {
            c1 = c1 + k[j].scaled(target.m1[j]);
            c2 = c2 + k[j].scaled(target.m2[j]);
            c3 = c3 + k[j] * grad[j];
        }
        if (!c1.is_zero() || !c2.is_zero())
            throw std::logic_error("tangent_chord: kernel vector off the target line");
        if (!c3.is_zero()) throw std::logic_error("tangent_chord: tangency identity failed");
    }
    // express k = f1 * t1 + f2 * t2 via an invertible 2x2 coordinate minor
    int i1 = -1, i2 = -1;
    typename F::elt dd = fld.zero();
    for (int a = 0; a < 4 && i1 < 0; ++a)
        for (int b = a + 1; b < 4; ++b) {
            dd = fld.sub(fld.mul(target.p1[a], target.p2[b]), fld.mul(target.p1[b], target.p2[a]));
            if (!fld.is_zero(dd)) {
                i1 = a;
                i2 = b;
                break;
            }
        }
    auto idd = fld.inv(dd);
    DegreeTwoMap<F> out{Form<F>(fld, 2, 2), Form<F>(fld, 2, 2)};
    out.f1 = (k[i1].scaled(target.p2[i2]) - k[i2].scaled(target.p2[i1])).scaled(idd);
    out.f2 = (k[i2].scaled(target.p1[i1]) - k[i1].scaled(target.p1[i2])).scaled(idd);
    for (int j = 0; j < 4; ++j) {
        Form<F> back = out.f1.scaled(target.p1[j]) + out.f2.scaled(target.p2[j]);
        if (!(back == k[j]))
            throw std::logic_error("tangent_chord: span expression inconsistent");
    }
    if (out.f1.is_zero() && out.f2.is_zero())
        throw StageError("tangent_chord", "map degenerated to zero");
    if (fld.is_zero(detail::binquad_resultant(fld, out.f1, out.f2)))
        throw StageError("tangent_chord", "components share a root (degenerate map)");
    return out;
}

/// Branch divisor of a degree-two map: the binary quadratic in the target
/// coordinates whose roots are the critical values, computed as the
/// discriminant of lambda2 g1 - lambda1 g2 with respect to the domain.
template <class F>
BinaryQuadratic<F> branch_divisor(const DegreeTwoMap<F>& g) {
    const F& fld = g.f1.field();
    if (fld.is_zero(detail::binquad_resultant(fld, g.f1, g.f2)))
        throw StageError("branch_divisor", "degenerate map (common root)");
    auto A1 = g.f1[Expo{2, 0, 0, 0}], B1 = g.f1[Expo{1, 1, 0, 0}], C1 = g.f1[Expo{0, 2, 0, 0}];
    auto A2 = g.f2[Expo{2, 0, 0, 0}], B2 = g.f2[Expo{1, 1, 0, 0}], C2 = g.f2[Expo{0, 2, 0, 0}];
    // disc((l2 A1 - l1 A2) x^2 + (l2 B1 - l1 B2) xy + (l2 C1 - l1 C2) y^2)
    auto four = fld.from_int(4);
    BinaryQuadratic<F> D;
    D.r = fld.sub(fld.mul(B2, B2), fld.mul(four, fld.mul(A2, C2)));
    D.s = fld.add(fld.mul(four, fld.add(fld.mul(A1, C2), fld.mul(A2, C1))),
                  fld.neg(fld.mul(fld.from_int(2), fld.mul(B1, B2))));
    D.t = fld.sub(fld.mul(B1, B1), fld.mul(four, fld.mul(A1, C1)));
    if (fld.is_zero(D.r) && fld.is_zero(D.s) && fld.is_zero(D.t))
        throw StageError("branch_divisor", "identically zero discriminant");
    return D;
}

/// A degree-two map over the ground field whose ramification divisor equals
/// D. With distinct rational roots (x1:y1), (x2:y2) this is
/// ((y1 x - x1 y)^2 : (y2 x - x2 y)^2); otherwise the invariant forms for
/// s = 0 and s != 0 apply. A double root is rejected.
template <class F>
DegreeTwoMap<F> fprime(const F& fld, const BinaryQuadratic<F>& D) {
    auto disc = fld.sub(fld.mul(D.s, D.s), fld.mul(fld.from_int(4), fld.mul(D.r, D.t)));
    if (fld.is_zero(disc)) throw StageError("fprime", "branch divisor is a perfect square");
    auto add_quad = [&](typename F::elt a, typename F::elt b, typename F::elt c) {
        Form<F> q(fld, 2, 2);
        q[Expo{2, 0, 0, 0}] = a;
        q[Expo{1, 1, 0, 0}] = b;
        q[Expo{0, 2, 0, 0}] = c;
        return q;
    };
    auto sq = fld.sqrt(disc);
    DegreeTwoMap<F> out{Form<F>(fld, 2, 2), Form<F>(fld, 2, 2)};
    if (sq) {
        // rational roots
        typename F::elt x1, y1, x2, y2;
        if (!fld.is_zero(D.r)) {
            x1 = fld.add(fld.neg(D.s), *sq);
            x2 = fld.sub(fld.neg(D.s), *sq);
            y1 = y2 = fld.mul(fld.from_int(2), D.r);
        } else {
            x1 = fld.neg(D.t);
            y1 = D.s;
            x2 = fld.one();
            y2 = fld.zero();
        }
        out.f1 = add_quad(fld.mul(y1, y1), fld.neg(fld.mul(fld.from_int(2), fld.mul(y1, x1))),
                          fld.mul(x1, x1));
        out.f2 = add_quad(fld.mul(y2, y2), fld.neg(fld.mul(fld.from_int(2), fld.mul(y2, x2))),
                          fld.mul(x2, x2));
    } else if (fld.is_zero(D.s)) {
        auto t2 = fld.mul(fld.from_int(2), D.t);
        out.f1 = add_quad(D.r, fld.neg(t2), fld.neg(D.t));
        out.f2 = add_quad(D.r, t2, fld.neg(D.t));
    } else {
        // printed s != 0 form, completed with the y^2 factor on the third
        // coefficient so that the ramification identity holds
        auto r = D.r, s = D.s, t = D.t;
        auto rr = fld.mul(r, r), ss = fld.mul(s, s);
        out.f1 = add_quad(
            fld.mul(rr, s),
            fld.mul(fld.from_int(2), fld.mul(r, fld.sub(ss, fld.mul(fld.from_int(2), fld.mul(r, t))))),
            fld.sub(fld.mul(ss, s), fld.mul(fld.from_int(3), fld.mul(r, fld.mul(s, t)))));
        out.f2 = add_quad(fld.mul(rr, s), fld.mul(fld.from_int(4), fld.mul(rr, t)),
                          fld.mul(r, fld.mul(s, t)));
    }
    // contract: the Wronskian of f' is proportional to D
    Form<F> W = wronskian(out.f1, out.f2);
    Form<F> Dq(fld, 2, 2);
    Dq[Expo{2, 0, 0, 0}] = D.r;
    Dq[Expo{1, 1, 0, 0}] = D.s;
    Dq[Expo{0, 2, 0, 0}] = D.t;
    bool prop = false;
    for (int i = 0; i < 3 && !prop; ++i) {
        if (fld.is_zero(W.coeffs()[i]) || fld.is_zero(Dq.coeffs()[i])) continue;
        auto lam = fld.div(Dq.coeffs()[i], W.coeffs()[i]);
        prop = W.scaled(lam) == Dq;
    }
    if (!prop) throw std::logic_error("fprime: ramification does not match the branch divisor");
    return out;
}

/// The 3 x 4 coefficient matrix of the common-fiber equation
/// lambda2 f1 - lambda1 f2 = lambda2' f1' - lambda1' f2'.
template <class F>
Matrix<F> common_fiber_matrix(const DegreeTwoMap<F>& f, const DegreeTwoMap<F>& fp) {
    const F& fld = f.f1.field();
    Matrix<F> M(fld, 3, 4);
    std::array<Expo, 3> rows = {Expo{2, 0, 0, 0}, Expo{1, 1, 0, 0}, Expo{0, 2, 0, 0}};
    for (int i = 0; i < 3; ++i) {
        M.at(i, 0) = f.f1[rows[i]];
        M.at(i, 1) = fld.neg(f.f2[rows[i]]);
        M.at(i, 2) = fld.neg(fp.f1[rows[i]]);
        M.at(i, 3) = fp.f2[rows[i]];
    }
    return M;
}

/// Solve for q = (l1 : l2), q' = (l1' : l2') with equal fibers; requires the
/// kernel to be one-dimensional (kernel vector is (l2, l1, l2', l1')).
template <class F>
std::pair<std::array<typename F::elt, 2>, std::array<typename F::elt, 2>> common_fiber(
    const DegreeTwoMap<F>& f, const DegreeTwoMap<F>& fp) {
    auto M = common_fiber_matrix(f, fp);
    auto ker = M.right_kernel();
    if (ker.empty()) throw StageError("common_fiber", "no involutory configuration");
    if (ker.size() > 1)
        throw StageError("common_fiber", "ambiguous configuration (kernel dimension " +
                                             std::to_string(ker.size()) + ")");
    const auto& v = ker[0];
    return {{v[1], v[0]}, {v[3], v[2]}};
}

/// Discriminant quartic of the projection of S from a point Q on it. The
/// coordinate change sends (1:0:0:0) to Q, completed deterministically with
/// standard basis vectors (or caller-supplied directions). Writing the
/// transformed cubic as F1 t + F2 t^2 + F3 t^3 along (1 : xt : yt : zt), the
/// result is F2^2 - 4 F1 F3.
template <class F>
TernaryQuartic<F> project_from_point(const QuaternaryCubic<F>& Fq,
                                     const std::array<typename F::elt, 4>& Q,
                                     const std::vector<std::array<typename F::elt, 4>>* completion = nullptr) {
    const F& fld = Fq.field();
    // build T: first column Q, remaining columns completed to invertible
    std::vector<std::array<typename F::elt, 4>> cols = {Q};
    auto try_add = [&](const std::array<typename F::elt, 4>& cand) {
        if (cols.size() == 4) return;
        Matrix<F> M(fld, 4, cols.size() + 1);
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < 4; ++r) M.at(r, c) = cols[c][r];
        for (int r = 0; r < 4; ++r) M.at(r, cols.size()) = cand[r];
        if (M.rank() == cols.size() + 1) cols.push_back(cand);
    };
    if (completion)
        for (const auto& c : *completion) try_add(c);
    for (int e = 0; e < 4 && cols.size() < 4; ++e) {
        std::array<typename F::elt, 4> unit{fld.zero(), fld.zero(), fld.zero(), fld.zero()};
        unit[e] = fld.one();
        try_add(unit);
    }
    if (cols.size() != 4) throw std::logic_error("project_from_point: completion failed");
    std::vector<std::vector<typename F::elt>> T(4, std::vector<typename F::elt>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) T[i][j] = cols[j][i];
    Form<F> Ft = Fq.substitute_linear(T, 4);
    // group by degree in the first variable: F(1, x t, y t, z t) =
    // sum_m A_m(x,y,z) t^m with A_m collecting monomials of w-degree 3-m
    std::array<Form<F>, 4> A = {Form<F>(fld, 3, 0), Form<F>(fld, 3, 1), Form<F>(fld, 3, 2),
                                Form<F>(fld, 3, 3)};
    const auto& ex = Ft.exponents();
    for (std::size_t i = 0; i < Ft.coeffs().size(); ++i) {
        if (fld.is_zero(Ft.coeffs()[i])) continue;
        int m = 3 - ex[i][0];
        Expo e = {ex[i][1], ex[i][2], ex[i][3], 0};
        A[m][e] = fld.add(A[m][e], Ft.coeffs()[i]);
    }
    if (!A[0].is_zero()) throw StageError("project_from_point", "center not on the surface");
    if (A[1].is_zero()) throw StageError("project_from_point", "singular center");
    return A[2] * A[2] - (A[1] * A[3]).scaled(fld.from_int(4));
}

template <class F>
struct L1Result {
    TernaryQuartic<F> quartic;
    int attempts = 0;
};

/// Full pipeline with validation (L = 0 and I27 = 0) and bounded retries.
/// The projection center is the common-fiber point on m; when that candidate
/// fails validation the roles of l and m are swapped before resampling.
template <class F>
L1Result<F> generate_l1(const DixmierOhnoEvaluator<F>& dix, const InvariantExpression<F>& L,
                        std::uint64_t seed, int max_attempts = 32) {
    const F& fld = dix.field();
    std::string last_stage = "sampling";
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rng rng = Rng::derive(seed, 0x4444444444444444ULL ^ static_cast<std::uint64_t>(attempt));
        try {
            // six distinct random plane points
            std::vector<std::array<typename F::elt, 3>> pts;
            while (pts.size() < 6) {
                std::array<typename F::elt, 3> p = {random_element(fld, rng), random_element(fld, rng),
                                                    random_element(fld, rng)};
                if (fld.is_zero(p[0]) && fld.is_zero(p[1]) && fld.is_zero(p[2])) continue;
                bool dup = false;
                for (const auto& q : pts) dup |= detail::proj_equal(fld, p, q);
                if (!dup) pts.push_back(p);
            }
            auto cubics = cubic_system(fld, pts);
            auto Fq = surface_equation(cubics);
            auto l = line_on_surface(Fq, cubics, pts[0], pts[1]);
            auto m = line_on_surface(Fq, cubics, pts[0], pts[2]);
            if (!lines_skew(fld, l, m)) throw StageError("lines", "l and m not skew");
            for (int orientation = 0; orientation < 2; ++orientation) {
                const auto& dom = orientation == 0 ? l : m;
                const auto& tgt = orientation == 0 ? m : l;
                auto f = tangent_chord(Fq, dom, tgt);   // dom -> tgt
                auto g = tangent_chord(Fq, tgt, dom);   // tgt -> dom
                auto D = branch_divisor(g);             // divisor on dom
                auto fp = fprime(fld, D);
                auto [q, qp] = common_fiber(f, fp);
                (void)qp;
                std::array<typename F::elt, 4> Q;
                for (int j = 0; j < 4; ++j)
                    Q[j] = fld.add(fld.mul(q[0], tgt.p1[j]), fld.mul(q[1], tgt.p2[j]));
                auto quartic = project_from_point(Fq, Q);
                if (quartic.is_zero()) throw StageError("projection", "zero discriminant quartic");
                auto tup = dix.evaluate(quartic);
                if (!fld.is_zero(tup[12])) continue;
                if (!fld.is_zero(evaluate_expression(dix, L, quartic))) continue;
                return {quartic, attempt + 1};
            }
            last_stage = "validation";
        } catch (const StageError& e) {
            last_stage = e.stage();
        }
    }
    throw StageError(last_stage, "generate_l1 exhausted " + std::to_string(max_attempts) +
                                     " attempts (last failing stage shown)");
}

}  // namespace luroth

#endif
