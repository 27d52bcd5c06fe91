/// Dense homogeneous forms in 2, 3 or 4 variables over a field context.
///
/// Coefficients are stored against the fixed monomial order: exponent tuples
/// listed lexicographically descending, first variable major. For ternary
/// quartics this is x^4, x^3 y, x^3 z, x^2 y^2, ..., z^4 — the order every
/// file format and coefficient list in this project uses.
#ifndef LUROTH_FORMS_HPP
#define LUROTH_FORMS_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace luroth {

using Expo = std::array<std::uint8_t, 4>;   // exponents, unused variables zero

namespace detail {

inline std::uint64_t binom(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// number of monomials of degree d in n variables
inline std::size_t mon_count(int nvars, int deg) {
    return static_cast<std::size_t>(binom(static_cast<unsigned>(deg + nvars - 1),
                                          static_cast<unsigned>(nvars - 1)));
}

struct MonTable {
    std::vector<Expo> exps;   // lex descending

    static const MonTable& get(int nvars, int deg) {
        static std::map<std::pair<int, int>, MonTable> cache;
        static std::mutex mu;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(nvars, deg);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        MonTable t;
        Expo cur{0, 0, 0, 0};
        build(nvars, deg, 0, cur, t.exps);
        return cache.emplace(key, std::move(t)).first->second;
    }

    static void build(int nvars, int rem, int pos, Expo& cur, std::vector<Expo>& out) {
        if (pos == nvars - 1) {
            cur[pos] = static_cast<std::uint8_t>(rem);
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = static_cast<std::uint8_t>(e);
            build(nvars, rem - e, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
};

/// rank of an exponent tuple in the lex-descending listing
inline std::size_t mon_rank(int nvars, int deg, const Expo& e) {
    std::size_t idx = 0;
    int rem = deg;
    for (int pos = 0; pos < nvars - 1; ++pos) {
        for (int a = rem; a > e[pos]; --a) idx += mon_count(nvars - 1 - pos, rem - a);
        rem -= e[pos];
    }
    return idx;
}

}  // namespace detail

template <class F>
class Form {
public:
    using elt = typename F::elt;

    Form(F fld, int nvars, int deg)
        : fld_(std::move(fld)), nvars_(nvars), deg_(deg),
          c_(detail::mon_count(nvars, deg), fld_.zero()) {}

    static Form zero(const F& fld, int nvars, int deg) { return Form(fld, nvars, deg); }

    int nvars() const { return nvars_; }
    int degree() const { return deg_; }
    const F& field() const { return fld_; }
    std::size_t size() const { return c_.size(); }

    const std::vector<elt>& coeffs() const { return c_; }
    std::vector<elt>& coeffs() { return c_; }

    const std::vector<Expo>& exponents() const {
        return detail::MonTable::get(nvars_, deg_).exps;
    }

    elt& operator[](const Expo& e) { return c_[detail::mon_rank(nvars_, deg_, e)]; }
    const elt& operator[](const Expo& e) const { return c_[detail::mon_rank(nvars_, deg_, e)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!fld_.is_zero(x)) return false;
        return true;
    }

    Form operator+(const Form& o) const {
        check_shape(o);
        Form r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fld_.add(r.c_[i], o.c_[i]);
        return r;
    }
    Form operator-(const Form& o) const {
        check_shape(o);
        Form r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = fld_.sub(r.c_[i], o.c_[i]);
        return r;
    }
    Form scaled(const elt& s) const {
        Form r = *this;
        for (auto& x : r.c_) x = fld_.mul(x, s);
        return r;
    }

    Form operator*(const Form& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Form::mul: variable count mismatch");
        if (fld_ != o.fld_) throw std::invalid_argument("Form::mul: field mismatch");
        Form r(fld_, nvars_, deg_ + o.deg_);
        const auto& ea = exponents();
        const auto& eb = o.exponents();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (fld_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (fld_.is_zero(o.c_[j])) continue;
                Expo e{};
                for (int k = 0; k < 4; ++k) e[k] = static_cast<std::uint8_t>(ea[i][k] + eb[j][k]);
                std::size_t idx = detail::mon_rank(nvars_, r.deg_, e);
                r.c_[idx] = fld_.mul_add(r.c_[idx], c_[i], o.c_[j]);
            }
        }
        return r;
    }

    Form partial(int var) const {
        if (deg_ == 0) return Form(fld_, nvars_, 0);
        Form r(fld_, nvars_, deg_ - 1);
        const auto& ea = exponents();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (fld_.is_zero(c_[i]) || ea[i][var] == 0) continue;
            Expo e = ea[i];
            e[var] -= 1;
            std::size_t idx = detail::mon_rank(nvars_, deg_ - 1, e);
            r.c_[idx] = fld_.add(r.c_[idx],
                                 fld_.mul(c_[i], fld_.from_int(ea[i][var])));
        }
        return r;
    }

    elt eval(const std::vector<elt>& pt) const {
        assert(static_cast<int>(pt.size()) == nvars_);
        // per-variable power tables
        std::vector<std::vector<elt>> pw(nvars_);
        for (int v = 0; v < nvars_; ++v) {
            pw[v].resize(deg_ + 1);
            pw[v][0] = fld_.one();
            for (int e = 1; e <= deg_; ++e) pw[v][e] = fld_.mul(pw[v][e - 1], pt[v]);
        }
        const auto& ea = exponents();
        elt s = fld_.zero();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (fld_.is_zero(c_[i])) continue;
            elt t = c_[i];
            for (int v = 0; v < nvars_; ++v)
                if (ea[i][v]) t = fld_.mul(t, pw[v][ea[i][v]]);
            s = fld_.add(s, t);
        }
        return s;
    }

    /// Substitute each variable by a form (all of equal shape), e.g. the
    /// composition F(c1,...,c4) of a quaternary cubic with plane cubics.
    Form compose(const std::vector<Form>& subs) const {
        assert(static_cast<int>(subs.size()) == nvars_);
        int m = subs[0].nvars_;
        int k = subs[0].deg_;
        Form r(fld_, m, deg_ * k);
        const auto& ea = exponents();
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (fld_.is_zero(c_[i])) continue;
            Form term(fld_, m, 0);
            term.c_[0] = c_[i];
            for (int v = 0; v < nvars_; ++v)
                for (int e = 0; e < ea[i][v]; ++e) term = term * subs[v];
            // term now has degree deg_*k only if all exponents sum to deg_
            r = r + pad_to(term, r.deg_);
        }
        return r;
    }

    /// Linear change of variables: x_i -> sum_j M[i][j] y_j (y in `mvars` variables).
    Form substitute_linear(const std::vector<std::vector<elt>>& M, int mvars) const {
        std::vector<Form> lins;
        lins.reserve(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            Form l(fld_, mvars, 1);
            for (int j = 0; j < mvars; ++j) {
                Expo e{};
                e[j] = 1;
                l[e] = M[i][j];
            }
            lins.push_back(std::move(l));
        }
        return compose(lins);
    }

    bool operator==(const Form& o) const {
        if (nvars_ != o.nvars_ || deg_ != o.deg_) return false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            // rely on field equality of elements via sub + is_zero
            if (!fld_.is_zero(fld_.sub(c_[i], o.c_[i]))) return false;
        }
        return true;
    }

private:
    void check_shape(const Form& o) const {
        if (nvars_ != o.nvars_ || deg_ != o.deg_)
            throw std::invalid_argument("Form: shape mismatch");
        if (fld_ != o.fld_) throw std::invalid_argument("Form: field mismatch");
    }

    static Form pad_to(const Form& f, int deg) {
        if (f.deg_ == deg) return f;
        assert(f.is_zero());
        return Form(f.fld_, f.nvars_, deg);
    }

    F fld_;
    int nvars_;
    int deg_;
    std::vector<elt> c_;
};

/// g(d/dx_1, ..., d/dx_n) applied to h, coefficientwise bilinear. When
/// deg g > deg h the result is the zero form (not an error).
template <class F>
Form<F> diff_op(const Form<F>& g, const Form<F>& h) {
    const F& fld = g.field();
    assert(g.nvars() == h.nvars());
    int outdeg = h.degree() - g.degree();
    if (outdeg < 0) return Form<F>(fld, h.nvars(), 0);
    Form<F> out(fld, h.nvars(), outdeg);
    const auto& eg = g.exponents();
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        if (fld.is_zero(g.coeffs()[i])) continue;
        Form<F> d = h;
        for (int v = 0; v < g.nvars(); ++v)
            for (int e = 0; e < eg[i][v]; ++e) d = d.partial(v);
        out = out + d.scaled(g.coeffs()[i]);
    }
    return out;
}

namespace detail {

template <class F>
Form<F> form_det(const std::vector<std::vector<Form<F>>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    const F& fld = m[0][0].field();
    Form<F> tot(fld, m[0][0].nvars(), static_cast<int>(n) * m[0][0].degree());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Form<F>>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Form<F>> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Form<F> term = m[0][j] * form_det(minor);
        tot = (j % 2 == 0) ? tot + term : tot - term;
    }
    return tot;
}

}  // namespace detail

/// Determinant of the matrix of second partials: for a ternary quartic this
/// is the classical Hessian covariant of degree 3 and order 6.
template <class F>
Form<F> hessian(const Form<F>& f) {
    int n = f.nvars();
    if (f.degree() < 2) {
        // second partials vanish identically
        return Form<F>(f.field(), n, 0);
    }
    std::vector<std::vector<Form<F>>> H;
    for (int i = 0; i < n; ++i) {
        std::vector<Form<F>> row;
        for (int j = 0; j < n; ++j) row.push_back(f.partial(i).partial(j));
        H.push_back(std::move(row));
    }
    return detail::form_det(H);
}

/// Wronskian of two binary forms: the ramification divisor of the map (u : v).
template <class F>
Form<F> wronskian(const Form<F>& u, const Form<F>& v) {
    assert(u.nvars() == 2 && v.nvars() == 2);
    return u.partial(0) * v.partial(1) - u.partial(1) * v.partial(0);
}

}  // namespace luroth

#endif
