/// Sparse multivariate polynomials keyed by exponent tuple, for the symbolic
/// work that is not performance critical: the Ciani factor expansion and the
/// general ring operations exposed by the library. Zero coefficients are
/// never stored.
#ifndef LUROTH_DENSEPOLY_HPP
#define LUROTH_DENSEPOLY_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace luroth {

template <class F>
class SparsePoly {
public:
    using elt = typename F::elt;
    using Key = std::vector<std::uint16_t>;

    SparsePoly(F fld, int nvars) : fld_(std::move(fld)), nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const F& field() const { return fld_; }
    const std::map<Key, elt>& terms() const { return t_; }
    std::size_t support_size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Key& k, const elt& c) {
        if (static_cast<int>(k.size()) != nvars_)
            throw std::invalid_argument("SparsePoly: exponent tuple length mismatch");
        if (fld_.is_zero(c)) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, c);
        } else {
            it->second = fld_.add(it->second, c);
            if (fld_.is_zero(it->second)) t_.erase(it);
        }
    }

    static SparsePoly constant(const F& fld, int nvars, const elt& c) {
        SparsePoly p(fld, nvars);
        p.add_term(Key(nvars, 0), c);
        return p;
    }
    static SparsePoly variable(const F& fld, int nvars, int i) {
        SparsePoly p(fld, nvars);
        Key k(nvars, 0);
        k[i] = 1;
        p.add_term(k, fld.one());
        return p;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        check(o);
        SparsePoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k, c);
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        check(o);
        SparsePoly r = *this;
        for (const auto& [k, c] : o.t_) r.add_term(k, fld_.neg(c));
        return r;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        check(o);
        SparsePoly r(fld_, nvars_);
        for (const auto& [ka, ca] : t_)
            for (const auto& [kb, cb] : o.t_) {
                Key k(nvars_);
                for (int i = 0; i < nvars_; ++i)
                    k[i] = static_cast<std::uint16_t>(ka[i] + kb[i]);
                r.add_term(k, fld_.mul(ca, cb));
            }
        return r;
    }
    SparsePoly scaled(const elt& s) const {
        SparsePoly r(fld_, nvars_);
        if (fld_.is_zero(s)) return r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, fld_.mul(c, s));
        return r;
    }
    SparsePoly pow(unsigned e) const {
        SparsePoly r = constant(fld_, nvars_, fld_.one());
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    SparsePoly partial(int var) const {
        SparsePoly r(fld_, nvars_);
        for (const auto& [k, c] : t_) {
            if (k[var] == 0) continue;
            Key kk = k;
            kk[var] -= 1;
            r.add_term(kk, fld_.mul(c, fld_.from_int(k[var])));
        }
        return r;
    }

    elt eval(const std::vector<elt>& pt) const {
        elt s = fld_.zero();
        for (const auto& [k, c] : t_) {
            elt t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < k[i]; ++e) t = fld_.mul(t, pt[i]);
            s = fld_.add(s, t);
        }
        return s;
    }

    bool operator==(const SparsePoly& o) const {
        if (nvars_ != o.nvars_ || t_.size() != o.t_.size()) return false;
        auto it = t_.begin();
        auto jt = o.t_.begin();
        for (; it != t_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!fld_.is_zero(fld_.sub(it->second, jt->second))) return false;
        }
        return true;
    }

private:
    void check(const SparsePoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: variable count mismatch");
        if (fld_ != o.fld_) throw std::invalid_argument("SparsePoly: field mismatch");
    }

    F fld_;
    int nvars_;
    std::map<Key, elt> t_;
};

}  // namespace luroth

#endif
