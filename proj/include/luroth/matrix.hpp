/// Dense exact matrices over a field context, with the elimination kernels
/// the relation search is built on: reduced row echelon form, rank, right
/// kernel and determinant. Classical Gaussian elimination with partial
/// pivoting by first nonzero entry; matrices here stay below ~2000 x 1400.
#ifndef LUROTH_MATRIX_HPP
#define LUROTH_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace luroth {

template <class F>
class Matrix {
public:
    using elt = typename F::elt;

    Matrix(F fld, std::size_t rows, std::size_t cols)
        : fld_(std::move(fld)), rows_(rows), cols_(cols), a_(rows * cols, fld_.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return fld_; }

    elt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const elt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    elt* row(std::size_t i) { return a_.data() + i * cols_; }
    const elt* row(std::size_t i) const { return a_.data() + i * cols_; }

    /// In-place reduced row echelon form; returns pivot columns in scan order.
    /// `colorder` fixes the column scan sequence (default 0..cols-1); the
    /// relation canonicalization scans from the lex-smallest monomial end.
    std::vector<std::size_t> rref_in_place(const std::vector<std::size_t>* colorder = nullptr) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t ci = 0; ci < cols_ && r < rows_; ++ci) {
            std::size_t c = colorder ? (*colorder)[ci] : ci;
            std::size_t piv = r;
            while (piv < rows_ && fld_.is_zero(at(piv, c))) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
            elt ip = fld_.inv(at(r, c));
            for (std::size_t j = 0; j < cols_; ++j) at(r, j) = fld_.mul(at(r, j), ip);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || fld_.is_zero(at(i, c))) continue;
                elt f = at(i, c);
                elt* ri = row(i);
                const elt* rr = row(r);
                for (std::size_t j = 0; j < cols_; ++j) ri[j] = fld_.mul_sub(ri[j], f, rr[j]);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    Matrix rref(const std::vector<std::size_t>* colorder = nullptr) const {
        Matrix m = *this;
        auto piv = m.rref_in_place(colorder);
        (void)piv;
        return m;
    }

    /// Forward elimination (row echelon, pivots normalized to 1, no
    /// back-elimination); returns the pivot columns.
    std::vector<std::size_t> forward_eliminate_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && fld_.is_zero(at(piv, c))) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
            elt ip = fld_.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = fld_.mul(at(r, j), ip);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (fld_.is_zero(at(i, c))) continue;
                elt f = at(i, c);
                elt* ri = row(i);
                const elt* rr = row(r);
                for (std::size_t j = c; j < cols_; ++j) ri[j] = fld_.mul_sub(ri[j], f, rr[j]);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.forward_eliminate_in_place().size();
    }

    /// Reduced-echelon basis of { v : M v = 0 }, ordered by free column
    /// ascending. Each basis vector carries 1 at its own free column and 0 at
    /// every other free column, so the basis is unique for a given matrix.
    std::vector<std::vector<elt>> right_kernel() const {
        Matrix m = *this;
        auto pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<elt>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<elt> v(cols_, fld_.zero());
            v[fc] = fld_.one();
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = fld_.neg(m.at(i, fc));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::vector<elt> mul_vec(const std::vector<elt>& v) const {
        assert(v.size() == cols_);
        std::vector<elt> out(rows_, fld_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            elt s = fld_.zero();
            const elt* ri = row(i);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!fld_.is_zero(v[j])) s = fld_.mul_add(s, ri[j], v[j]);
            out[i] = s;
        }
        return out;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!fld_.is_zero(fld_.sub(a_[i], o.a_[i]))) return false;
        return true;
    }

    elt det() const {
        if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
        Matrix m = *this;
        elt d = fld_.one();
        bool negate = false;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t piv = c;
            while (piv < rows_ && fld_.is_zero(m.at(piv, c))) ++piv;
            if (piv == rows_) return fld_.zero();
            if (piv != c) {
                for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(c, j), m.at(piv, j));
                negate = !negate;
            }
            d = fld_.mul(d, m.at(c, c));
            elt ip = fld_.inv(m.at(c, c));
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (fld_.is_zero(m.at(i, c))) continue;
                elt f = fld_.mul(m.at(i, c), ip);
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) = fld_.mul_sub(m.at(i, j), f, m.at(c, j));
            }
        }
        return negate ? fld_.neg(d) : d;
    }

private:
    F fld_;
    std::size_t rows_, cols_;
    std::vector<elt> a_;
};

/// Echelon basis wrapper: rows in reduced echelon form plus their pivot
/// columns, supporting membership tests and canonical reduction of vectors.
template <class F>
struct EchelonBasis {
    using elt = typename F::elt;
    F fld;
    std::vector<std::vector<elt>> rows;
    std::vector<std::size_t> pivots;

    static EchelonBasis from_vectors(const F& fld, const std::vector<std::vector<elt>>& vecs,
                                     std::size_t ncols,
                                     const std::vector<std::size_t>* colorder = nullptr) {
        Matrix<F> m(fld, vecs.size(), ncols);
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = vecs[i][j];
        auto piv = m.rref_in_place(colorder);
        EchelonBasis eb{fld, {}, piv};
        for (std::size_t i = 0; i < piv.size(); ++i)
            eb.rows.emplace_back(m.row(i), m.row(i) + ncols);
        return eb;
    }

    std::size_t dim() const { return rows.size(); }

    /// v minus its projection: eliminates every pivot coordinate.
    std::vector<elt> reduce(std::vector<elt> v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            elt f = v[pivots[i]];
            if (fld.is_zero(f)) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = fld.mul_sub(v[j], f, rows[i][j]);
        }
        return v;
    }

    bool contains(const std::vector<elt>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!fld.is_zero(x)) return false;
        return true;
    }
};

}  // namespace luroth

#endif
