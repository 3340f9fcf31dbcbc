#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/rational.hpp"

namespace redhom {

using Vec = std::vector<Rational>;

// Dense row-major matrix over Rational. Deliberately small: just what exact
// Gaussian elimination and the solvers below need.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }
    const Rational& at(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return e_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const Rational& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        RatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] + b.e_[i];
        return s;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        RatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] - b.e_[i];
        return s;
    }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        RatMatrix p(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& f = a.at(r, k);
                if (f.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    p.at(r, c) += f * b.at(k, c);
            }
        return p;
    }
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a) {
        RatMatrix p(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) p.e_[i] = s * a.e_[i];
        return p;
    }
    friend RatMatrix operator*(const RatMatrix& a, const Rational& s) { return s * a; }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_)
            throw DimensionMismatch("matrix-vector shape mismatch");
        Vec y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix r;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, ascending
};

// Reduced row echelon form with deterministic pivoting: columns scanned left
// to right, pivot row = first row (top to bottom) with a nonzero entry in the
// current column. No normalization tricks; pivots end up exactly 1.
inline RrefResult rref(const RatMatrix& m) {
    RrefResult out{m, {}};
    RatMatrix& r = out.r;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col).is_zero()) ++piv;
        if (piv == r.rows()) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < r.cols(); ++c)
                std::swap(r.at(piv, c), r.at(lead, c));
        const Rational inv = Rational(1) / r.at(lead, col);
        for (std::size_t c = col; c < r.cols(); ++c) r.at(lead, c) *= inv;
        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == lead || r.at(row, col).is_zero()) continue;
            const Rational f = r.at(row, col);
            for (std::size_t c = col; c < r.cols(); ++c)
                r.at(row, c) -= f * r.at(lead, c);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

// Basis of { x : m x = 0 }, one vector per free column, ordered by increasing
// free-column index; vector for free column f has x[f] = 1 and x[f'] = 0 at
// every other free column f'.
inline std::vector<Vec> null_space_basis(const RatMatrix& m) {
    const RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec x(n);
        x[f] = Rational(1);
        for (std::size_t row = 0; row < rr.pivots.size(); ++row)
            x[rr.pivots[row]] = -rr.r.at(row, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves g x = rhs for symmetric invertible g.
inline Vec solve_symmetric(const RatMatrix& g, const Vec& rhs) {
    if (g.rows() != g.cols())
        throw DimensionMismatch("solve_symmetric needs a square matrix");
    if (rhs.size() != g.rows())
        throw DimensionMismatch("solve_symmetric rhs length mismatch");
    const std::size_t n = g.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = g.at(r, c);
        aug.at(r, n) = rhs[r];
    }
    const RrefResult rr = rref(aug);
    if (rr.pivots.size() != n || rr.pivots.back() >= n)
        throw SingularMatrix("solve_symmetric: singular matrix");
    Vec x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = rr.r.at(r, n);
    return x;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse needs a square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Rational(1);
    }
    const RrefResult rr = rref(aug);
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        throw SingularMatrix("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv.at(r, c) = rr.r.at(r, n + c);
    return inv;
}

} // namespace redhom
