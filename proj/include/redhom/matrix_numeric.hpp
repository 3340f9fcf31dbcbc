#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/models.hpp"
#include "redhom/rat_matrix.hpp"

namespace redhom {

// The only floating-point type in the library. Everything else is exact;
// this module exists solely for the matrix-exponential verification.
class FloatMatrix {
public:
    FloatMatrix() = default;
    FloatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0.0) {}

    static FloatMatrix identity(std::size_t n) {
        FloatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    FloatMatrix transpose() const {
        FloatMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    // Operator infinity norm (max absolute row sum).
    double norm_inf() const {
        double worst = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            double sum = 0.0;
            for (std::size_t c = 0; c < cols_; ++c) sum += std::abs(at(r, c));
            if (sum > worst) worst = sum;
        }
        return worst;
    }

    double max_abs_entry() const {
        double worst = 0.0;
        for (double x : e_)
            if (std::abs(x) > worst) worst = std::abs(x);
        return worst;
    }

    friend FloatMatrix operator+(const FloatMatrix& a, const FloatMatrix& b) {
        FloatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] + b.e_[i];
        return s;
    }
    friend FloatMatrix operator-(const FloatMatrix& a, const FloatMatrix& b) {
        FloatMatrix s(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) s.e_[i] = a.e_[i] - b.e_[i];
        return s;
    }
    friend FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
        FloatMatrix p(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double f = a.at(r, k);
                if (f == 0.0) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) p.at(r, c) += f * b.at(k, c);
            }
        return p;
    }
    friend FloatMatrix operator*(const FloatMatrix& a, double s) { return s * a; }
    friend FloatMatrix operator*(double s, const FloatMatrix& a) {
        FloatMatrix p(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) p.e_[i] = s * a.e_[i];
        return p;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> e_;
};

// Truncated exponential series with scaling and squaring: a is scaled by
// 2^-s until its norm is at most 1/2, the series is summed until the next
// term's norm drops below tol * 2^-s, and the result is squared s times.
// Squaring roughly doubles the accumulated error per step, so the final
// error is bounded by a small multiple of tol * ||exp(a)||.
inline FloatMatrix matrix_exp(const FloatMatrix& a, double tol = 1e-15) {
    if (a.rows() != a.cols())
        throw NonSquare("matrix_exp needs a square matrix");
    if (!(tol > 0.0))
        throw BadParameter("matrix_exp tolerance must be positive");
    const std::size_t n = a.rows();
    int s = 0;
    double norm = a.norm_inf();
    while (norm > 0.5) {
        norm /= 2.0;
        ++s;
    }
    const FloatMatrix scaled = std::ldexp(1.0, -s) * a;
    const double cutoff = tol * std::ldexp(1.0, -s);

    FloatMatrix sum = FloatMatrix::identity(n);
    FloatMatrix term = FloatMatrix::identity(n);
    for (int k = 1; k <= 1000; ++k) {
        term = (1.0 / k) * (term * scaled);
        sum = sum + term;
        if (term.norm_inf() < cutoff) break;
    }
    for (int k = 0; k < s; ++k) sum = sum * sum;
    return sum;
}

// A shipped model together with a faithful matrix realization rho of it.
struct MatrixModel {
    LieAlgebra algebra;
    std::vector<FloatMatrix> rho; // rho[i] = image of basis element e_i
};

namespace detail {

inline FloatMatrix to_float(const RatMatrix& m) {
    FloatMatrix f(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) f.at(r, c) = m.at(r, c).to_double();
    return f;
}

// su(2) complex 2x2 matrices stored as real 4x4: A + iB -> [[A, -B], [B, A]].
inline FloatMatrix complex_as_real4(const double (&re)[2][2], const double (&im)[2][2]) {
    FloatMatrix m(4, 4);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            m.at(r, c) = re[r][c];
            m.at(r, c + 2) = -im[r][c];
            m.at(r + 2, c) = im[r][c];
            m.at(r + 2, c + 2) = re[r][c];
        }
    return m;
}

} // namespace detail

// Realizations (smallest faithful choices):
//   so3    3x3 skew-symmetric rotation generators
//   sl2    2x2 traceless: h = diag(1,-1), e = E12, f = E21
//   su2    2x2 complex anti-Hermitian, stored as real 4x4
//   heis3  3x3 strictly upper triangular
//   gl:n   n x n matrix units
inline MatrixModel matrix_model(const std::string& model) {
    LieAlgebra g = generate_model(model); // UnknownModel for bad names
    std::vector<FloatMatrix> rho;
    if (model == "so3") {
        for (std::size_t i = 0; i < 3; ++i) {
            FloatMatrix m(3, 3);
            const std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
            m.at(b, a) = 1.0;
            m.at(a, b) = -1.0;
            rho.push_back(m);
        }
    } else if (model == "sl2") {
        FloatMatrix h(2, 2), e(2, 2), f(2, 2);
        h.at(0, 0) = 1.0;
        h.at(1, 1) = -1.0;
        e.at(0, 1) = 1.0;
        f.at(1, 0) = 1.0;
        rho = {h, e, f};
    } else if (model == "su2") {
        const double zero[2][2] = {{0, 0}, {0, 0}};
        const double x1_im[2][2] = {{1, 0}, {0, -1}};
        const double x2_re[2][2] = {{0, 1}, {-1, 0}};
        const double x3_im[2][2] = {{0, 1}, {1, 0}};
        rho = {detail::complex_as_real4(zero, x1_im),
               detail::complex_as_real4(x2_re, zero),
               detail::complex_as_real4(zero, x3_im)};
    } else if (model == "heis3") {
        FloatMatrix x(3, 3), y(3, 3), z(3, 3);
        x.at(0, 1) = 1.0;
        y.at(1, 2) = 1.0;
        z.at(0, 2) = 1.0;
        rho = {x, y, z};
    } else if (model.rfind("gl:", 0) == 0) {
        const std::size_t n = static_cast<std::size_t>(std::lround(std::sqrt(double(g.dim()))));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                FloatMatrix m(n, n);
                m.at(a, b) = 1.0;
                rho.push_back(m);
            }
    } else {
        throw UnknownModel("model '" + model + "' has no matrix realization");
    }
    return {std::move(g), std::move(rho)};
}

namespace detail {

// Coordinates of c in the span of the realization matrices, by the normal
// equations of the Frobenius inner product. The Gram matrix is singular only
// if the realization is not faithful.
inline std::vector<double> realization_coords(const std::vector<FloatMatrix>& rho,
                                              const FloatMatrix& c) {
    const std::size_t n = rho.size();
    const auto dot = [](const FloatMatrix& a, const FloatMatrix& b) {
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t col = 0; col < a.cols(); ++col) s += a.at(r, col) * b.at(r, col);
        return s;
    };
    // Dense Gaussian elimination with partial pivoting on [G | rhs].
    std::vector<std::vector<double>> aug(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = dot(rho[i], rho[j]);
        aug[i][n] = dot(rho[i], c);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
        if (std::abs(aug[piv][col]) < 1e-12)
            throw NonInvertibleRealization("realization Gram matrix is singular");
        std::swap(aug[piv], aug[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = aug[r][col] / aug[col][col];
            if (f == 0.0) continue;
            for (std::size_t cc = col; cc <= n; ++cc) aug[r][cc] -= f * aug[col][cc];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
    return x;
}

} // namespace detail

// Residual of Ad_{exp(t x)} = exp(t ad_x) applied to y, in coordinates:
// || rho^-1( exp(t rho(x)) rho(y) exp(-t rho(x)) ) - exp(t ad_x) y ||_inf.
inline double ad_exp_residual(const MatrixModel& mm, const Vec& x, const Vec& y, double t,
                              double tol = 1e-15) {
    const LieAlgebra& g = mm.algebra;
    if (x.size() != g.dim() || y.size() != g.dim())
        throw DimensionMismatch("ad_exp_residual arguments must have algebra dimension");
    const std::size_t d = mm.rho.front().rows();
    FloatMatrix rx(d, d), ry(d, d);
    for (std::size_t i = 0; i < g.dim(); ++i) {
        rx = rx + x[i].to_double() * mm.rho[i];
        ry = ry + y[i].to_double() * mm.rho[i];
    }
    const FloatMatrix conj =
        matrix_exp(t * rx, tol) * ry * matrix_exp(-t * rx, tol);
    const std::vector<double> lhs = detail::realization_coords(mm.rho, conj);

    const FloatMatrix ad_exp = matrix_exp(t * detail::to_float(g.ad(x)), tol);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        double rhs = 0.0;
        for (std::size_t j = 0; j < g.dim(); ++j)
            rhs += ad_exp.at(k, j) * y[j].to_double();
        worst = std::max(worst, std::abs(lhs[k] - rhs));
    }
    return worst;
}

inline double ad_exp_residual(const std::string& model, const Vec& x, const Vec& y, double t,
                              double tol = 1e-15) {
    return ad_exp_residual(matrix_model(model), x, y, t, tol);
}

} // namespace redhom
