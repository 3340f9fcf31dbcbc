#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/rat_matrix.hpp"
#include "redhom/rational.hpp"
#include "redhom/report.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// Finite-dimensional Lie algebra over the rationals, presented by structure
// constants on an ordered basis: [e_i, e_j] = sum_k c(i,j,k) e_k.
//
// Storage is canonical: only pairs i < j are stored, so antisymmetry holds by
// construction and c(j,i,k) = -c(i,j,k) is derived. The Jacobi identity is
// NOT enforced on construction; validate_lie checks it.
class LieAlgebra {
public:
    LieAlgebra() = default;
    LieAlgebra(std::string name, std::vector<std::string> basis)
        : name_(std::move(name)),
          basis_(std::move(basis)),
          dim_(basis_.size()),
          c_(pair_count(dim_) * dim_) {}

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& basis_label(std::size_t i) const { return basis_.at(i); }

    void set_name(std::string name) { name_ = std::move(name); }
    void set_basis_labels(std::vector<std::string> basis) {
        if (basis.size() != dim_)
            throw DimensionMismatch("basis label count differs from dimension");
        basis_ = std::move(basis);
    }

    // Canonical entry only: requires i < j.
    void set_bracket(std::size_t i, std::size_t j, std::size_t k, Rational value) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i >= j)
            throw NonCanonicalPair("bracket entry requires i < j, got (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        c_[pair_rank(i, j) * dim_ + k] = std::move(value);
    }

    // Antisymmetric completion of the stored constants.
    Rational c(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        if (i == j) return Rational(0);
        if (i < j) return c_[pair_rank(i, j) * dim_ + k];
        return -c_[pair_rank(j, i) * dim_ + k];
    }

    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw DimensionMismatch("bracket argument length differs from dimension");
        Vec z(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i + 1; j < dim_; ++j) {
                const Rational w = x[i] * y[j] - x[j] * y[i];
                if (w.is_zero()) continue;
                const std::size_t base = pair_rank(i, j) * dim_;
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!c_[base + k].is_zero()) z[k] += w * c_[base + k];
            }
        }
        return z;
    }

    // Matrix of ad_x : y -> [x, y] in the algebra basis; column j holds [x, e_j].
    RatMatrix ad(const Vec& x) const {
        if (x.size() != dim_)
            throw DimensionMismatch("ad argument length differs from dimension");
        RatMatrix m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t i = 0; i < dim_; ++i) {
                if (x[i].is_zero()) continue;
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational cij = c(i, j, k);
                    if (!cij.is_zero()) m.at(k, j) += x[i] * cij;
                }
            }
        return m;
    }

    // Dense antisymmetric expansion of the stored constants.
    Tensor3 structure_tensor() const {
        Tensor3 t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (i == j) continue;
                for (std::size_t k = 0; k < dim_; ++k)
                    t.at(i, j, k) = c(i, j, k);
            }
        return t;
    }

    Vec basis_vector(std::size_t i) const {
        check_index(i);
        Vec e(dim_);
        e[i] = Rational(1);
        return e;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.name_ == b.name_ && a.basis_ == b.basis_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

    static std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

private:
    void check_index(std::size_t i) const {
        if (i >= dim_)
            throw IndexOutOfRange("basis index " + std::to_string(i) +
                                  " out of range for dimension " + std::to_string(dim_));
    }

    // Lexicographic rank of the pair (i, j), i < j.
    std::size_t pair_rank(std::size_t i, std::size_t j) const {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::string name_;
    std::vector<std::string> basis_;
    std::size_t dim_ = 0;
    std::vector<Rational> c_; // index pair_rank(i,j) * dim_ + k
};

namespace detail {

// Cyclic Jacobi sum J(i,j,k)_m = sum_l c(i,j,l)c(l,k,m) + c(j,k,l)c(l,i,m)
// + c(k,i,l)c(l,j,m), with c given by any rank-3 accessor.
template <typename C>
Rational jacobi_sum(const C& c, std::size_t n,
                    std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
    Rational s;
    for (std::size_t l = 0; l < n; ++l) {
        s += c(i, j, l) * c(l, k, m);
        s += c(j, k, l) * c(l, i, m);
        s += c(k, i, l) * c(l, j, m);
    }
    return s;
}

} // namespace detail

// Jacobi check over every basis tuple. Antisymmetry holds by construction
// for LieAlgebra, so only "jacobi" violations can appear; `where` = (i,j,k,m)
// with m the component in which the cyclic sum fails.
inline ValidationReport validate_lie(const LieAlgebra& g) {
    ValidationReport rep;
    const std::size_t n = g.dim();
    const auto c = [&g](std::size_t i, std::size_t j, std::size_t k) { return g.c(i, j, k); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational s = detail::jacobi_sum(c, n, i, j, k, m);
                    if (!s.is_zero())
                        rep.add("jacobi", {i, j, k, m},
                                "cyclic Jacobi sum = " + s.str());
                }
    return rep;
}

// Same laws on a raw dense tensor, where antisymmetry is a genuine check:
// "antisymmetry" violations carry (i,j,k) with t(i,j,k) + t(j,i,k) != 0.
inline ValidationReport validate_structure_constants(const Tensor3& t) {
    ValidationReport rep;
    const std::size_t n = t.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Rational s = t.at(i, j, k) + t.at(j, i, k);
                if (!s.is_zero())
                    rep.add("antisymmetry", {i, j, k},
                            "t(i,j,k) + t(j,i,k) = " + s.str());
            }
    const auto c = [&t](std::size_t i, std::size_t j, std::size_t k) { return t.at(i, j, k); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational s = detail::jacobi_sum(c, n, i, j, k, m);
                    if (!s.is_zero())
                        rep.add("jacobi", {i, j, k, m},
                                "cyclic Jacobi sum = " + s.str());
                }
    return rep;
}

inline Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) { return g.bracket(x, y); }
inline RatMatrix ad_matrix(const LieAlgebra& g, const Vec& x) { return g.ad(x); }

// Structure constants in the basis f_i = sum_j p(j,i) e_j (columns of p are
// the new basis vectors in old coordinates). Name and labels carry over.
inline LieAlgebra change_basis(const LieAlgebra& g, const RatMatrix& p) {
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n)
        throw DimensionMismatch("change of basis matrix must be dim x dim");
    const RatMatrix pinv = inverse(p); // SingularMatrix if not invertible
    LieAlgebra out(g.name(), g.basis());
    Vec fa(n), fb(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < n; ++i) fa[i] = p.at(i, a);
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t i = 0; i < n; ++i) fb[i] = p.at(i, b);
            const Vec w = pinv.apply(g.bracket(fa, fb));
            for (std::size_t k = 0; k < n; ++k)
                if (!w[k].is_zero()) out.set_bracket(a, b, k, w[k]);
        }
    }
    return out;
}

} // namespace redhom
