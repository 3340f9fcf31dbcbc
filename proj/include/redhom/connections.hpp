#pragma once

#include <cstddef>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/rat_matrix.hpp"
#include "redhom/reductive.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// Bilinear map on m: alpha(e_i, e_j) = sum_k a(i,j,k) e_k over m-positions.
// Any tensor is admissible; equivariance is a computed property.
using AlphaTensor = Tensor3;

struct ConnectionSpace {
    std::vector<AlphaTensor> basis;
    std::size_t dim = 0;
};

namespace detail {

// Action of e_u (u a global h-index) on m: column x holds the m-coordinates
// of [e_u, e_{m_x}].
inline RatMatrix h_action_matrix(const LieAlgebra& g, const Decomposition& d, std::size_t u) {
    const std::size_t n = d.mdim();
    RatMatrix a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k < n; ++k)
            a.at(k, x) = g.c(u, d.m[x], d.m[k]);
    return a;
}

// Rows of the infinitesimal equivariance system
//   ad_U(alpha(X,Y)) - alpha([U,X],Y) - alpha(X,[U,Y]) = 0
// on the mdim^3 unknowns a(i,j,k) flattened as (i*mdim + j)*mdim + k; one
// block of mdim^3 rows per h-basis element, blocks in d.h order.
inline RatMatrix equivariance_system(const LieAlgebra& g, const Decomposition& d) {
    const std::size_t n = d.mdim();
    RatMatrix sys(d.h.size() * n * n * n, n * n * n);
    const auto col = [n](std::size_t i, std::size_t j, std::size_t k) {
        return (i * n + j) * n + k;
    };
    for (std::size_t up = 0; up < d.h.size(); ++up) {
        const RatMatrix act = h_action_matrix(g, d, d.h[up]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const std::size_t row = up * n * n * n + col(i, j, k);
                    for (std::size_t m = 0; m < n; ++m) {
                        sys.at(row, col(i, j, m)) += act.at(k, m);
                        sys.at(row, col(m, j, k)) -= act.at(m, i);
                        sys.at(row, col(i, m, k)) -= act.at(m, j);
                    }
                }
    }
    return sys;
}

} // namespace detail

// All alpha tensors fixed by the infinitesimal h-action, as the null space
// of the equivariance system; basis order inherited from null_space_basis.
inline ConnectionSpace invariant_connection_space(const LieAlgebra& g, const Decomposition& d) {
    detail::require_reductive(g, d, "invariant_connection_space");
    const std::size_t n = d.mdim();
    const std::vector<Vec> kernel = null_space_basis(detail::equivariance_system(g, d));
    ConnectionSpace space;
    space.dim = kernel.size();
    for (const Vec& v : kernel) {
        AlphaTensor a(n);
        a.v.assign(v.begin(), v.end());
        space.basis.push_back(std::move(a));
    }
    return space;
}

inline bool is_equivariant(const AlphaTensor& alpha, const LieAlgebra& g, const Decomposition& d) {
    const std::size_t n = d.mdim();
    if (alpha.n != n)
        throw DimensionMismatch("alpha tensor size differs from mdim");
    for (std::size_t u : d.h) {
        const RatMatrix act = detail::h_action_matrix(g, d, u);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Rational s;
                    for (std::size_t m = 0; m < n; ++m) {
                        s += act.at(k, m) * alpha.at(i, j, m);
                        s -= act.at(m, i) * alpha.at(m, j, k);
                        s -= act.at(m, j) * alpha.at(i, m, k);
                    }
                    if (!s.is_zero()) return false;
                }
    }
    return true;
}

enum class DistinguishedKind { natural, canonical };

// natural: alpha = (1/2) X*Y ("canonical connection of the first kind");
// canonical: alpha = 0 ("canonical connection of the second kind").
inline AlphaTensor distinguished_alpha(DistinguishedKind kind, const LieAlgebra& g,
                                       const Decomposition& d) {
    detail::require_reductive(g, d, "distinguished_alpha");
    if (kind == DistinguishedKind::canonical) return AlphaTensor(d.mdim());
    AlphaTensor a = binary_product(g, d);
    const Rational half(BigInt(1), BigInt(2));
    for (Rational& x : a.v) x *= half;
    return a;
}

// T(X,Y) = alpha(X,Y) - alpha(Y,X) - X*Y.
inline Tensor3 torsion(const AlphaTensor& alpha, const LieAlgebra& g, const Decomposition& d) {
    const std::size_t n = d.mdim();
    if (alpha.n != n)
        throw DimensionMismatch("alpha tensor size differs from mdim");
    const Tensor3 b = binary_product(g, d);
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.at(i, j, k) = alpha.at(i, j, k) - alpha.at(j, i, k) - b.at(i, j, k);
    return t;
}

// R(X,Y)Z = alpha(X,alpha(Y,Z)) - alpha(Y,alpha(X,Z)) - alpha(X*Y,Z) - [X,Y,Z].
inline Tensor4 curvature(const AlphaTensor& alpha, const LieAlgebra& g, const Decomposition& d) {
    const std::size_t n = d.mdim();
    if (alpha.n != n)
        throw DimensionMismatch("alpha tensor size differs from mdim");
    const Tensor3 b = binary_product(g, d);
    const Tensor4 t = ternary_product(g, d);
    Tensor4 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s = -t.at(i, j, k, l);
                    for (std::size_t m = 0; m < n; ++m) {
                        s += alpha.at(j, k, m) * alpha.at(i, m, l);
                        s -= alpha.at(i, k, m) * alpha.at(j, m, l);
                        s -= b.at(i, j, m) * alpha.at(m, k, l);
                    }
                    r.at(i, j, k, l) = s;
                }
    return r;
}

struct ConnectionFlags {
    bool symmetric = false;      // torsion = 0
    bool flat = false;           // curvature = 0
    bool anticommutative = false; // alpha(x,x) = 0
    bool equivariant = false;    // alpha fixed by the h-action

    friend bool operator==(const ConnectionFlags&, const ConnectionFlags&) = default;
};

inline ConnectionFlags classify_connection(const AlphaTensor& alpha, const LieAlgebra& g,
                                           const Decomposition& d) {
    const std::size_t n = d.mdim();
    if (alpha.n != n)
        throw DimensionMismatch("alpha tensor size differs from mdim");
    ConnectionFlags f;
    f.symmetric = torsion(alpha, g, d).is_zero();
    f.flat = curvature(alpha, g, d).is_zero();
    f.anticommutative = true;
    for (std::size_t i = 0; i < n && f.anticommutative; ++i)
        for (std::size_t j = i; j < n && f.anticommutative; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alpha.at(i, j, k) + alpha.at(j, i, k)).is_zero()) {
                    f.anticommutative = false;
                    break;
                }
    f.equivariant = is_equivariant(alpha, g, d);
    return f;
}

} // namespace redhom
