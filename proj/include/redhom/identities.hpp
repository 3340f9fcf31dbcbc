#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "redhom/connections.hpp"
#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/models.hpp"
#include "redhom/rational.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

inline Vec alpha_apply(const AlphaTensor& alpha, const Vec& x, const Vec& y) {
    const std::size_t n = alpha.n;
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("alpha argument length differs from tensor size");
    Vec z(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Rational w = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!alpha.at(i, j, k).is_zero()) z[k] += w * alpha.at(i, j, k);
        }
    }
    return z;
}

// (x,y,z) = alpha(alpha(x,y),z) - alpha(x,alpha(y,z)).
inline Vec associator(const AlphaTensor& alpha, const Vec& x, const Vec& y, const Vec& z) {
    const Vec lhs = alpha_apply(alpha, alpha_apply(alpha, x, y), z);
    const Vec rhs = alpha_apply(alpha, x, alpha_apply(alpha, y, z));
    Vec out(alpha.n);
    for (std::size_t k = 0; k < alpha.n; ++k) out[k] = lhs[k] - rhs[k];
    return out;
}

// Antisymmetrization alpha^-(x,y) = alpha(x,y) - alpha(y,x) as a tensor.
inline Tensor3 alpha_minus(const AlphaTensor& alpha) {
    const std::size_t n = alpha.n;
    Tensor3 m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                m.at(i, j, k) = alpha.at(i, j, k) - alpha.at(j, i, k);
    return m;
}

// Flags, each with the lexicographically first violating basis tuple when
// false (empty when true):
//   associative     (i,j,k,l): associator component
//   flexible        (i,j,k,l): assoc(i,j,k) + assoc(k,j,i) at l
//   left_symmetric  (i,j,k,l): assoc(i,j,k) - assoc(j,i,k) at l
//   lie_admissible  (i,j,k,m): Jacobi of alpha^- (anticommutativity is
//                              structural for alpha^-)
//   ad_derivation   (i,j,k,l): alpha^-(e_i, alpha(e_j,e_k)) vs derivation rule
struct IdentityReport {
    bool lie_admissible = true;
    bool flexible = true;
    bool left_symmetric = true;
    bool associative = true;
    bool ad_derivation = true;
    std::vector<std::size_t> lie_admissible_witness;
    std::vector<std::size_t> flexible_witness;
    std::vector<std::size_t> left_symmetric_witness;
    std::vector<std::size_t> associative_witness;
    std::vector<std::size_t> ad_derivation_witness;
};

inline IdentityReport identity_report(const AlphaTensor& alpha) {
    const std::size_t n = alpha.n;
    IdentityReport rep;

    // Associator on basis triples: A(i,j,k,l) = component l of (e_i,e_j,e_k).
    Tensor4 assoc(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s;
                    for (std::size_t m = 0; m < n; ++m) {
                        s += alpha.at(i, j, m) * alpha.at(m, k, l);
                        s -= alpha.at(j, k, m) * alpha.at(i, m, l);
                    }
                    assoc.at(i, j, k, l) = s;
                }

    for (std::size_t i = 0; i < n && rep.associative; ++i)
        for (std::size_t j = 0; j < n && rep.associative; ++j)
            for (std::size_t k = 0; k < n && rep.associative; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!assoc.at(i, j, k, l).is_zero()) {
                        rep.associative = false;
                        rep.associative_witness = {i, j, k, l};
                        break;
                    }

    for (std::size_t i = 0; i < n && rep.flexible; ++i)
        for (std::size_t j = 0; j < n && rep.flexible; ++j)
            for (std::size_t k = 0; k < n && rep.flexible; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!(assoc.at(i, j, k, l) + assoc.at(k, j, i, l)).is_zero()) {
                        rep.flexible = false;
                        rep.flexible_witness = {i, j, k, l};
                        break;
                    }

    for (std::size_t i = 0; i < n && rep.left_symmetric; ++i)
        for (std::size_t j = 0; j < n && rep.left_symmetric; ++j)
            for (std::size_t k = 0; k < n && rep.left_symmetric; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!(assoc.at(i, j, k, l) - assoc.at(j, i, k, l)).is_zero()) {
                        rep.left_symmetric = false;
                        rep.left_symmetric_witness = {i, j, k, l};
                        break;
                    }

    const Tensor3 cm = alpha_minus(alpha);
    const auto cmc = [&cm](std::size_t i, std::size_t j, std::size_t k) { return cm.at(i, j, k); };
    for (std::size_t i = 0; i < n && rep.lie_admissible; ++i)
        for (std::size_t j = 0; j < n && rep.lie_admissible; ++j)
            for (std::size_t k = 0; k < n && rep.lie_admissible; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    if (!detail::jacobi_sum(cmc, n, i, j, k, m).is_zero()) {
                        rep.lie_admissible = false;
                        rep.lie_admissible_witness = {i, j, k, m};
                        break;
                    }
                }

    // ad^-_x as a derivation of alpha:
    // alpha^-(e_i, alpha(e_j,e_k)) = alpha(alpha^-(e_i,e_j), e_k)
    //                              + alpha(e_j, alpha^-(e_i,e_k)).
    for (std::size_t i = 0; i < n && rep.ad_derivation; ++i)
        for (std::size_t j = 0; j < n && rep.ad_derivation; ++j)
            for (std::size_t k = 0; k < n && rep.ad_derivation; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s;
                    for (std::size_t m = 0; m < n; ++m) {
                        s += alpha.at(j, k, m) * cm.at(i, m, l);
                        s -= cm.at(i, j, m) * alpha.at(m, k, l);
                        s -= cm.at(i, k, m) * alpha.at(j, m, l);
                    }
                    if (!s.is_zero()) {
                        rep.ad_derivation = false;
                        rep.ad_derivation_witness = {i, j, k, l};
                        break;
                    }
                }

    return rep;
}

namespace detail {

// Gaussian rational a + b*i; just enough arithmetic for 2x2 matrix work.
struct GaussianRational {
    Rational re, im;

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// Row-major 2x2 complex matrix.
using CMat2 = std::array<GaussianRational, 4>;

inline CMat2 cmul(const CMat2& a, const CMat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline CMat2 cscale(const GaussianRational& s, const CMat2& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

inline CMat2 csub(const CMat2& a, const CMat2& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline GaussianRational ctrace(const CMat2& a) { return a[0] + a[3]; }

} // namespace detail

// The mu-family on su(2) with mu = 1/2 + b*i (the real part is forced by
// mu + conj(mu) = 1, so only b is an input):
//   alpha(X,Y) = mu*XY - conj(mu)*YX - ((mu - conj(mu))/n) * trace(XY) * Id
// expanded exactly on the basis X1 = diag(i,-i), X2 = [[0,1],[-1,0]],
// X3 = [[0,i],[i,0]] and re-expressed in that basis; the result is
// real-rational. Only n = 2 is supported.
inline std::pair<LieAlgebra, AlphaTensor> su_n_mu_algebra(std::size_t n, const Rational& b) {
    if (n != 2)
        throw BadParameter("su_n_mu_algebra supports only n = 2");
    using detail::CMat2;
    using detail::GaussianRational;

    const Rational zero(0), one(1);
    const std::array<CMat2, 3> basis = {{
        // X1 = diag(i, -i)
        {{{zero, one}, {zero, zero}, {zero, zero}, {zero, -one}}},
        // X2 = [[0, 1], [-1, 0]]
        {{{zero, zero}, {one, zero}, {-one, zero}, {zero, zero}}},
        // X3 = [[0, i], [i, 0]]
        {{{zero, zero}, {zero, one}, {zero, one}, {zero, zero}}},
    }};

    const Rational half(BigInt(1), BigInt(2));
    const GaussianRational mu{half, b};
    const GaussianRational mubar{half, -b};
    const GaussianRational tr_factor{zero, b}; // (mu - mubar) / n for n = 2

    // Exact coordinates of an su(2) matrix in the X-basis, read off the
    // entries and then verified by reconstruction; a mismatch means the
    // product left su(2), which the trace correction is supposed to prevent.
    const auto coords = [&](const CMat2& m) -> std::array<Rational, 3> {
        const std::array<Rational, 3> x = {m[0].im, m[1].re, m[1].im};
        CMat2 sum{};
        for (std::size_t k = 0; k < 3; ++k) {
            const CMat2 part = detail::cscale({x[k], zero}, basis[k]);
            for (std::size_t e = 0; e < 4; ++e) sum[e] = sum[e] + part[e];
        }
        const CMat2 diff = detail::csub(sum, m);
        for (const GaussianRational& e : diff)
            if (!e.is_zero())
                throw Error("su_n_mu_algebra: matrix escapes the su(2) basis");
        return x;
    };

    AlphaTensor alpha(3);
    const CMat2 id = {{{one, zero}, {zero, zero}, {zero, zero}, {one, zero}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const CMat2 xy = detail::cmul(basis[i], basis[j]);
            const CMat2 yx = detail::cmul(basis[j], basis[i]);
            CMat2 m = detail::csub(detail::cscale(mu, xy), detail::cscale(mubar, yx));
            m = detail::csub(m, detail::cscale(tr_factor * detail::ctrace(xy), id));
            const std::array<Rational, 3> x = coords(m);
            for (std::size_t k = 0; k < 3; ++k)
                if (!x[k].is_zero()) alpha.at(i, j, k) = x[k];
        }
    return {generate_model("su2"), std::move(alpha)};
}

} // namespace redhom
