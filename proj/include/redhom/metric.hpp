#pragma once

#include <cstddef>
#include <vector>

#include "redhom/connections.hpp"
#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/rat_matrix.hpp"
#include "redhom/reductive.hpp"
#include "redhom/report.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// Pseudo-metric on m: met(i,j) = <e_i, e_j> over m-positions. Symmetry,
// nondegeneracy and invariance are checked by validate_metric, not assumed.
using MetricTensor = RatMatrix;

// Violations:
//   "symmetry"   where = (i, j), m-positions with met(i,j) != met(j,i), i < j
//   "degenerate" where = ()      rank < mdim
//   "invariance" where = (u, i, j): u a global h-basis index, i <= j
//                m-positions with <[e_u,e_i],e_j> + <e_i,[e_u,e_j]> != 0
inline ValidationReport validate_metric(const LieAlgebra& g, const Decomposition& d,
                                        const MetricTensor& met) {
    if (d.dim() != g.dim())
        throw DimensionMismatch("decomposition dimension differs from algebra dimension");
    const std::size_t n = d.mdim();
    if (met.rows() != n || met.cols() != n)
        throw DimensionMismatch("metric must be mdim x mdim");
    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (met.at(i, j) != met.at(j, i))
                rep.add("symmetry", {i, j},
                        "met(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        met.at(i, j).str() + " but met(" + std::to_string(j) + "," +
                        std::to_string(i) + ") = " + met.at(j, i).str());
    if (rank(met) < n)
        rep.add("degenerate", {}, "metric matrix has rank " + std::to_string(rank(met)) +
                " < " + std::to_string(n));
    for (std::size_t u : d.h) {
        const RatMatrix act = detail::h_action_matrix(g, d, u);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational s;
                for (std::size_t m = 0; m < n; ++m) {
                    s += act.at(m, i) * met.at(m, j);
                    s += act.at(m, j) * met.at(i, m);
                }
                if (!s.is_zero())
                    rep.add("invariance", {u, i, j},
                            "<[" + g.basis_label(u) + "," + g.basis_label(d.m[i]) + "]," +
                            g.basis_label(d.m[j]) + "> + <" + g.basis_label(d.m[i]) + ",[" +
                            g.basis_label(u) + "," + g.basis_label(d.m[j]) + "]> = " + s.str());
            }
    }
    return rep;
}

// The algebraic Levi-Civita connection: for each pair (i,j) solve the Gram
// system  2 <alpha(e_i,e_j), e_k> = <e_i*e_j, e_k> - <e_i*e_k, e_j>
//                                   - <e_i, e_j*e_k>  over k.
inline AlphaTensor levi_civita_alpha(const LieAlgebra& g, const Decomposition& d,
                                     const MetricTensor& met) {
    detail::require_reductive(g, d, "levi_civita_alpha");
    const std::size_t n = d.mdim();
    if (met.rows() != n || met.cols() != n)
        throw DimensionMismatch("metric must be mdim x mdim");
    const Tensor3 b = binary_product(g, d);
    const Rational half(BigInt(1), BigInt(2));
    AlphaTensor alpha(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec rhs(n);
            for (std::size_t k = 0; k < n; ++k) {
                Rational s;
                for (std::size_t m = 0; m < n; ++m) {
                    s += b.at(i, j, m) * met.at(m, k);
                    s -= b.at(i, k, m) * met.at(m, j);
                    s -= b.at(j, k, m) * met.at(i, m);
                }
                rhs[k] = half * s;
            }
            const Vec x = solve_symmetric(met, rhs); // SingularMatrix if degenerate
            for (std::size_t k = 0; k < n; ++k) alpha.at(i, j, k) = x[k];
        }
    return alpha;
}

struct MetricFlags {
    bool torsion_free = false;             // torsion of the Levi-Civita alpha = 0
    bool skew_compatible = false;          // <alpha(x,y),z> + <y,alpha(x,z)> = 0
    bool naturally_reductive = false;      // <y*x,z> = <y,x*z>
    bool commutative_part_identity = false; // 2<mu(x,y),z> = <z*x,y> + <x,z*y>,
                                            // mu = alpha - (1/2) binary

    friend bool operator==(const MetricFlags&, const MetricFlags&) = default;
};

inline MetricFlags metric_report(const LieAlgebra& g, const Decomposition& d,
                                 const MetricTensor& met) {
    const std::size_t n = d.mdim();
    const AlphaTensor alpha = levi_civita_alpha(g, d, met);
    const Tensor3 b = binary_product(g, d);
    const Rational half(BigInt(1), BigInt(2));

    MetricFlags f;
    f.torsion_free = torsion(alpha, g, d).is_zero();

    f.skew_compatible = true;
    for (std::size_t i = 0; i < n && f.skew_compatible; ++i)
        for (std::size_t j = 0; j < n && f.skew_compatible; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s;
                for (std::size_t m = 0; m < n; ++m) {
                    s += alpha.at(i, j, m) * met.at(m, k);
                    s += alpha.at(i, k, m) * met.at(j, m);
                }
                if (!s.is_zero()) {
                    f.skew_compatible = false;
                    break;
                }
            }

    f.naturally_reductive = true;
    for (std::size_t x = 0; x < n && f.naturally_reductive; ++x)
        for (std::size_t y = 0; y < n && f.naturally_reductive; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Rational s;
                for (std::size_t m = 0; m < n; ++m) {
                    s += b.at(y, x, m) * met.at(m, z);
                    s -= b.at(x, z, m) * met.at(y, m);
                }
                if (!s.is_zero()) {
                    f.naturally_reductive = false;
                    break;
                }
            }

    f.commutative_part_identity = true;
    for (std::size_t i = 0; i < n && f.commutative_part_identity; ++i)
        for (std::size_t j = 0; j < n && f.commutative_part_identity; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s;
                for (std::size_t m = 0; m < n; ++m) {
                    const Rational mu = alpha.at(i, j, m) - half * b.at(i, j, m);
                    s += (mu + mu) * met.at(m, k);
                    s -= b.at(k, i, m) * met.at(m, j);
                    s -= b.at(k, j, m) * met.at(i, m);
                }
                if (!s.is_zero()) {
                    f.commutative_part_identity = false;
                    break;
                }
            }

    return f;
}

} // namespace redhom
