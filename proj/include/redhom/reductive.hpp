#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/report.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// Ordered splitting g = h (+) m by basis positions. Both lists are kept
// sorted ascending; together they must partition 0..dim-1.
struct Decomposition {
    std::vector<std::size_t> h;
    std::vector<std::size_t> m;

    Decomposition(std::size_t dim, std::vector<std::size_t> h_part, std::vector<std::size_t> m_part)
        : h(std::move(h_part)), m(std::move(m_part)) {
        std::sort(h.begin(), h.end());
        std::sort(m.begin(), m.end());
        std::vector<bool> seen(dim, false);
        for (const auto& part : {h, m})
            for (std::size_t i : part) {
                if (i >= dim)
                    throw IndexOutOfRange("decomposition index " + std::to_string(i) +
                                          " out of range for dimension " + std::to_string(dim));
                if (seen[i])
                    throw DuplicateEntry("decomposition index " + std::to_string(i) +
                                         " listed twice");
                seen[i] = true;
            }
        if (h.size() + m.size() != dim)
            throw BadParameter("decomposition does not cover every basis index");
    }

    // m defaults to the complement of h.
    static Decomposition from_h(std::size_t dim, std::vector<std::size_t> h_part) {
        std::sort(h_part.begin(), h_part.end());
        std::vector<bool> in_h(dim, false);
        for (std::size_t i : h_part) {
            if (i >= dim)
                throw IndexOutOfRange("decomposition index " + std::to_string(i) +
                                      " out of range for dimension " + std::to_string(dim));
            if (in_h[i])
                throw DuplicateEntry("decomposition index " + std::to_string(i) + " listed twice");
            in_h[i] = true;
        }
        std::vector<std::size_t> m_part;
        for (std::size_t i = 0; i < dim; ++i)
            if (!in_h[i]) m_part.push_back(i);
        return Decomposition(dim, std::move(h_part), std::move(m_part));
    }

    std::size_t dim() const { return h.size() + m.size(); }
    std::size_t mdim() const { return m.size(); }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Reductivity of the splitting: h a subalgebra ([h,h] in h) and m an
// h-module ([h,m] in m). Violations carry global basis indices:
//   "subalgebra" where = (a, b, k): [e_a, e_b] has m-component at e_k
//   "h_action"   where = (u, x, k): [e_u, e_x] has h-component at e_k
inline ValidationReport check_reductive(const LieAlgebra& g, const Decomposition& d) {
    if (d.dim() != g.dim())
        throw DimensionMismatch("decomposition dimension differs from algebra dimension");
    ValidationReport rep;
    for (std::size_t ai = 0; ai < d.h.size(); ++ai)
        for (std::size_t bi = ai + 1; bi < d.h.size(); ++bi)
            for (std::size_t k : d.m) {
                const Rational val = g.c(d.h[ai], d.h[bi], k);
                if (!val.is_zero())
                    rep.add("subalgebra", {d.h[ai], d.h[bi], k},
                            "[" + g.basis_label(d.h[ai]) + "," + g.basis_label(d.h[bi]) +
                            "] has " + g.basis_label(k) + "-component " + val.str());
            }
    for (std::size_t u : d.h)
        for (std::size_t x : d.m)
            for (std::size_t k : d.h) {
                const Rational val = g.c(u, x, k);
                if (!val.is_zero())
                    rep.add("h_action", {u, x, k},
                            "[" + g.basis_label(u) + "," + g.basis_label(x) +
                            "] has " + g.basis_label(k) + "-component " + val.str());
            }
    return rep;
}

namespace detail {

inline void require_reductive(const LieAlgebra& g, const Decomposition& d,
                              const std::string& what) {
    const ValidationReport rep = check_reductive(g, d);
    if (!rep.ok())
        throw NotReductive(what + " needs a reductive decomposition; first violation: " +
                           rep.violations.front().detail);
}

} // namespace detail

// Binary product on m: X * Y = m-part of [X, Y], indexed by m-positions.
inline Tensor3 binary_product(const LieAlgebra& g, const Decomposition& d) {
    detail::require_reductive(g, d, "binary_product");
    const std::size_t n = d.mdim();
    Tensor3 b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                b.at(i, j, k) = g.c(d.m[i], d.m[j], d.m[k]);
    return b;
}

// Ternary product on m: [X, Y, Z] = [h-part of [X, Y], Z], indexed by
// m-positions. t(i,j,k,l) = sum over a in h of c(m_i, m_j, a) c(a, m_k, m_l).
inline Tensor4 ternary_product(const LieAlgebra& g, const Decomposition& d) {
    detail::require_reductive(g, d, "ternary_product");
    const std::size_t n = d.mdim();
    Tensor4 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a : d.h) {
                const Rational w = g.c(d.m[i], d.m[j], a);
                if (w.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        const Rational act = g.c(a, d.m[k], d.m[l]);
                        if (!act.is_zero()) t.at(i, j, k, l) += w * act;
                    }
            }
    return t;
}

} // namespace redhom
