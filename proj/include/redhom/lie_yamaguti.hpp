#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/rat_matrix.hpp"
#include "redhom/reductive.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// A binary product x*y and a ternary product [x,y,z] on one space, given by
// tensors: e_i*e_j = sum_k binary(i,j,k) e_k, [e_i,e_j,e_k] = sum_l
// ternary(i,j,k,l) e_l. The LY1..LY6 axioms are checked, not assumed.
struct LieYamaguti {
    std::size_t dim = 0;
    Tensor3 binary;
    Tensor4 ternary;

    LieYamaguti(Tensor3 b, Tensor4 t) : dim(b.n), binary(std::move(b)), ternary(std::move(t)) {
        if (ternary.n != dim)
            throw DimensionMismatch("binary and ternary tensors disagree on dimension");
    }

    friend bool operator==(const LieYamaguti&, const LieYamaguti&) = default;
};

inline LieYamaguti lie_yamaguti(const LieAlgebra& g, const Decomposition& d) {
    return LieYamaguti(binary_product(g, d), ternary_product(g, d));
}

struct LyAxiomResult {
    std::string axiom; // "LY1".."LY6"
    bool pass = true;
    std::vector<std::size_t> witness; // first violating tuple, empty on pass
};

struct LyReport {
    std::array<LyAxiomResult, 6> axioms;

    bool all_pass() const {
        for (const LyAxiomResult& a : axioms)
            if (!a.pass) return false;
        return true;
    }
};

// Checks the six axioms on basis tuples (multilinearity makes that
// equivalent to the universally quantified statements) and records the
// lexicographically first witness of each failure:
//   LY1  x*x = 0                    witness (i,j,k):   b(i,j,k) + b(j,i,k) != 0
//   LY2  [x,x,y] = 0                witness (i,j,k,l): t(i,j,k,l) + t(j,i,k,l) != 0
//   LY3  cyclic([x,y,z] + (x*y)*z)  witness (i,j,k,l)
//   LY4  cyclic([x*y, z, w])        witness (i,j,k,w,l), cyclic in (i,j,k)
//   LY5  [x,y,u*v] = [x,y,u]*v + u*[x,y,v]            witness (i,j,u,v,l)
//   LY6  [x,y,[u,v,w]] = [[x,y,u],v,w] + [u,[x,y,v],w] + [u,v,[x,y,w]]
//                                                     witness (i,j,u,v,w,l)
inline LyReport ly_axiom_report(const LieYamaguti& ly) {
    const std::size_t n = ly.dim;
    const Tensor3& b = ly.binary;
    const Tensor4& t = ly.ternary;
    LyReport rep;
    for (std::size_t a = 0; a < 6; ++a) rep.axioms[a].axiom = "LY" + std::to_string(a + 1);

    const auto fail = [&rep](std::size_t axiom, std::vector<std::size_t> w) {
        LyAxiomResult& r = rep.axioms[axiom - 1];
        if (!r.pass) return;
        r.pass = false;
        r.witness = std::move(w);
    };

    for (std::size_t i = 0; i < n && rep.axioms[0].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[0].pass; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(b.at(i, j, k) + b.at(j, i, k)).is_zero()) {
                    fail(1, {i, j, k});
                    break;
                }

    for (std::size_t i = 0; i < n && rep.axioms[1].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[1].pass; ++j)
            for (std::size_t k = 0; k < n && rep.axioms[1].pass; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (!(t.at(i, j, k, l) + t.at(j, i, k, l)).is_zero()) {
                        fail(2, {i, j, k, l});
                        break;
                    }

    for (std::size_t i = 0; i < n && rep.axioms[2].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[2].pass; ++j)
            for (std::size_t k = 0; k < n && rep.axioms[2].pass; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Rational s;
                    const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                    for (const auto& p : cyc) {
                        s += t.at(p[0], p[1], p[2], l);
                        for (std::size_t m = 0; m < n; ++m)
                            s += b.at(p[0], p[1], m) * b.at(m, p[2], l);
                    }
                    if (!s.is_zero()) {
                        fail(3, {i, j, k, l});
                        break;
                    }
                }

    for (std::size_t i = 0; i < n && rep.axioms[3].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[3].pass; ++j)
            for (std::size_t k = 0; k < n && rep.axioms[3].pass; ++k)
                for (std::size_t w = 0; w < n && rep.axioms[3].pass; ++w)
                    for (std::size_t l = 0; l < n; ++l) {
                        Rational s;
                        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                        for (const auto& p : cyc)
                            for (std::size_t m = 0; m < n; ++m)
                                s += b.at(p[0], p[1], m) * t.at(m, p[2], w, l);
                        if (!s.is_zero()) {
                            fail(4, {i, j, k, w, l});
                            break;
                        }
                    }

    for (std::size_t i = 0; i < n && rep.axioms[4].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[4].pass; ++j)
            for (std::size_t u = 0; u < n && rep.axioms[4].pass; ++u)
                for (std::size_t v = 0; v < n && rep.axioms[4].pass; ++v)
                    for (std::size_t l = 0; l < n; ++l) {
                        Rational s;
                        for (std::size_t m = 0; m < n; ++m) {
                            s += b.at(u, v, m) * t.at(i, j, m, l);
                            s -= t.at(i, j, u, m) * b.at(m, v, l);
                            s -= b.at(u, m, l) * t.at(i, j, v, m);
                        }
                        if (!s.is_zero()) {
                            fail(5, {i, j, u, v, l});
                            break;
                        }
                    }

    for (std::size_t i = 0; i < n && rep.axioms[5].pass; ++i)
        for (std::size_t j = 0; j < n && rep.axioms[5].pass; ++j)
            for (std::size_t u = 0; u < n && rep.axioms[5].pass; ++u)
                for (std::size_t v = 0; v < n && rep.axioms[5].pass; ++v)
                    for (std::size_t w = 0; w < n && rep.axioms[5].pass; ++w)
                        for (std::size_t l = 0; l < n; ++l) {
                            Rational s;
                            for (std::size_t m = 0; m < n; ++m) {
                                s += t.at(u, v, w, m) * t.at(i, j, m, l);
                                s -= t.at(i, j, u, m) * t.at(m, v, w, l);
                                s -= t.at(i, j, v, m) * t.at(u, m, w, l);
                                s -= t.at(i, j, w, m) * t.at(u, v, m, l);
                            }
                            if (!s.is_zero()) {
                                fail(6, {i, j, u, v, w, l});
                                break;
                            }
                        }

    return rep;
}

struct Envelope {
    LieAlgebra algebra;
    Decomposition decomposition;
};

// Standard enveloping algebra: h = span of the inner maps D(e_i,e_j) =
// [e_i,e_j,-] inside End(m), with a deterministic basis extracted by rref of
// the n^2 generators (flattened row-major, generators ordered by (i,j)), and
// g = h (+) m with
//   [D, D'] = D D' - D' D,   [D, x] = D(x),   [x, y] = D(x,y) + x*y.
// Basis labels: D1..Dr for h, X1..Xn for m.
inline Envelope standard_envelope(const LieYamaguti& ly) {
    const LyReport axioms = ly_axiom_report(ly);
    if (!axioms.all_pass()) {
        std::string failed;
        for (const LyAxiomResult& a : axioms.axioms)
            if (!a.pass) failed += (failed.empty() ? "" : ", ") + a.axiom;
        throw AxiomsViolated("standard_envelope input violates " + failed);
    }

    const std::size_t n = ly.dim;
    const Tensor4& t = ly.ternary;

    // Generator D(e_i,e_j) as a flat row: entry l*n + k holds the
    // e_l-component of [e_i, e_j, e_k].
    RatMatrix gens(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    gens.at(i * n + j, l * n + k) = t.at(i, j, k, l);

    const RrefResult span = rref(gens);
    const std::size_t r = span.pivots.size();

    // Coordinates in the rref row basis: read off pivot columns, then insist
    // on exact reconstruction (the axioms guarantee closure of all brackets).
    const auto coords = [&](const Vec& v) -> Vec {
        Vec x(r);
        for (std::size_t a = 0; a < r; ++a) x[a] = v[span.pivots[a]];
        for (std::size_t c = 0; c < n * n; ++c) {
            Rational rec;
            for (std::size_t a = 0; a < r; ++a)
                if (!x[a].is_zero()) rec += x[a] * span.r.at(a, c);
            if (rec != v[c])
                throw Error("standard_envelope: vector escapes the D-span");
        }
        return x;
    };

    // h-basis elements as matrices on m.
    std::vector<RatMatrix> dmat(r, RatMatrix(n, n));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t k = 0; k < n; ++k)
                dmat[a].at(l, k) = span.r.at(a, l * n + k);

    const auto flatten = [n](const RatMatrix& m) {
        Vec f(n * n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t k = 0; k < n; ++k) f[l * n + k] = m.at(l, k);
        return f;
    };

    std::vector<std::string> labels;
    for (std::size_t a = 1; a <= r; ++a) labels.push_back("D" + std::to_string(a));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
    LieAlgebra env("envelope", std::move(labels));

    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b) {
            const Vec x = coords(flatten(dmat[a] * dmat[b] - dmat[b] * dmat[a]));
            for (std::size_t k = 0; k < r; ++k)
                if (!x[k].is_zero()) env.set_bracket(a, b, k, x[k]);
        }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (!dmat[a].at(l, i).is_zero())
                    env.set_bracket(a, r + i, r + l, dmat[a].at(l, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec gen(n * n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) gen[l * n + k] = t.at(i, j, k, l);
            const Vec x = coords(gen);
            for (std::size_t a = 0; a < r; ++a)
                if (!x[a].is_zero()) env.set_bracket(r + i, r + j, a, x[a]);
            for (std::size_t l = 0; l < n; ++l)
                if (!ly.binary.at(i, j, l).is_zero())
                    env.set_bracket(r + i, r + j, r + l, ly.binary.at(i, j, l));
        }

    std::vector<std::size_t> h_idx, m_idx;
    for (std::size_t a = 0; a < r; ++a) h_idx.push_back(a);
    for (std::size_t i = 0; i < n; ++i) m_idx.push_back(r + i);
    return Envelope{std::move(env), Decomposition(r + n, std::move(h_idx), std::move(m_idx))};
}

} // namespace redhom
