#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"

namespace redhom {

namespace detail {

inline std::size_t parse_model_param(const std::string& id, const std::string& head,
                                     std::size_t lo, std::size_t hi) {
    const std::string text = id.substr(head.size() + 1);
    if (text.empty())
        throw BadParameter("model '" + head + "' needs a numeric parameter");
    std::size_t n = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9')
            throw BadParameter("bad parameter '" + text + "' for model '" + head + "'");
        n = n * 10 + static_cast<std::size_t>(ch - '0');
        if (n > hi) break;
    }
    if (n < lo || n > hi)
        throw BadParameter("parameter for model '" + head + "' must be in [" +
                           std::to_string(lo) + "," + std::to_string(hi) + "]");
    return n;
}

inline std::vector<std::string> numbered_labels(const std::string& stem, std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(stem + std::to_string(i));
    return labels;
}

} // namespace detail

// Built-in models, selected by name:
//   abelian:n  zero bracket on e1..en (1 <= n <= 10)
//   heis3      Heisenberg: [x,y] = z
//   so3        [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
//   sl2        [h,e] = 2e, [h,f] = -2f, [e,f] = h
//   e2         Euclidean motions: [r,x] = y, [r,y] = -x
//   su2        [X1,X2] = 2X3, [X2,X3] = 2X1, [X3,X1] = 2X2
//   so3xR      so3 plus a central e4
//   gl:n       matrix units Eab, [Eab,Ecd] = delta_bc Ead - delta_da Ecb (1 <= n <= 3)
inline LieAlgebra generate_model(const std::string& id) {
    const std::size_t colon = id.find(':');
    const std::string head = id.substr(0, colon);

    if (head == "abelian") {
        if (colon == std::string::npos)
            throw BadParameter("model 'abelian' needs a numeric parameter");
        const std::size_t n = detail::parse_model_param(id, head, 1, 10);
        return LieAlgebra(id, detail::numbered_labels("e", n));
    }
    if (head == "gl") {
        if (colon == std::string::npos)
            throw BadParameter("model 'gl' needs a numeric parameter");
        const std::size_t n = detail::parse_model_param(id, head, 1, 3);
        std::vector<std::string> labels;
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; b <= n; ++b)
                labels.push_back("E" + std::to_string(a) + std::to_string(b));
        LieAlgebra g(id, std::move(labels));
        const auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t d = 0; d < n; ++d) {
                        const std::size_t p = idx(a, b), q = idx(c, d);
                        if (p >= q) continue;
                        Vec w(n * n);
                        if (b == c) w[idx(a, d)] += Rational(1);
                        if (d == a) w[idx(c, b)] -= Rational(1);
                        for (std::size_t k = 0; k < n * n; ++k)
                            if (!w[k].is_zero()) g.set_bracket(p, q, k, w[k]);
                    }
        return g;
    }
    if (colon != std::string::npos)
        throw UnknownModel("unknown model '" + id + "'");

    if (head == "heis3") {
        LieAlgebra g(id, {"x", "y", "z"});
        g.set_bracket(0, 1, 2, Rational(1));
        return g;
    }
    if (head == "so3") {
        LieAlgebra g(id, {"e1", "e2", "e3"});
        g.set_bracket(0, 1, 2, Rational(1));
        g.set_bracket(1, 2, 0, Rational(1));
        g.set_bracket(0, 2, 1, Rational(-1));
        return g;
    }
    if (head == "sl2") {
        LieAlgebra g(id, {"h", "e", "f"});
        g.set_bracket(0, 1, 1, Rational(2));
        g.set_bracket(0, 2, 2, Rational(-2));
        g.set_bracket(1, 2, 0, Rational(1));
        return g;
    }
    if (head == "e2") {
        LieAlgebra g(id, {"r", "x", "y"});
        g.set_bracket(0, 1, 2, Rational(1));
        g.set_bracket(0, 2, 1, Rational(-1));
        return g;
    }
    if (head == "su2") {
        LieAlgebra g(id, {"X1", "X2", "X3"});
        g.set_bracket(0, 1, 2, Rational(2));
        g.set_bracket(1, 2, 0, Rational(2));
        g.set_bracket(0, 2, 1, Rational(-2));
        return g;
    }
    if (head == "so3xR") {
        LieAlgebra g(id, {"e1", "e2", "e3", "e4"});
        g.set_bracket(0, 1, 2, Rational(1));
        g.set_bracket(1, 2, 0, Rational(1));
        g.set_bracket(0, 2, 1, Rational(-1));
        return g;
    }
    throw UnknownModel("unknown model '" + id + "'");
}

} // namespace redhom
