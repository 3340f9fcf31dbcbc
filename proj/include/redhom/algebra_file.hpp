#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "redhom/errors.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/metric.hpp"
#include "redhom/rational.hpp"
#include "redhom/reductive.hpp"
#include "redhom/report.hpp"
#include "redhom/tensor.hpp"

namespace redhom {

// Parsed algebra file. h and m are resolved to an explicit partition (the
// file may omit either or both; missing m is the complement of h, missing h
// is empty). Tensors alpha/binary/ternary are indexed by m-positions.
struct AlgebraFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    bool has_brackets = false;
    LieAlgebra algebra; // zero brackets when has_brackets is false
    std::vector<std::size_t> h;
    std::vector<std::size_t> m;
    std::optional<MetricTensor> metric;
    std::optional<Tensor3> alpha;
    std::optional<Tensor3> binary;
    std::optional<Tensor4> ternary;

    std::size_t mdim() const { return m.size(); }
    Decomposition decomposition() const { return Decomposition(dim, h, m); }

    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline std::size_t parse_index(const Json& v, std::size_t bound, const std::string& what) {
    if (!v.is_number_integer() || v.is_number_float())
        throw ParseError(what + " must be an integer");
    const long long i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
        throw IndexOutOfRange(what + " " + std::to_string(i) + " out of range (dimension " +
                              std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
}

inline Rational parse_rational_entry(const Json& v, const std::string& what) {
    if (!v.is_string())
        throw ParseError(what + " must be a rational string like \"1/2\"");
    return Rational::parse(v.get<std::string>());
}

inline std::vector<std::size_t> parse_index_list(const Json& arr, std::size_t dim,
                                                 const std::string& what) {
    if (!arr.is_array())
        throw ParseError(what + " must be an array of basis indices");
    std::vector<std::size_t> out;
    std::vector<bool> seen(dim, false);
    for (const Json& v : arr) {
        const std::size_t i = parse_index(v, dim, what + " index");
        if (seen[i])
            throw DuplicateEntry(what + " index " + std::to_string(i) + " listed twice");
        seen[i] = true;
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Sparse rank-3 entries [i, j, k, "p/q"].
inline Tensor3 parse_sparse3(const Json& arr, std::size_t n, const std::string& what) {
    if (!arr.is_array())
        throw ParseError(what + " must be an array of [i, j, k, value] entries");
    Tensor3 t(n);
    std::vector<bool> seen(n * n * n, false);
    for (const Json& e : arr) {
        if (!e.is_array() || e.size() != 4)
            throw ParseError(what + " entries must be [i, j, k, value]");
        const std::size_t i = parse_index(e[0], n, what + " index");
        const std::size_t j = parse_index(e[1], n, what + " index");
        const std::size_t k = parse_index(e[2], n, what + " index");
        const std::size_t flat = (i * n + j) * n + k;
        if (seen[flat])
            throw DuplicateEntry(what + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ") listed twice");
        seen[flat] = true;
        t.at(i, j, k) = parse_rational_entry(e[3], what + " value");
    }
    return t;
}

// Sparse rank-4 entries [i, j, k, l, "p/q"].
inline Tensor4 parse_sparse4(const Json& arr, std::size_t n, const std::string& what) {
    if (!arr.is_array())
        throw ParseError(what + " must be an array of [i, j, k, l, value] entries");
    Tensor4 t(n);
    std::vector<bool> seen(n * n * n * n, false);
    for (const Json& e : arr) {
        if (!e.is_array() || e.size() != 5)
            throw ParseError(what + " entries must be [i, j, k, l, value]");
        const std::size_t i = parse_index(e[0], n, what + " index");
        const std::size_t j = parse_index(e[1], n, what + " index");
        const std::size_t k = parse_index(e[2], n, what + " index");
        const std::size_t l = parse_index(e[3], n, what + " index");
        const std::size_t flat = ((i * n + j) * n + k) * n + l;
        if (seen[flat])
            throw DuplicateEntry(what + " entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + "," +
                                 std::to_string(l) + ") listed twice");
        seen[flat] = true;
        t.at(i, j, k, l) = parse_rational_entry(e[4], what + " value");
    }
    return t;
}

inline Json sparse3_json(const Tensor3& t) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                if (!t.at(i, j, k).is_zero())
                    arr.push_back(Json::array({i, j, k, t.at(i, j, k).str()}));
    return arr;
}

inline Json sparse4_json(const Tensor4& t) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                for (std::size_t l = 0; l < t.n; ++l)
                    if (!t.at(i, j, k, l).is_zero())
                        arr.push_back(Json::array({i, j, k, l, t.at(i, j, k, l).str()}));
    return arr;
}

} // namespace detail

// Strict parse of the JSON algebra file format; unknown keys are rejected.
// Bracket entries {"i": i, "j": j, "c": [[k, "p/q"], ...]} require i < j
// (NonCanonicalPair otherwise); duplicate pairs or components are
// DuplicateEntry; indices out of range are IndexOutOfRange.
inline AlgebraFile parse_algebra_file(const std::string& text) {
    using detail::Json;
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("algebra file must be a JSON object");

    static const std::vector<std::string> known = {
        "name", "dim", "basis", "brackets", "h", "m", "metric", "alpha", "binary", "ternary"};
    for (const auto& item : root.items()) {
        bool ok = false;
        for (const std::string& k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw ParseError("unknown key '" + item.key() + "'");
    }
    for (const std::string k : {"name", "dim", "basis"})
        if (!root.contains(k)) throw ParseError("missing required key '" + k + "'");

    AlgebraFile f;
    if (!root["name"].is_string())
        throw ParseError("'name' must be a string");
    f.name = root["name"].get<std::string>();
    if (!root["dim"].is_number_integer() || root["dim"].get<long long>() < 1)
        throw ParseError("'dim' must be a positive integer");
    f.dim = root["dim"].get<std::size_t>();
    if (!root["basis"].is_array() || root["basis"].size() != f.dim)
        throw ParseError("'basis' must be an array of dim labels");
    for (const Json& b : root["basis"]) {
        if (!b.is_string()) throw ParseError("basis labels must be strings");
        f.basis.push_back(b.get<std::string>());
    }

    f.algebra = LieAlgebra(f.name, f.basis);
    if (root.contains("brackets")) {
        f.has_brackets = true;
        const Json& brs = root["brackets"];
        if (!brs.is_array()) throw ParseError("'brackets' must be an array");
        std::vector<bool> seen_pair(f.dim * f.dim, false);
        for (const Json& e : brs) {
            if (!e.is_object()) throw ParseError("bracket entries must be objects");
            for (const auto& item : e.items())
                if (item.key() != "i" && item.key() != "j" && item.key() != "c")
                    throw ParseError("unknown key '" + item.key() + "' in bracket entry");
            for (const std::string k : {"i", "j", "c"})
                if (!e.contains(k))
                    throw ParseError("bracket entry missing key '" + k + "'");
            const std::size_t i = detail::parse_index(e["i"], f.dim, "bracket index i");
            const std::size_t j = detail::parse_index(e["j"], f.dim, "bracket index j");
            if (i >= j)
                throw NonCanonicalPair("bracket entry requires i < j, got (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
            if (seen_pair[i * f.dim + j])
                throw DuplicateEntry("bracket pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") listed twice");
            seen_pair[i * f.dim + j] = true;
            if (!e["c"].is_array())
                throw ParseError("bracket component list 'c' must be an array");
            std::vector<bool> seen_k(f.dim, false);
            for (const Json& comp : e["c"]) {
                if (!comp.is_array() || comp.size() != 2)
                    throw ParseError("bracket components must be [k, value] pairs");
                const std::size_t k = detail::parse_index(comp[0], f.dim, "bracket component");
                if (seen_k[k])
                    throw DuplicateEntry("bracket component " + std::to_string(k) +
                                         " listed twice in pair (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
                seen_k[k] = true;
                f.algebra.set_bracket(i, j, k,
                                      detail::parse_rational_entry(comp[1], "bracket value"));
            }
        }
    }

    const bool has_h = root.contains("h");
    const bool has_m = root.contains("m");
    if (has_h) f.h = detail::parse_index_list(root["h"], f.dim, "'h'");
    if (has_m) f.m = detail::parse_index_list(root["m"], f.dim, "'m'");
    if (has_h && has_m) {
        std::vector<bool> covered(f.dim, false);
        for (std::size_t i : f.h) covered[i] = true;
        for (std::size_t i : f.m) {
            if (covered[i])
                throw DuplicateEntry("index " + std::to_string(i) + " in both h and m");
            covered[i] = true;
        }
        for (std::size_t i = 0; i < f.dim; ++i)
            if (!covered[i])
                throw ParseError("h and m do not partition the basis: index " +
                                 std::to_string(i) + " missing");
    } else if (has_h || !has_m) {
        // m defaults to the complement of h (h itself defaults to empty).
        std::vector<bool> in_h(f.dim, false);
        for (std::size_t i : f.h) in_h[i] = true;
        for (std::size_t i = 0; i < f.dim; ++i)
            if (!in_h[i]) f.m.push_back(i);
    } else {
        // m given, h absent: h is the complement of m.
        std::vector<bool> in_m(f.dim, false);
        for (std::size_t i : f.m) in_m[i] = true;
        for (std::size_t i = 0; i < f.dim; ++i)
            if (!in_m[i]) f.h.push_back(i);
    }

    const std::size_t n = f.mdim();
    if (root.contains("metric")) {
        const Json& met = root["metric"];
        if (!met.is_array() || met.size() != n)
            throw ParseError("'metric' must be an mdim x mdim array of rational strings");
        MetricTensor gmat(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            const Json& row = met[r];
            if (!row.is_array() || row.size() != n)
                throw ParseError("'metric' must be an mdim x mdim array of rational strings");
            for (std::size_t c = 0; c < n; ++c)
                gmat.at(r, c) = detail::parse_rational_entry(row[c], "metric entry");
        }
        f.metric = std::move(gmat);
    }
    if (root.contains("alpha")) f.alpha = detail::parse_sparse3(root["alpha"], n, "'alpha'");
    if (root.contains("binary")) f.binary = detail::parse_sparse3(root["binary"], n, "'binary'");
    if (root.contains("ternary")) f.ternary = detail::parse_sparse4(root["ternary"], n, "'ternary'");
    return f;
}

// Deterministic canonical form: fixed key order, brackets sorted by (i, j)
// with components sorted by k, resolved h/m always emitted, optional
// sections only when present.
inline std::string serialize_algebra_file(const AlgebraFile& f) {
    using detail::Json;
    Json root;
    root["name"] = f.name;
    root["dim"] = f.dim;
    root["basis"] = f.basis;
    if (f.has_brackets) {
        Json brs = Json::array();
        for (std::size_t i = 0; i < f.dim; ++i)
            for (std::size_t j = i + 1; j < f.dim; ++j) {
                Json comps = Json::array();
                for (std::size_t k = 0; k < f.dim; ++k) {
                    const Rational v = f.algebra.c(i, j, k);
                    if (!v.is_zero()) comps.push_back(Json::array({k, v.str()}));
                }
                if (!comps.empty()) {
                    Json e;
                    e["i"] = i;
                    e["j"] = j;
                    e["c"] = std::move(comps);
                    brs.push_back(std::move(e));
                }
            }
        root["brackets"] = std::move(brs);
    }
    root["h"] = f.h;
    root["m"] = f.m;
    if (f.metric) {
        Json met = Json::array();
        for (std::size_t r = 0; r < f.metric->rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < f.metric->cols(); ++c)
                row.push_back(f.metric->at(r, c).str());
            met.push_back(std::move(row));
        }
        root["metric"] = std::move(met);
    }
    if (f.alpha) root["alpha"] = detail::sparse3_json(*f.alpha);
    if (f.binary) root["binary"] = detail::sparse3_json(*f.binary);
    if (f.ternary) root["ternary"] = detail::sparse4_json(*f.ternary);
    return root.dump(2) + "\n";
}

// When a file carries both brackets and explicit binary/ternary sections,
// the sections must agree with the products computed from the brackets.
inline ValidationReport check_file_consistency(const AlgebraFile& f) {
    ValidationReport rep;
    if (!f.has_brackets || (!f.binary && !f.ternary)) return rep;
    const Decomposition d = f.decomposition();
    if (!check_reductive(f.algebra, d).ok()) {
        rep.add("consistency", {},
                "binary/ternary sections require a reductive decomposition");
        return rep;
    }
    if (f.binary) {
        const Tensor3 b = binary_product(f.algebra, d);
        for (std::size_t i = 0; i < b.n; ++i)
            for (std::size_t j = 0; j < b.n; ++j)
                for (std::size_t k = 0; k < b.n; ++k)
                    if (f.binary->at(i, j, k) != b.at(i, j, k))
                        rep.add("binary_mismatch", {i, j, k},
                                "file has " + f.binary->at(i, j, k).str() +
                                ", brackets give " + b.at(i, j, k).str());
    }
    if (f.ternary) {
        const Tensor4 t = ternary_product(f.algebra, d);
        for (std::size_t i = 0; i < t.n; ++i)
            for (std::size_t j = 0; j < t.n; ++j)
                for (std::size_t k = 0; k < t.n; ++k)
                    for (std::size_t l = 0; l < t.n; ++l)
                        if (f.ternary->at(i, j, k, l) != t.at(i, j, k, l))
                            rep.add("ternary_mismatch", {i, j, k, l},
                                    "file has " + f.ternary->at(i, j, k, l).str() +
                                    ", brackets give " + t.at(i, j, k, l).str());
    }
    return rep;
}

} // namespace redhom
