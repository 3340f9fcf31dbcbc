#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "redhom/algebra_file.hpp"
#include "redhom/connections.hpp"
#include "redhom/errors.hpp"
#include "redhom/identities.hpp"
#include "redhom/lie_algebra.hpp"
#include "redhom/lie_yamaguti.hpp"
#include "redhom/matrix_numeric.hpp"
#include "redhom/metric.hpp"
#include "redhom/models.hpp"
#include "redhom/reductive.hpp"

namespace redhom::cli {

namespace detail {

using Json = nlohmann::ordered_json;
using redhom::detail::sparse3_json;
using redhom::detail::sparse4_json;

inline Json violations_json(const ValidationReport& rep) {
    Json arr = Json::array();
    for (const Violation& v : rep.violations) {
        Json e;
        e["kind"] = v.kind;
        e["where"] = v.where;
        e["detail"] = v.detail;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline Json report_json(const ValidationReport& rep) {
    Json j;
    j["ok"] = rep.ok();
    j["violations"] = violations_json(rep);
    return j;
}

inline void print_report(std::ostream& out, const std::string& title,
                         const ValidationReport& rep) {
    out << title << ": " << (rep.ok() ? "ok" : "FAIL") << "\n";
    for (const Violation& v : rep.violations) {
        out << "  " << v.kind << " (";
        for (std::size_t i = 0; i < v.where.size(); ++i)
            out << (i ? "," : "") << v.where[i];
        out << "): " << v.detail << "\n";
    }
}

inline std::string tuple_str(const std::vector<std::size_t>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

inline void print_sparse3(std::ostream& out, const std::string& label, const Tensor3& t) {
    bool any = false;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                if (!t.at(i, j, k).is_zero()) {
                    out << label << "[" << i << "][" << j << "][" << k << "] = "
                        << t.at(i, j, k).str() << "\n";
                    any = true;
                }
    if (!any) out << label << ": (zero)\n";
}

inline void print_sparse4(std::ostream& out, const std::string& label, const Tensor4& t) {
    bool any = false;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                for (std::size_t l = 0; l < t.n; ++l)
                    if (!t.at(i, j, k, l).is_zero()) {
                        out << label << "[" << i << "][" << j << "][" << k << "][" << l
                            << "] = " << t.at(i, j, k, l).str() << "\n";
                        any = true;
                    }
    if (!any) out << label << ": (zero)\n";
}

inline Json identity_json(const IdentityReport& rep) {
    Json j;
    j["lie_admissible"] = rep.lie_admissible;
    j["flexible"] = rep.flexible;
    j["left_symmetric"] = rep.left_symmetric;
    j["associative"] = rep.associative;
    j["ad_derivation"] = rep.ad_derivation;
    Json w;
    if (!rep.lie_admissible) w["lie_admissible"] = rep.lie_admissible_witness;
    if (!rep.flexible) w["flexible"] = rep.flexible_witness;
    if (!rep.left_symmetric) w["left_symmetric"] = rep.left_symmetric_witness;
    if (!rep.associative) w["associative"] = rep.associative_witness;
    if (!rep.ad_derivation) w["ad_derivation"] = rep.ad_derivation_witness;
    j["witnesses"] = std::move(w);
    return j;
}

inline void print_identities(std::ostream& out, const IdentityReport& rep) {
    const auto line = [&out](const char* nm, bool flag, const std::vector<std::size_t>& w) {
        out << nm << ": " << (flag ? "true" : "false");
        if (!flag) out << "  witness " << tuple_str(w);
        out << "\n";
    };
    line("lie_admissible", rep.lie_admissible, rep.lie_admissible_witness);
    line("flexible", rep.flexible, rep.flexible_witness);
    line("left_symmetric", rep.left_symmetric, rep.left_symmetric_witness);
    line("associative", rep.associative, rep.associative_witness);
    line("ad_derivation", rep.ad_derivation, rep.ad_derivation_witness);
}

inline AlgebraFile load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CLI::FileError::Missing(path); // usage error: exit 2
    std::ostringstream text;
    text << in.rdbuf();
    return parse_algebra_file(text.str());
}

// The LY data a file denotes: explicit binary/ternary sections when present
// (a missing partner defaults to zero), otherwise the products of its
// brackets under the file's decomposition.
inline LieYamaguti file_lie_yamaguti(const AlgebraFile& f) {
    if (f.binary || f.ternary) {
        Tensor3 b = f.binary ? *f.binary : Tensor3(f.mdim());
        Tensor4 t = f.ternary ? *f.ternary : Tensor4(f.mdim());
        return LieYamaguti(std::move(b), std::move(t));
    }
    return lie_yamaguti(f.algebra, f.decomposition());
}

inline std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", r);
    return buf;
}

} // namespace detail

// Runs one CLI invocation; args excludes the program name. Reports go to
// `out`, diagnostics to `err`. Exit code 0 on success, 1 when the input
// fails a validation or a computation's precondition, 2 on usage errors
// (bad flags, unreadable file, unknown model).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Json;

    CLI::App app{"exact invariant-connection toolkit for reductive homogeneous spaces"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output with stable key order");

    std::string file_validate, file_products, file_lycheck, file_connspace;
    std::string file_classify, file_levicivita, file_envelope;
    std::string alpha_choice = "file";
    std::string model;
    double tparam = 0.0, tol = 1e-15;

    CLI::App* c_validate = app.add_subcommand("validate", "run lie/reductive/metric checks");
    c_validate->add_option("file", file_validate, "algebra file")->required();
    CLI::App* c_products = app.add_subcommand("products", "binary and ternary products on m");
    c_products->add_option("file", file_products, "algebra file")->required();
    CLI::App* c_lycheck = app.add_subcommand("ly-check", "LY1..LY6 axiom report");
    c_lycheck->add_option("file", file_lycheck, "algebra file")->required();
    CLI::App* c_connspace =
        app.add_subcommand("conn-space", "invariant connection space dimension and basis");
    c_connspace->add_option("file", file_connspace, "algebra file")->required();
    CLI::App* c_classify = app.add_subcommand("classify", "torsion/curvature/flags/identities");
    c_classify->add_option("file", file_classify, "algebra file")->required();
    c_classify->add_option("--alpha", alpha_choice,
                           "natural | canonical | <file> (default: file's alpha, else natural)");
    CLI::App* c_levicivita =
        app.add_subcommand("levi-civita", "Levi-Civita alpha and metric report");
    c_levicivita->add_option("file", file_levicivita, "algebra file with metric")->required();
    CLI::App* c_envelope = app.add_subcommand("envelope", "standard envelope as an algebra file");
    c_envelope->add_option("file", file_envelope, "algebra or LY file")->required();
    CLI::App* c_adexp = app.add_subcommand("adexp", "Ad-exp identity residual table");
    c_adexp->add_option("--model", model, "model name")->required();
    c_adexp->add_option("--t", tparam, "group parameter t")->required();
    c_adexp->add_option("--tol", tol, "matrix_exp series tolerance");
    CLI::App* c_gen = app.add_subcommand("gen", "emit a built-in model as an algebra file");
    c_gen->add_option("--model", model, "model name")->required();

    for (CLI::App* sub : {c_validate, c_products, c_lycheck, c_connspace, c_classify,
                          c_levicivita, c_envelope, c_adexp, c_gen})
        sub->add_flag("--json", json, "machine-readable output with stable key order");

    std::vector<const char*> argv;
    argv.push_back("redhom");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_validate) {
            const AlgebraFile f = detail::load_file(file_validate);
            const Decomposition d = f.decomposition();
            const ValidationReport lie = validate_lie(f.algebra);
            const ValidationReport red = check_reductive(f.algebra, d);
            const bool has_metric = f.metric.has_value();
            const ValidationReport met =
                has_metric ? validate_metric(f.algebra, d, *f.metric) : ValidationReport{};
            const ValidationReport cons = check_file_consistency(f);
            const bool ok = lie.ok() && red.ok() && met.ok() && cons.ok();
            if (json) {
                Json j;
                j["command"] = "validate";
                j["name"] = f.name;
                j["lie"] = detail::report_json(lie);
                j["reductive"] = detail::report_json(red);
                j["metric"] = Json{{"present", has_metric}};
                if (has_metric) {
                    j["metric"]["ok"] = met.ok();
                    j["metric"]["violations"] = detail::violations_json(met);
                }
                j["consistency"] = detail::report_json(cons);
                j["ok"] = ok;
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                detail::print_report(out, "lie", lie);
                detail::print_report(out, "reductive", red);
                if (has_metric)
                    detail::print_report(out, "metric", met);
                else
                    out << "metric: (absent)\n";
                detail::print_report(out, "consistency", cons);
                out << "ok: " << (ok ? "true" : "false") << "\n";
            }
            return ok ? 0 : 1;
        }

        if (*c_products) {
            const AlgebraFile f = detail::load_file(file_products);
            const Decomposition d = f.decomposition();
            const Tensor3 b = binary_product(f.algebra, d);
            const Tensor4 t = ternary_product(f.algebra, d);
            if (json) {
                Json j;
                j["command"] = "products";
                j["name"] = f.name;
                j["mdim"] = d.mdim();
                j["binary"] = detail::sparse3_json(b);
                j["ternary"] = detail::sparse4_json(t);
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                out << "mdim: " << d.mdim() << "\n";
                detail::print_sparse3(out, "binary", b);
                detail::print_sparse4(out, "ternary", t);
            }
            return 0;
        }

        if (*c_lycheck) {
            const AlgebraFile f = detail::load_file(file_lycheck);
            const LyReport rep = ly_axiom_report(detail::file_lie_yamaguti(f));
            if (json) {
                Json j;
                j["command"] = "ly-check";
                j["name"] = f.name;
                Json arr = Json::array();
                for (const LyAxiomResult& a : rep.axioms) {
                    Json e;
                    e["axiom"] = a.axiom;
                    e["pass"] = a.pass;
                    e["witness"] = a.witness;
                    arr.push_back(std::move(e));
                }
                j["axioms"] = std::move(arr);
                j["ok"] = rep.all_pass();
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                for (const LyAxiomResult& a : rep.axioms) {
                    out << a.axiom << ": " << (a.pass ? "PASS" : "FAIL");
                    if (!a.pass) out << " at " << detail::tuple_str(a.witness);
                    out << "\n";
                }
            }
            return rep.all_pass() ? 0 : 1;
        }

        if (*c_connspace) {
            const AlgebraFile f = detail::load_file(file_connspace);
            const ConnectionSpace space = invariant_connection_space(f.algebra, f.decomposition());
            if (json) {
                Json j;
                j["command"] = "conn-space";
                j["name"] = f.name;
                j["mdim"] = f.mdim();
                j["dimension"] = space.dim;
                Json arr = Json::array();
                for (const AlphaTensor& a : space.basis) arr.push_back(detail::sparse3_json(a));
                j["basis"] = std::move(arr);
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                out << "dimension: " << space.dim << "\n";
                for (std::size_t i = 0; i < space.basis.size(); ++i)
                    detail::print_sparse3(out, "basis[" + std::to_string(i) + "]",
                                          space.basis[i]);
            }
            return 0;
        }

        if (*c_classify) {
            const AlgebraFile f = detail::load_file(file_classify);
            const Decomposition d = f.decomposition();
            AlphaTensor alpha(d.mdim());
            std::string source;
            if (alpha_choice == "natural") {
                alpha = distinguished_alpha(DistinguishedKind::natural, f.algebra, d);
                source = "natural";
            } else if (alpha_choice == "canonical") {
                alpha = distinguished_alpha(DistinguishedKind::canonical, f.algebra, d);
                source = "canonical";
            } else if (alpha_choice == "file") {
                if (f.alpha) {
                    alpha = *f.alpha;
                    source = "file";
                } else {
                    alpha = distinguished_alpha(DistinguishedKind::natural, f.algebra, d);
                    source = "natural";
                }
            } else {
                const AlgebraFile af = detail::load_file(alpha_choice);
                if (!af.alpha)
                    throw ParseError("alpha file '" + alpha_choice + "' has no alpha section");
                if (af.alpha->n != d.mdim())
                    throw DimensionMismatch("alpha file mdim differs from input mdim");
                alpha = *af.alpha;
                source = "file";
            }
            const Tensor3 tors = torsion(alpha, f.algebra, d);
            const Tensor4 curv = curvature(alpha, f.algebra, d);
            const ConnectionFlags flags = classify_connection(alpha, f.algebra, d);
            const IdentityReport ids = identity_report(alpha);
            if (json) {
                Json j;
                j["command"] = "classify";
                j["name"] = f.name;
                j["alpha_source"] = source;
                j["alpha"] = detail::sparse3_json(alpha);
                j["torsion"] = detail::sparse3_json(tors);
                j["curvature"] = detail::sparse4_json(curv);
                j["flags"] = Json{{"symmetric", flags.symmetric},
                                  {"flat", flags.flat},
                                  {"anticommutative", flags.anticommutative},
                                  {"equivariant", flags.equivariant}};
                j["identities"] = detail::identity_json(ids);
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                out << "alpha source: " << source << "\n";
                detail::print_sparse3(out, "alpha", alpha);
                detail::print_sparse3(out, "torsion", tors);
                detail::print_sparse4(out, "curvature", curv);
                out << "symmetric: " << (flags.symmetric ? "true" : "false") << "\n";
                out << "flat: " << (flags.flat ? "true" : "false") << "\n";
                out << "anticommutative: " << (flags.anticommutative ? "true" : "false") << "\n";
                out << "equivariant: " << (flags.equivariant ? "true" : "false") << "\n";
                detail::print_identities(out, ids);
            }
            return 0;
        }

        if (*c_levicivita) {
            const AlgebraFile f = detail::load_file(file_levicivita);
            if (!f.metric)
                throw Error("levi-civita needs a metric section in the input file");
            const Decomposition d = f.decomposition();
            const ValidationReport met = validate_metric(f.algebra, d, *f.metric);
            if (!met.ok()) {
                if (json) {
                    Json j;
                    j["command"] = "levi-civita";
                    j["name"] = f.name;
                    j["metric"] = detail::report_json(met);
                    out << j.dump(2) << "\n";
                } else {
                    detail::print_report(out, "metric", met);
                }
                return 1;
            }
            const AlphaTensor alpha = levi_civita_alpha(f.algebra, d, *f.metric);
            const MetricFlags flags = metric_report(f.algebra, d, *f.metric);
            if (json) {
                Json j;
                j["command"] = "levi-civita";
                j["name"] = f.name;
                j["alpha"] = detail::sparse3_json(alpha);
                j["report"] = Json{{"torsion_free", flags.torsion_free},
                                   {"skew_compatible", flags.skew_compatible},
                                   {"naturally_reductive", flags.naturally_reductive},
                                   {"commutative_part_identity", flags.commutative_part_identity}};
                out << j.dump(2) << "\n";
            } else {
                out << "name: " << f.name << "\n";
                detail::print_sparse3(out, "alpha", alpha);
                out << "torsion_free: " << (flags.torsion_free ? "true" : "false") << "\n";
                out << "skew_compatible: " << (flags.skew_compatible ? "true" : "false") << "\n";
                out << "naturally_reductive: " << (flags.naturally_reductive ? "true" : "false")
                    << "\n";
                out << "commutative_part_identity: "
                    << (flags.commutative_part_identity ? "true" : "false") << "\n";
            }
            return 0;
        }

        if (*c_envelope) {
            const AlgebraFile f = detail::load_file(file_envelope);
            const LieYamaguti ly = detail::file_lie_yamaguti(f);
            Envelope env = standard_envelope(ly);
            const std::size_t r = env.decomposition.h.size();
            std::vector<std::string> labels;
            for (std::size_t a = 1; a <= r; ++a) labels.push_back("D" + std::to_string(a));
            for (std::size_t i : f.m) labels.push_back(f.basis[i]);
            env.algebra.set_basis_labels(labels);
            env.algebra.set_name(f.name + "-envelope");
            AlgebraFile out_file;
            out_file.name = env.algebra.name();
            out_file.dim = env.algebra.dim();
            out_file.basis = labels;
            out_file.has_brackets = true;
            out_file.algebra = env.algebra;
            out_file.h = env.decomposition.h;
            out_file.m = env.decomposition.m;
            out << serialize_algebra_file(out_file);
            return 0;
        }

        if (*c_adexp) {
            const MatrixModel mm = matrix_model(model); // UnknownModel: usage error below
            const std::size_t n = mm.algebra.dim();
            double max_residual = 0.0;
            std::vector<std::tuple<std::string, std::string, double>> rows;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double r = ad_exp_residual(mm, mm.algebra.basis_vector(i),
                                                     mm.algebra.basis_vector(j), tparam, tol);
                    max_residual = std::max(max_residual, r);
                    rows.emplace_back(mm.algebra.basis_label(i), mm.algebra.basis_label(j), r);
                }
            if (json) {
                Json j;
                j["command"] = "adexp";
                j["model"] = model;
                j["t"] = tparam;
                j["tol"] = tol;
                Json arr = Json::array();
                for (const auto& [x, y, r] : rows) {
                    Json e;
                    e["x"] = x;
                    e["y"] = y;
                    e["residual"] = detail::format_residual(r);
                    arr.push_back(std::move(e));
                }
                j["pairs"] = std::move(arr);
                j["max_residual"] = detail::format_residual(max_residual);
                out << j.dump(2) << "\n";
            } else {
                out << "model: " << model << "  t: " << tparam << "  tol: " << tol << "\n";
                for (const auto& [x, y, r] : rows)
                    out << "x=" << x << " y=" << y << " residual=" << detail::format_residual(r)
                        << "\n";
                out << "max_residual: " << detail::format_residual(max_residual) << "\n";
            }
            return 0;
        }

        if (*c_gen) {
            const LieAlgebra g = generate_model(model);
            AlgebraFile f;
            f.name = g.name();
            f.dim = g.dim();
            f.basis = g.basis();
            f.has_brackets = true;
            f.algebra = g;
            for (std::size_t i = 0; i < g.dim(); ++i) f.m.push_back(i);
            out << serialize_algebra_file(f);
            return 0;
        }
    } catch (const CLI::FileError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownModel& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BadParameter& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace redhom::cli
