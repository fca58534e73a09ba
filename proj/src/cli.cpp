#include "nrt/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nrt/constructions.hpp"
#include "nrt/invariants.hpp"
#include "nrt/nrt_core.hpp"
#include "nrt/shape_enum.hpp"

namespace nrt {

namespace {

using nlohmann::json;

json code_json(const NrtCode& c) {
    json rows = json::array();
    for (const auto& r : c.gen()) {
        json row = json::array();
        for (uint8_t x : r) row.push_back(int(x));
        rows.push_back(row);
    }
    return json{{"q", c.q()}, {"n", c.n()}, {"s", c.s()}, {"k", c.k()}, {"generator", rows}};
}

json enumerator_json(const ShapeEnumerator& h) {
    json coeffs = json::array();
    for (const auto& [e, c] : h.poly.terms()) {
        json exps = json::array();
        for (uint32_t x : e) exps.push_back(x);
        coeffs.push_back(json{{"exponents", exps}, {"coeff", c.to_rational().to_integer().get_str()}});
    }
    return json{{"s", h.s}, {"n", h.n}, {"polynomial", h.str()}, {"coefficients", coeffs}};
}

json molien_json(const MolienSeries& ms) {
    json coeffs = json::array();
    for (const auto& c : ms.coeffs) coeffs.push_back(c.get_str());
    return json{{"num", ms.closed.num().str()}, {"den", ms.closed.den().str()}, {"coefficients", coeffs}};
}

std::string charpoly_str(const ThetaSpectrum& sp) {
    auto factor = [](const std::string& op, const QuadElement& b, uint32_t r) {
        std::string f = "(L" + op + b.str() + ")";
        if (r != 1) f += "^" + std::to_string(r);
        return f;
    };
    return factor("-", sp.beta1, sp.r1) + "*" + factor("+", sp.beta1, sp.r2);
}

MatrixGroup group_by_name(const std::string& name) { return known_basis(name).group; }

struct Caps {
    uint64_t enum_cap = kDefaultEnumCap;
    uint64_t iso_cap = kDefaultIsoCap;
};

int cmd_shape_enum(const std::string& path, bool as_json, const Caps& caps, std::ostream& out) {
    NrtCode c = read_code_file(path);
    ShapeEnumerator h = shape_enumerator(c, caps.enum_cap);
    if (as_json) {
        json j = enumerator_json(h);
        j["code"] = code_json(c);
        out << j.dump(2) << "\n";
    } else {
        out << h.str() << "\n";
    }
    return 0;
}

int cmd_dual(const std::string& path, const std::string& out_path, bool as_json, std::ostream& out) {
    NrtCode c = read_code_file(path);
    NrtCode d = dual_code(c);
    if (!out_path.empty()) write_code_file(out_path, d);
    if (as_json) {
        out << code_json(d).dump(2) << "\n";
    } else {
        write_code(out, d);
    }
    return 0;
}

int cmd_macwilliams(const std::string& path, bool as_json, const Caps& caps, std::ostream& out) {
    NrtCode c = read_code_file(path);
    ShapeEnumerator h = shape_enumerator(c, caps.enum_cap);
    ShapeEnumerator transformed = macwilliams_transform(h, c.q(), c.size());
    ShapeEnumerator dual_direct = shape_enumerator(dual_code(c), caps.enum_cap);
    bool match = transformed == dual_direct;
    if (as_json) {
        out << json{{"code", code_json(c)},
                    {"enumerator", h.str()},
                    {"transform", transformed.str()},
                    {"dual_enumerator", dual_direct.str()},
                    {"match", match}}
                   .dump(2)
            << "\n";
    } else {
        out << "H_C      = " << h.str() << "\n";
        out << "theta(H) = " << transformed.str() << "\n";
        out << "H_dual   = " << dual_direct.str() << "\n";
        out << "match: " << (match ? "yes" : "no") << "\n";
    }
    if (!match) throw std::domain_error("macwilliams: transform does not match the dual enumerator");
    return 0;
}

int cmd_theta(uint32_t s, uint32_t q, bool verify, bool as_json, std::ostream& out) {
    ThetaMatrix t = theta_matrix(s, q);
    json j{{"s", s}, {"q", q}};
    if (as_json) {
        json rows = json::array();
        for (const auto& row : t.a) {
            json r = json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            rows.push_back(r);
        }
        j["theta"] = rows;
    } else {
        out << t.str();
    }
    if (verify) {
        ThetaReport rep = verify_theta_properties(s, q);
        if (as_json) {
            json checks = json::array();
            for (const auto& c : rep.checks) checks.push_back(json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
            j["trace"] = rep.trace.get_str();
            j["det"] = rep.det.get_str();
            j["charpoly"] = charpoly_str(rep.spectrum);
            j["r1"] = rep.spectrum.r1;
            j["r2"] = rep.spectrum.r2;
            j["checks"] = checks;
            j["all_ok"] = rep.all_ok();
        } else {
            out << "trace=" << rep.trace.get_str() << " det=" << rep.det.get_str()
                << " charpoly=" << charpoly_str(rep.spectrum) << "\n";
            for (const auto& c : rep.checks)
                out << "check " << c.name << ": " << (c.ok ? "ok" : "FAIL") << " (" << c.detail << ")\n";
            out << (rep.all_ok() ? "all checks OK" : "CHECKS FAILED") << "\n";
        }
        if (!rep.all_ok()) throw std::domain_error("theta: property verification failed");
    }
    if (as_json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_molien(const std::string& group, uint32_t s, unsigned degree, bool as_json, std::ostream& out) {
    MatrixGroup g = group.empty() ? theta_group(s) : group_by_name(group);
    MolienSeries ms = molien_series(g, degree);
    json j;
    if (as_json) {
        j = molien_json(ms);
        j["group"] = group.empty() ? ("theta_group(s=" + std::to_string(s) + ")") : group;
        j["order"] = g.order();
    } else {
        out << "order = " << g.order() << "\n";
        out << "molien = " << ms.closed.str() << "\n";
        out << "coefficients (L^0..L^" << degree << "):";
        for (const auto& c : ms.coeffs) out << " " << c.get_str();
        out << "\n";
    }
    if (group.empty()) {
        RationalFunction cf = closed_form_molien(s);
        bool match = cf == ms.closed;
        if (as_json) {
            j["closed_form"] = cf.str();
            j["closed_form_matches_direct"] = match;
        } else {
            out << "closed_form = " << cf.str() << "\n";
            out << "closed_form_matches_direct: " << (match ? "yes" : "no") << "\n";
        }
        if (!match) throw std::domain_error("molien: closed form does not match direct computation");
    }
    if (as_json) out << j.dump(2) << "\n";
    return 0;
}

int cmd_reynolds(const std::string& group, const std::string& poly, const std::string& mode, bool as_json,
                 std::ostream& out) {
    MatrixGroup g = group_by_name(group);
    MultiPoly f = MultiPoly::parse(poly, static_cast<uint32_t>(g.dim));
    ReynoldsMode m = mode == "sum" ? ReynoldsMode::Sum : ReynoldsMode::Average;
    MultiPoly r = reynolds(g, f, m);
    if (as_json) {
        out << json{{"group", group}, {"input", f.str()}, {"mode", mode}, {"result", r.str()},
                    {"invariant", is_invariant(g, r)}}
                   .dump(2)
            << "\n";
    } else {
        out << r.str() << "\n";
    }
    return 0;
}

int cmd_invariant_basis(const std::string& group, unsigned degree, bool as_json, std::ostream& out) {
    MatrixGroup g = group_by_name(group);
    std::vector<MultiPoly> basis = invariant_space_basis(g, degree);
    if (as_json) {
        json polys = json::array();
        for (const auto& p : basis) polys.push_back(p.str());
        out << json{{"group", group}, {"degree", degree}, {"dimension", basis.size()}, {"basis", polys}}.dump(2)
            << "\n";
    } else {
        out << "dimension: " << basis.size() << "\n";
        for (const auto& p : basis) out << p.str() << "\n";
    }
    return 0;
}

int cmd_jacobian(const std::vector<std::string>& polys, uint32_t vars, bool as_json, std::ostream& out) {
    std::vector<MultiPoly> fs;
    for (const auto& p : polys) fs.push_back(MultiPoly::parse(p, vars));
    bool indep = jacobian_independent(fs);
    if (as_json) {
        out << json{{"vars", vars}, {"count", fs.size()}, {"independent", indep}}.dump(2) << "\n";
    } else {
        out << "independent: " << (indep ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_classify(uint32_t q, bool as_json, const Caps& caps, std::ostream& out) {
    std::vector<ClassifiedCode> list = classify_ns4(q);
    std::vector<NrtCode> distinct = distinct_codes(list);
    json manifest = json::array();
    for (const auto& c : list) {
        ShapeEnumerator h = shape_enumerator(c.code, caps.enum_cap);
        if (as_json) {
            json e = code_json(c.code);
            e["case"] = c.case_name;
            e["family"] = c.family;
            if (c.lambda) e["lambda"] = c.lambda;
            e["shape_enumerator"] = h.str();
            manifest.push_back(e);
        } else {
            out << "case " << c.case_name << " family " << c.family;
            if (c.lambda) out << " lambda " << c.lambda;
            out << ": ";
            for (size_t i = 0; i < c.code.gen().size(); ++i) {
                if (i) out << " ; ";
                for (size_t j = 0; j < c.code.gen()[i].size(); ++j) {
                    if (j) out << " ";
                    out << unsigned(c.code.gen()[i][j]);
                }
            }
            out << "  H = " << h.str() << "\n";
        }
    }
    if (as_json) {
        out << json{{"q", q}, {"families", manifest}, {"family_count", list.size()}, {"distinct_codes", distinct.size()}}
                   .dump(2)
            << "\n";
    } else {
        out << "families emitted: " << list.size() << ", distinct codes: " << distinct.size() << "\n";
    }
    return 0;
}

int cmd_construct(const std::string& type, const std::vector<std::string>& code_paths, const std::string& out_path,
                  bool as_json, std::ostream& out) {
    std::vector<NrtCode> inputs;
    for (const auto& p : code_paths) inputs.push_back(read_code_file(p));
    if (inputs.empty()) throw std::invalid_argument("construct: at least one --code input required");

    NrtCode result = [&]() -> NrtCode {
        if (type == "co") return construct_co(inputs.at(0));
        if (type == "cort") return construct_cort(inputs.at(0));
        if (type == "cn") return construct_cn(inputs.at(0));
        if (type == "interleave") {
            if (inputs.size() != 2) throw std::invalid_argument("construct interleave: exactly two --code inputs");
            return construct_interleave(inputs[0], inputs[1]);
        }
        if (type == "concat") return construct_padded_concat(inputs);
        throw std::invalid_argument("construct: unknown type '" + type + "'");
    }();

    if (!out_path.empty()) write_code_file(out_path, result);
    if (as_json) {
        json j = code_json(result);
        j["type"] = type;
        j["self_orthogonal"] = is_self_orthogonal(result);
        j["self_dual"] = is_self_dual(result);
        out << j.dump(2) << "\n";
    } else {
        write_code(out, result);
        out << "self_orthogonal: " << (is_self_orthogonal(result) ? "true" : "false") << "\n";
        out << "self_dual: " << (is_self_dual(result) ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_equivalent(const std::vector<std::string>& code_paths, bool as_json, const Caps& caps, std::ostream& out) {
    if (code_paths.size() != 2) throw std::invalid_argument("equivalent: exactly two --code inputs");
    NrtCode a = read_code_file(code_paths[0]);
    NrtCode b = read_code_file(code_paths[1]);
    bool eq = codes_equivalent(a, b, caps.iso_cap, caps.enum_cap);
    if (as_json) {
        out << json{{"equivalent", eq}}.dump(2) << "\n";
    } else {
        out << "equivalent: " << (eq ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_known_bases(const std::string& group, bool as_json, std::ostream& out) {
    std::vector<KnownBasis> bases;
    if (group.empty()) {
        bases = known_bases();
    } else {
        bases.push_back(known_basis(group));
    }
    json jb = json::array();
    for (const auto& b : bases) {
        if (as_json) {
            json entries = json::array();
            for (const auto& e : b.entries)
                entries.push_back(json{{"name", e.name},
                                       {"degree", e.degree},
                                       {"kind", e.kind == BasisKind::Primary ? "primary" : "secondary"},
                                       {"poly", e.poly.str()}});
            json g{{"group", b.group_name}, {"order", b.group.order()}, {"entries", entries}};
            if (b.star) g["star"] = b.star->str();
            jb.push_back(g);
        } else {
            out << b.group_name << " (order " << b.group.order() << "):\n";
            for (const auto& e : b.entries)
                out << "  " << e.name << " (degree " << e.degree << ", "
                    << (e.kind == BasisKind::Primary ? "primary" : "secondary") << ") = " << e.poly.str() << "\n";
            if (b.star) out << "  star (degree 2, auxiliary) = " << b.star->str() << "\n";
        }
    }
    if (as_json) out << jb.dump(2) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for linear codes in the NRT metric: shape enumerators, "
                 "the Theta MacWilliams transform, Molien series and invariant bases, "
                 "self-dual constructions and the ns=4 classification."};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    Caps caps;
    app.add_option("--max-enum", caps.enum_cap, "codeword enumeration cap")->envname("NRT_MAX_ENUM");
    app.add_option("--max-iso", caps.iso_cap, "isometry enumeration cap");

    std::string code_path, code_out, group, poly_mode = "average", construct_type;
    std::vector<std::string> code_paths, polys;
    uint32_t s = 2, q = 2, vars = 3;
    unsigned degree = 8;
    bool verify = false;

    auto* sc_shape = app.add_subcommand("shape-enum", "shape enumerator of a code file");
    sc_shape->add_option("--code", code_path, "code file")->required();

    auto* sc_dual = app.add_subcommand("dual", "dual code under the NRT pairing");
    sc_dual->add_option("--code", code_path, "code file")->required();
    sc_dual->add_option("--out", code_out, "write the dual to this file");

    auto* sc_mac = app.add_subcommand("macwilliams", "Theta transform of a code's enumerator, checked against the dual");
    sc_mac->add_option("--code", code_path, "code file")->required();

    auto* sc_theta = app.add_subcommand("theta", "the Theta_s matrix and its verified properties");
    sc_theta->add_option("--s", s, "s parameter")->required();
    sc_theta->add_option("--q", q, "field size (default 2)");
    sc_theta->add_flag("--verify", verify, "verify square/trace/det/spectrum (q = 2)");

    auto* sc_molien = app.add_subcommand("molien", "Molien series of a catalogued group or theta group");
    sc_molien->add_option("--group", group, "g1, g2 or g3");
    auto* molien_s = sc_molien->add_option("--s", s, "use the theta group of this s (and compare the closed form)");
    sc_molien->add_option("--degree", degree, "expansion degree (default 8)");

    auto* sc_rey = app.add_subcommand("reynolds", "Reynolds operator over a catalogued group");
    sc_rey->add_option("--group", group, "g1, g2 or g3")->required();
    sc_rey->add_option("--poly", code_path, "polynomial in z0..z2")->required();
    sc_rey->add_option("--mode", poly_mode, "sum or average (default average)")
        ->check(CLI::IsMember({"sum", "average"}));

    auto* sc_basis = app.add_subcommand("invariant-basis", "basis of the degree-d invariants of a catalogued group");
    sc_basis->add_option("--group", group, "g1, g2 or g3")->required();
    sc_basis->add_option("--degree", degree, "degree d")->required();

    auto* sc_jac = app.add_subcommand("jacobian", "Jacobian algebraic-independence test");
    sc_jac->add_option("--poly", polys, "polynomial (repeatable)")->required();
    sc_jac->add_option("--vars", vars, "variable count (default 3)");

    auto* sc_classify = app.add_subcommand("classify", "catalogued families of self-dual codes with ns = 4");
    sc_classify->add_option("--q", q, "prime field size")->required();

    auto* sc_con = app.add_subcommand("construct", "self-orthogonal/self-dual constructions");
    sc_con->add_option("--type", construct_type, "co, cort, cn, interleave or concat")->required();
    sc_con->add_option("--code", code_paths, "input code file (repeatable)")->required();
    sc_con->add_option("--out", code_out, "write the result to this file");

    auto* sc_eq = app.add_subcommand("equivalent", "isometry equivalence of two codes");
    sc_eq->add_option("--code", code_paths, "code file (give twice)")->required();

    auto* sc_known = app.add_subcommand("known-bases", "catalogued invariant bases for G1, G2, G3");
    sc_known->add_option("--group", group, "g1, g2 or g3");

    std::vector<const char*> argv;
    argv.push_back("nrtcodes");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sc_shape->parsed()) return cmd_shape_enum(code_path, as_json, caps, out);
        if (sc_dual->parsed()) return cmd_dual(code_path, code_out, as_json, out);
        if (sc_mac->parsed()) return cmd_macwilliams(code_path, as_json, caps, out);
        if (sc_theta->parsed()) return cmd_theta(s, q, verify, as_json, out);
        if (sc_molien->parsed()) {
            if (group.empty() && molien_s->count() == 0)
                throw std::invalid_argument("molien: give --group or --s");
            return cmd_molien(molien_s->count() ? "" : group, s, degree, as_json, out);
        }
        if (sc_rey->parsed()) return cmd_reynolds(group, code_path, poly_mode, as_json, out);
        if (sc_basis->parsed()) return cmd_invariant_basis(group, degree, as_json, out);
        if (sc_jac->parsed()) return cmd_jacobian(polys, vars, as_json, out);
        if (sc_classify->parsed()) return cmd_classify(q, as_json, caps, out);
        if (sc_con->parsed()) return cmd_construct(construct_type, code_paths, code_out, as_json, out);
        if (sc_eq->parsed()) return cmd_equivalent(code_paths, as_json, caps, out);
        if (sc_known->parsed()) return cmd_known_bases(group, as_json, out);
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nrt
