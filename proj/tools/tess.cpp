// Command-line front end: validation, curvature tables, censuses, pattern
// enumeration, medial/dual application, discharging and exports over the
// planar v1 text format. Exit codes: 0 all pass, 1 a check failed, 2 input
// or usage error.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tess/tess.hpp"

using namespace tess;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::invalid_parameter, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

tessellation load(const std::string& path) { return parse_planar(slurp(path)); }

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::invalid_parameter, "cannot write " + path);
    out << text;
    if (!out.flush()) fail(errc::invalid_parameter, "cannot write " + path);
}

std::string pattern_text(const std::vector<int>& pat) {
    std::string s = "(";
    for (size_t i = 0; i < pat.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pat[i]);
    }
    return s + ")";
}

// ---- validate ----------------------------------------------------------

int run_validate(const std::string& file) {
    tessellation t = load(file);
    validation_report rep = validate_tessellation(t);
    if (rep.violations.empty()) {
        std::cout << file << ": valid " << (t.mode == graph_mode::sphere ? "sphere" : "patch")
                  << ", " << t.nv() << " vertices, " << t.ne() << " edges, " << t.nf()
                  << " faces\n";
        return 0;
    }
    for (const violation& v : rep.violations) {
        std::cout << v.condition;
        for (int id : v.ids) std::cout << " " << id;
        std::cout << "\n";
    }
    return 1;
}

// ---- curvature ---------------------------------------------------------

int run_curvature(const std::string& file, bool with_psi, bool with_corner, bool as_json) {
    tessellation t = load(file);
    json doc;
    doc["graph_id"] = file;
    doc["mode"] = t.mode == graph_mode::sphere ? "sphere" : "patch";

    json verts = json::array();
    rational total;
    if (!as_json) std::cout << "vertex  degree  pattern  phi\n";
    for (int v = 0; v < t.nv(); ++v) {
        if (!t.interior_vertex(v)) continue;
        std::vector<int> pat = vertex_pattern(t, v);
        rational phi = combinatorial_curvature(t, v);
        total += phi;
        if (as_json) {
            verts.push_back({{"id", v},
                             {"degree", t.vertex_degree(v)},
                             {"pattern", pat},
                             {"phi", frac(phi)}});
        } else {
            std::cout << std::setw(6) << v << "  " << std::setw(6) << t.vertex_degree(v)
                      << "  " << pattern_text(pat) << "  " << frac(phi) << "\n";
        }
    }
    doc["vertices"] = std::move(verts);
    doc["total"] = frac(total);
    if (!as_json) std::cout << "total " << frac(total) << "\n";

    if (with_psi) {
        json edges = json::array();
        if (!as_json) std::cout << "\nedge  ends  psi\n";
        for (int e = 0; e < t.ne(); ++e) {
            if (!t.interior_edge(e)) continue;
            rational psi = psi_curvature(t, e);
            if (as_json) {
                edges.push_back({{"id", e},
                                 {"ends", {t.edge_u(e), t.edge_v(e)}},
                                 {"psi", frac(psi)}});
            } else {
                std::cout << std::setw(4) << e << "  " << t.edge_u(e) << "-" << t.edge_v(e)
                          << "  " << frac(psi) << "\n";
            }
        }
        doc["edges"] = std::move(edges);
    }

    if (with_corner) {
        json corners = json::array();
        if (!as_json) std::cout << "\nvertex  face  corner\n";
        for (int v = 0; v < t.nv(); ++v) {
            if (!t.interior_vertex(v)) continue;
            for (int f : t.vertex_faces(v)) {
                rational c = corner_curvature(t, v, f);
                if (as_json) {
                    corners.push_back({{"vertex", v}, {"face", f}, {"corner", frac(c)}});
                } else {
                    std::cout << std::setw(6) << v << "  " << std::setw(4) << f << "  "
                              << frac(c) << "\n";
                }
            }
        }
        doc["corners"] = std::move(corners);
    }

    if (as_json) std::cout << doc.dump(2) << "\n";
    return 0;
}

// ---- census ------------------------------------------------------------

int run_census(const std::string& file) {
    tessellation t = load(file);
    census_table c = census(t);
    std::cout << "k   V_k  F_k\n";
    std::vector<int> ks;
    for (const auto& [deg, cnt] : c.v_k) (void)cnt, ks.push_back(deg);
    for (const auto& [deg, cnt] : c.f_k) (void)cnt, ks.push_back(deg);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int deg : ks)
        std::cout << std::left << std::setw(4) << deg << std::setw(5) << c.v(deg)
                  << c.f(deg) << "\n";
    return 0;
}

// ---- patterns ----------------------------------------------------------

std::string family_formula(const pattern_family& f) {
    if (f.offset == rat(0)) return "1/k";
    if (f.offset < rat(0)) return "1/k - " + frac(-f.offset);
    return "1/k + " + frac(f.offset);
}

int run_patterns(int degree, int max_k, bool as_json) {
    pattern_enumeration pe = enumerate_positive_patterns(degree, max_k);
    if (as_json) {
        json doc;
        doc["degree"] = degree;
        doc["max_k"] = max_k;
        json fams = json::array();
        for (const pattern_family& f : pe.positive)
            fams.push_back({{"prefix", f.prefix},
                            {"k_lo", f.k_lo},
                            {"k_hi", f.k_hi},
                            {"unbounded", f.unbounded},
                            {"offset", frac(f.offset)}});
        doc["families"] = std::move(fams);
        doc["vanishing"] = pe.vanishing;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    for (const pattern_family& f : pe.positive) {
        std::string pre = pattern_text(f.prefix);
        pre.back() = ',';
        std::cout << "family " << pre << "k): ";
        if (f.unbounded)
            std::cout << "k >= " << f.k_lo;
        else
            std::cout << f.k_lo << " <= k <= " << f.k_hi;
        std::cout << ", curvature " << family_formula(f) << "\n";
    }
    std::cout << "vanishing:";
    for (const std::vector<int>& pat : pe.vanishing) std::cout << " " << pattern_text(pat);
    std::cout << "\n";
    return 0;
}

// ---- medial / dual -----------------------------------------------------

int run_medial(const std::string& file, const std::string& out) {
    tessellation t = load(file);
    medial_mapping m = medial_graph(t);
    std::cout << "medial: " << m.medial.nv() << " vertices, " << m.medial.ne()
              << " edges, " << m.medial.nf() << " faces\n";
    bool psi_ok = psi_medial_transfer_check(t);
    bool census_ok = census_transfer_check(t);
    std::cout << "psi transfer: " << (psi_ok ? "pass" : "fail") << "\n";
    std::cout << "census transfer: " << (census_ok ? "pass" : "fail") << "\n";
    write_out(out, serialize_planar(m.medial));
    return psi_ok && census_ok ? 0 : 1;
}

int run_dual(const std::string& file, const std::string& out) {
    tessellation t = load(file);
    dual_mapping d = dual_graph(t);
    std::cout << "dual: " << d.dual.nv() << " vertices, " << d.dual.ne() << " edges, "
              << d.dual.nf() << " faces\n";
    bool invol = isomorphic(dual_graph(d.dual).dual, t);
    bool psi_ok = true;
    for (int e = 0; e < t.ne() && psi_ok; ++e)
        psi_ok = psi_curvature(t, e) == psi_curvature(d.dual, d.edge_to_edge[e]);
    std::cout << "double dual isomorphic: " << (invol ? "pass" : "fail") << "\n";
    std::cout << "psi preserved edgewise: " << (psi_ok ? "pass" : "fail") << "\n";
    write_out(out, serialize_planar(d.dual));
    return invol && psi_ok ? 0 : 1;
}

// ---- discharge ---------------------------------------------------------

int run_discharge(const std::string& file) {
    tessellation t = load(file);
    discharge_state d = discharge(t);
    if (d.big_faces.empty()) {
        std::cout << "no interior face of degree 8..12; curvature unchanged\n";
    } else {
        std::cout << "big faces:";
        for (int f : d.big_faces)
            std::cout << " " << f << " (degree " << t.face_degree(f) << ")";
        std::cout << "\n";
        std::cout << "vertex  phi  phi~\n";
        std::vector<int> involved = d.w;
        involved.insert(involved.end(), d.w1.begin(), d.w1.end());
        std::sort(involved.begin(), involved.end());
        involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
        for (int v : involved)
            std::cout << std::setw(6) << v << "  " << frac(d.phi[v]) << "  "
                      << frac(d.phi_tilde[v]) << "\n";
    }
    rational before, after;
    for (const rational& x : d.phi) before += x;
    for (const rational& x : d.phi_tilde) after += x;
    bool conserved = before == after && before == d.total;
    std::cout << "total " << frac(before) << " before, " << frac(after)
              << " after: conservation " << (conserved ? "pass" : "fail") << "\n";
    bool bounds_ok = true;
    for (size_t i = 0; i < d.big_faces.size(); ++i) {
        bool ok = !(d.boundary_sum[i] < rat(1, 2));
        bounds_ok = bounds_ok && ok;
        std::cout << "face " << d.big_faces[i] << ": boundary sum " << frac(d.boundary_sum[i])
                  << " vs 1/2: " << (ok ? "pass" : "fail") << "\n";
    }
    return conserved && bounds_ok ? 0 : 1;
}

// ---- check -------------------------------------------------------------

int run_check(const std::string& file, bool as_json) {
    tessellation t = load(file);
    std::vector<theorem_check> checks = run_theorem_checkers(t);
    bool any_fail = false;
    if (as_json) {
        json doc;
        doc["graph_id"] = file;
        json rows = json::array();
        for (const theorem_check& c : checks) {
            rows.push_back({{"name", c.name},
                            {"status", status_name(c.status)},
                            {"value", c.value},
                            {"witnesses", c.witnesses}});
            any_fail = any_fail || c.status == check_status::fail;
        }
        doc["checks"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const theorem_check& c : checks) {
            std::cout << std::left << std::setw(18) << c.name << std::setw(9)
                      << status_name(c.status) << c.value;
            if (!c.witnesses.empty()) {
                std::cout << "  witnesses:";
                for (int w : c.witnesses) std::cout << " " << w;
            }
            std::cout << "\n";
            any_fail = any_fail || c.status == check_status::fail;
        }
    }
    return any_fail ? 1 : 0;
}

// ---- gen ---------------------------------------------------------------

int run_gen(const generator_spec& spec, const std::string& out) {
    write_out(out, serialize_planar(generate(spec)));
    return 0;
}

// ---- export ------------------------------------------------------------

int run_export(const std::string& file, const std::string& svg_out,
               const std::string& dot_out, bool color) {
    tessellation t = load(file);
    if (!dot_out.empty()) write_out(dot_out, export_dot(t));
    if (!svg_out.empty()) {
        svg_options opt;
        opt.color_curvature = color;
        svg_document doc = export_svg(t, opt);
        if (doc.fallback) std::cerr << "warning: " << doc.warning << "\n";
        write_out(svg_out, doc.text);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar tessellation toolkit"};
    app.require_subcommand(1);

    std::string file, out;
    bool with_psi = false, with_corner = false, as_json = false, color = false;

    CLI::App* validate = app.add_subcommand("validate", "check structural invariants");
    validate->add_option("file", file)->required();

    CLI::App* curvature = app.add_subcommand("curvature", "exact curvature tables");
    curvature->add_option("file", file)->required();
    curvature->add_flag("--psi", with_psi, "edge curvature table");
    curvature->add_flag("--corner", with_corner, "corner curvature table");
    curvature->add_flag("--json", as_json, "machine-readable report");

    CLI::App* census_cmd = app.add_subcommand("census", "vertex and face degree counts");
    census_cmd->add_option("file", file)->required();

    int degree = 4, max_k = 30;
    CLI::App* patterns = app.add_subcommand("patterns", "positive vertex patterns");
    patterns->add_option("--degree", degree, "vertex degree")->required();
    patterns->add_option("--max-k", max_k, "largest face degree searched")->required();
    patterns->add_flag("--json", as_json, "machine-readable report");

    CLI::App* medial = app.add_subcommand("medial", "medial graph with transfer checks");
    medial->add_option("file", file)->required();
    medial->add_option("-o,--output", out, "write the medial graph here");

    CLI::App* dual = app.add_subcommand("dual", "dual graph with involution checks");
    dual->add_option("file", file)->required();
    dual->add_option("-o,--output", out, "write the dual graph here");

    CLI::App* discharge_cmd = app.add_subcommand("discharge", "redistribute curvature");
    discharge_cmd->add_option("file", file)->required();

    CLI::App* check = app.add_subcommand("check", "run the theorem checker bundle");
    check->add_option("file", file)->required();
    check->add_flag("--json", as_json, "machine-readable report");

    generator_spec spec;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated tessellation");
    gen->add_option("kind", spec.kind, "generator kind")->required();
    gen->add_option("--name", spec.name, "platonic solid name");
    gen->add_option("--n", spec.n, "ring size");
    gen->add_option("--width", spec.w, "lattice width");
    gen->add_option("--height", spec.h, "lattice height");
    gen->add_option("--radius", spec.radius, "window radius");
    gen->add_option("--k", spec.k, "big face degree");
    gen->add_option("--layers", spec.layers, "square rings around the big face");
    gen->add_option("-o,--output", out, "write the graph here");

    std::string svg_out, dot_out;
    CLI::App* export_cmd = app.add_subcommand("export", "draw as SVG or DOT");
    export_cmd->add_option("file", file)->required();
    export_cmd->add_option("--svg", svg_out, "SVG output path");
    export_cmd->add_option("--dot", dot_out, "DOT output path");
    export_cmd->add_flag("--color-curvature", color, "color vertices by curvature sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(file);
        if (curvature->parsed()) return run_curvature(file, with_psi, with_corner, as_json);
        if (census_cmd->parsed()) return run_census(file);
        if (patterns->parsed()) return run_patterns(degree, max_k, as_json);
        if (medial->parsed()) return run_medial(file, out);
        if (dual->parsed()) return run_dual(file, out);
        if (discharge_cmd->parsed()) return run_discharge(file);
        if (check->parsed()) return run_check(file, as_json);
        if (gen->parsed()) return run_gen(spec, out);
        if (export_cmd->parsed()) {
            if (svg_out.empty() == dot_out.empty()) {
                std::cerr << "error: InvalidParameter: export needs exactly one of --svg or --dot\n";
                return 2;
            }
            return run_export(file, svg_out, dot_out, color);
        }
    } catch (const map_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
