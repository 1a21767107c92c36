// Command-line front end: validate and convert gentle-order presentations,
// compute invariant bundles, Cartan data and surface profiles, screen pairs
// of orders for derived-equivalence obstructions, generate random instances
// and run the property suite.
//
// Exit codes: 0 success (screen: INCONCLUSIVE), 1 screen DISTINGUISHED or
// selftest/oracle failure, 2 bad input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentle/cartan.hpp"
#include "gentle/errors.hpp"
#include "gentle/invariants.hpp"
#include "gentle/json_io.hpp"
#include "gentle/presentation.hpp"
#include "gentle/randgen.hpp"
#include "gentle/screen.hpp"
#include "gentle/selftest.hpp"
#include "gentle/surface.hpp"

namespace {

using namespace gentle;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool has_suffix(const std::string& path, const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loads either format as a presentation. For .hep input the quiver is the
// one induced by the permutation pair.
GentlePresentation load_presentation(const std::string& path) {
    const std::string text = read_file(path);
    if (has_suffix(path, ".hep")) return from_half_edges(parse_hep(text));
    if (has_suffix(path, ".gq")) return parse_gq(text);
    throw Error(path + ": expected a .gq or .hep file");
}

std::string ag_text(const AGMultiset& ag) {
    std::string out = "[";
    for (size_t i = 0; i < ag.size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::to_string(ag[i].m) + "," + std::to_string(ag[i].n) + ")";
    }
    return out + "]";
}

std::string list_text(const std::vector<long>& values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

void print_bundle(std::ostream& out, const InvariantBundle& b) {
    out << "pc: " << b.pc << "\n";
    out << "bc: " << b.bc << "\n";
    out << "ag1: " << ag_text(b.ag1) << "\n";
    out << "ag2: " << ag_text(b.ag2) << "\n";
    out << "profile: " << list_text(b.profile) << "\n";
    out << "counts: q0=" << b.counts.vertices << " q1=" << b.counts.arrows
        << " q0t=" << b.counts.transition << " q0c=" << b.counts.crossing
        << " q1ft=" << b.counts.thread_arrows << " q1fc=" << b.counts.cycle_arrows << "\n";
    out << "class: " << to_string(b.cls) << "\n";
}

int cmd_validate(const std::string& path) {
    GentlePresentation p = load_presentation(path);
    VertexClassification c = validate_gentle_order(p);
    std::cout << "valid gentle order: " << p.vertex_count() << " vertices, " << p.arrow_count()
              << " arrows, " << p.relations.size() << " relations\n";
    std::cout << "transition vertices (" << c.transition_vertices.size() << "):";
    for (int v : c.transition_vertices) std::cout << " " << p.vertex_names[v];
    std::cout << "\ncrossing vertices (" << c.crossing_vertices.size() << "):";
    for (int v : c.crossing_vertices) std::cout << " " << p.vertex_names[v];
    std::cout << "\ncomponents: " << p.component_count() << "\n";
    return 0;
}

int cmd_invariants(const std::string& path, bool json) {
    GentlePresentation p = load_presentation(path);
    validate_gentle_order(p);
    auto parts = split_components(p);
    if (parts.size() == 1) {
        VertexClassification c = validate_gentle_order(p);
        InvariantBundle bundle = compute_bundle(p, c, to_half_edges(p, c));
        if (json)
            std::cout << bundle_json(bundle).dump(2) << "\n";
        else
            print_bundle(std::cout, bundle);
        return 0;
    }
    // Disconnected: report the decomposition and one bundle per component.
    Json components = Json::array();
    if (!json) std::cout << "components: " << parts.size() << "\n";
    for (size_t i = 0; i < parts.size(); ++i) {
        VertexClassification c = validate_gentle_order(parts[i]);
        InvariantBundle bundle = compute_bundle(parts[i], c, to_half_edges(parts[i], c));
        if (json) {
            Json entry;
            entry["vertices"] = parts[i].vertex_names;
            entry["invariants"] = bundle_json(bundle);
            components.push_back(std::move(entry));
        } else {
            std::cout << "-- component " << i + 1 << " (vertices:";
            for (const auto& name : parts[i].vertex_names) std::cout << " " << name;
            std::cout << ")\n";
            print_bundle(std::cout, bundle);
        }
    }
    if (json) {
        Json out;
        out["connected"] = false;
        out["component_count"] = parts.size();
        out["components"] = std::move(components);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_cartan(const std::string& path, bool oracle, bool json) {
    GentlePresentation p = load_presentation(path);
    VertexClassification c = validate_gentle_order(p);
    HalfEdgeSystem h = to_half_edges(p, c);
    TruncatedGraph g = truncated_graph(p, h);
    IntMatrix b = incidence_matrix(g);
    IntMatrix cartan = cartan_matrix(g);
    long rank = rank_formula(g);
    Integer det = det_formula(g);

    bool oracles_agree = true;
    std::string oracle_note;
    long rank_by_oracle = 0;
    Integer det_by_oracle;
    bool path_checked = false;
    bool path_agrees = true;
    if (oracle) {
        rank_by_oracle = rank_oracle(cartan);
        det_by_oracle = det_oracle(cartan);
        oracles_agree = rank_by_oracle == rank && det_by_oracle == det;
        if (p.arrow_count() <= 16) {
            path_checked = true;
            path_agrees = cartan_path_oracle(p) == cartan;
            oracles_agree = oracles_agree && path_agrees;
        } else {
            oracle_note = "path oracle skipped (more than 16 arrows)";
        }
    }

    if (json) {
        Json out;
        out["vertices"] = g.vertex_count;
        out["edges"] = g.edge_count();
        Json kinds = Json::array();
        for (int e = 0; e < g.edge_count(); ++e) {
            switch (g.edge_kind(e)) {
                case GraphEdgeKind::Ordinary: kinds.push_back("ordinary"); break;
                case GraphEdgeKind::Loop: kinds.push_back("loop"); break;
                case GraphEdgeKind::Truncated: kinds.push_back("truncated"); break;
            }
        }
        out["edge_kinds"] = std::move(kinds);
        out["incidence"] = matrix_json(b);
        out["cartan"] = matrix_json(cartan);
        out["rank"] = rank;
        out["det"] = integer_json(det);
        out["bc_graph"] = graph_bc(g);
        if (oracle) {
            out["oracle"] = Json{{"rank", rank_by_oracle},
                                 {"det", integer_json(det_by_oracle)},
                                 {"path_oracle_checked", path_checked},
                                 {"agree", oracles_agree}};
            if (!oracle_note.empty()) out["oracle"]["note"] = oracle_note;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "graph: " << g.vertex_count << " vertices, " << g.edge_count()
                  << " edges (bc = " << graph_bc(g) << ")\n";
        std::cout << "incidence matrix B (" << b.rows() << "x" << b.cols() << "):\n"
                  << format_matrix(b);
        std::cout << "cartan matrix C = B*B^T:\n" << format_matrix(cartan);
        std::cout << "rank C: " << rank << "\n";
        std::cout << "det C: " << det.str() << "\n";
        if (oracle) {
            std::cout << "oracle rank: " << rank_by_oracle
                      << ", oracle det: " << det_by_oracle.str();
            if (path_checked)
                std::cout << ", path oracle: " << (path_agrees ? "agrees" : "DISAGREES");
            else
                std::cout << " (" << oracle_note << ")";
            std::cout << "\n";
            std::cout << (oracles_agree ? "oracles agree with the formulas" : "ORACLE MISMATCH")
                      << "\n";
        }
    }
    return oracles_agree ? 0 : 1;
}

int cmd_surface(const std::string& path, bool json) {
    GentlePresentation p = load_presentation(path);
    VertexClassification c = validate_gentle_order(p);
    HalfEdgeSystem h = to_half_edges(p, c);
    Components comps = components(h);
    if (comps.count == 1) {
        RibbonData r = ribbon_data(h);
        SurfaceProfile s = surface_profile(r);
        if (json) {
            std::cout << surface_json(s, r).dump(2) << "\n";
        } else {
            std::cout << "genus: " << s.genus << "\neuler: " << s.euler
                      << "\nboundary_faces: " << s.boundary_faces
                      << "\npunctured_faces: " << s.punctured_faces
                      << "\nedges: ordinary=" << r.ordinary << " loop=" << r.loops
                      << " truncated=" << r.truncated << "\n";
        }
        return 0;
    }
    Json list = Json::array();
    if (!json) std::cout << "components: " << comps.count << "\n";
    for (int i = 0; i < comps.count; ++i) {
        HalfEdgeSystem part = restrict_to(h, comps.members[i]);
        RibbonData r = ribbon_data(part);
        SurfaceProfile s = surface_profile(r);
        if (json) {
            list.push_back(surface_json(s, r));
        } else {
            std::cout << "-- component " << i + 1 << ": genus=" << s.genus << " euler=" << s.euler
                      << " boundary_faces=" << s.boundary_faces
                      << " punctured_faces=" << s.punctured_faces << "\n";
        }
    }
    if (json) {
        Json out;
        out["connected"] = false;
        out["components"] = std::move(list);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_screen(const std::string& path_a, const std::string& path_b, bool json) {
    GentlePresentation a = load_presentation(path_a);
    GentlePresentation b = load_presentation(path_b);
    ScreeningReport report = screen(a, b);
    if (json) {
        std::cout << screen_json(report).dump(2) << "\n";
    } else {
        size_t width = 0;
        for (const auto& row : report.rows) width = std::max(width, row.invariant.size());
        for (const auto& row : report.rows) {
            std::cout << row.invariant << std::string(width - row.invariant.size(), ' ') << "  "
                      << (row.equal ? "equal " : "DIFFER") << "  " << row.value_a << "  |  "
                      << row.value_b << "\n";
        }
        std::cout << "verdict: " << report.verdict() << "\n";
    }
    return report.distinguished ? 1 : 0;
}

int cmd_gen(int half_edges, std::uint64_t seed, bool connected, double fraction) {
    GenConfig cfg;
    cfg.half_edges = half_edges;
    cfg.seed = seed;
    cfg.require_connected = connected;
    cfg.transition_fraction = fraction;
    std::cout << write_hep(generate(cfg));
    return 0;
}

int cmd_convert(const std::string& path, const std::string& to) {
    const std::string text = read_file(path);
    if (to == "hep") {
        HalfEdgeSystem h = [&] {
            if (has_suffix(path, ".hep")) return parse_hep(text);
            GentlePresentation p = parse_gq(text);
            return to_half_edges(p, validate_gentle_order(p));
        }();
        std::cout << write_hep(h);
        return 0;
    }
    if (to == "gq") {
        if (has_suffix(path, ".hep"))
            std::cout << write_gq(from_half_edges(parse_hep(text)));
        else
            std::cout << write_gq(parse_gq(text));
        return 0;
    }
    throw Error("unknown target format \"" + to + "\" (expected gq or hep)");
}

int cmd_selftest(long cases, std::uint64_t seed) {
    SelftestOptions options;
    options.cases = cases;
    options.seed = seed;
    SelftestReport report = run_selftest(options);
    if (!report.ok()) {
        for (const auto& failure : report.failures) std::cerr << "FAIL " << failure << "\n";
        std::cerr << report.failures.size() << " failures in " << report.checks_run
                  << " checks over " << report.cases_run << " instances\n";
        return 1;
    }
    std::cout << "selftest passed: " << report.checks_run << " checks over " << report.cases_run
              << " instances\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial derived invariants of gentle orders"};
    app.require_subcommand(1);

    std::string file, file_b, to_format;
    bool json = false, oracle = false, connected = false;
    int half_edges = 1;
    std::uint64_t seed = 0;
    double fraction = 0.5;
    long cases = 1000;

    auto* validate = app.add_subcommand("validate", "check a .gq/.hep file");
    validate->add_option("file", file)->required();

    auto* invariants = app.add_subcommand("invariants", "invariant bundle of an order");
    invariants->add_option("file", file)->required();
    invariants->add_flag("--json", json);

    auto* cartan = app.add_subcommand("cartan", "truncated graph and Cartan matrix");
    cartan->add_option("file", file)->required();
    cartan->add_flag("--oracle", oracle, "also run the rank/det/path oracles");
    cartan->add_flag("--json", json);

    auto* surface = app.add_subcommand("surface", "surface profile of the ribbon graph");
    surface->add_option("file", file)->required();
    surface->add_flag("--json", json);

    auto* screen_cmd = app.add_subcommand("screen", "compare two orders");
    screen_cmd->add_option("a", file)->required();
    screen_cmd->add_option("b", file_b)->required();
    screen_cmd->add_flag("--json", json);

    auto* gen = app.add_subcommand("gen", "generate a random order in .hep form");
    gen->add_option("--half-edges", half_edges)->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    gen->add_flag("--connected", connected);
    gen->add_option("--transition-fraction", fraction)->check(CLI::Range(0.0, 1.0));

    auto* convert = app.add_subcommand("convert", "convert between .gq and .hep");
    convert->add_option("file", file)->required();
    convert->add_option("--to", to_format)->required();

    auto* selftest = app.add_subcommand("selftest", "run the property suite");
    selftest->add_option("--cases", cases)->check(CLI::PositiveNumber);
    selftest->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (invariants->parsed()) return cmd_invariants(file, json);
        if (cartan->parsed()) return cmd_cartan(file, oracle, json);
        if (surface->parsed()) return cmd_surface(file, json);
        if (screen_cmd->parsed()) return cmd_screen(file, file_b, json);
        if (gen->parsed()) return cmd_gen(half_edges, seed, connected, fraction);
        if (convert->parsed()) return cmd_convert(file, to_format);
        if (selftest->parsed()) return cmd_selftest(cases, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
