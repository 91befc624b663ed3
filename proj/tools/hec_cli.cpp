// Command-line front end: graph generation, closed-form colorings,
// homogeneity verification, exact chi-tilde computation, Hamiltonian
// decompositions and DOT export, all speaking the JSON formats of the
// library. Exit codes: 0 success, 1 verification failed, 2 invalid
// parameters or I/O trouble, 3 solver budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hec/constructions.hpp"
#include "hec/decompositions.hpp"
#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "hec/serialize.hpp"
#include "hec/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct GraphSource {
    std::string in_path;
    std::string family;
    int n = 0;
    int m = 0;  // first part of a bipartite family
    int lambda = 1;
    unsigned int seed = 1;
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--in", src.in_path, "read the graph from a JSON file");
    cmd->add_option("--family", src.family,
                    "generate inline: complete, bipartite, path, cycle, star, wheel, tree");
    cmd->add_option("--n", src.n, "order (second part size for bipartite)");
    cmd->add_option("--m", src.m, "first part size (bipartite only)");
    cmd->add_option("--lambda", src.lambda, "parallel-edge multiplicity")->capture_default_str();
    cmd->add_option("--seed", src.seed, "seed for tree generation")->capture_default_str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

hec::Multigraph generate_family(const GraphSource& src) {
    switch (hec::family_kind_from_string(src.family)) {
        case hec::FamilyKind::Complete: return hec::complete(src.n, src.lambda);
        case hec::FamilyKind::CompleteBipartite:
            return hec::complete_bipartite(src.m, src.n, src.lambda);
        case hec::FamilyKind::Path: return hec::path(src.n);
        case hec::FamilyKind::Cycle: return hec::cycle(src.n);
        case hec::FamilyKind::Star: return hec::star(src.n);
        case hec::FamilyKind::Wheel: return hec::wheel(src.n);
        case hec::FamilyKind::Tree: return hec::random_tree(src.n, src.seed);
        case hec::FamilyKind::Custom: break;
    }
    throw std::invalid_argument("family must name a generator");
}

hec::Multigraph load_graph(const GraphSource& src) {
    if (!src.in_path.empty()) return hec::graph_from_json(read_json_file(src.in_path));
    if (!src.family.empty()) return generate_family(src);
    throw std::invalid_argument("provide --in or --family");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

void emit_json(const json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

// Regenerated family instance must coincide edge for edge with the stored
// graph, otherwise edge-id indexed colors would silently land on the wrong
// edges.
hec::Multigraph checked_family_graph(const hec::Multigraph& g, hec::FamilyKind expected) {
    if (!g.family() || g.family()->kind != expected)
        throw std::invalid_argument("graph lacks the family metadata this theorem needs");
    const auto& p = g.family()->params;
    GraphSource src;
    src.family = to_string(expected);
    switch (expected) {
        case hec::FamilyKind::Complete:
            src.n = static_cast<int>(p.at(0));
            src.lambda = static_cast<int>(p.at(1));
            break;
        case hec::FamilyKind::CompleteBipartite:
            src.m = static_cast<int>(p.at(0));
            src.n = static_cast<int>(p.at(1));
            src.lambda = static_cast<int>(p.at(2));
            break;
        case hec::FamilyKind::Tree:
            src.n = static_cast<int>(p.at(0));
            src.seed = static_cast<unsigned int>(p.at(1));
            break;
        default:
            src.n = static_cast<int>(p.at(0));
            break;
    }
    hec::Multigraph canonical = generate_family(src);
    if (canonical.vertex_count() != g.vertex_count() || !(canonical.edges() == g.edges()))
        throw std::invalid_argument("graph does not match its family metadata");
    return canonical;
}

hec::ConstructionResult run_construction(const hec::Multigraph& g, const std::string& theorem,
                                         hec::ColoringVariant variant,
                                         const hec::SolverOptions& options) {
    using hec::FamilyKind;
    if (theorem == "tree") return hec::color_tree(g);
    if (theorem == "eulerian") return hec::color_eulerian(g, options);

    if (theorem == "complete-even" || theorem == "complete-1mod4" ||
        theorem == "complete-3mod4" || theorem == "complete") {
        checked_family_graph(g, FamilyKind::Complete);
        const int n = static_cast<int>(g.family()->params.at(0));
        const int lambda = static_cast<int>(g.family()->params.at(1));
        if (theorem == "complete") return hec::color_lambda_complete(n, lambda);
        if (lambda != 1)
            throw std::invalid_argument("single-copy theorem on a lambda-fold graph; use "
                                        "--theorem complete");
        if (theorem == "complete-even") return hec::color_complete_even(n);
        if (theorem == "complete-1mod4") return hec::color_complete_1mod4(n, variant);
        return hec::color_complete_3mod4(n, variant);
    }
    if (theorem == "bipartite") {
        checked_family_graph(g, FamilyKind::CompleteBipartite);
        const auto& p = g.family()->params;
        return hec::color_complete_bipartite(static_cast<int>(p.at(0)),
                                             static_cast<int>(p.at(1)),
                                             static_cast<int>(p.at(2)));
    }
    if (theorem == "wheel") {
        checked_family_graph(g, FamilyKind::Wheel);
        return hec::color_wheel(static_cast<int>(g.family()->params.at(0)));
    }
    if (theorem == "path") {
        checked_family_graph(g, FamilyKind::Path);
        return hec::color_path(static_cast<int>(g.family()->params.at(0)));
    }
    if (theorem == "cycle") {
        checked_family_graph(g, FamilyKind::Cycle);
        return hec::color_cycle(static_cast<int>(g.family()->params.at(0)));
    }
    throw std::invalid_argument(
        "unknown theorem; expected one of complete-even, complete-1mod4, complete-3mod4, "
        "complete, bipartite, tree, wheel, path, cycle, eulerian");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homogeneous edge-colorings of loopless multigraphs"};
    app.require_subcommand(1);

    int exit_code = kExitOk;

    // generate
    auto* generate = app.add_subcommand("generate", "emit a family instance as graph JSON");
    auto gen_src = std::make_shared<GraphSource>();
    auto gen_out = std::make_shared<std::string>();
    add_graph_options(generate, *gen_src);
    generate->add_option("--out", *gen_out, "output path (default stdout)");
    generate->callback([gen_src, gen_out] {
        if (gen_src->family.empty()) throw std::invalid_argument("generate needs --family");
        emit_json(hec::graph_to_json(generate_family(*gen_src)), *gen_out);
    });

    // color
    auto* color = app.add_subcommand("color", "produce a closed-form coloring as JSON");
    auto col_src = std::make_shared<GraphSource>();
    auto col_theorem = std::make_shared<std::string>();
    auto col_variant = std::make_shared<std::string>("auto");
    auto col_out = std::make_shared<std::string>();
    auto col_budget = std::make_shared<std::uint64_t>(hec::SolverOptions{}.node_budget);
    add_graph_options(color, *col_src);
    color->add_option("--theorem", *col_theorem, "which coloring rule to apply")->required();
    color->add_option("--variant", *col_variant, "cycles, circulant, direct or auto")->capture_default_str();
    color->add_option("--budget", *col_budget, "node cap for solver-backed rules")->capture_default_str();
    color->add_option("--out", *col_out, "output path (default stdout)");
    color->callback([col_src, col_theorem, col_variant, col_out, col_budget] {
        const hec::Multigraph g = load_graph(*col_src);
        const auto result =
            run_construction(g, *col_theorem, hec::coloring_variant_from_string(*col_variant),
                             hec::SolverOptions{*col_budget});
        emit_json(hec::construction_to_json(result), *col_out);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring for homogeneity");
    auto ver_src = std::make_shared<GraphSource>();
    auto ver_coloring = std::make_shared<std::string>();
    auto ver_out = std::make_shared<std::string>();
    add_graph_options(verify_cmd, *ver_src);
    verify_cmd->add_option("--coloring", *ver_coloring, "coloring JSON file")->required();
    verify_cmd->add_option("--out", *ver_out, "output path (default stdout)");
    verify_cmd->callback([ver_src, ver_coloring, ver_out, &exit_code] {
        const hec::Multigraph g = load_graph(*ver_src);
        const hec::EdgeColoring c = hec::coloring_from_json(read_json_file(*ver_coloring));
        const hec::HomogeneityReport report = hec::verify(g, c);
        emit_json(hec::report_to_json(report), *ver_out);
        if (!report.ok) exit_code = kExitVerifyFailed;
    });

    // chi
    auto* chi = app.add_subcommand("chi", "compute the homogeneous chromatic index exactly");
    auto chi_src = std::make_shared<GraphSource>();
    auto chi_out = std::make_shared<std::string>();
    auto chi_budget = std::make_shared<std::uint64_t>(hec::SolverOptions{}.node_budget);
    add_graph_options(chi, *chi_src);
    chi->add_option("--budget", *chi_budget, "node cap per feasibility search")->capture_default_str();
    chi->add_option("--out", *chi_out, "output path (default stdout)");
    chi->callback([chi_src, chi_out, chi_budget] {
        const hec::Multigraph g = load_graph(*chi_src);
        emit_json(hec::chi_result_to_json(hec::chi_tilde(g, hec::SolverOptions{*chi_budget})),
                  *chi_out);
    });

    // decompose
    auto* decompose = app.add_subcommand("decompose",
                                         "Hamiltonian cycle decomposition of K_n, odd n");
    auto dec_n = std::make_shared<int>(0);
    auto dec_out = std::make_shared<std::string>();
    decompose->add_option("--n", *dec_n, "order of the complete graph")->required();
    decompose->add_option("--out", *dec_out, "output path (default stdout)");
    decompose->callback([dec_n, dec_out] {
        emit_json(hec::decomposition_to_json(hec::walecki_decompose(*dec_n)), *dec_out);
    });

    // check-prop
    auto* check_prop = app.add_subcommand(
        "check-prop", "exhaustively test the odd monochromatic-vertex count on a cycle");
    auto prop_n = std::make_shared<int>(0);
    auto prop_bound = std::make_shared<int>(16);
    auto prop_out = std::make_shared<std::string>();
    check_prop->add_option("--n", *prop_n, "cycle length")->required();
    check_prop->add_option("--bound", *prop_bound, "maximum edge count to enumerate")->capture_default_str();
    check_prop->add_option("--out", *prop_out, "output path (default stdout)");
    check_prop->callback([prop_n, prop_bound, prop_out, &exit_code] {
        const hec::Multigraph g = hec::cycle(*prop_n);
        const bool all_odd = hec::all_two_colorings_satisfy(
            g,
            [&g](const hec::EdgeColoring& c) {
                return hec::count_monochromatic_vertices(g, c) % 2 == 1;
            },
            *prop_bound);
        emit_json(json{{"n", *prop_n},
                       {"colorings", std::uint64_t{1} << g.edge_count()},
                       {"all_odd", all_odd}},
                  *prop_out);
        if (!all_odd) exit_code = kExitVerifyFailed;
    });

    // export-dot
    auto* export_dot = app.add_subcommand("export-dot", "emit the graph in DOT format");
    auto dot_src = std::make_shared<GraphSource>();
    auto dot_coloring = std::make_shared<std::string>();
    auto dot_out = std::make_shared<std::string>();
    add_graph_options(export_dot, *dot_src);
    export_dot->add_option("--coloring", *dot_coloring, "optional coloring JSON file");
    export_dot->add_option("--out", *dot_out, "output path (default stdout)");
    export_dot->callback([dot_src, dot_coloring, dot_out] {
        const hec::Multigraph g = load_graph(*dot_src);
        if (dot_coloring->empty()) {
            emit(hec::to_dot(g), *dot_out);
        } else {
            const hec::EdgeColoring c = hec::coloring_from_json(read_json_file(*dot_coloring));
            emit(hec::to_dot(g, &c), *dot_out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", "invalid-parameter"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInvalid;
    } catch (const hec::BudgetExceeded& e) {
        std::cerr << json{{"error", "budget-exceeded"}, {"detail", e.what()}}.dump() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "invalid-parameter"}, {"detail", e.what()}}.dump() << "\n";
        return kExitInvalid;
    }
    return exit_code;
}
