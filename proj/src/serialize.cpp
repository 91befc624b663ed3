#include "hec/serialize.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace hec {

using nlohmann::json;

namespace {

json require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("missing field: ") + key);
    return j.at(key);
}

}  // namespace

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"copy", e.copy}});
    json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.family()) {
        j["family"] = {{"kind", to_string(g.family()->kind)},
                       {"params", g.family()->params}};
    }
    return j;
}

Multigraph graph_from_json(const json& j) {
    const int n = require(j, "n").get<int>();
    std::vector<Edge> edges;
    for (const json& je : require(j, "edges")) {
        edges.push_back(Edge{require(je, "id").get<int>(), require(je, "u").get<int>(),
                             require(je, "v").get<int>(), require(je, "copy").get<int>()});
    }
    std::optional<FamilySpec> family;
    if (j.contains("family") && !j.at("family").is_null()) {
        const json& jf = j.at("family");
        family = FamilySpec{family_kind_from_string(require(jf, "kind").get<std::string>()),
                            require(jf, "params").get<std::vector<long long>>()};
    }
    return Multigraph::from_edges(n, std::move(edges), std::move(family));
}

json coloring_to_json(const EdgeColoring& c) {
    return json{{"m", c.m}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const json& j) {
    return EdgeColoring(require(j, "m").get<int>(),
                        require(j, "colors").get<std::vector<int>>());
}

json construction_to_json(const ConstructionResult& r) {
    json j = coloring_to_json(r.coloring);
    j["theorem"] = r.theorem;
    j["variant"] = r.variant;
    return j;
}

json report_to_json(const HomogeneityReport& report) {
    json spectra = json::array();
    for (const VertexSpectrum& s : report.spectra) {
        json counts = json::object();
        for (auto [color, count] : s.counts) counts[std::to_string(color)] = count;
        spectra.push_back({{"vertex", s.vertex},
                           {"degree", s.degree},
                           {"q", s.q},
                           {"r", s.r},
                           {"counts", std::move(counts)}});
    }
    json j{{"ok", report.ok}, {"spectra", std::move(spectra)}};
    if (report.first_violation) {
        const Violation& v = *report.first_violation;
        j["first_violation"] = {{"vertex", v.vertex},
                                {"color", v.color},
                                {"count", v.count},
                                {"allowed", v.allowed}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

json decomposition_to_json(const HamiltonianDecomposition& d) {
    return json{{"n", d.n}, {"cycles", d.cycles}};
}

HamiltonianDecomposition decomposition_from_json(const json& j) {
    HamiltonianDecomposition d;
    d.n = require(j, "n").get<int>();
    d.cycles = require(j, "cycles").get<std::vector<std::vector<VertexId>>>();
    return d;
}

json chi_result_to_json(const ChiTildeResult& r) {
    return json{{"chi_tilde", r.value},
                {"witness", coloring_to_json(r.witness)},
                {"refuted", r.infeasible_below},
                {"nodes", r.nodes_explored}};
}

std::string to_dot(const Multigraph& g, const EdgeColoring* coloring) {
    static constexpr std::array<const char*, 12> palette{
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
        "#f032e6", "#9a6324", "#469990", "#808000", "#800000", "#000075"};
    if (coloring && static_cast<int>(coloring->colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring does not match the graph");
    std::ostringstream out;
    out << "graph hec {\n";
    out << "  node [shape=circle];\n";
    for (VertexId x = 1; x <= g.vertex_count(); ++x) out << "  " << x << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (coloring) {
            const int c = coloring->color_of(e.id);
            out << " [color=\"" << palette[static_cast<size_t>((c - 1) % 12)] << "\", label="
                << c << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace hec
