#include "hec/homogeneity.hpp"

#include <stdexcept>
#include <string>

namespace hec {

EdgeColoring::EdgeColoring(int m_, std::vector<int> colors_) : m(m_), colors(std::move(colors_)) {
    if (m < 2) throw std::invalid_argument("color-set size m must be at least 2");
    for (int c : colors)
        if (c < 1 || c > m) throw std::invalid_argument("color out of range 1..m");
}

namespace {

void check_compatible(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.colors.size()) +
                                    " edges but the graph has " + std::to_string(g.edge_count()));
    for (int col : c.colors)
        if (col < 1 || col > c.m) throw std::invalid_argument("color out of range 1..m");
}

VertexSpectrum tally(const Multigraph& g, const EdgeColoring& c, VertexId x) {
    VertexSpectrum s;
    s.vertex = x;
    s.degree = g.degree(x);
    s.q = s.degree / c.m;
    s.r = s.degree % c.m;
    for (int id : g.incident_edge_ids(x)) ++s.counts[c.color_of(id)];
    return s;
}

}  // namespace

VertexSpectrum spectrum(const Multigraph& g, const EdgeColoring& c, VertexId x) {
    check_compatible(g, c);
    return tally(g, c, x);
}

HomogeneityReport verify(const Multigraph& g, const EdgeColoring& c) {
    check_compatible(g, c);
    HomogeneityReport report;
    report.ok = true;
    report.spectra.reserve(static_cast<size_t>(g.vertex_count()));
    for (VertexId x = 1; x <= g.vertex_count(); ++x) {
        VertexSpectrum s = tally(g, c, x);
        std::vector<int> allowed =
            s.r == 0 ? std::vector<int>{s.q} : std::vector<int>{s.q, s.q + 1};
        for (int k = 1; k <= c.m; ++k) {
            auto it = s.counts.find(k);
            int count = it == s.counts.end() ? 0 : it->second;
            bool fits = count == s.q || (s.r != 0 && count == s.q + 1);
            if (!fits && report.ok) {
                report.ok = false;
                report.first_violation = Violation{x, k, count, allowed};
            }
        }
        report.spectra.push_back(std::move(s));
    }
    return report;
}

bool is_proper(const Multigraph& g, const EdgeColoring& c) {
    check_compatible(g, c);
    for (VertexId x = 1; x <= g.vertex_count(); ++x) {
        std::map<int, int> counts;
        for (int id : g.incident_edge_ids(x))
            if (++counts[c.color_of(id)] > 1) return false;
    }
    return true;
}

int count_monochromatic_vertices(const Multigraph& cycle_graph, const EdgeColoring& c) {
    check_compatible(cycle_graph, c);
    if (!cycle_graph.is_cycle_graph())
        throw std::invalid_argument("monochromatic-vertex count requires a cycle graph");
    if (c.m != 2) throw std::invalid_argument("monochromatic-vertex count requires m = 2");
    int count = 0;
    for (VertexId x = 1; x <= cycle_graph.vertex_count(); ++x) {
        const auto& ids = cycle_graph.incident_edge_ids(x);
        if (c.color_of(ids[0]) == c.color_of(ids[1])) ++count;
    }
    return count;
}

}  // namespace hec
