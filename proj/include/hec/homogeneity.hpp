#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hec/multigraph.hpp"

namespace hec {

// Total assignment of colors {1..m} to edge ids. A color may be globally
// unused; m < 2 is rejected outright.
struct EdgeColoring {
    int m = 2;
    std::vector<int> colors;  // indexed by edge id

    EdgeColoring(int m_, std::vector<int> colors_);

    int color_of(int edge_id) const { return colors[static_cast<size_t>(edge_id)]; }
};

// Color tally over the edges incident to one vertex, with the division
// d = m*q + r, 0 <= r < m. `counts` lists only colors that actually occur.
struct VertexSpectrum {
    VertexId vertex = 0;
    int degree = 0;
    int q = 0;
    int r = 0;
    std::map<int, int> counts;
};

// First offending (vertex, color) pair: the color occurs `count` times at
// the vertex while only the values in `allowed` are admissible.
struct Violation {
    VertexId vertex = 0;
    int color = 0;
    int count = 0;
    std::vector<int> allowed;
};

struct HomogeneityReport {
    bool ok = false;
    std::vector<VertexSpectrum> spectra;
    std::optional<Violation> first_violation;
};

// A coloring is homogeneous iff at every vertex each color occurs either
// floor(d/m) or ceil(d/m) times; with d = m*q + r this pins exactly r
// colors at q+1 and the rest at q, and degenerates to "all incident edges
// differently colored" when d < m. The per-color count check is linear
// and equivalent to exhibiting the balanced partition itself.
HomogeneityReport verify(const Multigraph& g, const EdgeColoring& c);

VertexSpectrum spectrum(const Multigraph& g, const EdgeColoring& c, VertexId x);

// True iff no two distinct edges sharing a vertex share a color.
bool is_proper(const Multigraph& g, const EdgeColoring& c);

// For a 2-colored cycle: number of vertices whose two incident edges have
// the same color. Odd cycles always produce an odd count.
int count_monochromatic_vertices(const Multigraph& cycle_graph, const EdgeColoring& c);

}  // namespace hec
