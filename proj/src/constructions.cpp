#include "hec/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "hec/decompositions.hpp"

namespace hec {

std::string to_string(ColoringVariant v) {
    switch (v) {
        case ColoringVariant::Auto: return "auto";
        case ColoringVariant::Cycles: return "cycles";
        case ColoringVariant::Circulant: return "circulant";
        case ColoringVariant::Direct: return "direct";
    }
    throw std::logic_error("unhandled ColoringVariant");
}

ColoringVariant coloring_variant_from_string(const std::string& name) {
    if (name == "auto" || name.empty()) return ColoringVariant::Auto;
    if (name == "cycles") return ColoringVariant::Cycles;
    if (name == "circulant") return ColoringVariant::Circulant;
    if (name == "direct") return ColoringVariant::Direct;
    throw std::invalid_argument("unknown coloring variant: " + name);
}

namespace {

int cyclic_distance(VertexId u, VertexId v, int n) {
    int d = std::abs(u - v);
    return std::min(d, n - d);
}

// Assigns one color per decomposition cycle, reading colors[k] for cycle k.
std::vector<int> paint_cycles(const Multigraph& g, const HamiltonianDecomposition& d,
                              const std::vector<int>& cycle_colors) {
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    for (size_t k = 0; k < d.cycles.size(); ++k) {
        const auto& cyc = d.cycles[k];
        for (size_t i = 0; i < cyc.size(); ++i) {
            VertexId u = cyc[i];
            VertexId v = cyc[(i + 1) % cyc.size()];
            colors[static_cast<size_t>(g.edge_ids_between(u, v).front())] = cycle_colors[k];
        }
    }
    return colors;
}

// Label-sum rule used by the odd complete orders divisible by 3:
// i+j = 2 mod 3 -> 1, = 1 mod 3 -> 2, = 0 mod 3 -> 3.
int label_sum_color(VertexId u, VertexId v) {
    static constexpr std::array<int, 3> by_residue{3, 2, 1};
    return by_residue[static_cast<size_t>((u + v) % 3)];
}

// Same rule with a special row for the top vertex: its edges are colored
// by the other endpoint's residue (1 -> 1, 2 -> 2, 0 -> 3).
int label_sum_color_with_top(VertexId u, VertexId v, int n) {
    if (u != n && v != n) return label_sum_color(u, v);
    const int other = (u == n ? v : u) % 3;
    return other == 0 ? 3 : other;
}

int residue_class_mod12(int n) {
    if (n % 4 != 3) throw std::invalid_argument("order must be 3 mod 4");
    return n % 12;  // 3, 7 or 11
}

ColoringVariant pick_3mod4_variant(int n) {
    switch (residue_class_mod12(n)) {
        case 7: return ColoringVariant::Cycles;
        case 11: return ColoringVariant::Direct;
        default: return n >= 15 ? ColoringVariant::Cycles : ColoringVariant::Direct;
    }
}

// Three-color variant dispatch for orders 3 mod 4; shared between the
// plain and the lambda-fold constructions.
std::vector<int> complete_3mod4_colors(const Multigraph& g, int n, ColoringVariant variant) {
    const int r12 = residue_class_mod12(n);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);

    if (variant == ColoringVariant::Circulant) {
        if (r12 != 7) throw std::invalid_argument("circulant form needs order 7 mod 12");
        const int h = (n - 7) / 12;
        for (const Edge& e : g.edges()) {
            const int d = cyclic_distance(e.u, e.v, n);
            colors[static_cast<size_t>(e.id)] = d <= 2 * h + 1 ? 1 : (d <= 4 * h + 2 ? 2 : 3);
        }
        return colors;
    }

    if (variant == ColoringVariant::Direct) {
        if (r12 == 7) throw std::invalid_argument("direct form needs order 11 or 3 mod 12");
        for (const Edge& e : g.edges())
            colors[static_cast<size_t>(e.id)] = r12 == 11
                                                    ? label_sum_color_with_top(e.u, e.v, n)
                                                    : label_sum_color(e.u, e.v);
        return colors;
    }

    if (variant != ColoringVariant::Cycles) throw std::invalid_argument("unsupported variant");
    if (n < 7) throw std::invalid_argument("cycle form needs n >= 7");
    if (r12 == 11) throw std::invalid_argument("cycle form needs order 7 or 3 mod 12");

    const HamiltonianDecomposition d = walecki_decompose(n);
    const int cycles = (n - 1) / 2;
    if (r12 == 7) {
        // Thirds: (n-1)/6 whole cycles per color.
        const int third = (n - 1) / 6;
        std::vector<int> cycle_colors(static_cast<size_t>(cycles));
        for (int k = 0; k < cycles; ++k) cycle_colors[static_cast<size_t>(k)] = k / third + 1;
        return paint_cycles(g, d, cycle_colors);
    }

    // Order 3 mod 12: 2h whole cycles per color, and the one cycle left
    // over is colored 1,2,...,1,2,3 along its edges starting from its
    // lowest-labelled vertex.
    const int per_color = (n - 3) / 6;
    for (int k = 0; k + 1 < cycles; ++k) {
        const auto& cyc = d.cycles[static_cast<size_t>(k)];
        for (size_t i = 0; i < cyc.size(); ++i) {
            VertexId u = cyc[i];
            VertexId v = cyc[(i + 1) % cyc.size()];
            colors[static_cast<size_t>(g.edge_ids_between(u, v).front())] = k / per_color + 1;
        }
    }
    std::vector<VertexId> last = d.cycles.back();
    std::rotate(last.begin(), std::min_element(last.begin(), last.end()), last.end());
    for (size_t i = 0; i < last.size(); ++i) {
        VertexId u = last[i];
        VertexId v = last[(i + 1) % last.size()];
        const int color = i + 1 == last.size() ? 3 : (i % 2 == 0 ? 1 : 2);
        colors[static_cast<size_t>(g.edge_ids_between(u, v).front())] = color;
    }
    return colors;
}

}  // namespace

ConstructionResult color_complete_even(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("needs even n >= 4");
    const Multigraph g = complete(n);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges())
        colors[static_cast<size_t>(e.id)] = (e.u + e.v) % 2 == 1 ? 1 : 2;
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "complete-even", ""};
}

ConstructionResult color_complete_1mod4(int n, ColoringVariant variant) {
    if (n < 5 || n % 4 != 1) throw std::invalid_argument("needs n = 1 mod 4, n >= 5");
    if (variant == ColoringVariant::Auto) variant = ColoringVariant::Cycles;
    const Multigraph g = complete(n);
    std::vector<int> colors;

    if (variant == ColoringVariant::Circulant) {
        const int h = (n - 1) / 4;
        colors.assign(static_cast<size_t>(g.edge_count()), 0);
        for (const Edge& e : g.edges())
            colors[static_cast<size_t>(e.id)] = cyclic_distance(e.u, e.v, n) <= h ? 1 : 2;
    } else if (variant == ColoringVariant::Cycles) {
        const HamiltonianDecomposition d = walecki_decompose(n);
        const int half = (n - 1) / 4;
        std::vector<int> cycle_colors(d.cycles.size());
        for (size_t k = 0; k < d.cycles.size(); ++k)
            cycle_colors[k] = static_cast<int>(k) < half ? 1 : 2;
        colors = paint_cycles(g, d, cycle_colors);
    } else {
        throw std::invalid_argument("variant must be cycles or circulant");
    }
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "complete-1mod4",
                              to_string(variant)};
}

ConstructionResult color_complete_3mod4(int n, ColoringVariant variant) {
    if (n < 3 || n % 4 != 3) throw std::invalid_argument("needs n = 3 mod 4, n >= 3");
    if (variant == ColoringVariant::Auto) variant = pick_3mod4_variant(n);
    const Multigraph g = complete(n);
    std::vector<int> colors = complete_3mod4_colors(g, n, variant);
    return ConstructionResult{EdgeColoring(3, std::move(colors)), "complete-3mod4",
                              to_string(variant)};
}

ConstructionResult color_lambda_complete(int n, int lambda) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    const Multigraph g = complete(n, lambda);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);

    if (n % 2 == 0) {
        // Label-parity coloring on floor(lambda/2) copies, its swap on the rest.
        for (const Edge& e : g.edges()) {
            int c = (e.u + e.v) % 2 == 1 ? 1 : 2;
            if (e.copy >= lambda / 2) c = 3 - c;
            colors[static_cast<size_t>(e.id)] = c;
        }
        return ConstructionResult{EdgeColoring(2, std::move(colors)), "lambda-complete", ""};
    }

    if (n % 4 == 1) {
        // One balanced coloring reused on every copy.
        const int h = (n - 1) / 4;
        for (const Edge& e : g.edges())
            colors[static_cast<size_t>(e.id)] = cyclic_distance(e.u, e.v, n) <= h ? 1 : 2;
        return ConstructionResult{EdgeColoring(2, std::move(colors)), "lambda-complete", ""};
    }

    if (lambda % 2 == 0) {
        // Solid copies: half of them monochromatic 1, half monochromatic 2.
        for (const Edge& e : g.edges())
            colors[static_cast<size_t>(e.id)] = e.copy < lambda / 2 ? 1 : 2;
        return ConstructionResult{EdgeColoring(2, std::move(colors)), "lambda-complete", ""};
    }

    // Odd lambda on an order 3 mod 4: three colors. For orders 7 mod 12 the
    // base coloring is flat at every vertex, so all copies reuse it; for the
    // other residues the copies are spread over the base coloring and its
    // two cyclic color permutations in counts as even as possible.
    const int r12 = residue_class_mod12(n);
    const Multigraph base_graph = complete(n);
    const std::vector<int> base = complete_3mod4_colors(
        base_graph, n, r12 == 7 ? ColoringVariant::Circulant : ColoringVariant::Direct);

    static constexpr std::array<int, 4> rotate132{0, 3, 1, 2};  // 1->3, 3->2, 2->1
    static constexpr std::array<int, 4> rotate123{0, 2, 3, 1};  // 1->2, 2->3, 3->1
    const int third = lambda / 3;
    const int first_group = third + (lambda % 3 >= 1 ? 1 : 0);
    const int second_group = third + (lambda % 3 >= 2 ? 1 : 0);

    for (const Edge& e : g.edges()) {
        const int base_color =
            base[static_cast<size_t>(base_graph.edge_ids_between(e.u, e.v).front())];
        int c = base_color;
        if (r12 != 7) {
            if (e.copy >= first_group + second_group)
                c = rotate123[static_cast<size_t>(base_color)];
            else if (e.copy >= first_group)
                c = rotate132[static_cast<size_t>(base_color)];
        }
        colors[static_cast<size_t>(e.id)] = c;
    }
    return ConstructionResult{EdgeColoring(3, std::move(colors)), "lambda-complete", ""};
}

ConstructionResult color_tree(const Multigraph& g) {
    if (!g.is_tree() || g.vertex_count() < 2) throw std::invalid_argument("graph is not a tree");
    const int n = g.vertex_count();

    // Strip pendant vertices (largest label first) down to a single edge.
    std::vector<int> live_degree(static_cast<size_t>(n) + 1, 0);
    for (VertexId x = 1; x <= n; ++x) live_degree[static_cast<size_t>(x)] = g.degree(x);
    std::vector<char> removed_edge(static_cast<size_t>(g.edge_count()), 0);
    std::set<VertexId, std::greater<>> leaves;
    for (VertexId x = 1; x <= n; ++x)
        if (live_degree[static_cast<size_t>(x)] == 1) leaves.insert(x);

    struct Stripped {
        int edge_id;
        VertexId anchor;
    };
    std::vector<Stripped> stack;
    int alive = n;
    while (alive > 2) {
        VertexId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int edge_id = -1;
        for (int id : g.incident_edge_ids(leaf))
            if (!removed_edge[static_cast<size_t>(id)]) edge_id = id;
        const VertexId anchor = g.edge(edge_id).other(leaf);
        removed_edge[static_cast<size_t>(edge_id)] = 1;
        stack.push_back({edge_id, anchor});
        --alive;
        live_degree[static_cast<size_t>(leaf)] = 0;
        if (--live_degree[static_cast<size_t>(anchor)] == 1) leaves.insert(anchor);
    }

    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    std::vector<std::array<int, 2>> seen(static_cast<size_t>(n) + 1, {0, 0});
    for (const Edge& e : g.edges()) {
        if (removed_edge[static_cast<size_t>(e.id)]) continue;
        colors[static_cast<size_t>(e.id)] = 1;  // the base edge
        ++seen[static_cast<size_t>(e.u)][0];
        ++seen[static_cast<size_t>(e.v)][0];
    }
    // Restore in reverse order; each edge balances its attachment point.
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        auto& at = seen[static_cast<size_t>(it->anchor)];
        const int c = at[0] <= at[1] ? 1 : 2;
        colors[static_cast<size_t>(it->edge_id)] = c;
        ++at[static_cast<size_t>(c - 1)];
        const Edge& e = g.edge(it->edge_id);
        ++seen[static_cast<size_t>(e.other(it->anchor))][static_cast<size_t>(c - 1)];
    }
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "tree", ""};
}

ConstructionResult color_complete_bipartite(int m_part, int n_part, int lambda) {
    if (m_part < 1 || n_part < 1) throw std::invalid_argument("parts need m, n >= 1");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    const Multigraph g = complete_bipartite(m_part, n_part, lambda);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        const int i = std::min(e.u, e.v);         // part A index
        const int j = std::max(e.u, e.v) - m_part;  // part B index
        int c = (i + j) % 2 == 0 ? 1 : 2;
        if (e.copy % 2 == 1) c = 3 - c;  // odd copies use the swap
        colors[static_cast<size_t>(e.id)] = c;
    }
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "bipartite", ""};
}

ConstructionResult color_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    const Multigraph g = wheel(n);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        const VertexId lo = std::min(e.u, e.v);
        const VertexId hi = std::max(e.u, e.v);
        int c;
        if (lo == 1) {
            c = hi % 2 == 0 ? 1 : 2;  // spoke, by rim label parity
        } else if (lo == 2 && hi == n) {
            // Closing rim edge: both rim neighbours of x_n carry the color
            // of n's parity, so the closure takes the other one.
            c = n % 2 == 1 ? 1 : 2;
        } else {
            c = lo % 2 == 1 ? 1 : 2;  // rim, by lower label parity
        }
        colors[static_cast<size_t>(e.id)] = c;
    }
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "wheel", ""};
}

ConstructionResult color_path(int n) {
    const Multigraph g = path(n);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) colors[static_cast<size_t>(i)] = i % 2 == 0 ? 1 : 2;
    return ConstructionResult{EdgeColoring(2, std::move(colors)), "path", ""};
}

ConstructionResult color_cycle(int n) {
    const Multigraph g = cycle(n);
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i) colors[static_cast<size_t>(i)] = i % 2 == 0 ? 1 : 2;
    if (n % 2 == 0) return ConstructionResult{EdgeColoring(2, std::move(colors)), "cycle", ""};
    colors.back() = 3;  // odd ring: 1,2,...,1,2,3; every vertex sees two colors once
    return ConstructionResult{EdgeColoring(3, std::move(colors)), "cycle", ""};
}

ConstructionResult color_eulerian(const Multigraph& g, const SolverOptions& options) {
    if (!g.is_eulerian()) throw std::invalid_argument("graph is not eulerian");
    const int delta = g.max_degree();
    if (delta < 4)
        throw std::invalid_argument("needs max degree >= 4 so that delta/2 >= 2 colors");
    FeasibilityResult r = feasible(g, delta / 2, options);
    // Exactness of every per-color class can clash with the handshake
    // parity on some eulerian multigraphs (a triangle and a square sharing
    // one vertex already has no half-degree coloring), so the exhaustive
    // search may legitimately come back empty.
    if (!r.feasible)
        throw std::runtime_error("this eulerian graph admits no delta/2-homogeneous coloring");
    return ConstructionResult{std::move(*r.witness), "eulerian", ""};
}

}  // namespace hec
