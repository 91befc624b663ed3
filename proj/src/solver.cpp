#include "hec/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace hec {

namespace {

class BacktrackSearch {
public:
    BacktrackSearch(const Multigraph& g, int m, std::uint64_t budget)
        : graph_(g), m_(m), budget_(budget) {
        const int n = g.vertex_count();
        quota_.assign(static_cast<size_t>(n) + 1, 0);
        cap_.assign(static_cast<size_t>(n) + 1, 0);
        deficit_.assign(static_cast<size_t>(n) + 1, 0);
        remaining_.assign(static_cast<size_t>(n) + 1, 0);
        counts_.assign((static_cast<size_t>(n) + 1) * (static_cast<size_t>(m) + 1), 0);
        for (VertexId x = 1; x <= n; ++x) {
            const int d = g.degree(x);
            quota_[static_cast<size_t>(x)] = d / m;
            cap_[static_cast<size_t>(x)] = (d + m - 1) / m;
            remaining_[static_cast<size_t>(x)] = d;
            deficit_[static_cast<size_t>(x)] = (d / m) * m;
        }
        colors_.assign(static_cast<size_t>(g.edge_count()), 0);
    }

    bool run() { return extend(0, 0); }

    std::uint64_t nodes() const { return nodes_; }
    std::vector<int> take_colors() { return std::move(colors_); }

private:
    int& count(VertexId x, int k) {
        return counts_[static_cast<size_t>(x) * (static_cast<size_t>(m_) + 1) +
                       static_cast<size_t>(k)];
    }

    void place(const Edge& e, int k) {
        for (VertexId x : {e.u, e.v}) {
            if (count(x, k) < quota_[static_cast<size_t>(x)]) --deficit_[static_cast<size_t>(x)];
            ++count(x, k);
            --remaining_[static_cast<size_t>(x)];
        }
        colors_[static_cast<size_t>(e.id)] = k;
    }

    void unplace(const Edge& e, int k) {
        for (VertexId x : {e.u, e.v}) {
            ++remaining_[static_cast<size_t>(x)];
            --count(x, k);
            if (count(x, k) < quota_[static_cast<size_t>(x)]) ++deficit_[static_cast<size_t>(x)];
        }
        colors_[static_cast<size_t>(e.id)] = 0;
    }

    // Edges in id order; a fresh color may be used only right after all
    // smaller colors have appeared, which fixes edge 0 to color 1 and cuts
    // the m! color relabelings down to one representative.
    bool extend(int eid, int introduced) {
        if (eid == graph_.edge_count()) return true;
        const Edge& e = graph_.edges()[static_cast<size_t>(eid)];
        const int limit = std::min(m_, introduced + 1);
        for (int k = 1; k <= limit; ++k) {
            if (count(e.u, k) >= cap_[static_cast<size_t>(e.u)] ||
                count(e.v, k) >= cap_[static_cast<size_t>(e.v)])
                continue;
            if (++nodes_ > budget_) throw BudgetExceeded("solver node budget exceeded");
            place(e, k);
            if (deficit_[static_cast<size_t>(e.u)] <= remaining_[static_cast<size_t>(e.u)] &&
                deficit_[static_cast<size_t>(e.v)] <= remaining_[static_cast<size_t>(e.v)] &&
                extend(eid + 1, std::max(introduced, k)))
                return true;
            unplace(e, k);
        }
        return false;
    }

    const Multigraph& graph_;
    const int m_;
    const std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> quota_;      // floor(d/m) per vertex
    std::vector<int> cap_;        // ceil(d/m) per vertex
    std::vector<int> deficit_;    // sum over colors of max(0, quota - count)
    std::vector<int> remaining_;  // unassigned incident edges per vertex
    std::vector<int> counts_;
    std::vector<int> colors_;
};

// When m divides every degree, each color class is a spanning subgraph
// whose degree at x is exactly d(x)/m; its degree sum is twice an edge
// count, so an odd sum over all vertices rules the coloring out outright.
bool parity_infeasible(const Multigraph& g, int m) {
    long long exact_sum = 0;
    for (VertexId x = 1; x <= g.vertex_count(); ++x) {
        const int d = g.degree(x);
        if (d % m != 0) return false;
        exact_sum += d / m;
    }
    return exact_sum % 2 != 0;
}

}  // namespace

FeasibilityResult feasible(const Multigraph& g, int m, const SolverOptions& options) {
    if (m < 2) throw std::invalid_argument("color-set size m must be at least 2");
    if (parity_infeasible(g, m)) return FeasibilityResult{false, std::nullopt, 0};
    BacktrackSearch search(g, m, options.node_budget);
    if (!search.run()) return FeasibilityResult{false, std::nullopt, search.nodes()};
    return FeasibilityResult{true, EdgeColoring(m, search.take_colors()), search.nodes()};
}

ChiTildeResult chi_tilde(const Multigraph& g, const SolverOptions& options) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("homogeneous chromatic index needs at least one edge");
    const EdgeColoring upper = greedy_proper_coloring(g);
    ChiTildeResult result{0, upper, {}, 0};
    for (int m = 2; m <= upper.m; ++m) {
        FeasibilityResult r = feasible(g, m, options);
        result.nodes_explored += r.nodes_explored;
        if (r.feasible) {
            result.value = m;
            result.witness = std::move(*r.witness);
            return result;
        }
        result.infeasible_below.push_back(m);
    }
    // Unreachable: a proper coloring with upper.m >= max degree colors is
    // itself homogeneous, so the last iteration must succeed.
    throw std::logic_error("exhausted every m up to the proper-coloring bound");
}

bool all_two_colorings_satisfy(const Multigraph& g,
                               const std::function<bool(const EdgeColoring&)>& predicate,
                               int max_edges) {
    const int e_count = g.edge_count();
    if (max_edges < 0 || max_edges > 62 || e_count > max_edges)
        throw std::invalid_argument("graph too large for exhaustive 2-coloring enumeration");
    std::vector<int> colors(static_cast<size_t>(e_count), 1);
    const std::uint64_t total = 1ULL << e_count;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int i = 0; i < e_count; ++i)
            colors[static_cast<size_t>(i)] = (mask >> i & 1) ? 2 : 1;
        if (!predicate(EdgeColoring(2, colors))) return false;
    }
    return true;
}

EdgeColoring greedy_proper_coloring(const Multigraph& g) {
    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);
    int used = 0;
    for (const Edge& e : g.edges()) {
        std::vector<char> taken(static_cast<size_t>(used) + 2, 0);
        for (VertexId x : {e.u, e.v}) {
            for (int id : g.incident_edge_ids(x)) {
                const int c = colors[static_cast<size_t>(id)];
                if (c != 0 && c <= used + 1) taken[static_cast<size_t>(c)] = 1;
            }
        }
        int k = 1;
        while (taken[static_cast<size_t>(k)]) ++k;
        colors[static_cast<size_t>(e.id)] = k;
        used = std::max(used, k);
    }
    return EdgeColoring(std::max(2, used), std::move(colors));
}

}  // namespace hec
