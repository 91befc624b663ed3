#include "hec/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

namespace hec {

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Complete: return "complete";
        case FamilyKind::CompleteBipartite: return "complete_bipartite";
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Star: return "star";
        case FamilyKind::Wheel: return "wheel";
        case FamilyKind::Tree: return "tree";
        case FamilyKind::Custom: return "custom";
    }
    throw std::logic_error("unhandled FamilyKind");
}

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "complete") return FamilyKind::Complete;
    if (name == "complete_bipartite" || name == "bipartite") return FamilyKind::CompleteBipartite;
    if (name == "path") return FamilyKind::Path;
    if (name == "cycle") return FamilyKind::Cycle;
    if (name == "star") return FamilyKind::Star;
    if (name == "wheel") return FamilyKind::Wheel;
    if (name == "tree") return FamilyKind::Tree;
    if (name == "custom") return FamilyKind::Custom;
    throw std::invalid_argument("unknown graph family: " + name);
}

Multigraph::Multigraph(int n, const std::vector<std::pair<VertexId, VertexId>>& endpoints,
                       std::optional<FamilySpec> family)
    : n_(n), family_(std::move(family)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    incidence_.assign(static_cast<size_t>(n) + 1, {});
    edges_.reserve(endpoints.size());
    std::map<std::pair<VertexId, VertexId>, int> copies;
    for (auto [u, v] : endpoints) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        auto key = std::minmax(u, v);
        int id = static_cast<int>(edges_.size());
        edges_.push_back(Edge{id, u, v, copies[key]++});
        incidence_[u].push_back(id);
        incidence_[v].push_back(id);
    }
}

Multigraph Multigraph::from_edges(int n, std::vector<Edge> edges,
                                  std::optional<FamilySpec> family) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    Multigraph g;
    g.n_ = n;
    g.family_ = std::move(family);
    g.incidence_.assign(static_cast<size_t>(n) + 1, {});
    std::set<std::tuple<VertexId, VertexId, int>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.id != static_cast<int>(i))
            throw std::invalid_argument("edge ids must be dense 0..|E|-1");
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        if (e.copy < 0) throw std::invalid_argument("copy counter must be nonnegative");
        auto [lo, hi] = std::minmax(e.u, e.v);
        if (!seen.insert({lo, hi, e.copy}).second)
            throw std::invalid_argument("duplicate (u, v, copy) triple");
        g.incidence_[e.u].push_back(e.id);
        g.incidence_[e.v].push_back(e.id);
    }
    g.edges_ = std::move(edges);
    return g;
}

const Edge& Multigraph::edge(int id) const {
    if (id < 0 || id >= edge_count()) throw std::invalid_argument("edge id out of range");
    return edges_[static_cast<size_t>(id)];
}

void Multigraph::check_vertex(VertexId x) const {
    if (x < 1 || x > n_) throw std::invalid_argument("unknown vertex");
}

int Multigraph::degree(VertexId x) const {
    check_vertex(x);
    return static_cast<int>(incidence_[static_cast<size_t>(x)].size());
}

const std::vector<int>& Multigraph::incident_edge_ids(VertexId x) const {
    check_vertex(x);
    return incidence_[static_cast<size_t>(x)];
}

std::vector<Edge> Multigraph::incident_edges(VertexId x) const {
    std::vector<Edge> result;
    for (int id : incident_edge_ids(x)) result.push_back(edges_[static_cast<size_t>(id)]);
    return result;
}

std::vector<int> Multigraph::edge_ids_between(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    std::vector<int> ids;
    for (int id : incidence_[static_cast<size_t>(u)]) {
        const Edge& e = edges_[static_cast<size_t>(id)];
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ids.push_back(id);
    }
    return ids;
}

int Multigraph::max_degree() const {
    int best = 0;
    for (VertexId x = 1; x <= n_; ++x)
        best = std::max(best, static_cast<int>(incidence_[static_cast<size_t>(x)].size()));
    return best;
}

int Multigraph::reachable_from(VertexId start, std::vector<char>& seen) const {
    std::queue<VertexId> frontier;
    frontier.push(start);
    seen[static_cast<size_t>(start)] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        VertexId x = frontier.front();
        frontier.pop();
        for (int id : incidence_[static_cast<size_t>(x)]) {
            VertexId y = edges_[static_cast<size_t>(id)].other(x);
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                ++reached;
                frontier.push(y);
            }
        }
    }
    return reached;
}

bool Multigraph::is_eulerian() const {
    int with_edges = 0;
    VertexId start = 0;
    for (VertexId x = 1; x <= n_; ++x) {
        size_t d = incidence_[static_cast<size_t>(x)].size();
        if (d % 2 != 0) return false;
        if (d > 0) {
            ++with_edges;
            if (start == 0) start = x;
        }
    }
    if (with_edges == 0) return true;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    return reachable_from(start, seen) == with_edges;
}

bool Multigraph::is_tree() const {
    if (n_ < 1 || edge_count() != n_ - 1) return false;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    return reachable_from(1, seen) == n_;
}

bool Multigraph::is_cycle_graph() const {
    if (n_ < 3) return false;
    for (VertexId x = 1; x <= n_; ++x)
        if (incidence_[static_cast<size_t>(x)].size() != 2) return false;
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    return reachable_from(1, seen) == n_;
}

Multigraph complete(int n, int lambda) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    std::vector<std::pair<VertexId, VertexId>> ends;
    ends.reserve(static_cast<size_t>(lambda) * n * (n - 1) / 2);
    for (VertexId i = 1; i <= n; ++i)
        for (VertexId j = i + 1; j <= n; ++j)
            for (int t = 0; t < lambda; ++t) ends.emplace_back(i, j);
    return Multigraph(n, ends, FamilySpec{FamilyKind::Complete, {n, lambda}});
}

Multigraph complete_bipartite(int m, int n, int lambda) {
    if (m < 1 || n < 1) throw std::invalid_argument("bipartite parts need m, n >= 1");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    std::vector<std::pair<VertexId, VertexId>> ends;
    ends.reserve(static_cast<size_t>(lambda) * m * n);
    for (VertexId i = 1; i <= m; ++i)
        for (VertexId j = 1; j <= n; ++j)
            for (int t = 0; t < lambda; ++t) ends.emplace_back(i, m + j);
    return Multigraph(m + n, ends, FamilySpec{FamilyKind::CompleteBipartite, {m, n, lambda}});
}

Multigraph path(int n) {
    if (n < 2) throw std::invalid_argument("path needs n >= 2");
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (VertexId i = 1; i < n; ++i) ends.emplace_back(i, i + 1);
    return Multigraph(n, ends, FamilySpec{FamilyKind::Path, {n}});
}

Multigraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (VertexId i = 1; i < n; ++i) ends.emplace_back(i, i + 1);
    ends.emplace_back(n, 1);
    return Multigraph(n, ends, FamilySpec{FamilyKind::Cycle, {n}});
}

Multigraph star(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1 leaves");
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (VertexId i = 1; i <= n; ++i) ends.emplace_back(1, 1 + i);
    return Multigraph(n + 1, ends, FamilySpec{FamilyKind::Star, {n}});
}

Multigraph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (VertexId i = 2; i <= n; ++i) ends.emplace_back(1, i);       // spokes
    for (VertexId i = 2; i < n; ++i) ends.emplace_back(i, i + 1);    // rim
    ends.emplace_back(n, 2);                                         // rim closure
    return Multigraph(n, ends, FamilySpec{FamilyKind::Wheel, {n}});
}

Multigraph random_tree(int n, unsigned int seed) {
    if (n < 2) throw std::invalid_argument("tree needs n >= 2");
    FamilySpec spec{FamilyKind::Tree, {n, static_cast<long long>(seed)}};
    if (n == 2) return Multigraph(2, {{1, 2}}, spec);

    std::mt19937 rng(seed);
    std::uniform_int_distribution<VertexId> pick(1, n);
    std::vector<VertexId> pruefer(static_cast<size_t>(n) - 2);
    for (auto& x : pruefer) x = pick(rng);

    std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
    for (VertexId x : pruefer) ++deg[static_cast<size_t>(x)];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId x = 1; x <= n; ++x)
        if (deg[static_cast<size_t>(x)] == 1) leaves.push(x);

    std::vector<std::pair<VertexId, VertexId>> ends;
    ends.reserve(static_cast<size_t>(n) - 1);
    for (VertexId x : pruefer) {
        VertexId leaf = leaves.top();
        leaves.pop();
        ends.emplace_back(leaf, x);
        if (--deg[static_cast<size_t>(x)] == 1) leaves.push(x);
    }
    VertexId a = leaves.top();
    leaves.pop();
    VertexId b = leaves.top();
    ends.emplace_back(a, b);
    return Multigraph(n, ends, spec);
}

}  // namespace hec
