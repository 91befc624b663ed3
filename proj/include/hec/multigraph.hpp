#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hec {

// Vertices are 1-based: a graph on n vertices has vertex set {1, ..., n}.
using VertexId = int;

enum class FamilyKind {
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
    Wheel,
    Tree,
    Custom,
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

// Symbolic description of a generated graph instance.
// params: Complete {n, lambda}; CompleteBipartite {m, n, lambda};
// Tree {n, seed}; Path/Cycle/Star/Wheel {n}; Custom {}.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Custom;
    std::vector<long long> params;

    bool operator==(const FamilySpec&) const = default;
};

// Loopless undirected edge. Parallel edges are distinct objects told apart
// by `copy`; (u, v, copy) is unique within a graph with (u, v) unordered.
struct Edge {
    int id = 0;
    VertexId u = 0;
    VertexId v = 0;
    int copy = 0;

    bool operator==(const Edge&) const = default;

    VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Immutable loopless multigraph. Edge ids are dense (0 .. edge_count()-1)
// and fixed at construction; all queries are const and thread-safe.
class Multigraph {
public:
    // Builds a graph from endpoint pairs; ids follow list order and copy
    // counters are assigned per unordered pair in order of appearance.
    Multigraph(int n, const std::vector<std::pair<VertexId, VertexId>>& endpoints,
               std::optional<FamilySpec> family = std::nullopt);

    // Builds from fully specified edges (deserialization path); validates
    // id density, vertex ranges, looplessness and (u, v, copy) uniqueness.
    static Multigraph from_edges(int n, std::vector<Edge> edges,
                                 std::optional<FamilySpec> family = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const;

    // Parallel edges count with multiplicity.
    int degree(VertexId x) const;
    // Incident edges ordered by edge id.
    const std::vector<int>& incident_edge_ids(VertexId x) const;
    std::vector<Edge> incident_edges(VertexId x) const;
    // Ids of all parallel copies between u and v, ordered by id.
    std::vector<int> edge_ids_between(VertexId u, VertexId v) const;

    int max_degree() const;
    // Connected when isolated vertices are ignored, and every degree even.
    bool is_eulerian() const;
    // Spanning, connected and acyclic (parallel edges already form a cycle).
    bool is_tree() const;
    // Connected with every degree exactly 2, on at least 3 vertices.
    bool is_cycle_graph() const;

    const std::optional<FamilySpec>& family() const { return family_; }

private:
    Multigraph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incidence_;  // indexed 1..n_, [0] unused
    std::optional<FamilySpec> family_;

    void check_vertex(VertexId x) const;
    // Reached vertices from a BFS over edges, empty graph handled by caller.
    int reachable_from(VertexId start, std::vector<char>& seen) const;
};

// Deterministic generators for the supported graph families. All of them
// reject out-of-range parameters with std::invalid_argument.

// lambda parallel edges between every pair of n >= 2 vertices.
Multigraph complete(int n, int lambda = 1);
// Parts {1..m} and {m+1..m+n}, lambda edges per cross pair.
Multigraph complete_bipartite(int m, int n, int lambda = 1);
// Vertices x_1..x_n joined in a line, n >= 2.
Multigraph path(int n);
// Closed ring on n >= 3 vertices.
Multigraph cycle(int n);
// Hub x_1 joined to n leaves x_2..x_{n+1}.
Multigraph star(int n);
// Hub x_1 plus rim cycle x_2..x_n, n >= 4.
Multigraph wheel(int n);
// Uniform random labelled tree, decoded from a seed-derived Pruefer
// sequence; identical seeds yield identical graphs.
Multigraph random_tree(int n, unsigned int seed);

}  // namespace hec
