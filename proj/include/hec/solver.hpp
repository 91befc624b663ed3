#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"

namespace hec {

struct SolverOptions {
    // Aborts the search past this many color placements instead of
    // returning a wrong or partial answer.
    std::uint64_t node_budget = 500'000'000;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes_explored = 0;
};

struct ChiTildeResult {
    int value = 0;
    EdgeColoring witness;
    std::vector<int> infeasible_below;  // every m < value, each exhaustively refuted
    std::uint64_t nodes_explored = 0;   // summed over all searched m
};

// Exact decision: does g admit an m-homogeneous edge-coloring? Complete
// backtracking over edges in id order with canonical color introduction
// (color k+1 may appear only after k), per-vertex count caps at ceil(d/m),
// per-vertex deficit pruning against floor(d/m), and a degree-sum parity
// precheck; feasible = false is therefore a proof of nonexistence.
FeasibilityResult feasible(const Multigraph& g, int m, const SolverOptions& options = {});

// Minimum m >= 2 admitting a homogeneous coloring. m-feasibility is not
// monotone in m (the 5-wheel is 2-feasible yet 3-infeasible), so every m
// is tested in increasing order; a greedy proper coloring provides the
// terminating upper bound since proper colorings are homogeneous.
ChiTildeResult chi_tilde(const Multigraph& g, const SolverOptions& options = {});

// Evaluates the predicate on every 2-coloring of g's edges (m = 2) and
// reports whether all of them satisfy it. Refuses more than `max_edges`
// edges to keep the 2^|E| enumeration bounded.
bool all_two_colorings_satisfy(const Multigraph& g,
                               const std::function<bool(const EdgeColoring&)>& predicate,
                               int max_edges = 16);

// First-fit proper edge coloring; used as the chi_tilde upper bound and
// exposed for the bound checks in tests.
EdgeColoring greedy_proper_coloring(const Multigraph& g);

}  // namespace hec
