#pragma once

#include <string>

#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "hec/solver.hpp"

namespace hec {

// Some complete-graph rules exist in two interchangeable forms: one built
// from a Hamiltonian cycle decomposition and one given by a closed formula
// on the vertex labels (circulant distance bands or label sums). Auto
// picks a valid form for the given order.
enum class ColoringVariant { Auto, Cycles, Circulant, Direct };

std::string to_string(ColoringVariant v);
ColoringVariant coloring_variant_from_string(const std::string& name);

// A coloring together with the closed-form rule that produced it; the
// coloring always verifies on the graph it was built for.
struct ConstructionResult {
    EdgeColoring coloring;
    std::string theorem;  // rule tag, e.g. "complete-even", "wheel"
    std::string variant;  // empty when the rule has a single form
};

// K_n for even n >= 4, m = 2: color 1 when the label sum i+j is odd.
// Every vertex ends with n/2 edges of color 1 and n/2 - 1 of color 2.
ConstructionResult color_complete_even(int n);

// K_n for n = 4h+1 >= 5, m = 2. Cycles: the first (n-1)/4 cycles of the
// Walecki decomposition get color 1, the rest color 2. Circulant: color 1
// exactly on the pairs at cyclic label distance 1..h. Either way every
// vertex sees both colors (n-1)/2 times.
ConstructionResult color_complete_1mod4(int n, ColoringVariant variant = ColoringVariant::Auto);

// K_n for n = 4k+3 >= 3, m = 3, split by n mod 12.
//   n = 12h+7:  Cycles (decomposition thirds) or Circulant (three distance
//               bands); all counts equal (n-1)/3.
//   n = 12h+11: Direct only: label-sum rule mod 3 with a dedicated rule
//               for edges at the last vertex; counts {4h+4, 4h+3, 4h+3}.
//   n = 12h+3:  Cycles (thirds plus a final cycle colored 1,2,...,1,2,3)
//               or Direct (plain label-sum rule); counts {4h, 4h+1, 4h+1}.
// Cycle forms require n >= 7.
ConstructionResult color_complete_3mod4(int n, ColoringVariant variant = ColoringVariant::Auto);

// lambda-fold K_n, any n >= 2, lambda >= 1. Uses m = 3 when lambda is odd
// and n = 3 mod 4, otherwise m = 2, following the per-case copy recipes
// (swapped copies, solid copies, or copies cycled through the three-color
// permutations).
ConstructionResult color_lambda_complete(int n, int lambda);

// Any tree on >= 2 vertices, m = 2. Leaves are stripped to a stack until
// one edge remains, that edge gets color 1, and each restored leaf edge
// takes whichever color its attachment point has seen less (ties favor
// color 1), so every vertex stays balanced throughout.
ConstructionResult color_tree(const Multigraph& g);

// lambda-fold K_{m,n}, m = 2: color 1 when the within-part indices have
// even sum; odd copies use the swapped coloring so parallel classes
// alternate 1,2,1,...
ConstructionResult color_complete_bipartite(int m_part, int n_part, int lambda = 1);

// Wheel on n >= 4 vertices, m = 2: spokes colored by the parity of the rim
// label, rim edges by the parity of their lower label, and the closing rim
// edge {x_n, x_2} colored 1 exactly when n is odd, which is the value the
// rim endpoints force.
ConstructionResult color_wheel(int n);

// Path: alternate 1,2 along the edges (m = 2).
ConstructionResult color_path(int n);

// Cycle: alternate 1,2 when n is even (m = 2); when n is odd use m = 3
// with the pattern 1,2,...,1,2,3 around the cycle.
ConstructionResult color_cycle(int n);

// Eulerian graph with max degree >= 4: a Delta/2-homogeneous coloring
// found by the exact solver. Throws when none exists, which can happen on
// eulerian multigraphs whose forced per-color degree sums are odd (a
// triangle and a square sharing a vertex is the smallest example); an even
// edge count rules that obstruction out at Delta = 4.
ConstructionResult color_eulerian(const Multigraph& g, const SolverOptions& options = {});

}  // namespace hec
