#pragma once

#include <string>
#include <vector>

#include "hec/multigraph.hpp"

namespace hec {

// Partition of the edge set of K_n (n odd) into (n-1)/2 Hamiltonian
// cycles, each given as a vertex sequence of length n (closed implicitly).
struct HamiltonianDecomposition {
    int n = 0;
    std::vector<std::vector<VertexId>> cycles;
};

// Rotation construction: the zig-zag base cycle on {1..n-1} around the
// fixed vertex n, shifted k times mod n-1 for k = 0..(n-3)/2. Cycle order
// is the rotation order, so "the last cycle" is well defined.
HamiltonianDecomposition walecki_decompose(int n);

// Checks Hamiltonicity of every cycle, pairwise edge-disjointness and full
// coverage of K_n. On failure returns false and, when `reason` is given,
// stores a one-line diagnostic.
bool verify_decomposition(const HamiltonianDecomposition& d, std::string* reason = nullptr);

}  // namespace hec
