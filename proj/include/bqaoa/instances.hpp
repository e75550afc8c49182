#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bqaoa/problem.hpp"

namespace bqaoa {

using Triple = std::array<VarIndex, 3>;

struct CouplingFragment {
  WeightedGraph graph;
  std::vector<Triple> triples;
};

/// Heavy-hex lattice patch: rows + 1 horizontal chains of 4 * cols + 1 qubits
/// joined by degree-2 bridge qubits. Even gaps bridge columns 0, 4, ..., 4 * cols;
/// odd gaps bridge columns 2, 6, ..., 4 * cols - 2. Nodes are numbered chain by
/// chain with each gap's bridges following the chain above it.
///
/// The default triple set holds one path (i, j, k) per degree-2 node j, stored
/// as (min(i, k), j, max(i, k)).
[[nodiscard]] CouplingFragment heavy_hex_fragment(int rows, int cols);

/// Paths (i, j, k) whose center j has degree 2 in `graph`.
[[nodiscard]] std::vector<Triple> degree_two_triples(const WeightedGraph& graph);

/// Cubic random-bond spin glass: one linear term per node, one quadratic term
/// per edge, one cubic term per triple, each coefficient +-1 with equal
/// probability from a generator seeded by `seed`. Edge weights are ignored.
[[nodiscard]] SpinPolynomial spin_glass_instance(const WeightedGraph& coupling, const std::vector<Triple>& triples,
                                                 std::uint64_t seed);

/// Uniform-ish random k-regular simple graph by the pairing model with
/// rejection. With `weighted`, each edge (in sorted order) draws a weight from
/// {1/4, 1/2, 3/4, 1}.
[[nodiscard]] WeightedGraph random_regular_graph(int n, int k, std::uint64_t seed, bool weighted = false);

}  // namespace bqaoa
