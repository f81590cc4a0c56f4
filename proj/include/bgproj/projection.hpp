#pragma once

#include "bgproj/core.hpp"

namespace bgproj {

// Simple undirected graph on one vertex set. Edges are normalized to i < j
// and kept sorted, so lookups are binary searches and serialized output is
// deterministic.
struct UnipartiteGraph {
  std::size_t n = 0;
  std::vector<std::pair<vertex_t, vertex_t>> edges;

  bool has_edge(vertex_t i, vertex_t j) const;
  std::vector<std::size_t> degrees() const;
};

bool operator==(const UnipartiteGraph& a, const UnipartiteGraph& b);

bool is_connected(const UnipartiteGraph& g);

struct WeightedEdge {
  vertex_t i = 0;
  vertex_t j = 0;
  std::uint32_t weight = 0;  // count of shared neighbors, always >= 1

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct WeightedUnipartiteGraph {
  std::size_t n = 0;
  std::vector<WeightedEdge> edges;  // i < j, sorted by (i, j)

  std::uint64_t total_weight() const;
};

bool operator==(const WeightedUnipartiteGraph& a, const WeightedUnipartiteGraph& b);

// Pairwise row scan over the dense matrix: rows i and j become adjacent as
// soon as one shared column holds 1 in both. Work is Theta(n1^2 * n2) in the
// worst case and the scan stops at the first hit per pair.
UnipartiteGraph project_matrix(const BiAdjacencyMatrix& matrix);

// Wedge enumeration over the opposite side: every vertex there links all
// pairs of its neighborhood. Work is proportional to the sum of squared
// opposite-side degrees, which beats the matrix scan on sparse inputs.
// Side::S is handled by transposing and projecting Side::U.
UnipartiteGraph project_sparse(const BipartiteGraph& g, Side side);

// Same wedge walk with a counter per pair instead of early exit; the weight
// of {i, j} is the number of shared opposite-side neighbors.
WeightedUnipartiteGraph project_weighted(const BipartiteGraph& g, Side side);

UnipartiteGraph strip_weights(const WeightedUnipartiteGraph& wg);

}  // namespace bgproj
