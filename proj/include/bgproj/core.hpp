#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgproj {

using vertex_t = std::uint32_t;

// Names one of the two vertex sets. For projections it is the set that
// survives into the one-mode output.
enum class Side { U, S };

const char* side_name(Side side);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
  Side side;
  std::size_t index;
  InvalidVertex(Side side_, std::size_t index_);
};

struct MalformedMatrix : Error {
  std::size_t row;
  std::size_t col;
  MalformedMatrix(std::size_t row_, std::size_t col_, const std::string& what_);
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct UnsatisfiableSpec : Error {
  using Error::Error;
};

// Bipartite graph over two 0-based dense index spaces U = [0, n1) and
// S = [0, n2). Edges always cross sides. Instances are built through
// from_edge_list / from_biadjacency and treated as immutable afterwards;
// every operation below is a pure read, so sharing across threads is safe.
struct BipartiteGraph {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<std::pair<vertex_t, vertex_t>> edges;  // sorted, no duplicates
  std::vector<std::vector<vertex_t>> adj_u;          // S-neighbors per U vertex, ascending
  std::vector<std::vector<vertex_t>> adj_s;          // U-neighbors per S vertex, ascending

  // Set by generate_with_pendant_pair: the instance is intentionally
  // disconnected (its pendant edge forms a separate component) and the
  // pendant-disconnection check accepts it without the connectivity gate.
  bool pendant_pair_instance = false;

  std::size_t m() const { return edges.size(); }
  std::size_t deg_u(vertex_t u) const { return adj_u[u].size(); }
  std::size_t deg_s(vertex_t s) const { return adj_s[s].size(); }
  bool has_edge(vertex_t u, vertex_t s) const;
};

// Structural equality: counts and edge sets only.
bool operator==(const BipartiteGraph& a, const BipartiteGraph& b);

// Dense 0/1 matrix; rows index U, columns index S. Cells are stored
// row-major and may hold arbitrary bytes until validated.
struct BiAdjacencyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;

  static BiAdjacencyMatrix zero(std::size_t rows, std::size_t cols);

  std::uint8_t& at(std::size_t i, std::size_t j) { return cells[i * cols + j]; }
  std::uint8_t at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  const std::uint8_t* row(std::size_t i) const { return cells.data() + i * cols; }
};

bool operator==(const BiAdjacencyMatrix& a, const BiAdjacencyMatrix& b);

// Throws MalformedMatrix on any cell not in {0,1}, PreconditionViolated on
// an empty side or a cell buffer of the wrong size.
void validate_biadjacency(const BiAdjacencyMatrix& matrix);

struct DegreeSums {
  std::uint64_t sum_u = 0;
  std::uint64_t sum_s = 0;
  std::uint64_t m = 0;
};

struct DensityStats {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t m = 0;
  std::size_t max_edges = 0;      // n1 * n2
  double density = 0.0;           // m / (n1 * n2)
  std::size_t linear_budget = 0;  // n1 + n2
};

// Builds a graph from (u, s) index pairs. Duplicates are dropped, order is
// irrelevant. Throws InvalidVertex on an out-of-range index and
// PreconditionViolated when either side is empty.
BipartiteGraph from_edge_list(std::size_t n1, std::size_t n2,
                              std::vector<std::pair<vertex_t, vertex_t>> pairs);

BipartiteGraph from_biadjacency(const BiAdjacencyMatrix& matrix);

BiAdjacencyMatrix to_biadjacency(const BipartiteGraph& g);

// Both per-side degree sums and the edge count; the three are always equal.
DegreeSums degree_sums(const BipartiteGraph& g);

// True iff a traversal from U-vertex 0 reaches all n1 + n2 vertices.
bool is_connected(const BipartiteGraph& g);

DensityStats density_stats(const BipartiteGraph& g);

// Swaps the two sides: edges (u, s) become (s, u).
BipartiteGraph transpose(const BipartiteGraph& g);

}  // namespace bgproj
