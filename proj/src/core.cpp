#include "bgproj/core.hpp"

#include <algorithm>

namespace bgproj {

namespace {

// Every construction path ends here: per-side degree sums and the edge
// count must agree before a graph is handed out.
void check_degree_balance(const BipartiteGraph& g) {
  std::uint64_t sum_u = 0, sum_s = 0;
  for (const auto& nb : g.adj_u) sum_u += nb.size();
  for (const auto& nb : g.adj_s) sum_s += nb.size();
  if (sum_u != g.edges.size() || sum_s != g.edges.size())
    throw std::logic_error("degree sums diverged from edge count");
}

}  // namespace

const char* side_name(Side side) { return side == Side::U ? "u" : "s"; }

InvalidVertex::InvalidVertex(Side side_, std::size_t index_)
    : Error("vertex index " + std::to_string(index_) + " out of range on side " +
            side_name(side_)),
      side(side_),
      index(index_) {}

MalformedMatrix::MalformedMatrix(std::size_t row_, std::size_t col_, const std::string& what_)
    : Error("malformed matrix cell (" + std::to_string(row_) + ", " + std::to_string(col_) +
            "): " + what_),
      row(row_),
      col(col_) {}

bool BipartiteGraph::has_edge(vertex_t u, vertex_t s) const {
  const auto& nb = adj_u[u];
  return std::binary_search(nb.begin(), nb.end(), s);
}

bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
  return a.n1 == b.n1 && a.n2 == b.n2 && a.edges == b.edges;
}

BiAdjacencyMatrix BiAdjacencyMatrix::zero(std::size_t rows, std::size_t cols) {
  BiAdjacencyMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.cells.assign(rows * cols, 0);
  return m;
}

bool operator==(const BiAdjacencyMatrix& a, const BiAdjacencyMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.cells == b.cells;
}

void validate_biadjacency(const BiAdjacencyMatrix& matrix) {
  if (matrix.rows < 1 || matrix.cols < 1)
    throw PreconditionViolated("matrix must have at least one row and one column");
  if (matrix.cells.size() != matrix.rows * matrix.cols)
    throw PreconditionViolated("matrix cell buffer does not match rows * cols");
  for (std::size_t i = 0; i < matrix.rows; ++i)
    for (std::size_t j = 0; j < matrix.cols; ++j)
      if (matrix.at(i, j) > 1)
        throw MalformedMatrix(i, j, "cell is not 0 or 1");
}

BipartiteGraph from_edge_list(std::size_t n1, std::size_t n2,
                              std::vector<std::pair<vertex_t, vertex_t>> pairs) {
  if (n1 < 1 || n2 < 1)
    throw PreconditionViolated("both vertex sets must be non-empty");
  for (const auto& [u, s] : pairs) {
    if (u >= n1) throw InvalidVertex(Side::U, u);
    if (s >= n2) throw InvalidVertex(Side::S, s);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  BipartiteGraph g;
  g.n1 = n1;
  g.n2 = n2;
  g.edges = std::move(pairs);
  g.adj_u.resize(n1);
  g.adj_s.resize(n2);
  // edges are sorted by (u, s), so both adjacency lists come out ascending
  for (const auto& [u, s] : g.edges) {
    g.adj_u[u].push_back(s);
    g.adj_s[s].push_back(u);
  }
  check_degree_balance(g);
  return g;
}

BipartiteGraph from_biadjacency(const BiAdjacencyMatrix& matrix) {
  validate_biadjacency(matrix);
  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  for (std::size_t i = 0; i < matrix.rows; ++i)
    for (std::size_t j = 0; j < matrix.cols; ++j)
      if (matrix.at(i, j) == 1)
        pairs.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
  return from_edge_list(matrix.rows, matrix.cols, std::move(pairs));
}

BiAdjacencyMatrix to_biadjacency(const BipartiteGraph& g) {
  BiAdjacencyMatrix m = BiAdjacencyMatrix::zero(g.n1, g.n2);
  for (const auto& [u, s] : g.edges) m.at(u, s) = 1;
  return m;
}

DegreeSums degree_sums(const BipartiteGraph& g) {
  DegreeSums out;
  for (const auto& nb : g.adj_u) out.sum_u += nb.size();
  for (const auto& nb : g.adj_s) out.sum_s += nb.size();
  out.m = g.edges.size();
  return out;
}

bool is_connected(const BipartiteGraph& g) {
  const std::size_t total = g.n1 + g.n2;
  if (total < 1) throw PreconditionViolated("graph has no vertices");
  // U vertices are encoded as [0, n1), S vertices as n1 + j.
  std::vector<char> seen(total, 0);
  std::vector<std::size_t> stack;
  stack.push_back(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v < g.n1) {
      for (vertex_t s : g.adj_u[v]) {
        if (!seen[g.n1 + s]) {
          seen[g.n1 + s] = 1;
          ++reached;
          stack.push_back(g.n1 + s);
        }
      }
    } else {
      for (vertex_t u : g.adj_s[v - g.n1]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  return reached == total;
}

DensityStats density_stats(const BipartiteGraph& g) {
  if (g.n1 < 1 || g.n2 < 1)
    throw PreconditionViolated("both vertex sets must be non-empty");
  DensityStats st;
  st.n1 = g.n1;
  st.n2 = g.n2;
  st.m = g.m();
  st.max_edges = g.n1 * g.n2;
  st.density = static_cast<double>(st.m) / static_cast<double>(st.max_edges);
  st.linear_budget = g.n1 + g.n2;
  return st;
}

BipartiteGraph transpose(const BipartiteGraph& g) {
  std::vector<std::pair<vertex_t, vertex_t>> flipped;
  flipped.reserve(g.edges.size());
  for (const auto& [u, s] : g.edges) flipped.emplace_back(s, u);
  BipartiteGraph t = from_edge_list(g.n2, g.n1, std::move(flipped));
  t.pendant_pair_instance = g.pendant_pair_instance;
  return t;
}

}  // namespace bgproj
