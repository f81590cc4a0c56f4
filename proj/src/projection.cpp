#include "bgproj/projection.hpp"

#include <algorithm>

namespace bgproj {

bool UnipartiteGraph::has_edge(vertex_t i, vertex_t j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::size_t> UnipartiteGraph::degrees() const {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [i, j] : edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

bool operator==(const UnipartiteGraph& a, const UnipartiteGraph& b) {
  return a.n == b.n && a.edges == b.edges;
}

bool is_connected(const UnipartiteGraph& g) {
  if (g.n <= 1) return true;
  std::vector<std::vector<vertex_t>> adj(g.n);
  for (const auto& [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<vertex_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    vertex_t v = stack.back();
    stack.pop_back();
    for (vertex_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n;
}

std::uint64_t WeightedUnipartiteGraph::total_weight() const {
  std::uint64_t sum = 0;
  for (const auto& e : edges) sum += e.weight;
  return sum;
}

bool operator==(const WeightedUnipartiteGraph& a, const WeightedUnipartiteGraph& b) {
  return a.n == b.n && a.edges == b.edges;
}

UnipartiteGraph project_matrix(const BiAdjacencyMatrix& matrix) {
  validate_biadjacency(matrix);
  UnipartiteGraph out;
  out.n = matrix.rows;
  const std::size_t n1 = matrix.rows;
  const std::size_t n2 = matrix.cols;
  for (std::size_t i = 0; i + 1 < n1; ++i) {
    const std::uint8_t* ri = matrix.row(i);
    for (std::size_t j = i + 1; j < n1; ++j) {
      const std::uint8_t* rj = matrix.row(j);
      for (std::size_t k = 0; k < n2; ++k) {
        if (ri[k] == 1 && rj[k] == 1) {
          out.edges.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
          break;
        }
      }
    }
  }
  // (i, j) pairs were visited in lexicographic order, so edges are sorted
  return out;
}

UnipartiteGraph project_sparse(const BipartiteGraph& g, Side side) {
  if (side == Side::S) return project_sparse(transpose(g), Side::U);

  UnipartiteGraph out;
  out.n = g.n1;
  // Per-source marking keeps memory at O(n1) instead of buffering one entry
  // per wedge; stamps avoid clearing the mark array between sources.
  std::vector<std::uint32_t> mark(g.n1, 0);
  std::uint32_t stamp = 0;
  for (std::size_t u = 0; u < g.n1; ++u) {
    ++stamp;
    const std::size_t first = out.edges.size();
    for (vertex_t s : g.adj_u[u]) {
      for (vertex_t v : g.adj_s[s]) {
        if (v > u && mark[v] != stamp) {
          mark[v] = stamp;
          out.edges.emplace_back(static_cast<vertex_t>(u), v);
        }
      }
    }
    std::sort(out.edges.begin() + static_cast<std::ptrdiff_t>(first), out.edges.end());
  }
  return out;
}

WeightedUnipartiteGraph project_weighted(const BipartiteGraph& g, Side side) {
  if (side == Side::S) return project_weighted(transpose(g), Side::U);

  WeightedUnipartiteGraph out;
  out.n = g.n1;
  std::vector<std::uint32_t> count(g.n1, 0);
  std::vector<vertex_t> touched;
  for (std::size_t u = 0; u < g.n1; ++u) {
    touched.clear();
    for (vertex_t s : g.adj_u[u]) {
      for (vertex_t v : g.adj_s[s]) {
        if (v > u) {
          if (count[v] == 0) touched.push_back(v);
          ++count[v];
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    for (vertex_t v : touched) {
      out.edges.push_back({static_cast<vertex_t>(u), v, count[v]});
      count[v] = 0;
    }
  }
  return out;
}

UnipartiteGraph strip_weights(const WeightedUnipartiteGraph& wg) {
  UnipartiteGraph out;
  out.n = wg.n;
  out.edges.reserve(wg.edges.size());
  for (const auto& e : wg.edges) out.edges.emplace_back(e.i, e.j);
  return out;
}

}  // namespace bgproj
