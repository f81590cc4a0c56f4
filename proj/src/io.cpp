#include "bgproj/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace bgproj {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(std::move(tok));
  return out;
}

bool parse_count(const std::string& tok, std::size_t& out) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (c < '0' || c > '9') return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

// Header line "n1 n2"; returns the 1-based line number it was found on.
std::size_t parse_header(std::istream& in, std::size_t& n1, std::size_t& n2) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (toks.size() != 2 || !parse_count(toks[0], n1) || !parse_count(toks[1], n2))
      throw ParseError(lineno, "expected header line with two vertex counts");
    return lineno;
  }
  throw ParseError(lineno + 1, "missing header line");
}

}  // namespace

ParseError::ParseError(std::size_t line_, const std::string& what_)
    : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

BiAdjacencyMatrix parse_biadjacency(std::istream& in) {
  std::size_t n1 = 0, n2 = 0;
  std::size_t lineno = parse_header(in, n1, n2);
  if (n1 < 1 || n2 < 1) throw ParseError(lineno, "vertex counts must be at least 1");

  BiAdjacencyMatrix m = BiAdjacencyMatrix::zero(n1, n2);
  std::string line;
  std::size_t row = 0;
  while (row < n1 && std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;  // blank lines between rows are tolerated
    if (toks.size() != n2)
      throw ParseError(lineno, "expected " + std::to_string(n2) + " matrix tokens, got " +
                                   std::to_string(toks.size()));
    for (std::size_t col = 0; col < n2; ++col) {
      if (toks[col] == "0")
        m.at(row, col) = 0;
      else if (toks[col] == "1")
        m.at(row, col) = 1;
      else
        throw MalformedMatrix(row, col, "token '" + toks[col] + "' is not 0 or 1");
    }
    ++row;
  }
  if (row < n1)
    throw ParseError(lineno + 1, "matrix ended after " + std::to_string(row) + " of " +
                                     std::to_string(n1) + " rows");
  while (std::getline(in, line)) {
    ++lineno;
    if (!tokens_of(line).empty())
      throw ParseError(lineno, "unexpected content after the last matrix row");
  }
  return m;
}

BipartiteGraph parse_edge_list(std::istream& in) {
  std::size_t n1 = 0, n2 = 0;
  std::size_t lineno = parse_header(in, n1, n2);
  if (n1 < 1 || n2 < 1) throw ParseError(lineno, "vertex counts must be at least 1");

  std::vector<std::pair<vertex_t, vertex_t>> pairs;
  bool tagged = false;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') {
      std::string trimmed = line;
      while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' ||
                                  trimmed.back() == '\r'))
        trimmed.pop_back();
      if (trimmed == kPendantPairMarker) tagged = true;
      continue;
    }
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    std::size_t u = 0, s = 0;
    if (toks.size() != 2 || !parse_count(toks[0], u) || !parse_count(toks[1], s))
      throw ParseError(lineno, "expected one 'u<TAB>s' pair");
    if (u >= n1)
      throw ParseError(lineno, "u index " + std::to_string(u) + " out of range [0, " +
                                   std::to_string(n1) + ")");
    if (s >= n2)
      throw ParseError(lineno, "s index " + std::to_string(s) + " out of range [0, " +
                                   std::to_string(n2) + ")");
    pairs.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(s));
  }
  BipartiteGraph g = from_edge_list(n1, n2, std::move(pairs));
  g.pendant_pair_instance = tagged;
  return g;
}

GraphFormat detect_format(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);

  std::size_t idx = 0;
  while (idx < lines.size() && tokens_of(lines[idx]).empty()) ++idx;
  if (idx >= lines.size()) return GraphFormat::EdgeList;
  const auto header = tokens_of(lines[idx]);
  std::size_t n1 = 0, n2 = 0;
  if (header.size() != 2 || !parse_count(header[0], n1) || !parse_count(header[1], n2))
    return GraphFormat::EdgeList;

  std::size_t rows = 0;
  for (++idx; idx < lines.size(); ++idx) {
    const auto toks = tokens_of(lines[idx]);
    if (toks.empty()) continue;
    if (rows == n1) return GraphFormat::EdgeList;  // more rows than the matrix allows
    if (toks.size() != n2) return GraphFormat::EdgeList;
    for (const auto& t : toks)
      if (t != "0" && t != "1") return GraphFormat::EdgeList;
    ++rows;
  }
  return rows == n1 ? GraphFormat::BiAdjacency : GraphFormat::EdgeList;
}

BipartiteGraph parse_graph(const std::string& text, GraphFormat format) {
  if (format == GraphFormat::Auto) format = detect_format(text);
  std::istringstream in(text);
  if (format == GraphFormat::BiAdjacency) return from_biadjacency(parse_biadjacency(in));
  return parse_edge_list(in);
}

void write_biadjacency(std::ostream& out, const BiAdjacencyMatrix& matrix) {
  out << matrix.rows << ' ' << matrix.cols << '\n';
  for (std::size_t i = 0; i < matrix.rows; ++i) {
    for (std::size_t j = 0; j < matrix.cols; ++j) {
      if (j) out << ' ';
      out << static_cast<int>(matrix.at(i, j));
    }
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const BipartiteGraph& g) {
  out << g.n1 << ' ' << g.n2 << '\n';
  if (g.pendant_pair_instance) out << kPendantPairMarker << '\n';
  for (const auto& [u, s] : g.edges) out << u << '\t' << s << '\n';
}

void write_projection(std::ostream& out, const UnipartiteGraph& g) {
  out << g.n << '\n';
  for (const auto& [i, j] : g.edges) out << i << '\t' << j << '\n';
}

void write_weighted_projection(std::ostream& out, const WeightedUnipartiteGraph& g) {
  out << g.n << '\n';
  for (const auto& e : g.edges) out << e.i << '\t' << e.j << '\t' << e.weight << '\n';
}

void write_projection_matrix(std::ostream& out, const UnipartiteGraph& g) {
  out << g.n << ' ' << g.n << '\n';
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (const auto& [i, j] : g.edges) {
    adj[i][j] = 1;
    adj[j][i] = 1;
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      if (j) out << ' ';
      out << static_cast<int>(adj[i][j]);
    }
    out << '\n';
  }
}

}  // namespace bgproj
