#pragma once

#include <iosfwd>
#include <string>

#include "bgproj/core.hpp"
#include "bgproj/projection.hpp"

namespace bgproj {

struct ParseError : Error {
  std::size_t line;  // 1-based
  ParseError(std::size_t line_, const std::string& what_);
};

enum class GraphFormat { Auto, BiAdjacency, EdgeList };

// Bi-adjacency text: "n1 n2" header, then n1 rows of n2 whitespace-separated
// 0/1 tokens. A non-0/1 token raises MalformedMatrix; shape problems raise
// ParseError with the offending line.
BiAdjacencyMatrix parse_biadjacency(std::istream& in);

// Edge-list text: "n1 n2" header, then one "u<TAB>s" pair per non-empty
// line. '#' lines are comments; the marker comment written by the generator
// for pendant-pair instances restores the in-memory tag.
BipartiteGraph parse_edge_list(std::istream& in);

// Header of two integers followed by exactly n1 rows of n2 0/1 tokens is a
// bi-adjacency matrix; anything else is an edge list.
GraphFormat detect_format(const std::string& text);

BipartiteGraph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto);

void write_biadjacency(std::ostream& out, const BiAdjacencyMatrix& matrix);
void write_edge_list(std::ostream& out, const BipartiteGraph& g);

// Projection output: "n" header, then "i<TAB>j" (weighted: "i<TAB>j<TAB>w")
// per edge with i < j, sorted.
void write_projection(std::ostream& out, const UnipartiteGraph& g);
void write_weighted_projection(std::ostream& out, const WeightedUnipartiteGraph& g);

// Dense mirror of the projection: "n n" header plus an n x n 0/1 matrix.
void write_projection_matrix(std::ostream& out, const UnipartiteGraph& g);

// Comment marker that carries the pendant_pair_instance tag across files.
inline constexpr const char* kPendantPairMarker = "# pendant-pair-instance";

}  // namespace bgproj
