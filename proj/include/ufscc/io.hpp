#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ufscc/graph.hpp"
#include "ufscc/partition.hpp"

namespace ufscc {

enum class ParseErrorKind {
  MalformedHeader,     // fewer than two leading counts, or counts invalid
  TokenNotInteger,     // an edge token that is not an integer
  EndpointOutOfRange,  // endpoint outside [1, numberOfNodes]
  EdgeCountMismatch,   // body shorter or longer than the declared edge count
};

const char* parse_error_kind_name(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& detail);
  ParseErrorKind kind() const { return kind_; }
  const char* kind_name() const { return parse_error_kind_name(kind_); }

 private:
  ParseErrorKind kind_;
};

// Edge-list text: whitespace-separated tokens, first numberOfNodes then
// numberOfEdges, then exactly numberOfEdges "u v" pairs, 1-based. Any mix
// of spaces and newlines separates tokens; trailing whitespace is fine,
// trailing tokens are not. Returns the 0-based graph with edges in file
// order. Throws ParseError.
DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list: "n m" header then one "u v" line per edge,
// 1-based, per-vertex insertion order.
void format_edge_list(const DirectedGraph& g, std::ostream& out);
std::string format_edge_list(const DirectedGraph& g);

// Partition text: component count, then one line per component with each
// member as a 1-based id followed by a single space (the trailing space
// before the newline is part of the format).
void format_partition(const SccPartition& p, std::ostream& out);
std::string format_partition(const SccPartition& p);

}  // namespace ufscc
