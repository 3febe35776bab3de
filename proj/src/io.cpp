#include "ufscc/io.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace ufscc {

const char* parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::MalformedHeader: return "MalformedHeader";
    case ParseErrorKind::TokenNotInteger: return "TokenNotInteger";
    case ParseErrorKind::EndpointOutOfRange: return "EndpointOutOfRange";
    case ParseErrorKind::EdgeCountMismatch: return "EdgeCountMismatch";
  }
  return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(parse_error_kind_name(kind)) + ": " + detail),
      kind_(kind) {}

namespace {

bool next_token(std::istream& in, std::string& token) {
  return static_cast<bool>(in >> token);
}

// Strict full-token parse; no sign, no suffix.
bool parse_count(const std::string& token, std::uint64_t& value) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc{} && ptr == end;
}

// 1-based endpoint. Signed so "-3" reads as an integer and fails the range
// check instead of the integer check.
std::uint64_t parse_endpoint(const std::string& token, std::uint64_t limit) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range && ptr == end) {
    throw ParseError(ParseErrorKind::EndpointOutOfRange,
                     "endpoint " + token + " outside [1, " +
                         std::to_string(limit) + "]");
  }
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ParseErrorKind::TokenNotInteger,
                     "edge token \"" + token + "\" is not an integer");
  }
  if (value < 1 || static_cast<std::uint64_t>(value) > limit) {
    throw ParseError(ParseErrorKind::EndpointOutOfRange,
                     "endpoint " + token + " outside [1, " +
                         std::to_string(limit) + "]");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

DirectedGraph parse_edge_list(std::istream& in) {
  std::string token;

  std::uint64_t node_count = 0;
  if (!next_token(in, token) || !parse_count(token, node_count)) {
    throw ParseError(ParseErrorKind::MalformedHeader,
                     "expected a node count as the first token");
  }
  if (node_count > std::numeric_limits<VertexId>::max()) {
    throw ParseError(ParseErrorKind::MalformedHeader,
                     "node count " + token + " too large");
  }

  std::uint64_t edge_count = 0;
  if (!next_token(in, token) || !parse_count(token, edge_count)) {
    throw ParseError(ParseErrorKind::MalformedHeader,
                     "expected an edge count as the second token");
  }

  DirectedGraph graph(static_cast<VertexId>(node_count));
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    if (!next_token(in, token)) {
      throw ParseError(ParseErrorKind::EdgeCountMismatch,
                       "header declares " + std::to_string(edge_count) +
                           " edges but the body ends after " +
                           std::to_string(i));
    }
    std::uint64_t u = parse_endpoint(token, node_count);
    if (!next_token(in, token)) {
      throw ParseError(ParseErrorKind::EdgeCountMismatch,
                       "edge " + std::to_string(i + 1) + " is missing its target");
    }
    std::uint64_t v = parse_endpoint(token, node_count);
    graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
  }

  if (next_token(in, token)) {
    throw ParseError(ParseErrorKind::EdgeCountMismatch,
                     "file continues past the declared " +
                         std::to_string(edge_count) + " edges");
  }
  return graph;
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void format_edge_list(const DirectedGraph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      out << u + 1 << ' ' << v + 1 << '\n';
    }
  }
}

std::string format_edge_list(const DirectedGraph& g) {
  std::ostringstream out;
  format_edge_list(g, out);
  return out.str();
}

void format_partition(const SccPartition& p, std::ostream& out) {
  out << p.component_count << '\n';
  for (const auto& component : p.members) {
    for (VertexId v : component) {
      out << v + 1 << ' ';
    }
    out << '\n';
  }
}

std::string format_partition(const SccPartition& p) {
  std::ostringstream out;
  format_partition(p, out);
  return out.str();
}

}  // namespace ufscc
