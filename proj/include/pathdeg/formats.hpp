#pragma once

#include "pathdeg/colorings.hpp"
#include "pathdeg/graph.hpp"
#include "pathdeg/reduction.hpp"
#include "pathdeg/wcol.hpp"

#include <string>
#include <string_view>

namespace pathdeg {

/// Lines of `u v`, with `#` comments and blank lines ignored. The first
/// non-comment line may be `n <count>` to fix the order (isolated vertices);
/// otherwise the order is one more than the largest id. Throws ParseError
/// carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// `n <count>` followed by one `u v` line per edge in edge order.
std::string write_edge_list(const Graph& g);

/// Standard graph6, with or without the `>>graph6<<` header; trailing
/// newline tolerated. Throws ParseError (line 1) on a byte outside 63..126,
/// a truncated or overlong bit vector, or nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// One step per line: `I v`, `L v`, `E v0 v1 ... vk`.
std::string serialize_certificate(const ReductionSequence& sequence);
/// Inverse of serialize_certificate; p and exact_ears are supplied by the caller.
ReductionSequence parse_certificate(std::string_view text, std::size_t p, bool exact_ears);

struct CertificateCheck {
    bool ok = false;
    /// Empty when ok; otherwise names the first failing line.
    std::string message;
    std::size_t steps = 0;
};

/// Standalone checker for the certificate line format, sharing nothing with
/// the reduction engine: replays every line on its own adjacency sets and
/// requires the graph to be empty at the end.
CertificateCheck check_certificate_text(const Graph& g, std::string_view text, std::size_t p, bool exact_ears);

/// One `u v color` line per edge, in edge order.
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);
/// Throws ParseError on malformed lines, unknown or repeated edges, or a
/// missing edge.
EdgeColoring parse_coloring(const Graph& g, std::string_view text);

/// Vertices from first to last, space separated.
std::string serialize_order(const LinearOrder& pi);
LinearOrder parse_order(std::string_view text);

} // namespace pathdeg
