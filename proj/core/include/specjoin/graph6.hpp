#pragma once

#include <string>
#include <string_view>

#include "specjoin/graph.hpp"

namespace specjoin {

// graph6 interchange format, single-byte size header only (n <= 62).
// Bits cover the upper adjacency triangle column by column:
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
// groups offset by 63. parse_graph6 strips an optional ">>graph6<<"
// prefix and trailing whitespace; anything else out of place raises
// ParseError with the byte offset.
Graph parse_graph6(std::string_view text);

// Canonical encoding (zero padding bits). Throws ErrorKind::Size for n > 62.
std::string write_graph6(const Graph& g);

}  // namespace specjoin
