#pragma once

#include <string>
#include <string_view>

#include "circumlab/graph.hpp"

namespace circumlab {

// graph6, short form only (n <= 62, single size byte, no ">>graph6<<" header).
// Byte 0 is n+63; the upper-triangle bits x(i,j), i<j, ordered by j ascending
// then i ascending, are packed big-endian into 6-bit groups, zero padded,
// each group offset by 63.

Graph parse_graph6(std::string_view token);
std::string emit_graph6(const Graph& g);

} // namespace circumlab
