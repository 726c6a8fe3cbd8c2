#pragma once

#include "hyperkernel/hypergraph.hpp"

#include <string>
#include <string_view>

namespace hyperkernel::io {

// Text format:
//   # comment lines anywhere
//   h <n> <m>
//   m lines of 1 to 3 whitespace-separated 1-based vertex indices
//
// Parsing yields vertices 0..n-1. Throws error(syntax_error) with the line
// number, error(duplicate_edge) or error(vertex_out_of_range).
hypergraph parse_hypergraph(std::string_view text);
hypergraph read_hypergraph_file(const std::string& path);

// Canonical emission: relabels to 1..n in vertex order, sorts within and
// across edges.
std::string emit_hypergraph(const hypergraph& h);

}  // namespace hyperkernel::io
