#pragma once

#include <istream>
#include <string>

#include "cdslab/f2linalg.hpp"
#include "cdslab/graph.hpp"

namespace cdslab {

// Rows of '0'/'1' characters, one per line; a blank line or end of input terminates.
// Leading blank lines are skipped.
F2Matrix read_matrix(std::istream& in);  // empty matrix at end of input
F2Matrix parse_matrix(const std::string& text);  // throws on empty input

std::string format_matrix(const F2Matrix& m);  // one row per line, trailing newline

// Either "n root1 root2" followed by "u v" edge lines (1-based), or a bit-matrix
// whose first and last vertices are the roots.
RootedGraph parse_graph(const std::string& text);
std::string format_graph(const RootedGraph& g);  // header + edge list, 1-based

}  // namespace cdslab
