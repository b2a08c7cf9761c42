#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "ostar/digraph.hpp"

namespace ostar {

// Text format:
//   # comment lines start with '#'
//   dg <n>
//   <u> <v>        one arc u -> v per line, 0-indexed
// Blank lines are ignored. Duplicate arcs, digons, loops and out-of-range
// ids are ParseErrors carrying the line number.
OrientedGraph read_graph(std::istream& in);
OrientedGraph read_graph_file(const std::filesystem::path& path);

// Writes `dg <n>` followed by the arcs in lexicographic order.
void write_graph(std::ostream& out, const OrientedGraph& g);
void write_graph_file(const std::filesystem::path& path, const OrientedGraph& g);
std::string to_graph_text(const OrientedGraph& g);

}  // namespace ostar
