#pragma once

#include <iosfwd>
#include <string>

#include "netdecomp/graph.hpp"

namespace netdecomp {

/// Reads the plain text graph format: first line "n m", then m lines "u v"
/// (1-based). Lines starting with '#' are comments.
Graph readGraphText(std::istream& in);
Graph readGraphFile(const std::string& path);

/// Writes the canonical text form: "n m" then edges with u < v in
/// lexicographic order. write(read(write(g))) is byte-identical to write(g).
void writeGraphText(const Graph& g, std::ostream& out);
void writeGraphFile(const Graph& g, const std::string& path);
std::string graphToText(const Graph& g);

}  // namespace netdecomp
