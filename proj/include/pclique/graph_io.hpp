#pragma once

#include <iosfwd>
#include <string>

#include "pclique/graph.hpp"

namespace pclique::io {

// Plain edge list: first line "n m", then m lines "u v" with 0-based ids.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

// DIMACS clique format: optional "c" comment lines, "p edge n m", then
// "e u v" lines with 1-based ids.
void write_dimacs(std::ostream& out, const Graph& g);
Graph read_dimacs(std::istream& in);

// Picks the reader from the first significant token ("p"/"c" -> DIMACS).
Graph read_graph_file(const std::string& path);

}  // namespace pclique::io
