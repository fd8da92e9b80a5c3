#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pclique/randgen.hpp"

namespace pclique::io {

inline constexpr const char* kInstanceSchema = "pclique.instance/1";

// Instance bundle: one line of compact JSON header
//   {"K":[...],"T":[...],"draws":d,"params":{"k":..,"n":..,"p":..,"seed":..},
//    "schema":"pclique.instance/1","strategy":"random","t_size":t}
// followed by the planted graph as an edge list. The base graph is not
// stored; it is regenerated from (n, p, seed) on load and audited against K.
void write_bundle(std::ostream& out, const PlantedInstance& inst);
PlantedInstance read_bundle(std::istream& in);

// Input accepted by the CLI: a bundle (with ground truth), an edge list or a
// DIMACS file (graph only).
struct LoadedInput {
    Graph graph;
    std::optional<PlantedInstance> instance;
};
LoadedInput load_input(const std::string& path);

}  // namespace pclique::io
