#pragma once

#include "tutteforge/multigraph.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tutteforge {

// Text graph format, one record per line, '#' starts a comment:
//   v <id>              vertex
//   e <eid> <u> <v>     edge (u == v is a loop)
//   t <name> <id>...    named ordered terminal list
// Ids are decimal non-negative integers; duplicate declarations are errors.
struct GraphFile {
    Multigraph graph;
    std::map<std::string, std::vector<VertexId>> terminals;
};

GraphFile read_graph(std::istream& in, const std::string& name = "");
GraphFile read_graph_file(const std::string& path);

void write_graph(std::ostream& out, const GraphFile& gf);
void write_graph_file(const std::string& path, const GraphFile& gf);

}  // namespace tutteforge
