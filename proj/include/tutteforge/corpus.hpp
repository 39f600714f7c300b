#pragma once

#include "tutteforge/graph_io.hpp"
#include "tutteforge/multigraph.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tutteforge {

// True iff some triangle (three mutually adjacent vertices, one edge per
// pair) shares no edge with any other triangle.
bool triangle_edge_distinguisher(const Multigraph& g);

struct CorpusCheck {
    std::string label;
    std::function<bool(std::string& detail)> run;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    std::vector<GraphFile> graphs;               // transcription, with terminal lists
    std::map<std::string, std::string> params;   // marked edges etc., for display
    std::vector<CorpusCheck> checks;
};

// Embedded test corpus; every entry's checks double as transcription
// checksums.
const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);  // InvalidReferenceError if absent

}  // namespace tutteforge
