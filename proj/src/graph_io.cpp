#include "tutteforge/graph_io.hpp"

#include "tutteforge/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tutteforge {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("graph file line " + std::to_string(line_no) + ": " + what,
                     static_cast<std::size_t>(line_no));
}

int parse_id(const std::string& tok, int line_no) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line_no, "expected non-negative integer, got '" + tok + "'");
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        fail(line_no, "integer out of range: '" + tok + "'");
    }
}

}  // namespace

GraphFile read_graph(std::istream& in, const std::string& name) {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    std::map<std::string, std::vector<VertexId>> terminals;
    std::set<VertexId> seen_v;
    std::set<EdgeId> seen_e;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            std::string tok;
            if (!(ls >> tok)) fail(line_no, "v record needs an id");
            VertexId v = parse_id(tok, line_no);
            if (!seen_v.insert(v).second) fail(line_no, "duplicate vertex " + std::to_string(v));
            verts.push_back(v);
            if (ls >> tok) fail(line_no, "trailing tokens after v record");
        } else if (kind == "e") {
            std::string t1, t2, t3;
            if (!(ls >> t1 >> t2 >> t3)) fail(line_no, "e record needs <eid> <u> <v>");
            EdgeId id = parse_id(t1, line_no);
            VertexId u = parse_id(t2, line_no);
            VertexId v = parse_id(t3, line_no);
            if (!seen_e.insert(id).second) fail(line_no, "duplicate edge " + std::to_string(id));
            if (!seen_v.count(u)) fail(line_no, "edge endpoint " + std::to_string(u) + " not declared");
            if (!seen_v.count(v)) fail(line_no, "edge endpoint " + std::to_string(v) + " not declared");
            edges.push_back({id, u, v});
            std::string rest;
            if (ls >> rest) fail(line_no, "trailing tokens after e record");
        } else if (kind == "t") {
            std::string tname;
            if (!(ls >> tname)) fail(line_no, "t record needs a name");
            if (terminals.count(tname)) fail(line_no, "duplicate terminal list '" + tname + "'");
            std::vector<VertexId> ids;
            std::set<VertexId> dup;
            std::string tok;
            while (ls >> tok) {
                VertexId v = parse_id(tok, line_no);
                if (!seen_v.count(v)) fail(line_no, "terminal " + std::to_string(v) + " not declared");
                if (!dup.insert(v).second) fail(line_no, "terminal " + std::to_string(v) + " repeated");
                ids.push_back(v);
            }
            if (ids.empty()) fail(line_no, "terminal list '" + tname + "' is empty");
            terminals.emplace(tname, std::move(ids));
        } else {
            fail(line_no, "unknown record kind '" + kind + "'");
        }
    }
    return {Multigraph(std::move(verts), std::move(edges), name), std::move(terminals)};
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    std::string stem = path;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    return read_graph(in, stem);
}

void write_graph(std::ostream& out, const GraphFile& gf) {
    if (!gf.graph.name().empty()) out << "# " << gf.graph.name() << "\n";
    for (VertexId v : gf.graph.vertices()) out << "v " << v << "\n";
    for (const Edge& e : gf.graph.edges()) out << "e " << e.id << " " << e.u << " " << e.v << "\n";
    for (const auto& [name, ids] : gf.terminals) {
        out << "t " << name;
        for (VertexId v : ids) out << " " << v;
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const GraphFile& gf) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    write_graph(out, gf);
}

}  // namespace tutteforge
