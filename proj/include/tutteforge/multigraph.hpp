#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tutteforge {

using VertexId = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    VertexId u, v;  // unordered pair; u == v is a loop
    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

struct MergeRecord {
    VertexId a, b;    // the two vertices that were identified
    VertexId merged;  // surviving id (the smaller one)
};

struct StructureReport {
    std::vector<EdgeId> bridges;
    std::vector<EdgeId> loops;
    std::vector<struct Multigraph> blocks;      // original vertex/edge ids
    std::vector<struct Multigraph> components;  // original ids, include isolated vertices
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> parallel_classes;
    bool is_connected = false;
};

// Value-semantic multigraph: loops and parallel edges allowed, every
// operation returns a new graph. Safe to share across threads.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges, std::string name = "");

    // Convenience builders for tests and the corpus. Edge ids are assigned
    // 1..m in the order given; pairs are vertex ids (declared implicitly).
    static Multigraph from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs,
                                 std::string name = "");
    static Multigraph from_pairs(std::initializer_list<std::pair<VertexId, VertexId>> pairs,
                                 std::string name = "");
    static Multigraph path(int n);      // vertices 1..n
    static Multigraph cycle(int n);     // vertices 1..n
    static Multigraph complete(int n);  // vertices 1..n
    static Multigraph star(int leaves);  // center 1, leaves 2..leaves+1

    const std::string& name() const { return name_; }
    Multigraph renamed(std::string name) const;

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexId>& vertices() const { return verts_; }  // ascending
    const std::vector<Edge>& edges() const { return edges_; }         // ascending id

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    const Edge& edge(EdgeId e) const;  // InvalidReferenceError if absent

    int multiplicity(VertexId u, VertexId v) const;  // loops when u == v
    int loops_at(VertexId v) const;
    int degree(VertexId v) const;  // non-loop incident edge count
    VertexId max_vertex_id() const;
    EdgeId max_edge_id() const;

    bool operator==(const Multigraph& rhs) const {
        return verts_ == rhs.verts_ && edges_ == rhs.edges_;
    }

    // --- spec operations ---

    Multigraph delete_edges(std::span<const EdgeId> a) const;
    Multigraph delete_edges(std::initializer_list<EdgeId> a) const;

    std::pair<Multigraph, MergeRecord> contract_edge(EdgeId e) const;

    Multigraph identify_vertices(std::span<const VertexId> vs) const;
    Multigraph identify_vertices(std::initializer_list<VertexId> vs) const;

    // r(A) = |V| - c(A), c(A) = components of the spanning subgraph (V, A).
    std::pair<int, int> rank_and_components(std::span<const EdgeId> a) const;
    std::pair<int, int> rank_and_components(std::initializer_list<EdgeId> a) const;
    std::pair<int, int> rank_and_components() const;  // A = E

    StructureReport structure() const;
    bool is_connected() const;

    // Fresh vertex/edge additions (used by constructions).
    Multigraph with_vertex(VertexId v) const;
    Multigraph with_edge(EdgeId id, VertexId u, VertexId v) const;

private:
    void check_vertex(VertexId v) const;
    std::vector<VertexId> verts_;  // sorted ascending
    std::vector<Edge> edges_;      // sorted by id
    std::string name_;
};

}  // namespace tutteforge
