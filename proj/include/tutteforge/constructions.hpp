#pragma once

#include "tutteforge/iso.hpp"
#include "tutteforge/multigraph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tutteforge {

// A graph together with an ordered list of distinct terminal vertices.
struct TerminalList {
    Multigraph graph;
    std::vector<VertexId> terminals;

    TerminalList(Multigraph g, std::vector<VertexId> ts);
    int k() const { return static_cast<int>(terminals.size()); }
    TerminalList reversed() const;
};

// Partition of [k], blocks sorted by minimum element, elements 1-based.
struct Partition {
    std::vector<std::vector<int>> blocks;

    explicit Partition(std::vector<std::vector<int>> bs);
    static Partition discrete(int k);
    static Partition single(int k);
    static std::vector<Partition> all(int k);  // Bell(k) partitions, deterministic order

    int ground_size() const;
    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_of(int element) const;
    bool operator==(const Partition&) const = default;
    std::string render() const;  // e.g. "{1,3}{2}"
};

// Unordered index pairs {i,j}, 1 <= i < j <= k.
struct PairSet {
    std::vector<std::pair<int, int>> pairs;

    PairSet() = default;
    explicit PairSet(std::vector<std::pair<int, int>> ps);
    static std::vector<PairSet> all_subsets(int k);  // 2^C(k,2) sets
    std::size_t size() const { return pairs.size(); }
    std::string render() const;
};

struct GlueResult {
    Multigraph graph;
    // old id -> id in the glued graph, for each side
    std::map<VertexId, VertexId> left_map;   // gt side
    std::map<VertexId, VertexId> right_map;  // wt side
    std::map<EdgeId, EdgeId> right_edge_map;
    std::vector<VertexId> merged;  // ids of the k merged terminals, in order
};

// Identify gt.terminals[i] with wt.terminals[i]. The wt side is renumbered
// with fresh ids (>= bases when provided) and merged vertices carry the
// renumbered wt ids; gt-side non-terminal ids and all gt edge ids survive.
GlueResult glue(const TerminalList& gt, const TerminalList& wt,
                std::optional<VertexId> fresh_vertex_base = std::nullopt,
                std::optional<EdgeId> fresh_edge_base = std::nullopt);

// G_S: one fresh edge per index pair in s, joining the corresponding
// terminals.
Multigraph add_edges_for_pairs(const TerminalList& gt, const PairSet& s);

// G(P): identify terminals blockwise.
Multigraph quotient(const TerminalList& gt, const Partition& p);

// Flip the side of a 2-vertex cut: edges between side and cut.first
// re-attach to cut.second and vice versa.
Multigraph whitney_twist(const Multigraph& g, std::pair<VertexId, VertexId> cut,
                         const std::vector<VertexId>& side);

// (R(u_1..u_k) glued to W, R(u_k..u_1) glued to W); requires rt's terminals
// to be a cyclic vertex orbit of R unless force is set.
std::pair<Multigraph, Multigraph> rotor_flip_pair(const TerminalList& rt, const TerminalList& wt,
                                                  bool force = false,
                                                  const IsoLimits& limits = {});

struct W0Spec {
    Multigraph w0;
    std::vector<VertexId> w_list;  // rg vertices
    std::vector<VertexId> x_list;  // r vertices
    int r = 0;
    int g = 0;
    std::optional<VertexMapping> phi, rho;
    std::optional<int> c, c_prime;
};

struct W0Validation {
    bool ok = false;
    std::vector<std::string> violations;
    VertexMapping phi, rho;
    int c = 0, c_prime = 0;
};

// Verifies (or searches for) the rotation phi and reflection rho together
// with their indices c, c'.
W0Validation validate_w0(const W0Spec& spec, const IsoLimits& limits = {});

// Builds W = W0(x_1..x_r) glued to Y(y_1..y_r) and returns the flip pair of
// R(u_1..u_rg) against W's w-list. Requires r <= 5 unless force is set.
std::pair<Multigraph, Multigraph> theorem5_pair(const TerminalList& rt, const W0Spec& spec,
                                                const TerminalList& yt, bool force = false,
                                                const IsoLimits& limits = {});

// Searches b, b' in [r] for d = c' + 1 - b - b' such that pi = rho phi^d
// reflects the w-list (returning its index p) and fixes the partition q of
// the x-indices blockwise.
std::optional<std::pair<int, int>> s4_checker(const W0Spec& spec, const W0Validation& val,
                                              const Partition& q);

}  // namespace tutteforge
