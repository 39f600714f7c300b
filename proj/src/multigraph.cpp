#include "tutteforge/multigraph.hpp"

#include "tutteforge/error.hpp"

#include <algorithm>
#include <numeric>

namespace tutteforge {

namespace {

// Small union-find over a fixed vertex list.
class UnionFind {
public:
    explicit UnionFind(const std::vector<VertexId>& verts) {
        parent_.resize(verts.size());
        std::iota(parent_.begin(), parent_.end(), 0);
        for (std::size_t i = 0; i < verts.size(); i++) index_[verts[i]] = static_cast<int>(i);
    }
    int find(VertexId v) { return root(index_.at(v)); }
    bool unite(VertexId a, VertexId b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent_[rb] = ra;
        return true;
    }
    int component_count() {
        int c = 0;
        for (std::size_t i = 0; i < parent_.size(); i++)
            if (root(static_cast<int>(i)) == static_cast<int>(i)) c++;
        return c;
    }

private:
    int root(int i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }
    std::vector<int> parent_;
    std::map<VertexId, int> index_;
};

}  // namespace

Multigraph::Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges, std::string name)
    : verts_(std::move(vertices)), edges_(std::move(edges)), name_(std::move(name)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edges_.size(); i++)
        if (edges_[i].id == edges_[i + 1].id)
            throw InvalidReferenceError("duplicate edge id " + std::to_string(edges_[i].id));
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw InvalidReferenceError("edge " + std::to_string(e.id) + " references unknown vertex");
    }
}

Multigraph Multigraph::from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs,
                                  std::string name) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    EdgeId next = 1;
    for (const auto& [u, v] : pairs) {
        vs.push_back(u);
        vs.push_back(v);
        es.push_back({next++, u, v});
    }
    return Multigraph(std::move(vs), std::move(es), std::move(name));
}

Multigraph Multigraph::from_pairs(std::initializer_list<std::pair<VertexId, VertexId>> pairs,
                                  std::string name) {
    return from_pairs(std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size()),
                      std::move(name));
}

Multigraph Multigraph::path(int n) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    for (int i = 1; i < n; i++) es.push_back({i, i, i + 1});
    return Multigraph(std::move(vs), std::move(es), "P" + std::to_string(n));
}

Multigraph Multigraph::cycle(int n) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    for (int i = 1; i < n; i++) es.push_back({i, i, i + 1});
    es.push_back({n, n, 1});
    return Multigraph(std::move(vs), std::move(es), "C" + std::to_string(n));
}

Multigraph Multigraph::complete(int n) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    EdgeId next = 1;
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++) es.push_back({next++, i, j});
    return Multigraph(std::move(vs), std::move(es), "K" + std::to_string(n));
}

Multigraph Multigraph::star(int leaves) {
    std::vector<VertexId> vs(leaves + 1);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; i++) es.push_back({i, 1, i + 1});
    return Multigraph(std::move(vs), std::move(es), "K1," + std::to_string(leaves));
}

Multigraph Multigraph::renamed(std::string name) const {
    Multigraph out = *this;
    out.name_ = std::move(name);
    return out;
}

bool Multigraph::has_vertex(VertexId v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Multigraph::has_edge(EdgeId e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, EdgeId id) { return a.id < id; });
    return it != edges_.end() && it->id == e;
}

const Edge& Multigraph::edge(EdgeId e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& a, EdgeId id) { return a.id < id; });
    if (it == edges_.end() || it->id != e)
        throw InvalidReferenceError("unknown edge id " + std::to_string(e));
    return *it;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    int c = 0;
    for (const auto& e : edges_)
        if (e.u == u && e.v == v) c++;
    return c;
}

int Multigraph::loops_at(VertexId v) const { return multiplicity(v, v); }

int Multigraph::degree(VertexId v) const {
    int c = 0;
    for (const auto& e : edges_)
        if (!e.is_loop() && (e.u == v || e.v == v)) c++;
    return c;
}

VertexId Multigraph::max_vertex_id() const { return verts_.empty() ? 0 : verts_.back(); }

EdgeId Multigraph::max_edge_id() const { return edges_.empty() ? 0 : edges_.back().id; }

void Multigraph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InvalidReferenceError("unknown vertex id " + std::to_string(v));
}

Multigraph Multigraph::delete_edges(std::span<const EdgeId> a) const {
    for (EdgeId e : a) edge(e);  // validate
    std::set<EdgeId> drop(a.begin(), a.end());
    Multigraph out;
    out.verts_ = verts_;
    out.name_ = name_;
    for (const auto& e : edges_)
        if (!drop.count(e.id)) out.edges_.push_back(e);
    return out;
}

Multigraph Multigraph::delete_edges(std::initializer_list<EdgeId> a) const {
    return delete_edges(std::span<const EdgeId>(a.begin(), a.size()));
}

std::pair<Multigraph, MergeRecord> Multigraph::contract_edge(EdgeId eid) const {
    const Edge& e = edge(eid);
    if (e.is_loop()) {
        // Contracting a loop deletes it: identifying u with itself.
        return {delete_edges({eid}), MergeRecord{e.u, e.v, e.u}};
    }
    VertexId keep = std::min(e.u, e.v);
    VertexId gone = std::max(e.u, e.v);
    Multigraph out;
    out.name_ = name_;
    for (VertexId v : verts_)
        if (v != gone) out.verts_.push_back(v);
    for (const auto& f : edges_) {
        if (f.id == eid) continue;
        Edge g = f;
        if (g.u == gone) g.u = keep;
        if (g.v == gone) g.v = keep;
        if (g.u > g.v) std::swap(g.u, g.v);
        out.edges_.push_back(g);
    }
    return {std::move(out), MergeRecord{e.u, e.v, keep}};
}

Multigraph Multigraph::identify_vertices(std::span<const VertexId> vs) const {
    if (vs.empty()) throw PreconditionError("identify_vertices: empty vertex set");
    for (VertexId v : vs) check_vertex(v);
    std::set<VertexId> group(vs.begin(), vs.end());
    VertexId keep = *group.begin();
    Multigraph out;
    out.name_ = name_;
    for (VertexId v : verts_)
        if (!group.count(v) || v == keep) out.verts_.push_back(v);
    for (const auto& f : edges_) {
        Edge g = f;
        if (group.count(g.u)) g.u = keep;
        if (group.count(g.v)) g.v = keep;
        if (g.u > g.v) std::swap(g.u, g.v);
        out.edges_.push_back(g);
    }
    return out;
}

Multigraph Multigraph::identify_vertices(std::initializer_list<VertexId> vs) const {
    return identify_vertices(std::span<const VertexId>(vs.begin(), vs.size()));
}

std::pair<int, int> Multigraph::rank_and_components(std::span<const EdgeId> a) const {
    UnionFind uf(verts_);
    for (EdgeId id : a) {
        const Edge& e = edge(id);
        if (!e.is_loop()) uf.unite(e.u, e.v);
    }
    int c = uf.component_count();
    return {static_cast<int>(verts_.size()) - c, c};
}

std::pair<int, int> Multigraph::rank_and_components(std::initializer_list<EdgeId> a) const {
    return rank_and_components(std::span<const EdgeId>(a.begin(), a.size()));
}

std::pair<int, int> Multigraph::rank_and_components() const {
    std::vector<EdgeId> all;
    all.reserve(edges_.size());
    for (const auto& e : edges_) all.push_back(e.id);
    return rank_and_components(all);
}

bool Multigraph::is_connected() const {
    auto [r, c] = rank_and_components();
    return c <= 1;
}

Multigraph Multigraph::with_vertex(VertexId v) const {
    Multigraph out = *this;
    if (!out.has_vertex(v)) {
        out.verts_.push_back(v);
        std::sort(out.verts_.begin(), out.verts_.end());
    }
    return out;
}

Multigraph Multigraph::with_edge(EdgeId id, VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (has_edge(id)) throw InvalidReferenceError("edge id " + std::to_string(id) + " already exists");
    Multigraph out = *this;
    Edge e{id, std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(out.edges_.begin(), out.edges_.end(), id,
                               [](const Edge& a, EdgeId x) { return a.id < x; });
    out.edges_.insert(it, e);
    return out;
}

// Block decomposition: iterative lowpoint DFS with an edge stack. Each loop
// edge forms its own block; bridges are single-edge blocks.
StructureReport Multigraph::structure() const {
    StructureReport rep;

    for (const auto& e : edges_) {
        auto key = std::minmax(e.u, e.v);
        rep.parallel_classes[{key.first, key.second}].push_back(e.id);
        if (e.is_loop()) rep.loops.push_back(e.id);
    }

    // adjacency of non-loop edges
    std::map<VertexId, std::vector<const Edge*>> adj;
    for (const auto& e : edges_)
        if (!e.is_loop()) {
            adj[e.u].push_back(&e);
            adj[e.v].push_back(&e);
        }

    std::map<VertexId, int> disc, low;
    std::map<VertexId, bool> visited;
    std::vector<EdgeId> edge_stack;
    int timer = 0;

    auto emit_block = [&](EdgeId upto) {
        std::vector<Edge> block_edges;
        std::set<VertexId> block_verts;
        while (!edge_stack.empty()) {
            EdgeId id = edge_stack.back();
            edge_stack.pop_back();
            const Edge& e = edge(id);
            block_edges.push_back(e);
            block_verts.insert(e.u);
            block_verts.insert(e.v);
            if (id == upto) break;
        }
        if (block_edges.size() == 1 && multiplicity(block_edges[0].u, block_edges[0].v) == 1)
            rep.bridges.push_back(block_edges[0].id);
        rep.blocks.emplace_back(std::vector<VertexId>(block_verts.begin(), block_verts.end()),
                                std::move(block_edges));
    };

    struct Frame {
        VertexId v;
        VertexId parent;
        EdgeId via;  // edge used to reach v, 0 for roots
        std::size_t next = 0;
    };

    std::set<VertexId> component_seed;
    for (VertexId root : verts_) {
        if (visited[root]) continue;
        component_seed.insert(root);
        std::vector<Frame> stack;
        stack.push_back({root, -1, 0});
        visited[root] = true;
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            auto& nbrs = adj[fr.v];
            if (fr.next < nbrs.size()) {
                const Edge* e = nbrs[fr.next++];
                if (e->id == fr.via) continue;  // skip only the tree edge instance
                VertexId w = e->u == fr.v ? e->v : e->u;
                if (!visited[w]) {
                    edge_stack.push_back(e->id);
                    visited[w] = true;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, fr.v, e->id});
                } else if (disc[w] < disc[fr.v]) {
                    edge_stack.push_back(e->id);
                    low[fr.v] = std::min(low[fr.v], disc[w]);
                }
            } else {
                VertexId v = fr.v;
                EdgeId via = fr.via;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) emit_block(via);
                }
            }
        }
    }

    // loops become their own single-edge blocks, in edge-id order
    for (EdgeId id : rep.loops) {
        const Edge& e = edge(id);
        rep.blocks.emplace_back(std::vector<VertexId>{e.u}, std::vector<Edge>{e});
    }

    // connected components with original ids
    UnionFind uf(verts_);
    for (const auto& e : edges_)
        if (!e.is_loop()) uf.unite(e.u, e.v);
    std::map<int, std::pair<std::vector<VertexId>, std::vector<Edge>>> comps;
    for (VertexId v : verts_) comps[uf.find(v)].first.push_back(v);
    for (const auto& e : edges_) comps[uf.find(e.u)].second.push_back(e);
    for (auto& [key, vc] : comps) rep.components.emplace_back(std::move(vc.first), std::move(vc.second));
    rep.is_connected = rep.components.size() <= 1;
    return rep;
}

}  // namespace tutteforge
