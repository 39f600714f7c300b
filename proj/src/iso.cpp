#include "tutteforge/iso.hpp"

#include "tutteforge/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tutteforge {

VertexMapping VertexMapping::from_pairs(std::vector<std::pair<VertexId, VertexId>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i + 1 < pairs.size(); i++)
        if (pairs[i].first == pairs[i + 1].first)
            throw InvalidReferenceError("mapping repeats source " + std::to_string(pairs[i].first));
    VertexMapping m;
    m.pairs_ = std::move(pairs);
    return m;
}

VertexId VertexMapping::image(VertexId v) const {
    auto im = try_image(v);
    if (!im) throw InvalidReferenceError("mapping has no entry for vertex " + std::to_string(v));
    return *im;
}

std::optional<VertexId> VertexMapping::try_image(VertexId v) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v,
                               [](const auto& p, VertexId x) { return p.first < x; });
    if (it == pairs_.end() || it->first != v) return std::nullopt;
    return it->second;
}

VertexMapping VertexMapping::inverse() const {
    std::vector<std::pair<VertexId, VertexId>> inv;
    inv.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_) inv.emplace_back(b, a);
    return from_pairs(std::move(inv));
}

VertexMapping VertexMapping::compose(const VertexMapping& inner) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(inner.pairs_.size());
    for (const auto& [a, b] : inner.pairs_) out.emplace_back(a, image(b));
    return from_pairs(std::move(out));
}

std::string VertexMapping::render() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, b] : pairs_) {
        if (!first) os << ",";
        os << a << "->" << b;
        first = false;
    }
    return os.str();
}

VertexMapping VertexMapping::parse(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto arrow = item.find("->");
        if (arrow == std::string::npos) throw ParseError("expected 'i->j'", pos);
        try {
            pairs.emplace_back(std::stoi(item.substr(0, arrow)), std::stoi(item.substr(arrow + 2)));
        } catch (const std::exception&) {
            throw ParseError("bad mapping entry '" + item + "'", pos);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_pairs(std::move(pairs));
}

bool preserves_multiplicities(const Multigraph& g, const Multigraph& h, const VertexMapping& m) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (m.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    std::set<VertexId> targets;
    for (const auto& [a, b] : m.pairs()) {
        if (!g.has_vertex(a) || !h.has_vertex(b)) return false;
        if (!targets.insert(b).second) return false;
    }
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); i++)
        for (std::size_t j = i; j < vs.size(); j++)
            if (g.multiplicity(vs[i], vs[j]) != h.multiplicity(m.image(vs[i]), m.image(vs[j])))
                return false;
    return true;
}

namespace {

// Dense view of one graph: vertex ids mapped to 0..n-1, full multiplicity
// matrix with loop counts on the diagonal.
struct DenseGraph {
    std::vector<VertexId> ids;
    std::vector<std::vector<int>> eps;

    explicit DenseGraph(const Multigraph& g) : ids(g.vertices()) {
        int n = static_cast<int>(ids.size());
        eps.assign(n, std::vector<int>(n, 0));
        std::map<VertexId, int> index;
        for (int i = 0; i < n; i++) index[ids[i]] = i;
        for (const Edge& e : g.edges()) eps[index[e.u]][index[e.v]]++;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < i; j++) eps[i][j] = eps[j][i];
    }

    int n() const { return static_cast<int>(ids.size()); }
    int index_of(VertexId v) const {
        auto it = std::lower_bound(ids.begin(), ids.end(), v);
        if (it == ids.end() || *it != v)
            throw InvalidReferenceError("unknown vertex id " + std::to_string(v));
        return static_cast<int>(it - ids.begin());
    }
};

// Iterated neighborhood refinement over one or two graphs jointly. Colors are
// canonical: they depend only on the isomorphism class of each vertex's
// iterated signature, so matching vertices in isomorphic graphs receive equal
// colors.
std::vector<std::vector<int>> refine_colors(const std::vector<const DenseGraph*>& graphs) {
    struct Sig {
        std::vector<long long> data;
        bool operator<(const Sig& o) const { return data < o.data; }
        bool operator==(const Sig& o) const { return data == o.data; }
    };

    std::vector<std::vector<int>> colors(graphs.size());
    std::vector<std::vector<Sig>> sigs(graphs.size());

    // initial signature: loops, then sorted incident (multiplicity) list
    for (std::size_t k = 0; k < graphs.size(); k++) {
        const DenseGraph& d = *graphs[k];
        sigs[k].resize(d.n());
        for (int i = 0; i < d.n(); i++) {
            std::vector<long long> inc;
            for (int j = 0; j < d.n(); j++)
                if (j != i && d.eps[i][j] > 0) inc.push_back(d.eps[i][j]);
            std::sort(inc.begin(), inc.end());
            sigs[k][i].data.push_back(d.eps[i][i]);
            sigs[k][i].data.insert(sigs[k][i].data.end(), inc.begin(), inc.end());
        }
    }

    auto assign = [&]() {
        std::vector<Sig> all;
        for (auto& s : sigs) all.insert(all.end(), s.begin(), s.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        int classes = static_cast<int>(all.size());
        for (std::size_t k = 0; k < graphs.size(); k++) {
            colors[k].resize(sigs[k].size());
            for (std::size_t i = 0; i < sigs[k].size(); i++)
                colors[k][i] = static_cast<int>(
                    std::lower_bound(all.begin(), all.end(), sigs[k][i]) - all.begin());
        }
        return classes;
    };

    int classes = assign();
    for (int round = 0; round < 16; round++) {
        for (std::size_t k = 0; k < graphs.size(); k++) {
            const DenseGraph& d = *graphs[k];
            for (int i = 0; i < d.n(); i++) {
                std::vector<long long> nb;
                for (int j = 0; j < d.n(); j++)
                    if (j != i && d.eps[i][j] > 0)
                        nb.push_back(static_cast<long long>(colors[k][j]) * 1024 + d.eps[i][j]);
                std::sort(nb.begin(), nb.end());
                sigs[k][i].data.assign(1, colors[k][i]);
                sigs[k][i].data.insert(sigs[k][i].data.end(), nb.begin(), nb.end());
            }
        }
        int next = assign();
        if (next == classes) break;
        classes = next;
    }
    return colors;
}

// Backtracking matcher. Sources are taken in ascending id order and targets
// tried in ascending id order, so results come out in lexicographic order of
// the image sequence.
struct Matcher {
    const DenseGraph& g;
    const DenseGraph& h;
    std::vector<int> gcolor, hcolor;
    std::vector<int> assign;      // g index -> h index or -1
    std::vector<bool> used;       // h index
    std::vector<int> free_order;  // unpinned g indices, ascending
    bool first_only = false;
    std::vector<VertexMapping> results;

    Matcher(const DenseGraph& g_, const DenseGraph& h_) : g(g_), h(h_) {
        auto colors = refine_colors({&g, &h});
        gcolor = colors[0];
        hcolor = colors[1];
        assign.assign(g.n(), -1);
        used.assign(h.n(), false);
    }

    bool feasible() const {
        if (g.n() != h.n()) return false;
        std::vector<int> cg = gcolor, ch = hcolor;
        std::sort(cg.begin(), cg.end());
        std::sort(ch.begin(), ch.end());
        return cg == ch;
    }

    bool consistent(int i, int t) const {
        if (gcolor[i] != hcolor[t]) return false;
        if (g.eps[i][i] != h.eps[t][t]) return false;
        for (int j = 0; j < g.n(); j++)
            if (assign[j] >= 0 && g.eps[i][j] != h.eps[t][assign[j]]) return false;
        return true;
    }

    void emit() {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        pairs.reserve(g.n());
        for (int i = 0; i < g.n(); i++) pairs.emplace_back(g.ids[i], h.ids[assign[i]]);
        results.push_back(VertexMapping::from_pairs(std::move(pairs)));
    }

    bool dfs(std::size_t depth) {
        if (depth == free_order.size()) {
            emit();
            return first_only;
        }
        int i = free_order[depth];
        for (int t = 0; t < h.n(); t++) {
            if (used[t] || !consistent(i, t)) continue;
            assign[i] = t;
            used[t] = true;
            bool stop = dfs(depth + 1);
            used[t] = false;
            assign[i] = -1;
            if (stop) return true;
        }
        return false;
    }

    void run(std::span<const std::pair<VertexId, VertexId>> pins) {
        if (!feasible()) return;
        for (const auto& [a, b] : pins) {
            int i = g.index_of(a), t = h.index_of(b);
            if (used[t] || assign[i] >= 0 || !consistent(i, t)) return;  // inconsistent pins
            assign[i] = t;
            used[t] = true;
        }
        for (int i = 0; i < g.n(); i++)
            if (assign[i] < 0) free_order.push_back(i);
        dfs(0);
    }
};

void check_limit(const Multigraph& g, const Multigraph& h, const IsoLimits& limits) {
    int n = std::max(g.vertex_count(), h.vertex_count());
    if (n > limits.max_vertices)
        throw LimitError("isomorphism search limited to " + std::to_string(limits.max_vertices) +
                         " vertices, got " + std::to_string(n));
}

}  // namespace

std::optional<VertexMapping> find_isomorphism(const Multigraph& g, const Multigraph& h,
                                              const IsoLimits& limits) {
    return find_isomorphism_pinned(g, h, {}, limits);
}

std::optional<VertexMapping> find_isomorphism_pinned(
    const Multigraph& g, const Multigraph& h,
    std::span<const std::pair<VertexId, VertexId>> pins, const IsoLimits& limits) {
    check_limit(g, h, limits);
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return std::nullopt;
    DenseGraph dg(g), dh(h);
    Matcher m(dg, dh);
    m.first_only = true;
    m.run(pins);
    if (m.results.empty()) return std::nullopt;
    return m.results.front();
}

std::vector<VertexMapping> enumerate_isomorphisms(const Multigraph& g, const Multigraph& h,
                                                  const IsoLimits& limits) {
    check_limit(g, h, limits);
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return {};
    DenseGraph dg(g), dh(h);
    Matcher m(dg, dh);
    m.run({});
    return std::move(m.results);
}

std::vector<VertexMapping> automorphisms(const Multigraph& g, const IsoLimits& limits) {
    return enumerate_isomorphisms(g, g, limits);
}

std::optional<VertexMapping> check_cyclic_orbit(const Multigraph& r,
                                                std::span<const VertexId> orbit,
                                                const IsoLimits& limits) {
    if (orbit.empty()) throw ArityError("orbit must be nonempty");
    std::set<VertexId> distinct(orbit.begin(), orbit.end());
    if (distinct.size() != orbit.size()) throw ArityError("orbit vertices must be distinct");
    for (VertexId v : orbit)
        if (!r.has_vertex(v))
            throw InvalidReferenceError("orbit vertex " + std::to_string(v) + " not in graph");
    std::size_t k = orbit.size();
    std::vector<std::pair<VertexId, VertexId>> pins;
    for (std::size_t i = 0; i < k; i++) pins.emplace_back(orbit[i], orbit[(i + 1) % k]);
    return find_isomorphism_pinned(r, r, pins, limits);
}

std::optional<VertexMapping> check_reflection(const Multigraph& w, std::span<const VertexId> ws,
                                              int a, const IsoLimits& limits) {
    if (ws.empty()) throw ArityError("vertex list must be nonempty");
    std::set<VertexId> distinct(ws.begin(), ws.end());
    if (distinct.size() != ws.size()) throw ArityError("vertex list must be distinct");
    int k = static_cast<int>(ws.size());
    if (a < 1 || a > k) throw ArityError("reflection index a must lie in [1, k]");
    for (VertexId v : ws)
        if (!w.has_vertex(v))
            throw InvalidReferenceError("vertex " + std::to_string(v) + " not in graph");
    // rho(w_{1+s}) = w_{a-s}: position s (vertex w_{1+s}) maps to the 0-based
    // position of w_{a-s}, which is (a - s - 1) mod k.
    std::vector<std::pair<VertexId, VertexId>> pins;
    for (int s = 0; s < k; s++) {
        int target = ((a - s - 1) % k + k) % k;
        pins.emplace_back(ws[s], ws[target]);
    }
    return find_isomorphism_pinned(w, w, pins, limits);
}

namespace {

// Lexicographically minimal row-by-row matrix code over all vertex orderings.
// Row for the vertex placed at position i: [color, loops, eps to the i
// previously placed vertices]. Only candidates achieving the minimal row at
// each position can realize the global minimum, so the search branches on
// ties and keeps a best-so-far for pruning.
struct CodeSearch {
    const DenseGraph& d;
    std::vector<int> color;
    std::vector<int> order;
    std::vector<bool> used;
    std::vector<int> cur;
    std::vector<int> best;
    bool have_best = false;

    explicit CodeSearch(const DenseGraph& d_, std::vector<int> colors)
        : d(d_), color(std::move(colors)), used(d_.n(), false) {}

    std::vector<int> row_for(int v) const {
        std::vector<int> row;
        row.reserve(order.size() + 2);
        row.push_back(color[v]);
        row.push_back(d.eps[v][v]);
        for (int placed : order) row.push_back(d.eps[v][placed]);
        return row;
    }

    void dfs(bool tight) {
        int n = d.n();
        if (static_cast<int>(order.size()) == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::vector<int>, int>> cands;
        for (int v = 0; v < n; v++)
            if (!used[v]) cands.emplace_back(row_for(v), v);
        std::sort(cands.begin(), cands.end());
        const std::vector<int>& min_row = cands.front().first;
        for (const auto& [row, v] : cands) {
            if (row != min_row) break;
            bool next_tight = tight;
            if (have_best && tight) {
                // compare row against best at the current offset
                std::size_t off = cur.size();
                int cmp = 0;
                for (std::size_t i = 0; i < row.size(); i++) {
                    if (row[i] != best[off + i]) {
                        cmp = row[i] < best[off + i] ? -1 : 1;
                        break;
                    }
                }
                if (cmp > 0) continue;
                if (cmp < 0) next_tight = false;
            }
            cur.insert(cur.end(), row.begin(), row.end());
            order.push_back(v);
            used[v] = true;
            dfs(next_tight);
            used[v] = false;
            order.pop_back();
            cur.resize(cur.size() - row.size());
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const Multigraph& g, const IsoLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw LimitError("canonical code limited to " + std::to_string(limits.max_vertices) +
                         " vertices, got " + std::to_string(g.vertex_count()));
    DenseGraph d(g);
    auto colors = refine_colors({&d});
    CodeSearch search(d, colors[0]);
    search.dfs(true);

    std::vector<int> loop_counts;
    for (int i = 0; i < d.n(); i++) loop_counts.push_back(d.eps[i][i]);
    std::sort(loop_counts.begin(), loop_counts.end());

    std::string bytes;
    auto push = [&bytes](int v) {
        if (v < 0 || v > 255) throw LimitError("canonical code entry out of byte range");
        bytes.push_back(static_cast<char>(v));
    };
    push(d.n());
    push(g.edge_count() % 256);
    push(g.edge_count() / 256);
    for (int c : loop_counts) push(c);
    for (int v : search.best) push(v);
    return CanonicalCode{std::move(bytes)};
}

}  // namespace tutteforge
