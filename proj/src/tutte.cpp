#include "tutteforge/tutte.hpp"

#include "tutteforge/error.hpp"
#include "tutteforge/iso.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

namespace tutteforge {

bool MemoCache::lookup(const std::string& key, BiPoly& out) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) {
        misses_++;
        return false;
    }
    hits_++;
    out = it->second;
    return true;
}

void MemoCache::insert(const std::string& key, const BiPoly& value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.try_emplace(key, value);
}

std::size_t MemoCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

std::string EngineStats::report() const {
    std::ostringstream os;
    os << "nodes=" << nodes.load() << "\n"
       << "loop_strips=" << loop_strips.load() << "\n"
       << "factor_splits=" << factor_splits.load() << "\n"
       << "bridge_factors=" << bridge_factors.load() << "\n"
       << "parallel_bundles=" << parallel_bundles.load() << "\n"
       << "plain_splits=" << plain_splits.load() << "\n"
       << "memo_hits=" << memo_hits.load() << "\n"
       << "memo_misses=" << memo_misses.load() << "\n";
    return os.str();
}

BiPoly tutte_subset_expansion(const Multigraph& g, int edge_limit) {
    int m = g.edge_count();
    if (m > edge_limit)
        throw LimitError("subset expansion limited to " + std::to_string(edge_limit) +
                         " edges, got " + std::to_string(m));
    int n = g.vertex_count();
    const auto& edges = g.edges();
    std::map<VertexId, int> vidx;
    for (int i = 0; i < n; i++) vidx[g.vertices()[i]] = i;

    int rank_e = g.rank_and_components().first;

    // count subsets by (r(A), |A|), then assemble the polynomial once
    std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(m + 1, 0));
    std::vector<int> parent(n);
    for (std::uint64_t mask = 0; mask < (1ull << m); mask++) {
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        int comps = n;
        int size = 0;
        for (int i = 0; i < m; i++) {
            if (!(mask & (1ull << i))) continue;
            size++;
            int a = root(vidx[edges[i].u]), b = root(vidx[edges[i].v]);
            if (a != b) {
                parent[a] = b;
                comps--;
            }
        }
        count[n - comps][size]++;
    }

    BiPoly xm1 = BiPoly::x() - BiPoly::one();
    BiPoly ym1 = BiPoly::y() - BiPoly::one();
    std::vector<BiPoly> xp(rank_e + 1), yp(m + 1);
    xp[0] = BiPoly::one();
    for (int i = 1; i <= rank_e; i++) xp[i] = xp[i - 1] * xm1;
    yp[0] = BiPoly::one();
    for (int j = 1; j <= m; j++) yp[j] = yp[j - 1] * ym1;

    BiPoly total;
    for (int r = 0; r <= n; r++)
        for (int s = 0; s <= m; s++) {
            if (count[r][s] == 0) continue;
            total += (xp[rank_e - r] * yp[s - r]).scaled(Int(count[r][s]));
        }
    return total;
}

namespace {

struct DcContext {
    const EngineConfig& cfg;
    MemoCache& cache;
    EngineStats* stats;
    std::atomic<int> task_budget;

    DcContext(const EngineConfig& c, MemoCache& m, EngineStats* s)
        : cfg(c), cache(m), stats(s), task_budget(c.parallel_tasks - 1) {}

    void bump(std::atomic<std::uint64_t> EngineStats::* counter) {
        if (stats) (stats->*counter)++;
    }
};

BiPoly dc_eval(const Multigraph& g, DcContext& ctx);

EdgeId pick_edge(const Multigraph& g, EdgePickPolicy policy) {
    const auto& edges = g.edges();
    if (policy == EdgePickPolicy::first_id) return edges.front().id;
    // max_degree_sum; ties broken by smallest id
    EdgeId best = edges.front().id;
    int best_score = -1;
    for (const Edge& e : edges) {
        int score = g.degree(e.u) + g.degree(e.v);
        if (score > best_score) {
            best_score = score;
            best = e.id;
        }
    }
    return best;
}

// Reduction (iv): for a parallel bundle F between u, v with |F| = k >= 2,
// T(G) = T(G \ e1) + y^(k-1) T((G \ F) . uv).
BiPoly bundle_reduce(const Multigraph& g, const std::pair<VertexId, VertexId>& ends,
                     const std::vector<EdgeId>& bundle, DcContext& ctx) {
    int k = static_cast<int>(bundle.size());
    Multigraph minus_one = g.delete_edges(std::span<const EdgeId>(&bundle[0], 1));
    Multigraph glued = g.delete_edges(bundle).identify_vertices({ends.first, ends.second});
    BiPoly left = dc_eval(minus_one, ctx);
    BiPoly right = dc_eval(glued, ctx);
    return left + right.shifted(0, k - 1);
}

BiPoly dc_core(const Multigraph& g, DcContext& ctx) {
    ctx.bump(&EngineStats::nodes);

    if (g.edge_count() == 0) return BiPoly::one();

    // (i) strip loops
    std::vector<EdgeId> loops;
    for (const Edge& e : g.edges())
        if (e.is_loop()) loops.push_back(e.id);
    if (!loops.empty()) {
        ctx.bump(&EngineStats::loop_strips);
        return dc_eval(g.delete_edges(loops), ctx).shifted(0, static_cast<int>(loops.size()));
    }

    // (ii) factor over components and blocks
    StructureReport st = g.structure();
    if (st.blocks.size() > 1) {
        ctx.bump(&EngineStats::factor_splits);
        bool parallelize = ctx.cfg.parallel_tasks > 1 && g.edge_count() >= 12;
        std::vector<std::future<BiPoly>> futs;
        std::vector<BiPoly> parts;
        for (const Multigraph& b : st.blocks) {
            if (parallelize && ctx.task_budget.fetch_sub(1) > 0) {
                futs.push_back(std::async(std::launch::async, [&b, &ctx] {
                    BiPoly r = dc_eval(b, ctx);
                    ctx.task_budget.fetch_add(1);
                    return r;
                }));
            } else {
                if (parallelize) ctx.task_budget.fetch_add(1);
                parts.push_back(dc_eval(b, ctx));
            }
        }
        BiPoly prod = BiPoly::one();
        for (auto& f : futs) prod = prod * f.get();
        for (const auto& p : parts) prod = prod * p;
        return prod;
    }

    // single block now: (iii) a lone edge is a bridge
    if (g.edge_count() == 1) {
        ctx.bump(&EngineStats::bridge_factors);
        return BiPoly::x();
    }

    // (iv) parallel bundle
    for (const auto& [ends, ids] : st.parallel_classes) {
        if (ends.first != ends.second && ids.size() >= 2) {
            ctx.bump(&EngineStats::parallel_bundles);
            return bundle_reduce(g, ends, ids, ctx);
        }
    }

    // (v) plain deletion-contraction split
    ctx.bump(&EngineStats::plain_splits);
    EdgeId e = pick_edge(g, ctx.cfg.edge_pick_policy);
    Multigraph contracted = g.contract_edge(e).first;
    Multigraph deleted = g.delete_edges({e});

    if (ctx.cfg.parallel_tasks > 1 && g.edge_count() >= 12 && ctx.task_budget.fetch_sub(1) > 0) {
        auto fut = std::async(std::launch::async, [&contracted, &ctx] {
            BiPoly r = dc_eval(contracted, ctx);
            ctx.task_budget.fetch_add(1);
            return r;
        });
        BiPoly del = dc_eval(deleted, ctx);
        return fut.get() + del;
    }
    if (ctx.cfg.parallel_tasks > 1 && g.edge_count() >= 12) ctx.task_budget.fetch_add(1);
    return dc_eval(contracted, ctx) + dc_eval(deleted, ctx);
}

BiPoly dc_eval(const Multigraph& g, DcContext& ctx) {
    bool memoize = ctx.cfg.memo_enabled && g.edge_count() > 1 &&
                   g.vertex_count() <= ctx.cfg.memo_canonical_max_vertices;
    std::string key;
    if (memoize) {
        IsoLimits lim{std::max(ctx.cfg.memo_canonical_max_vertices, 12)};
        key = canonical_code(g, lim).bytes;
        BiPoly hit;
        if (ctx.cache.lookup(key, hit)) {
            ctx.bump(&EngineStats::memo_hits);
            return hit;
        }
        ctx.bump(&EngineStats::memo_misses);
    }
    BiPoly result = dc_core(g, ctx);
    if (memoize) ctx.cache.insert(key, result);
    return result;
}

}  // namespace

BiPoly tutte_dc(const Multigraph& g, const EngineConfig& cfg, MemoCache& cache,
                EngineStats* stats) {
    DcContext ctx(cfg, cache, stats);
    return dc_eval(g, ctx);
}

BiPoly tutte(const Multigraph& g) {
    EngineConfig cfg;
    MemoCache cache;
    return tutte_dc(g, cfg, cache);
}

bool t_equivalent(const Multigraph& g, const Multigraph& h) {
    EngineConfig cfg;
    MemoCache cache;
    return tutte_dc(g, cfg, cache) == tutte_dc(h, cfg, cache);
}

Int spanning_tree_count(const Multigraph& g) {
    if (!g.is_connected()) throw PreconditionError("spanning_tree_count requires a connected graph");
    int n = g.vertex_count();
    if (n <= 1) return 1;

    std::vector<Edge> nonloop;
    for (const Edge& e : g.edges())
        if (!e.is_loop()) nonloop.push_back(e);
    int m = static_cast<int>(nonloop.size());

    std::map<VertexId, int> vidx;
    for (int i = 0; i < n; i++) vidx[g.vertices()[i]] = i;

    // enumerate (n-1)-subsets, pruning as soon as a cycle closes
    Int count = 0;
    std::vector<int> parent(n);
    std::vector<int> chosen;
    auto root = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };

    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            count++;
            return;
        }
        int need = n - 1 - static_cast<int>(chosen.size());
        for (int i = start; i + need <= m; i++) {
            int a = root(vidx[nonloop[i].u]);
            int b = root(vidx[nonloop[i].v]);
            if (a == b) continue;
            std::vector<int> saved = parent;
            parent[a] = b;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
            parent = saved;
        }
    };
    std::iota(parent.begin(), parent.end(), 0);
    rec(0);
    return count;
}

}  // namespace tutteforge
