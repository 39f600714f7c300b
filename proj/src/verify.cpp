#include "tutteforge/verify.hpp"

#include "tutteforge/error.hpp"
#include "tutteforge/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tutteforge {

std::string EquivalenceReport::render() const {
    std::ostringstream os;
    os << "condition=" << condition << "\n";
    os << "instances=" << instances << "\n";
    os << "failures=" << failures.size() << "\n";
    for (const auto& f : failures)
        os << "failure instance=" << f.instance << " left=" << f.left << " right=" << f.right
           << "\n";
    os << "work_nodes=" << work_nodes << "\n";
    os << "verdict=" << (passed() ? "pass" : "fail") << "\n";
    return os.str();
}

EquivalenceReport check_theorem_subsets(const TerminalList& gt, const TerminalList& ht,
                                        const CheckBudget& budget) {
    if (gt.k() != ht.k()) throw ArityError("terminal lists must have equal length");
    int k = gt.k();
    if (k > budget.max_k_subsets)
        throw BudgetError("subset condition budget allows k <= " +
                          std::to_string(budget.max_k_subsets));

    EquivalenceReport rep;
    rep.condition = "subsets";
    EngineConfig cfg;
    MemoCache cache;
    EngineStats stats;
    for (const PairSet& s : PairSet::all_subsets(k)) {
        rep.instances++;
        BiPoly tg = tutte_dc(add_edges_for_pairs(gt, s), cfg, cache, &stats);
        BiPoly th = tutte_dc(add_edges_for_pairs(ht, s), cfg, cache, &stats);
        if (tg != th) rep.failures.push_back({s.render(), tg.render(), th.render()});
    }
    rep.work_nodes = stats.nodes.load();
    return rep;
}

EquivalenceReport check_theorem_partitions(const TerminalList& gt, const TerminalList& ht,
                                           const CheckBudget& budget) {
    if (gt.k() != ht.k()) throw ArityError("terminal lists must have equal length");
    int k = gt.k();
    if (k > budget.max_k_partitions)
        throw BudgetError("partition condition budget allows k <= " +
                          std::to_string(budget.max_k_partitions));

    EquivalenceReport rep;
    rep.condition = "partitions";
    EngineConfig cfg;
    MemoCache cache;
    EngineStats stats;
    for (const Partition& p : Partition::all(k)) {
        rep.instances++;
        BiPoly tg = tutte_dc(quotient(gt, p), cfg, cache, &stats);
        BiPoly th = tutte_dc(quotient(ht, p), cfg, cache, &stats);
        if (tg != th) rep.failures.push_back({p.render(), tg.render(), th.render()});
    }
    rep.work_nodes = stats.nodes.load();
    return rep;
}

std::pair<long long, int> forest_coefficients(const PairSet& s, const Partition& p, int k) {
    if (p.ground_size() > k) throw ArityError("partition ground set exceeds k");
    for (const auto& [i, j] : s.pairs)
        if (j > k) throw ArityError("pair index exceeds k");

    int r = p.block_count();
    std::vector<int> block_of(k + 1);
    for (int e = 1; e <= k; e++) block_of[e] = p.block_of(e);

    // e(P,S): pairs of S lying inside one block
    int within = 0;
    for (const auto& [a, b] : s.pairs)
        if (block_of[a] == block_of[b]) within++;
    int n_exp = within - k + r;

    // brute force over subsets F of S: count forests whose components'
    // vertex sets are exactly p's blocks
    int m = static_cast<int>(s.pairs.size());
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << m); mask++) {
        std::vector<int> parent(k + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        bool forest = true;
        for (int b = 0; b < m && forest; b++) {
            if (!(mask & (1ull << b))) continue;
            auto [i, j] = s.pairs[b];
            if (block_of[i] != block_of[j]) {
                forest = false;  // forest would join two blocks
                break;
            }
            int ri = root(i), rj = root(j);
            if (ri == rj)
                forest = false;  // cycle
            else
                parent[ri] = rj;
        }
        if (!forest) continue;
        // components' vertex sets must equal the blocks: within each block,
        // all elements share one root
        bool exact = true;
        for (const auto& block : p.blocks) {
            int r0 = root(block.front());
            for (int e : block)
                if (root(e) != r0) {
                    exact = false;
                    break;
                }
            if (!exact) break;
        }
        if (exact) count++;
    }
    return {count, n_exp};
}

BiPoly expansion_coefficient(const PairSet& s, const Partition& p, int k) {
    if (p.ground_size() > k) throw ArityError("partition ground set exceeds k");
    std::vector<int> block_of(k + 1);
    for (int e = 1; e <= k; e++) block_of[e] = p.block_of(e);

    int m = static_cast<int>(s.pairs.size());
    BiPoly total;
    for (std::uint64_t mask = 0; mask < (1ull << m); mask++) {
        // the chosen subset must be a forest whose components are the blocks
        std::vector<int> parent(k + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        bool forest = true;
        for (int b = 0; b < m && forest; b++) {
            if (!(mask & (1ull << b))) continue;
            auto [i, j] = s.pairs[b];
            if (block_of[i] != block_of[j]) {
                forest = false;
                break;
            }
            int ri = root(i), rj = root(j);
            if (ri == rj)
                forest = false;
            else
                parent[ri] = rj;
        }
        if (!forest) continue;
        bool exact = true;
        for (const auto& block : p.blocks) {
            int r0 = root(block.front());
            for (int e : block)
                if (root(e) != r0) {
                    exact = false;
                    break;
                }
            if (!exact) break;
        }
        if (!exact) continue;

        // a non-forest in-block edge is forced into the loop rule exactly
        // when the whole forest path joining its ends precedes it in the
        // deletion-contraction processing order
        auto forest_path_before = [&](int target_idx, int from, int to) {
            // BFS in the forest restricted to edges with index < target_idx
            std::vector<int> frontier = {from};
            std::vector<bool> seen(k + 1, false);
            seen[from] = true;
            while (!frontier.empty()) {
                int v = frontier.back();
                frontier.pop_back();
                if (v == to) return true;
                for (int b = 0; b < target_idx; b++) {
                    if (!(mask & (1ull << b))) continue;
                    auto [i, j] = s.pairs[b];
                    int nxt = -1;
                    if (i == v && !seen[j]) nxt = j;
                    if (j == v && !seen[i]) nxt = i;
                    if (nxt >= 0) {
                        seen[nxt] = true;
                        frontier.push_back(nxt);
                    }
                }
            }
            return false;
        };
        int loops = 0;
        for (int b = 0; b < m; b++) {
            if (mask & (1ull << b)) continue;
            auto [i, j] = s.pairs[b];
            if (block_of[i] != block_of[j]) continue;
            if (forest_path_before(b, i, j)) loops++;
        }
        total += BiPoly::monomial(0, loops, 1);
    }
    return total;
}

IdentityVerdict check_expansion_identity(const TerminalList& gt, const PairSet& s) {
    if (!gt.graph.is_connected())
        throw PreconditionError("expansion identity requires a connected graph");
    int k = gt.k();

    EngineConfig cfg;
    MemoCache cache;

    IdentityVerdict verdict;
    verdict.lhs = tutte_dc(add_edges_for_pairs(gt, s), cfg, cache);

    BiPoly rhs;
    for (const Partition& p : Partition::all(k)) {
        BiPoly coeff = expansion_coefficient(s, p, k);
        if (coeff.is_zero()) continue;
        BiPoly tp = tutte_dc(quotient(gt, p), cfg, cache);
        rhs += coeff * tp;
    }
    verdict.rhs = rhs;
    verdict.ok = verdict.lhs == verdict.rhs;
    verdict.detail = verdict.ok ? "identity holds" : "identity violated";
    return verdict;
}

NecessaryVerdict check_necessary(const TerminalList& gt, const TerminalList& ht) {
    if (gt.k() != ht.k()) throw ArityError("terminal lists must have equal length");
    NecessaryVerdict verdict;
    std::ostringstream detail;

    int gl = 0, hl = 0;
    for (const Edge& e : gt.graph.edges())
        if (e.is_loop()) gl++;
    for (const Edge& e : ht.graph.edges())
        if (e.is_loop()) hl++;
    if (gl != hl) {
        verdict.ok = false;
        detail << "loop counts differ: " << gl << " vs " << hl;
        verdict.detail = detail.str();
        return verdict;
    }

    int k = gt.k();
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++) {
            int mg = gt.graph.multiplicity(gt.terminals[i], gt.terminals[j]);
            int mh = ht.graph.multiplicity(ht.terminals[i], ht.terminals[j]);
            if (mg != mh) {
                verdict.ok = false;
                detail << "multiplicity differs at pair {" << i + 1 << "," << j + 1
                       << "}: " << mg << " vs " << mh;
                verdict.detail = detail.str();
                return verdict;
            }
        }
    verdict.ok = true;
    verdict.detail = "loop counts and terminal multiplicities agree";
    return verdict;
}

Multigraph random_multigraph(Rng& rng, int n) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    EdgeId next = 1;
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++) {
            int mult = 0;
            if (rng.chance(0.35)) mult++;
            if (rng.chance(0.15)) mult++;
            for (int c = 0; c < mult; c++) es.push_back({next++, i, j});
        }
    for (int i = 1; i <= n; i++)
        if (rng.chance(0.1)) es.push_back({next++, i, i});
    return Multigraph(std::move(vs), std::move(es));
}

Multigraph random_connected_multigraph(Rng& rng, int n, int extra_edges) {
    std::vector<VertexId> vs(n);
    std::iota(vs.begin(), vs.end(), 1);
    std::vector<Edge> es;
    EdgeId next = 1;
    // random spanning tree: attach each vertex to an earlier one
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    for (int i = n - 1; i > 0; i--) std::swap(order[i], order[rng.below(i + 1)]);
    for (int i = 1; i < n; i++) es.push_back({next++, order[rng.below(i)], order[i]});
    for (int t = 0; t < extra_edges; t++) {
        if (n >= 2 && rng.chance(0.9)) {
            int a = 1 + rng.below(n), b = 1 + rng.below(n);
            if (a == b) b = a % n + 1;
            es.push_back({next++, a, b});
        } else {
            int a = 1 + rng.below(n);
            es.push_back({next++, a, a});  // loop
        }
    }
    return Multigraph(std::move(vs), std::move(es));
}

ProbeReport random_glue_probe(const TerminalList& gt, const TerminalList& ht, int trials,
                              std::uint64_t seed) {
    if (gt.k() != ht.k()) throw ArityError("terminal lists must have equal length");
    int k = gt.k();

    ProbeReport rep;
    Rng rng(seed);
    EngineConfig cfg;
    MemoCache cache;
    for (int t = 0; t < trials; t++) {
        int n = k + rng.below(4);  // terminals plus 0..3 extras
        Multigraph w = random_multigraph(rng, n);
        std::vector<VertexId> w_terms;
        for (int i = 1; i <= k; i++) w_terms.push_back(i);
        TerminalList wt(w, w_terms);
        rep.trials++;
        BiPoly tg = tutte_dc(glue(gt, wt).graph, cfg, cache);
        BiPoly th = tutte_dc(glue(ht, wt).graph, cfg, cache);
        if (tg != th) {
            std::ostringstream os;
            os << "trial " << t << " (n=" << n << ", m=" << w.edge_count() << ")";
            rep.counterexamples.push_back(os.str());
        }
    }
    return rep;
}

}  // namespace tutteforge
