#include "tutteforge/constructions.hpp"

#include "tutteforge/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace tutteforge {

TerminalList::TerminalList(Multigraph g, std::vector<VertexId> ts)
    : graph(std::move(g)), terminals(std::move(ts)) {
    if (terminals.empty()) throw ArityError("terminal list must be nonempty");
    std::set<VertexId> seen;
    for (VertexId v : terminals) {
        if (!graph.has_vertex(v))
            throw InvalidReferenceError("terminal " + std::to_string(v) + " not in graph");
        if (!seen.insert(v).second)
            throw ArityError("terminal " + std::to_string(v) + " repeated");
    }
}

TerminalList TerminalList::reversed() const {
    std::vector<VertexId> rev(terminals.rbegin(), terminals.rend());
    return TerminalList(graph, std::move(rev));
}

Partition::Partition(std::vector<std::vector<int>> bs) : blocks(std::move(bs)) {
    std::set<int> seen;
    for (auto& b : blocks) {
        if (b.empty()) throw ArityError("partition block must be nonempty");
        std::sort(b.begin(), b.end());
        for (int e : b)
            if (!seen.insert(e).second)
                throw ArityError("partition repeats element " + std::to_string(e));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    int k = ground_size();
    for (int i = 1; i <= k; i++)
        if (!seen.count(i)) throw ArityError("partition misses element " + std::to_string(i));
}

int Partition::ground_size() const {
    int mx = 0;
    for (const auto& b : blocks) mx = std::max(mx, b.back());
    return mx;
}

int Partition::block_of(int element) const {
    for (std::size_t i = 0; i < blocks.size(); i++)
        for (int e : blocks[i])
            if (e == element) return static_cast<int>(i);
    throw InvalidReferenceError("element " + std::to_string(element) + " not in partition");
}

Partition Partition::discrete(int k) {
    std::vector<std::vector<int>> bs;
    for (int i = 1; i <= k; i++) bs.push_back({i});
    return Partition(std::move(bs));
}

Partition Partition::single(int k) {
    std::vector<int> b(k);
    std::iota(b.begin(), b.end(), 1);
    return Partition({b});
}

std::vector<Partition> Partition::all(int k) {
    std::vector<Partition> out;
    std::vector<std::vector<int>> current;
    std::function<void(int)> rec = [&](int i) {
        if (i > k) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t b = 0; b < current.size(); b++) {
            current[b].push_back(i);
            rec(i + 1);
            current[b].pop_back();
        }
        current.push_back({i});
        rec(i + 1);
        current.pop_back();
    };
    rec(1);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.blocks < b.blocks; });
    return out;
}

std::string Partition::render() const {
    std::ostringstream os;
    for (const auto& b : blocks) {
        os << "{";
        for (std::size_t i = 0; i < b.size(); i++) os << (i ? "," : "") << b[i];
        os << "}";
    }
    return os.str();
}

PairSet::PairSet(std::vector<std::pair<int, int>> ps) : pairs(std::move(ps)) {
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : pairs) {
        if (i > j) std::swap(i, j);
        if (i == j || i < 1) throw ArityError("pair indices must satisfy 1 <= i < j");
        if (!seen.insert({i, j}).second) throw ArityError("duplicate pair in pair set");
    }
    std::sort(pairs.begin(), pairs.end());
}

std::vector<PairSet> PairSet::all_subsets(int k) {
    std::vector<std::pair<int, int>> universe;
    for (int i = 1; i <= k; i++)
        for (int j = i + 1; j <= k; j++) universe.emplace_back(i, j);
    int m = static_cast<int>(universe.size());
    std::vector<PairSet> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); mask++) {
        std::vector<std::pair<int, int>> ps;
        for (int b = 0; b < m; b++)
            if (mask & (1ull << b)) ps.push_back(universe[b]);
        out.emplace_back(std::move(ps));
    }
    return out;
}

std::string PairSet::render() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < pairs.size(); i++) {
        if (i) os << ",";
        os << "{" << pairs[i].first << "," << pairs[i].second << "}";
    }
    os << "}";
    return os.str();
}

GlueResult glue(const TerminalList& gt, const TerminalList& wt,
                std::optional<VertexId> fresh_vertex_base, std::optional<EdgeId> fresh_edge_base) {
    if (gt.k() != wt.k()) throw ArityError("terminal lists must have equal length");
    int k = gt.k();

    VertexId vbase = fresh_vertex_base.value_or(gt.graph.max_vertex_id() + 1);
    vbase = std::max(vbase, gt.graph.max_vertex_id() + 1);
    EdgeId ebase = fresh_edge_base.value_or(gt.graph.max_edge_id() + 1);
    ebase = std::max(ebase, gt.graph.max_edge_id() + 1);

    GlueResult res;
    for (VertexId v : gt.graph.vertices()) res.left_map[v] = v;

    // renumber the whole wt side
    VertexId next_v = vbase;
    for (VertexId v : wt.graph.vertices()) res.right_map[v] = next_v++;

    // gt terminals merge into the renumbered wt terminals
    for (int i = 0; i < k; i++) res.left_map[gt.terminals[i]] = res.right_map[wt.terminals[i]];

    std::vector<VertexId> verts;
    for (VertexId v : gt.graph.vertices()) verts.push_back(res.left_map[v]);
    for (VertexId v : wt.graph.vertices()) verts.push_back(res.right_map[v]);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<Edge> edges;
    for (const Edge& e : gt.graph.edges())
        edges.push_back({e.id, res.left_map[e.u], res.left_map[e.v]});
    EdgeId next_e = ebase;
    for (const Edge& e : wt.graph.edges()) {
        res.right_edge_map[e.id] = next_e;
        edges.push_back({next_e++, res.right_map[e.u], res.right_map[e.v]});
    }

    for (int i = 0; i < k; i++) res.merged.push_back(res.right_map[wt.terminals[i]]);
    std::string name = gt.graph.name().empty() || wt.graph.name().empty()
                           ? ""
                           : gt.graph.name() + "+" + wt.graph.name();
    res.graph = Multigraph(std::move(verts), std::move(edges), name);
    return res;
}

Multigraph add_edges_for_pairs(const TerminalList& gt, const PairSet& s) {
    int k = gt.k();
    Multigraph out = gt.graph;
    EdgeId next = out.max_edge_id() + 1;
    for (const auto& [i, j] : s.pairs) {
        if (j > k) throw ArityError("pair index " + std::to_string(j) + " exceeds k");
        out = out.with_edge(next++, gt.terminals[i - 1], gt.terminals[j - 1]);
    }
    return out;
}

Multigraph quotient(const TerminalList& gt, const Partition& p) {
    if (p.ground_size() > gt.k()) throw ArityError("partition ground set exceeds k");
    Multigraph out = gt.graph;
    for (const auto& block : p.blocks) {
        if (block.size() < 2) continue;
        std::vector<VertexId> vs;
        for (int i : block) vs.push_back(gt.terminals[i - 1]);
        // identify_vertices keeps the smallest id; repeated blocks are
        // independent since terminals are distinct
        out = out.identify_vertices(vs);
    }
    return out;
}

Multigraph whitney_twist(const Multigraph& g, std::pair<VertexId, VertexId> cut,
                         const std::vector<VertexId>& side) {
    auto [c1, c2] = cut;
    if (!g.has_vertex(c1) || !g.has_vertex(c2))
        throw InvalidReferenceError("cut vertex not in graph");
    if (c1 == c2) throw InvalidCutError("cut vertices must be distinct");
    std::set<VertexId> s(side.begin(), side.end());
    if (s.count(c1) || s.count(c2)) throw InvalidCutError("side must not contain a cut vertex");
    for (VertexId v : side)
        if (!g.has_vertex(v)) throw InvalidReferenceError("side vertex not in graph");

    // every edge leaving the side must land on a cut vertex
    for (const Edge& e : g.edges()) {
        bool iu = s.count(e.u) > 0, iv = s.count(e.v) > 0;
        if (iu == iv) continue;
        VertexId outside = iu ? e.v : e.u;
        if (outside != c1 && outside != c2)
            throw InvalidCutError("edge " + std::to_string(e.id) +
                                  " leaves the side past the cut");
    }

    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        bool iu = s.count(e.u) > 0, iv = s.count(e.v) > 0;
        if (iu != iv) {
            VertexId& outside = iu ? e.v : e.u;
            if (outside == c1)
                outside = c2;
            else if (outside == c2)
                outside = c1;
        }
        edges.push_back(e);
    }
    return Multigraph(g.vertices(), std::move(edges), g.name());
}

std::pair<Multigraph, Multigraph> rotor_flip_pair(const TerminalList& rt, const TerminalList& wt,
                                                  bool force, const IsoLimits& limits) {
    if (!force && !check_cyclic_orbit(rt.graph, rt.terminals, limits))
        throw HypothesisError("rotor terminals are not a cyclic vertex orbit of any automorphism");
    GlueResult a = glue(rt, wt);
    GlueResult b = glue(rt.reversed(), wt);
    return {std::move(a.graph), std::move(b.graph)};
}

namespace {

int cyc_index(int i, int n) { return ((i - 1) % n + n) % n; }  // 1-based -> 0-based position

}  // namespace

W0Validation validate_w0(const W0Spec& spec, const IsoLimits& limits) {
    W0Validation val;
    auto violate = [&](const std::string& msg) { val.violations.push_back(msg); };

    if (spec.r < 1 || spec.g < 1) violate("r and g must be positive");
    if (static_cast<int>(spec.w_list.size()) != spec.r * spec.g)
        violate("w-list must have exactly r*g vertices");
    if (static_cast<int>(spec.x_list.size()) != spec.r)
        violate("x-list must have exactly r vertices");

    std::set<VertexId> seen;
    for (VertexId v : spec.w_list) {
        if (!spec.w0.has_vertex(v)) violate("w vertex " + std::to_string(v) + " not in graph");
        if (!seen.insert(v).second) violate("w vertex " + std::to_string(v) + " repeated");
    }
    for (VertexId v : spec.x_list) {
        if (!spec.w0.has_vertex(v)) violate("x vertex " + std::to_string(v) + " not in graph");
        if (!seen.insert(v).second) violate("x vertex " + std::to_string(v) + " repeated or shared with w-list");
    }
    for (const Edge& e : spec.w0.edges())
        if (e.is_loop()) {
            violate("graph must be loopless");
            break;
        }
    if (!val.violations.empty()) return val;

    int rg = spec.r * spec.g;

    // condition 1: phi(w_i) = w_{i+g}, phi(x_s) = x_{s+1}
    {
        std::vector<std::pair<VertexId, VertexId>> pins;
        for (int i = 1; i <= rg; i++)
            pins.emplace_back(spec.w_list[cyc_index(i, rg)], spec.w_list[cyc_index(i + spec.g, rg)]);
        for (int s = 1; s <= spec.r; s++)
            pins.emplace_back(spec.x_list[cyc_index(s, spec.r)], spec.x_list[cyc_index(s + 1, spec.r)]);
        std::optional<VertexMapping> phi;
        if (spec.phi) {
            phi = spec.phi;
            if (!preserves_multiplicities(spec.w0, spec.w0, *phi))
                violate("supplied phi is not an automorphism");
            else
                for (const auto& [a, b] : pins)
                    if (phi->image(a) != b) {
                        violate("supplied phi violates the rotation condition");
                        break;
                    }
        } else {
            phi = find_isomorphism_pinned(spec.w0, spec.w0, pins, limits);
            if (!phi) violate("no automorphism phi with phi(w_i)=w_{i+g}, phi(x_s)=x_{s+1}");
        }
        if (phi && val.violations.empty()) val.phi = *phi;
    }

    // condition 2: rho(w_{1+s}) = w_{c-s} and rho(x_{1+i}) = x_{c'-i}
    if (val.violations.empty()) {
        auto try_rho = [&](int c, int cp) -> std::optional<VertexMapping> {
            std::vector<std::pair<VertexId, VertexId>> pins;
            for (int s = 0; s < rg; s++)
                pins.emplace_back(spec.w_list[s], spec.w_list[cyc_index(c - s, rg)]);
            for (int i = 0; i < spec.r; i++)
                pins.emplace_back(spec.x_list[i], spec.x_list[cyc_index(cp - i, spec.r)]);
            std::set<std::pair<VertexId, VertexId>> dedup(pins.begin(), pins.end());
            return find_isomorphism_pinned(
                spec.w0, spec.w0,
                std::vector<std::pair<VertexId, VertexId>>(dedup.begin(), dedup.end()), limits);
        };
        bool found = false;
        if (spec.rho && spec.c && spec.c_prime) {
            if (!preserves_multiplicities(spec.w0, spec.w0, *spec.rho)) {
                violate("supplied rho is not an automorphism");
            } else {
                int c = *spec.c, cp = *spec.c_prime;
                bool ok = true;
                for (int s = 0; s < rg && ok; s++)
                    ok = spec.rho->image(spec.w_list[s]) == spec.w_list[cyc_index(c - s, rg)];
                for (int i = 0; i < spec.r && ok; i++)
                    ok = spec.rho->image(spec.x_list[i]) == spec.x_list[cyc_index(cp - i, spec.r)];
                if (!ok) {
                    violate("supplied rho violates the reflection condition");
                } else {
                    val.rho = *spec.rho;
                    val.c = c;
                    val.c_prime = cp;
                    found = true;
                }
            }
        } else {
            for (int c = 1; c <= rg && !found; c++)
                for (int cp = 1; cp <= spec.r && !found; cp++) {
                    auto rho = try_rho(c, cp);
                    if (rho) {
                        val.rho = *rho;
                        val.c = c;
                        val.c_prime = cp;
                        found = true;
                    }
                }
            if (!found) violate("no automorphism rho reflecting both the w-list and the x-list");
        }
    }

    val.ok = val.violations.empty();
    return val;
}

std::pair<Multigraph, Multigraph> theorem5_pair(const TerminalList& rt, const W0Spec& spec,
                                                const TerminalList& yt, bool force,
                                                const IsoLimits& limits) {
    W0Validation val = validate_w0(spec, limits);
    if (!val.ok && !force) {
        std::string msg = "W0 validation failed:";
        for (const auto& v : val.violations) msg += " " + v;
        throw HypothesisError(msg);
    }
    if (spec.r > 5 && !force)
        throw HypothesisError("r > 5 is outside the guaranteed range; pass force to build anyway");
    int rg = spec.r * spec.g;
    if (rt.k() != rg) throw ArityError("rotor terminal list must have length r*g");
    if (yt.k() != spec.r) throw ArityError("Y terminal list must have length r");

    // W = W0(x_1..x_r) glued to Y(y_1..y_r); W0's w-list ids survive the glue
    GlueResult wres = glue(TerminalList(spec.w0, spec.x_list), yt);
    std::vector<VertexId> w_terms;
    for (VertexId w : spec.w_list) w_terms.push_back(wres.left_map.at(w));
    TerminalList wt(wres.graph, std::move(w_terms));
    return rotor_flip_pair(rt, wt, force, limits);
}

std::optional<std::pair<int, int>> s4_checker(const W0Spec& spec, const W0Validation& val,
                                              const Partition& q) {
    if (!val.ok) throw PreconditionError("s4_checker requires a passing W0 validation");
    if (q.ground_size() > spec.r) throw ArityError("partition ground set exceeds r");
    int rg = spec.r * spec.g;

    // pi = rho phi^d as a vertex mapping; actions on the w- and x-lists have
    // period r in d, so d is normalized into [0, r)
    auto power = [&](int d) {
        VertexMapping p = val.phi;
        VertexMapping acc = VertexMapping::from_pairs([&] {
            std::vector<std::pair<VertexId, VertexId>> id;
            for (VertexId v : spec.w0.vertices()) id.emplace_back(v, v);
            return id;
        }());
        for (int i = 0; i < d; i++) acc = p.compose(acc);
        return acc;
    };

    for (int b = 1; b <= spec.r; b++)
        for (int bp = 1; bp <= spec.r; bp++) {
            int d = val.c_prime + 1 - b - bp;
            int dd = ((d % spec.r) + spec.r) % spec.r;
            VertexMapping pi = val.rho.compose(power(dd));

            // (a) pi(w_{1+s}) = w_{p-s}: derive p from s=0, then verify
            VertexId img0 = pi.image(spec.w_list[0]);
            int p = -1;
            for (int idx = 0; idx < rg; idx++)
                if (spec.w_list[idx] == img0) {
                    p = idx + 1;
                    break;
                }
            if (p < 0) continue;
            bool ok = true;
            for (int s = 0; s < rg && ok; s++)
                ok = pi.image(spec.w_list[s]) == spec.w_list[cyc_index(p - s, rg)];
            if (!ok) continue;

            // (b) pi permutes q's blocks (as a partition of the x-indices)
            auto x_index = [&](VertexId v) {
                for (int i = 0; i < spec.r; i++)
                    if (spec.x_list[i] == v) return i + 1;
                return -1;
            };
            std::set<std::vector<int>> orig, mapped;
            for (const auto& block : q.blocks) {
                std::vector<int> o = block, m;
                for (int e : block) {
                    int im = x_index(pi.image(spec.x_list[e - 1]));
                    if (im < 0) {
                        ok = false;
                        break;
                    }
                    m.push_back(im);
                }
                if (!ok) break;
                std::sort(m.begin(), m.end());
                orig.insert(o);
                mapped.insert(m);
            }
            if (ok && orig == mapped) return std::make_pair(p, dd);
        }
    return std::nullopt;
}

}  // namespace tutteforge
