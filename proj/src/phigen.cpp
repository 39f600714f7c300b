#include "tutteforge/phigen.hpp"

#include "tutteforge/constructions.hpp"
#include "tutteforge/error.hpp"
#include "tutteforge/tutte.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace tutteforge {

int PhiWitness::u_index(VertexId id) const {
    for (int i = 0; i < n(); i++)
        if (u_ids[i] == id) return i + 1;
    return 0;
}

int PhiWitness::v_index(VertexId id) const {
    for (int i = 0; i < n(); i++)
        if (v_ids[i] == id) return i + 1;
    return 0;
}

namespace {

void require_seed(const Multigraph& g, const char* which) {
    if (!g.is_connected())
        throw PreconditionError(std::string(which) + " must be connected");
    for (const Edge& e : g.edges())
        if (e.is_loop()) throw PreconditionError(std::string(which) + " must be loopless");
}

}  // namespace

std::vector<PhiWitness> enumerate_phi_witnesses(const Multigraph& g, const Multigraph& h,
                                                EdgeId e, EdgeId f, const IsoLimits& limits) {
    require_seed(g, "G");
    require_seed(h, "H");
    const Edge& eg = g.edge(e);
    const Edge& fh = h.edge(f);
    if (eg.is_loop() || fh.is_loop()) throw PreconditionError("e and f must be non-loop edges");

    Multigraph g_del = g.delete_edges({e});
    Multigraph h_del = h.delete_edges({f});
    Multigraph g_con = g.contract_edge(e).first;
    Multigraph h_con = h.contract_edge(f).first;

    std::vector<PhiWitness> out;
    auto phis = enumerate_isomorphisms(g_del, h_del, limits);
    auto psis = enumerate_isomorphisms(g_con, h_con, limits);
    if (phis.empty() || psis.empty()) return out;

    for (std::size_t pi = 0; pi < phis.size(); pi++) {
        PhiWitness base;
        base.g = g;
        base.h = h;
        base.e = e;
        base.f = f;
        base.phi = phis[pi];
        base.u_ids = g.vertices();
        for (VertexId u : base.u_ids) base.v_ids.push_back(base.phi.image(u));
        base.s1 = base.u_index(eg.u);
        base.s2 = base.u_index(eg.v);
        if (base.s1 > base.s2) std::swap(base.s1, base.s2);
        base.t1 = base.v_index(fh.u);
        base.t2 = base.v_index(fh.v);
        if (base.t1 > base.t2) std::swap(base.t1, base.t2);
        base.phi_index = static_cast<int>(pi);
        for (std::size_t qi = 0; qi < psis.size(); qi++) {
            PhiWitness w = base;
            w.psi = psis[qi];
            w.psi_index = static_cast<int>(qi);
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::optional<PhiWitness> certify_phi_prime(const Multigraph& g, const Multigraph& h, EdgeId e,
                                            EdgeId f, const IsoLimits& limits) {
    auto all = enumerate_phi_witnesses(g, h, e, f, limits);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool PsiDigraph::has_arc(int i, int j) const {
    return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(i, j));
}

PsiDigraph build_psi_digraph(const PhiWitness& w) {
    PsiDigraph d;
    d.n = w.n();
    VertexId mu = w.merged_u();
    VertexId mv = w.merged_v();

    Multigraph g_con = w.g.contract_edge(w.e).first;
    for (VertexId a : g_con.vertices()) {
        std::vector<int> is;
        if (a == mu) {
            is = {w.s1, w.s2};
        } else {
            int i = w.u_index(a);
            if (i == 0) throw Error("contraction vertex not indexed");
            is = {i};
        }
        VertexId b = w.psi.image(a);
        std::vector<int> js;
        if (b == mv) {
            js = {w.t1, w.t2};
        } else {
            int j = w.v_index(b);
            if (j == 0) throw Error("psi image not indexed");
            js = {j};
        }
        for (int i : is)
            for (int j : js) d.arcs.emplace_back(i, j);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

std::vector<std::vector<int>> directed_cycles(const PsiDigraph& d) {
    std::vector<std::vector<int>> cycles;
    std::map<int, std::vector<int>> succ;
    for (const auto& [i, j] : d.arcs) succ[i].push_back(j);

    // elementary cycles with smallest vertex first: DFS from each start s
    // through vertices > s only
    std::vector<int> path;
    std::set<int> on_path;
    std::function<void(int, int)> extend = [&](int s, int v) {
        for (int nxt : succ[v]) {
            if (nxt == s) {
                cycles.push_back(path);
            } else if (nxt > s && !on_path.count(nxt)) {
                path.push_back(nxt);
                on_path.insert(nxt);
                extend(s, nxt);
                on_path.erase(nxt);
                path.pop_back();
            }
        }
    };
    for (int s = 1; s <= d.n; s++) {
        path = {s};
        on_path = {s};
        extend(s, s);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

Dig1Verdict check_dig1(const PhiWitness& w, const std::vector<int>& cycle) {
    PsiDigraph d = build_psi_digraph(w);
    auto cyc = directed_cycles(d);
    if (std::find(cyc.begin(), cyc.end(), cycle) == cyc.end())
        throw PreconditionError("not a directed cycle of the witness digraph");

    Dig1Verdict verdict;
    std::set<int> on(cycle.begin(), cycle.end());
    verdict.s_on_cycle = on.count(w.s1) && on.count(w.s2);
    verdict.t_on_cycle = on.count(w.t1) && on.count(w.t2);

    if (verdict.s_on_cycle != verdict.t_on_cycle) {
        verdict.holds = false;
        verdict.detail = "biconditional violated";
        return verdict;
    }
    if (!verdict.s_on_cycle) {
        verdict.holds = true;
        verdict.detail = "holds vacuously";
        return verdict;
    }

    if (w.psi.image(w.merged_u()) != w.merged_v()) {
        verdict.holds = false;
        verdict.detail = "merged vertices not matched by psi";
        return verdict;
    }
    auto arc_on_cycle = [&](int a, int b) {
        int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; i++)
            if (cycle[i] == a && cycle[(i + 1) % k] == b) return true;
        return false;
    };
    bool j1 = arc_on_cycle(w.s1, w.t1) && arc_on_cycle(w.s2, w.t2);
    bool j2 = arc_on_cycle(w.s1, w.t2) && arc_on_cycle(w.s2, w.t1);
    if (!(j1 || j2)) {
        verdict.holds = false;
        verdict.detail = "cycle lacks the paired s->t arcs";
        return verdict;
    }
    verdict.holds = true;
    verdict.detail = "full clause verified";
    return verdict;
}

namespace {

// One attachment step: glue the rotor onto both sides with synchronized
// fresh ids, then extend phi by the identity and psi by the orbit
// automorphism on the new vertices.
PhiWitness attach_one(const PhiWitness& w, const CycleRotorAssignment& asg,
                      const IsoLimits& limits, std::vector<std::string>& notes) {
    int k = static_cast<int>(asg.cycle.size());
    if (k != static_cast<int>(asg.orbit.size()))
        throw ArityError("cycle length " + std::to_string(k) + " does not match orbit size " +
                         std::to_string(asg.orbit.size()));

    auto xi_opt = check_cyclic_orbit(asg.rotor, asg.orbit, limits);
    if (!xi_opt)
        throw HypothesisError("rotor orbit is not a cyclic vertex orbit of any automorphism");
    VertexMapping xi = *xi_opt;

    PsiDigraph d = build_psi_digraph(w);
    auto cyc = directed_cycles(d);
    if (std::find(cyc.begin(), cyc.end(), asg.cycle) == cyc.end())
        throw PreconditionError("assignment cycle is not a directed cycle of the current witness");
    if (k == 1) notes.push_back("1-cycle assignment (fixed point of psi) attached");

    VertexId vbase = std::max(w.g.max_vertex_id(), w.h.max_vertex_id()) + 1;
    EdgeId ebase = std::max(w.g.max_edge_id(), w.h.max_edge_id()) + 1;

    std::vector<VertexId> g_terms, h_terms;
    for (int idx : asg.cycle) {
        if (idx < 1 || idx > w.n()) throw ArityError("cycle index out of range");
        g_terms.push_back(w.u_ids[idx - 1]);
        h_terms.push_back(w.v_ids[idx - 1]);
    }

    TerminalList rotor_t(asg.rotor, asg.orbit);
    GlueResult gres = glue(TerminalList(w.g, g_terms), rotor_t, vbase, ebase);
    GlueResult hres = glue(TerminalList(w.h, h_terms), rotor_t, vbase, ebase);

    PhiWitness out;
    out.g = gres.graph;
    out.h = hres.graph;
    out.e = w.e;
    out.f = w.f;
    out.s1 = w.s1;
    out.s2 = w.s2;
    out.t1 = w.t1;
    out.t2 = w.t2;
    out.phi_index = w.phi_index;
    out.psi_index = w.psi_index;

    for (int i = 0; i < w.n(); i++) {
        out.u_ids.push_back(gres.left_map.at(w.u_ids[i]));
        out.v_ids.push_back(hres.left_map.at(w.v_ids[i]));
    }
    // fresh non-orbit rotor vertices extend the index range; both sides
    // received identical ids
    std::set<VertexId> orbit_set(asg.orbit.begin(), asg.orbit.end());
    for (VertexId rv : asg.rotor.vertices()) {
        if (orbit_set.count(rv)) continue;
        VertexId fresh_g = gres.right_map.at(rv);
        VertexId fresh_h = hres.right_map.at(rv);
        if (fresh_g != fresh_h) throw Error("rotor renumbering diverged between sides");
        out.u_ids.push_back(fresh_g);
        out.v_ids.push_back(fresh_h);
    }

    // phi_i(u_i) = v_i over the extended index range
    {
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (int i = 0; i < out.n(); i++) pairs.emplace_back(out.u_ids[i], out.v_ids[i]);
        out.phi = VertexMapping::from_pairs(std::move(pairs));
    }

    // psi_i: old vertices follow psi through the renumbering, fresh vertices
    // follow the orbit automorphism
    {
        std::map<VertexId, VertexId> old_to_new_g, old_to_new_h;
        for (int i = 0; i < w.n(); i++) {
            old_to_new_g[w.u_ids[i]] = out.u_ids[i];
            old_to_new_h[w.v_ids[i]] = out.v_ids[i];
        }
        VertexId mu_old = w.merged_u();
        VertexId mv_old = w.merged_v();
        VertexId mu_new = out.merged_u();
        VertexId mv_new = out.merged_v();

        std::vector<std::pair<VertexId, VertexId>> pairs;
        Multigraph g_con_old = w.g.contract_edge(w.e).first;
        for (VertexId a_old : g_con_old.vertices()) {
            VertexId b_old = w.psi.image(a_old);
            VertexId a_new = a_old == mu_old ? mu_new : old_to_new_g.at(a_old);
            VertexId b_new = b_old == mv_old ? mv_new : old_to_new_h.at(b_old);
            pairs.emplace_back(a_new, b_new);
        }
        for (VertexId rv : asg.rotor.vertices()) {
            if (orbit_set.count(rv)) continue;
            pairs.emplace_back(gres.right_map.at(rv), hres.right_map.at(xi.image(rv)));
        }
        out.psi = VertexMapping::from_pairs(std::move(pairs));
    }

    if (!preserves_multiplicities(out.g.delete_edges({out.e}), out.h.delete_edges({out.f}),
                                  out.phi))
        throw HypothesisError("extended phi failed verification after attaching a rotor");
    if (!preserves_multiplicities(out.g.contract_edge(out.e).first,
                                  out.h.contract_edge(out.f).first, out.psi))
        throw HypothesisError("extended psi failed verification after attaching a rotor");
    return out;
}

}  // namespace

AttachResult attach_rotors(const PhiWitness& w, std::span<const CycleRotorAssignment> assignments,
                           const IsoLimits& limits) {
    AttachResult res;
    res.witness = w;
    for (const auto& asg : assignments)
        res.witness = attach_one(res.witness, asg, limits, res.notes);
    return res;
}

MemberVerdict verify_new_member(const Multigraph& g_r, const Multigraph& h_r, EdgeId e, EdgeId f,
                                const IsoLimits& limits) {
    MemberVerdict verdict;
    std::ostringstream detail;

    try {
        auto witness = certify_phi_prime(g_r, h_r, e, f, limits);
        verdict.in_phi_prime = witness.has_value();
        detail << (verdict.in_phi_prime ? "deletion and contraction isomorphisms found"
                                        : "no witness isomorphisms");
    } catch (const PreconditionError& ex) {
        verdict.in_phi_prime = false;
        detail << "precondition: " << ex.what();
    } catch (const LimitError& ex) {
        verdict.in_phi_prime = false;
        detail << "limit: " << ex.what();
    }

    verdict.t_equivalent = t_equivalent(g_r, h_r);

    try {
        verdict.isomorphic = find_isomorphism(g_r, h_r, limits).has_value();
    } catch (const LimitError&) {
        verdict.isomorphic = std::nullopt;
    }
    verdict.detail = detail.str();
    return verdict;
}

// --- witness files ---

void write_witness(std::ostream& out, const WitnessFile& wf) {
    out << "# phi witness\n";
    out << "g " << wf.g_path << "\n";
    out << "h " << wf.h_path << "\n";
    out << "e " << wf.e << "\n";
    out << "f " << wf.f << "\n";
    out << "phi-index " << wf.phi_index << "\n";
    out << "psi-index " << wf.psi_index << "\n";
    if (!wf.phi_render.empty()) out << "phi " << wf.phi_render << "\n";
    if (!wf.psi_render.empty()) out << "psi " << wf.psi_render << "\n";
    for (const auto& a : wf.assignments) {
        out << "assign cycle=";
        for (std::size_t i = 0; i < a.cycle.size(); i++) out << (i ? "," : "") << a.cycle[i];
        out << " rotor=" << a.rotor_path << " orbit=";
        for (std::size_t i = 0; i < a.orbit.size(); i++) out << (i ? "," : "") << a.orbit[i];
        out << "\n";
    }
}

namespace {

std::vector<int> parse_int_list(const std::string& text, int line_no) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("witness line " + std::to_string(line_no) + ": bad integer '" + tok + "'",
                             static_cast<std::size_t>(line_no));
        }
    }
    return out;
}

}  // namespace

WitnessFile read_witness(std::istream& in) {
    WitnessFile wf;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("witness line " + std::to_string(line_no) + ": " + msg,
                         static_cast<std::size_t>(line_no));
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "g") {
            if (!(ls >> wf.g_path)) fail("g needs a path");
        } else if (key == "h") {
            if (!(ls >> wf.h_path)) fail("h needs a path");
        } else if (key == "e") {
            if (!(ls >> wf.e)) fail("e needs an id");
        } else if (key == "f") {
            if (!(ls >> wf.f)) fail("f needs an id");
        } else if (key == "phi-index") {
            if (!(ls >> wf.phi_index)) fail("phi-index needs an integer");
        } else if (key == "psi-index") {
            if (!(ls >> wf.psi_index)) fail("psi-index needs an integer");
        } else if (key == "phi") {
            ls >> wf.phi_render;
        } else if (key == "psi") {
            ls >> wf.psi_render;
        } else if (key == "assign") {
            WitnessFile::Assignment a;
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) fail("assign fields look like key=value");
                std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
                if (k == "cycle")
                    a.cycle = parse_int_list(v, line_no);
                else if (k == "rotor")
                    a.rotor_path = v;
                else if (k == "orbit")
                    a.orbit = parse_int_list(v, line_no);
                else
                    fail("unknown assign field '" + k + "'");
            }
            if (a.cycle.empty() || a.rotor_path.empty() || a.orbit.empty())
                fail("assign needs cycle=, rotor= and orbit=");
            wf.assignments.push_back(std::move(a));
        } else {
            fail("unknown record '" + key + "'");
        }
    }
    return wf;
}

void write_witness_file(const std::string& path, const WitnessFile& wf) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path);
    write_witness(out, wf);
}

WitnessFile read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open witness file: " + path);
    return read_witness(in);
}

}  // namespace tutteforge
