// Acceptance suite: one line per criterion, exit 0 iff everything passes.
// Usage: acceptance [--only N]

#include "tutteforge/bipoly.hpp"
#include "tutteforge/constructions.hpp"
#include "tutteforge/corpus.hpp"
#include "tutteforge/graph_io.hpp"
#include "tutteforge/iso.hpp"
#include "tutteforge/phigen.hpp"
#include "tutteforge/rng.hpp"
#include "tutteforge/tutte.hpp"
#include "tutteforge/verify.hpp"
#include "support/catalogue.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace tutteforge;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "  FAILED: " << what << "\n";
        }
    }
    void info(const std::string& what) { log << "  " << what << "\n"; }
};

const std::vector<Multigraph>& small_catalogue() {
    static const std::vector<Multigraph> cat = testsupport::multigraph_catalogue(5, 8);
    return cat;
}

// ----- criterion 1: oracle equivalence -----

void criterion_oracle_equivalence(Outcome& out) {
    const auto& cat = small_catalogue();
    EngineConfig cfg;
    MemoCache cache;
    std::size_t checked = 0;
    for (const auto& g : cat) {
        if (tutte_subset_expansion(g) != tutte_dc(g, cfg, cache)) {
            out.require(false, "engine mismatch on a catalogue graph with " +
                                   std::to_string(g.vertex_count()) + " vertices, " +
                                   std::to_string(g.edge_count()) + " edges");
            return;
        }
        checked++;
    }
    out.info("catalogue classes checked: " + std::to_string(checked));
    out.require(checked > 5000, "catalogue unexpectedly small");

    Rng rng(20250801);
    for (int t = 0; t < 500; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 7, 12);
        if (tutte_subset_expansion(g) != tutte_dc(g, cfg, cache)) {
            out.require(false, "engine mismatch on random graph " + std::to_string(t));
            return;
        }
    }
    out.info("random graphs checked: 500");
}

// ----- criterion 2: gray pair -----

void criterion_gray_pair(Outcome& out) {
    const auto& entry = corpus_entry("gray-pair");
    const Multigraph& g = entry.graphs[0].graph;
    const Multigraph& h = entry.graphs[1].graph;
    out.require(tutte(g) == tutte(h), "T(G*) != T(H*)");
    out.require(!find_isomorphism(g, h), "G* and H* must not be isomorphic");
    out.require(find_isomorphism(g.delete_edges({9}), h.delete_edges({9})).has_value(),
                "G*-e and H*-f must be isomorphic");
    out.require(
        find_isomorphism(g.contract_edge(9).first, h.contract_edge(9).first).has_value(),
        "G*/e and H*/f must be isomorphic");
    out.require(triangle_edge_distinguisher(h), "H* must contain an edge-isolated triangle");
    out.require(!triangle_edge_distinguisher(g), "G* must not contain an edge-isolated triangle");
}

// ----- criterion 3: pipeline end to end -----

void criterion_pipeline(Outcome& out) {
    const Multigraph& g = corpus_entry("path-seed").graphs[0].graph;
    const Multigraph& h = corpus_entry("path-seed").graphs[1].graph;

    auto first = certify_phi_prime(g, h, 3, 3);
    out.require(first.has_value(), "path seed not certified");

    auto all = enumerate_phi_witnesses(g, h, 3, 3);
    VertexMapping d1 = VertexMapping::parse("1->4,2->1,3->2,5->3");
    VertexMapping d2 = VertexMapping::parse("1->3,2->2,3->1,5->4");
    bool saw1 = false, saw2 = false;
    const PhiWitness* witness1 = nullptr;
    for (const auto& w : all) {
        if (w.phi_index != 0) continue;
        if (w.psi == d1) {
            saw1 = true;
            witness1 = &w;
        }
        if (w.psi == d2) saw2 = true;
    }
    out.require(saw1 && saw2, "both displayed contraction isomorphisms must be enumerated");
    if (!witness1) return;

    PsiDigraph d = build_psi_digraph(*witness1);
    std::vector<std::pair<int, int>> want_arcs = {{1, 4}, {2, 1}, {2, 5}, {3, 2}, {4, 2}, {5, 3}};
    out.require(d.arcs == want_arcs, "digraph arcs differ from the expected six");
    auto cycles = directed_cycles(d);
    std::vector<std::vector<int>> want_cycles = {{1, 4, 2}, {2, 5, 3}};
    out.require(cycles == want_cycles, "directed cycles differ");

    std::vector<CycleRotorAssignment> asgs;
    asgs.push_back({{1, 4, 2}, Multigraph::complete(3), {1, 2, 3}});
    asgs.push_back({{2, 5, 3}, Multigraph::star(3), {2, 3, 4}});
    AttachResult res = attach_rotors(*witness1, asgs);

    const auto& gray = corpus_entry("gray-pair");
    out.require(find_isomorphism(res.witness.g, gray.graphs[0].graph).has_value(),
                "generated G_2 not isomorphic to the gray-pair graph");
    out.require(find_isomorphism(res.witness.h, gray.graphs[1].graph).has_value(),
                "generated H_2 not isomorphic to the gray-pair partner");

    MemberVerdict v = verify_new_member(res.witness.g, res.witness.h, 3, 3);
    out.require(v.in_phi_prime, "generated pair must re-certify");
    out.require(v.t_equivalent, "generated pair must be T-equivalent");
    out.require(v.isomorphic.has_value() && !*v.isomorphic,
                "generated pair should be non-isomorphic");
}

// ----- criterion 4: path seeds P5..P7 with a rotor menu -----

void criterion_path_generalization(Outcome& out) {
    struct MenuItem {
        Multigraph rotor;
        std::vector<VertexId> orbit;
        const char* name;
    };
    std::vector<MenuItem> menu = {
        {Multigraph::complete(3), {1, 2, 3}, "triangle"},
        {Multigraph::star(3), {2, 3, 4}, "star"},
        {Multigraph::cycle(4), {1, 2, 3, 4}, "square"},
    };

    int pairs = 0, nonisomorphic = 0;
    for (int n = 5; n <= 7; n++) {
        Multigraph seed = Multigraph::path(n);
        EdgeId e = n - 2;  // second-rightmost edge
        auto witnesses = enumerate_phi_witnesses(seed, seed, e, e);
        out.require(!witnesses.empty(), "no witnesses for P" + std::to_string(n));
        for (const auto& w : witnesses) {
            auto cycles = directed_cycles(build_psi_digraph(w));
            // assignment choices per cycle: skip or any orbit-size match
            std::vector<std::vector<int>> options(cycles.size());
            for (std::size_t c = 0; c < cycles.size(); c++) {
                options[c].push_back(-1);
                for (std::size_t m = 0; m < menu.size(); m++)
                    if (menu[m].orbit.size() == cycles[c].size())
                        options[c].push_back(static_cast<int>(m));
            }
            std::vector<std::size_t> pick(cycles.size(), 0);
            while (true) {
                std::vector<CycleRotorAssignment> asgs;
                for (std::size_t c = 0; c < cycles.size(); c++) {
                    int m = options[c][pick[c]];
                    if (m >= 0) asgs.push_back({cycles[c], menu[m].rotor, menu[m].orbit});
                }
                AttachResult res = attach_rotors(w, asgs);
                MemberVerdict v = verify_new_member(res.witness.g, res.witness.h, e, e);
                pairs++;
                if (!v.in_phi_prime || !v.t_equivalent) {
                    out.require(false, "generated pair failed certification (P" +
                                           std::to_string(n) + ", witness " +
                                           std::to_string(w.phi_index) + "/" +
                                           std::to_string(w.psi_index) + ")");
                    return;
                }
                if (v.isomorphic.has_value() && !*v.isomorphic) nonisomorphic++;

                // advance the mixed-radix picker
                std::size_t c = 0;
                while (c < pick.size()) {
                    if (++pick[c] < options[c].size()) break;
                    pick[c] = 0;
                    c++;
                }
                if (c == pick.size()) break;
                if (pick.empty()) break;
            }
        }
    }
    out.info("generated pairs: " + std::to_string(pairs) +
             ", non-isomorphic: " + std::to_string(nonisomorphic));
    out.require(pairs > 0, "no pairs generated");
}

// ----- criterion 5: whitney pair -----

void criterion_whitney(Outcome& out) {
    const auto& entry = corpus_entry("whitney-pair");
    const Multigraph& g = entry.graphs[0].graph;
    const Multigraph& gp = entry.graphs[1].graph;
    out.require(tutte(g) == tutte(gp), "transcribed pair not T-equivalent");
    Multigraph twisted = whitney_twist(g, {1, 5}, {6, 7, 8});
    out.require(find_isomorphism(twisted, gp).has_value(),
                "twist at the 2-cut must reproduce the partner");
    out.require(tutte(twisted) == tutte(g), "twist changed the Tutte polynomial");
}

// ----- criterion 6: order <= 5 rotor flips -----

void criterion_small_rotors(Outcome& out) {
    Rng rng(424242);
    for (int k = 1; k <= 5; k++) {
        Multigraph rotor = k >= 3 ? Multigraph::cycle(k) : Multigraph::path(k == 1 ? 2 : 3);
        std::vector<VertexId> orbit;
        if (k == 1)
            orbit = {1};
        else if (k == 2)
            orbit = {1, 3};
        else
            for (int i = 1; i <= k; i++) orbit.push_back(i);
        out.require(check_cyclic_orbit(rotor, orbit).has_value(),
                    "rotor orbit must verify for k=" + std::to_string(k));
        TerminalList rt(rotor, orbit);

        Multigraph w = random_connected_multigraph(rng, k + 2, 4);
        std::vector<VertexId> wts;
        for (int i = 1; i <= k; i++) wts.push_back(i);
        auto [g1, g2] = rotor_flip_pair(rt, TerminalList(w, wts));
        out.require(t_equivalent(g1, g2),
                    "flip pair not T-equivalent at k=" + std::to_string(k));

        EquivalenceReport rep = check_theorem_partitions(rt, rt.reversed());
        out.require(rep.passed(),
                    "partition condition failed for reversed rotor at k=" + std::to_string(k));
    }
    out.info("k = 1..5 flips and partition conditions verified");
}

// ----- criterion 7: order-6 extension -----

Multigraph chiral_rotor() {
    // hexagon with pendant hubs: u_i - p_i single, p_i - u_{i+1} doubled, so
    // the rotation survives but every reflection dies
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    EdgeId next = 1;
    for (int i = 1; i <= 12; i++) vs.push_back(i);
    for (int i = 1; i <= 6; i++) es.push_back({next++, i, i % 6 + 1});
    for (int i = 1; i <= 6; i++) {
        es.push_back({next++, i, 6 + i});
        es.push_back({next++, 6 + i, i % 6 + 1});
        es.push_back({next++, 6 + i, i % 6 + 1});
    }
    return Multigraph(vs, es, "chiral-rotor");
}

void criterion_order6(Outcome& out) {
    const auto& entry = corpus_entry("w0-examples");
    W0Spec spec;
    spec.w0 = entry.graphs[0].graph;
    spec.w_list = entry.graphs[0].terminals.at("w");
    spec.x_list = entry.graphs[0].terminals.at("x");
    spec.r = 3;
    spec.g = 2;

    W0Validation val = validate_w0(spec);
    out.require(val.ok, "gadget validation failed");
    if (!val.ok) return;
    out.info("rotation and reflection found: c=" + std::to_string(val.c) +
             ", c'=" + std::to_string(val.c_prime));

    auto partitions = Partition::all(3);
    out.require(partitions.size() == 5, "Bell(3) must be 5");
    for (const Partition& q : partitions) {
        auto found = s4_checker(spec, val, q);
        out.require(found.has_value(), "no reflecting map for partition " + q.render());
    }

    TerminalList rt(Multigraph::cycle(6), {1, 2, 3, 4, 5, 6});
    TerminalList yt(Multigraph::complete(3), {1, 2, 3});
    auto [a, b] = theorem5_pair(rt, spec, yt);
    out.require(t_equivalent(a, b), "C6 assembly pair not T-equivalent");

    Multigraph chiral = chiral_rotor();
    IsoLimits wide{16};
    std::vector<VertexId> orbit = {1, 2, 3, 4, 5, 6};
    out.require(check_cyclic_orbit(chiral, orbit, wide).has_value(),
                "chiral rotor lost its rotation");
    bool any_reflection = false;
    for (int aa = 1; aa <= 6; aa++)
        if (check_reflection(chiral, orbit, aa, wide)) any_reflection = true;
    out.require(!any_reflection, "chiral rotor unexpectedly admits a reflection");

    TerminalList crt(chiral, orbit);
    auto [cg, ch] = theorem5_pair(crt, spec, yt, false, wide);
    EngineConfig cfg;
    MemoCache cache;
    BiPoly tg = tutte_dc(cg, cfg, cache);
    BiPoly th = tutte_dc(ch, cfg, cache);
    out.require(tg == th, "chiral assembly pair not T-equivalent");
    auto iso_status = find_isomorphism(cg, ch, wide);
    out.info(std::string("chiral pair isomorphism status: ") +
             (iso_status ? "isomorphic" : "not isomorphic"));
}

// ----- criterion 8: identity suite -----

void criterion_identity_suite(Outcome& out) {
    Rng rng(88);
    int identity_checks = 0;
    for (int t = 0; t < 50; t++) {
        Multigraph g = random_connected_multigraph(rng, 4 + rng.below(3), rng.below(4));
        for (int k = 2; k <= 3; k++) {
            std::vector<VertexId> terms;
            for (int i = 1; i <= k; i++) terms.push_back(i);
            TerminalList gt(g, terms);
            for (const PairSet& s : PairSet::all_subsets(k)) {
                if (!check_expansion_identity(gt, s).ok) {
                    out.require(false, "expansion identity failed (trial " + std::to_string(t) +
                                           ", k=" + std::to_string(k) + ", S=" + s.render() + ")");
                    return;
                }
                identity_checks++;
            }
        }
    }
    out.info("expansion identities checked: " + std::to_string(identity_checks));

    // parallel-edge relation
    int par_checked = 0;
    while (par_checked < 100) {
        Multigraph base = random_connected_multigraph(rng, 2 + rng.below(5), rng.below(4));
        VertexId u = base.vertices()[0];
        VertexId v = base.vertices()[rng.below(base.vertex_count())];
        if (u == v) continue;
        EdgeId e1 = base.max_edge_id() + 1, e2 = e1 + 1;
        Multigraph g = base.with_edge(e1, u, v).with_edge(e2, u, v);
        BiPoly lhs = tutte(g);
        BiPoly rhs = (BiPoly::y() + BiPoly::one()) * tutte(g.delete_edges({e1})) -
                     BiPoly::y() * tutte(g.delete_edges({e1, e2}));
        if (lhs != rhs) {
            out.require(false, "parallel-edge relation failed");
            return;
        }
        par_checked++;
    }
    out.info("parallel-edge relations checked: 100");

    // block product and loop/bridge factor laws
    for (int t = 0; t < 100; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 6, 9);
        BiPoly whole = tutte(g);

        BiPoly prod = BiPoly::one();
        for (const auto& blk : g.structure().blocks) prod = prod * tutte(blk);
        if (whole != prod) {
            out.require(false, "block product law failed");
            return;
        }

        VertexId v = g.vertices()[rng.below(g.vertex_count())];
        if (tutte(g.with_edge(g.max_edge_id() + 1, v, v)) != whole.shifted(0, 1)) {
            out.require(false, "loop factor law failed");
            return;
        }
        VertexId fresh = g.max_vertex_id() + 1;
        if (tutte(g.with_vertex(fresh).with_edge(g.max_edge_id() + 1, v, fresh)) !=
            whole.shifted(1, 0)) {
            out.require(false, "bridge factor law failed");
            return;
        }
    }
    out.info("block/loop/bridge laws checked: 100");

    // evaluation facts on the exhaustive catalogue
    EngineConfig cfg;
    MemoCache cache;
    int trees_checked = 0;
    for (const auto& g : small_catalogue()) {
        BiPoly p = tutte_dc(g, cfg, cache);
        if (p.evaluate(2, 2) != Rational(Int(1) << g.edge_count())) {
            out.require(false, "T(2,2) != 2^|E| on a catalogue graph");
            return;
        }
        if (g.is_connected()) {
            if (p.evaluate(1, 1) != Rational(spanning_tree_count(g))) {
                out.require(false, "T(1,1) != spanning tree count on a catalogue graph");
                return;
            }
            trees_checked++;
        }
    }
    out.info("evaluation facts checked on the catalogue (" + std::to_string(trees_checked) +
             " connected)");
}

// ----- criterion 9: condition equivalence probe -----

void criterion_condition_probe(Outcome& out) {
    Rng rng(99);
    int passing = 0;
    for (int t = 0; t < 30; t++) {
        int k = 1 + rng.below(3);
        TerminalList* gt = nullptr;
        TerminalList* ht = nullptr;
        Multigraph g, h;
        std::vector<VertexId> gterms, hterms;

        int kind = rng.below(3);
        if (kind == 0) {
            // relabeled copy: always passing
            g = random_connected_multigraph(rng, k + 1 + rng.below(3), rng.below(4));
            std::vector<VertexId> vs;
            std::vector<Edge> es;
            for (VertexId v : g.vertices()) vs.push_back(v + 100);
            for (const Edge& e : g.edges()) es.push_back({e.id, e.u + 100, e.v + 100});
            h = Multigraph(vs, es);
            for (int i = 1; i <= k; i++) {
                gterms.push_back(g.vertices()[i - 1]);
                hterms.push_back(g.vertices()[i - 1] + 100);
            }
        } else if (kind == 1 && k >= 2) {
            // reversed rotor terminals on a cycle: passing without being equal
            g = Multigraph::cycle(k + 2);
            h = g;
            for (int i = 1; i <= k; i++) gterms.push_back(i);
            hterms = gterms;
            std::reverse(hterms.begin(), hterms.end());
        } else {
            // unrelated random pair: usually failing
            g = random_connected_multigraph(rng, k + 1 + rng.below(3), rng.below(4));
            h = random_connected_multigraph(rng, k + 1 + rng.below(3), rng.below(4));
            for (int i = 1; i <= k; i++) {
                gterms.push_back(i);
                hterms.push_back(i);
            }
        }
        TerminalList gtl(g, gterms), htl(h, hterms);
        gt = &gtl;
        ht = &htl;

        bool sub = check_theorem_subsets(*gt, *ht).passed();
        bool part = check_theorem_partitions(*gt, *ht).passed();
        if (sub != part) {
            out.require(false, "subset and partition conditions disagree on instance " +
                                   std::to_string(t));
            return;
        }
        if (sub) {
            passing++;
            ProbeReport rep = random_glue_probe(*gt, *ht, 25, 1000 + t);
            if (!rep.passed()) {
                out.require(false, "glue probe found a counterexample on a passing instance: " +
                                       rep.counterexamples.front());
                return;
            }
            // a passing subset condition must imply the necessary conditions
            if (!check_necessary(*gt, *ht).ok) {
                out.require(false, "necessary conditions failed on a passing instance");
                return;
            }
        }
    }
    out.info("instances: 30, passing (probed with 25 trials each): " + std::to_string(passing));
    out.require(passing >= 5, "too few passing instances to be meaningful");
}

struct Criterion {
    int id;
    const char* label;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; i++)
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    std::vector<Criterion> criteria = {
        {1, "oracle equivalence (exhaustive catalogue + 500 random)", criterion_oracle_equivalence},
        {2, "gray pair properties", criterion_gray_pair},
        {3, "generation pipeline end to end", criterion_pipeline},
        {4, "path-seed generalization P5..P7", criterion_path_generalization},
        {5, "whitney pair and twist", criterion_whitney},
        {6, "order <= 5 rotor flips", criterion_small_rotors},
        {7, "order-6 extension with gadget assembly", criterion_order6},
        {8, "identity suite", criterion_identity_suite},
        {9, "condition equivalence probe", criterion_condition_probe},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome out;
        auto t0 = Clock::now();
        try {
            c.run(out);
        } catch (const std::exception& ex) {
            out.require(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label << " ("
             << secs << "s)";
        std::cout << line.str() << "\n" << out.log.str();
        all_ok = all_ok && out.ok;
    }
    std::cout << (all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return all_ok ? 0 : 1;
}
