#include "tutteforge/corpus.hpp"

#include "tutteforge/constructions.hpp"
#include "tutteforge/error.hpp"
#include "tutteforge/iso.hpp"
#include "tutteforge/phigen.hpp"
#include "tutteforge/tutte.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tutteforge {

bool triangle_edge_distinguisher(const Multigraph& g) {
    // collect all triangles as edge-id triples
    std::vector<std::set<EdgeId>> triangles;
    const auto& vs = g.vertices();
    int n = static_cast<int>(vs.size());
    auto edges_between = [&](VertexId a, VertexId b) {
        std::vector<EdgeId> out;
        for (const Edge& e : g.edges())
            if (!e.is_loop() && ((e.u == a && e.v == b) || (e.u == b && e.v == a)))
                out.push_back(e.id);
        return out;
    };
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            for (int k = j + 1; k < n; k++) {
                auto ab = edges_between(vs[i], vs[j]);
                auto bc = edges_between(vs[j], vs[k]);
                auto ca = edges_between(vs[k], vs[i]);
                for (EdgeId e1 : ab)
                    for (EdgeId e2 : bc)
                        for (EdgeId e3 : ca) triangles.push_back({e1, e2, e3});
            }
    for (std::size_t i = 0; i < triangles.size(); i++) {
        bool isolated = true;
        for (std::size_t j = 0; j < triangles.size() && isolated; j++) {
            if (i == j) continue;
            for (EdgeId e : triangles[i])
                if (triangles[j].count(e)) {
                    isolated = false;
                    break;
                }
        }
        if (isolated) return true;
    }
    return false;
}

namespace {

using P = std::pair<VertexId, VertexId>;

Multigraph build(std::initializer_list<P> pairs, std::string name) {
    return Multigraph::from_pairs(pairs, std::move(name));
}

// -- transcriptions --

// Whitney pair: 8 vertices, 13 edges, 2-cut {1,5}, flipped side {6,7,8};
// the 5-7 pair (resp. 1-7) is parallel.
Multigraph whitney_g() {
    return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}, {7, 8}, {8, 6}, {6, 1}, {1, 8},
                  {6, 5}, {5, 2}, {1, 3}, {5, 7}},
                 "whitney-G");
}
Multigraph whitney_gp() {
    return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 8}, {8, 7}, {7, 1}, {1, 6},
                  {8, 5}, {5, 2}, {1, 3}, {1, 7}},
                 "whitney-Gp");
}

// Gray pair: 6 vertices, 10 edges, one parallel pair each; e = f = edge 9.
Multigraph gray_g() {
    return build({{2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}, {2, 6}, {2, 5}, {4, 5}, {1, 2},
                  {5, 6}},
                 "gray-G");
}
Multigraph gray_h() {
    return build({{3, 4}, {2, 3}, {2, 6}, {5, 6}, {4, 5}, {1, 4}, {1, 5}, {2, 5}, {1, 3},
                  {1, 5}},
                 "gray-H");
}

// Path seeds: both are 5-vertex paths; e = f = edge 3. The H-side ids encode
// the labeling that makes the rank-identity deletion isomorphism work.
Multigraph seed_g() { return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}}, "seed-G"); }
Multigraph seed_h() { return build({{2, 3}, {1, 2}, {1, 5}, {4, 5}}, "seed-H"); }

Multigraph rotor_k3() { return Multigraph::complete(3).renamed("rotor-K3"); }
Multigraph rotor_k13() { return Multigraph::star(3).renamed("rotor-K13"); }

// Rotor-assembly gadgets with rotation of order 6 acting as squares of a
// 3-step rotation: hexagon 1..6, hubs 7,8,9, and (first variant) a center 10.
Multigraph w0_a() {
    return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},   // hexagon
                  {10, 1}, {10, 3}, {10, 5},                        // center
                  {7, 2}, {7, 3}, {7, 4},                           // hub x1
                  {8, 4}, {8, 5}, {8, 6},                           // hub x2
                  {9, 6}, {9, 1}, {9, 2}},                          // hub x3
                 "w0-a");
}
Multigraph w0_b() {
    return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1},
                  {7, 2}, {7, 3}, {7, 3}, {7, 4},
                  {8, 4}, {8, 5}, {8, 5}, {8, 6},
                  {9, 6}, {9, 1}, {9, 1}, {9, 2}},
                 "w0-b");
}

// Generated pair: path seed plus K3 on indices (1,4,2) and K1,3 on (2,5,3);
// vertex 6 is the star center. Isomorphic to the Gray pair.
Multigraph gen_g2() {
    return build({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {4, 2}, {2, 1}, {6, 2}, {6, 5},
                  {6, 3}},
                 "generated-G2");
}
Multigraph gen_h2() {
    return build({{2, 3}, {1, 2}, {1, 5}, {4, 5}, {1, 4}, {4, 2}, {2, 1}, {6, 2}, {6, 5},
                  {6, 3}},
                 "generated-H2");
}

VertexMapping psi_display_1() {
    return VertexMapping::from_pairs({{1, 4}, {2, 1}, {3, 2}, {5, 3}});
}
VertexMapping psi_display_2() {
    return VertexMapping::from_pairs({{1, 3}, {2, 2}, {3, 1}, {5, 4}});
}

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond) detail = msg;
    return cond;
}

std::vector<CorpusEntry> make_corpus() {
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e;
        e.name = "whitney-pair";
        e.description = "two 8-vertex multigraphs related by a twist at the 2-cut {1,5}";
        e.graphs.push_back({whitney_g(), {{"cut", {1, 5}}, {"side", {6, 7, 8}}}});
        e.graphs.push_back({whitney_gp(), {}});
        e.checks.push_back({"t-equal", [](std::string& d) {
                                return expect(t_equivalent(whitney_g(), whitney_gp()),
                                              "Tutte polynomials differ", d);
                            }});
        e.checks.push_back({"twist-reproduces-partner", [](std::string& d) {
                                Multigraph twisted = whitney_twist(whitney_g(), {1, 5}, {6, 7, 8});
                                return expect(find_isomorphism(twisted, whitney_gp()).has_value(),
                                              "twisted graph not isomorphic to partner", d);
                            }});
        e.checks.push_back({"twist-is-involution", [](std::string& d) {
                                Multigraph once = whitney_twist(whitney_g(), {1, 5}, {6, 7, 8});
                                Multigraph twice = whitney_twist(once, {1, 5}, {6, 7, 8});
                                return expect(twice == whitney_g(), "double twist changed the graph",
                                              d);
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "gray-pair";
        e.description = "non-isomorphic T-equivalent pair with matched deletion/contraction";
        e.graphs.push_back({gray_g(), {}});
        e.graphs.push_back({gray_h(), {}});
        e.params["e"] = "9";
        e.params["f"] = "9";
        e.checks.push_back({"t-equal", [](std::string& d) {
                                return expect(t_equivalent(gray_g(), gray_h()),
                                              "Tutte polynomials differ", d);
                            }});
        e.checks.push_back({"non-isomorphic", [](std::string& d) {
                                return expect(!find_isomorphism(gray_g(), gray_h()),
                                              "graphs are isomorphic", d);
                            }});
        e.checks.push_back({"deletion-isomorphic", [](std::string& d) {
                                return expect(find_isomorphism(gray_g().delete_edges({9}),
                                                               gray_h().delete_edges({9}))
                                                  .has_value(),
                                              "deletions not isomorphic", d);
                            }});
        e.checks.push_back({"contraction-isomorphic", [](std::string& d) {
                                return expect(find_isomorphism(gray_g().contract_edge(9).first,
                                                               gray_h().contract_edge(9).first)
                                                  .has_value(),
                                              "contractions not isomorphic", d);
                            }});
        e.checks.push_back({"triangle-distinguisher", [](std::string& d) {
                                return expect(triangle_edge_distinguisher(gray_h()) &&
                                                  !triangle_edge_distinguisher(gray_g()),
                                              "isolated-triangle predicate mismatch", d);
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "path-seed";
        e.description = "5-vertex path pair seeding the generator; e = f = edge 3";
        e.graphs.push_back({seed_g(), {}});
        e.graphs.push_back({seed_h(), {}});
        e.params["e"] = "3";
        e.params["f"] = "3";
        e.checks.push_back({"certified", [](std::string& d) {
                                auto w = certify_phi_prime(seed_g(), seed_h(), 3, 3);
                                if (!expect(w.has_value(), "no witness found", d)) return false;
                                return expect(w->s1 == 3 && w->s2 == 4 && w->t1 == 1 && w->t2 == 5,
                                              "unexpected end indices", d);
                            }});
        e.checks.push_back({"first-phi-is-identity", [](std::string& d) {
                                auto w = certify_phi_prime(seed_g(), seed_h(), 3, 3);
                                if (!expect(w.has_value(), "no witness found", d)) return false;
                                Multigraph g = seed_g();
                                for (VertexId v : g.vertices())
                                    if (w->phi.image(v) != v)
                                        return expect(false, "phi is not the identity labeling", d);
                                return true;
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "psi-choices";
        e.description = "the two contraction isomorphisms of the path seed";
        e.graphs.push_back({seed_g(), {}});
        e.graphs.push_back({seed_h(), {}});
        e.params["display-1"] = psi_display_1().render();
        e.params["display-2"] = psi_display_2().render();
        e.checks.push_back({"exactly-two", [](std::string& d) {
                                auto list = enumerate_isomorphisms(seed_g().contract_edge(3).first,
                                                                   seed_h().contract_edge(3).first);
                                return expect(list.size() == 2,
                                              "expected 2 contraction isomorphisms, got " +
                                                  std::to_string(list.size()),
                                              d);
                            }});
        e.checks.push_back({"both-displays-present", [](std::string& d) {
                                auto list = enumerate_isomorphisms(seed_g().contract_edge(3).first,
                                                                   seed_h().contract_edge(3).first);
                                bool has1 = std::find(list.begin(), list.end(), psi_display_1()) !=
                                            list.end();
                                bool has2 = std::find(list.begin(), list.end(), psi_display_2()) !=
                                            list.end();
                                return expect(has1 && has2, "a displayed mapping is missing", d);
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "dpsi-example";
        e.description = "index digraph of the path seed under the first displayed psi";
        e.graphs.push_back({seed_g(), {}});
        e.graphs.push_back({seed_h(), {}});
        e.params["arcs"] = "1->4 2->1 2->5 3->2 4->2 5->3";
        e.params["cycles"] = "(1,4,2) (2,5,3)";
        e.checks.push_back({"arcs-match", [](std::string& d) {
                                auto ws = enumerate_phi_witnesses(seed_g(), seed_h(), 3, 3);
                                for (const auto& w : ws) {
                                    if (w.phi_index != 0 || w.psi != psi_display_1()) continue;
                                    PsiDigraph dg = build_psi_digraph(w);
                                    std::vector<std::pair<int, int>> want = {
                                        {1, 4}, {2, 1}, {2, 5}, {3, 2}, {4, 2}, {5, 3}};
                                    return expect(dg.arcs == want, "arc set differs", d);
                                }
                                return expect(false, "witness with displayed psi not found", d);
                            }});
        e.checks.push_back({"cycles-match", [](std::string& d) {
                                auto ws = enumerate_phi_witnesses(seed_g(), seed_h(), 3, 3);
                                for (const auto& w : ws) {
                                    if (w.phi_index != 0 || w.psi != psi_display_1()) continue;
                                    auto cyc = directed_cycles(build_psi_digraph(w));
                                    std::vector<std::vector<int>> want = {{1, 4, 2}, {2, 5, 3}};
                                    return expect(cyc == want, "cycle list differs", d);
                                }
                                return expect(false, "witness with displayed psi not found", d);
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "rotor-w1-w2";
        e.description = "triangle and 3-leaf star rotors with their cyclic orbits";
        e.graphs.push_back({rotor_k3(), {{"orbit", {1, 2, 3}}}});
        e.graphs.push_back({rotor_k13(), {{"orbit", {2, 3, 4}}}});
        e.checks.push_back({"k3-orbit", [](std::string& d) {
                                return expect(
                                    check_cyclic_orbit(rotor_k3(), std::vector<VertexId>{1, 2, 3})
                                        .has_value(),
                                    "triangle orbit rejected", d);
                            }});
        e.checks.push_back({"star-orbit", [](std::string& d) {
                                return expect(
                                    check_cyclic_orbit(rotor_k13(), std::vector<VertexId>{2, 3, 4})
                                        .has_value(),
                                    "star leaf orbit rejected", d);
                            }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "w0-examples";
        e.description = "two order-6 rotor-assembly gadgets with r=3, g=2";
        e.graphs.push_back({w0_a(), {{"w", {1, 2, 3, 4, 5, 6}}, {"x", {7, 8, 9}}}});
        e.graphs.push_back({w0_b(), {{"w", {1, 2, 3, 4, 5, 6}}, {"x", {7, 8, 9}}}});
        e.params["r"] = "3";
        e.params["g"] = "2";
        auto check_w0 = [](Multigraph w0, std::string& d) {
            W0Spec spec;
            spec.w0 = std::move(w0);
            spec.w_list = {1, 2, 3, 4, 5, 6};
            spec.x_list = {7, 8, 9};
            spec.r = 3;
            spec.g = 2;
            W0Validation val = validate_w0(spec);
            if (val.ok) return true;
            d = "validation failed:";
            for (const auto& v : val.violations) d += " " + v;
            return false;
        };
        e.checks.push_back(
            {"variant-a-valid", [check_w0](std::string& d) { return check_w0(w0_a(), d); }});
        e.checks.push_back(
            {"variant-b-valid", [check_w0](std::string& d) { return check_w0(w0_b(), d); }});
        entries.push_back(std::move(e));
    }

    {
        CorpusEntry e;
        e.name = "generated-pair";
        e.description = "path seed with both rotors attached; matches the gray pair";
        e.graphs.push_back({gen_g2(), {}});
        e.graphs.push_back({gen_h2(), {}});
        e.params["e"] = "3";
        e.params["f"] = "3";
        e.checks.push_back({"matches-gray-pair", [](std::string& d) {
                                bool g_ok = find_isomorphism(gen_g2(), gray_g()).has_value();
                                bool h_ok = find_isomorphism(gen_h2(), gray_h()).has_value();
                                return expect(g_ok && h_ok, "transcribed pair differs from gray pair",
                                              d);
                            }});
        e.checks.push_back({"pipeline-reproduces", [](std::string& d) {
                                auto ws = enumerate_phi_witnesses(seed_g(), seed_h(), 3, 3);
                                for (const auto& w : ws) {
                                    if (w.phi_index != 0 || w.psi != psi_display_1()) continue;
                                    std::vector<CycleRotorAssignment> asgs;
                                    asgs.push_back({{1, 4, 2}, rotor_k3(), {1, 2, 3}});
                                    asgs.push_back({{2, 5, 3}, rotor_k13(), {2, 3, 4}});
                                    AttachResult res = attach_rotors(w, asgs);
                                    bool g_ok =
                                        find_isomorphism(res.witness.g, gen_g2()).has_value();
                                    bool h_ok =
                                        find_isomorphism(res.witness.h, gen_h2()).has_value();
                                    return expect(g_ok && h_ok,
                                                  "generated graphs differ from transcription", d);
                                }
                                return expect(false, "witness with displayed psi not found", d);
                            }});
        e.checks.push_back({"t-equal-and-nonisomorphic", [](std::string& d) {
                                return expect(t_equivalent(gen_g2(), gen_h2()) &&
                                                  !find_isomorphism(gen_g2(), gen_h2()),
                                              "generated pair fails the headline properties", d);
                            }});
        entries.push_back(std::move(e));
    }

    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = make_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e;
    throw InvalidReferenceError("no corpus entry named '" + name + "'");
}

}  // namespace tutteforge
