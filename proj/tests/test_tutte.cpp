#include "tutteforge/tutte.hpp"

#include "tutteforge/constructions.hpp"
#include "tutteforge/corpus.hpp"
#include "tutteforge/error.hpp"
#include "tutteforge/rng.hpp"
#include "support/catalogue.hpp"

#include <doctest.h>

using namespace tutteforge;

TEST_CASE("subset expansion on small graphs") {
    Multigraph edgeless(std::vector<VertexId>{1, 2, 3}, {});
    CHECK(tutte_subset_expansion(edgeless).render() == "1");

    Multigraph loop = Multigraph::from_pairs({{1, 1}});
    CHECK(tutte_subset_expansion(loop).render() == "y");

    CHECK(tutte_subset_expansion(Multigraph::complete(2)).render() == "x");
    CHECK(tutte_subset_expansion(Multigraph::complete(3)).render() == "x^2 + x + y");
    CHECK(tutte_subset_expansion(Multigraph::from_pairs({{1, 2}, {1, 2}})).render() == "x + y");
    CHECK(tutte_subset_expansion(Multigraph::complete(4)).render() ==
          "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");

    Multigraph big = Multigraph::complete(7);  // 21 edges
    CHECK_THROWS_AS(tutte_subset_expansion(big), LimitError);
    CHECK_NOTHROW(tutte_subset_expansion(big, 21));
}

TEST_CASE("dc engine on the oracle values") {
    EngineConfig cfg;
    MemoCache cache;
    CHECK(tutte_dc(Multigraph::complete(2), cfg, cache).render() == "x");
    CHECK(tutte_dc(Multigraph::complete(3), cfg, cache).render() == "x^2 + x + y");
    CHECK(tutte_dc(Multigraph::from_pairs({{1, 2}, {1, 2}}), cfg, cache).render() == "x + y");
    CHECK(tutte_dc(Multigraph::complete(4), cfg, cache).render() ==
          "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");
}

TEST_CASE("dc equals oracle on the small catalogue") {
    auto catalogue = testsupport::multigraph_catalogue(4, 6);
    EngineConfig cfg;
    MemoCache cache;
    for (const auto& g : catalogue) {
        BiPoly oracle = tutte_subset_expansion(g);
        BiPoly dc = tutte_dc(g, cfg, cache);
        REQUIRE_MESSAGE(oracle == dc, "graph with " << g.vertex_count() << " vertices, "
                                                    << g.edge_count() << " edges");
    }
    CHECK(catalogue.size() > 500);
}

TEST_CASE("memoization soundness and both edge policies") {
    auto catalogue = testsupport::multigraph_catalogue(4, 5);
    EngineConfig memo_on, memo_off, first_id;
    memo_off.memo_enabled = false;
    first_id.edge_pick_policy = EdgePickPolicy::first_id;
    MemoCache c1, c2, c3;
    for (const auto& g : catalogue) {
        BiPoly a = tutte_dc(g, memo_on, c1);
        BiPoly b = tutte_dc(g, memo_off, c2);
        BiPoly c = tutte_dc(g, first_id, c3);
        CHECK(a == b);
        CHECK(a == c);
    }
    CHECK(c1.hits() > 0);
    CHECK(c2.hits() == 0);
}

TEST_CASE("parallel evaluation matches sequential") {
    Rng rng(101);
    EngineConfig seq, par;
    par.parallel_tasks = 4;
    for (int t = 0; t < 10; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 7, 14);
        MemoCache c1, c2;
        CHECK(tutte_dc(g, seq, c1) == tutte_dc(g, par, c2));
    }
}

TEST_CASE("loop and bridge factor laws") {
    Rng rng(55);
    for (int t = 0; t < 40; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 5, 7);
        BiPoly base = tutte(g);

        VertexId v = g.vertices()[rng.below(g.vertex_count())];
        Multigraph with_loop = g.with_edge(g.max_edge_id() + 1, v, v);
        CHECK(tutte(with_loop) == base.shifted(0, 1));

        VertexId fresh = g.max_vertex_id() + 1;
        Multigraph with_bridge = g.with_vertex(fresh).with_edge(g.max_edge_id() + 1, v, fresh);
        CHECK(tutte(with_bridge) == base.shifted(1, 0));
    }
}

TEST_CASE("block product law") {
    Rng rng(77);
    for (int t = 0; t < 25; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 6, 9);
        StructureReport st = g.structure();
        BiPoly whole = tutte(g);
        BiPoly prod = BiPoly::one();
        for (const auto& b : st.blocks) prod = prod * tutte_subset_expansion(b);
        CHECK(whole == prod);
    }
}

TEST_CASE("parallel edge identity") {
    // T(G) = (y+1) T(G\e1) - y T(G\{e1,e2}) for a non-loop parallel pair with
    // G\{e1,e2} connected
    Rng rng(202);
    int done = 0;
    while (done < 40) {
        Multigraph base = testsupport::random_multigraph_any(rng, 5, 8);
        if (base.vertex_count() < 2 || !base.is_connected()) continue;
        VertexId u = base.vertices()[0];
        VertexId v = base.vertices()[1];
        EdgeId e1 = base.max_edge_id() + 1, e2 = e1 + 1;
        Multigraph g = base.with_edge(e1, u, v).with_edge(e2, u, v);
        BiPoly tg = tutte(g);
        BiPoly t1 = tutte(g.delete_edges({e1}));
        BiPoly t2 = tutte(g.delete_edges({e1, e2}));
        BiPoly rhs = (BiPoly::y() + BiPoly::one()) * t1 - BiPoly::y() * t2;
        CHECK(tg == rhs);
        done++;
    }
}

TEST_CASE("two equalities imply the third") {
    // for parallel pairs e1,e2 in G and f1,f2 in H with both double-deletions
    // connected, the three equalities (full graphs, one edge deleted, both
    // deleted) can never hold in exactly two places
    auto truths = [](const Multigraph& g, EdgeId e1, EdgeId e2, const Multigraph& h, EdgeId f1,
                     EdgeId f2) {
        int t = 0;
        if (tutte(g.delete_edges({e1, e2})) == tutte(h.delete_edges({f1, f2}))) t++;
        if (tutte(g.delete_edges({e1})) == tutte(h.delete_edges({f1}))) t++;
        if (tutte(g) == tutte(h)) t++;
        return t;
    };

    // twisted pair: deletion commutes with the twist, so two equalities hold
    // by construction and the corollary forces the third
    const auto& whitney = corpus_entry("whitney-pair");
    Multigraph g = whitney.graphs[0].graph;
    Multigraph h = whitney_twist(g, {1, 5}, {6, 7, 8});
    CHECK(g.delete_edges({5, 13}).is_connected());
    CHECK(truths(g, 5, 13, h, 5, 13) == 3);

    // identical pair with a fresh parallel pair
    Rng rng(303);
    int done = 0;
    while (done < 10) {
        Multigraph base = testsupport::random_multigraph_any(rng, 5, 7);
        if (!base.is_connected() || base.vertex_count() < 2) continue;
        VertexId u = base.vertices()[0], v = base.vertices()[1];
        EdgeId e1 = base.max_edge_id() + 1, e2 = e1 + 1;
        Multigraph gg = base.with_edge(e1, u, v).with_edge(e2, u, v);
        CHECK(truths(gg, e1, e2, gg, e1, e2) == 3);
        done++;
    }

    // unrelated random pairs: exactly two equalities would falsify the
    // corollary
    done = 0;
    while (done < 25) {
        Multigraph a = testsupport::random_multigraph_any(rng, 5, 6);
        Multigraph b = testsupport::random_multigraph_any(rng, 5, 6);
        if (!a.is_connected() || !b.is_connected()) continue;
        if (a.vertex_count() < 2 || b.vertex_count() < 2) continue;
        VertexId au = a.vertices()[0], av = a.vertices()[1];
        VertexId bu = b.vertices()[0], bv = b.vertices()[1];
        EdgeId ae1 = a.max_edge_id() + 1, ae2 = ae1 + 1;
        EdgeId be1 = b.max_edge_id() + 1, be2 = be1 + 1;
        Multigraph ga = a.with_edge(ae1, au, av).with_edge(ae2, au, av);
        Multigraph gb = b.with_edge(be1, bu, bv).with_edge(be2, bu, bv);
        CHECK(truths(ga, ae1, ae2, gb, be1, be2) != 2);
        done++;
    }
}

TEST_CASE("t_equivalent") {
    Multigraph k3 = Multigraph::complete(3);
    CHECK(t_equivalent(k3, k3));
    CHECK_FALSE(t_equivalent(k3, Multigraph::path(4)));
}

TEST_CASE("spanning tree count") {
    CHECK(spanning_tree_count(Multigraph::path(4)) == 1);
    CHECK(spanning_tree_count(Multigraph::complete(3)) == 3);
    CHECK(spanning_tree_count(Multigraph::from_pairs({{1, 2}, {1, 2}})) == 2);
    CHECK(spanning_tree_count(Multigraph::complete(5)) == 125);  // n^(n-2)
    Multigraph disconnected(std::vector<VertexId>{1, 2}, {});
    CHECK_THROWS_AS(spanning_tree_count(disconnected), PreconditionError);
}

TEST_CASE("evaluation facts") {
    Rng rng(404);
    for (int t = 0; t < 30; t++) {
        Multigraph g = testsupport::random_multigraph_any(rng, 5, 8);
        BiPoly p = tutte(g);
        CHECK(p.evaluate(2, 2) == Rational(Int(1) << g.edge_count()));
        if (g.is_connected()) CHECK(p.evaluate(1, 1) == Rational(spanning_tree_count(g)));
    }
}

TEST_CASE("engine stats report") {
    EngineConfig cfg;
    MemoCache cache;
    EngineStats stats;
    tutte_dc(Multigraph::complete(4), cfg, cache, &stats);
    CHECK(stats.nodes.load() > 0);
    std::string rep = stats.report();
    CHECK(rep.find("nodes=") != std::string::npos);
    CHECK(rep.find("memo_hits=") != std::string::npos);
}
