#include "tutteforge/multigraph.hpp"

#include "tutteforge/error.hpp"
#include "tutteforge/graph_io.hpp"
#include "tutteforge/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace tutteforge;

TEST_CASE("delete edges") {
    Multigraph k3 = Multigraph::complete(3);  // edges 1:(1,2) 2:(1,3) 3:(2,3)
    Multigraph path = k3.delete_edges({2});
    CHECK(path.vertex_count() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.multiplicity(1, 3) == 0);
    CHECK(k3.delete_edges(std::initializer_list<EdgeId>{}) == k3);
    CHECK_THROWS_AS(k3.delete_edges({99}), InvalidReferenceError);
    // surviving ids unchanged
    CHECK(path.edge(3).u == 2);
    CHECK(path.edge(3).v == 3);
}

TEST_CASE("contract edge") {
    Multigraph k3 = Multigraph::complete(3);
    auto [digon, rec] = k3.contract_edge(1);
    CHECK(digon.vertex_count() == 2);
    CHECK(digon.edge_count() == 2);
    CHECK(digon.multiplicity(1, 3) == 2);
    CHECK(rec.merged == 1);

    auto [single, rec2] = digon.contract_edge(2);
    CHECK(single.vertex_count() == 1);
    CHECK(single.loops_at(1) == 1);

    // contracting a loop equals deleting it
    auto [noloop, rec3] = single.contract_edge(3);
    CHECK(noloop.edge_count() == 0);
    CHECK(noloop.vertex_count() == 1);
    CHECK(rec3.merged == rec3.a);

    Multigraph p5 = Multigraph::path(5);
    auto [p4, rec4] = p5.contract_edge(3);  // edge (3,4)
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(rec4.a == 3);
    CHECK(rec4.b == 4);
    CHECK(rec4.merged == 3);
    CHECK_THROWS_AS(p5.contract_edge(77), InvalidReferenceError);
}

TEST_CASE("contract counts") {
    Rng rng(11);
    for (int t = 0; t < 50; t++) {
        int n = 2 + rng.below(5);
        Multigraph g = Multigraph::complete(n);
        EdgeId e = 1 + rng.below(g.edge_count());
        auto [c, rec] = g.contract_edge(e);
        CHECK(c.vertex_count() == g.vertex_count() - 1);
        CHECK(c.edge_count() == g.edge_count() - 1);
    }
}

TEST_CASE("identify vertices") {
    Multigraph k2 = Multigraph::complete(2);
    Multigraph loop = k2.identify_vertices({1, 2});
    CHECK(loop.vertex_count() == 1);
    CHECK(loop.loops_at(1) == 1);

    Multigraph k3 = Multigraph::complete(3);
    CHECK(k3.identify_vertices({2}) == k3);

    Multigraph merged = k3.identify_vertices({1, 2});
    CHECK(merged.vertex_count() == 2);
    CHECK(merged.loops_at(1) == 1);
    CHECK(merged.multiplicity(1, 3) == 2);

    CHECK_THROWS_AS(k3.identify_vertices({1, 9}), InvalidReferenceError);
}

TEST_CASE("identify equals contract with a fresh edge") {
    Rng rng(23);
    for (int t = 0; t < 40; t++) {
        int n = 3 + rng.below(4);
        Multigraph g = Multigraph::complete(n).delete_edges({1});
        VertexId u = 1, v = 2;  // edge 1 was (1,2)
        Multigraph a = g.identify_vertices({u, v});
        EdgeId fresh = g.max_edge_id() + 1;
        Multigraph b = g.with_edge(fresh, u, v).contract_edge(fresh).first;
        CHECK(a == b);
    }
}

TEST_CASE("rank and components") {
    Multigraph k3 = Multigraph::complete(3);
    auto [r0, c0] = k3.rank_and_components(std::initializer_list<EdgeId>{});
    CHECK(r0 == 0);
    CHECK(c0 == 3);
    auto [r1, c1] = k3.rank_and_components();
    CHECK(r1 == 2);
    CHECK(c1 == 1);

    Multigraph p5 = Multigraph::path(5);
    auto [r2, c2] = p5.rank_and_components({1, 4});  // edges u1u2, u4u5
    CHECK(c2 == 3);
    CHECK(r2 == 2);
}

TEST_CASE("rank monotone under subset inclusion") {
    Rng rng(37);
    Multigraph g = Multigraph::complete(5);
    int full = g.rank_and_components().first;
    for (int t = 0; t < 60; t++) {
        std::vector<EdgeId> a, b;
        for (const Edge& e : g.edges()) {
            bool in_b = rng.chance(0.5);
            bool in_a = in_b && rng.chance(0.6);  // a subset of b
            if (in_a) a.push_back(e.id);
            if (in_b) b.push_back(e.id);
        }
        int ra = g.rank_and_components(a).first;
        int rb = g.rank_and_components(b).first;
        CHECK(ra <= rb);
        CHECK(rb <= full);
    }
}

TEST_CASE("structure queries") {
    Multigraph p3 = Multigraph::path(3);
    StructureReport st = p3.structure();
    CHECK(st.bridges.size() == 2);
    CHECK(st.loops.empty());
    CHECK(st.blocks.size() == 2);
    CHECK(st.is_connected);

    Multigraph digon = Multigraph::from_pairs({{1, 2}, {1, 2}});
    StructureReport st2 = digon.structure();
    CHECK(st2.bridges.empty());
    CHECK(st2.blocks.size() == 1);
    CHECK(st2.blocks[0].edge_count() == 2);

    // two triangles sharing a vertex: 2 blocks, no bridges
    Multigraph bowtie = Multigraph::from_pairs({{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}});
    StructureReport st3 = bowtie.structure();
    CHECK(st3.blocks.size() == 2);
    CHECK(st3.bridges.empty());

    // loop forms its own block
    Multigraph withloop = Multigraph::from_pairs({{1, 2}, {2, 2}});
    StructureReport st4 = withloop.structure();
    CHECK(st4.loops.size() == 1);
    CHECK(st4.blocks.size() == 2);
    CHECK(st4.bridges.size() == 1);

    // disconnected graph
    Multigraph two = Multigraph(std::vector<VertexId>{1, 2, 3}, {Edge{1, 1, 2}});
    StructureReport st5 = two.structure();
    CHECK_FALSE(st5.is_connected);
    CHECK(st5.components.size() == 2);

    // parallel classes
    CHECK(st2.parallel_classes.at({1, 2}).size() == 2);
}

TEST_CASE("delete and contract commute on disjoint edges") {
    Rng rng(91);
    for (int t = 0; t < 40; t++) {
        Multigraph g = Multigraph::complete(4);
        EdgeId del = 1 + rng.below(6);
        EdgeId con = 1 + rng.below(6);
        if (del == con) continue;
        Multigraph a = g.delete_edges({del}).contract_edge(con).first;
        Multigraph b = g.contract_edge(con).first.delete_edges({del});
        CHECK(a == b);
    }
}

TEST_CASE("graph file round trip") {
    std::string text =
        "# sample\n"
        "v 1\nv 2\nv 3\n"
        "e 1 1 2\n"
        "e 2 2 3\n"
        "e 3 3 3\n"
        "t main 1 3\n";
    std::istringstream in(text);
    GraphFile gf = read_graph(in, "sample");
    CHECK(gf.graph.vertex_count() == 3);
    CHECK(gf.graph.edge_count() == 3);
    CHECK(gf.graph.loops_at(3) == 1);
    CHECK(gf.terminals.at("main") == std::vector<VertexId>{1, 3});

    std::ostringstream out;
    write_graph(out, gf);
    std::istringstream in2(out.str());
    GraphFile gf2 = read_graph(in2, "sample");
    CHECK(gf2.graph == gf.graph);
    CHECK(gf2.terminals == gf.terminals);
}

TEST_CASE("graph file errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_graph(in);
    };
    CHECK_THROWS_AS(parse("v 1\nv 1\n"), ParseError);                 // duplicate vertex
    CHECK_THROWS_AS(parse("v 1\ne 1 1 2\n"), ParseError);             // undeclared endpoint
    CHECK_THROWS_AS(parse("v 1\nv 2\ne 1 1 2\ne 1 1 2\n"), ParseError);  // duplicate edge
    CHECK_THROWS_AS(parse("v 1\nt a 1\nt a 1\n"), ParseError);        // duplicate terminal list
    CHECK_THROWS_AS(parse("q 1\n"), ParseError);                      // unknown record
    CHECK_THROWS_AS(parse("v -3\n"), ParseError);                     // negative id
    CHECK_THROWS_AS(parse("v 1\nt a 1 1\n"), ParseError);             // repeated terminal
}
