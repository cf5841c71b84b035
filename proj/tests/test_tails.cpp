#include "helpers.hpp"
#include "oracles.hpp"

#include <ckspectra/generators.hpp>
#include <ckspectra/tails.hpp>

#include <doctest.h>

#include <algorithm>

using namespace ckspectra;
using test::set_of;

TEST_CASE("MT reports on hand-picked sets") {
    const Graph g = running_example().graph;
    const MtReport empty = mt_report(g, VertexSet{});
    CHECK(empty.maximal_tail());

    CHECK(mt_report(g, set_of(g, {"u", "v", "w", "x"})).maximal_tail());

    const MtReport wx = mt_report(g, set_of(g, {"w", "x"}));
    CHECK_FALSE(wx.mt1);
    REQUIRE(wx.mt1_witness);
    CHECK_FALSE(set_of(g, {"w", "x"}).contains(wx.mt1_witness->first));

    const MtReport yz = mt_report(g, set_of(g, {"y", "z"}));
    CHECK_FALSE(yz.mt1);
    CHECK_FALSE(is_union_of_maximal_tails(g, set_of(g, {"y", "z"})));
}

TEST_CASE("MT2 fails on a regular vertex with no edge back into W") {
    GraphBuilder b;
    b.add_vertex("a");
    b.add_vertex("b");
    b.add_bundle("a", "b");
    const Graph g = std::move(b).build();
    const MtReport r = mt_report(g, set_of(g, {"a"}));
    CHECK(r.mt1);
    CHECK_FALSE(r.mt2);
    REQUIRE(r.mt2_witness);
    CHECK(g.name(*r.mt2_witness) == "a");
}

TEST_CASE("tails of boundary paths in the running example") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const auto& t = fx.expected.maximal_tails.value;

    CHECK(tail_of_boundary(g, BoundaryPath::finite(g, g.vertex("w"), {})) == t[2]);
    CHECK(tail_of_boundary(g, BoundaryPath::finite(g, g.vertex("x"), {})) == t[1]);
    CHECK(tail_of_boundary(g, BoundaryPath::finite(g, g.vertex("t"), {})) == t[0]);

    const std::size_t e = 12; // z -> z labeled e
    REQUIRE(g.bundle(e).label == "e");
    CHECK(tail_of_boundary(g, BoundaryPath::eventually_periodic(g, g.vertex("z"), {}, {e})) == t[3]);

    const std::size_t f = 9;
    REQUIRE(g.bundle(f).label == "f");
    CHECK(tail_of_boundary(g, BoundaryPath::eventually_periodic(g, g.vertex("x"), {}, {f})) == t[1]);
}

TEST_CASE("malformed boundary paths are rejected") {
    const Graph g = running_example().graph;
    CHECK_THROWS_AS(BoundaryPath::finite(g, g.vertex("v"), {}), InvalidPath);     // v is regular
    CHECK_THROWS_AS(BoundaryPath::finite(g, g.vertex("u"), {2}), InvalidPath);    // bundle 2 leaves v
    CHECK_THROWS_AS(BoundaryPath::finite(g, g.vertex("y"), {10}), InvalidPath);   // ends at regular z
    CHECK_THROWS_AS(BoundaryPath::eventually_periodic(g, g.vertex("y"), {10}, {}), InvalidPath);
    CHECK_THROWS_AS(BoundaryPath::eventually_periodic(g, g.vertex("x"), {}, {6}), InvalidPath); // x->z not closed
}

TEST_CASE("maximal tails of the running example") {
    const GraphFixture fx = running_example();
    auto expected = fx.expected.maximal_tails.value;
    std::sort(expected.begin(), expected.end());
    CHECK(maximal_tails(fx.graph) == expected);
    CHECK(clusters(fx.graph) == expected);
}

TEST_CASE("maximal tails of small graphs") {
    GraphBuilder b;
    b.add_vertex("v");
    CHECK(maximal_tails(std::move(b).build()) == std::vector<VertexSet>{VertexSet::first_n(1)});

    const Graph ea = ea_graph({"a", "b"}, Multiplicity::omega());
    PXModel m({"a", "b"});
    std::vector<VertexSet> gammas;
    for (std::size_t p = 0; p < m.point_count(); ++p)
        gammas.push_back(phi(m, p));
    std::sort(gammas.begin(), gammas.end());
    CHECK(maximal_tails(ea) == gammas);

    const Graph three = three_vertex_graph();
    CHECK(is_union_of_maximal_tails(three, three.all_vertices()));
    const auto tails = clusters(three);
    CHECK(tails.size() == 2);
    CHECK(std::find(tails.begin(), tails.end(), three.all_vertices()) == tails.end());
    CHECK(is_union_of_maximal_tails(three, VertexSet{}));
}

TEST_CASE("realized tails round-trip") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const BoundaryPath w = realize_as_tail(g, set_of(g, {"w"}));
    CHECK(w.kind() == BoundaryPath::Kind::FinitePath);
    CHECK(w.start() == g.vertex("w"));
    CHECK(w.prefix().empty());
    for (VertexSet t : fx.expected.maximal_tails.value)
        CHECK(tail_of_boundary(g, realize_as_tail(g, t)) == t);
    CHECK_THROWS_AS(realize_as_tail(g, VertexSet{}), NotAMaximalTail);
    CHECK_THROWS_AS(realize_as_tail(g, set_of(g, {"w", "x"})), NotAMaximalTail);

    const Graph ea = ea_graph({"a"}, Multiplicity::omega());
    const BoundaryPath a = realize_as_tail(ea, VertexSet::first_n(1));
    CHECK(a.prefix().empty());
    CHECK(a.kind() == BoundaryPath::Kind::FinitePath);
}

TEST_CASE("finite-return vertices") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    CHECK(finite_return_vertices(g) == fx.expected.finite_return.value);
    CHECK(return_edge_count(g, g.vertex("x")) == Multiplicity{2});
    std::vector<std::size_t> returning;
    for (std::size_t i : g.out_bundles(g.vertex("x")))
        if (reaches(g, g.bundle(i).dst, g.vertex("x")))
            returning.push_back(i);
    CHECK(returning == fx.expected.return_bundles.value);

    CHECK(finite_return_vertices(ea_graph({"a", "b", "c"}, Multiplicity::omega())).empty());

    // v =>inf w, one loop at each: v is finite-return and {v} is a cluster.
    GraphBuilder b;
    b.add_vertex("v");
    b.add_vertex("w");
    b.add_bundle("v", "w", Multiplicity::omega());
    b.add_bundle("v", "v");
    b.add_bundle("w", "w");
    const Graph two = std::move(b).build();
    CHECK(finite_return_vertices(two) == set_of(two, {"v"}));
    const auto cl = clusters(two);
    CHECK(std::find(cl.begin(), cl.end(), set_of(two, {"v"})) != cl.end());
}

TEST_CASE("maximal tails agree with boundary-path tails and brute-force axioms") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        RandomGraphOptions o;
        o.vertices = 1 + seed % 8;
        o.repair = seed % 3 != 0;
        const Graph g = random_condition_k_graph(seed, o);
        const auto tails = maximal_tails(g);
        REQUIRE(tails == oracle::tails_from_paths(g));
        for (std::uint64_t bits = 1; bits <= g.all_vertices().bits(); ++bits) {
            const VertexSet w = VertexSet::from_bits(bits);
            const MtReport r = mt_report(g, w);
            REQUIRE(r.mt1 == oracle::mt1(g, w));
            REQUIRE(r.mt2 == oracle::mt2(g, w));
            REQUIRE(r.mt3 == oracle::mt3(g, w));
        }
    }
}

TEST_CASE("enumeration refuses graphs over the limit") {
    const Graph g = random_condition_k_graph(9, RandomGraphOptions{.vertices = 8});
    CHECK_THROWS_AS(maximal_tails(g, 7), SizeLimitExceeded);
}
