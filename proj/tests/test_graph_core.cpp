#include "helpers.hpp"
#include "oracles.hpp"

#include <ckspectra/generators.hpp>
#include <ckspectra/graph.hpp>

#include <doctest.h>

using namespace ckspectra;
using test::set_of;

TEST_CASE("multiplicity arithmetic saturates at omega") {
    const Multiplicity w = Multiplicity::omega();
    CHECK(Multiplicity{2} + Multiplicity{3} == Multiplicity{5});
    CHECK((Multiplicity{2} + w).is_omega());
    CHECK(Multiplicity{0} * w == Multiplicity{0});
    CHECK((Multiplicity{3} * w).is_omega());
    CHECK(Multiplicity{7} < w);
    CHECK(Multiplicity{0}.is_zero());
    CHECK(w.to_string() == "inf");
    CHECK_THROWS_AS(Multiplicity{~std::uint64_t{0}} + Multiplicity{1}, std::overflow_error);
}

TEST_CASE("vertex sets iterate in declaration order") {
    const VertexSet s{Vertex{5}, Vertex{1}, Vertex{3}};
    std::vector<std::uint32_t> seen;
    for (Vertex v : s)
        seen.push_back(v.index);
    CHECK(seen == std::vector<std::uint32_t>{1, 3, 5});
    CHECK(s.size() == 3);
    CHECK(VertexSet::first_n(64).size() == 64);
    CHECK((s - VertexSet{Vertex{3}}).size() == 2);
}

TEST_CASE("builder merges unlabeled bundles and rejects bad input") {
    GraphBuilder b;
    b.add_vertex("a");
    b.add_vertex("b");
    b.add_bundle("a", "b", Multiplicity{2});
    b.add_bundle("a", "b", Multiplicity{3});
    b.add_bundle("a", "b", Multiplicity{1}, "f");
    CHECK_THROWS_AS(b.add_vertex("a"), Error);
    CHECK_THROWS_AS(b.add_bundle("a", "b", Multiplicity{0}), Error);
    CHECK_THROWS_AS(b.add_bundle("a", "q"), UnknownVertex);
    CHECK_THROWS_AS(b.add_bundle("b", "a", Multiplicity{1}, "f"), Error);
    const Graph g = std::move(b).build();
    REQUIRE(g.bundles().size() == 2);
    CHECK(g.bundle(0).mult == Multiplicity{5});
    CHECK(g.out_multiplicity(g.vertex("a")) == Multiplicity{6});
    CHECK_THROWS_AS(g.vertex("nope"), UnknownVertex);
}

TEST_CASE("vertex classes of the running example") {
    const Graph g = running_example().graph;
    const VertexClasses c = classify_vertices(g);
    CHECK(c.sinks == set_of(g, {"t"}));
    CHECK(c.infinite_emitters == set_of(g, {"u", "w", "x"}));
    CHECK(c.regular == set_of(g, {"v", "y", "z"}));

    GraphBuilder b;
    b.add_vertex("solo");
    CHECK(classify_vertices(std::move(b).build()).sinks.size() == 1);
}

TEST_CASE("every non-terminal vertex of the omega subset graph is an infinite emitter") {
    const Graph g = ea_graph({"a", "b", "c"}, Multiplicity::omega());
    const VertexClasses c = classify_vertices(g);
    CHECK(c.sinks == set_of(g, {"v_a_b_c"}));
    CHECK(c.infinite_emitters == g.all_vertices() - c.sinks);
}

TEST_CASE("reachability agrees with boolean matrix squaring") {
    const Graph fx = running_example().graph;
    CHECK_FALSE(reaches(fx, fx.vertex("y"), fx.vertex("w")));
    CHECK(reaches(fx, fx.vertex("w"), fx.vertex("t")));
    CHECK(upward_set(fx, set_of(fx, {"t"})) == set_of(fx, {"t", "u", "v", "w", "x"}));
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = random_condition_k_graph(seed, RandomGraphOptions{.vertices = 1 + seed % 9});
        const auto r = oracle::reach_matrix(g);
        for (Vertex u : g.all_vertices())
            for (Vertex v : g.all_vertices())
                REQUIRE(reaches(g, u, v) == r[u.index][v.index]);
    }
}

TEST_CASE("downward directedness") {
    const Graph fx = running_example().graph;
    const DirectednessResult d = is_downward_directed(fx, fx.all_vertices());
    CHECK_FALSE(d.directed);
    REQUIRE(d.witness);
    CHECK(is_downward_directed(ea_graph({"a", "b"}, Multiplicity{1}), VertexSet::first_n(3)).directed);
    CHECK(is_downward_directed(ea_graph({"a", "b"}, Multiplicity::omega()), VertexSet::first_n(3)).directed);
    CHECK_FALSE(is_downward_directed(three_vertex_graph(), VertexSet::first_n(3)).directed);
    CHECK(is_downward_directed(fx, set_of(fx, {"y"})).directed);
    CHECK(is_downward_directed(fx, VertexSet{}).directed);
}

TEST_CASE("the two directedness readings differ when the lower bound lies outside W") {
    // a -> c <- b: {a, b} has a common lower bound only outside itself.
    GraphBuilder bld;
    for (const char* n : {"a", "b", "c"})
        bld.add_vertex(n);
    bld.add_bundle("a", "c");
    bld.add_bundle("b", "c");
    const Graph g = std::move(bld).build();
    const VertexSet ab = set_of(g, {"a", "b"});
    CHECK_FALSE(is_downward_directed(g, ab, DirectedReading::Within).directed);
    CHECK(is_downward_directed(g, ab, DirectedReading::Ambient).directed);
}

TEST_CASE("countable separation is trivial and the greedy witness is minimal") {
    const Graph g = running_example().graph;
    const CspResult r = has_csp(g, g.all_vertices());
    CHECK(r.holds);
    CHECK(r.witness.is_subset_of(set_of(g, {"t", "w", "z"})));
    CHECK(g.all_vertices().is_subset_of(upward_set(g, r.witness)));
    for (Vertex v : r.witness)
        CHECK_FALSE(g.all_vertices().is_subset_of(upward_set(g, r.witness - VertexSet{v})));
    CHECK(has_csp(g, VertexSet{}).witness.empty());
}

TEST_CASE("simple cycle classes") {
    const Graph fx = running_example().graph;
    CHECK(simple_cycle_class(fx, fx.vertex("z")) == CycleCountClass::TwoOrMore);
    for (const char* n : {"u", "v", "x", "z"})
        CHECK(simple_cycle_class(fx, fx.vertex(n)) == CycleCountClass::TwoOrMore);
    for (const char* n : {"t", "w", "y"})
        CHECK(simple_cycle_class(fx, fx.vertex(n)) == CycleCountClass::Zero);
    const Graph loop = single_loop_graph();
    CHECK(simple_cycle_class(loop, Vertex{0}) == CycleCountClass::One);
    const auto cyc = unique_simple_cycle(loop, Vertex{0});
    REQUIRE(cyc);
    CHECK(cyc->size() == 1);
    const Graph ea = ea_graph({"a", "b", "c"}, Multiplicity::omega());
    for (Vertex v : ea.all_vertices())
        CHECK(simple_cycle_class(ea, v) == CycleCountClass::Zero);
}

TEST_CASE("a cycle with an internal loop counts as infinitely many simple cycles") {
    // v -> a, a -> a, a -> v: first-return walks v a^k v for every k >= 1.
    GraphBuilder b;
    b.add_vertex("v");
    b.add_vertex("a");
    b.add_bundle("v", "a");
    b.add_bundle("a", "a");
    b.add_bundle("a", "v");
    const Graph g = std::move(b).build();
    CHECK(simple_cycle_class(g, g.vertex("v")) == CycleCountClass::TwoOrMore);
    CHECK(simple_cycle_class(g, g.vertex("a")) == CycleCountClass::TwoOrMore);
}

TEST_CASE("parallel edges are distinct simple cycles") {
    GraphBuilder b;
    b.add_vertex("v");
    b.add_bundle("v", "v", Multiplicity{2});
    CHECK(simple_cycle_class(std::move(b).build(), Vertex{0}) == CycleCountClass::TwoOrMore);
}

TEST_CASE("cycle classes agree with first-return walk counting") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RandomGraphOptions o;
        o.vertices = 1 + seed % 7;
        o.density = 0.25;
        o.repair = seed % 2 == 0;
        const Graph g = random_condition_k_graph(seed, o);
        for (Vertex v : g.all_vertices())
            REQUIRE(simple_cycle_class(g, v) == oracle::cycle_class(g, v));
        REQUIRE(condition_K(g).holds == oracle::condition_k(g));
        REQUIRE(condition_L(g).holds == oracle::condition_l(g));
    }
}

TEST_CASE("conditions K and L on the named graphs") {
    CHECK(condition_K(running_example().graph).holds);
    CHECK(condition_L(running_example().graph).holds);
    const Graph loop = single_loop_graph();
    const ConditionKResult k = condition_K(loop);
    CHECK_FALSE(k.holds);
    REQUIRE(k.witness);
    CHECK(loop.name(*k.witness) == "a");
    const ConditionLResult l = condition_L(loop);
    CHECK_FALSE(l.holds);
    CHECK(l.cycle.size() == 1);
    const Graph ea = ea_graph({"a", "b"}, Multiplicity::omega());
    CHECK(condition_K(ea).holds);
    CHECK(condition_L(ea).holds);
}

TEST_CASE("graphs beyond the enumeration limit are refused") {
    const Graph g = random_condition_k_graph(3, RandomGraphOptions{.vertices = 22});
    CHECK_THROWS_AS(require_enumerable(g, kDefaultEnumerationLimit), SizeLimitExceeded);
    CHECK_NOTHROW(require_enumerable(g, 22));
}
