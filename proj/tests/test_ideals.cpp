#include "helpers.hpp"
#include "oracles.hpp"

#include <ckspectra/generators.hpp>
#include <ckspectra/ideals.hpp>
#include <ckspectra/io.hpp>
#include <ckspectra/tails.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ckspectra;
using test::set_of;

namespace {

std::set<std::string> bundle_texts(const Graph& g) {
    std::set<std::string> out;
    for (const Bundle& b : g.bundles())
        out.insert((b.label ? *b.label + ":" : std::string()) + g.name(b.src) + "->" + g.name(b.dst) + "*" +
                   b.mult.to_string());
    return out;
}

} // namespace

TEST_CASE("hereditary and saturated predicates") {
    const Graph g = running_example().graph;
    CHECK(is_hereditary(g, set_of(g, {"y", "z"})).holds);
    CHECK(is_saturated(g, set_of(g, {"y", "z"})).holds);
    const PredicateResult y = is_hereditary(g, set_of(g, {"y"}));
    CHECK_FALSE(y.holds);
    CHECK(g.name(*y.witness) == "y");
    CHECK(is_hereditary(g, VertexSet{}).holds);
    CHECK(is_saturated(g, g.all_vertices()).holds);
    // v's only edge lands in {x, y, z, t} once x is included.
    CHECK_FALSE(is_saturated(g, set_of(g, {"t", "x", "y", "z"})).holds);
}

TEST_CASE("saturated hereditary sets") {
    const GraphFixture fx = running_example();
    const auto shs = saturated_hereditary_sets(fx.graph);
    for (VertexSet h : fx.expected.hereditary.value)
        CHECK(std::find(shs.begin(), shs.end(), h) != shs.end());

    GraphBuilder b;
    for (const char* n : {"a", "b", "c"})
        b.add_vertex(n);
    CHECK(saturated_hereditary_sets(std::move(b).build()).size() == 8);

    // Frozen from the brute-force scan: ∅, complements of the 3 clusters, and E^0.
    const Graph ea = ea_graph({"a", "b"}, Multiplicity::omega());
    const auto ea_shs = saturated_hereditary_sets(ea);
    CHECK(ea_shs.size() == 5);
    for (VertexSet h : ea_shs)
        CHECK((h.empty() || h == ea.all_vertices() ||
               std::find(std::begin(clusters(ea)), std::end(clusters(ea)), ea.all_vertices() - h) !=
                   std::end(clusters(ea))));
}

TEST_CASE("breaking vertices of the running example") {
    const GraphFixture fx = running_example();
    const auto& h = fx.expected.hereditary.value;
    const auto& bh = fx.expected.breaking.value;
    for (std::size_t i = 0; i < h.size(); ++i)
        CHECK(breaking_vertices(fx.graph, h[i]) == bh[i]);
    CHECK_THROWS_AS(breaking_vertices(fx.graph, set_of(fx.graph, {"y"})), NotSaturatedHereditary);
}

TEST_CASE("edge-count and range-count readings of breaking vertices can differ") {
    // a emits infinitely many edges to the single vertex c outside H = {b}.
    GraphBuilder b;
    for (const char* n : {"a", "b", "c"})
        b.add_vertex(n);
    b.add_bundle("a", "b", Multiplicity::omega());
    b.add_bundle("a", "c", Multiplicity::omega());
    const Graph g = std::move(b).build();
    const VertexSet h = set_of(g, {"b"});
    CHECK(breaking_vertices(g, h).empty());
    CHECK(breaking_vertices_by_range(g, h) == set_of(g, {"a"}));
    CHECK(breaking_reading_discrepancy(g, h) == set_of(g, {"a"}));
}

TEST_CASE("admissible pairs") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const auto pairs = admissible_pairs(g);
    const VertexSet h2 = fx.expected.hereditary.value[1];
    for (VertexSet s : {set_of(g, {"w", "x"}), set_of(g, {"w"}), set_of(g, {"x"}), VertexSet{}})
        CHECK(std::find(pairs.begin(), pairs.end(), AdmissiblePair{h2, s}) != pairs.end());
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));

    GraphBuilder b;
    b.add_vertex("v");
    CHECK(admissible_pairs(std::move(b).build()) ==
          std::vector<AdmissiblePair>{{VertexSet{}, VertexSet{}}, {VertexSet::first_n(1), VertexSet{}}});

    const Graph ea1 = ea_graph({"a", "b"}, Multiplicity{1});
    for (const AdmissiblePair& p : admissible_pairs(ea1))
        CHECK(p.S.empty());
    CHECK_FALSE(is_admissible(g, {h2, set_of(g, {"u"})}));
}

TEST_CASE("admissible pairs agree with a full brute-force scan") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        RandomGraphOptions o;
        o.vertices = 1 + seed % 7;
        o.omega_prob = 0.35;
        const Graph g = random_condition_k_graph(seed, o);
        REQUIRE(admissible_pairs(g) == oracle::admissible_pairs(g));
        for (VertexSet h : saturated_hereditary_sets(g))
            REQUIRE(breaking_vertices(g, h) == oracle::breaking(g, h));
    }
}

TEST_CASE("meet of admissible pairs") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const auto& h = fx.expected.hereditary.value;
    const auto& bh = fx.expected.breaking.value;
    const AdmissiblePair p1{h[0], bh[0]};
    const AdmissiblePair p4{h[3], bh[3]};
    const AdmissiblePair zero{};
    CHECK(meet(g, std::vector{p1}) == p1);
    CHECK(meet(g, std::vector{p1, p1}) == p1);
    CHECK(meet(g, std::vector{zero, p1}) == zero);
    CHECK(meet(g, std::vector{p1, p4}) == zero);
    CHECK_THROWS_AS(meet(g, std::vector<AdmissiblePair>{}), std::invalid_argument);
    CHECK(meet_or_whole(g, std::vector<AdmissiblePair>{}) == AdmissiblePair{g.all_vertices(), {}});

    const auto pairs = admissible_pairs(g);
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            const AdmissiblePair ab = meet(g, std::vector{a, b});
            REQUIRE(is_admissible(g, ab));
            REQUIRE(ab == meet(g, std::vector{b, a}));
        }
}

TEST_CASE("ideal containment") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const auto& h = fx.expected.hereditary.value;
    const auto pairs = admissible_pairs(g);
    const AdmissiblePair whole{g.all_vertices(), {}};
    for (const auto& p : pairs) {
        CHECK(ideal_leq(g, AdmissiblePair{}, p));
        CHECK(ideal_leq(g, p, whole));
        CHECK(ideal_leq(g, p, p));
    }
    CHECK(ideal_leq(g, {h[3], {}}, {h[1], set_of(g, {"w"})}));
    CHECK_FALSE(ideal_leq(g, {h[1], set_of(g, {"w"})}, {h[3], {}}));
}

TEST_CASE("quotient graphs") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    const auto& h = fx.expected.hereditary.value;

    CHECK(quotient_graph(g, {}).graph == g);

    const QuotientGraph q3 = quotient_graph(g, {h[2], {}});
    CHECK(q3.graph.vertex_count() == 1);
    CHECK(q3.graph.name(Vertex{0}) == "w");
    CHECK(q3.graph.bundles().empty());

    // Every bundle into x gets a copy into x': f from x, v -> x and w -> x.
    const QuotientGraph q = quotient_graph(g, {h[1], set_of(g, {"w"})});
    const Graph& qg = q.graph;
    CHECK(std::vector<std::string>(qg.names().begin(), qg.names().end()) ==
          std::vector<std::string>{"u", "v", "w", "x", "x'"});
    const auto texts = bundle_texts(qg);
    CHECK(texts.count("f':x->x'*1") == 1);
    CHECK(texts.count("v->x'*1") == 1);
    CHECK(texts.count("w->x'*1") == 1);
    CHECK(qg.out_multiplicity(qg.vertex("x'")).is_zero());
    REQUIRE(q.primed.size() == 1);
    CHECK(q.primed[0].first == g.vertex("x"));
    CHECK(q.origin.back() == g.vertex("x"));
    CHECK(parse_graph(emit_graph(qg)) == qg);

    CHECK_THROWS_AS(quotient_graph(g, {h[1], set_of(g, {"u"})}), NotAdmissible);
}

TEST_CASE("classification of the running example") {
    const GraphFixture fx = running_example();
    const Graph& g = fx.graph;
    std::vector<AdmissiblePair> primitive;
    for (const AdmissiblePair& p : admissible_pairs(g)) {
        const IdealClass c = classify_ideal(g, p);
        CHECK(c == classify_via_quotient(g, p));
        if (c.is_primitive())
            primitive.push_back(p);
    }
    auto expected = fx.expected.primitive_pairs.value;
    std::sort(expected.begin(), expected.end());
    CHECK(primitive == expected);

    const auto& [gap, x] = fx.expected.gap_pair.value;
    const IdealClass c = classify_ideal(g, gap);
    CHECK(c.kind == IdealKind::Primitive2b);
    CHECK(c.v0 == x);

    CHECK(classify_ideal(g, {}).kind == IdealKind::NotPrime);
    CHECK(classify_via_quotient(g, {g.all_vertices(), {}}).kind == IdealKind::NotPrime);
    const AdmissiblePair h2_empty{fx.expected.hereditary.value[1], {}};
    CHECK(classify_via_quotient(g, h2_empty).kind == IdealKind::NotPrime);
    CHECK(classify_ideal(g, h2_empty).kind == IdealKind::NotPrime);
}

TEST_CASE("the zero ideal of the omega subset graph is primitive") {
    for (std::size_t k = 1; k <= 3; ++k) {
        std::vector<std::string> ground;
        for (std::size_t i = 0; i < k; ++i)
            ground.push_back(std::string(1, static_cast<char>('a' + i)));
        const Graph g = ea_graph(ground, Multiplicity::omega());
        CHECK(classify_ideal(g, {}).kind == IdealKind::Primitive2a);
        CHECK(classify_via_quotient(g, {}).kind == IdealKind::Primitive2a);
    }
}

TEST_CASE("classification needs Condition K") {
    const Graph loop = single_loop_graph();
    CHECK_THROWS_AS(classify_ideal(loop, {}), ConditionKRequired);
    CHECK_THROWS_AS(classify_via_quotient(loop, {}), ConditionKRequired);
}

TEST_CASE("classification decision table") {
    IdealFacts f;
    f.complement_is_cluster = true;
    f.complement_is_maximal_tail = true;
    CHECK(classify_from_facts(f).kind == IdealKind::Primitive2a);

    f.complement_is_maximal_tail = false;
    CHECK(classify_from_facts(f).kind == IdealKind::PrimeNotPrimitive);
    CHECK(classify_from_facts(f).is_prime());
    CHECK_FALSE(classify_from_facts(f).is_primitive());

    f.complement_is_cluster = false;
    CHECK(classify_from_facts(f).kind == IdealKind::NotPrime);

    IdealFacts one;
    one.missing_breaking = {Vertex{3}};
    one.complement_is_upward_of_missing = true;
    const IdealClass b = classify_from_facts(one);
    CHECK(b.kind == IdealKind::Primitive2b);
    CHECK(b.v0 == Vertex{3});
    one.complement_is_upward_of_missing = false;
    CHECK(classify_from_facts(one).kind == IdealKind::NotPrime);

    IdealFacts two;
    two.missing_breaking = {Vertex{1}, Vertex{2}};
    two.complement_is_cluster = true;
    two.complement_is_maximal_tail = true;
    CHECK(classify_from_facts(two).kind == IdealKind::NotPrime);
}

TEST_CASE("every admissible complement is a union of maximal tails") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const Graph g = random_condition_k_graph(seed, RandomGraphOptions{.vertices = 1 + seed % 8});
        for (const AdmissiblePair& p : admissible_pairs(g)) {
            const VertexSet c = g.all_vertices() - p.H;
            REQUIRE(oracle::mt1(g, c));
            REQUIRE(oracle::mt2(g, c));
        }
    }
}
