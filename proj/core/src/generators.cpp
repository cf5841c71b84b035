#include "ckspectra/generators.hpp"

#include <random>

namespace ckspectra {

namespace {

VertexSet named(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (const char* n : names)
        s.insert(g.vertex(n));
    return s;
}

} // namespace

GraphFixture running_example() {
    GraphBuilder b;
    for (const char* n : {"t", "u", "v", "w", "x", "y", "z"})
        b.add_vertex(n);
    const Multiplicity inf = Multiplicity::omega();
    b.add_bundle("u", "t");
    b.add_bundle("u", "v", inf);
    b.add_bundle("v", "x");
    b.add_bundle("w", "x");
    b.add_bundle("w", "y", inf);
    b.add_bundle("x", "y", inf);
    b.add_bundle("x", "z");
    b.add_bundle("x", "t");
    b.add_bundle("x", "u", Multiplicity{1}, "g");
    b.add_bundle("x", "x", Multiplicity{1}, "f");
    b.add_bundle("y", "z");
    b.add_bundle("z", "z", Multiplicity{1}, "d");
    b.add_bundle("z", "z", Multiplicity{1}, "e");

    GraphFixture fx;
    fx.name = "running-example";
    fx.graph = std::move(b).build();
    const Graph& g = fx.graph;

    const VertexSet t1 = named(g, {"t", "u", "v", "w", "x"});
    const VertexSet t2 = named(g, {"u", "v", "w", "x"});
    const VertexSet t3 = named(g, {"w"});
    const VertexSet t4 = named(g, {"u", "v", "w", "x", "y", "z"});
    const VertexSet h1 = named(g, {"y", "z"});
    const VertexSet h2 = named(g, {"t", "y", "z"});
    const VertexSet h3 = named(g, {"t", "u", "v", "x", "y", "z"});
    const VertexSet h4 = named(g, {"t"});
    const VertexSet wx = named(g, {"w", "x"});
    const Vertex x = g.vertex("x");

    auto& e = fx.expected;
    e.maximal_tails = {{t1, t2, t3, t4}, "listing of the four maximal tails"};
    e.hereditary = {{h1, h2, h3, h4}, "complements H_i of the maximal tails"};
    e.breaking = {{wx, wx, VertexSet{}, VertexSet{}}, "breaking vertices of each H_i"};
    e.finite_return = {VertexSet{x}, "x is the only finite-return vertex"};
    e.return_bundles = {{8, 9}, "the returning edges out of x are g and f"};
    e.primitive_pairs = {{AdmissiblePair{h1, wx}, AdmissiblePair{h2, wx}, AdmissiblePair{h2, named(g, {"w"})},
                          AdmissiblePair{h3, {}}, AdmissiblePair{h4, {}}},
                         "list of the five primitive ideals"};
    e.gap_pair = {{AdmissiblePair{h2, named(g, {"w"})}, x}, "the gap ideal attached to x"};
    e.closure_of_t4 = {{AdmissiblePair{h2, wx}, AdmissiblePair{h3, {}}, AdmissiblePair{h4, {}},
                        AdmissiblePair{h2, named(g, {"w"})}},
                       "closure of the singleton {T_4} in Prim"};
    e.closure_points_of_t4 = {{ClusterPoint{t2}, ClusterPoint{t3}, ClusterPoint{t4}, FrPoint{x}},
                              "closure of {T_4} on the graph side"};
    fx.notes = "Single x -> u bundle (g): x has exactly two returning edges, f and g.";
    return fx;
}

Graph single_loop_graph() {
    GraphBuilder b;
    b.add_vertex("a");
    b.add_bundle("a", "a");
    return std::move(b).build();
}

Graph three_vertex_graph() {
    GraphBuilder b;
    for (const char* n : {"a", "b", "c"})
        b.add_vertex(n);
    b.add_bundle("b", "a");
    b.add_bundle("b", "c");
    return std::move(b).build();
}

Graph ea_graph(const std::vector<std::string>& ground, Multiplicity m) {
    if (ground.size() > kMaxGroundSet)
        throw SizeLimitExceeded(ground.size(), kMaxGroundSet);
    const std::uint32_t top = (std::uint32_t{1} << ground.size()) - 1;
    GraphBuilder b;
    for (std::uint32_t a = 1; a <= top; ++a) {
        std::string name = "v";
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (a & (1u << i))
                name += "_" + ground[i];
        b.add_vertex(std::move(name));
    }
    for (std::uint32_t a = 1; a <= top; ++a)
        for (std::uint32_t c = 1; c <= top; ++c)
            if (a != c && (a & c) == a)
                b.add_bundle(Vertex{a - 1}, Vertex{c - 1}, m);
    return std::move(b).build();
}

PXModel::PXModel(std::vector<std::string> ground) : ground_(std::move(ground)) {
    if (ground_.size() > kMaxGroundSet)
        throw SizeLimitExceeded(ground_.size(), kMaxGroundSet);
}

std::string PXModel::describe(std::size_t point) const {
    std::string out = "{";
    const std::uint32_t mask = mask_of(point);
    bool first = true;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (!(mask & (1u << i)))
            continue;
        out += (first ? "" : ", ") + ground_[i];
        first = false;
    }
    return out + "}";
}

PointSet px_closure(const PXModel& model, const PointSet& family) {
    const std::size_t n = model.point_count();
    if (family.size() != n)
        throw std::invalid_argument("family does not match the model");
    PointSet out(n);
    for (std::size_t t = 0; t < n; ++t) {
        const std::uint32_t tm = PXModel::mask_of(t);
        bool every = true;
        // Nonempty submasks a of tm.
        for (std::uint32_t a = tm; a != 0 && every; a = (a - 1) & tm) {
            bool covered = false;
            for (std::size_t s = family.find_first(); s != PointSet::npos && !covered; s = family.find_next(s))
                covered = (a & PXModel::mask_of(s)) == a;
            every = covered;
        }
        if (every)
            out.set(t);
    }
    return out;
}

VertexSet phi(const PXModel& model, std::size_t point) {
    if (point >= model.point_count())
        throw std::out_of_range("no such point");
    const std::uint32_t s = PXModel::mask_of(point);
    VertexSet gamma;
    for (std::uint32_t a = s; a != 0; a = (a - 1) & s)
        gamma.insert(Vertex{a - 1});
    return gamma;
}

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph assemble(const std::vector<std::string>& names, const std::vector<Bundle>& bundles) {
    GraphBuilder b;
    for (const std::string& n : names)
        b.add_vertex(n);
    for (const Bundle& e : bundles)
        b.add_bundle(e.src, e.dst, e.mult, e.label);
    return std::move(b).build();
}

} // namespace

Graph random_condition_k_graph(std::uint64_t seed, const RandomGraphOptions& options) {
    if (options.vertices > kMaxVertices)
        throw SizeLimitExceeded(options.vertices, kMaxVertices);
    std::mt19937_64 rng(seed);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < options.vertices; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<Bundle> bundles;
    for (std::uint32_t s = 0; s < options.vertices; ++s) {
        for (std::uint32_t d = 0; d < options.vertices; ++d) {
            // Draw all three numbers so the stream does not depend on earlier outcomes.
            const double present = unit(rng);
            const double omega = unit(rng);
            const double twice = unit(rng);
            if (present >= options.density)
                continue;
            Multiplicity m{1};
            if (omega < options.omega_prob)
                m = Multiplicity::omega();
            else if (twice < options.double_prob)
                m = Multiplicity{2};
            bundles.push_back(Bundle{std::nullopt, Vertex{s}, Vertex{d}, m});
        }
    }
    Graph g = assemble(names, bundles);
    if (!options.repair)
        return g;
    // Raising a multiplicity never lowers a cycle count, so this terminates.
    for (auto k = condition_K(g); !k.holds; k = condition_K(g)) {
        const auto cycle = unique_simple_cycle(g, *k.witness);
        bundles.at(cycle->front()).mult += Multiplicity{1};
        g = assemble(names, bundles);
    }
    return g;
}

Graph random_condition_k_graph(std::uint64_t seed, std::size_t n, double density, double omega_prob) {
    RandomGraphOptions options;
    options.vertices = n;
    options.density = density;
    options.omega_prob = omega_prob;
    return random_condition_k_graph(seed, options);
}

} // namespace ckspectra
