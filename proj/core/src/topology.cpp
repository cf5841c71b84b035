#include "ckspectra/topology.hpp"

#include "ckspectra/tails.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ckspectra {

namespace {

void require_condition_k(const Graph& g) {
    if (const auto k = condition_K(g); !k.holds)
        throw ConditionKRequired("Condition (K) fails at vertex '" + g.name(*k.witness) + "'");
}

void require_same_size(std::span<const SpecPoint> universe, const PointSet& x) {
    if (x.size() != universe.size())
        throw std::invalid_argument("point set does not match its universe");
}

std::vector<SpecPoint> assemble(const std::vector<VertexSet>& sets, VertexSet fr) {
    std::vector<SpecPoint> pts;
    pts.reserve(sets.size() + fr.size());
    for (VertexSet c : sets)
        pts.emplace_back(ClusterPoint{c});
    for (Vertex v : fr)
        pts.emplace_back(FrPoint{v});
    return pts;
}

PointSet closure_from_images(const Graph& g, std::span<const AdmissiblePair> images, const PointSet& x) {
    std::vector<AdmissiblePair> chosen;
    for (std::size_t i = x.find_first(); i != PointSet::npos; i = x.find_next(i))
        chosen.push_back(images[i]);
    const AdmissiblePair bottom = meet_or_whole(g, chosen);
    PointSet out(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        if (ideal_leq(g, bottom, images[i]))
            out.set(i);
    return out;
}

std::vector<AdmissiblePair> images_of(const Graph& g, std::span<const SpecPoint> universe) {
    std::vector<AdmissiblePair> images;
    images.reserve(universe.size());
    for (const SpecPoint& p : universe)
        images.push_back(h_map(g, p));
    return images;
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

PointSet random_subset(std::size_t n, std::mt19937_64& rng) {
    PointSet s(n);
    const double density = unit(rng);
    for (std::size_t i = 0; i < n; ++i)
        if (unit(rng) < density)
            s.set(i);
    return s;
}

std::string mismatch(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x, const PointSet& lhs,
                     const PointSet& rhs) {
    return "X = " + format_points(g, universe, x) + ", graph side " + format_points(g, universe, lhs) +
           ", ideal side " + format_points(g, universe, rhs);
}

} // namespace

std::vector<SpecPoint> spec_points(const Graph& g, std::size_t limit) {
    require_condition_k(g);
    return assemble(clusters(g, limit), finite_return_vertices(g));
}

std::vector<SpecPoint> prim_points(const Graph& g, std::size_t limit) {
    require_condition_k(g);
    return assemble(maximal_tails(g, limit), finite_return_vertices(g));
}

std::string describe_point(const Graph& g, const SpecPoint& p) {
    if (const auto* c = std::get_if<ClusterPoint>(&p))
        return format_set(g, c->members);
    return "fr(" + g.name(std::get<FrPoint>(p).vertex) + ")";
}

std::vector<SpecPoint> select(std::span<const SpecPoint> universe, const PointSet& x) {
    require_same_size(universe, x);
    std::vector<SpecPoint> out;
    for (std::size_t i = x.find_first(); i != PointSet::npos; i = x.find_next(i))
        out.push_back(universe[i]);
    return out;
}

VertexSet v_of(const Graph& g, std::span<const SpecPoint> x) {
    VertexSet v;
    for (const SpecPoint& p : x) {
        if (const auto* c = std::get_if<ClusterPoint>(&p)) {
            g.check(c->members);
            v |= c->members;
        } else {
            const Vertex v0 = std::get<FrPoint>(p).vertex;
            g.check(v0);
            v |= g.ancestors(v0);
        }
    }
    return v;
}

namespace {

VertexSet point_vertices(const Graph& g, const SpecPoint& p) {
    if (const auto* c = std::get_if<ClusterPoint>(&p))
        return c->members;
    return g.ancestors(std::get<FrPoint>(p).vertex);
}

// v lies in S for the pair h(p), given v is outside H_p: v emits an edge into
// the vertices of p and p is not the finite-return point v itself.
bool keeps_gap(const Graph& g, Vertex v, const SpecPoint& p) {
    if (const auto* f = std::get_if<FrPoint>(&p); f && f->vertex == v)
        return false;
    return !g.edges_into(v, point_vertices(g, p)).is_zero();
}

} // namespace

PointSet graph_closure(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x, ClosureRule rule) {
    const std::vector<SpecPoint> chosen = select(universe, x);
    const VertexSet v = v_of(g, chosen);
    PointSet out(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (const auto* c = std::get_if<ClusterPoint>(&universe[i])) {
            if (c->members.is_subset_of(v))
                out.set(i);
        } else if (x.test(i) || g.edges_into(std::get<FrPoint>(universe[i]).vertex, v).is_omega()) {
            out.set(i);
        }
    }
    if (rule == ClosureRule::Displayed)
        return out;

    // Breaking vertices of E^0 \ V(X) whose gap every member of X keeps.
    VertexSet kept_by_all;
    for (Vertex b : v) {
        const Multiplicity escaping = g.edges_into(b, v);
        if (g.kind(b) != VertexKind::InfiniteEmitter || escaping.is_zero() || escaping.is_omega())
            continue;
        bool all = true;
        for (const SpecPoint& p : chosen)
            if (point_vertices(g, p).contains(b) && !keeps_gap(g, b, p))
                all = false;
        if (all)
            kept_by_all.insert(b);
    }
    for (std::size_t i = out.find_first(); i != PointSet::npos; i = out.find_next(i))
        for (Vertex b : kept_by_all & point_vertices(g, universe[i]))
            if (!keeps_gap(g, b, universe[i]))
                out.reset(i);
    return out;
}

AdmissiblePair h_map(const Graph& g, const SpecPoint& p) {
    if (const auto* c = std::get_if<ClusterPoint>(&p)) {
        const VertexSet h = g.all_vertices() - c->members;
        return AdmissiblePair{h, breaking_vertices(g, h)};
    }
    const Vertex v0 = std::get<FrPoint>(p).vertex;
    g.check(v0);
    const VertexSet h = g.all_vertices() - g.ancestors(v0);
    VertexSet s = breaking_vertices(g, h);
    s.erase(v0);
    return AdmissiblePair{h, s};
}

PointSet ideal_closure(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x) {
    require_same_size(universe, x);
    return closure_from_images(g, images_of(g, universe), x);
}

SpecSpace make_space(const Graph& g, Side side, SpaceKind kind, std::size_t limit, ClosureRule rule) {
    SpecSpace space;
    space.side = side;
    space.kind = kind;
    space.rule = rule;
    space.points = kind == SpaceKind::Spec ? spec_points(g, limit) : prim_points(g, limit);
    if (side == Side::GraphSide) {
        space.closure = [g, pts = space.points, rule](const PointSet& x) { return graph_closure(g, pts, x, rule); };
    } else {
        space.closure = [g, images = images_of(g, space.points)](const PointSet& x) {
            if (x.size() != images.size())
                throw std::invalid_argument("point set does not match its universe");
            return closure_from_images(g, images, x);
        };
    }
    return space;
}

std::vector<PointSet> subsets_to_check(std::size_t n, std::size_t exhaustive_limit, std::uint64_t seed,
                                       std::size_t samples, bool& exhaustive) {
    std::vector<PointSet> out;
    exhaustive = n <= exhaustive_limit && n < 32;
    if (exhaustive) {
        const std::uint64_t count = std::uint64_t{1} << n;
        out.reserve(count);
        for (std::uint64_t bits = 0; bits < count; ++bits)
            out.emplace_back(n, bits);
        return out;
    }
    out.emplace_back(n);
    PointSet full(n);
    full.set();
    out.push_back(full);
    for (std::size_t i = 0; i < n; ++i) {
        PointSet s(n);
        s.set(i);
        out.push_back(s);
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k)
        out.push_back(random_subset(n, rng));
    return out;
}

KuratowskiReport check_kuratowski(const SpecSpace& space, std::size_t exhaustive_limit, std::uint64_t seed,
                                  std::size_t samples) {
    const std::size_t n = space.points.size();
    KuratowskiReport r;
    auto fail = [&](std::string what, const PointSet& x) {
        r.holds = false;
        r.failure = std::move(what);
        r.counterexample = x;
        return r;
    };

    const PointSet none = space.empty_set();
    if (space.closure(none).any())
        return fail("closure of the empty set is nonempty", none);

    std::vector<PointSet> single;
    single.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        single.push_back(space.closure(space.singleton(i)));

    for (const PointSet& x : subsets_to_check(n, exhaustive_limit, seed, samples, r.exhaustive)) {
        ++r.subsets_checked;
        const PointSet c = space.closure(x);
        if (!x.is_subset_of(c))
            return fail("closure is not extensive", x);
        if (space.closure(c) != c)
            return fail("closure is not idempotent", x);
        PointSet joined = none;
        for (std::size_t i = x.find_first(); i != PointSet::npos; i = x.find_next(i))
            joined |= single[i];
        if (joined != c)
            return fail("closure is not additive", x);
    }

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < samples && n > 0; ++k) {
        const PointSet x = random_subset(n, rng);
        const PointSet y = random_subset(n, rng);
        if (space.closure(x | y) != (space.closure(x) | space.closure(y)))
            return fail("closure does not preserve binary unions", x | y);
    }
    return r;
}

SeparationReport separation_report(const SpecSpace& space) {
    const std::size_t n = space.points.size();
    SeparationReport r;
    r.specializes.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
        PointSet c = space.closure(space.singleton(p));
        for (std::size_t q = c.find_first(); q != PointSet::npos; q = c.find_next(q))
            r.specializes[p].push_back(q);
        if (c != space.singleton(p))
            r.non_closed_singletons.push_back(p);
        r.singleton_closures.push_back(std::move(c));
    }
    r.t1 = r.non_closed_singletons.empty();

    // Minimal open neighbourhood of p: every q with p in closure({q}).
    std::vector<PointSet> nbhd(n, space.empty_set());
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
            if (r.singleton_closures[q].test(p))
                nbhd[p].set(q);

    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (r.t0 && r.singleton_closures[p].test(q) && r.singleton_closures[q].test(p)) {
                r.t0 = false;
                r.t0_witness = std::pair{p, q};
            }
            if (r.hausdorff && nbhd[p].intersects(nbhd[q])) {
                r.hausdorff = false;
                r.hausdorff_witness = std::pair{p, q};
            }
        }
    }
    return r;
}

HomeomorphismReport verify_homeomorphism(const Graph& g, std::size_t exhaustive_limit, std::uint64_t seed,
                                         std::size_t samples, std::size_t limit, ClosureRule rule) {
    require_condition_k(g);
    HomeomorphismReport r;

    std::vector<AdmissiblePair> prime;
    std::vector<AdmissiblePair> primitive;
    for (const AdmissiblePair& p : admissible_pairs(g, limit)) {
        const IdealClass c = classify_ideal(g, p);
        if (c.is_prime())
            prime.push_back(p);
        if (c.is_primitive())
            primitive.push_back(p);
    }
    r.prime_pairs = prime.size();
    r.primitive_pairs = primitive.size();

    for (SpaceKind kind : {SpaceKind::Spec, SpaceKind::Prim}) {
        const SpecSpace graph_side = make_space(g, Side::GraphSide, kind, limit, rule);
        const SpecSpace ideal_side = make_space(g, Side::IdealSide, kind, limit);
        const auto& pts = graph_side.points;
        const char* name = kind == SpaceKind::Spec ? "Spec" : "Prim";

        std::vector<AdmissiblePair> image = images_of(g, pts);
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            throw VerificationFailure(std::string("h is not injective on ") + name, format_points(g, pts, PointSet(pts.size()).set()));
        const auto& target = kind == SpaceKind::Spec ? prime : primitive;
        if (image != target)
            throw VerificationFailure(std::string("h does not map onto the ") +
                                          (kind == SpaceKind::Spec ? "prime" : "primitive") + " ideals",
                                      std::to_string(image.size()) + " points vs " + std::to_string(target.size()) +
                                          " ideals");

        bool exhaustive = true;
        std::size_t checked = 0;
        for (const PointSet& x : subsets_to_check(pts.size(), exhaustive_limit, seed, samples, exhaustive)) {
            const PointSet lhs = graph_side.closure(x);
            const PointSet rhs = ideal_side.closure(x);
            if (lhs != rhs)
                throw VerificationFailure(std::string("h does not commute with closure on ") + name,
                                          mismatch(g, pts, x, lhs, rhs));
            ++checked;
        }
        if (kind == SpaceKind::Spec) {
            r.spec_points = pts.size();
            r.spec_subsets_checked = checked;
        } else {
            r.prim_points = pts.size();
            r.prim_subsets_checked = checked;
        }
        r.exhaustive = r.exhaustive && exhaustive;
    }
    return r;
}

DensityReport prim_spec_density_check(const Graph& g, std::size_t limit) {
    const std::vector<SpecPoint> spec = spec_points(g, limit);
    const std::vector<SpecPoint> prim = prim_points(g, limit);
    DensityReport r;
    r.spec_points = spec.size();
    r.prim_points = prim.size();
    r.equal = spec == prim;

    PointSet in_prim(spec.size());
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (std::find(prim.begin(), prim.end(), spec[i]) != prim.end())
            in_prim.set(i);
    r.dense = graph_closure(g, spec, in_prim).all();

    if (!r.equal)
        throw VerificationFailure("Prim differs from Spec", std::to_string(prim.size()) + " primitive vs " +
                                                                std::to_string(spec.size()) + " prime points");
    if (!r.dense)
        throw VerificationFailure("Prim is not dense in Spec", format_points(g, spec, in_prim));
    return r;
}

std::string format_points(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const SpecPoint& p : select(universe, x)) {
        os << (first ? "" : ", ") << describe_point(g, p);
        first = false;
    }
    os << ']';
    return os.str();
}

} // namespace ckspectra
