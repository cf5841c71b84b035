#include "ckspectra/ideals.hpp"

#include "ckspectra/tails.hpp"

#include <algorithm>
#include <stdexcept>

namespace ckspectra {

PredicateResult is_hereditary(const Graph& g, VertexSet h) {
    g.check(h);
    for (Vertex v : h)
        if (!g.successors(v).is_subset_of(h))
            return PredicateResult{false, v};
    return {};
}

PredicateResult is_saturated(const Graph& g, VertexSet h) {
    g.check(h);
    for (Vertex v : g.all_vertices() - h)
        if (g.kind(v) == VertexKind::Regular && g.successors(v).is_subset_of(h))
            return PredicateResult{false, v};
    return {};
}

std::vector<VertexSet> saturated_hereditary_sets(const Graph& g, std::size_t limit) {
    require_enumerable(g, limit);
    std::vector<VertexSet> out;
    const std::uint64_t top = g.all_vertices().bits();
    for (std::uint64_t bits = 0;; ++bits) {
        const VertexSet h = VertexSet::from_bits(bits);
        if (is_hereditary(g, h) && is_saturated(g, h))
            out.push_back(h);
        if (bits == top)
            break;
    }
    return out;
}

Multiplicity escape_count(const Graph& g, Vertex v, VertexSet h) {
    g.check(v);
    return g.edges_into(v, g.all_vertices() - h);
}

namespace {

void require_saturated_hereditary(const Graph& g, VertexSet h) {
    if (!is_hereditary(g, h) || !is_saturated(g, h))
        throw NotSaturatedHereditary(format_set(g, h) + " is not saturated hereditary");
}

// B_H without the precondition check.
VertexSet breaking_unchecked(const Graph& g, VertexSet h) {
    VertexSet b;
    for (Vertex v : g.all_vertices() - h) {
        if (g.kind(v) != VertexKind::InfiniteEmitter)
            continue;
        const Multiplicity out = escape_count(g, v, h);
        if (!out.is_zero() && out.is_finite())
            b.insert(v);
    }
    return b;
}

void require_admissible(const Graph& g, const AdmissiblePair& p) {
    if (!is_admissible(g, p))
        throw NotAdmissible("(" + format_set(g, p.H) + ", " + format_set(g, p.S) + ") is not admissible");
}

void require_condition_k(const Graph& g) {
    if (const auto k = condition_K(g); !k.holds)
        throw ConditionKRequired("Condition (K) fails at vertex '" + g.name(*k.witness) + "'");
}

} // namespace

VertexSet breaking_vertices(const Graph& g, VertexSet h) {
    g.check(h);
    require_saturated_hereditary(g, h);
    return breaking_unchecked(g, h);
}

VertexSet breaking_vertices_by_range(const Graph& g, VertexSet h) {
    g.check(h);
    require_saturated_hereditary(g, h);
    VertexSet b;
    for (Vertex v : g.all_vertices() - h) {
        // Finitely many vertices, so the range count is always finite.
        if (g.kind(v) == VertexKind::InfiniteEmitter && !(g.successors(v) - h).empty())
            b.insert(v);
    }
    return b;
}

VertexSet breaking_reading_discrepancy(const Graph& g, VertexSet h) {
    const VertexSet by_edges = breaking_vertices(g, h);
    const VertexSet by_range = breaking_vertices_by_range(g, h);
    return (by_edges - by_range) | (by_range - by_edges);
}

bool is_admissible(const Graph& g, const AdmissiblePair& p) {
    if (!p.H.is_subset_of(g.all_vertices()) || !p.S.is_subset_of(g.all_vertices()))
        return false;
    if (!is_hereditary(g, p.H) || !is_saturated(g, p.H))
        return false;
    return p.S.is_subset_of(breaking_unchecked(g, p.H));
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t limit) {
    std::vector<AdmissiblePair> out;
    for (VertexSet h : saturated_hereditary_sets(g, limit)) {
        const std::uint64_t b = breaking_unchecked(g, h).bits();
        // Submasks of b in increasing order.
        std::uint64_t s = 0;
        do {
            out.push_back(AdmissiblePair{h, VertexSet::from_bits(s)});
            s = (s - b) & b;
        } while (s != 0);
    }
    return out;
}

AdmissiblePair meet(const Graph& g, std::span<const AdmissiblePair> pairs) {
    if (pairs.empty())
        throw std::invalid_argument("meet of an empty family");
    VertexSet h = g.all_vertices();
    VertexSet kept = g.all_vertices();
    for (const AdmissiblePair& p : pairs) {
        h &= p.H;
        kept &= p.H | p.S;
    }
    return AdmissiblePair{h, kept & breaking_unchecked(g, h)};
}

AdmissiblePair meet_or_whole(const Graph& g, std::span<const AdmissiblePair> pairs) {
    if (pairs.empty())
        return AdmissiblePair{g.all_vertices(), VertexSet{}};
    return meet(g, pairs);
}

bool ideal_leq(const Graph& g, const AdmissiblePair& p, const AdmissiblePair& q) {
    const AdmissiblePair both[] = {p, q};
    return meet(g, both) == p;
}

QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p) {
    require_admissible(g, p);
    const VertexSet kept = g.all_vertices() - p.H;
    const VertexSet broken = breaking_unchecked(g, p.H) - p.S;

    QuotientGraph q;
    GraphBuilder builder;
    std::vector<std::optional<Vertex>> image(g.vertex_count());
    std::vector<std::optional<Vertex>> primed_image(g.vertex_count());

    auto fresh = [](auto taken, std::string name) {
        do
            name += '\'';
        while (taken(name));
        return name;
    };
    auto name_taken = [&](const std::string& n) { return builder.find(n).has_value() || g.find(n).has_value(); };
    auto label_taken = [&](const std::string& l) {
        return std::any_of(g.bundles().begin(), g.bundles().end(), [&](const Bundle& b) { return b.label == l; });
    };

    for (Vertex v : kept) {
        image[v.index] = builder.add_vertex(g.name(v));
        q.origin.push_back(v);
    }
    for (Vertex v : broken) {
        const Vertex copy = builder.add_vertex(fresh(name_taken, g.name(v)));
        primed_image[v.index] = copy;
        q.origin.push_back(v);
        q.primed.emplace_back(v, copy);
    }
    for (std::size_t i = 0; i < g.bundles().size(); ++i) {
        const Bundle& b = g.bundle(i);
        if (!kept.contains(b.dst))
            continue;
        builder.add_bundle(*image[b.src.index], *image[b.dst.index], b.mult, b.label);
        q.provenance.push_back(i);
    }
    for (std::size_t i = 0; i < g.bundles().size(); ++i) {
        const Bundle& b = g.bundle(i);
        if (!broken.contains(b.dst))
            continue;
        std::optional<std::string> label;
        if (b.label)
            label = fresh(label_taken, *b.label);
        builder.add_bundle(*image[b.src.index], *primed_image[b.dst.index], b.mult, std::move(label));
        q.provenance.push_back(i);
    }
    q.graph = std::move(builder).build();
    return q;
}

IdealClass classify_from_facts(const IdealFacts& facts) {
    switch (facts.missing_breaking.size()) {
    case 0:
        if (facts.complement_is_maximal_tail)
            return IdealClass{IdealKind::Primitive2a, std::nullopt};
        if (facts.complement_is_cluster)
            return IdealClass{IdealKind::PrimeNotPrimitive, std::nullopt};
        return {};
    case 1:
        if (facts.complement_is_upward_of_missing)
            return IdealClass{IdealKind::Primitive2b, facts.missing_breaking.front()};
        return {};
    default:
        // The quotient would carry two or more sinks.
        return {};
    }
}

IdealFacts ideal_facts(const Graph& g, const AdmissiblePair& p) {
    require_admissible(g, p);
    IdealFacts f;
    const VertexSet complement = g.all_vertices() - p.H;
    for (Vertex v : breaking_unchecked(g, p.H) - p.S)
        f.missing_breaking.push_back(v);
    if (!complement.empty()) {
        const MtReport r = mt_report(g, complement);
        f.complement_is_cluster = r.cluster();
        f.complement_is_maximal_tail = r.maximal_tail();
    }
    if (f.missing_breaking.size() == 1)
        f.complement_is_upward_of_missing = complement == g.ancestors(f.missing_breaking.front());
    return f;
}

IdealClass classify_ideal(const Graph& g, const AdmissiblePair& p) {
    require_condition_k(g);
    return classify_from_facts(ideal_facts(g, p));
}

IdealClass classify_via_quotient(const Graph& g, const AdmissiblePair& p) {
    require_condition_k(g);
    const QuotientGraph q = quotient_graph(g, p);
    const Graph& e = q.graph;
    if (e.vertex_count() == 0)
        return {};
    const bool prime = condition_L(e).holds && is_downward_directed(e, e.all_vertices()).directed;
    if (!prime)
        return {};
    const bool separable = has_csp(e, e.all_vertices()).holds;
    if (q.primed.empty())
        return IdealClass{separable ? IdealKind::Primitive2a : IdealKind::PrimeNotPrimitive, std::nullopt};
    // A downward-directed quotient has at most one sink, hence one primed vertex.
    return IdealClass{separable ? IdealKind::Primitive2b : IdealKind::PrimeNotPrimitive, q.primed.front().first};
}

const char* to_string(IdealKind k) {
    switch (k) {
    case IdealKind::Primitive2a: return "primitive (maximal tail)";
    case IdealKind::Primitive2b: return "primitive (finite-return vertex)";
    case IdealKind::PrimeNotPrimitive: return "prime, not primitive";
    case IdealKind::NotPrime: return "not prime";
    }
    return "?";
}

} // namespace ckspectra
