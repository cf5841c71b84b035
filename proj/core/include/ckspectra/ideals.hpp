#pragma once

#include "ckspectra/graph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace ckspectra {

/// (H, S) with H saturated hereditary and S ⊆ B_H. Names the gauge-invariant
/// ideal generated by the vertex projections over H and the gap projections over S.
struct AdmissiblePair {
    VertexSet H;
    VertexSet S;

    friend constexpr auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
};

struct PredicateResult {
    bool holds = true;
    std::optional<Vertex> witness;

    explicit operator bool() const noexcept { return holds; }
};

/// Fails with a vertex of H that emits an edge leaving H.
PredicateResult is_hereditary(const Graph& g, VertexSet h);
/// Fails with a regular vertex outside H whose every edge lands in H.
PredicateResult is_saturated(const Graph& g, VertexSet h);

/// All saturated hereditary sets, ascending by bitmask (includes ∅ and E^0).
std::vector<VertexSet> saturated_hereditary_sets(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// Saturating count of edges from v whose range lies outside H.
Multiplicity escape_count(const Graph& g, Vertex v, VertexSet h);

/// Infinite emitters with finitely many, but at least one, edges leaving H.
/// Throws NotSaturatedHereditary.
VertexSet breaking_vertices(const Graph& g, VertexSet h);

/// Same set under the range-vertex reading (counting distinct range vertices
/// outside H instead of edges). Diagnostic only.
VertexSet breaking_vertices_by_range(const Graph& g, VertexSet h);

/// Symmetric difference of the two readings above; empty when they agree.
VertexSet breaking_reading_discrepancy(const Graph& g, VertexSet h);

bool is_admissible(const Graph& g, const AdmissiblePair& p);

/// Every admissible pair, ordered by H then S (bitmask). Does not require
/// Condition (K); without it the list is only the gauge-invariant part.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// Pair of the intersection ideal: H = ∩ H_j, S = (∩ (H_j ∪ S_j)) ∩ B_H.
/// Throws std::invalid_argument on an empty family.
AdmissiblePair meet(const Graph& g, std::span<const AdmissiblePair> pairs);

/// Meet over a family that may be empty; the empty meet is the whole algebra (E^0, ∅).
AdmissiblePair meet_or_whole(const Graph& g, std::span<const AdmissiblePair> pairs);

/// Ideal containment, read off the meet: P <= Q iff meet(P, Q) = P.
bool ideal_leq(const Graph& g, const AdmissiblePair& p, const AdmissiblePair& q);

/// Graph whose C*-algebra is the quotient by the ideal of an admissible pair.
struct QuotientGraph {
    Graph graph;
    /// Original vertex of each quotient vertex (a primed vertex maps to the vertex it copies).
    std::vector<Vertex> origin;
    /// (v, v') for each kept breaking vertex v in B_H \ S.
    std::vector<std::pair<Vertex, Vertex>> primed;
    /// Source bundle index in the original graph, per quotient bundle.
    std::vector<std::size_t> provenance;
};

/// Vertices (E^0 \ H) plus a sink v' per v in B_H \ S; bundles ending outside H
/// are kept and every bundle into such a v gets a copy into v'.
/// Throws NotAdmissible.
QuotientGraph quotient_graph(const Graph& g, const AdmissiblePair& p);

enum class IdealKind {
    Primitive2a,       ///< complement of H is a maximal tail, S = B_H
    Primitive2b,       ///< complement of H is U(v0), S = B_H \ {v0}
    PrimeNotPrimitive, ///< complement of H is a cluster but not a maximal tail, S = B_H
    NotPrime,
};

struct IdealClass {
    IdealKind kind = IdealKind::NotPrime;
    std::optional<Vertex> v0;

    bool is_primitive() const noexcept {
        return kind == IdealKind::Primitive2a || kind == IdealKind::Primitive2b;
    }
    bool is_prime() const noexcept { return kind != IdealKind::NotPrime; }

    friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

/// Graph-side facts the description theorem branches on.
struct IdealFacts {
    /// Vertices of B_H \ S.
    std::vector<Vertex> missing_breaking;
    bool complement_is_cluster = false;
    bool complement_is_maximal_tail = false;
    /// Only meaningful with exactly one missing breaking vertex v0: complement of H equals U(v0).
    bool complement_is_upward_of_missing = false;
};

/// Decision procedure of the description theorem on precomputed facts.
IdealClass classify_from_facts(const IdealFacts& facts);

IdealFacts ideal_facts(const Graph& g, const AdmissiblePair& p);

/// Throws ConditionKRequired or NotAdmissible.
IdealClass classify_ideal(const Graph& g, const AdmissiblePair& p);

/// Prime iff the quotient graph satisfies Condition (L) and is downward
/// directed; primitive additionally needs the Countable Separation Property.
/// The whole algebra (empty quotient) is not prime.
/// Throws ConditionKRequired or NotAdmissible.
IdealClass classify_via_quotient(const Graph& g, const AdmissiblePair& p);

const char* to_string(IdealKind k);

} // namespace ckspectra
