#pragma once

#include "ckspectra/graph.hpp"
#include "ckspectra/ideals.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ckspectra {

struct ClusterPoint {
    VertexSet members;
    friend constexpr auto operator<=>(const ClusterPoint&, const ClusterPoint&) = default;
};

struct FrPoint {
    Vertex vertex;
    friend constexpr auto operator<=>(const FrPoint&, const FrPoint&) = default;
};

/// Point of Clust(E) ⊔ FR(E). The tag keeps the cluster {v} and the
/// finite-return vertex v apart.
using SpecPoint = std::variant<ClusterPoint, FrPoint>;

/// Subset of a point list, by index.
using PointSet = boost::dynamic_bitset<>;

/// Clusters followed by finite-return vertices, each in canonical order.
/// Throws ConditionKRequired, SizeLimitExceeded.
std::vector<SpecPoint> spec_points(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);
/// Maximal tails followed by finite-return vertices.
std::vector<SpecPoint> prim_points(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

std::string describe_point(const Graph& g, const SpecPoint& p);

/// Members of `universe` selected by `x`.
std::vector<SpecPoint> select(std::span<const SpecPoint> universe, const PointSet& x);

/// Union of the clusters in X and of U(v0) for the finite-return points v0 in X.
VertexSet v_of(const Graph& g, std::span<const SpecPoint> x);

/// Which graph-side closure formula to apply.
enum class ClosureRule {
    /// Clusters C ⊆ V(X); finite-return v0 in X or with infinitely many edges into V(X).
    Displayed,
    /// Displayed, and additionally no vertex of the candidate point may be a
    /// breaking vertex of E^0 \ V(X) kept by every member of X but not by the candidate.
    Refined,
};

/// Graph-side closure inside `universe`.
PointSet graph_closure(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x,
                       ClosureRule rule = ClosureRule::Displayed);

/// Cluster C ↦ (E^0 \ C, B_H); finite-return v0 ↦ (E^0 \ U(v0), B_H \ {v0}).
AdmissiblePair h_map(const Graph& g, const SpecPoint& p);

/// Ideal-side closure inside `universe`: points whose ideal contains the
/// intersection of the ideals of X (the empty intersection is the whole algebra).
PointSet ideal_closure(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x);

enum class Side { GraphSide, IdealSide };
enum class SpaceKind { Spec, Prim };

/// Finite topological space given by its closure operator.
struct SpecSpace {
    std::vector<SpecPoint> points;
    std::function<PointSet(const PointSet&)> closure;
    Side side = Side::GraphSide;
    SpaceKind kind = SpaceKind::Spec;
    ClosureRule rule = ClosureRule::Displayed;

    PointSet empty_set() const { return PointSet(points.size()); }
    PointSet singleton(std::size_t i) const {
        PointSet s(points.size());
        s.set(i);
        return s;
    }
};

/// Throws ConditionKRequired, SizeLimitExceeded.
SpecSpace make_space(const Graph& g, Side side, SpaceKind kind, std::size_t limit = kDefaultEnumerationLimit,
                     ClosureRule rule = ClosureRule::Displayed);

inline constexpr std::size_t kDefaultExhaustiveLimit = 12;
inline constexpr std::uint64_t kDefaultSeed = 0x5eedc0de;

struct KuratowskiReport {
    bool holds = true;
    bool exhaustive = true;
    std::size_t subsets_checked = 0;
    /// Which axiom failed, and on which set.
    std::string failure;
    std::optional<PointSet> counterexample;
};

/// Checks closure(∅) = ∅, extensivity, idempotence and finite additivity.
/// Additivity is checked as closure(X) = ∪_{p∈X} closure({p}) for every checked
/// X (equivalent to the binary union law on a finite space), plus the binary law
/// directly on sampled pairs.
KuratowskiReport check_kuratowski(const SpecSpace& space, std::size_t exhaustive_limit = kDefaultExhaustiveLimit,
                                  std::uint64_t seed = kDefaultSeed, std::size_t samples = 2000);

struct SeparationReport {
    bool t0 = true;
    bool t1 = true;
    bool hausdorff = true;
    std::vector<std::size_t> non_closed_singletons;
    /// closure({p}) per point p.
    std::vector<PointSet> singleton_closures;
    /// specializes[p] lists q with q in closure({p}).
    std::vector<std::vector<std::size_t>> specializes;
    std::optional<std::pair<std::size_t, std::size_t>> t0_witness;
    std::optional<std::pair<std::size_t, std::size_t>> hausdorff_witness;
};

SeparationReport separation_report(const SpecSpace& space);

struct HomeomorphismReport {
    std::size_t spec_points = 0;
    std::size_t prim_points = 0;
    std::size_t prime_pairs = 0;
    std::size_t primitive_pairs = 0;
    bool exhaustive = true;
    std::size_t spec_subsets_checked = 0;
    std::size_t prim_subsets_checked = 0;
};

/// Checks that h is a bijection onto the prime (and primitive) pairs and that
/// it carries the graph-side closure onto the ideal-side closure, on Spec and on
/// Prim. Exhaustive over all point subsets up to `exhaustive_limit` points,
/// otherwise all singletons plus `samples` seeded random subsets.
/// Throws ConditionKRequired, VerificationFailure.
HomeomorphismReport verify_homeomorphism(const Graph& g, std::size_t exhaustive_limit = kDefaultExhaustiveLimit,
                                         std::uint64_t seed = kDefaultSeed, std::size_t samples = 2000,
                                         std::size_t limit = kDefaultEnumerationLimit,
                                         ClosureRule rule = ClosureRule::Displayed);

struct DensityReport {
    std::size_t spec_points = 0;
    std::size_t prim_points = 0;
    bool equal = true;
    bool dense = true;
};

/// Prim = Spec on every finite-vertex graph, and Prim is dense in Spec.
/// Throws ConditionKRequired, VerificationFailure.
DensityReport prim_spec_density_check(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// Subsets of {0..n-1} to sweep: all of them when n <= exhaustive_limit,
/// otherwise ∅, the full set, all singletons and `samples` seeded draws.
std::vector<PointSet> subsets_to_check(std::size_t n, std::size_t exhaustive_limit, std::uint64_t seed,
                                       std::size_t samples, bool& exhaustive);

std::string format_points(const Graph& g, std::span<const SpecPoint> universe, const PointSet& x);

} // namespace ckspectra
