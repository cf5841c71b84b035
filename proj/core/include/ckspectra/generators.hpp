#pragma once

#include "ckspectra/graph.hpp"
#include "ckspectra/ideals.hpp"
#include "ckspectra/topology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ckspectra {

/// An expected value together with a short note on where it comes from.
template <typename T>
struct Cited {
    T value;
    std::string source;
};

/// Facts the seven-vertex fixture is known to exhibit. Sets are listed in the
/// order they are conventionally numbered (T_1..T_4, H_i = E^0 \ T_i).
struct FixtureFacts {
    Cited<std::vector<VertexSet>> maximal_tails;
    Cited<std::vector<VertexSet>> hereditary;
    Cited<std::vector<VertexSet>> breaking;
    Cited<VertexSet> finite_return;
    /// Bundle indices of the edges out of the finite-return vertex that can return to it.
    Cited<std::vector<std::size_t>> return_bundles;
    Cited<std::vector<AdmissiblePair>> primitive_pairs;
    /// The Primitive2b pair and its distinguished vertex.
    Cited<std::pair<AdmissiblePair, Vertex>> gap_pair;
    /// Closure of the singleton {T_4}, as ideals and as graph-side points.
    Cited<std::vector<AdmissiblePair>> closure_of_t4;
    Cited<std::vector<SpecPoint>> closure_points_of_t4;
};

struct GraphFixture {
    std::string name;
    Graph graph;
    FixtureFacts expected;
    std::string notes;
};

/// Seven-vertex graph t..z with one finite-return vertex (x) and four maximal tails.
GraphFixture running_example();

/// Single vertex with one loop; fails Condition (K).
Graph single_loop_graph();

/// Sinks a and c fed by b (a <- b -> c): E^0 is a union of maximal tails but not a cluster.
Graph three_vertex_graph();

/// Largest ground set accepted by ea_graph (2^4 - 1 = 15 vertices).
inline constexpr std::size_t kMaxGroundSet = 4;

/// Vertex v_A for every nonempty A ⊆ {0..k-1}, index = bitmask(A) - 1, named
/// "v_" followed by the member names joined by '_'. One bundle v_A -> v_B of
/// multiplicity m for each A ⊊ B. Throws SizeLimitExceeded when k > 4.
Graph ea_graph(const std::vector<std::string>& ground, Multiplicity m);

/// Subset-of-X closure model. Points are the nonempty subsets of X as
/// bitmasks, ascending; point i is mask i + 1.
class PXModel {
public:
    /// Throws SizeLimitExceeded when |X| > 4.
    explicit PXModel(std::vector<std::string> ground);

    const std::vector<std::string>& ground() const noexcept { return ground_; }
    std::size_t point_count() const noexcept { return (std::size_t{1} << ground_.size()) - 1; }
    static std::uint32_t mask_of(std::size_t point) noexcept { return static_cast<std::uint32_t>(point + 1); }

    std::string describe(std::size_t point) const;

private:
    std::vector<std::string> ground_;
};

/// T is in the closure iff every nonempty A ⊆ T lies inside some S in the family.
/// Evaluated literally over all subsets A.
PointSet px_closure(const PXModel& model, const PointSet& family);

/// γ_S = {v_A : ∅ ≠ A ⊆ S} as a vertex set of ea_graph(ground, m).
VertexSet phi(const PXModel& model, std::size_t point);

struct RandomGraphOptions {
    std::size_t vertices = 6;
    double density = 0.3;
    double omega_prob = 0.2;
    /// Chance that a finite bundle gets multiplicity 2 instead of 1.
    double double_prob = 0.1;
    /// When false, vertices with exactly one simple cycle are left alone (negative controls).
    bool repair = true;
};

/// Seeded graph on vertices v0..v{n-1}. Each ordered pair (loops included)
/// gets a bundle with probability `density`. After repair, Condition (K) holds.
Graph random_condition_k_graph(std::uint64_t seed, const RandomGraphOptions& options);
Graph random_condition_k_graph(std::uint64_t seed, std::size_t n, double density, double omega_prob);

} // namespace ckspectra
