#pragma once

#include "ckspectra/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ckspectra {

/// Outcome of the four maximal-tail axioms on a vertex set W:
///   MT1  v >= w with w in W forces v in W
///   MT2  every regular vertex of W emits an edge into W
///   MT3  W is downward directed
///   MT4  W has the Countable Separation Property
struct MtReport {
    bool mt1 = true;
    bool mt2 = true;
    bool mt3 = true;
    bool mt4 = true;
    /// (v, w) with v >= w, w in W, v not in W.
    std::optional<std::pair<Vertex, Vertex>> mt1_witness;
    /// Regular vertex of W with no edge back into W.
    std::optional<Vertex> mt2_witness;
    /// Pair of W without a common lower bound.
    std::optional<std::pair<Vertex, Vertex>> mt3_witness;
    /// Separating set found for MT4.
    VertexSet mt4_witness;

    bool union_of_tails() const noexcept { return mt1 && mt2; }
    bool cluster() const noexcept { return mt1 && mt2 && mt3; }
    bool maximal_tail() const noexcept { return mt1 && mt2 && mt3 && mt4; }
};

MtReport mt_report(const Graph& g, VertexSet w, DirectedReading reading = DirectedReading::Within);

/// Element of the boundary-path space, in finitely representable form.
///
/// A finite path is `start` followed by `prefix` and must end at a singular
/// vertex (the empty path at a singular vertex is allowed). An eventually
/// periodic path is `prefix` followed by `cycle` repeated forever; the cycle
/// must be closed at the end of the prefix. Edges are bundle indices.
class BoundaryPath {
public:
    enum class Kind { FinitePath, EventuallyPeriodic };

    /// Throws InvalidPath.
    static BoundaryPath finite(const Graph& g, Vertex start, std::vector<std::size_t> edges);
    /// Throws InvalidPath.
    static BoundaryPath eventually_periodic(const Graph& g, Vertex start, std::vector<std::size_t> prefix,
                                            std::vector<std::size_t> cycle);

    Kind kind() const noexcept { return cycle_.empty() ? Kind::FinitePath : Kind::EventuallyPeriodic; }
    Vertex start() const noexcept { return start_; }
    const std::vector<std::size_t>& prefix() const noexcept { return prefix_; }
    const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }
    /// Set of vertices the path visits.
    VertexSet vertex_trace() const noexcept { return trace_; }

    /// Checks the path against `g` (which may differ from the graph used to build it). Throws InvalidPath.
    void validate(const Graph& g) const;

    /// e.g. "x" for the empty path at x, "u->v x->x (f)..." style rendering.
    std::string describe(const Graph& g) const;

    friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;

private:
    BoundaryPath(Vertex start, std::vector<std::size_t> prefix, std::vector<std::size_t> cycle)
        : start_(start), prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

    Vertex start_;
    std::vector<std::size_t> prefix_;
    std::vector<std::size_t> cycle_;
    VertexSet trace_;
};

/// T_alpha = U(alpha^0). Throws InvalidPath.
VertexSet tail_of_boundary(const Graph& g, const BoundaryPath& alpha);

/// Nonempty vertex sets satisfying MT1-MT4, ascending by bitmask. Throws SizeLimitExceeded.
std::vector<VertexSet> maximal_tails(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// Nonempty vertex sets satisfying MT1-MT3, ascending by bitmask. Throws SizeLimitExceeded.
std::vector<VertexSet> clusters(const Graph& g, std::size_t limit = kDefaultEnumerationLimit);

/// MT1 and MT2. The empty set counts as the empty union.
bool is_union_of_maximal_tails(const Graph& g, VertexSet w);

/// Builds a boundary path whose tail is W. Throws NotAMaximalTail when W is
/// empty or fails an axiom.
BoundaryPath realize_as_tail(const Graph& g, VertexSet w);

/// Saturating count of edges from v whose range can reach v.
Multiplicity return_edge_count(const Graph& g, Vertex v);

/// Infinite emitters whose return-edge count is finite and nonzero.
VertexSet finite_return_vertices(const Graph& g);

} // namespace ckspectra
