#pragma once

#include "ckspectra/errors.hpp"
#include "ckspectra/multiplicity.hpp"
#include "ckspectra/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ckspectra {

/// Default vertex bound for operations that scan all 2^n vertex subsets.
inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// A family of parallel edges src -> dst. An unlabeled bundle stands for
/// `mult` anonymous edges; a labeled one is how individually named edges are
/// kept apart.
struct Bundle {
    std::optional<std::string> label;
    Vertex src;
    Vertex dst;
    Multiplicity mult{1};

    friend bool operator==(const Bundle&, const Bundle&) = default;
};

enum class VertexKind { Sink, InfiniteEmitter, Regular };

class Graph;

/// Accumulates vertices and bundles; `build()` validates and freezes them.
class GraphBuilder {
public:
    /// Throws Error on a duplicate name.
    Vertex add_vertex(std::string name);

    /// Unlabeled bundles on an already-used ordered pair merge into the first
    /// one by saturating addition. Throws Error on a zero multiplicity,
    /// UnknownVertex on a bad endpoint, and Error on a duplicate label.
    void add_bundle(Vertex src, Vertex dst, Multiplicity mult = Multiplicity{1},
                    std::optional<std::string> label = std::nullopt);
    void add_bundle(std::string_view src, std::string_view dst, Multiplicity mult = Multiplicity{1},
                    std::optional<std::string> label = std::nullopt);

    std::optional<Vertex> find(std::string_view name) const;
    std::size_t vertex_count() const noexcept { return names_.size(); }

    Graph build() &&;
    Graph build() const&;

private:
    std::vector<std::string> names_;
    std::vector<Bundle> bundles_;
};

/// Immutable graph with finitely many vertices and bundle-encoded edges.
/// Reachability is precomputed at construction.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return names_.size(); }
    VertexSet all_vertices() const noexcept { return VertexSet::first_n(names_.size()); }

    const std::string& name(Vertex v) const;
    std::span<const std::string> names() const noexcept { return names_; }

    std::optional<Vertex> find(std::string_view name) const;
    /// Throws UnknownVertex.
    Vertex vertex(std::string_view name) const;
    /// Throws UnknownVertex if `v` is out of range.
    void check(Vertex v) const;
    void check(VertexSet s) const;

    std::span<const Bundle> bundles() const noexcept { return bundles_; }
    const Bundle& bundle(std::size_t i) const { return bundles_.at(i); }
    /// Indices into bundles() of the bundles leaving `v`, in bundle order.
    std::span<const std::size_t> out_bundles(Vertex v) const { return out_.at(v.index); }
    std::span<const std::size_t> in_bundles(Vertex v) const { return in_.at(v.index); }

    Multiplicity out_multiplicity(Vertex v) const { return out_mult_.at(v.index); }
    VertexKind kind(Vertex v) const;
    bool is_singular(Vertex v) const { return kind(v) != VertexKind::Regular; }

    /// Direct successors / predecessors.
    VertexSet successors(Vertex v) const { return succ_.at(v.index); }
    VertexSet predecessors(Vertex v) const { return pred_.at(v.index); }

    /// {w : v >= w}, including v itself.
    VertexSet descendants(Vertex v) const { return desc_.at(v.index); }
    /// {w : w >= v} = U(v), including v itself.
    VertexSet ancestors(Vertex v) const { return anc_.at(v.index); }

    /// Saturating sum of the multiplicities of bundles from `v` whose range lies in `targets`.
    Multiplicity edges_into(Vertex v, VertexSet targets) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.bundles_ == b.bundles_;
    }

private:
    friend class GraphBuilder;
    Graph(std::vector<std::string> names, std::vector<Bundle> bundles);

    std::vector<std::string> names_;
    std::vector<Bundle> bundles_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
    std::vector<Multiplicity> out_mult_;
    std::vector<VertexSet> succ_;
    std::vector<VertexSet> pred_;
    std::vector<VertexSet> desc_;
    std::vector<VertexSet> anc_;
};

/// Throws SizeLimitExceeded unless the graph is small enough for 2^n scans.
void require_enumerable(const Graph& g, std::size_t limit);

/// "{a, b, c}" in declaration order.
std::string format_set(const Graph& g, VertexSet s);

struct VertexClasses {
    VertexSet sinks;
    VertexSet infinite_emitters;
    VertexSet regular;

    VertexSet singular() const { return sinks | infinite_emitters; }
    VertexKind kind(Vertex v) const;
};

VertexClasses classify_vertices(const Graph& g);

/// True iff there is a (possibly empty) path from u to v. Throws UnknownVertex.
bool reaches(const Graph& g, Vertex u, Vertex v);

/// U(S) = {v : v >= s for some s in S}. Throws UnknownVertex.
VertexSet upward_set(const Graph& g, VertexSet s);

/// Where the common lower bound of a pair must live.
enum class DirectedReading {
    Within,  ///< w must lie in W itself (default, matches MT3 on clusters)
    Ambient, ///< w may be any vertex of the graph
};

struct DirectednessResult {
    bool directed = true;
    std::optional<std::pair<Vertex, Vertex>> witness;

    explicit operator bool() const noexcept { return directed; }
};

DirectednessResult is_downward_directed(const Graph& g, VertexSet w,
                                        DirectedReading reading = DirectedReading::Within);

struct CspResult {
    bool holds = true;
    /// Inclusion-minimal S ⊆ W with W ⊆ U(S), found by greedy removal.
    VertexSet witness;
};

/// Countable Separation Property relative to W; always true for finite vertex sets.
CspResult has_csp(const Graph& g, VertexSet w);

enum class CycleCountClass { Zero, One, TwoOrMore };

/// Number of simple cycles based at v (parallel edges counted separately),
/// saturated at two. Throws UnknownVertex.
CycleCountClass simple_cycle_class(const Graph& g, Vertex v);

/// The first-return walk at v as bundle indices, if v has exactly one simple cycle.
std::optional<std::vector<std::size_t>> unique_simple_cycle(const Graph& g, Vertex v);

struct ConditionKResult {
    bool holds = true;
    std::optional<Vertex> witness;

    explicit operator bool() const noexcept { return holds; }
};

ConditionKResult condition_K(const Graph& g);

struct ConditionLResult {
    bool holds = true;
    /// Vertices of an exitless cycle, in cycle order.
    std::vector<Vertex> cycle;

    explicit operator bool() const noexcept { return holds; }
};

ConditionLResult condition_L(const Graph& g);

const char* to_string(VertexKind k);
const char* to_string(CycleCountClass c);

} // namespace ckspectra
