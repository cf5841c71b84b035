#pragma once

// Brute-force reference computations, written directly from the definitions
// and independent of the library's own algorithms.

#include <ckspectra/graph.hpp>
#include <ckspectra/ideals.hpp>
#include <ckspectra/topology.hpp>

#include <vector>

namespace oracle {

using namespace ckspectra;

/// reach[u][v] iff a (possibly empty) path u -> v, by repeated boolean matrix squaring.
std::vector<std::vector<bool>> reach_matrix(const Graph& g);

VertexSet up(const Graph& g, const std::vector<std::vector<bool>>& reach, VertexSet s);

/// First-return walks at v counted edge by edge up to length 2n, saturated at 2.
CycleCountClass cycle_class(const Graph& g, Vertex v);

bool condition_k(const Graph& g);
/// Some cycle has all its vertices with out-degree one inside the cycle.
bool condition_l(const Graph& g);

/// {U(v) : v singular or on a cycle}: tails of boundary paths, ascending.
std::vector<VertexSet> tails_from_paths(const Graph& g);

bool mt1(const Graph& g, VertexSet w);
bool mt2(const Graph& g, VertexSet w);
bool mt3(const Graph& g, VertexSet w);

bool hereditary(const Graph& g, VertexSet h);
bool saturated(const Graph& g, VertexSet h);
VertexSet breaking(const Graph& g, VertexSet h);

/// Every (H, S) with H saturated hereditary and S ⊆ B_H, by a full 2^n x 2^n scan.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g);

/// Ideal containment from the pair criterion.
bool leq(const AdmissiblePair& p, const AdmissiblePair& q);

/// Points whose ideal contains the intersection of the ideals of X, by pairwise criterion.
PointSet ideal_closure(const Graph& g, const std::vector<SpecPoint>& pts, const PointSet& x);

/// Number of walks a -> b of length exactly k with edge multiplicities, saturated at `cap`.
std::uint64_t count_walks(const Graph& g, Vertex a, Vertex b, std::size_t k, std::uint64_t cap);

} // namespace oracle
