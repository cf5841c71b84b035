#include "ckspectra/tails.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace ckspectra {

MtReport mt_report(const Graph& g, VertexSet w, DirectedReading reading) {
    g.check(w);
    MtReport r;
    for (Vertex x : w) {
        const VertexSet outside = g.ancestors(x) - w;
        if (!outside.empty()) {
            r.mt1 = false;
            r.mt1_witness = std::pair{outside.front(), x};
            break;
        }
    }
    for (Vertex x : w) {
        if (g.kind(x) == VertexKind::Regular && !g.successors(x).intersects(w)) {
            r.mt2 = false;
            r.mt2_witness = x;
            break;
        }
    }
    const DirectednessResult directed = is_downward_directed(g, w, reading);
    r.mt3 = directed.directed;
    r.mt3_witness = directed.witness;
    const CspResult csp = has_csp(g, w);
    r.mt4 = csp.holds;
    r.mt4_witness = csp.witness;
    return r;
}

// ---------------------------------------------------------------- boundary paths

namespace {

Vertex walk_chain(const Graph& g, Vertex start, const std::vector<std::size_t>& edges, VertexSet& trace) {
    Vertex at = start;
    for (std::size_t e : edges) {
        if (e >= g.bundles().size())
            throw InvalidPath("bundle index " + std::to_string(e) + " out of range");
        const Bundle& b = g.bundle(e);
        if (b.src != at)
            throw InvalidPath("edges do not compose at bundle " + std::to_string(e));
        at = b.dst;
        trace.insert(at);
    }
    return at;
}

std::string edge_name(const Graph& g, std::size_t e) {
    const Bundle& b = g.bundle(e);
    if (b.label)
        return *b.label;
    return g.name(b.src) + "->" + g.name(b.dst);
}

} // namespace

BoundaryPath BoundaryPath::finite(const Graph& g, Vertex start, std::vector<std::size_t> edges) {
    BoundaryPath p(start, std::move(edges), {});
    p.validate(g);
    p.trace_.insert(start);
    walk_chain(g, start, p.prefix_, p.trace_);
    return p;
}

BoundaryPath BoundaryPath::eventually_periodic(const Graph& g, Vertex start, std::vector<std::size_t> prefix,
                                               std::vector<std::size_t> cycle) {
    if (cycle.empty())
        throw InvalidPath("eventually periodic path needs a nonempty cycle");
    BoundaryPath p(start, std::move(prefix), std::move(cycle));
    p.validate(g);
    p.trace_.insert(start);
    const Vertex join = walk_chain(g, start, p.prefix_, p.trace_);
    walk_chain(g, join, p.cycle_, p.trace_);
    return p;
}

void BoundaryPath::validate(const Graph& g) const {
    if (start_.index >= g.vertex_count())
        throw InvalidPath("path starts outside the graph");
    VertexSet scratch;
    const Vertex end = walk_chain(g, start_, prefix_, scratch);
    if (cycle_.empty()) {
        if (!g.is_singular(end))
            throw InvalidPath("finite boundary path must end at a singular vertex, not '" + g.name(end) + "'");
        return;
    }
    if (walk_chain(g, end, cycle_, scratch) != end)
        throw InvalidPath("periodic part does not close up at '" + g.name(end) + "'");
}

std::string BoundaryPath::describe(const Graph& g) const {
    std::ostringstream os;
    os << g.name(start_);
    if (prefix_.empty() && cycle_.empty())
        return os.str();
    os << ':';
    for (std::size_t e : prefix_)
        os << ' ' << edge_name(g, e);
    if (!cycle_.empty()) {
        os << " (";
        for (std::size_t i = 0; i < cycle_.size(); ++i)
            os << (i ? " " : "") << edge_name(g, cycle_[i]);
        os << ")...";
    }
    return os.str();
}

VertexSet tail_of_boundary(const Graph& g, const BoundaryPath& alpha) {
    alpha.validate(g);
    return upward_set(g, alpha.vertex_trace());
}

// ---------------------------------------------------------------- enumeration

namespace {

bool satisfies_mt1(const Graph& g, VertexSet w) {
    for (Vertex x : w)
        if (!g.ancestors(x).is_subset_of(w))
            return false;
    return true;
}

bool satisfies_mt2(const Graph& g, VertexSet w) {
    for (Vertex x : w)
        if (g.kind(x) == VertexKind::Regular && !g.successors(x).intersects(w))
            return false;
    return true;
}

template <typename Accept>
std::vector<VertexSet> scan_subsets(const Graph& g, std::size_t limit, Accept accept) {
    require_enumerable(g, limit);
    std::vector<VertexSet> out;
    const std::uint64_t top = g.all_vertices().bits();
    for (std::uint64_t bits = 1; bits != 0 && bits <= top; ++bits) {
        const VertexSet w = VertexSet::from_bits(bits);
        if (satisfies_mt1(g, w) && satisfies_mt2(g, w) && is_downward_directed(g, w).directed && accept(w))
            out.push_back(w);
    }
    return out;
}

} // namespace

std::vector<VertexSet> maximal_tails(const Graph& g, std::size_t limit) {
    return scan_subsets(g, limit, [&](VertexSet w) { return has_csp(g, w).holds; });
}

std::vector<VertexSet> clusters(const Graph& g, std::size_t limit) {
    return scan_subsets(g, limit, [](VertexSet) { return true; });
}

bool is_union_of_maximal_tails(const Graph& g, VertexSet w) {
    g.check(w);
    return satisfies_mt1(g, w) && satisfies_mt2(g, w);
}

namespace {

// Shortest path from `from` to `to` as bundle indices; BFS in bundle order.
std::vector<std::size_t> shortest_path(const Graph& g, Vertex from, Vertex to) {
    if (from == to)
        return {};
    std::vector<std::optional<std::size_t>> via(g.vertex_count());
    VertexSet seen{from};
    std::deque<Vertex> queue{from};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (std::size_t e : g.out_bundles(u)) {
            const Vertex d = g.bundle(e).dst;
            if (seen.contains(d))
                continue;
            seen.insert(d);
            via[d.index] = e;
            if (d == to) {
                std::vector<std::size_t> path;
                for (Vertex at = to; at != from; at = g.bundle(*via[at.index]).src)
                    path.push_back(*via[at.index]);
                return {path.rbegin(), path.rend()};
            }
            queue.push_back(d);
        }
    }
    throw Error("no path between requested vertices");
}

} // namespace

BoundaryPath realize_as_tail(const Graph& g, VertexSet w) {
    g.check(w);
    if (w.empty())
        throw NotAMaximalTail("the empty set is not a maximal tail");
    const MtReport report = mt_report(g, w);
    if (!report.maximal_tail())
        throw NotAMaximalTail(format_set(g, w) + " fails the maximal-tail axioms");

    // Descend through a chain v1 >= v2 >= ... inside W, folding each separating
    // vertex x_k in by requiring x_k >= v_{k+1}.
    const Vertex start = w.front();
    Vertex at = start;
    std::vector<std::size_t> edges;
    for (Vertex x : report.mt4_witness) {
        const VertexSet below = g.descendants(x) & g.descendants(at) & w;
        const Vertex next = below.front();
        for (std::size_t e : shortest_path(g, at, next))
            edges.push_back(e);
        at = next;
    }

    // Extend through W until a singular vertex or a repeat.
    std::map<std::uint32_t, std::size_t> first_seen;
    first_seen[at.index] = edges.size();
    while (!g.is_singular(at)) {
        std::optional<std::size_t> step;
        for (std::size_t e : g.out_bundles(at)) {
            if (w.contains(g.bundle(e).dst)) {
                step = e;
                break;
            }
        }
        edges.push_back(*step);
        at = g.bundle(*step).dst;
        if (auto it = first_seen.find(at.index); it != first_seen.end()) {
            std::vector<std::size_t> prefix(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(it->second));
            std::vector<std::size_t> cycle(edges.begin() + static_cast<std::ptrdiff_t>(it->second), edges.end());
            return BoundaryPath::eventually_periodic(g, start, std::move(prefix), std::move(cycle));
        }
        first_seen[at.index] = edges.size();
    }
    return BoundaryPath::finite(g, start, std::move(edges));
}

Multiplicity return_edge_count(const Graph& g, Vertex v) {
    g.check(v);
    return g.edges_into(v, g.ancestors(v));
}

VertexSet finite_return_vertices(const Graph& g) {
    VertexSet fr;
    for (Vertex v : g.all_vertices()) {
        if (g.kind(v) != VertexKind::InfiniteEmitter)
            continue;
        const Multiplicity back = return_edge_count(g, v);
        if (!back.is_zero() && back.is_finite())
            fr.insert(v);
    }
    return fr;
}

} // namespace ckspectra
