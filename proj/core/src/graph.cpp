#include "ckspectra/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ckspectra {

// ---------------------------------------------------------------- builder

Vertex GraphBuilder::add_vertex(std::string name) {
    if (name.empty())
        throw Error("vertex name must be nonempty");
    if (find(name))
        throw Error("duplicate vertex '" + name + "'");
    if (names_.size() >= kMaxVertices)
        throw SizeLimitExceeded(names_.size() + 1, kMaxVertices);
    names_.push_back(std::move(name));
    return Vertex{static_cast<std::uint32_t>(names_.size() - 1)};
}

void GraphBuilder::add_bundle(Vertex src, Vertex dst, Multiplicity mult, std::optional<std::string> label) {
    if (src.index >= names_.size() || dst.index >= names_.size())
        throw UnknownVertex("bundle endpoint out of range");
    if (mult.is_zero())
        throw Error("bundle multiplicity must be positive");
    if (label) {
        if (label->empty())
            throw Error("bundle label must be nonempty");
        for (const Bundle& b : bundles_)
            if (b.label == label)
                throw Error("duplicate bundle label '" + *label + "'");
        bundles_.push_back(Bundle{std::move(label), src, dst, mult});
        return;
    }
    for (Bundle& b : bundles_) {
        if (!b.label && b.src == src && b.dst == dst) {
            b.mult += mult;
            return;
        }
    }
    bundles_.push_back(Bundle{std::nullopt, src, dst, mult});
}

void GraphBuilder::add_bundle(std::string_view src, std::string_view dst, Multiplicity mult,
                              std::optional<std::string> label) {
    auto s = find(src);
    auto d = find(dst);
    if (!s)
        throw UnknownVertex("unknown vertex '" + std::string(src) + "'");
    if (!d)
        throw UnknownVertex("unknown vertex '" + std::string(dst) + "'");
    add_bundle(*s, *d, mult, std::move(label));
}

std::optional<Vertex> GraphBuilder::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return Vertex{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

Graph GraphBuilder::build() && { return Graph(std::move(names_), std::move(bundles_)); }
Graph GraphBuilder::build() const& { return Graph(names_, bundles_); }

// ---------------------------------------------------------------- graph

Graph::Graph(std::vector<std::string> names, std::vector<Bundle> bundles)
    : names_(std::move(names)), bundles_(std::move(bundles)) {
    const std::size_t n = names_.size();
    out_.resize(n);
    in_.resize(n);
    out_mult_.assign(n, Multiplicity{0});
    succ_.resize(n);
    pred_.resize(n);
    for (std::size_t i = 0; i < bundles_.size(); ++i) {
        const Bundle& b = bundles_[i];
        out_[b.src.index].push_back(i);
        in_[b.dst.index].push_back(i);
        out_mult_[b.src.index] += b.mult;
        succ_[b.src.index].insert(b.dst);
        pred_[b.dst.index].insert(b.src);
    }

    desc_.resize(n);
    anc_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        VertexSet seen{Vertex{i}};
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex u : frontier)
                next |= succ_[u.index];
            frontier = next - seen;
            seen |= next;
        }
        desc_[i] = seen;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (Vertex w : desc_[i])
            anc_[w.index].insert(Vertex{i});
}

const std::string& Graph::name(Vertex v) const {
    check(v);
    return names_[v.index];
}

std::optional<Vertex> Graph::find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return Vertex{static_cast<std::uint32_t>(it - names_.begin())};
}

Vertex Graph::vertex(std::string_view name) const {
    if (auto v = find(name))
        return *v;
    throw UnknownVertex("unknown vertex '" + std::string(name) + "'");
}

void Graph::check(Vertex v) const {
    if (v.index >= names_.size())
        throw UnknownVertex("vertex index " + std::to_string(v.index) + " out of range");
}

void Graph::check(VertexSet s) const {
    if (!s.is_subset_of(all_vertices()))
        throw UnknownVertex("vertex set mentions vertices outside the graph");
}

VertexKind Graph::kind(Vertex v) const {
    const Multiplicity m = out_mult_.at(v.index);
    if (m.is_zero())
        return VertexKind::Sink;
    if (m.is_omega())
        return VertexKind::InfiniteEmitter;
    return VertexKind::Regular;
}

Multiplicity Graph::edges_into(Vertex v, VertexSet targets) const {
    Multiplicity total{0};
    for (std::size_t i : out_.at(v.index))
        if (targets.contains(bundles_[i].dst))
            total += bundles_[i].mult;
    return total;
}

void require_enumerable(const Graph& g, std::size_t limit) {
    if (g.vertex_count() > limit)
        throw SizeLimitExceeded(g.vertex_count(), limit);
}

std::string format_set(const Graph& g, VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first)
            os << ", ";
        first = false;
        os << g.name(v);
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- predicates

VertexKind VertexClasses::kind(Vertex v) const {
    if (sinks.contains(v))
        return VertexKind::Sink;
    if (infinite_emitters.contains(v))
        return VertexKind::InfiniteEmitter;
    return VertexKind::Regular;
}

VertexClasses classify_vertices(const Graph& g) {
    VertexClasses c;
    for (Vertex v : g.all_vertices()) {
        switch (g.kind(v)) {
        case VertexKind::Sink: c.sinks.insert(v); break;
        case VertexKind::InfiniteEmitter: c.infinite_emitters.insert(v); break;
        case VertexKind::Regular: c.regular.insert(v); break;
        }
    }
    return c;
}

bool reaches(const Graph& g, Vertex u, Vertex v) {
    g.check(u);
    g.check(v);
    return g.descendants(u).contains(v);
}

VertexSet upward_set(const Graph& g, VertexSet s) {
    g.check(s);
    VertexSet up;
    for (Vertex v : s)
        up |= g.ancestors(v);
    return up;
}

DirectednessResult is_downward_directed(const Graph& g, VertexSet w, DirectedReading reading) {
    g.check(w);
    const VertexSet scope = reading == DirectedReading::Within ? w : g.all_vertices();
    for (Vertex a : w) {
        for (Vertex b : w) {
            if (b < a)
                continue;
            if (!(g.descendants(a) & g.descendants(b) & scope).empty())
                continue;
            return DirectednessResult{false, std::pair{a, b}};
        }
    }
    return {};
}

CspResult has_csp(const Graph& g, VertexSet w) {
    g.check(w);
    VertexSet witness = w;
    for (Vertex s : w) {
        VertexSet trial = witness;
        trial.erase(s);
        if (w.is_subset_of(upward_set(g, trial)))
            witness = trial;
    }
    return CspResult{true, witness};
}

namespace {

// Vertices w != v lying on some walk v -> ... -> v that avoids v internally.
VertexSet first_return_interior(const Graph& g, Vertex v) {
    auto sweep = [&](auto step) {
        VertexSet seen;
        VertexSet frontier = step(v);
        frontier.erase(v);
        while (!frontier.empty()) {
            seen |= frontier;
            VertexSet next;
            for (Vertex u : frontier)
                next |= step(u);
            next.erase(v);
            frontier = next - seen;
        }
        return seen;
    };
    const VertexSet forward = sweep([&](Vertex u) { return g.successors(u); });
    const VertexSet backward = sweep([&](Vertex u) { return g.predecessors(u); });
    return forward & backward;
}

bool has_cycle_within(const Graph& g, VertexSet w) {
    // Kahn's algorithm on the induced subgraph.
    std::vector<int> indeg(g.vertex_count(), 0);
    for (Vertex u : w)
        indeg[u.index] = static_cast<int>((g.predecessors(u) & w).size());
    std::vector<Vertex> ready;
    for (Vertex u : w)
        if (indeg[u.index] == 0)
            ready.push_back(u);
    std::size_t removed = 0;
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex s : g.successors(u) & w)
            if (--indeg[s.index] == 0)
                ready.push_back(s);
    }
    return removed != w.size();
}

std::vector<Vertex> topological_order(const Graph& g, VertexSet w) {
    std::vector<int> indeg(g.vertex_count(), 0);
    for (Vertex u : w)
        indeg[u.index] = static_cast<int>((g.predecessors(u) & w).size());
    std::vector<Vertex> order;
    std::vector<Vertex> ready;
    for (Vertex u : w)
        if (indeg[u.index] == 0)
            ready.push_back(u);
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        order.push_back(u);
        for (Vertex s : g.successors(u) & w)
            if (--indeg[s.index] == 0)
                ready.push_back(s);
    }
    return order;
}

} // namespace

CycleCountClass simple_cycle_class(const Graph& g, Vertex v) {
    g.check(v);
    const VertexSet interior = first_return_interior(g, v);
    VertexSet route = interior;
    route.insert(v);

    bool any_return = false;
    for (std::size_t i : g.in_bundles(v)) {
        if (route.contains(g.bundle(i).src))
            any_return = true;
    }
    if (!any_return)
        return CycleCountClass::Zero;
    if (has_cycle_within(g, interior))
        return CycleCountClass::TwoOrMore;
    for (const Bundle& b : g.bundles())
        if (route.contains(b.src) && route.contains(b.dst) && b.mult > Multiplicity{1})
            return CycleCountClass::TwoOrMore;

    // Interior is acyclic and every route bundle is a single edge: count walks
    // by dynamic programming, saturating at 2.
    std::vector<unsigned> walks(g.vertex_count(), 0);
    auto add = [](unsigned a, unsigned b) { return std::min(2U, a + b); };
    auto origin_count = [&](Vertex src) { return src == v ? 1U : walks[src.index]; };
    for (Vertex u : topological_order(g, interior)) {
        for (std::size_t i : g.in_bundles(u)) {
            const Vertex src = g.bundle(i).src;
            if (route.contains(src))
                walks[u.index] = add(walks[u.index], origin_count(src));
        }
    }
    unsigned total = 0;
    for (std::size_t i : g.in_bundles(v)) {
        const Vertex src = g.bundle(i).src;
        if (route.contains(src))
            total = add(total, origin_count(src));
    }
    return total >= 2 ? CycleCountClass::TwoOrMore : CycleCountClass::One;
}

std::optional<std::vector<std::size_t>> unique_simple_cycle(const Graph& g, Vertex v) {
    if (simple_cycle_class(g, v) != CycleCountClass::One)
        return std::nullopt;
    // With exactly one first-return walk, every route bundle lies on it, so the
    // route bundle leaving each visited vertex is unique.
    VertexSet route = first_return_interior(g, v);
    route.insert(v);
    std::vector<std::size_t> walk;
    Vertex at = v;
    do {
        std::size_t next = g.bundles().size();
        for (std::size_t i : g.out_bundles(at)) {
            if (route.contains(g.bundle(i).dst)) {
                next = i;
                break;
            }
        }
        walk.push_back(next);
        at = g.bundle(next).dst;
    } while (at != v);
    return walk;
}

ConditionKResult condition_K(const Graph& g) {
    for (Vertex v : g.all_vertices())
        if (simple_cycle_class(g, v) == CycleCountClass::One)
            return ConditionKResult{false, v};
    return {};
}

ConditionLResult condition_L(const Graph& g) {
    // An exitless cycle lives entirely on vertices emitting exactly one edge.
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<Vertex>> next(n);
    for (Vertex v : g.all_vertices()) {
        if (g.out_multiplicity(v) == Multiplicity{1})
            next[v.index] = g.bundle(g.out_bundles(v).front()).dst;
    }
    // 0 = unvisited, 1 = on current trail, 2 = done
    std::vector<int> state(n, 0);
    for (std::uint32_t start = 0; start < n; ++start) {
        std::vector<Vertex> trail;
        std::optional<Vertex> at = Vertex{start};
        while (at && state[at->index] == 0) {
            state[at->index] = 1;
            trail.push_back(*at);
            at = next[at->index];
        }
        if (at && state[at->index] == 1) {
            auto it = std::find(trail.begin(), trail.end(), *at);
            return ConditionLResult{false, std::vector<Vertex>(it, trail.end())};
        }
        for (Vertex v : trail)
            state[v.index] = 2;
    }
    return {};
}

const char* to_string(VertexKind k) {
    switch (k) {
    case VertexKind::Sink: return "sink";
    case VertexKind::InfiniteEmitter: return "infinite-emitter";
    case VertexKind::Regular: return "regular";
    }
    return "?";
}

const char* to_string(CycleCountClass c) {
    switch (c) {
    case CycleCountClass::Zero: return "zero";
    case CycleCountClass::One: return "one";
    case CycleCountClass::TwoOrMore: return "two-or-more";
    }
    return "?";
}

} // namespace ckspectra
