#include "commands.hpp"

#include <ckspectra/ideals.hpp>
#include <ckspectra/io.hpp>
#include <ckspectra/suite.hpp>
#include <ckspectra/tails.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ckspectra::cli {

namespace {

Json envelope(const char* command) {
    Json j;
    j["schema"] = kJsonSchema;
    j["command"] = command;
    return j;
}

void print_json(Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_text(const Graph& g, const AdmissiblePair& p) {
    return "(" + format_set(g, p.H) + ", " + format_set(g, p.S) + ")";
}

Json pair_json(const Graph& g, const AdmissiblePair& p) {
    Json j;
    j["H"] = to_json(g, p.H);
    j["S"] = to_json(g, p.S);
    return j;
}

Json class_json(const Graph& g, const IdealClass& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["prime"] = c.is_prime();
    j["primitive"] = c.is_primitive();
    j["v0"] = c.v0 ? Json(g.name(*c.v0)) : Json(nullptr);
    return j;
}

VertexSet parse_vertex_list(const Graph& g, const std::string& text) {
    VertexSet s;
    for (const std::string& name : split_names(text))
        s.insert(g.vertex(name));
    return s;
}

// Label of point i: T<k> for the k-th cluster point, the vertex name for a finite-return point.
std::string point_label(const Graph& g, std::span<const SpecPoint> pts, std::size_t i) {
    if (const auto* f = std::get_if<FrPoint>(&pts[i]))
        return g.name(f->vertex);
    std::size_t k = 0;
    for (std::size_t j = 0; j <= i; ++j)
        if (std::holds_alternative<ClusterPoint>(pts[j]))
            ++k;
    return "T" + std::to_string(k);
}

std::string point_text(const Graph& g, std::span<const SpecPoint> pts, std::size_t i) {
    return point_label(g, pts, i) + " " + describe_point(g, pts[i]);
}

std::string labels_text(const Graph& g, std::span<const SpecPoint> pts, const PointSet& x) {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = x.find_first(); i != PointSet::npos; i = x.find_next(i)) {
        out += (first ? "" : ", ") + point_label(g, pts, i);
        first = false;
    }
    return out + "]";
}

Json labels_json(const Graph& g, std::span<const SpecPoint> pts, const PointSet& x) {
    Json j = Json::array();
    for (std::size_t i = x.find_first(); i != PointSet::npos; i = x.find_next(i))
        j.push_back(point_label(g, pts, i));
    return j;
}

Json point_json(const Graph& g, std::span<const SpecPoint> pts, std::size_t i) {
    Json j;
    j["label"] = point_label(g, pts, i);
    if (const auto* c = std::get_if<ClusterPoint>(&pts[i])) {
        j["type"] = "cluster";
        j["members"] = to_json(g, c->members);
    } else {
        j["type"] = "finite-return";
        j["vertex"] = g.name(std::get<FrPoint>(pts[i]).vertex);
    }
    j["ideal"] = pair_json(g, h_map(g, pts[i]));
    return j;
}

std::size_t resolve_point(const Graph& g, std::span<const SpecPoint> pts, const std::string& token) {
    auto find = [&](const SpecPoint& p) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == p)
                return i;
        return std::nullopt;
    };
    if (token.size() > 1 && token.front() == 'T' &&
        token.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t k = std::stoul(token.substr(1));
        std::size_t seen = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (std::holds_alternative<ClusterPoint>(pts[i]) && ++seen == k)
                return i;
        if (!g.find(token))
            throw Error("no cluster point " + token + " (there are " + std::to_string(seen) + ")");
    }
    if (token.size() >= 2 && token.front() == '{' && token.back() == '}') {
        const VertexSet members = parse_vertex_list(g, token.substr(1, token.size() - 2));
        if (auto i = find(ClusterPoint{members}))
            return *i;
        throw Error(format_set(g, members) + " is not a point of this space");
    }
    std::string name = token;
    if (name.size() > 4 && name.starts_with("fr(") && name.back() == ')')
        name = name.substr(3, name.size() - 4);
    const Vertex v = g.vertex(name);
    if (auto i = find(FrPoint{v}))
        return *i;
    throw Error("'" + name + "' is not a finite-return vertex");
}

Json mt_json(const Graph& g, const MtReport& r) {
    Json j;
    j["mt1"] = r.mt1;
    j["mt2"] = r.mt2;
    j["mt3"] = r.mt3;
    j["mt4"] = r.mt4;
    j["separating_set"] = to_json(g, r.mt4_witness);
    return j;
}

} // namespace

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<std::string> split_points(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text + ",") {
        if (c == '{')
            ++depth;
        if (c == '}')
            --depth;
        if (depth == 0 && (c == ',' || std::isspace(static_cast<unsigned char>(c)))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

Graph load_graph(Context& ctx, const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << ctx.in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f)
            throw ParseError(0, 0, "a readable file at '" + path + "'");
        buf << f.rdbuf();
    }
    return parse_graph(buf.str());
}

int cmd_check(Context& ctx, const Graph& g, DirectedReading reading) {
    const ConditionKResult k = condition_K(g);
    const ConditionLResult l = condition_L(g);
    const DirectednessResult d = is_downward_directed(g, g.all_vertices(), reading);
    const CspResult csp = has_csp(g, g.all_vertices());

    if (ctx.format == Format::Json) {
        Json j = envelope("check");
        Json vs = Json::array();
        for (Vertex v : g.all_vertices()) {
            Json e;
            e["name"] = g.name(v);
            e["kind"] = to_string(g.kind(v));
            e["out_multiplicity"] = to_json(g.out_multiplicity(v));
            e["simple_cycles"] = to_string(simple_cycle_class(g, v));
            vs.push_back(std::move(e));
        }
        j["vertices"] = std::move(vs);
        j["condition_K"] = {{"holds", k.holds}, {"witness", k.witness ? Json(g.name(*k.witness)) : Json(nullptr)}};
        Json cycle = Json::array();
        for (Vertex v : l.cycle)
            cycle.push_back(g.name(v));
        j["condition_L"] = {{"holds", l.holds}, {"exitless_cycle", cycle}};
        Json dw = nullptr;
        if (d.witness)
            dw = Json::array({g.name(d.witness->first), g.name(d.witness->second)});
        j["downward_directed"] = {{"directed", d.directed}, {"witness", dw}};
        j["csp"] = {{"holds", csp.holds}, {"separating_set", to_json(g, csp.witness)}};
        print_json(ctx, j);
        return kOk;
    }

    const VertexClasses classes = classify_vertices(g);
    ctx.out << "vertices: " << g.vertex_count() << " (" << classes.sinks.size() << " sinks, "
            << classes.infinite_emitters.size() << " infinite emitters, " << classes.regular.size() << " regular)\n";
    std::size_t width = 1;
    for (const std::string& n : g.names())
        width = std::max(width, n.size());
    for (Vertex v : g.all_vertices())
        ctx.out << "  " << std::left << std::setw(static_cast<int>(width)) << g.name(v) << "  " << std::setw(16)
                << to_string(g.kind(v)) << "  out " << std::setw(4) << g.out_multiplicity(v).to_string()
                << "  simple cycles " << to_string(simple_cycle_class(g, v)) << '\n';
    ctx.out << std::right;
    ctx.out << "Condition (K): "
            << (k.holds ? std::string("holds") : "fails at '" + g.name(*k.witness) + "' (exactly one simple cycle)")
            << '\n';
    ctx.out << "Condition (L): ";
    if (l.holds) {
        ctx.out << "holds\n";
    } else {
        ctx.out << "fails on the exitless cycle";
        for (Vertex v : l.cycle)
            ctx.out << ' ' << g.name(v);
        ctx.out << '\n';
    }
    ctx.out << "downward directed: " << yes_no(d.directed);
    if (d.witness)
        ctx.out << " ('" << g.name(d.witness->first) << "' and '" << g.name(d.witness->second)
                << "' have no common lower bound)";
    ctx.out << '\n';
    ctx.out << "countable separation: " << yes_no(csp.holds) << ", separating set " << format_set(g, csp.witness)
            << '\n';
    return kOk;
}

int cmd_tails(Context& ctx, const Graph& g, DirectedReading reading) {
    const std::vector<VertexSet> tails = maximal_tails(g, ctx.limit);
    const std::vector<VertexSet> clust = clusters(g, ctx.limit);
    const VertexSet fr = finite_return_vertices(g);

    if (ctx.format == Format::Json) {
        Json j = envelope("tails");
        Json jt = Json::array();
        for (VertexSet t : tails) {
            Json e;
            e["members"] = to_json(g, t);
            e["axioms"] = mt_json(g, mt_report(g, t, reading));
            e["boundary_path"] = realize_as_tail(g, t).describe(g);
            jt.push_back(std::move(e));
        }
        j["maximal_tails"] = std::move(jt);
        Json jc = Json::array();
        for (VertexSet c : clust)
            jc.push_back(to_json(g, c));
        j["clusters"] = std::move(jc);
        Json jf = Json::array();
        for (Vertex v : fr)
            jf.push_back({{"vertex", g.name(v)}, {"returning_edges", to_json(return_edge_count(g, v))}});
        j["finite_return"] = std::move(jf);
        print_json(ctx, j);
        return kOk;
    }

    ctx.out << "maximal tails (" << tails.size() << "):\n";
    for (std::size_t i = 0; i < tails.size(); ++i) {
        ctx.out << "  T" << i + 1 << ' ' << format_set(g, tails[i]) << "  via " << realize_as_tail(g, tails[i]).describe(g)
                << '\n';
        if (ctx.verbose) {
            const MtReport r = mt_report(g, tails[i], reading);
            ctx.out << "     MT1 " << yes_no(r.mt1) << ", MT2 " << yes_no(r.mt2) << ", MT3 " << yes_no(r.mt3)
                    << ", MT4 " << yes_no(r.mt4) << " (separating set " << format_set(g, r.mt4_witness) << ")\n";
        }
    }
    ctx.out << "clusters (" << clust.size() << "):";
    if (clust == tails) {
        ctx.out << " same as the maximal tails\n";
    } else {
        ctx.out << '\n';
        for (VertexSet c : clust)
            ctx.out << "  " << format_set(g, c) << '\n';
    }
    ctx.out << "finite-return vertices (" << fr.size() << "):\n";
    for (Vertex v : fr)
        ctx.out << "  " << g.name(v) << "  returning edges " << return_edge_count(g, v).to_string() << '\n';
    if (ctx.verbose)
        ctx.out << "note: the empty set satisfies the axioms vacuously and is not listed\n";
    return kOk;
}

int cmd_ideals(Context& ctx, const Graph& g) {
    const std::vector<AdmissiblePair> pairs = admissible_pairs(g, ctx.limit);
    const ConditionKResult k = condition_K(g);
    if (!k.holds)
        ctx.err << "warning: Condition (K) fails at '" << g.name(*k.witness)
                << "'; listing gauge-invariant ideals without classification\n";

    if (ctx.format == Format::Json) {
        Json j = envelope("ideals");
        j["condition_K"] = k.holds;
        Json jp = Json::array();
        for (const AdmissiblePair& p : pairs) {
            Json e = pair_json(g, p);
            e["breaking"] = to_json(g, breaking_vertices(g, p.H));
            if (k.holds)
                e["class"] = class_json(g, classify_ideal(g, p));
            jp.push_back(std::move(e));
        }
        j["pairs"] = std::move(jp);
        print_json(ctx, j);
        return kOk;
    }

    ctx.out << "admissible pairs (" << pairs.size() << "):\n";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const AdmissiblePair& p = pairs[i];
        ctx.out << "  " << std::setw(3) << i + 1 << "  H = " << format_set(g, p.H) << "  S = " << format_set(g, p.S);
        if (k.holds) {
            const IdealClass c = classify_ideal(g, p);
            ctx.out << "  " << to_string(c.kind);
            if (c.v0)
                ctx.out << " at " << g.name(*c.v0);
            if (ctx.verbose) {
                const IdealClass q = classify_via_quotient(g, p);
                ctx.out << "  [quotient: " << to_string(q.kind) << ']';
            }
        }
        ctx.out << '\n';
    }
    return kOk;
}

int cmd_quotient(Context& ctx, const Graph& g, const QuotientOptions& o) {
    const AdmissiblePair p{parse_vertex_list(g, o.h), parse_vertex_list(g, o.s)};
    const QuotientGraph q = quotient_graph(g, p);

    if (ctx.format == Format::Json) {
        Json j = envelope("quotient");
        j["pair"] = pair_json(g, p);
        j["graph"] = to_json(q.graph);
        Json primed = Json::array();
        for (auto [v, copy] : q.primed)
            primed.push_back({{"vertex", g.name(v)}, {"copy", q.graph.name(copy)}});
        j["primed"] = std::move(primed);
        print_json(ctx, j);
        return kOk;
    }
    if (o.dot) {
        ctx.out << emit_dot(q.graph);
        return kOk;
    }
    ctx.out << "# quotient by " << pair_text(g, p) << '\n' << emit_graph(q.graph);
    return kOk;
}

int cmd_space(Context& ctx, const Graph& g, const SpaceOptions& o) {
    const SpecSpace space = make_space(g, o.side, o.kind, ctx.limit, o.rule);
    const SeparationReport sep = separation_report(space);
    const auto& pts = space.points;
    const char* name = o.kind == SpaceKind::Spec ? "Spec" : "Prim";
    std::vector<std::string> non_closed;
    for (std::size_t i : sep.non_closed_singletons)
        non_closed.push_back(point_label(g, pts, i));

    if (ctx.format == Format::Json) {
        Json j = envelope(o.kind == SpaceKind::Spec ? "spec" : "prim");
        j["side"] = o.side == Side::GraphSide ? "graph" : "ideal";
        if (o.side == Side::GraphSide)
            j["rule"] = o.rule == ClosureRule::Displayed ? "displayed" : "refined";
        Json jp = Json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Json e = point_json(g, pts, i);
            e["closure"] = labels_json(g, pts, sep.singleton_closures[i]);
            jp.push_back(std::move(e));
        }
        j["points"] = std::move(jp);
        j["non_closed_singletons"] = non_closed;
        j["t0"] = sep.t0;
        j["t1"] = sep.t1;
        j["hausdorff"] = sep.hausdorff;
        print_json(ctx, j);
        return kOk;
    }

    ctx.out << name << ": " << pts.size() << " points ("
            << (o.side == Side::IdealSide ? "ideal side"
                                          : std::string("graph side, ") +
                                                (o.rule == ClosureRule::Displayed ? "displayed" : "refined") +
                                                " closure")
            << ")\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        ctx.out << "  " << point_text(g, pts, i) << "  ideal " << pair_text(g, h_map(g, pts[i])) << '\n';
    ctx.out << "closures of singletons:\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        ctx.out << "  " << point_label(g, pts, i) << " -> " << labels_text(g, pts, sep.singleton_closures[i]) << '\n';
    ctx.out << "non-closed singletons:";
    for (const std::string& l : non_closed)
        ctx.out << ' ' << l;
    ctx.out << (non_closed.empty() ? " none\n" : "\n");
    ctx.out << "T0: " << yes_no(sep.t0) << ", T1: " << yes_no(sep.t1) << ", Hausdorff: " << yes_no(sep.hausdorff)
            << '\n';
    return kOk;
}

int cmd_closure(Context& ctx, const Graph& g, const ClosureOptions& o) {
    const std::vector<SpecPoint> pts = o.kind == SpaceKind::Spec ? spec_points(g, ctx.limit) : prim_points(g, ctx.limit);
    PointSet x(pts.size());
    for (const std::string& arg : o.points)
        for (const std::string& token : split_points(arg))
            x.set(resolve_point(g, pts, token));

    const PointSet displayed = graph_closure(g, pts, x, ClosureRule::Displayed);
    const PointSet refined = graph_closure(g, pts, x, ClosureRule::Refined);
    const PointSet ideal = ideal_closure(g, pts, x);

    if (ctx.format == Format::Json) {
        Json j = envelope("closure");
        j["space"] = o.kind == SpaceKind::Spec ? "spec" : "prim";
        j["points"] = labels_json(g, pts, x);
        j["graph_side"] = labels_json(g, pts, displayed);
        j["graph_side_refined"] = labels_json(g, pts, refined);
        j["ideal_side"] = labels_json(g, pts, ideal);
        j["agree"] = displayed == ideal;
        j["refined_agrees"] = refined == ideal;
        print_json(ctx, j);
        return kOk;
    }

    ctx.out << "X = " << labels_text(g, pts, x) << '\n';
    auto show = [&](const char* title, const PointSet& c) {
        ctx.out << title << c.count() << (c.count() == 1 ? " point\n" : " points\n");
        for (std::size_t i = c.find_first(); i != PointSet::npos; i = c.find_next(i))
            ctx.out << "  " << point_text(g, pts, i) << '\n';
    };
    show("graph side: ", displayed);
    if (ctx.verbose || refined != displayed)
        show("graph side, refined: ", refined);
    show("ideal side: ", ideal);
    ctx.out << "sides agree: " << yes_no(displayed == ideal) << '\n';
    if (refined != displayed)
        ctx.out << "refined graph side agrees: " << yes_no(refined == ideal) << '\n';
    return kOk;
}

int cmd_verify(Context& ctx, const Graph& g, const VerifyOptions& o) {
    SuiteOptions so;
    so.exhaustive_limit = o.exhaustive_limit;
    so.seed = o.seed;
    so.samples = o.samples;
    so.limit = ctx.limit;
    const std::vector<CheckOutcome> outcomes = run_property_suite(g, so);
    const bool ok = all_passed(outcomes);

    if (ctx.format == Format::Json) {
        Json j = envelope("verify");
        Json jc = Json::array();
        for (const CheckOutcome& c : outcomes)
            jc.push_back({{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
        j["checks"] = std::move(jc);
        j["passed"] = ok;
        print_json(ctx, j);
    } else {
        for (const CheckOutcome& c : outcomes) {
            ctx.out << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty() && (ctx.verbose || !c.passed || c.skipped))
                ctx.out << ": " << c.detail;
            ctx.out << '\n';
        }
    }
    return ok ? kOk : kCounterexample;
}

int cmd_emit(Context& ctx, const Graph& g) {
    if (ctx.format == Format::Json) {
        Json j = envelope("graph");
        j["graph"] = to_json(g);
        print_json(ctx, j);
    } else {
        ctx.out << emit_graph(g);
    }
    return kOk;
}

int cmd_export(Context& ctx, const Graph& g, bool json, bool dot) {
    if (dot && !json) {
        ctx.out << emit_dot(g);
        return kOk;
    }
    if (json)
        ctx.format = Format::Json;
    return cmd_emit(ctx, g);
}

} // namespace ckspectra::cli
