#include "ckspectra/suite.hpp"

#include "ckspectra/ideals.hpp"
#include "ckspectra/tails.hpp"

#include <algorithm>

namespace ckspectra {

namespace {

std::string pair_text(const Graph& g, const AdmissiblePair& p) {
    return "(" + format_set(g, p.H) + ", " + format_set(g, p.S) + ")";
}

CheckOutcome named(std::string name) {
    CheckOutcome c;
    c.name = std::move(name);
    return c;
}

CheckOutcome skipped(std::string name) {
    CheckOutcome c = named(std::move(name));
    c.skipped = true;
    c.detail = "needs Condition (K)";
    return c;
}

const char* rule_name(ClosureRule rule) { return rule == ClosureRule::Displayed ? "displayed" : "refined"; }

CheckOutcome tails_equal_clusters(const Graph& g, std::size_t limit) {
    CheckOutcome c = named("maximal tails equal clusters");
    const auto tails = maximal_tails(g, limit);
    const auto clust = clusters(g, limit);
    if (tails != clust) {
        c.passed = false;
        c.detail = std::to_string(tails.size()) + " maximal tails vs " + std::to_string(clust.size()) + " clusters";
    }
    return c;
}

CheckOutcome realize_round_trip(const Graph& g, std::size_t limit) {
    CheckOutcome c = named("boundary-path realization round-trips");
    for (VertexSet w : clusters(g, limit)) {
        const BoundaryPath alpha = realize_as_tail(g, w);
        if (tail_of_boundary(g, alpha) != w) {
            c.passed = false;
            c.detail = format_set(g, w) + " realized by " + alpha.describe(g);
            break;
        }
    }
    return c;
}

CheckOutcome complements_are_unions(const Graph& g, const std::vector<AdmissiblePair>& pairs) {
    CheckOutcome c = named("complements of admissible H are unions of tails");
    for (const AdmissiblePair& p : pairs) {
        if (!is_union_of_maximal_tails(g, g.all_vertices() - p.H)) {
            c.passed = false;
            c.detail = pair_text(g, p);
            break;
        }
    }
    return c;
}

CheckOutcome finite_return_is_breaking(const Graph& g) {
    CheckOutcome c = named("finite-return vertices are exactly self-breaking emitters");
    const VertexSet fr = finite_return_vertices(g);
    for (Vertex v : g.all_vertices()) {
        bool breaking = false;
        if (g.kind(v) == VertexKind::InfiniteEmitter)
            breaking = breaking_vertices(g, g.all_vertices() - g.ancestors(v)).contains(v);
        if (breaking != fr.contains(v)) {
            c.passed = false;
            c.detail = g.name(v);
            break;
        }
    }
    return c;
}

CheckOutcome leq_criterion(const Graph& g, const std::vector<AdmissiblePair>& pairs) {
    CheckOutcome c = named("ideal containment matches the pair criterion");
    for (const AdmissiblePair& p : pairs) {
        for (const AdmissiblePair& q : pairs) {
            const bool direct = p.H.is_subset_of(q.H) && p.S.is_subset_of(q.H | q.S);
            if (ideal_leq(g, p, q) != direct) {
                c.passed = false;
                c.detail = pair_text(g, p) + " vs " + pair_text(g, q);
                return c;
            }
        }
    }
    return c;
}

CheckOutcome k_iff_quotients_l(const Graph& g, const std::vector<AdmissiblePair>& pairs) {
    CheckOutcome c = named("Condition (K) iff every quotient satisfies Condition (L)");
    const bool k = condition_K(g).holds;
    std::optional<AdmissiblePair> bad;
    for (const AdmissiblePair& p : pairs) {
        if (!condition_L(quotient_graph(g, p).graph).holds) {
            bad = p;
            break;
        }
    }
    if (k == bad.has_value()) {
        c.passed = false;
        c.detail = k ? "K holds but the quotient by " + pair_text(g, *bad) + " fails L"
                     : "K fails but every quotient satisfies L";
    }
    return c;
}

CheckOutcome classifiers_agree(const Graph& g, const std::vector<AdmissiblePair>& pairs) {
    CheckOutcome c = named("classification agrees with quotient classification");
    for (const AdmissiblePair& p : pairs) {
        const IdealClass a = classify_ideal(g, p);
        const IdealClass b = classify_via_quotient(g, p);
        if (a != b) {
            c.passed = false;
            c.detail = pair_text(g, p) + ": " + to_string(a.kind) + " vs " + to_string(b.kind);
            break;
        }
    }
    return c;
}

CheckOutcome no_prime_gap(const Graph& g, const std::vector<AdmissiblePair>& pairs) {
    CheckOutcome c = named("no prime ideal fails to be primitive");
    for (const AdmissiblePair& p : pairs) {
        if (classify_ideal(g, p).kind == IdealKind::PrimeNotPrimitive) {
            c.passed = false;
            c.detail = pair_text(g, p);
            break;
        }
    }
    return c;
}

CheckOutcome kuratowski(const Graph& g, Side side, SpaceKind kind, ClosureRule rule, const SuiteOptions& o) {
    CheckOutcome c = named(std::string("Kuratowski axioms, ") + (kind == SpaceKind::Spec ? "Spec" : "Prim") +
                           (side == Side::GraphSide ? std::string(" graph side (") + rule_name(rule) + " closure)"
                                                    : std::string(" ideal side")));
    const SpecSpace space = make_space(g, side, kind, o.limit, rule);
    const KuratowskiReport r = check_kuratowski(space, o.exhaustive_limit, o.seed, o.samples);
    if (!r.holds) {
        c.passed = false;
        c.detail = r.failure + " at " + format_points(g, space.points, *r.counterexample);
    } else {
        c.detail = std::to_string(r.subsets_checked) + (r.exhaustive ? " subsets (all)" : " subsets (sampled)");
    }
    return c;
}

CheckOutcome homeomorphism(const Graph& g, ClosureRule rule, const SuiteOptions& o) {
    CheckOutcome c = named(std::string("h is a homeomorphism on Spec and Prim (") + rule_name(rule) + " closure)");
    try {
        const HomeomorphismReport r = verify_homeomorphism(g, o.exhaustive_limit, o.seed, o.samples, o.limit, rule);
        c.detail = std::to_string(r.spec_points) + " points, " + std::to_string(r.spec_subsets_checked) +
                   (r.exhaustive ? " subsets (all)" : " subsets (sampled)");
    } catch (const VerificationFailure& e) {
        c.passed = false;
        c.detail = e.what();
    }
    return c;
}

CheckOutcome density(const Graph& g, std::size_t limit) {
    CheckOutcome c = named("Prim equals Spec and is dense");
    try {
        prim_spec_density_check(g, limit);
    } catch (const VerificationFailure& e) {
        c.passed = false;
        c.detail = e.what();
    }
    return c;
}

} // namespace

std::vector<CheckOutcome> run_property_suite(const Graph& g, const SuiteOptions& o) {
    require_enumerable(g, o.limit);
    const bool k = condition_K(g).holds;
    const std::vector<AdmissiblePair> pairs = admissible_pairs(g, o.limit);

    std::vector<CheckOutcome> out;
    out.push_back(tails_equal_clusters(g, o.limit));
    out.push_back(realize_round_trip(g, o.limit));
    out.push_back(complements_are_unions(g, pairs));
    out.push_back(finite_return_is_breaking(g));
    out.push_back(leq_criterion(g, pairs));
    out.push_back(k_iff_quotients_l(g, pairs));
    if (k) {
        out.push_back(classifiers_agree(g, pairs));
        out.push_back(no_prime_gap(g, pairs));
        for (SpaceKind kind : {SpaceKind::Spec, SpaceKind::Prim}) {
            out.push_back(kuratowski(g, Side::GraphSide, kind, ClosureRule::Displayed, o));
            out.push_back(kuratowski(g, Side::GraphSide, kind, ClosureRule::Refined, o));
            out.push_back(kuratowski(g, Side::IdealSide, kind, ClosureRule::Displayed, o));
        }
        out.push_back(homeomorphism(g, ClosureRule::Displayed, o));
        out.push_back(homeomorphism(g, ClosureRule::Refined, o));
        out.push_back(density(g, o.limit));
    } else {
        for (const char* name : {"classification agrees with quotient classification",
                                 "no prime ideal fails to be primitive", "Kuratowski axioms",
                                 "h is a homeomorphism on Spec and Prim", "Prim equals Spec and is dense"})
            out.push_back(skipped(name));
    }
    return out;
}

bool all_passed(const std::vector<CheckOutcome>& outcomes) {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return c.passed; });
}

} // namespace ckspectra
