#include "cli.hpp"

#include "commands.hpp"

#include <ckspectra/generators.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>

namespace ckspectra::cli {

namespace {

std::string fixture_hint() { return "running | loop | three"; }

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime and primitive ideal spaces of graph C*-algebras, computed from the graph.", "ck-spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::size_t limit = kDefaultEnumerationLimit;
    bool verbose = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--limit", limit, "Largest vertex count for exhaustive scans")->capture_default_str();
    app.add_flag("-v,--verbose", verbose, "Extra detail");

    std::string file;
    bool ambient = false;
    std::function<int(Context&)> action;

    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "Graph file (.gcg), or - for stdin")->required();
    };
    auto on_graph = [&](CLI::App* sub, std::function<int(Context&, const Graph&)> body) {
        with_file(sub);
        sub->callback([&action, &file, body] {
            action = [&file, body](Context& ctx) { return body(ctx, load_graph(ctx, file)); };
        });
    };

    auto* check = app.add_subcommand("check", "Vertex classes, Conditions (K) and (L), directedness, CSP");
    check->add_flag("--ambient", ambient, "Common lower bounds may lie outside the set");
    on_graph(check, [&](Context& ctx, const Graph& g) {
        return cmd_check(ctx, g, ambient ? DirectedReading::Ambient : DirectedReading::Within);
    });

    auto* tails = app.add_subcommand("tails", "Maximal tails, clusters and finite-return vertices");
    tails->add_flag("--ambient", ambient, "Common lower bounds may lie outside the set");
    on_graph(tails, [&](Context& ctx, const Graph& g) {
        return cmd_tails(ctx, g, ambient ? DirectedReading::Ambient : DirectedReading::Within);
    });

    auto* ideals = app.add_subcommand("ideals", "Admissible pairs with their classification");
    on_graph(ideals, [](Context& ctx, const Graph& g) { return cmd_ideals(ctx, g); });

    QuotientOptions qo;
    auto* quotient = app.add_subcommand("quotient", "Quotient graph of an admissible pair");
    quotient->add_option("--H", qo.h, "Comma-separated vertices of H")->required();
    quotient->add_option("--S", qo.s, "Comma-separated vertices of S");
    quotient->add_flag("--dot", qo.dot, "Print Graphviz instead of graph text");
    on_graph(quotient, [&](Context& ctx, const Graph& g) { return cmd_quotient(ctx, g, qo); });

    std::string side = "ideal";
    std::string rule = "displayed";
    auto space_command = [&](const char* name, const char* help, SpaceKind kind) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--side", side, "Closure used for the topology")->check(CLI::IsMember({"graph", "ideal"}));
        sub->add_option("--rule", rule, "Graph-side closure formula")->check(CLI::IsMember({"displayed", "refined"}));
        on_graph(sub, [&, kind](Context& ctx, const Graph& g) {
            SpaceOptions o;
            o.kind = kind;
            o.side = side == "graph" ? Side::GraphSide : Side::IdealSide;
            o.rule = rule == "refined" ? ClosureRule::Refined : ClosureRule::Displayed;
            return cmd_space(ctx, g, o);
        });
    };
    space_command("spec", "Points of Spec with closures and separation", SpaceKind::Spec);
    space_command("prim", "Points of Prim with closures and separation", SpaceKind::Prim);

    ClosureOptions co;
    std::string closure_space = "spec";
    auto* closure = app.add_subcommand("closure", "Closure of a point set, on both sides");
    closure->add_option("--points", co.points, "Points: T<k>, {a,b}, or a finite-return vertex")->required();
    closure->add_option("--space", closure_space, "Ambient space")->check(CLI::IsMember({"spec", "prim"}));
    on_graph(closure, [&](Context& ctx, const Graph& g) {
        co.kind = closure_space == "prim" ? SpaceKind::Prim : SpaceKind::Spec;
        return cmd_closure(ctx, g, co);
    });

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the property suite; exit 1 on a counterexample");
    verify->add_option("--exhaustive-limit", vo.exhaustive_limit, "Largest point count swept exhaustively")
        ->capture_default_str();
    verify->add_option("--seed", vo.seed, "Seed for sampled sweeps")->capture_default_str();
    verify->add_option("--samples", vo.samples, "Sampled subsets above the exhaustive limit")->capture_default_str();
    on_graph(verify, [&](Context& ctx, const Graph& g) { return cmd_verify(ctx, g, vo); });

    bool export_json = false;
    bool export_dot = false;
    auto* exp = app.add_subcommand("export", "Re-emit a graph as JSON or DOT");
    exp->add_flag("--json", export_json, "JSON");
    exp->add_flag("--dot", export_dot, "Graphviz DOT");
    on_graph(exp, [&](Context& ctx, const Graph& g) { return cmd_export(ctx, g, export_json, export_dot); });

    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->require_subcommand(1);

    std::string fixture_name = "running";
    auto* gen_fixture = gen->add_subcommand("fixture", "Built-in fixtures");
    gen_fixture->add_option("name", fixture_name, fixture_hint())
        ->check(CLI::IsMember({"running", "loop", "three"}));
    gen_fixture->callback([&] {
        action = [&](Context& ctx) {
            if (fixture_name == "loop")
                return cmd_emit(ctx, single_loop_graph());
            if (fixture_name == "three")
                return cmd_emit(ctx, three_vertex_graph());
            return cmd_emit(ctx, running_example().graph);
        };
    });

    std::string ground = "a,b";
    std::string mult = "inf";
    auto* gen_ea = gen->add_subcommand("ea", "Subset graph over a small ground set");
    gen_ea->add_option("--ground", ground, "Comma-separated ground set (at most 4 names)")->capture_default_str();
    gen_ea->add_option("--mult", mult, "Bundle multiplicity: a positive number or inf")->capture_default_str();
    gen_ea->callback([&] {
        action = [&](Context& ctx) {
            Multiplicity m = Multiplicity::omega();
            if (mult != "inf") {
                const unsigned long long n = std::stoull(mult);
                if (n == 0)
                    throw CLI::ValidationError("--mult", "must be positive");
                m = Multiplicity{n};
            }
            return cmd_emit(ctx, ea_graph(split_names(ground), m));
        };
    });

    std::uint64_t seed = 1;
    RandomGraphOptions ro;
    bool no_repair = false;
    auto* gen_random = gen->add_subcommand("random", "Seeded random graph satisfying Condition (K)");
    gen_random->add_option("--seed", seed, "Seed")->capture_default_str();
    gen_random->add_option("--vertices", ro.vertices, "Vertex count")->capture_default_str();
    gen_random->add_option("--density", ro.density, "Chance of a bundle per ordered pair")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_random->add_option("--omega-prob", ro.omega_prob, "Chance that a bundle is infinite")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen_random->add_flag("--no-repair", no_repair, "Skip the Condition (K) repair pass");
    gen_random->callback([&] {
        action = [&](Context& ctx) {
            ro.repair = !no_repair;
            return cmd_emit(ctx, random_condition_k_graph(seed, ro));
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    Context ctx{in, out, err};
    ctx.format = format == "json" ? Format::Json : Format::Text;
    ctx.limit = limit;
    ctx.verbose = verbose;

    try {
        return action(ctx);
    } catch (const ParseError& e) {
        err << "parse error: " << (file.empty() ? "" : file + ":") << e.what() << '\n';
        return kParseError;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const SizeLimitExceeded& e) {
        err << "error: " << e.what() << " (raise --limit to allow larger scans)\n";
        return kSizeLimit;
    } catch (const VerificationFailure& e) {
        err << "counterexample: " << e.what() << '\n';
        return kCounterexample;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

} // namespace ckspectra::cli
