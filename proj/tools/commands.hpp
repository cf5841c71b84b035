#pragma once

#include <ckspectra/graph.hpp>
#include <ckspectra/topology.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ckspectra::cli {

enum class Format { Text, Json };

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kCounterexample = 1,
    kParseError = 2,
    kPrecondition = 3,
    kSizeLimit = 4,
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    Format format = Format::Text;
    std::size_t limit = kDefaultEnumerationLimit;
    bool verbose = false;
};

/// Reads and parses a graph file; "-" reads the context's input stream.
/// Throws ParseError (also for unreadable files).
Graph load_graph(Context& ctx, const std::string& path);

int cmd_check(Context& ctx, const Graph& g, DirectedReading reading);
int cmd_tails(Context& ctx, const Graph& g, DirectedReading reading);
int cmd_ideals(Context& ctx, const Graph& g);

struct QuotientOptions {
    std::string h;
    std::string s;
    bool dot = false;
};
int cmd_quotient(Context& ctx, const Graph& g, const QuotientOptions& o);

struct SpaceOptions {
    SpaceKind kind = SpaceKind::Spec;
    Side side = Side::IdealSide;
    ClosureRule rule = ClosureRule::Displayed;
};
int cmd_space(Context& ctx, const Graph& g, const SpaceOptions& o);

struct ClosureOptions {
    std::vector<std::string> points;
    SpaceKind kind = SpaceKind::Spec;
};
int cmd_closure(Context& ctx, const Graph& g, const ClosureOptions& o);

struct VerifyOptions {
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 2000;
};
int cmd_verify(Context& ctx, const Graph& g, const VerifyOptions& o);

/// Writes a graph as .gcg text, or as JSON under --format json.
int cmd_emit(Context& ctx, const Graph& g);
int cmd_export(Context& ctx, const Graph& g, bool json, bool dot);

/// Splits "a, b,c" into names; empty input gives no names.
std::vector<std::string> split_names(const std::string& text);
/// Splits a point list at top-level commas and whitespace ("T1, {a, b}, x").
std::vector<std::string> split_points(const std::string& text);

} // namespace ckspectra::cli
