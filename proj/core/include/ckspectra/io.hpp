#pragma once

#include "ckspectra/graph.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace ckspectra {

/// Parses graph text:
///
///   file        := stmt*
///   vertex_stmt := "vertex" IDENT ("," IDENT)* ";"
///   edge_stmt   := "edge" (IDENT ":")? IDENT "->" IDENT ("*" (NAT | "inf"))? ";"
///
/// IDENT is [A-Za-z_][A-Za-z0-9_]* optionally followed by primes ('), so that
/// quotient graphs print and parse back. "#" starts a comment running to the
/// end of the line. Vertices must be declared before use.
///
/// Throws ParseError, DuplicateLabel, UndeclaredVertex (all positioned).
Graph parse_graph(std::string_view text);

/// Canonical text: one vertex statement, then one edge statement per bundle in
/// bundle order; "* 1" is omitted. parse_graph(emit_graph(g)) == g.
/// Throws std::invalid_argument when a name or label is not an IDENT.
std::string emit_graph(const Graph& g);

/// Graphviz digraph; ω-bundles are labelled "∞".
std::string emit_dot(const Graph& g);

inline constexpr const char* kJsonSchema = "ck-spectra/1";

using Json = nlohmann::ordered_json;

/// A natural number, or the string "inf".
Json to_json(Multiplicity m);
/// Vertex names in declaration order.
Json to_json(const Graph& g, VertexSet s);
/// {"vertices": [...], "bundles": [{"label", "src", "dst", "multiplicity"}]}.
Json to_json(const Graph& g);

bool is_identifier(std::string_view s);

} // namespace ckspectra
