#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/turtle/diagnostic.hpp"

namespace i40sh::turtle {

inline constexpr std::string_view kMediaType = "text/turtle";

struct ParseOptions {
  // Resolve rdf:, rdfs:, xsd:, owl:, dcterms: and skos: even when the
  // document does not declare them. Any other undeclared prefix is still an
  // UnknownPrefix diagnostic.
  bool well_known_prefixes = true;
};

struct ParseResult {
  // Set only when there are no diagnostics.
  std::optional<rdf::Graph> graph;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return graph.has_value(); }
};

// Parses the Turtle subset: @prefix/PREFIX, 'a', ';' and ',' lists, IRIs,
// prefixed names, blank nodes (_:x, [], [ ... ]), and string literals with
// language tags or datatypes. Errors recover at the next top-level '.',
// so each broken statement contributes one diagnostic.
ParseResult parse_turtle(std::string_view text, const ParseOptions& options = {});

// Prefix block sorted by label, then one block per subject in index order
// with rdf:type first (as "a"), predicates grouped by ';' and objects by ','.
std::string serialize_turtle(const rdf::Graph& graph);

// Term as it appears in serialized Turtle, compacted against `prefixes`.
std::string format_term(const rdf::Term& term, const rdf::PrefixMap& prefixes);

}  // namespace i40sh::turtle
