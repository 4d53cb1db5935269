#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/turtle/diagnostic.hpp"
#include "i40sh/turtle/turtle.hpp"

namespace i40sh::query {

inline constexpr std::string_view kMediaType = "application/sparql-query";
inline constexpr std::string_view kResultsMediaType = "application/json";

struct Variable {
  // Without the leading '?'. Blank nodes in WHERE become variables named
  // "_:label", which no query can spell and no result exposes.
  std::string name;

  bool hidden() const { return name.starts_with("_:"); }
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  std::string to_string() const;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct SelectForm {
  // Empty with `star` set for SELECT *.
  std::vector<std::string> projection;
  bool star = false;
};

struct ConstructForm {
  // Blank nodes here are minted afresh for each solution.
  std::vector<TriplePattern> templ;
};

struct Query {
  rdf::PrefixMap prefixes;
  std::variant<SelectForm, ConstructForm> form;
  std::vector<TriplePattern> where;

  bool is_select() const { return std::holds_alternative<SelectForm>(form); }
  // Projection for SELECT (resolving *), in order; empty for CONSTRUCT.
  std::vector<std::string> result_variables() const;
};

struct QueryParseResult {
  std::optional<Query> query;
  std::vector<turtle::ParseDiagnostic> diagnostics;

  bool ok() const { return query.has_value(); }
};

// PREFIX/@prefix prologue, then SELECT [DISTINCT|REDUCED] (?v ... | *) or
// CONSTRUCT { template }, then [WHERE] { basic graph pattern }. Patterns
// use Turtle term syntax with ';' and ','. Other SPARQL keywords produce
// an UnsupportedKeyword diagnostic; projected or template variables that
// WHERE does not bind produce UnknownVariable.
QueryParseResult parse_query(std::string_view text, const turtle::ParseOptions& options = {});

// Replaces every constant predicate for which `map` returns a term, in
// both WHERE and the template. Returns the number of replacements.
std::size_t rewrite_predicates(Query& query,
                               const std::function<std::optional<rdf::Term>(const rdf::Term&)>& map);

using BindingSet = std::map<std::string, rdf::Term>;

// All solutions of the conjunctive pattern, sorted. Patterns are joined
// greedily, most bound positions first, ties in text order.
std::vector<BindingSet> eval_bgp(const rdf::Graph& graph, const std::vector<TriplePattern>& patterns);

// Join order eval_bgp uses: indexes into `patterns`.
std::vector<std::size_t> join_order(const std::vector<TriplePattern>& patterns);

struct Solutions {
  std::vector<std::string> vars;
  // Projected, distinct, sorted.
  std::vector<BindingSet> rows;

  friend bool operator==(const Solutions&, const Solutions&) = default;
};

using QueryResult = std::variant<Solutions, rdf::Graph>;

// CONSTRUCT instantiates the template once per solution, skipping triples
// with an unbound variable, a literal subject or a non-IRI predicate. The
// result carries the data graph's prefixes overlaid with the query's.
QueryResult eval(const rdf::Graph& graph, const Query& query);

// {"vars":[...],"rows":[{var:{"type":"iri"|"literal"|"bnode","value":..,
// "lang"?,"datatype"?}}]}
std::string solutions_json(const Solutions& solutions);

}  // namespace i40sh::query
