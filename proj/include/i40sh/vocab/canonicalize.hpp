#pragma once

#include <optional>
#include <string>
#include <vector>

#include "i40sh/rdf/graph.hpp"

namespace i40sh::vocab {

// A predicate spelling seen in the wild and the IRI it stands for.
struct PredicateAlias {
  std::string variant;
  std::string canonical;
};

const std::vector<PredicateAlias>& predicate_aliases();

// Canonical IRI for a variant predicate, or nullopt if `predicate` is not a
// known variant.
std::optional<rdf::Term> canonical_predicate(const rdf::Term& predicate);

struct Rewrite {
  rdf::Triple original;
  rdf::Triple canonical;
};

struct CanonicalizeResult {
  rdf::Graph graph;
  // In S->P->O order of the input.
  std::vector<Rewrite> rewrites;
};

// Replaces variant predicates by their canonical IRI. Everything else,
// including the prefix map, is copied unchanged.
CanonicalizeResult canonicalize(const rdf::Graph& graph);

}  // namespace i40sh::vocab
