#include "i40sh/vocab/canonicalize.hpp"

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::vocab {

const std::vector<PredicateAlias>& predicate_aliases() {
  static const std::vector<PredicateAlias> aliases = {
      {ns::i40c("hasTechFuncionality"), ns::i40c("hasTechnicalFunctionality")},
      {ns::i40c("hasTechnicalFuncionality"), ns::i40c("hasTechnicalFunctionality")},
      {ns::i40c("BrakingResistance"), ns::i40c("brakingResistance")},
      {ns::i40c("Outputfrequency"), ns::i40c("outputFrequency")},
  };
  return aliases;
}

std::optional<rdf::Term> canonical_predicate(const rdf::Term& predicate) {
  if (!predicate.is_iri()) return std::nullopt;
  for (const auto& alias : predicate_aliases()) {
    if (predicate.value() == alias.variant) return rdf::Term::iri(alias.canonical);
  }
  return std::nullopt;
}

CanonicalizeResult canonicalize(const rdf::Graph& graph) {
  CanonicalizeResult result{rdf::Graph(graph.prefixes()), {}};
  for (const auto& t : graph.triples()) {
    if (auto canonical = canonical_predicate(t.predicate)) {
      rdf::Triple rewritten(t.subject, *canonical, t.object);
      result.graph.insert(rewritten);
      result.rewrites.push_back({t, std::move(rewritten)});
    } else {
      result.graph.insert(t);
    }
  }
  return result;
}

}  // namespace i40sh::vocab
