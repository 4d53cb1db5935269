#include "i40sh/vocab/descriptor.hpp"

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::vocab {

namespace {

using rdf::Term;

Term iri(std::string value) { return Term::iri(std::move(value)); }

std::optional<Term> first_object(const rdf::Graph& g, const Term& s, const std::string& p) {
  auto found = g.match(s, iri(p), std::nullopt);
  if (found.empty()) return std::nullopt;
  return found.front().object;
}

std::string summarize(const Term& shell, const std::vector<Finding>& findings) {
  std::string msg = shell.ntriples() + " is not a valid shell:";
  for (const auto& f : findings) msg += " [" + f.rule_id + "] " + f.message + ";";
  msg.pop_back();
  return msg;
}

}  // namespace

InvalidShell::InvalidShell(rdf::Term iri, std::vector<Finding> findings)
    : std::runtime_error(summarize(iri, findings)), iri_(std::move(iri)), findings_(std::move(findings)) {}

ShellDescriptor descriptor_of(const rdf::Graph& graph, const rdf::Term& shell,
                              const VocabularyDefinition& vocab) {
  TypeResolver types(graph, vocab);
  if (!types.has_type(shell, iri(ns::i40c("AdministrativeShell")))) throw NotAShell(shell);

  std::set<Term> focus{shell};
  for (const auto& t : graph.match(shell, iri(ns::i40c("surround")), std::nullopt)) focus.insert(t.object);
  std::vector<Finding> violations;
  for (auto& f : validate(graph, vocab).findings) {
    if (f.severity == Severity::Violation && focus.contains(f.focus)) violations.push_back(std::move(f));
  }
  if (!violations.empty()) throw InvalidShell(shell, std::move(violations));

  // R1 passed, so there is exactly one surround.
  ShellDescriptor d{shell, *first_object(graph, shell, ns::i40c("surround")), {}, {}, {}, {}};
  d.technical_functionality = first_object(graph, shell, ns::i40c("hasTechnicalFunctionality"));
  d.technical_data = first_object(graph, d.object, ns::i40c("hasTechnicalData"));
  auto id = first_object(graph, d.object, ns::i40c("hasId"));
  if (!id) id = first_object(graph, d.object, ns::dcterms("identifier"));
  d.identifier = id->value();
  for (const auto& t : graph.match(shell, iri(ns::rdfs("label")), std::nullopt)) {
    if (t.object.is_literal()) d.labels.emplace(t.object.language(), t.object.value());
  }
  return d;
}

}  // namespace i40sh::vocab
