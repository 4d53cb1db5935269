#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/vocab/validate.hpp"

namespace i40sh::vocab {

struct ShellDescriptor {
  rdf::Term shell;
  rdf::Term object;
  std::optional<rdf::Term> technical_functionality;
  std::optional<rdf::Term> technical_data;
  std::string identifier;
  // rdfs:label of the shell by language; "" for an untagged label.
  std::map<std::string, std::string> labels;
};

class NotAShell : public std::runtime_error {
 public:
  explicit NotAShell(rdf::Term iri)
      : std::runtime_error(iri.ntriples() + " is not an i40c:AdministrativeShell"), iri_(std::move(iri)) {}
  const rdf::Term& iri() const { return iri_; }

 private:
  rdf::Term iri_;
};

class InvalidShell : public std::runtime_error {
 public:
  InvalidShell(rdf::Term iri, std::vector<Finding> findings);
  const rdf::Term& iri() const { return iri_; }
  const std::vector<Finding>& findings() const { return findings_; }

 private:
  rdf::Term iri_;
  std::vector<Finding> findings_;
};

// Follows i40c:surround, i40c:hasTechnicalFunctionality, i40c:hasTechnicalData
// and the identifier properties from `shell`. Throws InvalidShell with the
// Violations focused on the shell or its object.
ShellDescriptor descriptor_of(const rdf::Graph& graph, const rdf::Term& shell,
                              const VocabularyDefinition& vocab = builtin_definition());

}  // namespace i40sh::vocab
