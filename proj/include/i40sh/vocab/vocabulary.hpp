#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "i40sh/rdf/graph.hpp"

namespace i40sh::vocab {

class VocabularyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PropertyDefinition {
  rdf::Term iri;
  std::optional<rdf::Term> domain;
  // A class, or a datatype such as xsd:date / rdfs:Literal.
  std::optional<rdf::Term> range;
};

// Immutable view of a vocabulary graph: classes, properties, the subclass
// DAG and multilingual labels, plus the version literal peers compare when
// synchronising.
class VocabularyDefinition {
 public:
  // Throws VocabularyError if the subclass edges contain a cycle, a property
  // has an undeclared domain/range, or the ontology node has no version.
  static VocabularyDefinition from_graph(rdf::Graph graph);

  const std::string& version() const { return version_; }
  const rdf::Term& ontology() const { return *ontology_; }
  const std::set<rdf::Term>& classes() const { return classes_; }
  const std::map<rdf::Term, PropertyDefinition>& properties() const { return properties_; }
  const std::set<std::pair<rdf::Term, rdf::Term>>& subclass_edges() const { return subclass_edges_; }
  const std::map<std::pair<rdf::Term, std::string>, std::string>& labels() const { return labels_; }
  const rdf::Graph& graph() const { return graph_; }

  std::optional<std::string> label(const rdf::Term& term, std::string_view language) const;

  bool is_class(const rdf::Term& term) const { return classes_.contains(term); }
  bool is_property(const rdf::Term& term) const { return properties_.contains(term); }
  // Declared properties plus the RDF/RDFS/OWL/DC/SKOS annotation
  // predicates every shell document may use.
  bool is_known_predicate(const rdf::Term& term) const;

 private:
  VocabularyDefinition() = default;

  rdf::Graph graph_;
  std::optional<rdf::Term> ontology_;
  std::string version_;
  std::set<rdf::Term> classes_;
  std::map<rdf::Term, PropertyDefinition> properties_;
  std::set<std::pair<rdf::Term, rdf::Term>> subclass_edges_;
  std::map<std::pair<rdf::Term, std::string>, std::string> labels_;
};

// Embedded Turtle source of the built-in vocabulary.
std::string_view builtin_vocabulary_turtle();

// i40c vocabulary plus the IEC CDD skeleton, parsed from the embedded
// resource.
rdf::Graph builtin_vocabulary();

// Parsed once; shared read-only.
const VocabularyDefinition& builtin_definition();

// True if the rdfs:subClassOf edges of `graph` contain a cycle.
bool has_subclass_cycle(const rdf::Graph& graph);

// Resolves rdf:type through rdfs:subClassOf, using the vocabulary's edges
// together with any subclass axioms in the data graph itself.
class TypeResolver {
 public:
  TypeResolver(const rdf::Graph& data, const VocabularyDefinition& vocab);

  // Reflexive-transitive superclasses of `cls`.
  const std::set<rdf::Term>& superclasses(const rdf::Term& cls) const;
  bool has_type(const rdf::Term& node, const rdf::Term& cls) const;
  // Nodes typed `cls` or a subclass of it, sorted.
  std::vector<rdf::Term> instances_of(const rdf::Term& cls) const;

 private:
  const rdf::Graph& data_;
  std::map<rdf::Term, std::set<rdf::Term>> parents_;
  mutable std::map<rdf::Term, std::set<rdf::Term>> closure_;
};

}  // namespace i40sh::vocab
