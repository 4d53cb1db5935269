#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/vocab/vocabulary.hpp"

namespace i40sh::vocab {

enum class Severity { Violation, Warning };

std::string_view severity_name(Severity s);

struct Finding {
  Severity severity;
  std::string rule_id;
  rdf::Term focus;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  // Sorted by (rule_id, focus, message).
  std::vector<Finding> findings;

  std::size_t violation_count() const;
  std::size_t warning_count() const;
  bool conforms() const { return violation_count() == 0; }
  std::vector<Finding> by_rule(std::string_view rule_id) const;

  // {"conforms":..,"violations":n,"warnings":n,"findings":[{severity,rule,focus,message}]}
  std::string to_json() const;
  // One "Severity rule focus: message" line per finding.
  std::string to_text() const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Rules, applied to a canonicalized graph:
//   R1 Violation  shell without exactly one i40c:surround to a typed Object
//   R2 Violation  Object that is not an http(s) IRI
//   R3 Violation  Object without i40c:hasId or dcterms:identifier
//   R4 Warning    Object or shell without a language-tagged rdfs:label
//   R5 Warning    Object or shell labelled in a single language only
//   R6 Violation  i40c:hasDate value typed xsd:date that is not a valid date
//   R7 Warning    predicate on a typed node that the vocabulary does not know
//   R8 Warning    i40c:image given as a literal rather than an IRI
// Typing follows rdfs:subClassOf in both the vocabulary and the data.
ValidationReport validate(const rdf::Graph& data, const VocabularyDefinition& vocab = builtin_definition());

// xsd:date lexical check: [-]YYYY-MM-DD with an optional Z or +hh:mm zone,
// and a day that exists in that month.
bool is_valid_xsd_date(std::string_view lexical);

}  // namespace i40sh::vocab
