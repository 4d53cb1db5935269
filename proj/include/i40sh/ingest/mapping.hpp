#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "i40sh/rdf/graph.hpp"
#include "i40sh/rdf/prefix_map.hpp"

namespace i40sh::ingest {

enum class ValueKind { String, Language, Typed, IriTemplate };

struct ColumnRule {
  std::string column;
  rdf::Term predicate;
  ValueKind kind = ValueKind::String;
  // Language tag, datatype IRI or IRI template, depending on kind.
  std::string argument;
  std::size_t line = 0;
};

struct MappingSpec {
  rdf::PrefixMap prefixes;
  std::string subject_template;
  std::optional<rdf::Term> type;
  // Defaults to the first placeholder of the subject template.
  std::string key_column;
  // Optional: each row also gets a shell node, typed
  // i40c:AdministrativeShell, that surrounds the row's subject.
  std::string shell_template;
  std::vector<ColumnRule> rules;

  // Every column a row must provide: rule columns, template placeholders
  // and the key.
  std::set<std::string> referenced_columns() const;
};

struct MappingDiagnostic {
  std::size_t line = 0;
  std::string message;

  std::string to_string() const { return "line " + std::to_string(line) + ": " + message; }
};

class MappingError : public std::runtime_error {
 public:
  explicit MappingError(std::vector<MappingDiagnostic> diagnostics);
  const std::vector<MappingDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<MappingDiagnostic> diagnostics_;
};

// Line-oriented mapping format:
//
//   @prefix i40c: <http://purl.org/eis/i40c/> .     (or: prefix i40c: <...>)
//   subject = http://purl.org/eis/i40c/Object{id}
//   shell   = http://purl.org/eis/i40c/AdminShell{id}
//   type    = i40c:Object
//   key     = id
//   id      = i40c:hasId
//   name    = rdfs:label @en
//   date    = i40c:hasDate ^^xsd:date
//   image   = i40c:image <http://img.example.org/{image}>
//   "type"  = i40c:kind                             (quoted column name)
//
// '#' starts a comment line. All problems are collected and thrown together
// as a MappingError, one diagnostic per offending line.
MappingSpec parse_mapping(std::string_view text);

// Placeholder names of a {column} template, in order of appearance.
std::vector<std::string> template_columns(std::string_view tmpl);

// Percent-encodes every byte outside RFC 3986 "unreserved".
std::string percent_encode(std::string_view value);

}  // namespace i40sh::ingest
