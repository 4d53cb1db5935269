#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace i40sh::rdf {

// Raised when a term would violate the RDF data model (relative IRI,
// malformed language tag, ill-formed blank node label, ...).
class TermError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// An RDF term. Immutable value type; equality and ordering are structural
// and follow the N-Triples serialization of the term, which also gives every
// index a deterministic iteration order.
class Term {
 public:
  static Term iri(std::string iri);
  static Term blank(std::string label);
  // Plain literal; datatype is xsd:string.
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, std::string datatype);
  // Language-tagged literal. The tag is validated and stored lowercase.
  static Term lang_literal(std::string lexical, std::string_view language);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::Iri; }
  bool is_blank() const { return kind_ == TermKind::BlankNode; }
  bool is_literal() const { return kind_ == TermKind::Literal; }

  // IRI string, blank node label or literal lexical form, depending on kind.
  const std::string& value() const { return value_; }
  // Only meaningful for literals.
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }
  bool has_language() const { return !language_.empty(); }

  // N-Triples form, e.g. <http://x>, _:b1, "a\"b"@en.
  const std::string& ntriples() const { return key_; }

  friend bool operator==(const Term& a, const Term& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    return a.key_ <=> b.key_;
  }

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language);

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
  std::string key_;
};

// True for an absolute IRI: a scheme ("[A-Za-z][A-Za-z0-9+.-]*") followed by
// ':' and no characters that are illegal inside an IRIREF.
bool is_absolute_iri(std::string_view iri);

// BCP-47 shape check: 1-8 letters, then "-" subtags of 1-8 alphanumerics.
bool is_valid_language_tag(std::string_view tag);

bool is_valid_blank_label(std::string_view label);

// Escapes a lexical form for use inside a double-quoted Turtle/N-Triples
// string.
std::string escape_string(std::string_view text);

}  // namespace i40sh::rdf

template <>
struct std::hash<i40sh::rdf::Term> {
  std::size_t operator()(const i40sh::rdf::Term& t) const noexcept {
    return std::hash<std::string>{}(t.ntriples());
  }
};
