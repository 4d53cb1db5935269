#include "i40sh/rdf/term.hpp"

#include <algorithm>
#include <cctype>

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::rdf {

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string make_key(TermKind kind, const std::string& value, const std::string& datatype,
                     const std::string& language) {
  switch (kind) {
    case TermKind::Iri:
      return "<" + value + ">";
    case TermKind::BlankNode:
      return "_:" + value;
    case TermKind::Literal:
      break;
  }
  std::string key = "\"" + escape_string(value) + "\"";
  if (!language.empty()) {
    key += "@" + language;
  } else if (datatype != ns::xsd_string()) {
    key += "^^<" + datatype + ">";
  }
  return key;
}

}  // namespace

bool is_absolute_iri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_alpha(iri[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20) return false;
    switch (c) {
      case '<': case '>': case '"': case '{': case '}':
      case '|': case '^': case '`': case '\\':
        return false;
      default:
        break;
    }
  }
  return true;
}

bool is_valid_language_tag(std::string_view tag) {
  if (tag.empty()) return false;
  std::size_t i = 0;
  std::size_t run = 0;
  while (i < tag.size() && is_alpha(tag[i])) ++i, ++run;
  if (run == 0 || run > 8) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    run = 0;
    while (i < tag.size() && (is_alpha(tag[i]) || is_digit(tag[i]))) ++i, ++run;
    if (run == 0 || run > 8) return false;
  }
  return true;
}

bool is_valid_blank_label(std::string_view label) {
  if (label.empty() || label.back() == '.' || label.front() == '.' || label.front() == '-')
    return false;
  for (char c : label) {
    auto u = static_cast<unsigned char>(c);
    if (!is_alpha(c) && !is_digit(c) && c != '_' && c != '-' && c != '.' && u < 0x80)
      return false;
  }
  return true;
}

std::string escape_string(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x20 || u == 0x7F) {
          out += "\\u00";
          out += kHex[u >> 4];
          out += kHex[u & 0xF];
        } else {
          out += c;
        }
      }
    }
  }
  return out;
}

Term::Term(TermKind kind, std::string value, std::string datatype, std::string language)
    : kind_(kind),
      value_(std::move(value)),
      datatype_(std::move(datatype)),
      language_(std::move(language)),
      key_(make_key(kind_, value_, datatype_, language_)) {}

Term Term::iri(std::string iri) {
  if (!is_absolute_iri(iri)) throw TermError("not an absolute IRI: " + iri);
  return Term(TermKind::Iri, std::move(iri), {}, {});
}

Term Term::blank(std::string label) {
  if (!is_valid_blank_label(label)) throw TermError("invalid blank node label: " + label);
  return Term(TermKind::BlankNode, std::move(label), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::Literal, std::move(lexical), ns::xsd_string(), {});
}

Term Term::typed_literal(std::string lexical, std::string datatype) {
  if (!is_absolute_iri(datatype)) throw TermError("datatype is not an absolute IRI: " + datatype);
  if (datatype == ns::rdf_lang_string())
    throw TermError("rdf:langString literals require a language tag");
  return Term(TermKind::Literal, std::move(lexical), std::move(datatype), {});
}

Term Term::lang_literal(std::string lexical, std::string_view language) {
  if (!is_valid_language_tag(language))
    throw TermError("invalid language tag: " + std::string(language));
  return Term(TermKind::Literal, std::move(lexical), ns::rdf_lang_string(), to_lower(language));
}

}  // namespace i40sh::rdf
