#include <algorithm>

#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/turtle.hpp"

namespace i40sh::turtle {

namespace {

std::string format_iri(const std::string& iri, const rdf::PrefixMap& prefixes) {
  if (auto qname = rdf::compact(prefixes, iri)) return *qname;
  return "<" + iri + ">";
}

}  // namespace

std::string format_term(const rdf::Term& term, const rdf::PrefixMap& prefixes) {
  switch (term.kind()) {
    case rdf::TermKind::Iri:
      return format_iri(term.value(), prefixes);
    case rdf::TermKind::BlankNode:
      return "_:" + term.value();
    case rdf::TermKind::Literal:
      break;
  }
  std::string out = "\"" + rdf::escape_string(term.value()) + "\"";
  if (term.has_language()) {
    out += "@" + term.language();
  } else if (term.datatype() != ns::xsd_string()) {
    out += "^^" + format_iri(term.datatype(), prefixes);
  }
  return out;
}

std::string serialize_turtle(const rdf::Graph& graph) {
  const auto& prefixes = graph.prefixes();
  std::string out;
  for (const auto& [label, iri] : prefixes) out += "@prefix " + label + ": <" + iri + "> .\n";

  const rdf::Term type = rdf::Term::iri(ns::rdf_type());
  bool first_subject = true;
  for (const auto& subject : graph.subjects()) {
    if (first_subject && !prefixes.empty()) out += "\n";
    if (!first_subject) out += "\n";
    first_subject = false;

    auto triples = graph.match(subject, std::nullopt, std::nullopt);
    std::stable_partition(triples.begin(), triples.end(),
                          [&](const rdf::Triple& t) { return t.predicate == type; });

    out += format_term(subject, prefixes);
    const rdf::Term* current = nullptr;
    for (const auto& t : triples) {
      if (current != nullptr && *current == t.predicate) {
        out += ", " + format_term(t.object, prefixes);
        continue;
      }
      if (current != nullptr) out += " ;\n   ";
      current = &t.predicate;
      out += " " + (t.predicate == type ? std::string("a") : format_term(t.predicate, prefixes));
      out += " " + format_term(t.object, prefixes);
    }
    out += " .\n";
  }
  return out;
}

}  // namespace i40sh::turtle
