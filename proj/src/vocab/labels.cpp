#include "i40sh/vocab/labels.hpp"

#include <algorithm>

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::vocab {

std::string_view label_match_name(LabelMatch m) {
  switch (m) {
    case LabelMatch::Exact:
      return "exact";
    case LabelMatch::English:
      return "english";
    case LabelMatch::Any:
      return "any";
  }
  return "any";
}

std::optional<LabelLookup> get_label(const rdf::Graph& graph, const rdf::Term& resource,
                                     std::string_view lang) {
  std::string wanted(lang);
  std::transform(wanted.begin(), wanted.end(), wanted.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  std::vector<rdf::Term> labels;
  for (const auto& t : graph.match(resource, rdf::Term::iri(ns::rdfs("label")), std::nullopt)) {
    if (t.object.is_literal()) labels.push_back(t.object);
  }
  auto find = [&](auto pred) { return std::find_if(labels.begin(), labels.end(), pred); };
  auto hit = [](const rdf::Term& t, LabelMatch m) { return LabelLookup{t.value(), t.language(), m}; };

  if (!wanted.empty()) {
    if (auto it = find([&](const rdf::Term& t) { return t.language() == wanted; }); it != labels.end()) {
      return hit(*it, LabelMatch::Exact);
    }
  }
  if (auto it = find([](const rdf::Term& t) { return t.language() == "en"; }); it != labels.end()) {
    return hit(*it, LabelMatch::English);
  }
  if (auto it = find([](const rdf::Term& t) { return t.language().starts_with("en-"); }); it != labels.end()) {
    return hit(*it, LabelMatch::English);
  }
  if (!labels.empty()) return hit(labels.front(), LabelMatch::Any);
  return std::nullopt;
}

}  // namespace i40sh::vocab
