#include "i40sh/vocab/vocabulary.hpp"

#include <algorithm>

#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/turtle.hpp"

namespace i40sh::vocab {

namespace {

using rdf::Term;

Term iri(std::string value) { return Term::iri(std::move(value)); }

bool is_datatype(const Term& t) {
  const auto& v = t.value();
  return v.starts_with(ns::kXsd) || v == ns::rdf_lang_string() || v == ns::rdfs("Literal");
}

bool cyclic(const std::map<Term, std::set<Term>>& parents) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<Term, int> state;
  std::vector<std::pair<Term, bool>> stack;
  for (const auto& [start, _] : parents) {
    if (state[start] != 0) continue;
    stack.emplace_back(start, false);
    while (!stack.empty()) {
      auto [node, leaving] = stack.back();
      stack.pop_back();
      if (leaving) {
        state[node] = 2;
        continue;
      }
      if (state[node] == 2) continue;
      state[node] = 1;
      stack.emplace_back(node, true);
      auto it = parents.find(node);
      if (it == parents.end()) continue;
      for (const auto& parent : it->second) {
        int s = state[parent];
        if (s == 1) return true;
        if (s == 0) stack.emplace_back(parent, false);
      }
    }
  }
  return false;
}

std::map<Term, std::set<Term>> subclass_parents(const rdf::Graph& graph) {
  std::map<Term, std::set<Term>> parents;
  for (const auto& t : graph.match(std::nullopt, iri(ns::rdfs("subClassOf")), std::nullopt)) {
    parents[t.subject].insert(t.object);
  }
  return parents;
}

}  // namespace

bool has_subclass_cycle(const rdf::Graph& graph) { return cyclic(subclass_parents(graph)); }

VocabularyDefinition VocabularyDefinition::from_graph(rdf::Graph graph) {
  VocabularyDefinition def;
  const Term type = iri(ns::rdf_type());

  for (const auto& t : graph.match(std::nullopt, type, iri(ns::owl("Ontology")))) {
    def.ontology_ = t.subject;
    break;
  }
  if (!def.ontology_) throw VocabularyError("vocabulary has no owl:Ontology node");
  for (const auto& t : graph.match(*def.ontology_, iri(ns::owl("versionInfo")), std::nullopt)) {
    if (t.object.is_literal()) def.version_ = t.object.value();
  }
  if (def.version_.empty()) throw VocabularyError("vocabulary has no owl:versionInfo");

  for (const auto& t : graph.match(std::nullopt, type, iri(ns::rdfs("Class")))) {
    def.classes_.insert(t.subject);
  }
  for (const auto& t : graph.match(std::nullopt, type, iri(ns::owl("Class")))) {
    def.classes_.insert(t.subject);
  }
  for (const auto& t : graph.match(std::nullopt, iri(ns::rdfs("subClassOf")), std::nullopt)) {
    def.subclass_edges_.emplace(t.subject, t.object);
  }
  if (has_subclass_cycle(graph)) throw VocabularyError("rdfs:subClassOf edges contain a cycle");

  const Term domain = iri(ns::rdfs("domain"));
  const Term range = iri(ns::rdfs("range"));
  for (const auto& t : graph.match(std::nullopt, type, iri(ns::rdf("Property")))) {
    PropertyDefinition prop{t.subject, std::nullopt, std::nullopt};
    for (const auto& d : graph.match(t.subject, domain, std::nullopt)) prop.domain = d.object;
    for (const auto& r : graph.match(t.subject, range, std::nullopt)) prop.range = r.object;
    if (prop.domain && !def.classes_.contains(*prop.domain)) {
      throw VocabularyError("domain of " + t.subject.value() + " is not a declared class");
    }
    if (prop.range && !def.classes_.contains(*prop.range) && !is_datatype(*prop.range)) {
      throw VocabularyError("range of " + t.subject.value() +
                            " is neither a declared class nor a datatype");
    }
    def.properties_.emplace(t.subject, std::move(prop));
  }

  for (const auto& t : graph.match(std::nullopt, iri(ns::rdfs("label")), std::nullopt)) {
    if (t.object.is_literal()) def.labels_[{t.subject, t.object.language()}] = t.object.value();
  }

  def.graph_ = std::move(graph);
  return def;
}

std::optional<std::string> VocabularyDefinition::label(const rdf::Term& term,
                                                       std::string_view language) const {
  std::string lang(language);
  std::transform(lang.begin(), lang.end(), lang.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto it = labels_.find({term, lang});
  if (it == labels_.end()) it = labels_.find({term, "en"});
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

bool VocabularyDefinition::is_known_predicate(const rdf::Term& term) const {
  static const std::set<Term> annotation = [] {
    std::set<Term> s;
    for (const char* local : {"type"}) s.insert(iri(ns::rdf(local)));
    for (const char* local : {"label", "comment", "seeAlso", "isDefinedBy", "subClassOf",
                              "subPropertyOf", "domain", "range"}) {
      s.insert(iri(ns::rdfs(local)));
    }
    for (const char* local : {"versionInfo", "sameAs"}) s.insert(iri(ns::owl(local)));
    for (const char* local : {"identifier", "title", "description", "created", "modified"}) {
      s.insert(iri(ns::dcterms(local)));
    }
    for (const char* local : {"closeMatch", "exactMatch", "prefLabel", "altLabel"}) {
      s.insert(iri(ns::skos(local)));
    }
    return s;
  }();
  return properties_.contains(term) || annotation.contains(term);
}

rdf::Graph builtin_vocabulary() {
  turtle::ParseOptions options;
  options.well_known_prefixes = false;
  auto result = turtle::parse_turtle(builtin_vocabulary_turtle(), options);
  if (!result.ok()) {
    // The resource is fixed at build time and covered by tests.
    throw VocabularyError("embedded vocabulary does not parse: " +
                          turtle::format_diagnostics(result.diagnostics));
  }
  return std::move(*result.graph);
}

const VocabularyDefinition& builtin_definition() {
  static const VocabularyDefinition def = VocabularyDefinition::from_graph(builtin_vocabulary());
  return def;
}

TypeResolver::TypeResolver(const rdf::Graph& data, const VocabularyDefinition& vocab)
    : data_(data), parents_(subclass_parents(data)) {
  for (const auto& [sub, super] : vocab.subclass_edges()) parents_[sub].insert(super);
}

const std::set<rdf::Term>& TypeResolver::superclasses(const rdf::Term& cls) const {
  if (auto it = closure_.find(cls); it != closure_.end()) return it->second;
  std::set<Term> seen{cls};
  std::vector<Term> work{cls};
  // Data graphs are not checked for cycles; the seen-set keeps this finite.
  while (!work.empty()) {
    Term c = work.back();
    work.pop_back();
    auto it = parents_.find(c);
    if (it == parents_.end()) continue;
    for (const auto& p : it->second) {
      if (seen.insert(p).second) work.push_back(p);
    }
  }
  return closure_.emplace(cls, std::move(seen)).first->second;
}

bool TypeResolver::has_type(const rdf::Term& node, const rdf::Term& cls) const {
  for (const auto& t : data_.match(node, iri(ns::rdf_type()), std::nullopt)) {
    if (superclasses(t.object).contains(cls)) return true;
  }
  return false;
}

std::vector<rdf::Term> TypeResolver::instances_of(const rdf::Term& cls) const {
  std::set<Term> found;
  for (const auto& t : data_.match(std::nullopt, iri(ns::rdf_type()), std::nullopt)) {
    if (superclasses(t.object).contains(cls)) found.insert(t.subject);
  }
  return {found.begin(), found.end()};
}

}  // namespace i40sh::vocab
