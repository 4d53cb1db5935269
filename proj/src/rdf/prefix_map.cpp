#include "i40sh/rdf/prefix_map.hpp"

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::rdf {

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '-';
}

}  // namespace

Term expand(const PrefixMap& prefixes, std::string_view qname) {
  auto colon = qname.find(':');
  if (colon == std::string_view::npos) throw UnknownPrefix(std::string(qname));
  auto label = qname.substr(0, colon);
  auto it = prefixes.find(label);
  if (it == prefixes.end()) throw UnknownPrefix(std::string(label));
  return Term::iri(it->second + std::string(qname.substr(colon + 1)));
}

bool is_safe_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '-' || local.front() == '.' || local.back() == '.') return false;
  for (char c : local) {
    if (!is_name_char(c) && c != '.') return false;
  }
  return true;
}

std::optional<std::string> compact(const PrefixMap& prefixes, std::string_view iri) {
  const std::string* best_label = nullptr;
  std::size_t best_len = 0;
  for (const auto& [label, ns_iri] : prefixes) {
    if (ns_iri.size() <= iri.size() && iri.substr(0, ns_iri.size()) == ns_iri &&
        ns_iri.size() > best_len && is_safe_local_name(iri.substr(ns_iri.size()))) {
      best_label = &label;
      best_len = ns_iri.size();
    }
  }
  if (best_label == nullptr) return std::nullopt;
  return *best_label + ":" + std::string(iri.substr(best_len));
}

const PrefixMap& well_known_prefixes() {
  static const PrefixMap prefixes = {
      {"rdf", std::string(ns::kRdf)},         {"rdfs", std::string(ns::kRdfs)},
      {"xsd", std::string(ns::kXsd)},         {"owl", std::string(ns::kOwl)},
      {"dcterms", std::string(ns::kDcterms)}, {"skos", std::string(ns::kSkos)},
  };
  return prefixes;
}

}  // namespace i40sh::rdf
