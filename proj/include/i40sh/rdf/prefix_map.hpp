#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "i40sh/rdf/term.hpp"

namespace i40sh::rdf {

class UnknownPrefix : public std::runtime_error {
 public:
  explicit UnknownPrefix(std::string prefix)
      : std::runtime_error("unknown prefix: " + prefix), prefix_(std::move(prefix)) {}
  const std::string& prefix() const { return prefix_; }

 private:
  std::string prefix_;
};

// Prefix label (without the colon) -> namespace IRI. Ordered so that
// serialization emits prefixes sorted by label.
using PrefixMap = std::map<std::string, std::string, std::less<>>;

// "prefix:local" -> IRI term. Throws UnknownPrefix for undeclared labels and
// TermError if the concatenation is not an absolute IRI.
Term expand(const PrefixMap& prefixes, std::string_view qname);

// Shortest "prefix:local" form for an IRI, using the longest matching
// namespace whose remainder is a safe Turtle local name. nullopt if none.
std::optional<std::string> compact(const PrefixMap& prefixes, std::string_view iri);

// True if `local` can be written after "prefix:" without escaping.
bool is_safe_local_name(std::string_view local);

// Prefixes every document may use without declaring them (rdf, rdfs, xsd,
// owl, dcterms, skos).
const PrefixMap& well_known_prefixes();

}  // namespace i40sh::rdf
