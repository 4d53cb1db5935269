#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "i40sh/rdf/graph.hpp"

namespace i40sh::vocab {

// Which step of the fallback chain produced a label.
enum class LabelMatch { Exact, English, Any };

std::string_view label_match_name(LabelMatch m);

struct LabelLookup {
  std::string value;
  // Empty for an untagged label.
  std::string language;
  LabelMatch match;
};

// rdfs:label of `resource` in `lang` (case-insensitive), else in English
// ("en" before "en-*"), else the first label in index order.
std::optional<LabelLookup> get_label(const rdf::Graph& graph, const rdf::Term& resource,
                                     std::string_view lang);

}  // namespace i40sh::vocab
