#pragma once

#include <compare>
#include <string>

#include "i40sh/rdf/term.hpp"

namespace i40sh::rdf {

// Subject is an IRI or blank node, predicate an IRI; enforced on
// construction.
struct Triple {
  Triple(Term s, Term p, Term o);

  Term subject;
  Term predicate;
  Term object;

  std::string ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace i40sh::rdf
