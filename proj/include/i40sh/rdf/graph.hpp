#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "i40sh/rdf/prefix_map.hpp"
#include "i40sh/rdf/term.hpp"
#include "i40sh/rdf/triple.hpp"

namespace i40sh::rdf {

enum class IndexOrder { Spo, Pos, Osp };

// In-memory triple set with three nested-map indexes (S->P->O, P->O->S,
// O->S->P) and the prefix map of the document it came from.
//
// A Graph is a plain value: const member functions may run concurrently,
// mutation requires exclusive access. Callers that share a graph between
// threads (the registry) provide that exclusion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(PrefixMap prefixes) : prefixes_(std::move(prefixes)) {}

  // Returns false if the triple was already present.
  bool insert(const Triple& t);
  bool insert(Term s, Term p, Term o) { return insert(Triple(std::move(s), std::move(p), std::move(o))); }
  // Returns false if the triple was absent.
  bool erase(const Triple& t);
  bool contains(const Triple& t) const;

  // Triples matching every bound position, in the order of the index chosen
  // by index_for().
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  std::size_t count(const std::optional<Term>& s, const std::optional<Term>& p,
                    const std::optional<Term>& o) const;

  // Index whose leading positions cover the most bound positions.
  static IndexOrder index_for(bool s_bound, bool p_bound, bool o_bound);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // All triples in S->P->O order.
  std::vector<Triple> triples() const;
  std::vector<Term> subjects() const;
  // Every term occurring in any position, sorted.
  std::set<Term> terms() const;
  std::set<std::string> blank_labels() const;

  const PrefixMap& prefixes() const { return prefixes_; }
  PrefixMap& prefixes() { return prefixes_; }
  void set_prefix(std::string label, std::string namespace_iri) {
    prefixes_[std::move(label)] = std::move(namespace_iri);
  }

  // Snapshot of one index flattened back into (s, p, o) triples; used to
  // check that all indexes hold the same set.
  std::vector<Triple> index_contents(IndexOrder order) const;
  bool indexes_consistent() const;

  // Triple-set equality; prefix maps are presentation and not compared.
  friend bool operator==(const Graph& a, const Graph& b) { return a.spo_ == b.spo_; }

 private:
  using Index = std::map<Term, std::map<Term, std::set<Term>>>;

  static bool add(Index& index, const Term& a, const Term& b, const Term& c);
  static bool remove(Index& index, const Term& a, const Term& b, const Term& c);

  Index spo_;
  Index pos_;
  Index osp_;
  std::size_t size_ = 0;
  PrefixMap prefixes_;
};

// Set union. Blank nodes of `b` are relabelled with fresh labels unused in
// either input; prefix bindings of `a` win on conflict.
Graph merge(const Graph& a, const Graph& b);

// Graph equality modulo a bijective renaming of blank nodes.
bool isomorphic(const Graph& a, const Graph& b);

// All triples with `resource` as subject plus, transitively, the
// descriptions of blank nodes reachable as objects. Carries the prefixes of
// `graph`.
Graph concise_bounded_description(const Graph& graph, const Term& resource);

}  // namespace i40sh::rdf
