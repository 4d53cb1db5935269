#include "i40sh/rdf/graph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace i40sh::rdf {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw TermError("literal in subject position: " + subject.ntriples());
  if (!predicate.is_iri()) throw TermError("predicate must be an IRI: " + predicate.ntriples());
}

std::string Triple::ntriples() const {
  return subject.ntriples() + " " + predicate.ntriples() + " " + object.ntriples() + " .";
}

bool Graph::add(Index& index, const Term& a, const Term& b, const Term& c) {
  return index[a][b].insert(c).second;
}

bool Graph::remove(Index& index, const Term& a, const Term& b, const Term& c) {
  auto first = index.find(a);
  if (first == index.end()) return false;
  auto second = first->second.find(b);
  if (second == first->second.end()) return false;
  if (second->second.erase(c) == 0) return false;
  if (second->second.empty()) first->second.erase(second);
  if (first->second.empty()) index.erase(first);
  return true;
}

bool Graph::insert(const Triple& t) {
  if (!add(spo_, t.subject, t.predicate, t.object)) return false;
  add(pos_, t.predicate, t.object, t.subject);
  add(osp_, t.object, t.subject, t.predicate);
  ++size_;
  return true;
}

bool Graph::erase(const Triple& t) {
  if (!remove(spo_, t.subject, t.predicate, t.object)) return false;
  remove(pos_, t.predicate, t.object, t.subject);
  remove(osp_, t.object, t.subject, t.predicate);
  --size_;
  return true;
}

bool Graph::contains(const Triple& t) const {
  auto first = spo_.find(t.subject);
  if (first == spo_.end()) return false;
  auto second = first->second.find(t.predicate);
  return second != first->second.end() && second->second.contains(t.object);
}

IndexOrder Graph::index_for(bool s_bound, bool p_bound, bool o_bound) {
  if (s_bound) return (o_bound && !p_bound) ? IndexOrder::Osp : IndexOrder::Spo;
  if (p_bound) return IndexOrder::Pos;
  if (o_bound) return IndexOrder::Osp;
  return IndexOrder::Spo;
}

namespace {

using Index = std::map<Term, std::map<Term, std::set<Term>>>;
using Slot = const std::optional<Term>*;

// Walks `index` with up to three leading keys; `emit` receives the keys in
// index order.
template <typename Emit>
void scan(const Index& index, Slot a, Slot b, Slot c, Emit&& emit) {
  auto visit_third = [&](const Term& x, const Term& y, const std::set<Term>& thirds) {
    if (c->has_value()) {
      if (thirds.contains(**c)) emit(x, y, **c);
      return;
    }
    for (const auto& z : thirds) emit(x, y, z);
  };
  auto visit_second = [&](const Term& x, const std::map<Term, std::set<Term>>& seconds) {
    if (b->has_value()) {
      auto it = seconds.find(**b);
      if (it != seconds.end()) visit_third(x, it->first, it->second);
      return;
    }
    for (const auto& [y, thirds] : seconds) visit_third(x, y, thirds);
  };
  if (a->has_value()) {
    auto it = index.find(**a);
    if (it != index.end()) visit_second(it->first, it->second);
    return;
  }
  for (const auto& [x, seconds] : index) visit_second(x, seconds);
}

}  // namespace

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::vector<Triple> out;
  switch (index_for(s.has_value(), p.has_value(), o.has_value())) {
    case IndexOrder::Spo:
      scan(spo_, &s, &p, &o, [&](const Term& x, const Term& y, const Term& z) {
        out.emplace_back(x, y, z);
      });
      break;
    case IndexOrder::Pos:
      scan(pos_, &p, &o, &s, [&](const Term& x, const Term& y, const Term& z) {
        out.emplace_back(z, x, y);
      });
      break;
    case IndexOrder::Osp:
      scan(osp_, &o, &s, &p, [&](const Term& x, const Term& y, const Term& z) {
        out.emplace_back(y, z, x);
      });
      break;
  }
  return out;
}

std::size_t Graph::count(const std::optional<Term>& s, const std::optional<Term>& p,
                         const std::optional<Term>& o) const {
  std::size_t n = 0;
  auto tally = [&](const Term&, const Term&, const Term&) { ++n; };
  switch (index_for(s.has_value(), p.has_value(), o.has_value())) {
    case IndexOrder::Spo: scan(spo_, &s, &p, &o, tally); break;
    case IndexOrder::Pos: scan(pos_, &p, &o, &s, tally); break;
    case IndexOrder::Osp: scan(osp_, &o, &s, &p, tally); break;
  }
  return n;
}

std::vector<Triple> Graph::triples() const { return index_contents(IndexOrder::Spo); }

std::vector<Term> Graph::subjects() const {
  std::vector<Term> out;
  out.reserve(spo_.size());
  for (const auto& entry : spo_) out.push_back(entry.first);
  return out;
}

std::set<Term> Graph::terms() const {
  std::set<Term> out;
  for (const auto& [s, po] : spo_) {
    out.insert(s);
    for (const auto& [p, objects] : po) {
      out.insert(p);
      out.insert(objects.begin(), objects.end());
    }
  }
  return out;
}

std::set<std::string> Graph::blank_labels() const {
  std::set<std::string> out;
  for (const auto& term : terms()) {
    if (term.is_blank()) out.insert(term.value());
  }
  return out;
}

std::vector<Triple> Graph::index_contents(IndexOrder order) const {
  std::vector<Triple> out;
  out.reserve(size_);
  const std::optional<Term> none;
  switch (order) {
    case IndexOrder::Spo:
      scan(spo_, &none, &none, &none,
           [&](const Term& s, const Term& p, const Term& o) { out.emplace_back(s, p, o); });
      break;
    case IndexOrder::Pos:
      scan(pos_, &none, &none, &none,
           [&](const Term& p, const Term& o, const Term& s) { out.emplace_back(s, p, o); });
      break;
    case IndexOrder::Osp:
      scan(osp_, &none, &none, &none,
           [&](const Term& o, const Term& s, const Term& p) { out.emplace_back(s, p, o); });
      break;
  }
  return out;
}

bool Graph::indexes_consistent() const {
  auto spo = index_contents(IndexOrder::Spo);
  auto pos = index_contents(IndexOrder::Pos);
  auto osp = index_contents(IndexOrder::Osp);
  if (spo.size() != size_ || pos.size() != size_ || osp.size() != size_) return false;
  std::sort(pos.begin(), pos.end());
  std::sort(osp.begin(), osp.end());
  // S->P->O order is already the natural Triple ordering.
  return spo == pos && spo == osp;
}

Graph merge(const Graph& a, const Graph& b) {
  Graph result = a;
  for (const auto& [label, iri] : b.prefixes()) result.prefixes().try_emplace(label, iri);

  auto used = a.blank_labels();
  auto b_labels = b.blank_labels();
  used.insert(b_labels.begin(), b_labels.end());

  std::map<std::string, Term> renamed;
  std::size_t counter = 0;
  auto rename = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = renamed.find(t.value());
    if (it != renamed.end()) return it->second;
    std::string label;
    do {
      label = "b" + std::to_string(++counter);
    } while (used.contains(label));
    used.insert(label);
    return renamed.emplace(t.value(), Term::blank(label)).first->second;
  };
  for (const auto& t : b.triples()) result.insert(rename(t.subject), t.predicate, rename(t.object));
  return result;
}

Graph concise_bounded_description(const Graph& graph, const Term& resource) {
  Graph out(graph.prefixes());
  std::set<Term> visited;
  std::vector<Term> pending{resource};
  while (!pending.empty()) {
    Term node = pending.back();
    pending.pop_back();
    if (!visited.insert(node).second) continue;
    for (const auto& t : graph.match(node, std::nullopt, std::nullopt)) {
      out.insert(t);
      if (t.object.is_blank() && !visited.contains(t.object)) pending.push_back(t.object);
    }
  }
  return out;
}

namespace {

// Colour refinement over blank nodes: each round hashes a node's colour with
// the colours of its neighbourhood. Ground terms keep their N-Triples form.
std::map<Term, std::size_t> refine_colours(const Graph& g) {
  std::map<Term, std::size_t> colour;
  for (const auto& term : g.terms()) {
    if (term.is_blank()) colour[term] = 0;
  }
  auto triples = g.triples();
  std::hash<std::string> h;
  auto term_colour = [&](const Term& t) -> std::size_t {
    if (t.is_blank()) return colour.at(t) * 1000003u + 17u;
    return h(t.ntriples());
  };
  for (std::size_t round = 0; round < 4; ++round) {
    std::map<Term, std::vector<std::size_t>> sigs;
    for (const auto& t : triples) {
      std::size_t p = h(t.predicate.ntriples());
      if (t.subject.is_blank())
        sigs[t.subject].push_back(p * 31u + term_colour(t.object) * 7u + 1u);
      if (t.object.is_blank())
        sigs[t.object].push_back(p * 37u + term_colour(t.subject) * 11u + 2u);
    }
    std::map<Term, std::size_t> next;
    for (auto& [node, c] : colour) {
      auto& sig = sigs[node];
      std::sort(sig.begin(), sig.end());
      std::size_t acc = c;
      for (auto v : sig) acc = acc * 1099511628211u ^ v;
      next[node] = acc;
    }
    colour = std::move(next);
  }
  return colour;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  auto a_labels = a.blank_labels();
  auto b_labels = b.blank_labels();
  if (a_labels.size() != b_labels.size()) return false;
  if (a_labels.empty()) return a == b;

  auto a_colour = refine_colours(a);
  auto b_colour = refine_colours(b);
  std::multiset<std::size_t> a_multiset, b_multiset;
  for (const auto& [_, c] : a_colour) a_multiset.insert(c);
  for (const auto& [_, c] : b_colour) b_multiset.insert(c);
  if (a_multiset != b_multiset) return false;

  std::vector<Term> a_nodes;
  for (const auto& [node, _] : a_colour) a_nodes.push_back(node);
  // Rarest colours first keeps the search narrow.
  std::map<std::size_t, std::size_t> frequency;
  for (auto c : a_multiset) ++frequency[c];
  std::stable_sort(a_nodes.begin(), a_nodes.end(), [&](const Term& x, const Term& y) {
    return frequency[a_colour[x]] < frequency[a_colour[y]];
  });

  auto a_triples = a.triples();
  for (const auto& t : a_triples) {
    if (!t.subject.is_blank() && !t.object.is_blank() && !b.contains(t)) return false;
  }
  std::map<Term, Term> mapping;
  std::set<Term> taken;

  auto map_term = [&](const Term& t) -> std::optional<Term> {
    if (!t.is_blank()) return t;
    auto it = mapping.find(t);
    if (it == mapping.end()) return std::nullopt;
    return it->second;
  };
  // Every a-triple whose blank nodes are all mapped must exist in b.
  auto consistent = [&](const Term& node) {
    for (const auto& t : a_triples) {
      if (t.subject != node && t.object != node) continue;
      auto s = map_term(t.subject);
      auto o = map_term(t.object);
      if (!s || !o) continue;
      if (!b.contains(Triple(*s, t.predicate, *o))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == a_nodes.size()) return true;
    const Term& node = a_nodes[i];
    for (const auto& [candidate, c] : b_colour) {
      if (c != a_colour[node] || taken.contains(candidate)) continue;
      mapping.insert_or_assign(node, candidate);
      taken.insert(candidate);
      if (consistent(node) && search(i + 1)) return true;
      taken.erase(candidate);
      mapping.erase(node);
    }
    return false;
  };
  return search(0);
}

}  // namespace i40sh::rdf
