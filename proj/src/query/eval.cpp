#include <algorithm>
#include <set>

#include "i40sh/query/query.hpp"
#include "i40sh/rdf/namespaces.hpp"
#include "json.hpp"

namespace i40sh::query {

namespace {

using rdf::Term;

const Variable* as_variable(const PatternTerm& t) { return std::get_if<Variable>(&t); }

std::size_t bound_positions(const TriplePattern& p, const std::set<std::string>& bound) {
  std::size_t n = 0;
  for (const auto* t : {&p.subject, &p.predicate, &p.object}) {
    const auto* v = as_variable(*t);
    if (v == nullptr || bound.contains(v->name)) ++n;
  }
  return n;
}

std::optional<Term> resolve(const PatternTerm& t, const BindingSet& b) {
  if (const auto* v = as_variable(t)) {
    auto it = b.find(v->name);
    if (it == b.end()) return std::nullopt;
    return it->second;
  }
  return std::get<Term>(t);
}

// Binds `t` to `value` in `b`; false if it conflicts with an earlier binding
// from the same triple (e.g. ?x p ?x).
bool bind(const PatternTerm& t, const Term& value, BindingSet& b) {
  const auto* v = as_variable(t);
  if (v == nullptr) return true;
  auto [it, inserted] = b.emplace(v->name, value);
  return inserted || it->second == value;
}

}  // namespace

std::vector<std::size_t> join_order(const std::vector<TriplePattern>& patterns) {
  std::vector<std::size_t> order;
  std::vector<bool> used(patterns.size(), false);
  std::set<std::string> bound;
  for (std::size_t step = 0; step < patterns.size(); ++step) {
    std::size_t best = patterns.size();
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (used[i]) continue;
      std::size_t score = bound_positions(patterns[i], bound);
      if (best == patterns.size() || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (const auto* t : {&patterns[best].subject, &patterns[best].predicate, &patterns[best].object}) {
      if (const auto* v = as_variable(*t)) bound.insert(v->name);
    }
  }
  return order;
}

std::vector<BindingSet> eval_bgp(const rdf::Graph& graph, const std::vector<TriplePattern>& patterns) {
  std::vector<BindingSet> solutions{BindingSet{}};
  for (std::size_t index : join_order(patterns)) {
    const auto& p = patterns[index];
    std::vector<BindingSet> next;
    for (const auto& partial : solutions) {
      auto s = resolve(p.subject, partial);
      auto pr = resolve(p.predicate, partial);
      auto o = resolve(p.object, partial);
      // A literal or blank node in predicate position, or a literal
      // subject, can never match; Graph::match would reject it.
      if ((s && s->is_literal()) || (pr && !pr->is_iri())) continue;
      for (const auto& t : graph.match(s, pr, o)) {
        BindingSet extended = partial;
        if (bind(p.subject, t.subject, extended) && bind(p.predicate, t.predicate, extended) &&
            bind(p.object, t.object, extended)) {
          next.push_back(std::move(extended));
        }
      }
    }
    solutions = std::move(next);
    if (solutions.empty()) break;
  }
  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  return solutions;
}

QueryResult eval(const rdf::Graph& graph, const Query& query) {
  auto solutions = eval_bgp(graph, query.where);

  if (query.is_select()) {
    Solutions out{query.result_variables(), {}};
    std::set<BindingSet> rows;
    for (const auto& s : solutions) {
      BindingSet row;
      for (const auto& v : out.vars) {
        if (auto it = s.find(v); it != s.end()) row.emplace(v, it->second);
      }
      rows.insert(std::move(row));
    }
    out.rows.assign(rows.begin(), rows.end());
    return out;
  }

  rdf::Graph result(graph.prefixes());
  for (const auto& [label, iri] : query.prefixes) result.set_prefix(label, iri);
  const auto& templ = std::get<ConstructForm>(query.form).templ;
  std::size_t n = 0;
  for (const auto& s : solutions) {
    ++n;
    auto instantiate = [&](const PatternTerm& t) -> std::optional<Term> {
      if (const auto* term = std::get_if<Term>(&t); term != nullptr && term->is_blank()) {
        return Term::blank("c" + std::to_string(n) + "_" + term->value());
      }
      return resolve(t, s);
    };
    for (const auto& p : templ) {
      auto subj = instantiate(p.subject);
      auto pred = instantiate(p.predicate);
      auto obj = instantiate(p.object);
      if (!subj || !pred || !obj || subj->is_literal() || !pred->is_iri()) continue;
      result.insert(*subj, *pred, *obj);
    }
  }
  return result;
}

std::string solutions_json(const Solutions& solutions) {
  nlohmann::json j;
  j["vars"] = solutions.vars;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : solutions.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (const auto& [var, term] : row) {
      nlohmann::json cell;
      switch (term.kind()) {
        case rdf::TermKind::Iri:
          cell["type"] = "iri";
          break;
        case rdf::TermKind::BlankNode:
          cell["type"] = "bnode";
          break;
        case rdf::TermKind::Literal:
          cell["type"] = "literal";
          break;
      }
      cell["value"] = term.value();
      if (term.is_literal()) {
        if (term.has_language()) {
          cell["lang"] = term.language();
        } else if (term.datatype() != ns::xsd_string()) {
          cell["datatype"] = term.datatype();
        }
      }
      r[var] = std::move(cell);
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

}  // namespace i40sh::query
