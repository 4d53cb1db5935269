#include "i40sh/vocab/validate.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "json.hpp"

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::vocab {

namespace {

using rdf::Term;

Term iri(std::string value) { return Term::iri(std::move(value)); }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

class Checker {
 public:
  Checker(const rdf::Graph& data, const VocabularyDefinition& vocab)
      : data_(data), vocab_(vocab), types_(data, vocab) {}

  ValidationReport run() {
    const auto shells = types_.instances_of(iri(ns::i40c("AdministrativeShell")));
    const auto objects = types_.instances_of(iri(ns::i40c("Object")));
    for (const auto& shell : shells) {
      check_surround(shell);
      check_labels(shell, "shell");
    }
    for (const auto& object : objects) {
      check_object_iri(object);
      check_identifier(object);
      check_labels(object, "object");
    }
    check_dates();
    check_predicates();
    check_images();
    std::sort(report_.findings.begin(), report_.findings.end(), [](const Finding& a, const Finding& b) {
      return std::tie(a.rule_id, a.focus, a.message) < std::tie(b.rule_id, b.focus, b.message);
    });
    return std::move(report_);
  }

 private:
  void add(Severity severity, const char* rule, const Term& focus, std::string message) {
    report_.findings.push_back({severity, rule, focus, std::move(message)});
  }

  void check_surround(const Term& shell) {
    auto surrounds = data_.match(shell, iri(ns::i40c("surround")), std::nullopt);
    if (surrounds.empty()) {
      add(Severity::Violation, "R1", shell, "shell has no i40c:surround");
    } else if (surrounds.size() > 1) {
      add(Severity::Violation, "R1", shell,
          "shell has " + std::to_string(surrounds.size()) + " i40c:surround values, expected 1");
    } else if (!types_.has_type(surrounds.front().object, iri(ns::i40c("Object")))) {
      add(Severity::Violation, "R1", shell,
          "i40c:surround value " + surrounds.front().object.ntriples() + " is not typed i40c:Object");
    }
  }

  void check_object_iri(const Term& object) {
    if (!object.is_iri()) {
      add(Severity::Violation, "R2", object, "object is not identified by an IRI");
    } else if (!object.value().starts_with("http://") && !object.value().starts_with("https://")) {
      add(Severity::Violation, "R2", object, "object IRI is not an http(s) IRI");
    }
  }

  void check_identifier(const Term& object) {
    if (data_.count(object, iri(ns::i40c("hasId")), std::nullopt) == 0 &&
        data_.count(object, iri(ns::dcterms("identifier")), std::nullopt) == 0) {
      add(Severity::Violation, "R3", object, "object has neither i40c:hasId nor dcterms:identifier");
    }
  }

  void check_labels(const Term& node, const char* what) {
    std::set<std::string> languages;
    for (const auto& t : data_.match(node, iri(ns::rdfs("label")), std::nullopt)) {
      if (t.object.is_literal() && t.object.has_language()) languages.insert(t.object.language());
    }
    if (languages.empty()) {
      add(Severity::Warning, "R4", node, std::string(what) + " has no language-tagged rdfs:label");
      add(Severity::Warning, "R5", node, std::string(what) + " is labelled in no language");
    } else if (languages.size() == 1) {
      add(Severity::Warning, "R5", node,
          std::string(what) + " is labelled in one language only (" + *languages.begin() + ")");
    }
  }

  void check_dates() {
    const std::string xsd_date = ns::xsd("date");
    for (const auto& t : data_.match(std::nullopt, iri(ns::i40c("hasDate")), std::nullopt)) {
      if (t.object.is_literal() && t.object.datatype() == xsd_date && !is_valid_xsd_date(t.object.value())) {
        add(Severity::Violation, "R6", t.subject, "\"" + t.object.value() + "\" is not a valid xsd:date");
      }
    }
  }

  void check_predicates() {
    std::set<Term> typed;
    for (const auto& t : data_.match(std::nullopt, iri(ns::rdf_type()), std::nullopt)) typed.insert(t.subject);
    for (const auto& node : typed) {
      std::set<Term> reported;
      for (const auto& t : data_.match(node, std::nullopt, std::nullopt)) {
        if (vocab_.is_known_predicate(t.predicate) || !reported.insert(t.predicate).second) continue;
        add(Severity::Warning, "R7", node, "predicate " + t.predicate.ntriples() + " is not in the vocabulary");
      }
    }
  }

  void check_images() {
    for (const auto& t : data_.match(std::nullopt, iri(ns::i40c("image")), std::nullopt)) {
      if (t.object.is_literal()) {
        add(Severity::Warning, "R8", t.subject, "i40c:image \"" + t.object.value() + "\" should be an IRI");
      }
    }
  }

  const rdf::Graph& data_;
  const VocabularyDefinition& vocab_;
  TypeResolver types_;
  ValidationReport report_;
};

}  // namespace

std::string_view severity_name(Severity s) { return s == Severity::Violation ? "Violation" : "Warning"; }

std::size_t ValidationReport::violation_count() const {
  return std::count_if(findings.begin(), findings.end(),
                       [](const Finding& f) { return f.severity == Severity::Violation; });
}

std::size_t ValidationReport::warning_count() const { return findings.size() - violation_count(); }

std::vector<Finding> ValidationReport::by_rule(std::string_view rule_id) const {
  std::vector<Finding> out;
  std::copy_if(findings.begin(), findings.end(), std::back_inserter(out),
               [&](const Finding& f) { return f.rule_id == rule_id; });
  return out;
}

std::string ValidationReport::to_json() const {
  nlohmann::json j;
  j["conforms"] = conforms();
  j["violations"] = violation_count();
  j["warnings"] = warning_count();
  j["findings"] = nlohmann::json::array();
  for (const auto& f : findings) {
    j["findings"].push_back({{"severity", severity_name(f.severity)},
                             {"rule", f.rule_id},
                             {"focus", f.focus.is_iri() ? f.focus.value() : f.focus.ntriples()},
                             {"message", f.message}});
  }
  return j.dump();
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& f : findings) {
    out += std::string(severity_name(f.severity)) + " " + f.rule_id + " " + f.focus.ntriples() + ": " +
           f.message + "\n";
  }
  return out;
}

ValidationReport validate(const rdf::Graph& data, const VocabularyDefinition& vocab) {
  return Checker(data, vocab).run();
}

bool is_valid_xsd_date(std::string_view s) {
  std::size_t pos = 0;
  if (!s.empty() && s[0] == '-') pos = 1;
  const std::size_t dash = s.find('-', pos);
  if (dash == std::string_view::npos) return false;
  const auto year = s.substr(pos, dash - pos);
  if (!all_digits(year) || year.size() < 4 || (year.size() > 4 && year[0] == '0')) return false;
  if (year.size() > 6) return false;  // beyond std::chrono::year's range
  if (s.size() < dash + 6 || s[dash + 3] != '-') return false;
  const auto month = s.substr(dash + 1, 2);
  const auto day = s.substr(dash + 4, 2);
  if (!all_digits(month) || !all_digits(day)) return false;

  const int y = (pos == 1 ? -1 : 1) * to_int(year);
  const std::chrono::year_month_day ymd{std::chrono::year{y},
                                        std::chrono::month{static_cast<unsigned>(to_int(month))},
                                        std::chrono::day{static_cast<unsigned>(to_int(day))}};
  if (!ymd.ok()) return false;

  const auto zone = s.substr(dash + 6);
  if (zone.empty() || zone == "Z") return true;
  if (zone.size() != 6 || (zone[0] != '+' && zone[0] != '-') || zone[3] != ':') return false;
  const auto hh = zone.substr(1, 2);
  const auto mm = zone.substr(4, 2);
  if (!all_digits(hh) || !all_digits(mm)) return false;
  const int h = to_int(hh);
  const int m = to_int(mm);
  return m < 60 && (h < 14 || (h == 14 && m == 0));
}

}  // namespace i40sh::vocab
