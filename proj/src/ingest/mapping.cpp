#include "i40sh/ingest/mapping.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::ingest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) != 0) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) == 0) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool istarts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), s.begin(), [](char a, char b) {
           return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
         });
}

struct RawRule {
  std::size_t line;
  std::string column;
  std::string rhs;
};

class MappingParser {
 public:
  MappingSpec run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      line(line_no, trim(text.substr(start, end - start)));
      start = end + 1;
    }
    resolve();
    if (!diagnostics_.empty()) throw MappingError(std::move(diagnostics_));
    return std::move(spec_);
  }

 private:
  void error(std::size_t line, std::string message) { diagnostics_.push_back({line, std::move(message)}); }

  void line(std::size_t n, std::string_view text) {
    if (text.empty() || text.front() == '#') return;
    if (istarts_with(text, "@prefix") || (istarts_with(text, "prefix") && text.size() > 6 &&
                                          std::isspace(static_cast<unsigned char>(text[6])) != 0)) {
      prefix(n, text.substr(text.front() == '@' ? 7 : 6));
      return;
    }
    if (text.front() == '@') {
      error(n, "unknown directive '" + std::string(split_ws(text).front()) + "'");
      return;
    }

    std::string column;
    bool quoted = false;
    std::size_t eq;
    if (text.front() == '"') {
      std::size_t close = text.find('"', 1);
      if (close == std::string_view::npos) {
        error(n, "unterminated quoted column name");
        return;
      }
      column = std::string(text.substr(1, close - 1));
      quoted = true;
      eq = text.find('=', close + 1);
      if (eq == std::string_view::npos || !trim(text.substr(close + 1, eq - close - 1)).empty()) {
        error(n, "expected '=' after column name");
        return;
      }
    } else {
      eq = text.find('=');
      if (eq == std::string_view::npos) {
        error(n, "expected 'column = predicate'");
        return;
      }
      column = std::string(trim(text.substr(0, eq)));
    }
    std::string rhs(trim(text.substr(eq + 1)));
    if (column.empty()) {
      error(n, "missing column name before '='");
      return;
    }
    if (rhs.empty()) {
      error(n, "missing value after '='");
      return;
    }

    if (!quoted) {
      if (column == "subject" || column == "shell" || column == "type" || column == "key") {
        directive(n, column, rhs);
        return;
      }
      if (column.find_first_of(" \t\"") != std::string::npos) {
        error(n, "column name '" + column + "' must be quoted");
        return;
      }
    }
    rules_.push_back({n, column, rhs});
  }

  void prefix(std::size_t n, std::string_view rest) {
    rest = trim(rest);
    if (!rest.empty() && rest.back() == '.') rest = trim(rest.substr(0, rest.size() - 1));
    auto parts = split_ws(rest);
    if (parts.size() != 2 || parts[0].empty() || parts[0].back() != ':' || parts[1].size() < 2 ||
        parts[1].front() != '<' || parts[1].back() != '>') {
      error(n, "expected '@prefix label: <namespace> .'");
      return;
    }
    std::string ns_iri(parts[1].substr(1, parts[1].size() - 2));
    if (!rdf::is_absolute_iri(ns_iri)) {
      error(n, "namespace '" + ns_iri + "' is not an absolute IRI");
      return;
    }
    spec_.prefixes[std::string(parts[0].substr(0, parts[0].size() - 1))] = ns_iri;
  }

  void directive(std::size_t n, const std::string& name, const std::string& rhs) {
    auto [it, inserted] = directive_lines_.emplace(name, n);
    if (!inserted) {
      error(n, "duplicate '" + name + "' directive (first on line " + std::to_string(it->second) + ")");
      return;
    }
    directives_[name] = rhs;
  }

  std::optional<rdf::Term> term(std::size_t n, std::string_view text) {
    try {
      if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
        std::string iri(text.substr(1, text.size() - 2));
        if (!rdf::is_absolute_iri(iri)) {
          error(n, "'" + iri + "' is not an absolute IRI");
          return std::nullopt;
        }
        return rdf::Term::iri(iri);
      }
      if (text == "a") return rdf::Term::iri(ns::rdf_type());
      rdf::PrefixMap merged = spec_.prefixes;
      for (const auto& [label, iri] : rdf::well_known_prefixes()) merged.try_emplace(label, iri);
      if (text.find(':') == std::string_view::npos) {
        error(n, "'" + std::string(text) + "' is neither <IRI> nor prefix:name");
        return std::nullopt;
      }
      return rdf::expand(merged, text);
    } catch (const rdf::UnknownPrefix& e) {
      error(n, "unknown prefix '" + e.prefix() + "'");
    } catch (const rdf::TermError& e) {
      error(n, e.what());
    }
    return std::nullopt;
  }

  // Checks {column} syntax and that the template yields an absolute IRI.
  bool check_template(std::size_t n, std::string_view tmpl) {
    std::string probe;
    std::size_t i = 0;
    while (i < tmpl.size()) {
      if (tmpl[i] == '}') {
        error(n, "unbalanced '}' in template");
        return false;
      }
      if (tmpl[i] != '{') {
        probe += tmpl[i++];
        continue;
      }
      std::size_t close = tmpl.find('}', i);
      if (close == std::string_view::npos || close == i + 1 ||
          tmpl.substr(i + 1, close - i - 1).find('{') != std::string_view::npos) {
        error(n, "malformed {column} placeholder in template");
        return false;
      }
      probe += "x";
      i = close + 1;
    }
    if (!rdf::is_absolute_iri(probe)) {
      error(n, "template does not form an absolute IRI");
      return false;
    }
    return true;
  }

  std::string unbracket(const std::string& s) {
    if (s.size() >= 2 && s.front() == '<' && s.back() == '>') return s.substr(1, s.size() - 2);
    return s;
  }

  void resolve() {
    if (auto it = directives_.find("subject"); it == directives_.end()) {
      error(0, "missing 'subject = template' directive");
    } else {
      spec_.subject_template = unbracket(it->second);
      check_template(directive_lines_["subject"], spec_.subject_template);
    }
    if (auto it = directives_.find("shell"); it != directives_.end()) {
      spec_.shell_template = unbracket(it->second);
      check_template(directive_lines_["shell"], spec_.shell_template);
    }
    if (auto it = directives_.find("type"); it != directives_.end()) {
      spec_.type = term(directive_lines_["type"], it->second);
    }

    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    std::set<std::string> columns;
    for (const auto& raw : rules_) {
      auto parts = split_ws(raw.rhs);
      if (parts.size() > 2) {
        error(raw.line, "expected 'predicate [@lang | ^^datatype | <template>]'");
        continue;
      }
      auto predicate = term(raw.line, parts[0]);
      if (!predicate) continue;
      ColumnRule rule{raw.column, *predicate, ValueKind::String, {}, raw.line};
      if (parts.size() == 2) {
        std::string_view mod = parts[1];
        if (mod.starts_with("@")) {
          rule.kind = ValueKind::Language;
          rule.argument = std::string(mod.substr(1));
          if (!rdf::is_valid_language_tag(rule.argument)) {
            error(raw.line, "invalid language tag '" + rule.argument + "'");
            continue;
          }
        } else if (mod.starts_with("^^")) {
          auto dt = term(raw.line, mod.substr(2));
          if (!dt) continue;
          rule.kind = ValueKind::Typed;
          rule.argument = dt->value();
        } else if (mod.size() >= 2 && mod.front() == '<' && mod.back() == '>') {
          rule.kind = ValueKind::IriTemplate;
          rule.argument = std::string(mod.substr(1, mod.size() - 2));
          if (!check_template(raw.line, rule.argument)) continue;
        } else {
          error(raw.line, "unknown value modifier '" + std::string(mod) + "'");
          continue;
        }
      }
      auto [it, inserted] = seen.emplace(std::make_pair(rule.column, rule.predicate.value()), raw.line);
      if (!inserted) {
        error(raw.line, "duplicate rule for column '" + rule.column + "' and predicate " +
                            rule.predicate.ntriples() + " (first on line " + std::to_string(it->second) + ")");
        continue;
      }
      columns.insert(rule.column);
      spec_.rules.push_back(std::move(rule));
    }

    auto placeholders = template_columns(spec_.subject_template);
    if (auto it = directives_.find("key"); it != directives_.end()) {
      spec_.key_column = it->second;
    } else if (!placeholders.empty()) {
      spec_.key_column = placeholders.front();
    } else if (!spec_.subject_template.empty()) {
      error(directive_lines_["subject"], "subject template has no {column} placeholder and no key is declared");
    }
    for (const auto& p : placeholders) {
      if (p != spec_.key_column && !columns.contains(p)) {
        error(directive_lines_["subject"], "template column '" + p + "' is neither mapped nor the key");
      }
    }
  }

  MappingSpec spec_;
  std::vector<MappingDiagnostic> diagnostics_;
  std::vector<RawRule> rules_;
  std::map<std::string, std::string> directives_;
  std::map<std::string, std::size_t> directive_lines_;
};

std::string summarize(const std::vector<MappingDiagnostic>& diagnostics) {
  std::string out = "invalid mapping";
  for (const auto& d : diagnostics) out += "\n  " + d.to_string();
  return out;
}

}  // namespace

MappingError::MappingError(std::vector<MappingDiagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::set<std::string> MappingSpec::referenced_columns() const {
  std::set<std::string> out;
  for (const auto& r : rules) {
    out.insert(r.column);
    if (r.kind == ValueKind::IriTemplate) {
      for (auto& c : template_columns(r.argument)) out.insert(std::move(c));
    }
  }
  for (auto& c : template_columns(subject_template)) out.insert(std::move(c));
  for (auto& c : template_columns(shell_template)) out.insert(std::move(c));
  if (!key_column.empty()) out.insert(key_column);
  return out;
}

MappingSpec parse_mapping(std::string_view text) { return MappingParser().run(text); }

std::vector<std::string> template_columns(std::string_view tmpl) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while ((i = tmpl.find('{', i)) != std::string_view::npos) {
    std::size_t close = tmpl.find('}', i);
    if (close == std::string_view::npos) break;
    std::string name(tmpl.substr(i + 1, close - i - 1));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    i = close + 1;
  }
  return out;
}

std::string percent_encode(std::string_view value) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : value) {
    if (std::isalnum(c) != 0 || c == '-' || c == '.' || c == '_' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

}  // namespace i40sh::ingest
