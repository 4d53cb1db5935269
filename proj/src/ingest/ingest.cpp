#include "i40sh/ingest/ingest.hpp"

#include "i40sh/rdf/namespaces.hpp"

namespace i40sh::ingest {

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

HeaderMismatch::HeaderMismatch(std::vector<std::string> missing)
    : std::runtime_error("CSV header lacks mapped column(s): " + join(missing)), missing_(std::move(missing)) {}

std::optional<std::string> expand_template(std::string_view tmpl, const std::map<std::string, std::string>& cells) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    std::size_t close = tmpl.find('}', i);
    auto it = cells.find(std::string(tmpl.substr(i + 1, close - i - 1)));
    if (it == cells.end() || it->second.empty()) return std::nullopt;
    out += percent_encode(it->second);
    i = close + 1;
  }
  return out;
}

IngestResult ingest_csv(const CsvTable& table, const MappingSpec& spec) {
  std::vector<std::string> missing;
  for (const auto& column : spec.referenced_columns()) {
    if (table.column_index(column) == std::string_view::npos) missing.push_back(column);
  }
  if (!missing.empty()) throw HeaderMismatch(std::move(missing));

  IngestResult result{rdf::Graph(spec.prefixes), {}, {}};
  const rdf::Term type = rdf::Term::iri(ns::rdf_type());

  for (const auto& row : table.rows) {
    if (row.cells.size() != table.header.size()) {
      result.diagnostics.push_back({row.line, "expected " + std::to_string(table.header.size()) + " cells, found " +
                                                  std::to_string(row.cells.size())});
      continue;
    }
    std::map<std::string, std::string> cells;
    for (std::size_t i = 0; i < row.cells.size(); ++i) cells.emplace(table.header[i], row.cells[i]);
    if (cells.at(spec.key_column).empty()) {
      result.diagnostics.push_back({row.line, "key column '" + spec.key_column + "' is empty; row skipped"});
      continue;
    }

    // Build the row aside so a bad cell drops the whole row, not half of it.
    std::vector<rdf::Triple> triples;
    std::string problem;
    try {
      auto subject_iri = expand_template(spec.subject_template, cells);
      if (!subject_iri) throw rdf::TermError("subject template has an empty placeholder");
      rdf::Term subject = rdf::Term::iri(*subject_iri);
      IngestRecord record{subject, std::nullopt};
      if (spec.type) triples.emplace_back(subject, type, *spec.type);
      if (!spec.shell_template.empty()) {
        auto shell_iri = expand_template(spec.shell_template, cells);
        if (!shell_iri) throw rdf::TermError("shell template has an empty placeholder");
        record.shell = rdf::Term::iri(*shell_iri);
        triples.emplace_back(*record.shell, type, rdf::Term::iri(ns::i40c("AdministrativeShell")));
        triples.emplace_back(*record.shell, rdf::Term::iri(ns::i40c("surround")), subject);
      }
      for (const auto& rule : spec.rules) {
        const std::string& value = cells.at(rule.column);
        if (value.empty()) continue;
        switch (rule.kind) {
          case ValueKind::String:
            triples.emplace_back(subject, rule.predicate, rdf::Term::literal(value));
            break;
          case ValueKind::Language:
            triples.emplace_back(subject, rule.predicate, rdf::Term::lang_literal(value, rule.argument));
            break;
          case ValueKind::Typed:
            triples.emplace_back(subject, rule.predicate, rdf::Term::typed_literal(value, rule.argument));
            break;
          case ValueKind::IriTemplate: {
            auto iri = expand_template(rule.argument, cells);
            if (iri) triples.emplace_back(subject, rule.predicate, rdf::Term::iri(*iri));
            break;
          }
        }
      }
      for (const auto& t : triples) result.graph.insert(t);
      result.records.push_back(std::move(record));
    } catch (const rdf::TermError& e) {
      result.diagnostics.push_back({row.line, std::string(e.what()) + "; row skipped"});
    }
  }
  return result;
}

}  // namespace i40sh::ingest
