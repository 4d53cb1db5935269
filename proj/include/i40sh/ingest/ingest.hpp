#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "i40sh/ingest/csv.hpp"
#include "i40sh/ingest/mapping.hpp"
#include "i40sh/rdf/graph.hpp"

namespace i40sh::ingest {

class HeaderMismatch : public std::runtime_error {
 public:
  explicit HeaderMismatch(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

struct RowDiagnostic {
  std::size_t line = 0;
  std::string message;

  std::string to_string() const { return "line " + std::to_string(line) + ": " + message; }
};

struct IngestRecord {
  rdf::Term subject;
  std::optional<rdf::Term> shell;
};

struct IngestResult {
  rdf::Graph graph;
  std::vector<RowDiagnostic> diagnostics;
  // One per accepted row, in row order.
  std::vector<IngestRecord> records;
};

// Fills a {column} template with percent-encoded cell values. Returns
// nullopt if a placeholder's cell is empty.
std::optional<std::string> expand_template(std::string_view tmpl, const std::map<std::string, std::string>& cells);

// One subject per row, its rdf:type, and one triple per non-empty mapped
// cell. Rows with an empty key, a wrong cell count, or a value that does
// not form a valid term are skipped with a diagnostic. Throws
// HeaderMismatch if the header lacks a referenced column.
IngestResult ingest_csv(const CsvTable& table, const MappingSpec& spec);

}  // namespace i40sh::ingest
