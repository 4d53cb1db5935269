#include "i40sh/ingest/csv.hpp"

#include <algorithm>
#include <set>

namespace i40sh::ingest {

std::size_t CsvTable::column_index(std::string_view column) const {
  auto it = std::find(header.begin(), header.end(), column);
  return it == header.end() ? std::string_view::npos : static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<CsvRow> records;
  std::size_t pos = 0;
  std::size_t line = 1;
  while (pos < text.size()) {
    CsvRow row{line, {}};
    std::string field;
    bool record_done = false;
    while (!record_done) {
      field.clear();
      if (pos < text.size() && text[pos] == '"') {
        const std::size_t quote_line = line;
        ++pos;
        while (true) {
          if (pos >= text.size()) throw CsvError(quote_line, "unterminated quoted field");
          char c = text[pos++];
          if (c == '"') {
            if (pos < text.size() && text[pos] == '"') {
              field += '"';
              ++pos;
              continue;
            }
            break;
          }
          if (c == '\n') ++line;
          field += c;
        }
        if (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          throw CsvError(line, "unexpected text after closing quote");
        }
      } else {
        while (pos < text.size() && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          if (text[pos] == '"') throw CsvError(line, "quote inside unquoted field");
          field += text[pos++];
        }
      }
      row.cells.push_back(field);
      if (pos >= text.size()) {
        record_done = true;
      } else if (text[pos] == ',') {
        ++pos;
      } else {
        if (text[pos] == '\r') ++pos;
        if (pos < text.size() && text[pos] == '\n') ++pos;
        ++line;
        record_done = true;
      }
    }
    records.push_back(std::move(row));
  }

  if (records.empty()) throw CsvError(1, "missing header row");
  CsvTable table;
  table.header = std::move(records.front().cells);
  std::set<std::string> seen;
  for (const auto& name : table.header) {
    if (name.empty()) throw CsvError(1, "empty column name in header");
    if (!seen.insert(name).second) throw CsvError(1, "duplicate column '" + name + "'");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    // A blank line reads as one empty cell; treat it as no record.
    if (records[i].cells.size() == 1 && records[i].cells[0].empty() && table.header.size() != 1) continue;
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

}  // namespace i40sh::ingest
