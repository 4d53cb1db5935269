#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace i40sh::ingest {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvRow {
  // Physical line the record starts on (the header is line 1).
  std::size_t line = 0;
  std::vector<std::string> cells;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;

  // Index of `column` in the header, or npos.
  std::size_t column_index(std::string_view column) const;
};

// RFC 4180: comma separator, '"' quoting with "" as the escape, CRLF or LF
// record ends, quoted fields may span lines. A leading UTF-8 BOM and a
// final empty line are ignored. Throws CsvError on an unterminated quote,
// text after a closing quote, an empty or duplicated header name, or a
// missing header.
CsvTable parse_csv(std::string_view text);

}  // namespace i40sh::ingest
