#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace i40sh::turtle {

enum class DiagnosticCode {
  UnknownPrefix,
  BadIri,
  BadLiteral,
  UnexpectedToken,
  UnterminatedStatement,
  // Query-only: a recognised SPARQL keyword outside the supported subset.
  UnsupportedKeyword,
  // Query-only: projected/template variable that the WHERE clause never binds.
  UnknownVariable,
};

std::string_view code_name(DiagnosticCode code);

// Line and column are 1-based; column counts bytes.
struct ParseDiagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  DiagnosticCode code = DiagnosticCode::UnexpectedToken;
  std::string message;

  // "3:14: BadIRI: relative IRI not supported"
  std::string to_string() const;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diagnostics);

// Thrown inside the parsers to unwind to the statement boundary.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d)
      : std::runtime_error(d.to_string()), diagnostic_(std::move(d)) {}
  const ParseDiagnostic& diagnostic() const { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

}  // namespace i40sh::turtle
