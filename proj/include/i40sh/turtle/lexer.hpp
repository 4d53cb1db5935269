#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "i40sh/rdf/prefix_map.hpp"
#include "i40sh/rdf/term.hpp"
#include "i40sh/turtle/diagnostic.hpp"

namespace i40sh::turtle {

enum class TokenKind {
  End,
  IriRef,         // text = IRI without brackets
  PrefixedName,   // prefix = label, text = local part (escapes resolved)
  BlankLabel,     // text = label after "_:"
  String,         // text = unescaped lexical form
  AtWord,         // text = word after '@' (language tag or directive)
  DoubleCaret,
  Dot,
  Semicolon,
  Comma,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Star,
  Variable,       // text = name without '?' / '$'
  Name,           // bare word: keyword, 'a', number, ...
  Error,          // error_code/text describe the problem
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::string prefix;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
  DiagnosticCode error_code = DiagnosticCode::UnexpectedToken;

  ParseDiagnostic diagnostic(DiagnosticCode code, std::string message) const {
    return {line, column, code, std::move(message)};
  }
};

std::string_view token_kind_name(TokenKind kind);

// Tokenizer shared by the Turtle and query parsers. Every call to next()
// consumes at least one byte unless it returns End, so callers can loop
// without a progress check.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next();

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool at_end() const { return pos_ >= text_.size(); }
  void advance(std::size_t n = 1);
  void skip_trivia();
  Token start_token(TokenKind kind) const;
  Token error(Token tok, DiagnosticCode code, std::string message) const;

  Token lex_iri();
  Token lex_string();
  Token lex_word();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Length of the well-formed UTF-8 sequence starting at `pos`, or 0.
std::size_t utf8_sequence_length(std::string_view text, std::size_t pos);

// One-token-lookahead cursor over a Lexer with the term-building rules the
// two parsers share: prefixed-name expansion, literal suffixes, blank
// nodes. Terms are built against the document's declared prefixes, falling
// back to rdf::well_known_prefixes() when that option is on.
class TokenCursor {
 public:
  TokenCursor(std::string_view text, bool well_known_prefixes);

  const Token& peek() const { return current_; }
  Token take();
  // Throws ParseError(UnexpectedToken) unless the current token has `kind`.
  Token expect(TokenKind kind, std::string_view what);

  rdf::PrefixMap& prefixes() { return prefixes_; }
  const rdf::PrefixMap& prefixes() const { return prefixes_; }
  // Well-known prefixes that were used without a declaration.
  const rdf::PrefixMap& implicit_prefixes() const { return implicit_; }

  rdf::Term iri_from(const Token& tok);
  // String token followed by an optional "@lang" or "^^datatype".
  rdf::Term literal_from(const Token& tok);
  rdf::Term blank_from(const Token& tok);
  rdf::Term fresh_blank();

  // Throws ParseError with the lexer's diagnostic when `tok` is an Error.
  static void raise_if_error(const Token& tok);

 private:
  void scan_blank_labels(std::string_view text);

  Lexer lexer_;
  Token current_;
  bool well_known_;
  rdf::PrefixMap prefixes_;
  rdf::PrefixMap implicit_;
  std::set<std::string> used_labels_;
  std::size_t fresh_counter_ = 0;
};

}  // namespace i40sh::turtle
