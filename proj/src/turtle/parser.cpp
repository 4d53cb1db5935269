#include <algorithm>
#include <cctype>

#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/lexer.hpp"
#include "i40sh/turtle/turtle.hpp"

namespace i40sh::turtle {

namespace {

constexpr std::size_t kMaxNesting = 128;

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool looks_numeric_or_boolean(std::string_view word) {
  if (word == "true" || word == "false") return true;
  return !word.empty() && (std::isdigit(static_cast<unsigned char>(word.front())) != 0);
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, const ParseOptions& options)
      : cursor_(text, options.well_known_prefixes) {}

  ParseResult run() {
    while (cursor_.peek().kind != TokenKind::End) {
      statement_start_ = cursor_.peek();
      try {
        statement();
      } catch (const ParseError& e) {
        diagnostics_.push_back(e.diagnostic());
        recover();
      }
    }
    ParseResult result;
    if (!diagnostics_.empty()) {
      result.diagnostics = std::move(diagnostics_);
      return result;
    }
    for (const auto& [label, iri] : cursor_.implicit_prefixes())
      graph_.prefixes().try_emplace(label, iri);
    result.graph = std::move(graph_);
    return result;
  }

 private:
  // Skips to just past the next '.', dropping any further lexer errors in
  // the broken statement.
  void recover() {
    while (cursor_.peek().kind != TokenKind::End) {
      if (cursor_.take().kind == TokenKind::Dot) return;
    }
  }

  [[noreturn]] void unexpected(const Token& tok, std::string what) {
    TokenCursor::raise_if_error(tok);
    if (tok.kind == TokenKind::End) {
      throw ParseError(statement_start_.diagnostic(DiagnosticCode::UnterminatedStatement,
                                                   "statement is not terminated by '.'"));
    }
    throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken,
                                    "expected " + what + ", found " +
                                        std::string(token_kind_name(tok.kind))));
  }

  void expect_dot() {
    if (cursor_.peek().kind != TokenKind::Dot) unexpected(cursor_.peek(), "'.'");
    cursor_.take();
  }

  void statement() {
    const Token& tok = cursor_.peek();
    if (tok.kind == TokenKind::AtWord) {
      if (tok.text == "prefix") {
        cursor_.take();
        prefix_body();
        expect_dot();
        return;
      }
      throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken,
                                      "unsupported directive '@" + tok.text + "'"));
    }
    if (tok.kind == TokenKind::Name && iequals(tok.text, "PREFIX")) {
      cursor_.take();
      prefix_body();
      return;
    }
    if (tok.kind == TokenKind::Name && iequals(tok.text, "BASE")) {
      throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken, "BASE is not supported"));
    }
    triples();
  }

  void prefix_body() {
    Token label = cursor_.take();
    if (label.kind != TokenKind::PrefixedName || !label.text.empty())
      unexpected(label, "prefix label such as 'ex:'");
    Token iri = cursor_.take();
    if (iri.kind != TokenKind::IriRef) unexpected(iri, "namespace IRI");
    cursor_.prefixes()[label.prefix] = iri.text;
    graph_.set_prefix(label.prefix, iri.text);
  }

  void triples() {
    if (cursor_.peek().kind == TokenKind::LBracket) {
      Token open = cursor_.take();
      if (cursor_.peek().kind == TokenKind::RBracket) {
        cursor_.take();
        predicate_object_list(cursor_.fresh_blank(), 0);
      } else {
        rdf::Term node = cursor_.fresh_blank();
        predicate_object_list(node, 1);
        if (cursor_.peek().kind != TokenKind::RBracket) unexpected(cursor_.peek(), "']'");
        cursor_.take();
        if (cursor_.peek().kind != TokenKind::Dot) predicate_object_list(node, 0);
      }
    } else {
      rdf::Term subject = subject_term();
      predicate_object_list(subject, 0);
    }
    expect_dot();
  }

  // A '.' or end of input is reported without being consumed, so recovery
  // does not swallow the following statement.
  void refuse_terminator(std::string_view what) {
    auto kind = cursor_.peek().kind;
    if (kind == TokenKind::Dot || kind == TokenKind::End) unexpected(cursor_.peek(), std::string(what));
  }

  rdf::Term subject_term() {
    refuse_terminator("subject");
    Token tok = cursor_.take();
    switch (tok.kind) {
      case TokenKind::IriRef:
      case TokenKind::PrefixedName:
        return cursor_.iri_from(tok);
      case TokenKind::BlankLabel:
        return cursor_.blank_from(tok);
      case TokenKind::String:
        throw ParseError(
            tok.diagnostic(DiagnosticCode::UnexpectedToken, "a literal cannot be a subject"));
      default:
        unexpected(tok, "subject");
    }
  }

  bool at_verb() const {
    auto kind = cursor_.peek().kind;
    return kind == TokenKind::IriRef || kind == TokenKind::PrefixedName ||
           (kind == TokenKind::Name && cursor_.peek().text == "a");
  }

  rdf::Term verb() {
    refuse_terminator("predicate");
    Token tok = cursor_.take();
    if (tok.kind == TokenKind::Name && tok.text == "a") return rdf::Term::iri(ns::rdf_type());
    if (tok.kind == TokenKind::IriRef || tok.kind == TokenKind::PrefixedName)
      return cursor_.iri_from(tok);
    unexpected(tok, "predicate");
  }

  void predicate_object_list(const rdf::Term& subject, std::size_t depth) {
    while (true) {
      rdf::Term predicate = verb();
      object_list(subject, predicate, depth);
      if (cursor_.peek().kind != TokenKind::Semicolon) return;
      while (cursor_.peek().kind == TokenKind::Semicolon) cursor_.take();
      if (!at_verb()) return;
    }
  }

  void object_list(const rdf::Term& subject, const rdf::Term& predicate, std::size_t depth) {
    while (true) {
      rdf::Term object = object_term(depth);
      graph_.insert(subject, predicate, object);
      if (cursor_.peek().kind != TokenKind::Comma) return;
      cursor_.take();
    }
  }

  rdf::Term object_term(std::size_t depth) {
    refuse_terminator("object");
    Token tok = cursor_.take();
    switch (tok.kind) {
      case TokenKind::IriRef:
      case TokenKind::PrefixedName:
        return cursor_.iri_from(tok);
      case TokenKind::BlankLabel:
        return cursor_.blank_from(tok);
      case TokenKind::String:
        return cursor_.literal_from(tok);
      case TokenKind::LBracket: {
        rdf::Term node = cursor_.fresh_blank();
        if (cursor_.peek().kind == TokenKind::RBracket) {
          cursor_.take();
          return node;
        }
        if (depth + 1 > kMaxNesting)
          throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken, "blank node nesting too deep"));
        predicate_object_list(node, depth + 1);
        if (cursor_.peek().kind != TokenKind::RBracket) unexpected(cursor_.peek(), "']'");
        cursor_.take();
        return node;
      }
      case TokenKind::LParen:
        throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken, "collections are not supported"));
      case TokenKind::Name:
        if (looks_numeric_or_boolean(tok.text))
          throw ParseError(tok.diagnostic(
              DiagnosticCode::BadLiteral,
              "numeric and boolean shorthand literals are not supported; quote the value"));
        unexpected(tok, "object");
      default:
        unexpected(tok, "object");
    }
  }

  TokenCursor cursor_;
  rdf::Graph graph_;
  std::vector<ParseDiagnostic> diagnostics_;
  Token statement_start_;
};

}  // namespace

ParseResult parse_turtle(std::string_view text, const ParseOptions& options) {
  return TurtleParser(text, options).run();
}

}  // namespace i40sh::turtle
