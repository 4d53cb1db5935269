#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/lexer.hpp"

namespace i40sh::turtle {

TokenCursor::TokenCursor(std::string_view text, bool well_known_prefixes)
    : lexer_(text), well_known_(well_known_prefixes) {
  scan_blank_labels(text);
  current_ = lexer_.next();
}

void TokenCursor::scan_blank_labels(std::string_view text) {
  Lexer scan(text);
  for (Token tok = scan.next(); tok.kind != TokenKind::End; tok = scan.next()) {
    if (tok.kind == TokenKind::BlankLabel) used_labels_.insert(tok.text);
  }
}

Token TokenCursor::take() {
  Token tok = std::move(current_);
  current_ = lexer_.next();
  return tok;
}

Token TokenCursor::expect(TokenKind kind, std::string_view what) {
  raise_if_error(current_);
  if (current_.kind != kind) {
    throw ParseError(current_.diagnostic(
        DiagnosticCode::UnexpectedToken,
        "expected " + std::string(what) + ", found " + std::string(token_kind_name(current_.kind))));
  }
  return take();
}

void TokenCursor::raise_if_error(const Token& tok) {
  if (tok.kind == TokenKind::Error) throw ParseError(tok.diagnostic(tok.error_code, tok.text));
}

rdf::Term TokenCursor::iri_from(const Token& tok) {
  raise_if_error(tok);
  try {
    if (tok.kind == TokenKind::IriRef) return rdf::Term::iri(tok.text);
    if (tok.kind == TokenKind::PrefixedName) {
      auto declared = prefixes_.find(tok.prefix);
      if (declared != prefixes_.end()) return rdf::Term::iri(declared->second + tok.text);
      if (well_known_) {
        const auto& known = rdf::well_known_prefixes();
        auto it = known.find(tok.prefix);
        if (it != known.end()) {
          implicit_.emplace(it->first, it->second);
          return rdf::Term::iri(it->second + tok.text);
        }
      }
      throw ParseError(tok.diagnostic(DiagnosticCode::UnknownPrefix,
                                      "undeclared prefix '" + tok.prefix + ":'"));
    }
  } catch (const rdf::TermError& e) {
    throw ParseError(tok.diagnostic(DiagnosticCode::BadIri, e.what()));
  }
  throw ParseError(tok.diagnostic(
      DiagnosticCode::UnexpectedToken,
      "expected IRI, found " + std::string(token_kind_name(tok.kind))));
}

rdf::Term TokenCursor::literal_from(const Token& tok) {
  raise_if_error(tok);
  if (current_.kind == TokenKind::AtWord) {
    Token lang = take();
    if (!rdf::is_valid_language_tag(lang.text))
      throw ParseError(lang.diagnostic(DiagnosticCode::BadLiteral,
                                       "invalid language tag '" + lang.text + "'"));
    return rdf::Term::lang_literal(tok.text, lang.text);
  }
  if (current_.kind == TokenKind::DoubleCaret) {
    take();
    Token dt_tok = take();
    if (dt_tok.kind != TokenKind::IriRef && dt_tok.kind != TokenKind::PrefixedName) {
      raise_if_error(dt_tok);
      throw ParseError(dt_tok.diagnostic(DiagnosticCode::BadLiteral, "expected datatype IRI after '^^'"));
    }
    rdf::Term datatype = iri_from(dt_tok);
    if (datatype.value() == ns::rdf_lang_string())
      throw ParseError(
          dt_tok.diagnostic(DiagnosticCode::BadLiteral, "rdf:langString requires a language tag"));
    return rdf::Term::typed_literal(tok.text, datatype.value());
  }
  return rdf::Term::literal(tok.text);
}

rdf::Term TokenCursor::blank_from(const Token& tok) {
  raise_if_error(tok);
  return rdf::Term::blank(tok.text);
}

rdf::Term TokenCursor::fresh_blank() {
  std::string label;
  do {
    label = "b" + std::to_string(++fresh_counter_);
  } while (used_labels_.contains(label));
  used_labels_.insert(label);
  return rdf::Term::blank(label);
}

}  // namespace i40sh::turtle
