#include <algorithm>
#include <cctype>
#include <set>

#include "i40sh/query/query.hpp"
#include "i40sh/rdf/namespaces.hpp"
#include "i40sh/turtle/lexer.hpp"

namespace i40sh::query {

namespace {

using turtle::DiagnosticCode;
using turtle::ParseDiagnostic;
using turtle::ParseError;
using turtle::Token;
using turtle::TokenCursor;
using turtle::TokenKind;

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

bool is_keyword(const Token& tok, std::string_view kw) {
  return tok.kind == TokenKind::Name && upper(tok.text) == kw;
}

// SPARQL 1.1 keywords outside the supported subset.
bool is_unsupported_keyword(const Token& tok) {
  static const std::set<std::string, std::less<>> kWords = {
      "ASK",    "DESCRIBE", "FROM",   "NAMED",  "OPTIONAL", "FILTER", "UNION",  "MINUS",
      "BIND",   "SERVICE",  "GRAPH",  "VALUES", "LIMIT",    "OFFSET", "ORDER",  "GROUP",
      "HAVING", "BASE",     "INSERT", "DELETE", "LOAD",     "CLEAR",  "DROP",   "CREATE",
      "WITH",   "USING",    "EXISTS", "NOT",    "AS",       "COPY",   "MOVE",   "ADD"};
  return tok.kind == TokenKind::Name && kWords.contains(upper(tok.text));
}

struct VariableUse {
  std::string name;
  Token where;
};

class QueryParser {
 public:
  QueryParser(std::string_view text, const turtle::ParseOptions& options)
      : cursor_(text, options.well_known_prefixes) {}

  QueryParseResult run() {
    QueryParseResult result;
    try {
      prologue();
      form();
      where_clause();
      if (cursor_.peek().kind != TokenKind::End) unexpected(cursor_.peek(), "end of query");
    } catch (const ParseError& e) {
      result.diagnostics.push_back(e.diagnostic());
      return result;
    }
    check_variables(result.diagnostics);
    if (!result.diagnostics.empty()) return result;
    query_.prefixes = cursor_.prefixes();
    for (const auto& [label, iri] : cursor_.implicit_prefixes()) query_.prefixes.try_emplace(label, iri);
    result.query = std::move(query_);
    return result;
  }

 private:
  [[noreturn]] void unexpected(const Token& tok, std::string_view what) {
    TokenCursor::raise_if_error(tok);
    if (is_unsupported_keyword(tok)) {
      throw ParseError(tok.diagnostic(DiagnosticCode::UnsupportedKeyword, "unsupported keyword " + upper(tok.text)));
    }
    if (tok.kind == TokenKind::End) {
      throw ParseError(tok.diagnostic(DiagnosticCode::UnterminatedStatement,
                                      "query ends early, expected " + std::string(what)));
    }
    throw ParseError(tok.diagnostic(DiagnosticCode::UnexpectedToken,
                                    "expected " + std::string(what) + ", found " +
                                        std::string(turtle::token_kind_name(tok.kind))));
  }

  Token expect(TokenKind kind, std::string_view what) {
    if (cursor_.peek().kind != kind) unexpected(cursor_.peek(), what);
    return cursor_.take();
  }

  void prologue() {
    while (true) {
      const Token& tok = cursor_.peek();
      if (tok.kind == TokenKind::AtWord && tok.text == "prefix") {
        cursor_.take();
        prefix_body();
        expect(TokenKind::Dot, "'.'");
      } else if (is_keyword(tok, "PREFIX")) {
        cursor_.take();
        prefix_body();
      } else {
        return;
      }
    }
  }

  void prefix_body() {
    Token label = cursor_.take();
    if (label.kind != TokenKind::PrefixedName || !label.text.empty()) unexpected(label, "prefix label such as 'ex:'");
    Token iri = expect(TokenKind::IriRef, "namespace IRI");
    cursor_.prefixes()[label.prefix] = iri.text;
  }

  void form() {
    const Token& tok = cursor_.peek();
    if (is_keyword(tok, "SELECT")) {
      cursor_.take();
      select_clause();
    } else if (is_keyword(tok, "CONSTRUCT")) {
      cursor_.take();
      ConstructForm construct;
      expect(TokenKind::LBrace, "'{'");
      construct.templ = triples_block(true);
      expect(TokenKind::RBrace, "'}'");
      query_.form = std::move(construct);
    } else {
      unexpected(tok, "SELECT or CONSTRUCT");
    }
  }

  void select_clause() {
    SelectForm select;
    // Solutions are always distinct, so both modifiers are no-ops.
    if (is_keyword(cursor_.peek(), "DISTINCT") || is_keyword(cursor_.peek(), "REDUCED")) cursor_.take();
    if (cursor_.peek().kind == TokenKind::Star) {
      cursor_.take();
      select.star = true;
    } else {
      while (cursor_.peek().kind == TokenKind::Variable) {
        Token v = cursor_.take();
        if (std::find(select.projection.begin(), select.projection.end(), v.text) == select.projection.end()) {
          select.projection.push_back(v.text);
        }
        mentioned_.push_back({v.text, v});
      }
      if (select.projection.empty()) unexpected(cursor_.peek(), "variable or '*'");
    }
    query_.form = std::move(select);
  }

  void where_clause() {
    if (is_keyword(cursor_.peek(), "WHERE")) cursor_.take();
    expect(TokenKind::LBrace, "'{'");
    query_.where = triples_block(false);
    expect(TokenKind::RBrace, "'}'");
  }

  std::vector<TriplePattern> triples_block(bool in_template) {
    std::vector<TriplePattern> patterns;
    while (cursor_.peek().kind != TokenKind::RBrace) {
      PatternTerm subject = pattern_term(in_template, "subject");
      predicate_object_list(subject, in_template, patterns);
      if (cursor_.peek().kind != TokenKind::Dot) break;
      while (cursor_.peek().kind == TokenKind::Dot) cursor_.take();
    }
    return patterns;
  }

  void predicate_object_list(const PatternTerm& subject, bool in_template, std::vector<TriplePattern>& out) {
    while (true) {
      PatternTerm predicate = verb(in_template);
      while (true) {
        out.push_back({subject, predicate, pattern_term(in_template, "object")});
        if (cursor_.peek().kind != TokenKind::Comma) break;
        cursor_.take();
      }
      if (cursor_.peek().kind != TokenKind::Semicolon) return;
      while (cursor_.peek().kind == TokenKind::Semicolon) cursor_.take();
      auto kind = cursor_.peek().kind;
      bool at_verb = kind == TokenKind::Variable || kind == TokenKind::IriRef || kind == TokenKind::PrefixedName ||
                     (kind == TokenKind::Name && cursor_.peek().text == "a");
      if (!at_verb) return;
    }
  }

  PatternTerm verb(bool in_template) {
    const Token& tok = cursor_.peek();
    if (tok.kind == TokenKind::Name && tok.text == "a") {
      cursor_.take();
      return rdf::Term::iri(ns::rdf_type());
    }
    if (tok.kind == TokenKind::Variable) return variable(in_template);
    if (tok.kind == TokenKind::IriRef || tok.kind == TokenKind::PrefixedName) return cursor_.iri_from(cursor_.take());
    unexpected(tok, "predicate");
  }

  PatternTerm variable(bool in_template) {
    Token v = cursor_.take();
    if (in_template) {
      mentioned_.push_back({v.text, v});
    } else {
      bound_.insert(v.text);
    }
    return Variable{v.text};
  }

  PatternTerm pattern_term(bool in_template, std::string_view what) {
    const Token& tok = cursor_.peek();
    switch (tok.kind) {
      case TokenKind::Variable:
        return variable(in_template);
      case TokenKind::IriRef:
      case TokenKind::PrefixedName:
        return cursor_.iri_from(cursor_.take());
      case TokenKind::String:
        return cursor_.literal_from(cursor_.take());
      case TokenKind::BlankLabel: {
        Token b = cursor_.take();
        if (in_template) return cursor_.blank_from(b);
        return Variable{"_:" + b.text};
      }
      case TokenKind::Name:
        if (!tok.text.empty() && (std::isdigit(static_cast<unsigned char>(tok.text[0])) != 0 ||
                                  tok.text == "true" || tok.text == "false")) {
          throw ParseError(tok.diagnostic(DiagnosticCode::BadLiteral,
                                          "numeric and boolean shorthand literals are not supported; quote the value"));
        }
        unexpected(tok, what);
      default:
        unexpected(tok, what);
    }
  }

  void check_variables(std::vector<ParseDiagnostic>& out) const {
    std::set<std::string> reported;
    for (const auto& use : mentioned_) {
      if (bound_.contains(use.name) || !reported.insert(use.name).second) continue;
      out.push_back(use.where.diagnostic(DiagnosticCode::UnknownVariable,
                                         "variable ?" + use.name + " is not bound by the WHERE clause"));
    }
  }

  TokenCursor cursor_;
  Query query_;
  std::set<std::string> bound_;
  std::vector<VariableUse> mentioned_;
};

std::string pattern_term_string(const PatternTerm& t) {
  if (const auto* v = std::get_if<Variable>(&t)) return v->hidden() ? v->name : "?" + v->name;
  return std::get<rdf::Term>(t).ntriples();
}

}  // namespace

std::string TriplePattern::to_string() const {
  return pattern_term_string(subject) + " " + pattern_term_string(predicate) + " " + pattern_term_string(object) +
         " .";
}

std::vector<std::string> Query::result_variables() const {
  const auto* select = std::get_if<SelectForm>(&form);
  if (select == nullptr) return {};
  if (!select->star) return select->projection;
  std::vector<std::string> vars;
  for (const auto& p : where) {
    for (const auto* t : {&p.subject, &p.predicate, &p.object}) {
      const auto* v = std::get_if<Variable>(t);
      if (v != nullptr && !v->hidden() && std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  }
  return vars;
}

QueryParseResult parse_query(std::string_view text, const turtle::ParseOptions& options) {
  return QueryParser(text, options).run();
}

std::size_t rewrite_predicates(Query& query,
                               const std::function<std::optional<rdf::Term>(const rdf::Term&)>& map) {
  std::size_t count = 0;
  auto apply = [&](std::vector<TriplePattern>& patterns) {
    for (auto& p : patterns) {
      const auto* term = std::get_if<rdf::Term>(&p.predicate);
      if (term == nullptr) continue;
      if (auto replacement = map(*term)) {
        p.predicate = *replacement;
        ++count;
      }
    }
  };
  apply(query.where);
  if (auto* construct = std::get_if<ConstructForm>(&query.form)) apply(construct->templ);
  return count;
}

}  // namespace i40sh::query
