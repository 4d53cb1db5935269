#include "i40sh/turtle/lexer.hpp"

#include <cstdint>

namespace i40sh::turtle {

std::string_view code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::UnknownPrefix: return "UnknownPrefix";
    case DiagnosticCode::BadIri: return "BadIRI";
    case DiagnosticCode::BadLiteral: return "BadLiteral";
    case DiagnosticCode::UnexpectedToken: return "UnexpectedToken";
    case DiagnosticCode::UnterminatedStatement: return "UnterminatedStatement";
    case DiagnosticCode::UnsupportedKeyword: return "UnsupportedKeyword";
    case DiagnosticCode::UnknownVariable: return "UnknownVariable";
  }
  return "Unknown";
}

std::string ParseDiagnostic::to_string() const {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         std::string(code_name(code)) + ": " + message;
}

std::string format_diagnostics(const std::vector<ParseDiagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) out += d.to_string() + "\n";
  return out;
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::IriRef: return "IRI";
    case TokenKind::PrefixedName: return "prefixed name";
    case TokenKind::BlankLabel: return "blank node";
    case TokenKind::String: return "string";
    case TokenKind::AtWord: return "'@' word";
    case TokenKind::DoubleCaret: return "'^^'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Variable: return "variable";
    case TokenKind::Name: return "name";
    case TokenKind::Error: return "invalid token";
  }
  return "token";
}

std::size_t utf8_sequence_length(std::string_view text, std::size_t pos) {
  auto byte = [&](std::size_t i) -> unsigned {
    return pos + i < text.size() ? static_cast<unsigned char>(text[pos + i]) : 0u;
  };
  unsigned b0 = byte(0);
  if (b0 < 0x80) return pos < text.size() ? 1 : 0;
  auto cont = [&](std::size_t i) { return (byte(i) & 0xC0) == 0x80; };
  if (b0 >= 0xC2 && b0 <= 0xDF) return cont(1) ? 2 : 0;
  if (b0 >= 0xE0 && b0 <= 0xEF) {
    unsigned b1 = byte(1);
    if (b0 == 0xE0 && b1 < 0xA0) return 0;
    if (b0 == 0xED && b1 > 0x9F) return 0;  // surrogates
    return cont(1) && cont(2) ? 3 : 0;
  }
  if (b0 >= 0xF0 && b0 <= 0xF4) {
    unsigned b1 = byte(1);
    if (b0 == 0xF0 && b1 < 0x90) return 0;
    if (b0 == 0xF4 && b1 > 0x8F) return 0;
    return cont(1) && cont(2) && cont(3) ? 4 : 0;
  }
  return 0;
}

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_hex(char c) { return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F'); }

unsigned hex_value(char c) {
  if (is_digit(c)) return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
  return static_cast<unsigned>(c - 'A' + 10);
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_word_char(char c) {
  return is_alpha(c) || is_digit(c) || c == '_' || c == '-' || c == '.' || c == ':';
}

constexpr std::string_view kLocalEscapable = "_~.-!$&'()*+,;=/?#@%";

}  // namespace

void Lexer::advance(std::size_t n) {
  for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
}

void Lexer::skip_trivia() {
  while (!at_end()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n') advance();
    } else {
      break;
    }
  }
}

Token Lexer::start_token(TokenKind kind) const {
  Token tok;
  tok.kind = kind;
  tok.line = line_;
  tok.column = column_;
  tok.offset = pos_;
  return tok;
}

Token Lexer::error(Token tok, DiagnosticCode code, std::string message) const {
  tok.kind = TokenKind::Error;
  tok.error_code = code;
  tok.text = std::move(message);
  return tok;
}

Token Lexer::next() {
  skip_trivia();
  if (at_end()) return start_token(TokenKind::End);

  char c = peek();
  auto single = [&](TokenKind kind) {
    Token tok = start_token(kind);
    advance();
    return tok;
  };
  switch (c) {
    case '<': return lex_iri();
    case '"':
    case '\'': return lex_string();
    case '.': return single(TokenKind::Dot);
    case ';': return single(TokenKind::Semicolon);
    case ',': return single(TokenKind::Comma);
    case '[': return single(TokenKind::LBracket);
    case ']': return single(TokenKind::RBracket);
    case '{': return single(TokenKind::LBrace);
    case '}': return single(TokenKind::RBrace);
    case '(': return single(TokenKind::LParen);
    case ')': return single(TokenKind::RParen);
    case '*': return single(TokenKind::Star);
    default: break;
  }

  if (c == '^') {
    Token tok = start_token(TokenKind::DoubleCaret);
    if (peek(1) == '^') {
      advance(2);
      return tok;
    }
    advance();
    return error(tok, DiagnosticCode::UnexpectedToken, "expected '^^'");
  }

  if (c == '@') {
    Token tok = start_token(TokenKind::AtWord);
    advance();
    while (is_alpha(peek()) || is_digit(peek()) || peek() == '-') {
      tok.text += peek();
      advance();
    }
    if (tok.text.empty() || !is_alpha(tok.text.front()))
      return error(tok, DiagnosticCode::UnexpectedToken, "expected a word after '@'");
    return tok;
  }

  if (c == '?' || c == '$') {
    Token tok = start_token(TokenKind::Variable);
    advance();
    while (is_alpha(peek()) || is_digit(peek()) || peek() == '_') {
      tok.text += peek();
      advance();
    }
    if (tok.text.empty())
      return error(tok, DiagnosticCode::UnexpectedToken, "expected a variable name");
    return tok;
  }

  if (c == '_' && peek(1) == ':') {
    Token tok = start_token(TokenKind::BlankLabel);
    advance(2);
    while (!at_end()) {
      char d = peek();
      if (is_alpha(d) || is_digit(d) || d == '_' || d == '-' || d == '.') {
        tok.text += d;
        advance();
      } else if (static_cast<unsigned char>(d) >= 0x80) {
        auto len = utf8_sequence_length(text_, pos_);
        if (len == 0) break;
        tok.text.append(text_.substr(pos_, len));
        advance(len);
      } else {
        break;
      }
    }
    // A trailing '.' ends the statement, not the label.
    while (!tok.text.empty() && tok.text.back() == '.') {
      tok.text.pop_back();
      pos_ -= 1;
      column_ -= 1;
    }
    if (!rdf::is_valid_blank_label(tok.text))
      return error(tok, DiagnosticCode::UnexpectedToken, "invalid blank node label");
    return tok;
  }

  auto byte = static_cast<unsigned char>(c);
  if (is_word_char(c) && c != '.' && c != '-') return lex_word();
  if (byte >= 0x80 && utf8_sequence_length(text_, pos_) > 0) return lex_word();

  Token tok = start_token(TokenKind::Error);
  auto len = utf8_sequence_length(text_, pos_);
  advance(len == 0 ? 1 : len);
  if (len == 0) return error(tok, DiagnosticCode::UnexpectedToken, "invalid UTF-8 byte");
  return error(tok, DiagnosticCode::UnexpectedToken,
               "unexpected character '" + std::string(text_.substr(tok.offset, len)) + "'");
}

Token Lexer::lex_iri() {
  Token tok = start_token(TokenKind::IriRef);
  advance();  // '<'
  bool bad = false;
  std::string problem;
  while (true) {
    if (at_end()) {
      return error(tok, DiagnosticCode::BadIri, "unterminated IRI");
    }
    char c = peek();
    if (c == '>') {
      advance();
      break;
    }
    auto u = static_cast<unsigned char>(c);
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      // Leave the whitespace for the next token so recovery resumes there.
      return error(tok, DiagnosticCode::BadIri, "unterminated IRI");
    }
    if (u >= 0x80) {
      auto len = utf8_sequence_length(text_, pos_);
      if (len == 0) {
        bad = true;
        problem = "invalid UTF-8 in IRI";
        advance();
        continue;
      }
      tok.text.append(text_.substr(pos_, len));
      advance(len);
      continue;
    }
    if (u < 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`' || c == '\\') {
      if (!bad) problem = std::string("illegal character '") + c + "' in IRI";
      bad = true;
    }
    tok.text += c;
    advance();
  }
  if (bad) return error(tok, DiagnosticCode::BadIri, problem);
  if (!rdf::is_absolute_iri(tok.text))
    return error(tok, DiagnosticCode::BadIri, "relative IRI not supported: <" + tok.text + ">");
  return tok;
}

Token Lexer::lex_string() {
  Token tok = start_token(TokenKind::String);
  char quote = peek();
  if (peek(1) == quote && peek(2) == quote) {
    // Long strings are outside the supported grammar; skip the opening
    // quotes and the rest of the line so the parser can resynchronise.
    advance(3);
    while (!at_end() && peek() != '\n') advance();
    return error(tok, DiagnosticCode::BadLiteral, "long (triple-quoted) strings are not supported");
  }
  advance();
  bool bad = false;
  std::string problem;
  auto fail = [&](std::string message) {
    if (!bad) problem = std::move(message);
    bad = true;
  };
  while (true) {
    if (at_end() || peek() == '\n' || peek() == '\r') {
      return error(tok, DiagnosticCode::BadLiteral, "unterminated string");
    }
    char c = peek();
    if (c == quote) {
      advance();
      break;
    }
    if (c == '\\') {
      char e = peek(1);
      switch (e) {
        case 't': tok.text += '\t'; advance(2); continue;
        case 'b': tok.text += '\b'; advance(2); continue;
        case 'n': tok.text += '\n'; advance(2); continue;
        case 'r': tok.text += '\r'; advance(2); continue;
        case 'f': tok.text += '\f'; advance(2); continue;
        case '"': tok.text += '"'; advance(2); continue;
        case '\'': tok.text += '\''; advance(2); continue;
        case '\\': tok.text += '\\'; advance(2); continue;
        case 'u':
        case 'U': {
          std::size_t digits = e == 'u' ? 4 : 8;
          std::uint32_t cp = 0;
          bool ok = true;
          for (std::size_t i = 0; i < digits; ++i) {
            char h = peek(2 + i);
            if (!is_hex(h)) {
              ok = false;
              break;
            }
            cp = cp * 16 + hex_value(h);
          }
          if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            fail("invalid \\u escape");
            advance(2);
            continue;
          }
          append_utf8(tok.text, cp);
          advance(2 + digits);
          continue;
        }
        default:
          fail("invalid escape sequence");
          advance(e == '\0' || e == '\n' ? 1 : 2);
          continue;
      }
    }
    if (static_cast<unsigned char>(c) >= 0x80) {
      auto len = utf8_sequence_length(text_, pos_);
      if (len == 0) {
        fail("invalid UTF-8 in string");
        advance();
        continue;
      }
      tok.text.append(text_.substr(pos_, len));
      advance(len);
      continue;
    }
    tok.text += c;
    advance();
  }
  if (bad) return error(tok, DiagnosticCode::BadLiteral, problem);
  return tok;
}

Token Lexer::lex_word() {
  Token tok = start_token(TokenKind::Name);
  std::string raw;
  bool seen_colon = false;
  bool bad = false;
  std::string problem;
  while (!at_end()) {
    char c = peek();
    if (is_word_char(c)) {
      if (c == ':') seen_colon = true;
      raw += c;
      advance();
    } else if (seen_colon && c == '%') {
      if (is_hex(peek(1)) && is_hex(peek(2))) {
        raw.append(text_.substr(pos_, 3));
        advance(3);
      } else {
        if (!bad) problem = "invalid percent escape in local name";
        bad = true;
        advance();
      }
    } else if (seen_colon && c == '\\') {
      char e = peek(1);
      if (e != '\0' && kLocalEscapable.find(e) != std::string_view::npos) {
        // Keep a marker so the escaped char survives the trailing-dot strip.
        raw += '\\';
        raw += e;
        advance(2);
      } else {
        if (!bad) problem = "invalid escape in local name";
        bad = true;
        advance();
      }
    } else if (static_cast<unsigned char>(c) >= 0x80) {
      auto len = utf8_sequence_length(text_, pos_);
      if (len == 0) break;
      raw.append(text_.substr(pos_, len));
      advance(len);
    } else {
      break;
    }
  }
  // Trailing dots terminate the statement; give them back.
  while (!raw.empty() && raw.back() == '.' && !(raw.size() >= 2 && raw[raw.size() - 2] == '\\')) {
    raw.pop_back();
    pos_ -= 1;
    column_ -= 1;
  }
  if (bad) return error(tok, DiagnosticCode::UnexpectedToken, problem);

  auto colon = raw.find(':');
  if (colon == std::string::npos) {
    tok.text = raw;
    return tok;
  }
  tok.kind = TokenKind::PrefixedName;
  tok.prefix = raw.substr(0, colon);
  if (!tok.prefix.empty() &&
      (!(is_alpha(tok.prefix.front()) || static_cast<unsigned char>(tok.prefix.front()) >= 0x80) ||
       tok.prefix.back() == '.')) {
    return error(tok, DiagnosticCode::UnexpectedToken, "invalid prefix label '" + tok.prefix + "'");
  }
  for (std::size_t i = colon + 1; i < raw.size(); ++i) {
    if (raw[i] == '\\') {
      tok.text += raw[++i];
    } else {
      tok.text += raw[i];
    }
  }
  return tok;
}

}  // namespace i40sh::turtle
