#include "lexer.h"

#include <cctype>

namespace objcbridge {

static bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
static bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      size_t b = i;
      while (i < n && ident_char(text[i])) ++i;
      out.push_back({TokenKind::identifier, text.substr(b, i - b), line});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t b = i;
      while (i < n && ident_char(text[i])) ++i;
      out.push_back({TokenKind::number, text.substr(b, i - b), line});
    } else if (c == '"') {
      size_t b = ++i;
      std::string s;
      while (i < n && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < n) {
          s += text[i];
          ++i;
        }
        s += text[i];
        if (text[i] == '\n') ++line;
        ++i;
      }
      (void)b;
      if (i < n) ++i; // closing quote
      out.push_back({TokenKind::string_literal, s, line});
    } else {
      out.push_back({TokenKind::punct, std::string(1, c), line});
      ++i;
    }
  }
  return out;
}

} // namespace objcbridge
