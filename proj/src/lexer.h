#ifndef OBJCBRIDGE_LEXER_H
#define OBJCBRIDGE_LEXER_H

#include <string>
#include <vector>

namespace objcbridge {

enum class TokenKind { identifier, number, punct, string_literal, end };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;
  int line = 0;
};

// Tokenizes comment-free source. Punctuation is emitted one character at
// a time; the parsers assemble multi-character operators themselves.
std::vector<Token> lex(const std::string& text);

// Cursor over a token stream with a trailing `end` sentinel.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    tokens_.push_back(Token{TokenKind::end, "", last_line()});
  }

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::end; }
  bool is(const std::string& text) const { return peek().text == text; }
  bool is_ident(const std::string& text) const {
    return peek().kind == TokenKind::identifier && peek().text == text;
  }
  bool accept(const std::string& text) {
    if (is(text)) {
      next();
      return true;
    }
    return false;
  }
  int line() const { return peek().line; }

 private:
  int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

} // namespace objcbridge

#endif
