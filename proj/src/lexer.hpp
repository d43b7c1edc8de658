#ifndef FICSIG_SRC_LEXER_HPP
#define FICSIG_SRC_LEXER_HPP

// Shared lexer for the .sig and .fic text formats. Internal to the library.

#include <cctype>
#include <string>
#include <string_view>

#include "ficsig/syntax.hpp"

namespace ficsig::detail {

enum class Tok { ident, colon, lparen, rparen, comma, semi, dot, equal, arrow, eof };

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::colon: return "':'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::dot: return "'.'";
    case Tok::equal: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::eof: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { scan(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    scan();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      fail(std::string("expected ") + what + ", got " +
           (cur_.kind == Tok::eof ? "end of input" : "'" + cur_.text + "'"));
    }
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur_.line, cur_.col, msg);
  }

 private:
  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void scan() {
    skip();
    cur_ = Token{Tok::eof, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      cur_.kind = Tok::ident;
      cur_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    auto single = [&](Tok k) {
      cur_.kind = k;
      cur_.text = std::string(1, c);
      ++pos_;
      ++col_;
    };
    switch (c) {
      case ':': single(Tok::colon); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      case ',': single(Tok::comma); return;
      case ';': single(Tok::semi); return;
      case '.': single(Tok::dot); return;
      case '=': single(Tok::equal); return;
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          cur_.kind = Tok::arrow;
          cur_.text = "->";
          pos_ += 2;
          col_ += 2;
          return;
        }
        break;
      default:
        break;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

}  // namespace ficsig::detail

#endif  // FICSIG_SRC_LEXER_HPP
