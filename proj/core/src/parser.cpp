// Copyright 2026 The darboux authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "darboux/parser.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen,
                 rparen, equals, semicolon, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    cur_ = {Tok::end, "", line_, col_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    int start_col = col_;
    auto single = [&](Tok k) {
      cur_ = {k, std::string(1, c), line_, start_col};
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '+': single(Tok::plus); return;
      case '-': single(Tok::minus); return;
      case '*': single(Tok::star); return;
      case '/': single(Tok::slash); return;
      case '^': single(Tok::caret); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      case '=': single(Tok::equals); return;
      case ';': single(Tok::semicolon); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        digits += src_[pos_++];
        ++col_;
      }
      if (pos_ < src_.size() && src_[pos_] == '.')
        throw ParseError("floating-point literals are not allowed", line_,
                         col_);
      cur_ = {Tok::integer, digits, line_, start_col};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (pos_ < src_.size() &&
             std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
        ident += src_[pos_++];
        ++col_;
      }
      cur_ = {Tok::ident, ident, line_, start_col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Poly parse_expression() {
    Poly p = parse_expr();
    expect(Tok::end, "end of input");
    return p;
  }

  Field parse_field_text() {
    std::map<char, Rat> pre;
    while (lex_.peek().kind == Tok::ident && lex_.peek().text == "param") {
      lex_.take();
      Token name = expect(Tok::ident, "parameter name");
      if (name.text != "a" && name.text != "b")
        throw ParseError("unknown parameter '" + name.text + "'", name.line,
                         name.col);
      expect(Tok::equals, "'='");
      Rat value = parse_signed_rational();
      expect(Tok::semicolon, "';'");
      pre[name.text[0]] = value;
    }

    std::array<Poly, 3> comps;
    static constexpr const char* names[3] = {"dx", "dy", "dz"};
    for (int i = 0; i < 3; ++i) {
      Token head = expect(Tok::ident, std::string("'") + names[i] + "'");
      if (head.text != names[i])
        throw ParseError(std::string("expected '") + names[i] + "', found '" +
                             head.text + "'",
                         head.line, head.col);
      expect(Tok::equals, "'='");
      comps[i] = parse_expr();
      expect(Tok::semicolon, "';'");
    }
    expect(Tok::end, "end of input");

    Field f{comps};
    if (!pre.empty()) {
      auto value_or_symbol = [&](char sym) -> ParamPoly {
        auto it = pre.find(sym);
        if (it != pre.end()) return ParamPoly(it->second);
        return sym == 'a' ? ParamPoly::symbol_a() : ParamPoly::symbol_b();
      };
      f = substitute_params(f, value_or_symbol('a'), value_or_symbol('b'));
    }
    return f;
  }

 private:
  Token expect(Tok kind, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != kind)
      throw ParseError("expected " + what +
                           (t.kind == Tok::end ? ", found end of input"
                                               : ", found '" + t.text + "'"),
                       t.line, t.col);
    return t;
  }

  Rat parse_signed_rational() {
    int sign = 1;
    while (lex_.peek().kind == Tok::minus || lex_.peek().kind == Tok::plus) {
      if (lex_.take().kind == Tok::minus) sign = -sign;
    }
    Token num = expect(Tok::integer, "integer");
    Rat value = rational_tail(num);
    return sign < 0 ? -value : value;
  }

  // An integer literal optionally followed by "/ integer".
  Rat rational_tail(const Token& num) {
    Rat value = Rat::from_string(num.text);
    if (lex_.peek().kind == Tok::slash) {
      lex_.take();
      Token den = expect(Tok::integer, "integer denominator");
      Rat d = Rat::from_string(den.text);
      if (d.is_zero())
        throw ParseError("zero denominator", den.line, den.col);
      value = value / d;
    }
    return value;
  }

  Poly parse_expr() {
    int sign = 1;
    if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      if (lex_.take().kind == Tok::minus) sign = -1;
    }
    Poly acc = parse_term();
    if (sign < 0) acc = -acc;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      Tok op = lex_.take().kind;
      Poly rhs = parse_term();
      acc = op == Tok::plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::star) {
        lex_.take();
        acc = acc * parse_factor();
      } else if (k == Tok::slash) {
        Token bad = lex_.take();
        throw ParseError(
            "division is only allowed inside rational literals p/q", bad.line,
            bad.col);
      } else {
        break;
      }
    }
    return acc;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (lex_.peek().kind == Tok::caret) {
      Token caret = lex_.take();
      Token e = expect(Tok::integer, "non-negative integer exponent");
      long exp = 0;
      try {
        exp = std::stol(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", e.line, e.col);
      }
      if (exp > max_total_degree())
        throw ParseError("exponent " + e.text + " exceeds the degree cap " +
                             std::to_string(max_total_degree()),
                         caret.line, caret.col);
      base = base.pow(static_cast<int>(exp));
    }
    return base;
  }

  Poly parse_base() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::integer:
        return Poly(ParamPoly(rational_tail(t)));
      case Tok::ident: {
        if (t.text == "x") return Poly::variable(0);
        if (t.text == "y") return Poly::variable(1);
        if (t.text == "z") return Poly::variable(2);
        if (t.text == "a") return Poly(ParamPoly::symbol_a());
        if (t.text == "b") return Poly(ParamPoly::symbol_b());
        throw ParseError("unknown symbol '" + t.text + "'", t.line, t.col);
      }
      case Tok::lparen: {
        Poly inner = parse_expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::minus:
        return -parse_factor();
      default:
        throw ParseError("expected a value, found '" + t.text + "'", t.line,
                         t.col);
    }
  }

  Lexer lex_;
};

}  // namespace

Field parse_field(std::string_view text) {
  return Parser(text).parse_field_text();
}

Poly parse_polynomial(std::string_view text) {
  return Parser(text).parse_expression();
}

}  // namespace darboux
