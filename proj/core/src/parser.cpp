#include "conforma/parser.hpp"

#include <cctype>

namespace conforma {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  Poly factor() {
    if (eat('-')) return -factor();
    Poly p = primary();
    if (eat('^')) {
      skip_ws();
      unsigned long e = read_uint("exponent");
      p = p.pow(static_cast<std::uint32_t>(e));
    }
    return p;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("expected a number, name or '('");
  }

  unsigned long read_uint(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 0x7fffffffUL) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Poly rational() {
    unsigned long num = read_uint("integer");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      unsigned long den = read_uint("denominator");
      if (den == 0) fail("zero denominator");
      return Poly(rat(static_cast<long>(num), static_cast<long>(den)));
    }
    return Poly(Rat(static_cast<long>(num)));
  }

  Poly name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string id = text_.substr(start, pos_ - start);
    auto bound = ctx_.bindings.find(id);
    if (bound != ctx_.bindings.end()) return Poly(bound->second);
    VarId v;
    if (!SymbolTable::instance().lookup(id, v)) {
      pos_ = start;
      fail("unknown symbol '" + id + "'");
    }
    if (SymbolTable::is_parameter(v) && !ctx_.parameters.count(v)) {
      pos_ = start;
      fail("undeclared parameter '" + id + "'");
    }
    return Poly::var(v);
  }

  const std::string& text_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const ParseContext& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace conforma
