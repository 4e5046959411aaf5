#include "wlab/index_expr.hpp"

#include <cctype>

#include "wlab/error.hpp"

namespace wlab {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const BigInt& p) : s_(text), p_(p) {}

  BigInt parse() {
    BigInt v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidInput, "index expression '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt expr() {
    BigInt v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  BigInt term() {
    BigInt v = power();
    while (eat('*')) v *= power();
    return v;
  }

  BigInt power() {
    BigInt base = unary();
    if (!eat('^')) return base;
    const BigInt e = power();
    if (e < 0 || e > 4096) fail("exponent out of range");
    return pow_big(base, e.get_ui());
  }

  BigInt unary() {
    if (eat('-')) return BigInt(-unary());
    return primary();
  }

  BigInt primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BigInt v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == 'p' || c == 'P') {
      ++pos_;
      return p_;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return BigInt(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const BigInt& p_;
  std::size_t pos_ = 0;
};

}  // namespace

BigInt eval_index_expr(const std::string& text, const BigInt& p) { return Parser(text, p).parse(); }

}  // namespace wlab
