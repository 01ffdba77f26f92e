#include "mthv/expr.hpp"

#include <cctype>

#include "mthv/errors.hpp"

namespace mthv {

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, const Params& params) : s_(text), p_(params) {}

  UEAElement parse_all() {
    UEAElement x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }

  UEAElement expr() {
    UEAElement x = term();
    for (;;) {
      if (eat('+')) x += term();
      else if (eat('-')) x -= term();
      else return x;
    }
  }

  UEAElement term() {
    UEAElement x = unary();
    for (;;) {
      if (eat('*')) {
        x = multiply(x, unary());
      } else {
        skip();
        const std::size_t at = pos_;
        if (!eat('/')) return x;
        Scalar den;
        if (!unary().is_scalar(&den)) fail_at("division by a non-scalar", at);
        if (den == 0) fail_at("division by zero", at);
        x *= Scalar(1 / den);
      }
    }
  }

  UEAElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  UEAElement power() {
    UEAElement b = base();
    if (!eat('^')) return b;
    skip();
    const std::size_t at = pos_;
    const long e = integer_literal();
    if (e < 1 || e > kMaxExponent) fail_at("exponent must be in 1.." + std::to_string(kMaxExponent), at);
    UEAElement out = b;
    for (long i = 1; i < e; ++i) out = multiply(out, b);
    return out;
  }

  long integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) fail("float literals are not accepted");
    if (pos_ - start > 18) fail_at("integer literal too long", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  UEAElement base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      UEAElement x = expr();
      expect(')');
      return x;
    }
    if (ch == '.') fail("float literals are not accepted");
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
        fail("float literals are not accepted");
      return UEAElement(Scalar(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      skip();
      const bool call = pos_ < s_.size() && s_[pos_] == '(';
      if (call && (id == "d" || id == "h")) return UEAElement(atom(id, start));
      if (id == "C") return UEAElement(Generator::c());
      if (id == "L") return UEAElement(Generator::l());
      if (id == "c") return UEAElement(p_.c);
      if (id == "h") return UEAElement(p_.h);
      if (id == "l") return UEAElement(p_.l);
      if (id == "alpha") return UEAElement(p_.alpha);
      if (id == "beta") return UEAElement(p_.beta);
      if (id == "gamma") return UEAElement(p_.gamma);
      fail_at("unknown identifier '" + std::string(id) + "'", start);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Generator atom(std::string_view id, std::size_t start) {
    expect('(');
    skip();
    const std::size_t at = pos_;
    Scalar index;
    if (!expr().is_scalar(&index)) fail_at("generator index must be a number", at);
    expect(')');
    if (id == "d") {
      if (!is_integer(index)) fail_at("d needs an integer index", start);
      if (!index.get_num().fits_slong_p()) fail_at("index out of range", start);
      return Generator::d(index.get_num().get_si());
    }
    if (!is_half_integer(index) || is_integer(index)) fail_at("h needs a half-odd index", start);
    return Generator::h(HalfInt::from_scalar(index));
  }

  std::string_view s_;
  const Params& p_;
  std::size_t pos_ = 0;
};

}  // namespace

UEAElement parse_element(std::string_view text, const Params& params) { return Parser(text, params).parse_all(); }

Scalar parse_coefficient(std::string_view text, const Params& params) {
  Scalar v;
  if (!parse_element(text, params).is_scalar(&v)) throw ParseError("expected a scalar expression", 0);
  return v;
}

std::string format_element(const UEAElement& x) { return x.to_string(); }

}  // namespace mthv
