#include "mthv/scalar.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "mthv/half_int.hpp"

namespace mthv {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

HalfInt HalfInt::from_scalar(const Scalar& x) {
  const Scalar twice = 2 * x;
  if (!is_integer(twice) || !twice.get_num().fits_slong_p()) {
    throw std::invalid_argument("not a representable half-integer: " + x.get_str());
  }
  return from_twice(twice.get_num().get_si());
}

std::string HalfInt::to_string() const {
  if (is_integral()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace mthv
