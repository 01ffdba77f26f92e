#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "mthv/scalar.hpp"

namespace mthv {

/// An element of (1/2)Z stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt v;
    v.twice_ = twice;
    return v;
  }
  static constexpr HalfInt integer(std::int64_t n) { return from_twice(2 * n); }
  /// p/2
  static constexpr HalfInt halves(std::int64_t p) { return from_twice(p); }

  /// Converts an exact rational; throws std::invalid_argument if 2x is not an integer.
  static HalfInt from_scalar(const Scalar& x);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  /// Only meaningful when is_integral().
  constexpr std::int64_t as_integer() const { return twice_ / 2; }

  Scalar to_scalar() const { return frac(twice_, 2); }
  std::string to_string() const;

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

 private:
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt x) { return x.twice() < 0 ? -x : x; }

}  // namespace mthv

template <>
struct std::hash<mthv::HalfInt> {
  std::size_t operator()(mthv::HalfInt x) const noexcept {
    return std::hash<std::int64_t>{}(x.twice());
  }
};
