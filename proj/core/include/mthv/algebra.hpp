#pragma once

// Basis of the mirror-twisted Heisenberg-Virasoro algebra and its Lie bracket.
//
//   [d_m, d_n] = (m - n) d_{m+n} + (m^3 - m)/12 delta_{m+n,0} c
//   [d_m, h_r] = -r h_{m+r}
//   [h_r, h_s] = r delta_{r+s,0} l
//   c, l central
//
// with m, n integers and r, s in 1/2 + Z.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mthv/half_int.hpp"
#include "mthv/scalar.hpp"

namespace mthv {

enum class GenKind : std::uint8_t { D, H, C, L };

class Generator {
 public:
  static Generator d(std::int64_t m) { return Generator(GenKind::D, HalfInt::integer(m)); }
  /// Throws std::invalid_argument unless r is half-odd.
  static Generator h(HalfInt r);
  static Generator c() { return Generator(GenKind::C, HalfInt()); }
  static Generator l() { return Generator(GenKind::L, HalfInt()); }

  GenKind kind() const { return kind_; }
  HalfInt index() const { return index_; }
  bool is_central() const { return kind_ == GenKind::C || kind_ == GenKind::L; }

  /// Eigenvalue under ad(d_0) with the sign convention deg(d_m) = m.
  HalfInt degree() const { return is_central() ? HalfInt() : index_; }

  bool is_negative() const { return !is_central() && index_.twice() < 0; }
  bool is_positive() const { return !is_central() && index_.twice() > 0; }

  /// Position in the canonical PBW order: h_{-r} (r decreasing), d_{-q}
  /// (q decreasing), d_0, c, l, d_m (m increasing), h_r (r increasing).
  std::pair<int, std::int64_t> pbw_rank() const;

  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  Generator(GenKind k, HalfInt i) : kind_(k), index_(i) {}

  GenKind kind_;
  HalfInt index_;
};

inline bool pbw_less(const Generator& a, const Generator& b) { return a.pbw_rank() < b.pbw_rank(); }

/// Finite linear combination of basis elements of the Lie algebra, sorted by
/// PBW rank with no zero coefficients.
class LieElement {
 public:
  using Term = std::pair<Generator, Scalar>;

  LieElement() = default;
  explicit LieElement(const Generator& g) { add(g, Scalar(1)); }

  void add(const Generator& g, const Scalar& coeff);
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& s, LieElement a) { return a *= s; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LieElement bracket(const Generator& a, const Generator& b);
LieElement bracket(const LieElement& a, const LieElement& b);

/// Numerical parameters of the modules M(c,h,l) and A(alpha,beta,gamma).
/// Operations that need l != 0 or gamma != 0 check it themselves.
struct Params {
  Scalar c = 0;
  Scalar h = 0;
  Scalar l = 0;
  Scalar alpha = 0;
  Scalar beta = 0;
  Scalar gamma = 1;
};

}  // namespace mthv

template <>
struct std::hash<mthv::Generator> {
  std::size_t operator()(const mthv::Generator& g) const noexcept {
    return static_cast<std::size_t>(g.kind()) * 0x9e3779b97f4a7c15ULL ^
           std::hash<std::int64_t>{}(g.index().twice());
  }
};
