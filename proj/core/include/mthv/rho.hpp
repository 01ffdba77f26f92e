#pragma once

// The linear functional rho_n on U(D^-) that measures P1 (x) y^n modulo
// W^(n+1/2) as a multiple of 1 (x) y^n, its dependence on n as one
// polynomial per coset of Z in Z/2, and exact root extraction over Z/2.

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mthv/algebra.hpp"
#include "mthv/pbw.hpp"

namespace mthv {

/// Dense univariate polynomial over Q, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  /// x - root
  static Polynomial linear_root(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
  Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  Scalar eval(const Scalar& x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of a / b; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// n -> rho_n(P), one polynomial for n in Z and one for n in 1/2 + Z.
struct CosetPolynomial {
  Polynomial p_int;
  Polynomial p_half;
  friend bool operator==(const CosetPolynomial&, const CosetPolynomial&) = default;
};

/// Subset of Z/2: each coset may be taken whole, plus finitely many extra points.
class HalfIntSet {
 public:
  static HalfIntSet all() { return HalfIntSet(true, true, {}); }
  static HalfIntSet empty() { return HalfIntSet(false, false, {}); }
  static HalfIntSet finite(std::set<HalfInt> points) { return HalfIntSet(false, false, std::move(points)); }
  HalfIntSet(bool all_int, bool all_half, std::set<HalfInt> points);

  bool all_integers() const { return all_int_; }
  bool all_half_odd() const { return all_half_; }
  bool is_all() const { return all_int_ && all_half_; }
  bool is_finite() const { return !all_int_ && !all_half_; }
  bool is_empty() const { return is_finite() && points_.empty(); }
  /// Points not already covered by a whole coset.
  const std::set<HalfInt>& points() const { return points_; }
  bool contains(HalfInt n) const;

  HalfIntSet intersect(const HalfIntSet& o) const;

  /// "all", "Z", "1/2+Z", "{-1/2, 1/2}", or unions like "Z u {1/2}".
  std::string to_string() const;

  friend bool operator==(const HalfIntSet&, const HalfIntSet&) = default;

 private:
  bool all_int_;
  bool all_half_;
  std::set<HalfInt> points_;
};

/// rho_n of a single word read as a product in the tensor algebra. Throws
/// DomainError on a generator that is not d_{-q} or h_{-r}.
Scalar rho_eval_word(std::span<const Generator> word, const Scalar& n, const Params& params);

/// rho_n(P) for P in U(D^-). n may be any rational; integrality tests are exact.
Scalar rho_eval(const UEAElement& p, const Scalar& n, const Params& params);
Scalar rho_eval(const UEAElement& p, HalfInt n, const Params& params);

CosetPolynomial rho_polynomials(const UEAElement& p, const Params& params);

/// Exact roots of p_int in Z and of p_half in 1/2 + Z. A zero branch
/// contributes its whole coset.
HalfIntSet half_integer_roots(const CosetPolynomial& cp);

/// Integer roots of p, found by Sturm-sequence isolation on integer intervals.
std::set<std::int64_t> integer_roots(const Polynomial& p);

/// Common zeros in Z/2 of n -> rho_n(Q) over all given Q; zero elements
/// impose nothing, and an empty list gives all of Z/2.
HalfIntSet lambda_set(std::span<const UEAElement> qs, const Params& params);

}  // namespace mthv
