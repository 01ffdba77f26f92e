#pragma once

// The module M(c,h,l) (x) C[y^{+-1/2}] that realizes M(c,h,l) (x) A(alpha,beta,gamma)
// with v_{i+p} <-> y^i on the level-p part, and a truncated membership test
// for the submodules W^(k) = sum_{i >= 0} U(D)(1 (x) y^{k+i}).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mthv/linalg.hpp"
#include "mthv/modules.hpp"

namespace mthv {

/// Finite sum of P1 (x) y^i, stored as y-power -> P in U(D^-).
class ShiftedVector {
 public:
  /// Throws DomainError if gamma == 0.
  explicit ShiftedVector(Params params);
  ShiftedVector(Params params, HalfInt power, UEAElement p);

  const Params& params() const { return params_; }
  const std::map<HalfInt, UEAElement>& components() const { return comps_; }
  UEAElement component(HalfInt power) const;
  bool is_zero() const { return comps_.empty(); }
  HalfInt max_level() const;

  void add(HalfInt power, const UEAElement& p);

  ShiftedVector& operator+=(const ShiftedVector& o);
  ShiftedVector& operator-=(const ShiftedVector& o);
  ShiftedVector& operator*=(const Scalar& s);
  friend ShiftedVector operator+(ShiftedVector a, const ShiftedVector& b) { return a += b; }
  friend ShiftedVector operator-(ShiftedVector a, const ShiftedVector& b) { return a -= b; }
  friend ShiftedVector operator*(const Scalar& s, ShiftedVector a) { return a *= s; }
  friend bool operator==(const ShiftedVector& a, const ShiftedVector& b) { return a.comps_ == b.comps_; }

  std::string to_string() const;

 private:
  Params params_;
  std::map<HalfInt, UEAElement> comps_;
};

/// d_n(P (x) y^i) = d_nP (x) y^{i+n} + (alpha + beta n - p - i) P (x) y^{i+n}
/// h_r(P (x) y^i) = h_rP (x) y^{i+r} + (delta_{i+p in Z} + gamma delta_{i+p not in Z}) P (x) y^{i+r}
/// with p the level of P; c and l act by c and l.
ShiftedVector shifted_apply(const Generator& g, const ShiftedVector& v);
ShiftedVector shifted_apply(const UEAElement& x, const ShiftedVector& v);

struct MembershipResult {
  bool member = false;
  /// Coefficients of the spanning vectors that reproduce v when member is true.
  std::optional<RationalVector> certificate;
  HalfInt level_cap;
  HalfInt shift_cap;
};

/// The span of u(1 (x) y^{k+i}), u running over PBW monomials of level j <= level_cap
/// with 0 <= i <= shift_cap, projected to the weight space of y^power.
///
/// Each spanning vector equals u1 (x) y^power plus terms of lower level, so
/// the span is exactly W^(k) restricted to P-levels <= effective_level().
class TruncatedWSpan {
 public:
  TruncatedWSpan(const Params& params, HalfInt k, HalfInt power, HalfInt level_cap, HalfInt shift_cap);

  HalfInt k() const { return k_; }
  HalfInt power() const { return power_; }
  /// Largest level j for which all of W^(k) at that level is generated.
  HalfInt effective_level() const { return effective_; }
  std::size_t span_size() const { return spanning_.size(); }
  std::size_t ambient_dim() const { return index_.size(); }
  std::size_t rank() const;

  /// Membership of P (x) y^power. Throws InconclusiveError if P has a
  /// level beyond effective_level().
  MembershipResult contains(const UEAElement& p) const;

  /// Coordinates of P over the monomials of levels <= effective_level().
  RationalVector coordinates(const UEAElement& p) const;

 private:
  Params params_;
  HalfInt k_, power_, level_cap_, shift_cap_, effective_;
  std::map<Monomial, std::size_t> index_;
  std::vector<RationalVector> spanning_;
};

/// Decides whether the weight vector v lies in W^(k). Caps default to
/// shift_cap = 2 level(v) + 1 (plus power - k when v sits above y^k) and
/// level_cap = level(v) + shift_cap.
/// Throws std::invalid_argument if v has several y-powers and
/// InconclusiveError if the caps cannot cover v.
MembershipResult w_membership_detailed(const ShiftedVector& v, HalfInt k, std::optional<HalfInt> level_cap = {},
                                       std::optional<HalfInt> shift_cap = {});
bool w_membership(const ShiftedVector& v, HalfInt k, std::optional<HalfInt> level_cap = {},
                  std::optional<HalfInt> shift_cap = {});

/// Checks that W^(k) has codimension one in the weight space of y^{k-1/2},
/// with complement C(1 (x) y^{k-1/2}), on P-levels <= level_cap.
/// Throws InconclusiveError for level_cap < 1/2.
bool verify_codimension_one(const Params& params, HalfInt k, HalfInt level_cap);

}  // namespace mthv
