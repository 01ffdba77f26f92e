#pragma once

// Concrete modules over D: the Verma module M(c,h,l) generated by a highest
// weight vector 1, the intermediate series A(alpha,beta,gamma) with its
// Virasoro specializations, and the Sugawara coset Virasoro operators d'_m
// acting on M(c,h,l).

#include <map>
#include <optional>
#include <string>

#include "mthv/algebra.hpp"
#include "mthv/pbw.hpp"

namespace mthv {

/// Reduces a canonical element of U(D) applied to the highest weight vector:
/// monomials ending in a positive generator vanish, d_0, c, l become h, c, l.
/// The result lies in U(D^-).
UEAElement reduce_on_highest(const UEAElement& x, const Params& params);

/// P * 1 in M(c,h,l) with P in U(D^-).
class VermaVector {
 public:
  explicit VermaVector(Params params) : params_(std::move(params)) {}
  /// Throws std::invalid_argument if some monomial of p is not purely negative.
  VermaVector(Params params, UEAElement p);

  static VermaVector highest(const Params& params) { return VermaVector(params, UEAElement(Scalar(1))); }

  const Params& params() const { return params_; }
  const UEAElement& element() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  HalfInt max_level() const { return p_.max_level(); }

  VermaVector& operator+=(const VermaVector& o);
  VermaVector& operator-=(const VermaVector& o);
  VermaVector& operator*=(const Scalar& s);
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
  friend VermaVector operator*(const Scalar& s, VermaVector a) { return a *= s; }

  /// Compares the vectors only; parameters are assumed equal.
  friend bool operator==(const VermaVector& a, const VermaVector& b) { return a.p_ == b.p_; }

  std::string to_string() const { return p_.to_string(); }

 private:
  Params params_;
  UEAElement p_;
};

VermaVector verma_apply(const Generator& g, const VermaVector& v);
/// Applies x monomial by monomial, one generator at a time from the right.
VermaVector verma_apply(const UEAElement& x, const VermaVector& v);

enum class IntermediateKind {
  Full,      // A(alpha, beta, gamma), basis v_k with k in Z/2
  Virasoro,  // A(alpha, beta), basis v_k with k in Z, H acting by 0
  Prime,     // A'(alpha, beta): the nontrivial irreducible subquotient of A(alpha, beta)
};

/// Finite combination of the basis vectors v_k of an intermediate series module.
class IntermediateVector {
 public:
  /// Throws DomainError for gamma == 0 on the full kind.
  IntermediateVector(IntermediateKind kind, Scalar alpha, Scalar beta, Scalar gamma = 1);

  static IntermediateVector basis(IntermediateKind kind, const Scalar& alpha, const Scalar& beta,
                                  const Scalar& gamma, HalfInt k);

  IntermediateKind kind() const { return kind_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& beta() const { return beta_; }
  const Scalar& gamma() const { return gamma_; }
  const std::map<HalfInt, Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(HalfInt k) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// True when v_k is a basis vector of this kind.
  bool in_support(HalfInt k) const;
  /// For Prime kinds realized as a quotient or submodule, the index left out.
  std::optional<HalfInt> excluded_index() const;
  /// Prime kind with alpha in Z and beta = 0: realized as A(alpha,0)/Cv_alpha.
  bool is_quotient() const;
  /// Prime kind with alpha in Z and beta = -1: realized as span{v_k : k != alpha}.
  bool is_submodule() const;

  /// Adds coeff * v_k; throws std::invalid_argument outside the support.
  void add(HalfInt k, const Scalar& coeff);

  IntermediateVector& operator+=(const IntermediateVector& o);
  IntermediateVector& operator-=(const IntermediateVector& o);
  IntermediateVector& operator*=(const Scalar& s);
  friend IntermediateVector operator+(IntermediateVector a, const IntermediateVector& b) { return a += b; }
  friend IntermediateVector operator-(IntermediateVector a, const IntermediateVector& b) { return a -= b; }

  friend bool operator==(const IntermediateVector& a, const IntermediateVector& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  IntermediateKind kind_;
  Scalar alpha_, beta_, gamma_;
  std::map<HalfInt, Scalar> coeffs_;
};

/// d_m v_k = (alpha + beta m - k) v_{m+k}; h_r v_n = v_{n+r} (n in Z),
/// h_r v_s = gamma v_{r+s} (s in 1/2+Z); c and l act by 0. On the Virasoro
/// kinds h_r acts by 0. For a Prime submodule a nonzero coefficient on the
/// excluded index throws std::logic_error.
IntermediateVector intermediate_apply(const Generator& g, const IntermediateVector& v);
IntermediateVector intermediate_apply(const UEAElement& x, const IntermediateVector& v);

/// d'_m = d_m - (1/2l) sum_{k in 1/2+Z} h_{m-k} h_k for m != 0 and
/// d'_0 = d_0 - (1/2l) sum_k h_{-|k|} h_{|k|} - 1/16, applied to v.
/// Throws DomainError when l = 0.
VermaVector sugawara_coset_apply(std::int64_t m, const VermaVector& v);

/// The element Q of U(D^-) with p(d') 1 = Q 1, for p a polynomial in the
/// d_{-q}, q >= 1. Throws DomainError when l = 0 and std::invalid_argument if
/// p contains other generators.
UEAElement coset_lift(const UEAElement& p, const Params& params);

}  // namespace mthv
