#pragma once

// Canonical PBW form in U(D): words of generators sorted by Generator::pbw_rank,
// straightening by adjacent swaps [a,b] = ab - ba, and graded bases of U(D^-).

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mthv/algebra.hpp"

namespace mthv {

/// A word of generators. Canonical monomials have nondecreasing pbw_rank.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {}

  const std::vector<Generator>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }

  bool is_canonical() const;
  /// Every factor is d_{-q} or h_{-r} with q, r > 0.
  bool is_negative() const;
  HalfInt degree() const;
  /// -degree; the natural grading on U(D^-).
  HalfInt level() const { return -degree(); }
  std::size_t d_count() const;

  std::string to_string() const;

  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Generator> factors_;
};

/// Sparse exact combination of canonical monomials. Zero coefficients are never stored.
class UEAElement {
 public:
  using Map = std::map<Monomial, Scalar>;

  UEAElement() = default;
  explicit UEAElement(const Scalar& s);
  explicit UEAElement(const Generator& g);
  /// The monomial must already be canonical.
  UEAElement(const Monomial& m, const Scalar& coeff);
  static UEAElement from_lie(const LieElement& x);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds coeff * m for a canonical monomial m.
  void add(const Monomial& m, const Scalar& coeff);

  /// True when every monomial is purely negative.
  bool is_negative() const;
  /// Common degree of all monomials; throws std::logic_error on mixed degrees.
  /// The zero element has degree 0.
  HalfInt homogeneous_degree() const;
  bool is_homogeneous() const;
  /// Largest level over the monomials (0 for scalars and zero).
  HalfInt max_level() const;
  /// If the element is c * 1, returns true and writes c.
  bool is_scalar(Scalar* value = nullptr) const;

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Scalar& s);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator-(UEAElement a) { return a *= Scalar(-1); }
  friend UEAElement operator*(const Scalar& s, UEAElement a) { return a *= s; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

  /// Canonical text, readable back with parse_element.
  std::string to_string() const;

 private:
  Map terms_;
};

/// Canonical form of the product of the given generators.
UEAElement straighten(std::span<const Generator> word);
/// g * x for a canonical element x.
UEAElement left_multiply(const Generator& g, const UEAElement& x);
UEAElement multiply(const UEAElement& a, const UEAElement& b);
/// ab - ba
UEAElement commutator(const UEAElement& a, const UEAElement& b);

/// All canonical monomials in {d_{-q}, h_{-r}} of total degree -level, sorted.
/// Throws std::invalid_argument for negative levels.
std::vector<Monomial> enumerate_negative_basis(HalfInt level);

/// Clears the calling thread's straightening memo.
void clear_straighten_cache();
std::size_t straighten_cache_size();

}  // namespace mthv

template <>
struct std::hash<mthv::Monomial> {
  std::size_t operator()(const mthv::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& g : m.factors()) h = (h ^ std::hash<mthv::Generator>{}(g)) * 0x100000001b3ULL;
    return h;
  }
};
