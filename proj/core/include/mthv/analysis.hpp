#pragma once

// Decision procedures for M(c,h,l) and L(c,h,l) (x) A(alpha,beta,gamma):
// Kac factors, singular vectors, generators of the maximal submodule, the
// irreducibility verdict with its set Lambda, the resulting filtration, and
// isomorphism tests between tensor modules.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mthv/algebra.hpp"
#include "mthv/pbw.hpp"
#include "mthv/rho.hpp"

namespace mthv {

/// a + b sqrt(d) with rational a, b, d.
struct QuadExtScalar {
  Scalar a, b, d;
  bool is_zero() const;
  std::string to_string() const;
};

/// phi_{r,s}(c,h) = h - (13-c)(r^2+s^2)/48 - (sqrt((c-1)(c-25))(r^2-s^2) - 24rs - 2 + 2c)/48.
/// Throws std::invalid_argument unless r, s >= 1.
QuadExtScalar kac_phi(const Scalar& c, const Scalar& h, int r, int s);

struct KacZero {
  int r, s;
  int level() const { return r * s; }
  friend bool operator==(const KacZero&, const KacZero&) = default;
};

/// All (r,s) in [1, rs_bound]^2 with phi_{r,s}(c,h) = 0, ordered by level then r.
std::vector<KacZero> kac_zeros(const Scalar& c, const Scalar& h, int rs_bound);

struct VermaVerdict {
  bool reducible = false;
  std::vector<KacZero> witnesses;
  Scalar c_virasoro, h_virasoro;
  int rs_bound = 0;
};

/// Scans phi_{r,s}(c-1, h-1/16) for r, s in [1, rs_bound]. A clean scan means
/// no obstruction up to the bound. Throws DomainError when l = 0.
VermaVerdict verma_irreducible(const Params& params, int rs_bound);

/// Basis of the level-`level` vectors Q1 of M(c,h,l) with d_1, d_2, h_{1/2}
/// mapping them into the submodule sum_i U(D^-) modulo[i] 1, reduced modulo
/// that submodule. Each returned vector has coefficient 1 on its leading
/// monomial (most d-factors first, then PBW order) and 0 on the others'.
/// The modulo elements must be homogeneous and generate a submodule.
std::vector<UEAElement> singular_vectors(const Params& params, HalfInt level,
                                         const std::vector<UEAElement>& modulo = {});

/// True when d_1, d_2 and h_{1/2} send Q1 into sum_i U(D^-) modulo[i] 1 (checked exactly).
bool is_singular_modulo(const Params& params, const UEAElement& q, const std::vector<UEAElement>& modulo = {});

struct SearchOptions {
  HalfInt level_bound = HalfInt::integer(2);
  int rs_bound = 5;
  /// Optional per-level cache of newly found generators.
  std::function<std::optional<std::vector<UEAElement>>(HalfInt level)> lookup;
  std::function<void(HalfInt level, const std::vector<UEAElement>&)> store;
};

struct GeneratorSearch {
  std::vector<UEAElement> generators;  // ascending level
  HalfInt level_bound;
  int rs_bound = 0;
  Scalar c_virasoro, h_virasoro;
  std::vector<KacZero> kac_zeros;
  /// Kac zeros whose singular vector is not accounted for by the generators
  /// found; nonempty means the search may have stopped too early.
  std::vector<KacZero> unexplained;
  std::size_t cache_hits = 0;
  bool complete() const { return unexplained.empty(); }
};

/// Generators of the maximal proper submodule of M(c,h,l) up to the level
/// bound: each level is searched modulo the submodule generated so far.
/// Throws DomainError when l = 0.
GeneratorSearch maximal_submodule_generators(const Params& params, const SearchOptions& options = {});

enum class TensorKind { A, APrime };

enum class VerdictKind { Irreducible, Reducible, ReducesToVirasoro, Inconclusive };

std::string to_string(TensorKind k);
std::string to_string(VerdictKind k);

struct IrreducibilityVerdict {
  int clause = 0;  // 1-4 in the order: A' with l = 0, A' with l != 0, A with l = 0, A with l != 0
  VerdictKind result = VerdictKind::Inconclusive;
  std::optional<HalfIntSet> lambda;
  std::optional<GeneratorSearch> search;
  Scalar c_virasoro, h_virasoro;  // for ReducesToVirasoro
  std::string reason;
};

/// Irreducibility of L(c,h,l) (x) A(alpha,beta,gamma) or L(c,h,l) (x) A'(alpha,beta).
/// Throws DomainError for gamma = 0 with the A kind.
IrreducibilityVerdict tensor_irreducibility(const Params& params, TensorKind kind, const SearchOptions& options = {});

struct FiltrationStep {
  HalfInt k;               // quotient of W(k) by W(k + 1/2)
  Scalar highest_weight;   // alpha + h - k
};

struct FiltrationReport {
  enum class Shape { Irreducible, Finite, Unbounded, Inconclusive };
  Shape shape = Shape::Inconclusive;
  HalfIntSet lambda = HalfIntSet::empty();
  std::vector<FiltrationStep> steps;  // ascending k
  std::optional<HalfInt> terminal_k;  // W(k_t + 1/2), irreducible
  Scalar c, l;
  GeneratorSearch search;
  std::string description;
};

/// The chain of submodules of L(c,h,l) (x) A(alpha,beta,gamma) cut out by Lambda.
/// Throws DomainError when l = 0.
FiltrationReport filtration_report(const Params& params, const SearchOptions& options = {});

struct TensorModule {
  TensorKind kind = TensorKind::A;
  Params params;
};

struct IsoVerdict {
  bool isomorphic = false;
  int clause = 0;  // 1: A' vs A', 2: A vs A, 3: mixed
  std::string reason;
};

IsoVerdict iso_classifier(const TensorModule& a, const TensorModule& b);

/// A(alpha, beta) is irreducible unless alpha in Z and beta in {0, -1}.
bool intermediate_irreducible(const Scalar& alpha, const Scalar& beta);

/// Checks that v_k -> coefficient(k) v_{k+n} intertwines A(alpha,beta,gamma)
/// and A(alpha+n,beta,gamma) for generators and k with |index| <= window.
bool shift_iso_check(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, HalfInt n, int window,
                     const std::function<Scalar(HalfInt k)>& coefficient);
/// The standard map: coefficient 1 for integral n, otherwise 1 on v_k with
/// k integral and gamma on v_k with k half-odd.
bool shift_iso_check(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, HalfInt n, int window);

}  // namespace mthv
