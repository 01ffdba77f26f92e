#include "mthv/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mthv/errors.hpp"
#include "mthv/linalg.hpp"
#include "mthv/modules.hpp"

namespace mthv {

// ---------------------------------------------------------------------------
// Kac factors

namespace {

bool is_rational_square(const Scalar& x, Scalar* root) {
  if (x < 0) return false;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  *root = Scalar(rn, rd);
  root->canonicalize();
  return true;
}

}  // namespace

bool QuadExtScalar::is_zero() const {
  if (b == 0 || d == 0) return a == 0;
  Scalar root;
  if (is_rational_square(d, &root)) return a + b * root == 0;
  return a == 0 && b == 0;
}

std::string QuadExtScalar::to_string() const {
  if (b == 0 || d == 0) return a.get_str();
  return a.get_str() + (b < 0 ? " - " : " + ") + Scalar(abs(b)).get_str() + "*sqrt(" + d.get_str() + ")";
}

QuadExtScalar kac_phi(const Scalar& c, const Scalar& h, int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("kac_phi needs r, s >= 1");
  const long r2 = static_cast<long>(r) * r, s2 = static_cast<long>(s) * s, rs = static_cast<long>(r) * s;
  QuadExtScalar phi;
  phi.a = h - (13 - c) * (r2 + s2) / 48 + (24 * rs + 2 - 2 * c) / 48;
  phi.b = frac(-(r2 - s2), 48);
  phi.d = (c - 1) * (c - 25);
  return phi;
}

std::vector<KacZero> kac_zeros(const Scalar& c, const Scalar& h, int rs_bound) {
  std::vector<KacZero> out;
  for (int r = 1; r <= rs_bound; ++r)
    for (int s = 1; s <= rs_bound; ++s)
      if (kac_phi(c, h, r, s).is_zero()) out.push_back({r, s});
  std::sort(out.begin(), out.end(), [](const KacZero& a, const KacZero& b) {
    return std::pair(a.level(), a.r) < std::pair(b.level(), b.r);
  });
  return out;
}

VermaVerdict verma_irreducible(const Params& params, int rs_bound) {
  if (params.l == 0) throw DomainError("the Kac criterion for M(c,h,l) needs l != 0");
  if (rs_bound < 1) throw std::invalid_argument("rs_bound must be at least 1");
  VermaVerdict v;
  v.c_virasoro = params.c - 1;
  v.h_virasoro = params.h - Scalar(1, 16);
  v.rs_bound = rs_bound;
  v.witnesses = kac_zeros(v.c_virasoro, v.h_virasoro, rs_bound);
  v.reducible = !v.witnesses.empty();
  return v;
}

// ---------------------------------------------------------------------------
// Singular vectors

namespace {

struct LevelSpace {
  std::vector<Monomial> basis;
  std::map<Monomial, std::size_t> index;

  explicit LevelSpace(HalfInt level) {
    if (level < HalfInt()) return;
    basis = enumerate_negative_basis(level);
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  }
  std::size_t size() const { return basis.size(); }

  RationalVector coords(const UEAElement& x) const {
    RationalVector v(basis.size());
    for (const auto& [m, k] : x.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw std::logic_error("element outside its weight space: " + m.to_string());
      v[it->second] = k;
    }
    return v;
  }
};

HalfInt element_level(const UEAElement& q) {
  if (q.is_zero()) throw std::invalid_argument("zero generator");
  if (!q.is_negative()) throw std::invalid_argument("generator must lie in U(D^-): " + q.to_string());
  return -q.homogeneous_degree();
}

// U(D^-) gens at the given level, as elements.
std::vector<UEAElement> submodule_span(const std::vector<UEAElement>& gens, HalfInt level) {
  std::vector<UEAElement> out;
  if (level < HalfInt()) return out;
  for (const auto& g : gens) {
    const HalfInt gl = element_level(g);
    if (gl > level) continue;
    for (const auto& u : enumerate_negative_basis(level - gl)) out.push_back(multiply(UEAElement(u, 1), g));
  }
  return out;
}

// Elimination priority: more d-factors first, then the PBW order.
std::vector<std::size_t> normalization_order(const std::vector<Monomial>& basis) {
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (basis[a].d_count() != basis[b].d_count()) return basis[a].d_count() > basis[b].d_count();
    return basis[a] < basis[b];
  });
  return order;
}

const std::vector<Generator>& raising_operators() {
  static const std::vector<Generator> ops = {Generator::d(1), Generator::d(2), Generator::h(HalfInt::halves(1))};
  return ops;
}

}  // namespace

std::vector<UEAElement> singular_vectors(const Params& params, HalfInt level, const std::vector<UEAElement>& modulo) {
  if (level <= HalfInt()) throw std::invalid_argument("singular vectors are searched at positive levels");
  const LevelSpace space(level);
  const std::size_t n = space.size();

  struct Block {
    LevelSpace target;
    std::vector<UEAElement> span;
    std::vector<RationalVector> images;
  };
  std::vector<Block> blocks;
  std::size_t rows = 0, cols = n;
  for (const auto& g : raising_operators()) {
    const HalfInt tl = level - g.index();
    if (tl < HalfInt()) continue;
    Block b{LevelSpace(tl), submodule_span(modulo, tl), {}};
    for (const auto& m : space.basis) {
      const VermaVector img = verma_apply(g, VermaVector(params, UEAElement(m, 1)));
      b.images.push_back(b.target.coords(img.element()));
    }
    rows += b.target.size();
    cols += b.span.size();
    blocks.push_back(std::move(b));
  }

  // Unknowns: coefficients x over the level basis, then one block of
  // coefficients per operator for the submodule vectors it may land on.
  RationalMatrix system(rows, cols);
  std::size_t row0 = 0, col0 = n;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < b.target.size(); ++i) system(row0 + i, j) = b.images[j][i];
    for (std::size_t s = 0; s < b.span.size(); ++s) {
      const RationalVector v = b.target.coords(b.span[s]);
      for (std::size_t i = 0; i < v.size(); ++i) system(row0 + i, col0 + s) = -v[i];
    }
    row0 += b.target.size();
    col0 += b.span.size();
  }

  const std::vector<std::size_t> order = normalization_order(space.basis);
  SubspaceReducer inside(n, order);
  for (const auto& x : submodule_span(modulo, level)) inside.insert(space.coords(x));
  SubspaceReducer found(n, order);
  for (const auto& k : kernel(system)) {
    RationalVector x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
    found.insert(inside.reduce(std::move(x)));
  }

  // Report in elimination order of the pivots.
  std::vector<std::size_t> rank_of(n);
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;
  std::vector<std::size_t> idx(found.rank());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return rank_of[found.pivots()[a]] < rank_of[found.pivots()[b]]; });
  std::vector<UEAElement> out;
  for (std::size_t i : idx) {
    UEAElement q;
    const RationalVector& row = found.basis()[i];
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] != 0) q.add(space.basis[j], row[j]);
    out.push_back(std::move(q));
  }
  return out;
}

bool is_singular_modulo(const Params& params, const UEAElement& q, const std::vector<UEAElement>& modulo) {
  if (q.is_zero()) return true;
  const HalfInt level = element_level(q);
  for (const auto& g : raising_operators()) {
    const HalfInt tl = level - g.index();
    const VermaVector img = verma_apply(g, VermaVector(params, q));
    if (tl < HalfInt()) {
      if (!img.is_zero()) return false;
      continue;
    }
    const LevelSpace target(tl);
    SubspaceReducer span(target.size());
    for (const auto& x : submodule_span(modulo, tl)) span.insert(target.coords(x));
    if (!span.contains(target.coords(img.element()))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maximal submodule

namespace {

// Kac zeros whose singular vectors are not reached from the generators found.
// A singular vector of weight x embeds M(c_V, x); its own Kac zeros at (c_V, x)
// give further weights x + rs inside the submodule already generated.
std::vector<KacZero> unexplained_zeros(const Scalar& cv, const Scalar& hv, const std::vector<KacZero>& zeros,
                                       const std::vector<UEAElement>& generators) {
  if (zeros.empty()) return {};
  int max_level = 0;
  for (const auto& z : zeros) max_level = std::max(max_level, z.level());
  std::set<int> reached;  // offsets from h_V
  std::vector<int> queue;
  for (const auto& g : generators) {
    const HalfInt l = -g.homogeneous_degree();
    if (!l.is_integral()) continue;  // never happens: coset weights differ from h_V by integers
    const int off = static_cast<int>(l.as_integer());
    if (reached.insert(off).second) queue.push_back(off);
  }
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    for (int g = 1; x + g <= max_level; ++g) {
      if (reached.count(x + g)) continue;
      for (int r = 1; r <= g; ++r) {
        if (g % r != 0) continue;
        if (kac_phi(cv, hv + x, r, g / r).is_zero()) {
          reached.insert(x + g);
          queue.push_back(x + g);
          break;
        }
      }
    }
  }
  std::vector<KacZero> out;
  for (const auto& z : zeros)
    if (!reached.count(z.level())) out.push_back(z);
  return out;
}

}  // namespace

GeneratorSearch maximal_submodule_generators(const Params& params, const SearchOptions& options) {
  if (params.l == 0) throw DomainError("the generator search for M(c,h,l) needs l != 0");
  GeneratorSearch out;
  out.level_bound = options.level_bound;
  out.rs_bound = options.rs_bound;
  out.c_virasoro = params.c - 1;
  out.h_virasoro = params.h - Scalar(1, 16);
  for (HalfInt level = HalfInt::halves(1); level <= options.level_bound; level += HalfInt::halves(1)) {
    std::optional<std::vector<UEAElement>> fresh;
    if (options.lookup) fresh = options.lookup(level);
    if (fresh) {
      ++out.cache_hits;
    } else {
      fresh = singular_vectors(params, level, out.generators);
      if (options.store) options.store(level, *fresh);
    }
    out.generators.insert(out.generators.end(), fresh->begin(), fresh->end());
  }
  out.kac_zeros = kac_zeros(out.c_virasoro, out.h_virasoro, options.rs_bound);
  out.unexplained = unexplained_zeros(out.c_virasoro, out.h_virasoro, out.kac_zeros, out.generators);
  return out;
}

// ---------------------------------------------------------------------------
// Tensor products

std::string to_string(TensorKind k) { return k == TensorKind::A ? "A" : "Aprime"; }

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Irreducible: return "irreducible";
    case VerdictKind::Reducible: return "reducible";
    case VerdictKind::ReducesToVirasoro: return "reduces-to-virasoro";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::string describe_unexplained(const GeneratorSearch& s) {
  std::string out = "Kac zeros without a matching generator up to level " + s.level_bound.to_string() + ":";
  for (const auto& z : s.unexplained)
    out += " (" + std::to_string(z.r) + "," + std::to_string(z.s) + ")@" + std::to_string(z.level());
  return out;
}

}  // namespace

IrreducibilityVerdict tensor_irreducibility(const Params& params, TensorKind kind, const SearchOptions& options) {
  IrreducibilityVerdict v;
  if (kind == TensorKind::APrime) {
    v.result = VerdictKind::ReducesToVirasoro;
    if (params.l == 0) {
      v.clause = 1;
      v.c_virasoro = params.c;
      v.h_virasoro = params.h;
      v.reason = "irreducible iff L_V(c,h) (x) A'(alpha,beta) is irreducible over Vir";
    } else {
      v.clause = 2;
      v.c_virasoro = params.c - 1;
      v.h_virasoro = params.h - Scalar(1, 16);
      v.reason = "irreducible iff L_V(c-1,h-1/16) (x) A'(alpha,beta) is irreducible over Vir";
    }
    return v;
  }
  if (params.gamma == 0) throw DomainError("A(alpha,beta,gamma) needs gamma != 0");
  if (params.l == 0) {
    v.clause = 3;
    v.result = VerdictKind::Irreducible;
    v.reason = "l = 0";
    return v;
  }
  v.clause = 4;
  v.search = maximal_submodule_generators(params, options);
  v.lambda = lambda_set(v.search->generators, params);
  if (!v.search->complete()) {
    v.result = VerdictKind::Inconclusive;
    v.reason = describe_unexplained(*v.search);
  } else if (v.lambda->is_empty()) {
    v.result = VerdictKind::Irreducible;
    v.reason = "no n in Z/2 annihilates rho_n on every generator";
  } else {
    v.result = VerdictKind::Reducible;
    v.reason = "rho_n vanishes on every generator for n in " + v.lambda->to_string();
  }
  return v;
}

FiltrationReport filtration_report(const Params& params, const SearchOptions& options) {
  if (params.l == 0) throw DomainError("the filtration by W(k) is described for l != 0");
  if (params.gamma == 0) throw DomainError("A(alpha,beta,gamma) needs gamma != 0");
  FiltrationReport rep;
  rep.c = params.c;
  rep.l = params.l;
  rep.search = maximal_submodule_generators(params, options);
  rep.lambda = lambda_set(rep.search.generators, params);
  if (!rep.search.complete()) {
    rep.shape = FiltrationReport::Shape::Inconclusive;
    rep.description = describe_unexplained(rep.search);
    return rep;
  }
  if (rep.lambda.is_empty()) {
    rep.shape = FiltrationReport::Shape::Irreducible;
    rep.description = "irreducible, no proper chain";
    return rep;
  }
  if (!rep.lambda.is_finite()) {
    rep.shape = FiltrationReport::Shape::Unbounded;
    rep.description = "every inclusion W(k+1/2) in W(k) with k in " + rep.lambda.to_string() +
                      " is proper; the quotient at k has highest weight alpha+h-k";
    return rep;
  }
  rep.shape = FiltrationReport::Shape::Finite;
  for (HalfInt k : rep.lambda.points()) rep.steps.push_back({k, params.alpha + params.h - k.to_scalar()});
  rep.terminal_k = rep.steps.back().k + HalfInt::halves(1);
  rep.description = "0 < W(" + rep.terminal_k->to_string() + ")";
  for (auto it = rep.steps.rbegin(); it != rep.steps.rend(); ++it) rep.description += " < W(" + it->k.to_string() + ")";
  rep.description += "; W(" + rep.terminal_k->to_string() + ") is irreducible";
  return rep;
}

// ---------------------------------------------------------------------------
// Isomorphisms

IsoVerdict iso_classifier(const TensorModule& a, const TensorModule& b) {
  for (const auto* t : {&a, &b}) {
    if (t->kind == TensorKind::A && t->params.gamma == 0) throw DomainError("A(alpha,beta,gamma) needs gamma != 0");
  }
  const Params& p = a.params;
  const Params& q = b.params;
  IsoVerdict v;
  if (a.kind != b.kind) {
    v.clause = 3;
    v.reason = "h_{1/2} kills the top of L (x) A'(alpha,beta) but no weight vector of L (x) A(alpha,beta,gamma)";
    return v;
  }
  const bool same_chl = p.c == q.c && p.h == q.h && p.l == q.l;
  const Scalar shift = p.alpha - q.alpha;
  if (a.kind == TensorKind::APrime) {
    v.clause = 1;
    const bool beta_ok = p.beta == q.beta || (p.beta == 0 && q.beta == -1) || (p.beta == -1 && q.beta == 0);
    v.isomorphic = same_chl && is_integer(shift) && beta_ok;
    if (!same_chl) v.reason = "(c,h,l) differ";
    else if (!is_integer(shift)) v.reason = "alpha - alpha1 is not an integer";
    else if (!beta_ok) v.reason = "beta differs and {beta,beta1} != {0,-1}";
    else v.reason = "(c,h,l) agree, alpha - alpha1 in Z, beta compatible";
    return v;
  }
  v.clause = 2;
  const bool rest = same_chl && p.beta == q.beta && p.gamma == q.gamma;
  v.isomorphic = rest && is_half_integer(shift);
  if (!same_chl) v.reason = "(c,h,l) differ";
  else if (p.beta != q.beta) v.reason = "beta differs";
  else if (p.gamma != q.gamma) v.reason = "gamma differs";
  else if (!is_half_integer(shift)) v.reason = "alpha - alpha1 is not in Z/2";
  else v.reason = "(beta,gamma,c,h,l) agree and alpha - alpha1 in Z/2";
  return v;
}

bool intermediate_irreducible(const Scalar& alpha, const Scalar& beta) {
  return !(is_integer(alpha) && (beta == 0 || beta == -1));
}

bool shift_iso_check(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, HalfInt n, int window,
                     const std::function<Scalar(HalfInt k)>& coefficient) {
  using K = IntermediateKind;
  const Scalar target_alpha = alpha + n.to_scalar();
  auto map = [&](const IntermediateVector& v) {
    IntermediateVector out(K::Full, target_alpha, beta, gamma);
    for (const auto& [k, c] : v.coefficients()) out.add(k + n, c * coefficient(k));
    return out;
  };
  std::vector<Generator> gens = {Generator::c(), Generator::l()};
  for (int m = -window; m <= window; ++m) gens.push_back(Generator::d(m));
  for (int t = -2 * window + 1; t <= 2 * window - 1; t += 2) gens.push_back(Generator::h(HalfInt::from_twice(t)));
  for (int kt = -2 * window; kt <= 2 * window; ++kt) {
    const auto v = IntermediateVector::basis(K::Full, alpha, beta, gamma, HalfInt::from_twice(kt));
    const IntermediateVector fv = map(v);
    for (const auto& g : gens) {
      if (!(map(intermediate_apply(g, v)) == intermediate_apply(g, fv))) return false;
    }
  }
  return true;
}

bool shift_iso_check(const Scalar& alpha, const Scalar& beta, const Scalar& gamma, HalfInt n, int window) {
  return shift_iso_check(alpha, beta, gamma, n, window, [&](HalfInt k) -> Scalar {
    if (n.is_integral() || k.is_integral()) return 1;
    return gamma;
  });
}

}  // namespace mthv
