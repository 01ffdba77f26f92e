#include "mthv/rho.hpp"

#include <algorithm>
#include <stdexcept>

#include "mthv/errors.hpp"

namespace mthv {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Scalar> q(std::max(0, a.degree() - b.degree() + 1));
  std::vector<Scalar> r = a.c_;
  const Scalar lead = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Scalar f = r[static_cast<std::size_t>(i + b.degree())] / lead;
    q[static_cast<std::size_t>(i)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(i + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= 1 / a.leading();
  return a;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Scalar& k = c_[i];
    if (k == 0) continue;
    const Scalar mag = abs(k);
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// HalfIntSet

HalfIntSet::HalfIntSet(bool all_int, bool all_half, std::set<HalfInt> points)
    : all_int_(all_int), all_half_(all_half) {
  for (HalfInt p : points) {
    if (p.is_integral() ? !all_int_ : !all_half_) points_.insert(p);
  }
}

bool HalfIntSet::contains(HalfInt n) const {
  if (n.is_integral() ? all_int_ : all_half_) return true;
  return points_.count(n) > 0;
}

HalfIntSet HalfIntSet::intersect(const HalfIntSet& o) const {
  std::set<HalfInt> pts;
  for (HalfInt p : points_)
    if (o.contains(p)) pts.insert(p);
  for (HalfInt p : o.points_)
    if (contains(p)) pts.insert(p);
  return HalfIntSet(all_int_ && o.all_int_, all_half_ && o.all_half_, std::move(pts));
}

std::string HalfIntSet::to_string() const {
  std::string cosets;
  if (is_all()) return "all";
  if (all_int_) cosets = "Z";
  if (all_half_) cosets = "1/2+Z";
  std::string pts;
  if (!points_.empty() || cosets.empty()) {
    pts = "{";
    bool first = true;
    for (HalfInt p : points_) {
      if (!first) pts += ", ";
      pts += p.to_string();
      first = false;
    }
    pts += "}";
  }
  if (cosets.empty()) return pts;
  return pts.empty() ? cosets : cosets + " u " + pts;
}

// ---------------------------------------------------------------------------
// rho

namespace {

void require_negative(const Generator& g) {
  if (!g.is_negative()) throw DomainError("rho is defined on U(D^-) only; got " + g.to_string());
}

}  // namespace

Scalar rho_eval_word(std::span<const Generator> word, const Scalar& n, const Params& params) {
  // Fold from the right; k is the level of the part already folded.
  Scalar value = 1;
  HalfInt k;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    require_negative(*it);
    const HalfInt idx = -it->index();
    if (it->kind() == GenKind::H) {
      const Scalar shifted = n + idx.to_scalar() + k.to_scalar();
      value *= is_integer(shifted) ? Scalar(-1) : Scalar(-params.gamma);
    } else {
      const Scalar i = idx.to_scalar();
      value *= -(params.alpha - params.beta * i - k.to_scalar() - i - n);
    }
    k += idx;
    if (value == 0) break;
  }
  return value;
}

Scalar rho_eval(const UEAElement& p, const Scalar& n, const Params& params) {
  Scalar total = 0;
  for (const auto& [m, k] : p.terms()) total += k * rho_eval_word(m.factors(), n, params);
  return total;
}

Scalar rho_eval(const UEAElement& p, HalfInt n, const Params& params) { return rho_eval(p, n.to_scalar(), params); }

CosetPolynomial rho_polynomials(const UEAElement& p, const Params& params) {
  CosetPolynomial out;
  for (int parity = 0; parity < 2; ++parity) {
    Polynomial total;
    for (const auto& [m, coeff] : p.terms()) {
      Polynomial value = Polynomial::constant(coeff);
      HalfInt k;
      const auto& f = m.factors();
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        require_negative(*it);
        const HalfInt idx = -it->index();
        if (it->kind() == GenKind::H) {
          const bool integral = (parity + idx.twice() + k.twice()) % 2 == 0;
          value *= integral ? Scalar(-1) : Scalar(-params.gamma);
        } else {
          const Scalar i = idx.to_scalar();
          // -(alpha - beta i - k - i - n) = n - (alpha - beta i - k - i)
          value = value * Polynomial::linear_root(params.alpha - params.beta * i - k.to_scalar() - i);
        }
        k += idx;
      }
      total += value;
    }
    (parity == 0 ? out.p_int : out.p_half) = std::move(total);
  }
  return out;
}

namespace {

int sign_at(const Polynomial& p, const Scalar& x) { return sgn(p.eval(x)); }

int sign_changes(const std::vector<Polynomial>& seq, const Scalar& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::set<std::int64_t> integer_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots of the zero polynomial");
  std::set<std::int64_t> roots;
  if (p.degree() == 0) return roots;

  // Squarefree part, so that Sturm counts distinct real roots.
  const Polynomial g = Polynomial::divmod(p, Polynomial::gcd(p, p.derivative())).first;
  std::vector<Polynomial> sturm = {g, g.derivative()};
  while (sturm.back().degree() > 0) {
    Polynomial r = Polynomial::divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.is_zero()) break;
    sturm.push_back(Scalar(-1) * r);
  }

  // Cauchy bound: every root satisfies |x| < 1 + max |a_i / a_n|.
  Scalar bound = 0;
  for (int i = 0; i < g.degree(); ++i) bound = std::max(bound, Scalar(abs(g.coefficient(i) / g.leading())));
  mpz_class b = (bound.get_num() / bound.get_den()) + 2;
  if (!b.fits_slong_p()) throw std::overflow_error("root bound exceeds the 64-bit index range");

  // Roots in (lo, hi] = V(lo) - V(hi). Bisect integer intervals down to width one.
  struct Interval {
    mpz_class lo, hi;
  };
  std::vector<Interval> stack = {{-b, b}};
  while (!stack.empty()) {
    const Interval iv = stack.back();
    stack.pop_back();
    const int count = sign_changes(sturm, Scalar(iv.lo)) - sign_changes(sturm, Scalar(iv.hi));
    if (count <= 0) continue;
    if (iv.hi - iv.lo == 1) {
      if (sign_at(g, Scalar(iv.hi)) == 0) roots.insert(iv.hi.get_si());
      continue;
    }
    mpz_class mid = iv.lo + (iv.hi - iv.lo) / 2;
    stack.push_back({iv.lo, mid});
    stack.push_back({mid, iv.hi});
  }
  return roots;
}

HalfIntSet half_integer_roots(const CosetPolynomial& cp) {
  std::set<HalfInt> pts;
  if (!cp.p_int.is_zero()) {
    for (std::int64_t m : integer_roots(cp.p_int)) pts.insert(HalfInt::integer(m));
  }
  if (!cp.p_half.is_zero()) {
    // n = m/2 with m odd: substitute and look for odd integer roots.
    std::vector<Scalar> sub;
    Scalar scale = 1;
    for (const auto& c : cp.p_half.coeffs()) {
      sub.push_back(c * scale);
      scale /= 2;
    }
    for (std::int64_t m : integer_roots(Polynomial(std::move(sub)))) {
      if (m % 2 != 0) pts.insert(HalfInt::from_twice(m));
    }
  }
  return HalfIntSet(cp.p_int.is_zero(), cp.p_half.is_zero(), std::move(pts));
}

HalfIntSet lambda_set(std::span<const UEAElement> qs, const Params& params) {
  HalfIntSet out = HalfIntSet::all();
  for (const auto& q : qs) {
    if (q.is_zero()) continue;
    out = out.intersect(half_integer_roots(rho_polynomials(q, params)));
  }
  return out;
}

}  // namespace mthv
