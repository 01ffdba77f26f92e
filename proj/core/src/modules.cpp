#include "mthv/modules.hpp"

#include <optional>
#include <stdexcept>

#include "mthv/errors.hpp"

namespace mthv {

UEAElement reduce_on_highest(const UEAElement& x, const Params& params) {
  UEAElement out;
  for (const auto& [m, k] : x.terms()) {
    const auto& f = m.factors();
    // Canonical order: negative part first, then d_0, c, l, then positive part.
    std::size_t split = 0;
    while (split < f.size() && f[split].is_negative()) ++split;
    Scalar coeff = k;
    bool killed = false;
    for (std::size_t i = split; i < f.size(); ++i) {
      const Generator& g = f[i];
      if (g.is_positive()) {
        killed = true;
        break;
      }
      switch (g.kind()) {
        case GenKind::D: coeff *= params.h; break;
        case GenKind::C: coeff *= params.c; break;
        case GenKind::L: coeff *= params.l; break;
        case GenKind::H: throw std::logic_error("h_0 does not exist");
      }
    }
    if (killed || coeff == 0) continue;
    out.add(Monomial(std::vector<Generator>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(split))), coeff);
  }
  return out;
}

VermaVector::VermaVector(Params params, UEAElement p) : params_(std::move(params)), p_(std::move(p)) {
  if (!p_.is_negative()) throw std::invalid_argument("Verma vector needs an element of U(D^-): " + p_.to_string());
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
  p_ += o.p_;
  return *this;
}
VermaVector& VermaVector::operator-=(const VermaVector& o) {
  p_ -= o.p_;
  return *this;
}
VermaVector& VermaVector::operator*=(const Scalar& s) {
  p_ *= s;
  return *this;
}

VermaVector verma_apply(const Generator& g, const VermaVector& v) {
  return VermaVector(v.params(), reduce_on_highest(left_multiply(g, v.element()), v.params()));
}

VermaVector verma_apply(const UEAElement& x, const VermaVector& v) {
  VermaVector out(v.params());
  for (const auto& [m, k] : x.terms()) {
    VermaVector cur = v;
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend() && !cur.is_zero(); ++it) cur = verma_apply(*it, cur);
    out += k * cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intermediate series

IntermediateVector::IntermediateVector(IntermediateKind kind, Scalar alpha, Scalar beta, Scalar gamma)
    : kind_(kind), alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  if (kind_ == IntermediateKind::Full && gamma_ == 0) throw DomainError("A(alpha,beta,gamma) needs gamma != 0");
}

IntermediateVector IntermediateVector::basis(IntermediateKind kind, const Scalar& alpha, const Scalar& beta,
                                             const Scalar& gamma, HalfInt k) {
  IntermediateVector v(kind, alpha, beta, gamma);
  v.add(k, 1);
  return v;
}

Scalar IntermediateVector::coefficient(HalfInt k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

bool IntermediateVector::is_quotient() const {
  return kind_ == IntermediateKind::Prime && is_integer(alpha_) && beta_ == 0;
}

bool IntermediateVector::is_submodule() const {
  return kind_ == IntermediateKind::Prime && is_integer(alpha_) && beta_ == -1;
}

std::optional<HalfInt> IntermediateVector::excluded_index() const {
  if (is_quotient() || is_submodule()) return HalfInt::integer(alpha_.get_num().get_si());
  return std::nullopt;
}

bool IntermediateVector::in_support(HalfInt k) const {
  if (kind_ == IntermediateKind::Full) return true;
  if (!k.is_integral()) return false;
  const auto ex = excluded_index();
  return !ex || *ex != k;
}

void IntermediateVector::add(HalfInt k, const Scalar& coeff) {
  if (coeff == 0) return;
  if (!in_support(k)) throw std::invalid_argument("v_" + k.to_string() + " is not a basis vector of this module");
  auto [it, inserted] = coeffs_.try_emplace(k, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

IntermediateVector& IntermediateVector::operator+=(const IntermediateVector& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}
IntermediateVector& IntermediateVector::operator-=(const IntermediateVector& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}
IntermediateVector& IntermediateVector::operator*=(const Scalar& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, c] : coeffs_) c *= s;
  return *this;
}

std::string IntermediateVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.get_str() + ")*v(" + k.to_string() + ")";
  }
  return out;
}

IntermediateVector intermediate_apply(const Generator& g, const IntermediateVector& v) {
  IntermediateVector out(v.kind(), v.alpha(), v.beta(), v.gamma());
  if (g.is_central()) return out;
  const auto excluded = v.excluded_index();
  for (const auto& [k, c] : v.coefficients()) {
    Scalar coeff;
    if (g.kind() == GenKind::D) {
      coeff = v.alpha() + v.beta() * g.index().to_scalar() - k.to_scalar();
    } else {
      if (v.kind() != IntermediateKind::Full) continue;
      coeff = k.is_integral() ? Scalar(1) : v.gamma();
    }
    coeff *= c;
    const HalfInt target = k + g.index();
    if (excluded && target == *excluded) {
      // The quotient identifies v_alpha with 0; the submodule must never reach it.
      if (v.is_submodule() && coeff != 0) {
        throw std::logic_error("A'(alpha,-1) action produced the excluded vector v_" + target.to_string());
      }
      continue;
    }
    out.add(target, coeff);
  }
  return out;
}

IntermediateVector intermediate_apply(const UEAElement& x, const IntermediateVector& v) {
  IntermediateVector out(v.kind(), v.alpha(), v.beta(), v.gamma());
  for (const auto& [m, k] : x.terms()) {
    IntermediateVector cur = v;
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend() && !cur.is_zero(); ++it) cur = intermediate_apply(*it, cur);
    cur *= k;
    out += cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sugawara coset

VermaVector sugawara_coset_apply(std::int64_t m, const VermaVector& v) {
  const Scalar& l = v.params().l;
  if (l == 0) throw DomainError("the coset Virasoro operators need l != 0");
  VermaVector out = verma_apply(Generator::d(m), v);
  if (v.is_zero()) return out;

  // Terms with |k| beyond this bound contain a right factor killing v.
  const std::int64_t bound_twice = 2 * (v.max_level().twice() / 2 + 1) + 2 * std::abs(m) + 2;
  VermaVector sum(v.params());
  for (std::int64_t kt = -bound_twice - 1; kt <= bound_twice + 1; kt += 2) {
    const HalfInt k = HalfInt::from_twice(kt);
    HalfInt left = HalfInt::integer(m) - k;
    HalfInt right = k;
    if (m == 0) {
      left = -abs(k);
      right = abs(k);
    }
    const VermaVector inner = verma_apply(Generator::h(right), v);
    if (inner.is_zero()) continue;
    sum += verma_apply(Generator::h(left), inner);
  }
  out -= (1 / (2 * l)) * sum;
  if (m == 0) out -= Scalar(1, 16) * v;
  return out;
}

UEAElement coset_lift(const UEAElement& p, const Params& params) {
  if (params.l == 0) throw DomainError("coset_lift needs l != 0");
  VermaVector total(params);
  for (const auto& [m, k] : p.terms()) {
    VermaVector cur = VermaVector::highest(params);
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      if (it->kind() != GenKind::D || !it->is_negative()) {
        throw std::invalid_argument("coset_lift expects a polynomial in d_{-q}, q >= 1; got " + it->to_string());
      }
      cur = sugawara_coset_apply(it->index().as_integer(), cur);
    }
    total += k * cur;
  }
  return total.element();
}

}  // namespace mthv
