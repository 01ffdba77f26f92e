#include "mthv/tensor_shift.hpp"

#include <algorithm>
#include <stdexcept>

#include "mthv/errors.hpp"

namespace mthv {

ShiftedVector::ShiftedVector(Params params) : params_(std::move(params)) {
  if (params_.gamma == 0) throw DomainError("the shifted module needs gamma != 0");
}

ShiftedVector::ShiftedVector(Params params, HalfInt power, UEAElement p) : ShiftedVector(std::move(params)) {
  add(power, p);
}

UEAElement ShiftedVector::component(HalfInt power) const {
  auto it = comps_.find(power);
  return it == comps_.end() ? UEAElement() : it->second;
}

HalfInt ShiftedVector::max_level() const {
  HalfInt best;
  for (const auto& [i, p] : comps_) best = std::max(best, p.max_level());
  return best;
}

void ShiftedVector::add(HalfInt power, const UEAElement& p) {
  if (p.is_zero()) return;
  if (!p.is_negative()) throw std::invalid_argument("shifted vector needs P in U(D^-): " + p.to_string());
  auto [it, inserted] = comps_.try_emplace(power, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

ShiftedVector& ShiftedVector::operator+=(const ShiftedVector& o) {
  for (const auto& [i, p] : o.comps_) add(i, p);
  return *this;
}
ShiftedVector& ShiftedVector::operator-=(const ShiftedVector& o) {
  for (const auto& [i, p] : o.comps_) add(i, -p);
  return *this;
}
ShiftedVector& ShiftedVector::operator*=(const Scalar& s) {
  if (s == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [i, p] : comps_) p *= s;
  return *this;
}

std::string ShiftedVector::to_string() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& [i, p] : comps_) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*y^(" + i.to_string() + ")";
  }
  return out;
}

ShiftedVector shifted_apply(const Generator& g, const ShiftedVector& v) {
  const Params& prm = v.params();
  ShiftedVector out(prm);
  for (const auto& [i, p] : v.components()) {
    if (g.kind() == GenKind::C) {
      out.add(i, prm.c * p);
      continue;
    }
    if (g.kind() == GenKind::L) {
      out.add(i, prm.l * p);
      continue;
    }
    const HalfInt target = i + g.index();
    out.add(target, reduce_on_highest(left_multiply(g, p), prm));
    for (const auto& [m, k] : p.terms()) {
      const HalfInt level = m.level();
      Scalar s;
      if (g.kind() == GenKind::D) {
        s = prm.alpha + prm.beta * g.index().to_scalar() - level.to_scalar() - i.to_scalar();
      } else {
        s = (i + level).is_integral() ? Scalar(1) : prm.gamma;
      }
      s *= k;
      if (s != 0) out.add(target, UEAElement(m, s));
    }
  }
  return out;
}

ShiftedVector shifted_apply(const UEAElement& x, const ShiftedVector& v) {
  ShiftedVector out(v.params());
  for (const auto& [m, k] : x.terms()) {
    ShiftedVector cur = v;
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend() && !cur.is_zero(); ++it) cur = shifted_apply(*it, cur);
    out += k * cur;
  }
  return out;
}

// ---------------------------------------------------------------------------

TruncatedWSpan::TruncatedWSpan(const Params& params, HalfInt k, HalfInt power, HalfInt level_cap,
                               HalfInt shift_cap)
    : params_(params), k_(k), power_(power), level_cap_(level_cap), shift_cap_(shift_cap) {
  if (level_cap < HalfInt() || shift_cap < HalfInt()) throw std::invalid_argument("caps must be nonnegative");
  // u(1 (x) y^{k+i}) sits at y^{k+i-j}; hitting y^power needs i = power - k + j.
  effective_ = std::min(level_cap, shift_cap + k - power);
  for (HalfInt j; j <= level_cap_; j += HalfInt::halves(1)) {
    for (const auto& m : enumerate_negative_basis(j)) index_.emplace(m, index_.size());
  }
  if (effective_ < HalfInt()) return;
  const HalfInt first = std::max(HalfInt(), k - power);
  for (HalfInt j = first; j <= effective_; j += HalfInt::halves(1)) {
    const HalfInt i = power - k + j;
    const ShiftedVector seed(params_, k + i, UEAElement(Scalar(1)));
    for (const auto& u : enumerate_negative_basis(j)) {
      const ShiftedVector w = shifted_apply(UEAElement(u, 1), seed);
      spanning_.push_back(coordinates(w.component(power)));
    }
  }
}

RationalVector TruncatedWSpan::coordinates(const UEAElement& p) const {
  RationalVector v(index_.size());
  for (const auto& [m, k] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("monomial outside the truncated ambient space: " + m.to_string());
    v[it->second] = k;
  }
  return v;
}

std::size_t TruncatedWSpan::rank() const {
  if (spanning_.empty()) return 0;
  return mthv::rank(RationalMatrix::from_rows(spanning_, index_.size()));
}

MembershipResult TruncatedWSpan::contains(const UEAElement& p) const {
  if (p.max_level() > effective_) {
    throw InconclusiveError("caps (level " + level_cap_.to_string() + ", shift " + shift_cap_.to_string() +
                            ") do not cover a vector of level " + p.max_level().to_string());
  }
  MembershipResult r;
  r.level_cap = level_cap_;
  r.shift_cap = shift_cap_;
  r.certificate = member(coordinates(p), spanning_);
  r.member = r.certificate.has_value();
  return r;
}

MembershipResult w_membership_detailed(const ShiftedVector& v, HalfInt k, std::optional<HalfInt> level_cap,
                                       std::optional<HalfInt> shift_cap) {
  if (v.components().size() > 1) throw std::invalid_argument("w_membership needs a weight vector (one y-power)");
  const HalfInt level = v.max_level();
  // Vectors sitting above y^k need the generator shift power - k on top.
  const HalfInt power = v.is_zero() ? k : v.components().begin()->first;
  const HalfInt sc = shift_cap.value_or(level + level + HalfInt::integer(1) + std::max(HalfInt(), power - k));
  const HalfInt lc = level_cap.value_or(level + sc);
  if (v.is_zero()) return MembershipResult{true, RationalVector{}, lc, sc};
  const UEAElement& p = v.components().begin()->second;
  const TruncatedWSpan span(v.params(), k, power, lc, sc);
  return span.contains(p);
}

bool w_membership(const ShiftedVector& v, HalfInt k, std::optional<HalfInt> level_cap,
                  std::optional<HalfInt> shift_cap) {
  return w_membership_detailed(v, k, level_cap, shift_cap).member;
}

bool verify_codimension_one(const Params& params, HalfInt k, HalfInt level_cap) {
  if (level_cap < HalfInt::halves(1)) throw InconclusiveError("level cap too small to generate any spanning vector");
  const HalfInt power = k - HalfInt::halves(1);
  const TruncatedWSpan span(params, k, power, level_cap, level_cap);
  if (span.rank() + 1 != span.ambient_dim()) return false;
  return !span.contains(UEAElement(Scalar(1))).member;
}

}  // namespace mthv
