#include "mthv/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace mthv {

Generator Generator::h(HalfInt r) {
  if (!r.is_half_odd()) throw std::invalid_argument("h index must lie in 1/2 + Z, got " + r.to_string());
  return Generator(GenKind::H, r);
}

std::pair<int, std::int64_t> Generator::pbw_rank() const {
  const std::int64_t t = index_.twice();
  switch (kind_) {
    case GenKind::H:
      return {t < 0 ? 0 : 6, t};
    case GenKind::D:
      if (t < 0) return {1, t};
      if (t == 0) return {2, 0};
      return {5, t};
    case GenKind::C:
      return {3, 0};
    case GenKind::L:
      return {4, 0};
  }
  return {7, 0};
}

std::string Generator::to_string() const {
  switch (kind_) {
    case GenKind::D:
      return "d(" + index_.to_string() + ")";
    case GenKind::H:
      return "h(" + index_.to_string() + ")";
    case GenKind::C:
      return "C";
    case GenKind::L:
      return "L";
  }
  return "?";
}

void LieElement::add(const Generator& g, const Scalar& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const Generator& x) { return pbw_less(t.first, x); });
  if (it != terms_.end() && it->first == g) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{g, coeff});
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [g, k] : o.terms_) add(g, k);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [g, k] : o.terms_) add(g, -k);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, k] : terms_) {
    Scalar mag = abs(k);
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += g.to_string();
    first = false;
  }
  return out;
}

LieElement bracket(const Generator& a, const Generator& b) {
  LieElement out;
  if (a.is_central() || b.is_central()) return out;
  const HalfInt ia = a.index();
  const HalfInt ib = b.index();
  if (a.kind() == GenKind::D && b.kind() == GenKind::D) {
    const std::int64_t m = ia.as_integer();
    const std::int64_t n = ib.as_integer();
    out.add(Generator::d(m + n), Scalar(m - n));
    if (m + n == 0) {
      const Scalar mm(m);
      out.add(Generator::c(), Scalar(mm * mm * mm - mm) / 12);
    }
  } else if (a.kind() == GenKind::D && b.kind() == GenKind::H) {
    out.add(Generator::h(ia + ib), -ib.to_scalar());
  } else if (a.kind() == GenKind::H && b.kind() == GenKind::D) {
    out.add(Generator::h(ia + ib), ia.to_scalar());
  } else {
    if ((ia + ib).twice() == 0) out.add(Generator::l(), ia.to_scalar());
  }
  return out;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& [ga, ka] : a.terms()) {
    for (const auto& [gb, kb] : b.terms()) {
      LieElement t = bracket(ga, gb);
      t *= Scalar(ka * kb);
      out += t;
    }
  }
  return out;
}

}  // namespace mthv
