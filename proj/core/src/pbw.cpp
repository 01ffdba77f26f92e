#include "mthv/pbw.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace mthv {

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_canonical() const {
  return std::is_sorted(factors_.begin(), factors_.end(), pbw_less);
}

bool Monomial::is_negative() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Generator& g) { return g.is_negative(); });
}

HalfInt Monomial::degree() const {
  HalfInt d;
  for (const auto& g : factors_) d += g.degree();
  return d;
}

std::size_t Monomial::d_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const Generator& g) { return g.kind() == GenKind::D; }));
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "*";
    out += factors_[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                                      pbw_less);
}

// ---------------------------------------------------------------------------
// UEAElement

UEAElement::UEAElement(const Scalar& s) {
  if (s != 0) terms_.emplace(Monomial(), s);
}

UEAElement::UEAElement(const Generator& g) { terms_.emplace(Monomial({g}), Scalar(1)); }

UEAElement::UEAElement(const Monomial& m, const Scalar& coeff) { add(m, coeff); }

UEAElement UEAElement::from_lie(const LieElement& x) {
  UEAElement out;
  for (const auto& [g, k] : x.terms()) out.add(Monomial({g}), k);
  return out;
}

Scalar UEAElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void UEAElement::add(const Monomial& m, const Scalar& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool UEAElement::is_negative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_negative(); });
}

bool UEAElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const HalfInt d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == d; });
}

HalfInt UEAElement::homogeneous_degree() const {
  if (!is_homogeneous()) throw std::logic_error("element has mixed degrees: " + to_string());
  return terms_.empty() ? HalfInt() : terms_.begin()->first.degree();
}

HalfInt UEAElement::max_level() const {
  HalfInt best;
  for (const auto& [m, k] : terms_) best = std::max(best, m.level());
  return best;
}

bool UEAElement::is_scalar(Scalar* value) const {
  if (terms_.empty()) {
    if (value) *value = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_.begin()->first.empty()) {
    if (value) *value = terms_.begin()->second;
    return true;
  }
  return false;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, k] : o.terms_) add(m, k);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  for (const auto& [m, k] : o.terms_) add(m, -k);
  return *this;
}

UEAElement& UEAElement::operator*=(const Scalar& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return multiply(a, b); }

std::string UEAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : terms_) {
    const Scalar mag = abs(k);
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (m.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Straightening

namespace {

struct MemoKey {
  Generator g;
  Monomial m;
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    return std::hash<Generator>{}(k.g) * 31 + std::hash<Monomial>{}(k.m);
  }
};

using Memo = std::unordered_map<MemoKey, UEAElement, MemoKeyHash>;

Memo& memo() {
  thread_local Memo table;
  return table;
}

UEAElement left_multiply_monomial(const Generator& g, const Monomial& m) {
  const auto& f = m.factors();
  if (f.empty() || !pbw_less(f.front(), g)) {
    std::vector<Generator> word;
    word.reserve(f.size() + 1);
    word.push_back(g);
    word.insert(word.end(), f.begin(), f.end());
    return UEAElement(Monomial(std::move(word)), Scalar(1));
  }
  MemoKey key{g, m};
  if (auto it = memo().find(key); it != memo().end()) return it->second;

  // g * first * rest = first * (g * rest) + [g, first] * rest
  const Generator& first = f.front();
  const Monomial rest(std::vector<Generator>(f.begin() + 1, f.end()));
  UEAElement result = left_multiply(first, left_multiply_monomial(g, rest));
  const LieElement br = bracket(g, first);
  for (const auto& [x, k] : br.terms()) {
    UEAElement t = left_multiply_monomial(x, rest);
    t *= k;
    result += t;
  }
  memo().emplace(std::move(key), result);
  return result;
}

}  // namespace

UEAElement left_multiply(const Generator& g, const UEAElement& x) {
  UEAElement out;
  for (const auto& [m, k] : x.terms()) {
    UEAElement t = left_multiply_monomial(g, m);
    t *= k;
    out += t;
  }
  return out;
}

UEAElement straighten(std::span<const Generator> word) {
  UEAElement acc(Scalar(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc);
  return acc;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
  UEAElement out;
  for (const auto& [m, k] : a.terms()) {
    UEAElement acc = b;
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = left_multiply(*it, acc);
    acc *= k;
    out += acc;
  }
  return out;
}

UEAElement commutator(const UEAElement& a, const UEAElement& b) { return multiply(a, b) - multiply(b, a); }

void clear_straighten_cache() { memo().clear(); }

std::size_t straighten_cache_size() { return memo().size(); }

// ---------------------------------------------------------------------------
// Graded basis of U(D^-)

namespace {

// Partitions of `total` into parts from `allowed` (descending), each emitted
// with parts in nonincreasing order.
void partitions(std::int64_t total, std::int64_t max_part, std::int64_t step_parity,
                std::vector<std::int64_t>& current, std::vector<std::vector<std::int64_t>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t p = std::min(max_part, total); p >= 1; --p) {
    if (step_parity >= 0 && p % 2 != step_parity) continue;
    current.push_back(p);
    partitions(total - p, p, step_parity, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> enumerate_negative_basis(HalfInt level) {
  if (level.twice() < 0) throw std::invalid_argument("level must be nonnegative");
  const std::int64_t total = level.twice();  // measured in halves
  std::vector<Monomial> out;
  for (std::int64_t d_twice = 0; d_twice <= total; d_twice += 2) {
    const std::int64_t h_twice = total - d_twice;
    std::vector<std::vector<std::int64_t>> hparts, dparts;
    std::vector<std::int64_t> scratch;
    partitions(h_twice, h_twice, 1, scratch, hparts);  // odd number of halves
    partitions(d_twice / 2, d_twice / 2, -1, scratch, dparts);
    for (const auto& hp : hparts) {
      for (const auto& dp : dparts) {
        std::vector<Generator> word;
        for (std::int64_t r2 : hp) word.push_back(Generator::h(HalfInt::from_twice(-r2)));
        for (std::int64_t q : dp) word.push_back(Generator::d(-q));
        out.emplace_back(std::move(word));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mthv
