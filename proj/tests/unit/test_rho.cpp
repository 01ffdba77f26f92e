#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mthv/errors.hpp"
#include "mthv/rho.hpp"
#include "oracles.hpp"

using namespace mthv;

namespace {

Generator h(int twice) { return Generator::h(HalfInt::from_twice(twice)); }
Generator d(int m) { return Generator::d(m); }
HalfInt hi(int twice) { return HalfInt::from_twice(twice); }

UEAElement mono(std::initializer_list<Generator> gens, const Scalar& k = 1) {
  return UEAElement(Monomial(std::vector<Generator>(gens)), k);
}

Params sample_params(std::mt19937& rng) {
  Params p;
  p.c = mthv::testing::random_scalar(rng);
  p.h = mthv::testing::random_scalar(rng);
  p.l = mthv::testing::random_scalar(rng);
  if (p.l == 0) p.l = 1;
  p.alpha = mthv::testing::random_scalar(rng);
  p.beta = mthv::testing::random_scalar(rng);
  p.gamma = mthv::testing::random_scalar(rng);
  if (p.gamma == 0) p.gamma = 3;
  return p;
}

Polynomial poly(std::initializer_list<Scalar> c) { return Polynomial(std::vector<Scalar>(c)); }

}  // namespace

TEST(Rho, ClosedFormsAtSampledPoints) {
  // The five values worked out by hand for the generator Q of M(2, 5/16, l).
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const Params p = sample_params(rng);
    const Scalar a = p.alpha, b = p.beta, g = p.gamma;
    for (int nt = -6; nt <= 6; ++nt) {
      const Scalar n = hi(nt).to_scalar();
      EXPECT_EQ(rho_eval(mono({d(-1), d(-1)}), n, p), (a - b - 2 - n) * (a - b - 1 - n));
      EXPECT_EQ(rho_eval(mono({d(-2)}), n, p), -(a - 2 * b - 2 - n));
      EXPECT_EQ(rho_eval(mono({h(-1), h(-1), h(-1), h(-1)}), n, p), g * g);
      EXPECT_EQ(rho_eval(mono({h(-3), h(-1)}), n, p), g);
      // d_{-1} h_{-1/2}^2 read as a word in the tensor algebra.
      const std::vector<Generator> w = {d(-1), h(-1), h(-1)};
      EXPECT_EQ(rho_eval_word(w, n, p), -g * (a - b - 2 - n));
      EXPECT_EQ(rho_eval(straighten(w), n, p), -g * (a - b - 2 - n));
    }
  }
}

TEST(Rho, UnitAndErrors) {
  Params p;
  EXPECT_EQ(rho_eval(UEAElement(Scalar(1)), hi(3), p), 1);
  EXPECT_EQ(rho_eval(UEAElement(), hi(3), p), 0);
  EXPECT_THROW(rho_eval(mono({d(1)}), hi(0), p), DomainError);
  EXPECT_THROW(rho_eval(mono({d(-1), d(0)}), hi(0), p), DomainError);
}

TEST(Rho, WellDefinedOnPbwClasses) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> len(1, 4), which(0, 1), idx(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const Params p = sample_params(rng);
    std::vector<Generator> w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(which(rng) ? d(-idx(rng)) : h(1 - 2 * idx(rng)));
    const Scalar x = mthv::testing::random_scalar(rng, 9);
    ASSERT_EQ(rho_eval_word(w, x, p), rho_eval(straighten(w), x, p)) << Monomial(w).to_string();
    const Scalar half = hi(static_cast<int>(rng() % 13) - 6).to_scalar();
    ASSERT_EQ(rho_eval_word(w, half, p), rho_eval(straighten(w), half, p));
  }
}

TEST(RhoPolynomials, Examples) {
  Params p;
  p.alpha = Scalar(2, 3);
  p.beta = Scalar(-1, 5);
  p.gamma = Scalar(7, 2);
  p.l = Scalar(-3, 4);
  const UEAElement q1 = mono({d(-1)}) - (1 / (2 * p.l)) * mono({h(-1), h(-1)});
  const CosetPolynomial cp = rho_polynomials(q1, p);
  const Polynomial expect = poly({p.beta - p.alpha + 1 - p.gamma / (2 * p.l), 1});
  EXPECT_EQ(cp.p_int, expect);
  EXPECT_EQ(cp.p_half, expect);
  const CosetPolynomial hh = rho_polynomials(mono({h(-1)}), p);
  EXPECT_EQ(hh.p_int, Polynomial::constant(-p.gamma));
  EXPECT_EQ(hh.p_half, Polynomial::constant(-1));
  const CosetPolynomial one = rho_polynomials(UEAElement(Scalar(1)), p);
  EXPECT_EQ(one.p_int, Polynomial::constant(1));
  EXPECT_EQ(one.p_half, Polynomial::constant(1));
}

TEST(RhoPolynomials, AgreeWithPointwiseEvaluation) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Params p = sample_params(rng);
    const UEAElement q = mthv::testing::random_negative_element(rng, 8, 4);
    const CosetPolynomial cp = rho_polynomials(q, p);
    std::size_t max_d = 0;
    for (const auto& [m, k] : q.terms()) max_d = std::max(max_d, m.d_count());
    EXPECT_LE(cp.p_int.degree(), static_cast<int>(max_d));
    EXPECT_LE(cp.p_half.degree(), static_cast<int>(max_d));
    for (int nt = -4; nt <= 4; ++nt) {
      const Scalar n = hi(nt).to_scalar();
      ASSERT_EQ((nt % 2 == 0 ? cp.p_int : cp.p_half).eval(n), rho_eval(q, hi(nt), p));
    }
  }
}

TEST(Rho, PrefixFactorization) {
  // rho_n(uQ) / rho_n(Q) depends only on u and the degree of Q.
  std::mt19937 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const Params p = sample_params(rng);
    const HalfInt level = hi(1 + static_cast<int>(rng() % 5));
    const auto basis = enumerate_negative_basis(level);
    const auto prefixes = enumerate_negative_basis(hi(1 + static_cast<int>(rng() % 4)));
    const Scalar n = hi(static_cast<int>(rng() % 9) - 4).to_scalar();
    for (const auto& u : prefixes) {
      std::optional<Scalar> factor;
      for (const auto& m : basis) {
        const UEAElement q(m, 1);
        const Scalar base = rho_eval(q, n, p);
        const Scalar prod = rho_eval(multiply(UEAElement(u, 1), q), n, p);
        if (base == 0) {
          EXPECT_EQ(prod, 0);
          continue;
        }
        const Scalar f = prod / base;
        if (factor) {
          EXPECT_EQ(*factor, f) << u.to_string() << " " << m.to_string();
        } else {
          factor = f;
        }
      }
    }
  }
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a = poly({1, 2, 3});
  const Polynomial b = poly({-1, 1});
  EXPECT_EQ(a * b, poly({-1, -1, -1, 3}));
  const auto [q, r] = Polynomial::divmod(a * b + poly({5}), b);
  EXPECT_EQ(q, a);
  EXPECT_EQ(r, poly({5}));
  EXPECT_EQ(Polynomial::gcd(a * b, b * b), poly({-1, 1}));
  EXPECT_EQ(a.derivative(), poly({2, 6}));
  EXPECT_EQ(a.eval(2), 17);
  EXPECT_EQ(poly({0, 0}).degree(), -1);
  EXPECT_EQ(poly({Scalar(-1, 2), 0, 1}).to_string(), "n^2 - 1/2");
}

TEST(Roots, Examples) {
  EXPECT_EQ(half_integer_roots({poly({-2, 1}), poly({1})}), HalfIntSet::finite({hi(4)}));
  EXPECT_EQ(half_integer_roots({poly({1, 0, 1}), poly({1, 0, 1})}), HalfIntSet::empty());
  EXPECT_TRUE(half_integer_roots({Polynomial(), Polynomial()}).is_all());
  const HalfIntSet mixed = half_integer_roots({Polynomial(), poly({Scalar(-1, 2), 1})});
  EXPECT_TRUE(mixed.all_integers());
  EXPECT_TRUE(mixed.contains(hi(1)));
  EXPECT_FALSE(mixed.contains(hi(3)));
  // A half-odd root of the integral branch does not count, and vice versa.
  EXPECT_TRUE(half_integer_roots({poly({Scalar(-1, 2), 1}), poly({-1, 1})}).is_empty());
}

TEST(Roots, QuadraticFromTheTwoSingularVectorCase) {
  // rho_n(Q) for the generator of M(2, 5/16, l), alpha = beta = 1/4, gamma = 2, l = 1.
  Params p;
  p.alpha = Scalar(1, 4);
  p.beta = Scalar(1, 4);
  p.gamma = 2;
  p.l = 1;
  const Scalar l = p.l;
  const UEAElement q = mono({d(-1), d(-1)}) - mono({d(-2)}) - (1 / l) * (mono({d(-1)}) * mono({h(-1), h(-1)})) +
                       (1 / (4 * l * l)) * mono({h(-1), h(-1), h(-1), h(-1)}) + (3 / (2 * l)) * mono({h(-3), h(-1)});
  EXPECT_EQ(half_integer_roots(rho_polynomials(q, p)), HalfIntSet::finite({hi(-1), hi(1)}));
}

TEST(Roots, AgreeWithBruteForceScan) {
  // Polynomials with planted roots; all roots lie within the scanned window.
  std::mt19937 rng(45);
  std::uniform_int_distribution<int> root(-20, 20), den(1, 3), deg(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial pi = Polynomial::constant(mthv::testing::random_scalar(rng) + 10);
    Polynomial ph = Polynomial::constant(mthv::testing::random_scalar(rng) + 10);
    const int di = deg(rng), dh = deg(rng);
    for (int i = 0; i < di; ++i) pi = pi * Polynomial::linear_root(frac(root(rng), den(rng)));
    for (int i = 0; i < dh; ++i) ph = ph * Polynomial::linear_root(frac(root(rng), den(rng)));
    const HalfIntSet got = half_integer_roots({pi, ph});
    std::set<HalfInt> expect;
    for (int t = -80; t <= 80; ++t) {
      const Polynomial& branch = t % 2 == 0 ? pi : ph;
      if (branch.eval(hi(t).to_scalar()) == 0) expect.insert(hi(t));
    }
    ASSERT_EQ(got, HalfIntSet::finite(expect)) << pi.to_string() << " | " << ph.to_string();
  }
}

TEST(Roots, LargeCoefficients) {
  // Root far outside any small scan window, with a huge constant term.
  const Scalar big = Scalar(mpz_class("1000000007")) * 2;
  const Polynomial p = Polynomial::linear_root(big) * poly({1, 0, 1});
  EXPECT_EQ(integer_roots(p), std::set<std::int64_t>({2000000014}));
}

TEST(Lambda, SingularVectorPairWithCentralChargeZero) {
  // Q1 = d_{-1} - h_{-1/2}^2/2l, Q2 = d_{-2} - h_{-3/2}h_{-1/2}/l.
  Params p;
  p.c = 1;
  p.h = Scalar(1, 16);
  p.l = 1;
  p.alpha = Scalar(1, 2);
  p.beta = 0;
  p.gamma = 2;
  const Scalar l = p.l;
  const std::vector<UEAElement> qs = {mono({d(-1)}) - (1 / (2 * l)) * mono({h(-1), h(-1)}),
                                      mono({d(-2)}) - (1 / l) * mono({h(-3), h(-1)})};
  EXPECT_EQ(lambda_set(qs, p), HalfIntSet::finite({hi(1)}));
  p.gamma = 3;
  EXPECT_TRUE(lambda_set(qs, p).is_empty());
  const std::vector<UEAElement> zeros = {UEAElement(), UEAElement()};
  EXPECT_TRUE(lambda_set(zeros, p).is_all());
  EXPECT_TRUE(lambda_set({}, p).is_all());
}

TEST(Lambda, ClosedFormsOfTheSingularVectorPair) {
  std::mt19937 rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const Params p = sample_params(rng);
    const Scalar l = p.l, a = p.alpha, b = p.beta, g = p.gamma;
    const UEAElement q1 = mono({d(-1)}) - (1 / (2 * l)) * mono({h(-1), h(-1)});
    const UEAElement q2 = mono({d(-2)}) - (1 / l) * mono({h(-3), h(-1)});
    for (int nt = -4; nt <= 4; ++nt) {
      const Scalar n = hi(nt).to_scalar();
      EXPECT_EQ(rho_eval(q1, n, p), b - a + 1 + n - g / (2 * l));
      EXPECT_EQ(rho_eval(q2, n, p), 2 * b - a + 2 + n - g / l);
    }
  }
}

TEST(Lambda, InvariantUnderSubmoduleChange) {
  // Replacing Q2 by Q2 + uQ1 does not change the common zero set.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    Params p = sample_params(rng);
    p.alpha = Scalar(static_cast<int>(rng() % 7) - 3, 2);
    p.beta = 0;
    p.l = 1;
    p.gamma = 2;
    const UEAElement q1 = mono({d(-1)}) - Scalar(1, 2) * mono({h(-1), h(-1)});
    const UEAElement q2 = mono({d(-2)}) - mono({h(-3), h(-1)});
    const UEAElement u = mthv::testing::random_negative_element(rng, 2, 1);
    if (!u.is_homogeneous() || u.homogeneous_degree() != HalfInt::integer(-1)) continue;
    const std::vector<UEAElement> a = {q1, q2};
    const std::vector<UEAElement> b = {q1, q2 + multiply(u, q1)};
    EXPECT_EQ(lambda_set(a, p), lambda_set(b, p));
  }
}

TEST(HalfIntSet, Operations) {
  const HalfIntSet a(true, false, {hi(1), hi(2)});
  EXPECT_EQ(a.points(), std::set<HalfInt>({hi(1)}));
  EXPECT_EQ(a.to_string(), "Z u {1/2}");
  EXPECT_EQ(a.intersect(HalfIntSet::finite({hi(1), hi(3), hi(4)})), HalfIntSet::finite({hi(1), hi(4)}));
  EXPECT_EQ(HalfIntSet::all().to_string(), "all");
  EXPECT_EQ(HalfIntSet::empty().to_string(), "{}");
  EXPECT_EQ(HalfIntSet::finite({hi(-1), hi(1)}).to_string(), "{-1/2, 1/2}");
}
