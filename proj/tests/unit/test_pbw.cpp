#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "mthv/pbw.hpp"
#include "oracles.hpp"

using namespace mthv;
using mthv::testing::naive_straighten;

namespace {

Generator h(int twice) { return Generator::h(HalfInt::from_twice(twice)); }
Generator d(int m) { return Generator::d(m); }

UEAElement word(std::initializer_list<Generator> gens) {
  const std::vector<Generator> w(gens);
  return straighten(w);
}

UEAElement mono(std::initializer_list<Generator> gens, const Scalar& k = 1) {
  return UEAElement(Monomial(std::vector<Generator>(gens)), k);
}

UEAElement random_element(std::mt19937& rng, int max_len, int window) {
  UEAElement x;
  std::uniform_int_distribution<int> len(0, max_len);
  for (int t = 0; t < 3; ++t) {
    std::vector<Generator> w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(mthv::testing::random_generator(rng, window));
    x += mthv::testing::random_scalar(rng) * straighten(w);
  }
  return x;
}

}  // namespace

TEST(Straighten, WorkedValues) {
  EXPECT_EQ(word({d(1), d(-1)}), mono({d(-1), d(1)}) + mono({d(0)}, 2));
  EXPECT_EQ(word({h(-1), h(-3)}), mono({h(-3), h(-1)}));
  EXPECT_EQ(word({d(-1), h(-1)}), mono({h(-1), d(-1)}) + mono({h(-3)}, Scalar(1, 2)));
  EXPECT_EQ(word({}), UEAElement(Scalar(1)));
}

TEST(Straighten, CanonicalWordsAreFixed) {
  const std::vector<std::vector<Generator>> words = {
      {h(-5), h(-1), h(-1), d(-3), d(-1), d(0), Generator::c(), Generator::l(), d(2), h(1), h(7)},
      {d(-2), d(-2), d(0), d(0)},
      {Generator::c(), Generator::c(), Generator::l()},
  };
  for (const auto& w : words) {
    const Monomial m(w);
    EXPECT_TRUE(m.is_canonical());
    EXPECT_EQ(straighten(w), UEAElement(m, 1));
    EXPECT_EQ(straighten(m.factors()), straighten(straighten(w).terms().begin()->first.factors()));
  }
}

TEST(Straighten, AgreesWithNaiveRewriting) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Generator> w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(mthv::testing::random_generator(rng, 3));
    ASSERT_EQ(straighten(w), naive_straighten(w)) << Monomial(w).to_string();
  }
}

TEST(Straighten, OutputIsCanonicalAndHomogeneous) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Generator> w;
    HalfInt deg;
    for (int i = 0; i < 4; ++i) {
      w.push_back(mthv::testing::random_generator(rng, 3));
      deg += w.back().degree();
    }
    const UEAElement x = straighten(w);
    for (const auto& [m, k] : x.terms()) {
      EXPECT_TRUE(m.is_canonical());
      EXPECT_NE(k, 0);
    }
    if (!x.is_zero()) EXPECT_EQ(x.homogeneous_degree(), deg);
  }
}

TEST(Multiply, UnitAndSimpleProducts) {
  const UEAElement x = mono({h(-1), d(-2)}, 3) + mono({d(1)});
  EXPECT_EQ(UEAElement(Scalar(1)) * x, x);
  EXPECT_EQ(x * UEAElement(Scalar(1)), x);
  EXPECT_EQ(UEAElement(d(1)) * UEAElement(d(-1)), mono({d(-1), d(1)}) + mono({d(0)}, 2));
  EXPECT_EQ(UEAElement(h(-1)) * UEAElement(h(-1)), mono({h(-1), h(-1)}));
}

TEST(Multiply, Associative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const UEAElement a = random_element(rng, 3, 3);
    const UEAElement b = random_element(rng, 3, 3);
    const UEAElement c = random_element(rng, 3, 3);
    ASSERT_EQ(multiply(a, multiply(b, c)), multiply(multiply(a, b), c));
  }
}

TEST(Multiply, NegativePartAssociative) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const UEAElement a = mthv::testing::random_negative_element(rng, 6);
    const UEAElement b = mthv::testing::random_negative_element(rng, 6);
    const UEAElement c = random_element(rng, 2, 3);
    ASSERT_EQ(multiply(a, multiply(b, c)), multiply(multiply(a, b), c));
  }
}

TEST(Multiply, CommutatorMatchesBracket) {
  std::vector<Generator> gens;
  for (int m = -3; m <= 3; ++m) gens.push_back(d(m));
  for (int t = -5; t <= 5; t += 2) gens.push_back(h(t));
  gens.push_back(Generator::c());
  gens.push_back(Generator::l());
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      EXPECT_EQ(commutator(UEAElement(a), UEAElement(b)), UEAElement::from_lie(bracket(a, b)));
    }
  }
}

TEST(Multiply, DistributesOverAddition) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const UEAElement a = random_element(rng, 3, 2);
    const UEAElement b = random_element(rng, 3, 2);
    const UEAElement c = random_element(rng, 3, 2);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(NegativeBasis, SmallLevels) {
  EXPECT_EQ(enumerate_negative_basis(HalfInt()), std::vector<Monomial>{Monomial()});
  EXPECT_EQ(enumerate_negative_basis(HalfInt::halves(1)), std::vector<Monomial>{Monomial({h(-1)})});
  const auto one = enumerate_negative_basis(HalfInt::integer(1));
  EXPECT_EQ(std::set<std::string>({one[0].to_string(), one[1].to_string()}),
            std::set<std::string>({"h(-1/2)^2", "d(-1)"}));
  std::set<std::string> two;
  for (const auto& m : enumerate_negative_basis(HalfInt::integer(2))) two.insert(m.to_string());
  EXPECT_EQ(two, std::set<std::string>({"h(-1/2)^4", "h(-3/2)*h(-1/2)", "h(-1/2)^2*d(-1)", "d(-1)^2", "d(-2)"}));
  EXPECT_THROW(enumerate_negative_basis(HalfInt::halves(-1)), std::invalid_argument);
}

TEST(NegativeBasis, CountsMatchGeneratingFunction) {
  const int max_twice = 24;
  const auto counts = mthv::testing::negative_basis_counts(max_twice);
  for (int t = 0; t <= max_twice; ++t) {
    const auto basis = enumerate_negative_basis(HalfInt::from_twice(t));
    ASSERT_EQ(static_cast<long long>(basis.size()), counts[t]) << "level " << t << "/2";
    std::set<Monomial> unique(basis.begin(), basis.end());
    EXPECT_EQ(unique.size(), basis.size());
    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
    for (const auto& m : basis) {
      EXPECT_TRUE(m.is_canonical());
      EXPECT_TRUE(m.is_negative());
      EXPECT_EQ(m.level(), HalfInt::from_twice(t));
    }
  }
}

TEST(UEAElement, DegreeQueries) {
  EXPECT_EQ(mono({h(-1), d(-2)}).homogeneous_degree(), HalfInt::halves(-5));
  EXPECT_THROW((mono({d(-1)}) + mono({d(-2)})).homogeneous_degree(), std::logic_error);
  EXPECT_EQ(UEAElement().homogeneous_degree(), HalfInt());
  Scalar v;
  EXPECT_TRUE(UEAElement(Scalar(3)).is_scalar(&v));
  EXPECT_EQ(v, 3);
  EXPECT_FALSE(mono({d(-1)}).is_scalar());
}

TEST(UEAElement, ToStringFormat) {
  const UEAElement x = mono({d(-1), d(-1)}) - mono({d(-2)}) + mono({h(-3), h(-1)}, Scalar(3, 2));
  EXPECT_EQ(x.to_string(), "3/2*h(-3/2)*h(-1/2) - d(-2) + d(-1)^2");
}
