#include <gtest/gtest.h>

#include "monoquartic/trinomial.hpp"
#include "oracles.hpp"

using namespace monoquartic;

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant({-4, 2}), 2048);
  EXPECT_EQ(discriminant({-5, 5}), 2000);
  EXPECT_EQ(discriminant({0, 1}), 256);
  EXPECT_EQ(discriminant({4, 2}), 2048);
  EXPECT_EQ(discriminant({7, 0}), 0);
}

TEST(Discriminant, AgreesWithResultantOracle) {
  for (int b = -30; b <= 30; ++b)
    for (int d = -30; d <= 30; ++d)
      ASSERT_EQ(discriminant({b, d}), oracle::discriminant_by_resultant({d, 0, b, 0, 1}))
          << "b=" << b << " d=" << d;
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible({-4, 2}));
  EXPECT_FALSE(is_irreducible({-5, 4}));
  EXPECT_FALSE(is_irreducible({2, 1}));
  EXPECT_FALSE(is_irreducible({3, 0}));
  EXPECT_TRUE(is_irreducible({0, 1}));   // x^4 + 1
  EXPECT_FALSE(is_irreducible({0, 4}));  // (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(is_irreducible({-6, 1})); // (x^2+2x-1)(x^2-2x-1)
}

TEST(Irreducible, AgreesWithBruteForceFactorization) {
  for (int b = -30; b <= 30; ++b)
    for (int d = -30; d <= 30; ++d)
      ASSERT_EQ(is_irreducible({b, d}), !oracle::is_reducible_brute(b, d))
          << "b=" << b << " d=" << d;
}

TEST(C4, Examples) {
  EXPECT_TRUE(is_c4({-4, 2}));
  EXPECT_TRUE(is_c4({4, 2}));
  EXPECT_TRUE(is_c4({-5, 5}));
  EXPECT_TRUE(is_c4({5, 5}));
  EXPECT_FALSE(is_c4({0, 1}));
  EXPECT_FALSE(is_c4({0, 2}));  // x^4 + 2 is D4
}

TEST(C4, ImpliesIrreducibleAndPositiveBounds) {
  for (int b = -30; b <= 30; ++b)
    for (int d = -30; d <= 30; ++d) {
      const Trinomial t{b, d};
      if (!is_c4(t)) continue;
      ASSERT_TRUE(is_irreducible(t)) << b << "," << d;
      ASSERT_GE(t.d, 2);
      ASSERT_GE(inner_discriminant(t), 2);
    }
}

TEST(Galois, ThreeWayLabel) {
  EXPECT_EQ(classify_galois({2, 1}), GaloisLabel::Reducible);
  EXPECT_EQ(classify_galois({0, 2}), GaloisLabel::IrreducibleNonC4);
  EXPECT_EQ(classify_galois({-4, 2}), GaloisLabel::IrreducibleC4);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature({-4, 2}), (Signature{4, 0}));
  EXPECT_EQ(signature({4, 2}), (Signature{0, 2}));
  EXPECT_EQ(signature({0, 2}), (Signature{0, 2}));
  EXPECT_EQ(signature({1, -1}), (Signature{2, 1}));
  EXPECT_THROW(signature({2, 1}), std::invalid_argument);
}

TEST(Signature, MatchesSturmRootCount) {
  for (int b = -30; b <= 30; ++b)
    for (int d = -30; d <= 30; ++d) {
      const Trinomial t{b, d};
      if (!is_irreducible(t)) continue;
      const Signature s = signature(t);
      ASSERT_EQ(s.r1 + 2 * s.r2, 4);
      ASSERT_EQ(s.r1, oracle::real_root_count({d, 0, b, 0, 1})) << "b=" << b << " d=" << d;
    }
}

TEST(Trinomial, Rendering) {
  EXPECT_EQ(to_string(Trinomial{-4, 2}), "x^4 - 4x^2 + 2");
  EXPECT_EQ(to_string(Trinomial{1, -1}), "x^4 + x^2 - 1");
  EXPECT_EQ(to_string(Trinomial{0, 5}), "x^4 + 5");
}
