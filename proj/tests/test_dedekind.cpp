#include <random>

#include <gtest/gtest.h>

#include "monoquartic/dedekind.hpp"

using namespace monoquartic;

TEST(Dedekind, Examples) {
  EXPECT_FALSE(dedekind_test({-4, 2}, 2));  // f = x^4 mod 2, M = -2x^2 + 1
  EXPECT_TRUE(dedekind_test({5, 5}, 2));    // f = (x^2+x+1)^2 mod 2
  EXPECT_FALSE(dedekind_test({0, 1}, 2));   // f = (x+1)^4 mod 2, M = -2x^3 - 3x^2 - 2x
}

TEST(Dedekind, Preconditions) {
  EXPECT_THROW(dedekind_test({-4, 2}, 9), std::invalid_argument);
  EXPECT_THROW(dedekind_test({2, 1}, 2), std::invalid_argument);
  EXPECT_THROW(dedekind_test({-4, 2}, (Integer(1) << 61) - 1), std::invalid_argument);
}

TEST(Dedekind, UnramifiedPrimesNeverDivideIndex) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coef(-60, 60);
  const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  int checked = 0;
  while (checked < 1500) {
    const Trinomial t{coef(rng), coef(rng)};
    if (t.d == 0 || !is_irreducible(t)) continue;
    const Integer disc = discriminant(t);
    for (int q : primes) {
      if (disc % q == 0) continue;
      ASSERT_FALSE(dedekind_test(t, q)) << to_string(t) << " q=" << q;
      ++checked;
    }
  }
}

TEST(Dedekind, KnownIndexDivisors) {
  // 3 | b and 3^2 | d
  EXPECT_TRUE(dedekind_test({3, 9}, 3));
  // b^2 - 4d = 45: q = 3 with q^2 | b^2 - 4d and q not dividing bd
  EXPECT_TRUE(dedekind_test({1, -11}, 3));
  EXPECT_FALSE(dedekind_test({-5, 5}, 5));
}
