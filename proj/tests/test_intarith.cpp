#include <random>

#include <gtest/gtest.h>

#include "monoquartic/intarith.hpp"
#include "oracles.hpp"

using namespace monoquartic;

namespace {

Integer pow2(unsigned k) { return Integer(1) << k; }

}  // namespace

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(Integer("1000000000000000000")), Integer("1000000000"));
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Isqrt, BracketsProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    // mix word-sized and multiword inputs
    Integer n = rng();
    if (i % 2) n = (n << 64) + rng();
    if (i % 5 == 0) n = (n << 40) + rng();
    const Integer s = isqrt(n);
    ASSERT_LE(s * s, n);
    ASSERT_GT((s + 1) * (s + 1), n);
  }
  for (unsigned k = 0; k < 200; ++k) {
    const Integer n = pow2(k);
    for (const Integer& m : {Integer(n - 1), n, Integer(n + 1)}) {
      if (m < 0) continue;
      const Integer s = isqrt(m);
      ASSERT_LE(s * s, m);
      ASSERT_GT((s + 1) * (s + 1), m);
    }
  }
}

TEST(IsSquare, Examples) {
  EXPECT_TRUE(is_square(16));
  EXPECT_FALSE(is_square(8));
  EXPECT_FALSE(is_square(-4));
  EXPECT_TRUE(is_square(0));
  EXPECT_TRUE(is_square(Integer("1237940004097700855145776161") *
                        Integer("1237940004097700855145776161")));
}

TEST(IsSquare, AgreesWithIsqrtDefinition) {
  for (int n = -50; n <= 5000; ++n) {
    const bool expected = n >= 0 && isqrt(n) * isqrt(n) == n;
    ASSERT_EQ(is_square(n), expected) << n;
  }
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (int n = -5; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime((Integer(1) << 61) - 1));
  EXPECT_TRUE(is_prime((Integer(1) << 89) - 1));
  EXPECT_TRUE(is_prime((Integer(1) << 127) - 1));
  EXPECT_FALSE(is_prime((Integer(1) << 67) - 1));  // 193707721 * 761838257287
  // strong pseudoprimes to long runs of small prime bases
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  EXPECT_FALSE(is_prime(Integer("318665857834031151167461")));
  EXPECT_FALSE(is_prime(Integer("3317044064679887385961981")));
  EXPECT_TRUE(is_prime(Integer("35184372088777")));
}

TEST(Factor, Examples) {
  EXPECT_EQ(factor(2000), (Factorization{1, {{2, 4}, {5, 3}}}));
  EXPECT_EQ(factor(2048), (Factorization{1, {{2, 11}}}));
  EXPECT_EQ(factor(-1), (Factorization{-1, {}}));
  EXPECT_EQ(factor(1), (Factorization{1, {}}));
  EXPECT_EQ(factor(-12), (Factorization{-1, {{2, 2}, {3, 1}}}));
  EXPECT_THROW(factor(0), std::invalid_argument);
}

TEST(Factor, ReconstructsAndPrimesAreTrialDivisionPrime) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    Integer n = Integer(rng() % 2000000) + 1;
    if (i % 3 == 0) n = -n;
    const Factorization f = factor(n);
    ASSERT_EQ(f.value(), n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      ASSERT_GE(f.factors[k].exponent, 1u);
      ASSERT_TRUE(oracle::is_prime_trial(f.factors[k].prime)) << f.factors[k].prime;
      if (k) {
        ASSERT_LT(f.factors[k - 1].prime, f.factors[k].prime);
      }
    }
  }
}

TEST(Factor, DeskScaleSemiprimesAndMultiword) {
  const Integer p("35184372088777"), q("35184371088793");
  const Integer n = p * q;  // 90 bits
  EXPECT_EQ(factor(n), (Factorization{1, {{q, 1}, {p, 1}}}));

  // 2^90 - 1 = 3^3 7 11 19 31 73 151 331 631 23311 18837001
  const Factorization m = factor((Integer(1) << 90) - 1);
  EXPECT_EQ(m.value(), (Integer(1) << 90) - 1);
  ASSERT_EQ(m.factors.size(), 11u);
  EXPECT_EQ(m.factors.front(), (PrimePower{3, 3}));
  EXPECT_EQ(m.factors.back(), (PrimePower{18837001, 1}));

  const Integer big = (Integer(1) << 89) - 1;
  EXPECT_EQ(factor(big * 6), (Factorization{1, {{2, 1}, {3, 1}, {big, 1}}}));
  EXPECT_EQ(factor(p * p * q), (Factorization{1, {{q, 1}, {p, 2}}}));
}

TEST(Factor, BudgetExhaustionIsExplicit) {
  FactorOptions tiny;
  tiny.rho_iterations = 8;
  const Integer n = Integer("35184372088777") * Integer("35184371088793");
  EXPECT_THROW(factor(n, tiny), FactorizationIncomplete);
  try {
    factor(n, tiny);
  } catch (const FactorizationIncomplete& e) {
    EXPECT_EQ(e.cofactor(), n);
  }
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(8), 2);
  EXPECT_EQ(radical(2000), 10);
  EXPECT_EQ(radical(5), 5);
  EXPECT_EQ(radical(-1), 1);
  EXPECT_EQ(radical(-72), 6);
  EXPECT_THROW(radical(0), std::invalid_argument);
}

TEST(Squarefree, ExamplesAndFactorExponents) {
  EXPECT_TRUE(is_squarefree(2));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_TRUE(is_squarefree(1));
  EXPECT_TRUE(is_squarefree(-30));
  EXPECT_THROW(is_squarefree(0), std::invalid_argument);
  for (int n = 1; n < 3000; ++n) {
    bool has_square = false;
    for (int k = 2; k * k <= n; ++k)
      if (n % (k * k) == 0) has_square = true;
    ASSERT_EQ(is_squarefree(n), !has_square) << n;
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(valuation(4, 2), 2u);
  EXPECT_EQ(valuation(2, 2), 1u);
  EXPECT_EQ(valuation(4, 3), 0u);
  EXPECT_EQ(valuation(-2000, 5), 3u);
  EXPECT_THROW(valuation(4, 4), std::invalid_argument);
  EXPECT_THROW(valuation(0, 2), std::invalid_argument);
}

TEST(Valuation, ExactPowerProperty) {
  std::mt19937_64 rng(3);
  const int primes[] = {2, 3, 5, 7, 11, 97};
  for (int i = 0; i < 2000; ++i) {
    const Integer n = Integer(rng() % 1000000) - 500000;
    if (n == 0) continue;
    for (int q : primes) {
      const unsigned e = valuation(n, q);
      const Integer qe = boost::multiprecision::pow(Integer(q), e);
      ASSERT_EQ(n % qe, 0);
      ASSERT_NE(n % (qe * q), 0);
    }
  }
}

TEST(ParseInteger, AcceptsSignedDecimal) {
  EXPECT_EQ(parse_integer("+17"), 17);
  EXPECT_EQ(parse_integer("-4"), -4);
  EXPECT_EQ(parse_integer("0"), 0);
  EXPECT_EQ(parse_integer("123456789012345678901234567890"),
            Integer("123456789012345678901234567890"));
  for (const char* bad : {"", "+", "-", "0x10", "1e3", " 5", "5 ", "1,000"})
    EXPECT_THROW(parse_integer(bad), std::invalid_argument) << bad;
}
