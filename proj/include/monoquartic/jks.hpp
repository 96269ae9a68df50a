#pragma once

/**
 * @file jks.hpp
 * @brief Index criterion for x^4 + b x^2 + d at a single prime q.
 *
 * For a prime q dividing the discriminant, q fails to divide the index
 * [Z_K : Z[theta]] exactly when the condition selected by (q|b, q|d, q=2)
 * holds:
 *
 *   (1) q|b, q|d      q^2 does not divide d
 *   (2) q|b, q!|d     (q|b2 and q!|d1) or q !| b2(-d b2^2 - d1^2)
 *                     b2 = b/q, d1 = (d + (-d)^(q^j))/q, q^j || 4
 *   (3) q!|b, q|d     (q|b1 and q!|d2) or q !| b1 d2 (-b b1 + d2)
 *                     b1 = (b + (-b)^(q^e))/q, q^e || 2, d2 = d/q
 *   (4) q=2, 2!|bd    H1 = x^2 + b x + d and
 *                     H2 = (b x^2 + d + (-b x - d)^2)/2 coprime mod 2
 *   (5) q!|2bd        q^2 does not divide b^2 - 4d
 *
 * All quotients are exact integer divisions and are checked as such.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "gfq.hpp"
#include "intarith.hpp"
#include "trinomial.hpp"

namespace monoquartic {

enum class JksBranch {
  BothDivide = 1,    ///< q|b and q|d
  DividesB = 2,      ///< q|b, q does not divide d
  DividesD = 3,      ///< q|d, q does not divide b
  TwoOddCoeffs = 4,  ///< q = 2 with b, d odd
  Coprime = 5,       ///< q does not divide 2bd
};

inline int branch_number(JksBranch b) { return static_cast<int>(b); }

/// Which half of an "either ... or ..." condition held (branches 2 and 3).
enum class Disjunct { None, First, Second };

inline const char* to_string(Disjunct d) {
  switch (d) {
    case Disjunct::None: return "none";
    case Disjunct::First: return "first";
    case Disjunct::Second: return "second";
  }
  return "?";
}

/// Quantities entering conditions (2) and (3). b2/d1 are set only on
/// branch 2, b1/d2 only on branch 3.
struct JksIntermediates {
  Integer qj;  ///< q^j with q^j || 4
  Integer qe;  ///< q^e with q^e || 2
  std::optional<Integer> b1, b2, d1, d2;

  friend bool operator==(const JksIntermediates&, const JksIntermediates&) = default;
};

/// H1 and H2 reduced mod 2 (branch 4).
struct ResidualPolys {
  GfPoly h1;
  GfPoly h2;

  friend bool operator==(const ResidualPolys&, const ResidualPolys&) = default;
};

struct PrimeVerdict {
  Integer prime;
  /// Absent when the prime was skipped after an earlier failure.
  std::optional<bool> divides_index;
  JksBranch branch = JksBranch::Coprime;
  Disjunct disjunct = Disjunct::None;
  std::variant<std::monostate, JksIntermediates, ResidualPolys> detail;

  bool evaluated() const noexcept { return divides_index.has_value(); }
};

namespace detail {

inline bool divides(const Integer& q, const Integer& n) { return n % q == 0; }

/// n / q, which must be exact.
inline Integer exact_div(const Integer& n, const Integer& q, const char* what) {
  if (n % q != 0)
    throw std::logic_error(std::string("inexact division computing ") + what + ": " + n.str() +
                           " / " + q.str());
  return n / q;
}

inline Integer exact_power_dividing(const Integer& q, unsigned n) {
  Integer p = 1;
  unsigned m = n;
  while (m % q == 0) {
    m /= static_cast<unsigned>(q);
    p *= q;
  }
  return p;
}

}  // namespace detail

/// Branch selection; total over all (t, q).
inline JksBranch select_branch(const Trinomial& t, const Integer& q) {
  const bool qb = detail::divides(q, t.b);
  const bool qd = detail::divides(q, t.d);
  if (qb && qd) return JksBranch::BothDivide;
  if (qb) return JksBranch::DividesB;
  if (qd) return JksBranch::DividesD;
  if (q == 2) return JksBranch::TwoOddCoeffs;
  return JksBranch::Coprime;
}

/// Evaluates the selected condition without checking that q divides the
/// discriminant. Exposed so the formulas can be exercised on their own.
inline PrimeVerdict evaluate_jks_condition(const Trinomial& t, const Integer& q) {
  using boost::multiprecision::pow;
  const Integer& b = t.b;
  const Integer& d = t.d;
  PrimeVerdict v;
  v.prime = q;
  v.branch = select_branch(t, q);
  bool holds = false;

  JksIntermediates mid;
  mid.qj = detail::exact_power_dividing(q, 4);
  mid.qe = detail::exact_power_dividing(q, 2);

  switch (v.branch) {
    case JksBranch::BothDivide:
      holds = !detail::divides(q * q, d);
      break;

    case JksBranch::DividesB: {
      const Integer b2 = detail::exact_div(b, q, "b2");
      const Integer d1 =
          detail::exact_div(d + pow(Integer(-d), static_cast<unsigned>(mid.qj)), q, "d1");
      if (detail::divides(q, b2) && !detail::divides(q, d1)) {
        holds = true;
        v.disjunct = Disjunct::First;
      } else if (!detail::divides(q, b2 * (-d * b2 * b2 - d1 * d1))) {
        holds = true;
        v.disjunct = Disjunct::Second;
      }
      mid.b2 = b2;
      mid.d1 = d1;
      v.detail = mid;
      break;
    }

    case JksBranch::DividesD: {
      const Integer b1 =
          detail::exact_div(b + pow(Integer(-b), static_cast<unsigned>(mid.qe)), q, "b1");
      const Integer d2 = detail::exact_div(d, q, "d2");
      if (detail::divides(q, b1) && !detail::divides(q, d2)) {
        holds = true;
        v.disjunct = Disjunct::First;
      } else if (!detail::divides(q, b1 * d2 * (-b * b1 + d2))) {
        holds = true;
        v.disjunct = Disjunct::Second;
      }
      mid.b1 = b1;
      mid.d2 = d2;
      v.detail = mid;
      break;
    }

    case JksBranch::TwoOddCoeffs: {
      // H2 = ((b + b^2) x^2 + 2bd x + (d + d^2)) / 2
      const Integer h2[] = {detail::exact_div(d * (1 + d), 2, "H2[0]"), b * d,
                            detail::exact_div(b * (1 + b), 2, "H2[2]")};
      const Integer h1[] = {d, b, 1};
      ResidualPolys polys{GfPoly::from_integers(2, h1), GfPoly::from_integers(2, h2)};
      holds = gf_gcd(polys.h1, polys.h2).is_one();
      v.detail = std::move(polys);
      break;
    }

    case JksBranch::Coprime:
      holds = !detail::divides(q * q, inner_discriminant(t));
      break;
  }
  v.divides_index = !holds;
  return v;
}

/// Decides whether the prime q divides [Z_K : Z[theta]] for irreducible t.
/// q must be prime and divide the discriminant.
inline PrimeVerdict jks_prime_test(const Trinomial& t, const Integer& q) {
  if (!is_prime(q)) throw std::invalid_argument("jks_prime_test: " + q.str() + " is not prime");
  if (!is_irreducible(t))
    throw std::invalid_argument("jks_prime_test: " + to_string(t) + " is reducible");
  if (!detail::divides(q, discriminant(t)))
    throw std::invalid_argument("jks_prime_test: " + q.str() + " does not divide the discriminant of " +
                                to_string(t));
  return evaluate_jks_condition(t, q);
}

}  // namespace monoquartic
