#pragma once

/**
 * @file monogenic.hpp
 * @brief Monogenicity decision for x^4 + b x^2 + d.
 *
 * Since disc(f) = [Z_K : Z[theta]]^2 * disc(K), an irreducible f is monogenic
 * iff no prime of disc(f) divides the index. The report walks those primes in
 * increasing order through the JKS criterion.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "intarith.hpp"
#include "jks.hpp"
#include "trinomial.hpp"

namespace monoquartic {

/// Raised for d = 0, where the discriminant vanishes.
class DegenerateTrinomial : public std::invalid_argument {
 public:
  explicit DegenerateTrinomial(const Trinomial& t)
      : std::invalid_argument("degenerate trinomial " + to_string(t) + ": d = 0") {}
};

struct MonogenicityReport {
  Trinomial trinomial;
  bool irreducible = false;
  bool c4 = false;
  Integer disc;
  /// Absent for reducible input, whose discriminant is not needed (and may be 0).
  std::optional<Factorization> disc_factored;
  /// One entry per distinct prime of disc, ascending.
  std::vector<PrimeVerdict> verdicts;
  bool monogenic = false;
  /// Equals disc when monogenic.
  std::optional<Integer> field_disc;
  std::optional<Signature> signature;

  /// The first prime found to divide the index, if any.
  const PrimeVerdict* failing_verdict() const {
    for (const auto& v : verdicts)
      if (v.divides_index.value_or(false)) return &v;
    return nullptr;
  }
};

struct ReportOptions {
  /// Stop at the first prime dividing the index; later primes are recorded
  /// as not evaluated.
  bool short_circuit = true;
  FactorOptions factoring;
};

/// Factorization of 2^4 * d * (b^2 - 4d)^2 assembled from its pieces.
inline Factorization discriminant_factorization(const Trinomial& t,
                                                const FactorOptions& opts = {}) {
  const Integer e = inner_discriminant(t);
  if (t.d == 0 || e == 0) throw std::invalid_argument("zero discriminant for " + to_string(t));
  std::map<Integer, unsigned> merged;
  merged[Integer(2)] += 4;
  const Factorization fd = factor(t.d, opts);
  for (const auto& pp : fd.factors) merged[pp.prime] += pp.exponent;
  for (const auto& pp : factor(e, opts).factors) merged[pp.prime] += 2 * pp.exponent;
  Factorization out;
  out.sign = fd.sign;
  for (auto& [p, k] : merged) out.factors.push_back({p, k});
  return out;
}

inline MonogenicityReport is_monogenic(const Trinomial& t, const ReportOptions& opts = {}) {
  if (t.d == 0) throw DegenerateTrinomial(t);
  MonogenicityReport r;
  r.trinomial = t;
  r.disc = discriminant(t);
  r.irreducible = is_irreducible(t);
  if (!r.irreducible) return r;
  r.c4 = is_c4(t);
  r.signature = signature(t);
  r.disc_factored = discriminant_factorization(t, opts.factoring);

  bool failed = false;
  for (const auto& pp : r.disc_factored->factors) {
    if (failed) {
      PrimeVerdict skipped;
      skipped.prime = pp.prime;
      skipped.branch = select_branch(t, pp.prime);
      r.verdicts.push_back(std::move(skipped));
      continue;
    }
    r.verdicts.push_back(evaluate_jks_condition(t, pp.prime));
    if (*r.verdicts.back().divides_index && opts.short_circuit) failed = true;
  }
  r.monogenic = std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const PrimeVerdict& v) {
    return v.divides_index.has_value() && !*v.divides_index;
  });
  if (r.monogenic) r.field_disc = r.disc;
  return r;
}

/// Necessary conditions satisfied by every monogenic C4 trinomial.
struct StructuralConstraints {
  bool d_positive = false;
  bool bounds_ok = false;  ///< d >= 2 and b^2 - 4d >= 2
  bool d_squarefree = false;
  bool d_divides_b = false;
  bool same_radical = false;  ///< rad(d) = rad(b^2 - 4d)

  bool all_pass() const {
    return d_positive && bounds_ok && d_squarefree && d_divides_b && same_radical;
  }
};

inline StructuralConstraints structural_constraints(const Trinomial& t,
                                                    const FactorOptions& opts = {}) {
  if (!is_c4(t))
    throw std::invalid_argument("structural_constraints: " + to_string(t) + " is not C4");
  const Integer e = inner_discriminant(t);
  StructuralConstraints c;
  c.d_positive = t.d > 0;
  c.bounds_ok = t.d >= 2 && e >= 2;
  c.d_squarefree = is_squarefree(t.d, opts);
  c.d_divides_b = t.b % t.d == 0;
  c.same_radical = radical(t.d, opts) == radical(e, opts);
  return c;
}

}  // namespace monoquartic
