#pragma once

/**
 * @file dedekind.hpp
 * @brief Classical Dedekind index criterion for x^4 + b x^2 + d.
 *
 * Factor f mod q as prod g_i^e_i, lift each g_i with coefficients in [0, q),
 * and set M = (f - prod g_i^e_i) / q. Then q divides the index iff
 * gcd(M mod q, prod_{e_i >= 2} g_i) is nonconstant.
 *
 * This file shares nothing with jks.hpp beyond the polynomial and integer
 * primitives; it is used to cross-check that engine.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gfq.hpp"
#include "intarith.hpp"
#include "trinomial.hpp"

namespace monoquartic {

namespace detail {

using IntPoly = std::vector<Integer>;  // lowest degree first

inline IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline IntPoly lift(const GfPoly& g) {
  IntPoly out;
  for (auto c : g.coeffs()) out.emplace_back(c);
  return out;
}

}  // namespace detail

/// True iff the prime q divides [Z_K : Z[theta]] for irreducible t.
/// Requires q < 2^32 so that arithmetic mod q is word-sized.
inline bool dedekind_test(const Trinomial& t, const Integer& q) {
  if (!is_prime(q)) throw std::invalid_argument("dedekind_test: " + q.str() + " is not prime");
  if (q >= (Integer(1) << 32))
    throw std::invalid_argument("dedekind_test: prime " + q.str() + " exceeds 2^32");
  if (!is_irreducible(t))
    throw std::invalid_argument("dedekind_test: " + to_string(t) + " is reducible");

  const auto p = static_cast<std::uint64_t>(q);
  const detail::IntPoly f = {t.d, 0, t.b, 0, 1};
  const auto factors = gf_factor(GfPoly::from_integers(p, f));

  detail::IntPoly g = {1};
  GfPoly repeated = GfPoly(p, {1});
  for (const auto& [gi, e] : factors) {
    const detail::IntPoly lifted = detail::lift(gi);
    for (unsigned k = 0; k < e; ++k) g = detail::int_poly_mul(g, lifted);
    if (e >= 2) repeated = gf_mul(repeated, gi);
  }
  if (g.size() != f.size()) throw std::logic_error("dedekind_test: lifted product has wrong degree");

  detail::IntPoly m(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer diff = f[i] - g[i];
    if (diff % q != 0)
      throw std::logic_error("dedekind_test: (f - g)/q is not integral at degree " +
                             std::to_string(i));
    m[i] = diff / q;
  }
  return !gf_gcd(GfPoly::from_integers(p, m), repeated).is_one();
}

}  // namespace monoquartic
