#pragma once

/**
 * @file gfq.hpp
 * @brief Dense univariate polynomials over a prime field GF(q).
 *
 * Coefficients are stored lowest degree first and kept trimmed, so the zero
 * polynomial is the empty vector. Factorization follows the classical route:
 * squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
 * equal-degree splitting driven by a caller-supplied random engine.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intarith.hpp"

namespace monoquartic {

class GfPoly {
 public:
  using Residue = std::uint64_t;

  /// Coefficients may be any values; they are reduced into [0, q).
  GfPoly(Residue modulus, std::vector<Residue> coeffs) : q_(modulus), c_(std::move(coeffs)) {
    if (modulus >= (Residue{1} << 32) || !is_prime(Integer(modulus)))
      throw std::invalid_argument("GF modulus must be a prime below 2^32, got " +
                                  std::to_string(modulus));
    for (auto& v : c_) v %= q_;
    trim();
  }

  /// Reduces integer coefficients with the canonical representative in [0, q).
  static GfPoly from_integers(Residue modulus, std::span<const Integer> coeffs) {
    std::vector<Residue> c;
    c.reserve(coeffs.size());
    const Integer m(modulus);
    for (const auto& v : coeffs) {
      Integer r = v % m;
      if (r < 0) r += m;
      c.push_back(static_cast<Residue>(r));
    }
    return GfPoly(modulus, std::move(c));
  }

  static GfPoly zero(Residue modulus) { return GfPoly(modulus, {}); }
  static GfPoly one(Residue modulus) { return GfPoly(modulus, {1}); }
  static GfPoly x(Residue modulus) { return GfPoly(modulus, {0, 1}); }

  Residue modulus() const noexcept { return q_; }
  const std::vector<Residue>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Residue leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Residue operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  GfPoly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(leading()));
  }

  GfPoly scaled(Residue s) const {
    std::vector<Residue> c(c_);
    for (auto& v : c) v = mul(v, s);
    return unchecked(q_, std::move(c));
  }

  Residue inverse(Residue a) const {
    if (a % q_ == 0) throw std::domain_error("GF inverse of zero");
    return detail::powmod(a, q_ - 2, q_);
  }

  Residue mul(Residue a, Residue b) const { return a * b % q_; }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Residue v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (v != 1 || i == 0) os << v;
      if (i >= 1) os << 'x';
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

  friend bool operator==(const GfPoly&, const GfPoly&) = default;

  /// Skips validation; for results of operations on already-valid operands.
  static GfPoly unchecked(Residue modulus, std::vector<Residue> coeffs) {
    GfPoly p;
    p.q_ = modulus;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

 private:
  GfPoly() = default;

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Residue q_ = 2;
  std::vector<Residue> c_;
};

struct GfFactor {
  GfPoly factor;
  unsigned exponent = 0;

  friend bool operator==(const GfFactor&, const GfFactor&) = default;
};

namespace detail {

inline void require_same_field(const GfPoly& a, const GfPoly& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("GF polynomials over different moduli: " +
                                std::to_string(a.modulus()) + " vs " +
                                std::to_string(b.modulus()));
}

}  // namespace detail

inline GfPoly gf_add(const GfPoly& a, const GfPoly& b) {
  detail::require_same_field(a, b);
  const auto q = a.modulus();
  std::vector<GfPoly::Residue> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % q;
  return GfPoly::unchecked(q, std::move(c));
}

inline GfPoly gf_sub(const GfPoly& a, const GfPoly& b) {
  detail::require_same_field(a, b);
  const auto q = a.modulus();
  std::vector<GfPoly::Residue> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + q - b[i]) % q;
  return GfPoly::unchecked(q, std::move(c));
}

inline GfPoly gf_mul(const GfPoly& a, const GfPoly& b) {
  detail::require_same_field(a, b);
  const auto q = a.modulus();
  if (a.is_zero() || b.is_zero()) return GfPoly::unchecked(q, {});
  std::vector<GfPoly::Residue> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = (c[i + j] + a.coeffs()[i] * b.coeffs()[j]) % q;
  return GfPoly::unchecked(q, std::move(c));
}

/// Quotient and remainder; the divisor must be nonzero.
inline std::pair<GfPoly, GfPoly> gf_divmod(const GfPoly& a, const GfPoly& b) {
  detail::require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("GF polynomial division by zero");
  const auto q = a.modulus();
  if (a.degree() < b.degree()) return {GfPoly::unchecked(q, {}), a};
  std::vector<GfPoly::Residue> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<GfPoly::Residue> quot(r.size() - db, 0);
  const auto inv = b.inverse(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    const auto coef = b.mul(r[k], inv);
    quot[k - db] = coef;
    if (coef == 0) continue;
    for (std::size_t i = 0; i <= db; ++i)
      r[k - db + i] = (r[k - db + i] + q - b.mul(coef, d[i])) % q;
  }
  r.resize(db);
  return {GfPoly::unchecked(q, std::move(quot)), GfPoly::unchecked(q, std::move(r))};
}

inline GfPoly gf_mod(const GfPoly& a, const GfPoly& b) { return gf_divmod(a, b).second; }
inline GfPoly gf_div(const GfPoly& a, const GfPoly& b) { return gf_divmod(a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline GfPoly gf_gcd(GfPoly a, GfPoly b) {
  detail::require_same_field(a, b);
  while (!b.is_zero()) {
    GfPoly r = gf_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline GfPoly gf_derivative(const GfPoly& a) {
  const auto q = a.modulus();
  std::vector<GfPoly::Residue> c;
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) c.push_back(a.coeffs()[i] * (i % q) % q);
  return GfPoly::unchecked(q, std::move(c));
}

/// base^exp mod m, exp >= 0.
inline GfPoly gf_powmod(const GfPoly& base, const Integer& exp, const GfPoly& m) {
  detail::require_same_field(base, m);
  if (exp < 0) throw std::invalid_argument("gf_powmod: negative exponent");
  GfPoly result = gf_mod(GfPoly::unchecked(base.modulus(), {1}), m);
  if (exp == 0) return result;
  GfPoly b = gf_mod(base, m);
  const auto top = static_cast<unsigned>(boost::multiprecision::msb(exp));
  for (unsigned i = top + 1; i-- > 0;) {
    result = gf_mod(gf_mul(result, result), m);
    if (boost::multiprecision::bit_test(exp, i)) result = gf_mod(gf_mul(result, b), m);
  }
  return result;
}

inline GfPoly gf_pow(const GfPoly& base, unsigned exp) {
  GfPoly result = GfPoly::unchecked(base.modulus(), {1});
  for (unsigned i = 0; i < exp; ++i) result = gf_mul(result, base);
  return result;
}

namespace detail {

inline bool gf_less(const GfPoly& a, const GfPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                      b.coeffs().rbegin(), b.coeffs().rend());
}

inline void sort_factors(std::vector<GfFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const GfFactor& x, const GfFactor& y) {
    if (x.factor == y.factor) return x.exponent < y.exponent;
    return gf_less(x.factor, y.factor);
  });
  // merge equal factors produced by different squarefree layers
  std::vector<GfFactor> merged;
  for (auto& f : fs) {
    if (!merged.empty() && merged.back().factor == f.factor)
      merged.back().exponent += f.exponent;
    else
      merged.push_back(std::move(f));
  }
  fs = std::move(merged);
}

/// Monic squarefree decomposition: list of (squarefree part, multiplicity).
inline std::vector<GfFactor> squarefree_decomposition(const GfPoly& f) {
  const auto q = f.modulus();
  std::vector<GfFactor> out;
  if (f.degree() < 1) return out;
  GfPoly c = gf_gcd(f, gf_derivative(f));
  GfPoly w = gf_div(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    GfPoly y = gf_gcd(w, c);
    GfPoly fac = gf_div(w, y);
    if (!fac.is_one()) out.push_back({fac.monic(), i});
    w = std::move(y);
    c = gf_div(c, w);
    ++i;
  }
  if (!c.is_one()) {
    // c = h(x^q): take the q-th root coefficientwise (Frobenius is the identity on GF(q))
    std::vector<GfPoly::Residue> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += q) root.push_back(c.coeffs()[k]);
    for (auto& [g, e] : squarefree_decomposition(GfPoly::unchecked(q, std::move(root))))
      out.push_back({std::move(g), e * static_cast<unsigned>(q)});
  }
  return out;
}

/// Splits a monic squarefree polynomial into (product of degree-k irreducibles, k).
inline std::vector<std::pair<GfPoly, unsigned>> distinct_degree(GfPoly f) {
  const auto q = f.modulus();
  std::vector<std::pair<GfPoly, unsigned>> out;
  const GfPoly x = GfPoly::unchecked(q, {0, 1});
  GfPoly h = gf_mod(x, f);
  unsigned k = 1;
  while (f.degree() >= 2 * static_cast<int>(k)) {
    h = gf_powmod(h, Integer(q), f);
    GfPoly g = gf_gcd(f, gf_sub(h, x));
    if (!g.is_one()) {
      out.emplace_back(g, k);
      f = gf_div(f, g);
      h = gf_mod(h, f);
    }
    ++k;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

inline GfPoly random_poly(GfPoly::Residue q, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<GfPoly::Residue> dist(0, q - 1);
  std::vector<GfPoly::Residue> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = dist(rng);
  return GfPoly::unchecked(q, std::move(c));
}

/// Cantor-Zassenhaus on a monic product of distinct degree-k irreducibles.
inline bool equal_degree(const GfPoly& f, unsigned k, std::mt19937_64& rng,
                         std::vector<GfPoly>& out, int attempts = 64) {
  const auto q = f.modulus();
  if (f.degree() == static_cast<int>(k)) {
    out.push_back(f);
    return true;
  }
  Integer qk = boost::multiprecision::pow(Integer(q), k);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    GfPoly a = random_poly(q, f.degree(), rng);
    if (a.is_constant()) continue;
    GfPoly g = gf_gcd(a, f);
    if (g.is_one()) {
      GfPoly b = GfPoly::unchecked(q, {});
      if (q == 2) {
        // trace map a + a^2 + ... + a^(2^(k-1))
        GfPoly t = gf_mod(a, f);
        b = t;
        for (unsigned i = 1; i < k; ++i) {
          t = gf_mod(gf_mul(t, t), f);
          b = gf_add(b, t);
        }
      } else {
        b = gf_sub(gf_powmod(a, (qk - 1) / 2, f), GfPoly::unchecked(q, {1}));
      }
      g = gf_gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      return equal_degree(g, k, rng, out, attempts) &&
             equal_degree(gf_div(f, g).monic(), k, rng, out, attempts);
    }
  }
  return false;
}

}  // namespace detail

/// Factorization by trial division against every monic polynomial of degree
/// up to deg/2. Intended for tiny fields and degrees (q <= 7, degree <= 4).
inline std::vector<GfFactor> gf_factor_exhaustive(const GfPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("gf_factor of the zero polynomial");
  const auto q = a.modulus();
  GfPoly f = a.monic();
  std::vector<GfFactor> out;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    // enumerate monic polynomials of degree k in counting order
    std::vector<GfPoly::Residue> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = 1;
    for (;;) {
      const GfPoly g = GfPoly::unchecked(q, c);
      unsigned e = 0;
      for (;;) {
        auto [quot, rem] = gf_divmod(f, g);
        if (!rem.is_zero()) break;
        f = std::move(quot);
        ++e;
      }
      if (e) out.push_back({g, e});
      if (2 * k > f.degree()) break;
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(k) && ++c[i] == q) c[i++] = 0;
      if (i == static_cast<std::size_t>(k)) break;
    }
  }
  if (f.degree() > 0) out.push_back({f, 1});
  detail::sort_factors(out);
  return out;
}

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. The leading coefficient of the input is dropped; multiply it
/// back to reconstruct. Reproducible for a fixed engine state.
inline std::vector<GfFactor> gf_factor(const GfPoly& a, std::mt19937_64& rng) {
  if (a.is_zero()) throw std::invalid_argument("gf_factor of the zero polynomial");
  std::vector<GfFactor> out;
  for (const auto& [part, mult] : detail::squarefree_decomposition(a.monic())) {
    for (const auto& [block, k] : detail::distinct_degree(part)) {
      std::vector<GfPoly> pieces;
      if (!detail::equal_degree(block, k, rng, pieces)) {
        if (block.modulus() <= 7 && block.degree() <= 4) {
          for (auto& f : gf_factor_exhaustive(block)) out.push_back({std::move(f.factor), mult});
          continue;
        }
        throw std::runtime_error("equal-degree splitting failed for " + block.str());
      }
      for (auto& p : pieces) out.push_back({std::move(p), mult});
    }
  }
  detail::sort_factors(out);
  return out;
}

inline std::vector<GfFactor> gf_factor(const GfPoly& a) {
  std::mt19937_64 rng(0x6d6f6e6fULL);
  return gf_factor(a, rng);
}

}  // namespace monoquartic
