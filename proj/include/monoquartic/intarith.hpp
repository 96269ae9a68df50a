#pragma once

/**
 * @file intarith.hpp
 * @brief Exact integer primitives: integer square root, square test,
 *        deterministic primality, factorization, radical, valuation.
 *
 * Everything operates on arbitrary-precision integers. Values that fit in a
 * machine word take a 64-bit fast path; the answers are identical either way.
 * No floating point is used anywhere in this header.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoquartic {

using Integer = boost::multiprecision::cpp_int;

/// Raised when the factorizer exhausts its effort budget on a cofactor.
class FactorizationIncomplete : public std::runtime_error {
 public:
  FactorizationIncomplete(const Integer& cofactor)
      : std::runtime_error("factorization incomplete: could not split " +
                           cofactor.str()),
        cofactor_(cofactor) {}

  const Integer& cofactor() const noexcept { return cofactor_; }

 private:
  Integer cofactor_;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent); primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer value() const {
    Integer v = sign;
    for (const auto& f : factors) v *= boost::multiprecision::pow(f.prime, f.exponent);
    return v;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorOptions {
  /// Upper bound on Pollard-Brent iterations spent per composite cofactor.
  std::uint64_t rho_iterations = std::uint64_t{1} << 26;
  /// Trial division covers every prime below this bound.
  std::uint32_t trial_bound = 1u << 12;
};

/// Parses an optionally signed decimal integer ("+17", "-4", "0").
/// Rejects empty input, embedded whitespace, and non-decimal notation.
inline Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  Integer v;
  for (char c : digits) v = v * 10 + (c - '0');
  return negative ? Integer(-v) : v;
}

namespace detail {

inline bool fits_u64(const Integer& n) {
  return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n < 2) return n;
  const int bits = 64 - std::countl_zero(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);  // x >= sqrt(n)
  for (;;) {
    const std::uint64_t y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  using u128 = unsigned __int128;
  while (u128{x} * x > n) --x;
  while (u128{x + 1} * (x + 1) <= n) ++x;
  return x;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline Integer mulmod(const Integer& a, const Integer& b, const Integer& m) { return a * b % m; }

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline Integer gcd(Integer a, Integer b) {
  return boost::multiprecision::gcd(a, b);
}

inline constexpr std::array<std::uint32_t, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                             19, 23, 29, 31, 37, 41};

/// Strong probable-prime test to base a; n odd, n > a.
template <class T>
bool strong_probable_prime(const T& n, const T& a) {
  T d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  T x;
  if constexpr (std::is_same_v<T, std::uint64_t>)
    x = powmod(a, d, n);
  else
    x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline int jacobi(Integer a, Integer n) {
  // n odd positive
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n & 7);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

/// Strong Lucas probable-prime test with Selfridge parameters. n odd, not a square.
inline bool strong_lucas_probable_prime(const Integer& n) {
  Integer D = 5;
  for (;;) {
    const int j = jacobi(D, n);
    if (j == -1) break;
    if (j == 0 && boost::multiprecision::abs(D) != n) return false;
    D = D > 0 ? Integer(-(D + 2)) : Integer(-D + 2);
  }
  const Integer P = 1;
  const Integer Q = (1 - D) / 4;

  Integer d = n + 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mod = [&](Integer v) {
    v %= n;
    if (v < 0) v += n;
    return v;
  };
  auto half = [&](Integer v) {  // v / 2 mod n
    if (v & 1) v += n;
    return Integer(v >> 1);
  };

  // Left-to-right binary Lucas chain for U_d, V_d, Q^d.
  Integer U = 1, V = P, Qk = mod(Q);
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(d));
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    U = mod(U * V);
    V = mod(V * V - 2 * Qk);
    Qk = mod(Qk * Qk);
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
      const Integer U2 = half(mod(P * U + V));
      const Integer V2 = half(mod(D * U + P * V));
      U = U2;
      V = V2;
      Qk = mod(Qk * Q);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk);
    if (V == 0) return true;
    Qk = mod(Qk * Qk);
  }
  return false;
}

inline const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1u << 16;
    std::vector<bool> composite(limit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
    }
    return out;
  }();
  if (bound > (1u << 16))
    throw std::invalid_argument("trial division bound exceeds the precomputed sieve");
  return primes;
}

}  // namespace detail

/// Floor of the square root: the s with s*s <= n < (s+1)*(s+1).
/// Newton iteration from above, then a correction step.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer " + n.str());
  if (detail::fits_u64(n)) return Integer(detail::isqrt_u64(static_cast<std::uint64_t>(n)));
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  Integer x = Integer(1) << ((bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

/// True iff n = s^2 for an integer s. Negative numbers are never squares.
inline bool is_square(const Integer& n) {
  if (n < 0) return false;
  // squares occupy 12 of the 64 residues mod 64
  static constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
  const unsigned low = static_cast<unsigned>(n & 63);
  if (((kSquaresMod64 >> low) & 1) == 0) return false;
  const Integer s = isqrt(n);
  return s * s == n;
}

/// Deterministic primality. Miller-Rabin on the first 13 prime bases is
/// proven exact below 3.3e24; above that a strong Lucas test is added (BPSW).
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (std::uint32_t p : detail::kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  if (detail::fits_u64(n)) {
    const auto m = static_cast<std::uint64_t>(n);
    for (std::uint32_t a : detail::kWitnesses)
      if (!detail::strong_probable_prime<std::uint64_t>(m, a)) return false;
    return true;
  }
  for (std::uint32_t a : detail::kWitnesses)
    if (!detail::strong_probable_prime<Integer>(n, Integer(a))) return false;
  static const Integer kProvenBound = parse_integer("3317044064679887385961981");
  if (n < kProvenBound) return true;
  if (is_square(n)) return false;
  return detail::strong_lucas_probable_prime(n);
}

namespace detail {

/// Pollard-Brent; returns a nontrivial factor or 0 when the budget runs out.
template <class T>
T brent_split(const T& n, std::uint64_t& budget) {
  if ((n & 1) == 0) return T(2);
  for (std::uint64_t c = 1; budget > 0; ++c) {
    const T cc = T(c);
    auto step = [&](const T& v) { return T((mulmod(v, v, n) + cc) % n); };
    T y = T(2), x, ys, q = T(1), g = T(1);
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t m = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < m; ++i) {
          y = step(y);
          q = mulmod(q, x > y ? T(x - y) : T(y - x), n);
        }
        budget = budget > m ? budget - m : 0;
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1 && budget > 0);
      r <<= 1;
    } while (g == 1 && budget > 0);
    if (g == n) {
      // batch overshot; redo one step at a time
      do {
        ys = step(ys);
        g = gcd(x > ys ? T(x - ys) : T(ys - x), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return T(0);
}

inline void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out,
                            const FactorOptions& opts) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (is_square(n)) {
    const Integer s = isqrt(n);
    std::map<Integer, unsigned> half;
    factor_cofactor(s, half, opts);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  std::uint64_t budget = opts.rho_iterations;
  Integer split;
  if (fits_u64(n)) {
    split = Integer(brent_split<std::uint64_t>(static_cast<std::uint64_t>(n), budget));
  } else {
    split = brent_split<Integer>(n, budget);
  }
  if (split == 0) throw FactorizationIncomplete(n);
  factor_cofactor(split, out, opts);
  factor_cofactor(n / split, out, opts);
}

}  // namespace detail

/// Complete factorization of a nonzero integer into ascending prime powers.
/// Throws FactorizationIncomplete if a composite cofactor resists the rho
/// budget; below 2^90 the default budget always suffices.
inline Factorization factor(const Integer& n, const FactorOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  Factorization result;
  result.sign = n < 0 ? -1 : 1;
  Integer m = boost::multiprecision::abs(n);
  std::map<Integer, unsigned> found;
  for (std::uint32_t p : detail::small_primes(opts.trial_bound)) {
    if (p >= opts.trial_bound) break;
    if (Integer(p) * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    found[Integer(p)] = e;
  }
  detail::factor_cofactor(m, found, opts);
  for (auto& [p, e] : found) result.factors.push_back({p, e});
  return result;
}

/// Product of the distinct primes dividing |n|.
inline Integer radical(const Integer& n, const FactorOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("radical: zero argument");
  Integer r = 1;
  for (const auto& f : factor(n, opts).factors) r *= f.prime;
  return r;
}

inline bool is_squarefree(const Integer& n, const FactorOptions& opts = {}) {
  if (n == 0) throw std::invalid_argument("is_squarefree: zero argument");
  const auto fs = factor(n, opts).factors;
  return std::all_of(fs.begin(), fs.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

/// Exponent of the prime q in n.
inline unsigned valuation(Integer n, const Integer& q) {
  if (n == 0) throw std::invalid_argument("valuation: zero argument");
  if (!is_prime(q)) throw std::invalid_argument("valuation: " + q.str() + " is not prime");
  unsigned e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace monoquartic
