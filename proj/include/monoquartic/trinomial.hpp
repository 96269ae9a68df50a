#pragma once

// The biquadratic trinomial x^4 + b x^2 + d and its intrinsic algebra.

#include <stdexcept>
#include <string>

#include "intarith.hpp"

namespace monoquartic {

/// x^4 + b*x^2 + d, stored exactly as given.
struct Trinomial {
  Integer b;
  Integer d;

  friend bool operator==(const Trinomial&, const Trinomial&) = default;
  friend bool operator<(const Trinomial& x, const Trinomial& y) {
    return x.b != y.b ? x.b < y.b : x.d < y.d;
  }
};

inline std::string to_string(const Trinomial& t) {
  std::string s = "x^4";
  auto term = [&s](const Integer& c, const char* suffix) {
    if (c == 0) return;
    s += c < 0 ? " - " : " + ";
    const Integer mag = boost::multiprecision::abs(c);
    if (mag != 1 || suffix[0] == '\0') s += mag.str();
    s += suffix;
  };
  term(t.b, "x^2");
  term(t.d, "");
  return s;
}

/// Real embeddings r1 and complex-conjugate pairs r2; r1 + 2*r2 = 4.
struct Signature {
  int r1 = 0;
  int r2 = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

enum class GaloisLabel { Reducible, IrreducibleNonC4, IrreducibleC4 };

inline const char* to_string(GaloisLabel label) {
  switch (label) {
    case GaloisLabel::Reducible: return "reducible";
    case GaloisLabel::IrreducibleNonC4: return "irreducible-non-c4";
    case GaloisLabel::IrreducibleC4: return "irreducible-c4";
  }
  return "?";
}

/// b^2 - 4d, the discriminant of the quadratic y^2 + b y + d.
inline Integer inner_discriminant(const Trinomial& t) { return t.b * t.b - 4 * t.d; }

/// 2^4 * d * (b^2 - 4d)^2. Zero exactly when d = 0 or b^2 = 4d.
inline Integer discriminant(const Trinomial& t) {
  const Integer e = inner_discriminant(t);
  return 16 * t.d * e * e;
}

/// Irreducibility over Q. Reducible iff y^2 + b y + d splits over Q, or
/// d = s^2 and the quartic is a difference of squares
/// (x^2 + s)^2 - (2s - b) x^2 for s = +-sqrt(d).
inline bool is_irreducible(const Trinomial& t) {
  if (is_square(inner_discriminant(t))) return false;
  if (is_square(t.d)) {
    const Integer s = isqrt(t.d);
    if (is_square(2 * s - t.b) || is_square(-2 * s - t.b)) return false;
  }
  return true;
}

/// Irreducible with cyclic Galois group of order 4: d and b^2 - 4d are not
/// squares but their product is.
inline bool is_c4(const Trinomial& t) {
  const Integer e = inner_discriminant(t);
  return !is_square(t.d) && !is_square(e) && is_square(t.d * e);
}

inline GaloisLabel classify_galois(const Trinomial& t) {
  if (!is_irreducible(t)) return GaloisLabel::Reducible;
  return is_c4(t) ? GaloisLabel::IrreducibleC4 : GaloisLabel::IrreducibleNonC4;
}

/// Exact sign analysis of x^2 = (-b +- sqrt(b^2 - 4d)) / 2.
inline Signature signature(const Trinomial& t) {
  if (!is_irreducible(t))
    throw std::invalid_argument("signature: " + to_string(t) + " is reducible");
  if (t.d < 0) return {2, 1};  // one positive and one negative value of x^2
  if (inner_discriminant(t) < 0) return {0, 2};
  // d > 0, both values of x^2 real with the sign of -b
  return t.b < 0 ? Signature{4, 0} : Signature{0, 2};
}

}  // namespace monoquartic
