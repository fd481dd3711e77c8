#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spinmcg {

/// Coefficient ring Z/r for r >= 1, or Z when r == 0.
///
/// Elements are plain int64_t values.  For r > 0 the canonical
/// representative lies in [0, r); for r == 0 every integer is canonical.
struct CoeffRing {
  std::int64_t modulus = 0;  // r; 0 encodes Z

  constexpr CoeffRing() = default;
  explicit constexpr CoeffRing(std::int64_t r) : modulus(r) {
    if (r < 0) throw std::invalid_argument("CoeffRing: modulus must be >= 0");
  }

  constexpr bool is_integers() const { return modulus == 0; }
  constexpr bool is_even() const { return modulus % 2 == 0; }  // Z counts as even

  /// Canonical representative of x.
  constexpr std::int64_t canon(std::int64_t x) const {
    if (modulus == 0) return x;
    std::int64_t v = x % modulus;
    return v < 0 ? v + modulus : v;
  }

  // lift() is canon() read as an integer; named separately where the
  // distinction matters in algorithms working with integer lifts.
  constexpr std::int64_t lift(std::int64_t x) const { return canon(x); }

  constexpr std::int64_t add(std::int64_t a, std::int64_t b) const { return canon(a + b); }
  constexpr std::int64_t sub(std::int64_t a, std::int64_t b) const { return canon(a - b); }
  constexpr std::int64_t mul(std::int64_t a, std::int64_t b) const { return canon(a * b); }
  constexpr std::int64_t neg(std::int64_t a) const { return canon(-a); }

  constexpr bool operator==(const CoeffRing&) const = default;
};

/// gcd of two residues, well-defined via integer lifts together with the
/// modulus: gcd_canon(a, b) = gcd(lift(a), lift(b), r) as a canonical ring
/// element.  The underlying divisor of r is the usual non-negative gcd,
/// with gcd(0, 0, r) = r (canonical representative 0).  For r == 0 this is
/// the non-negative integer gcd with gcd(0, 0) = 0.
inline std::int64_t gcd_canon(std::int64_t a, std::int64_t b, const CoeffRing& R) {
  if (R.is_integers()) {
    return std::gcd(a, b);  // std::gcd is non-negative, gcd(0,0) == 0
  }
  std::int64_t g = std::gcd(std::gcd(R.lift(a), R.lift(b)), R.modulus);
  if (g == 0) g = R.modulus;
  return R.canon(g);
}

/// The divisor of r underlying gcd_canon; r itself when both lifts vanish.
/// This is the value algorithms divide by, so it is never 0 when r > 0.
inline std::int64_t gcd_divisor(std::int64_t a, std::int64_t b, const CoeffRing& R) {
  if (R.is_integers()) return std::gcd(a, b);
  std::int64_t g = std::gcd(std::gcd(R.lift(a), R.lift(b)), R.modulus);
  return g == 0 ? R.modulus : g;
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return a < 0 ? -a : a;
  }
  std::int64_t x1 = 0, y1 = 0;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace spinmcg
