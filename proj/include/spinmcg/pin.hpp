#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface.hpp"
#include "twist_word.hpp"

namespace spinmcg {

enum class PinSign { Plus, Minus };

inline const char* to_string(PinSign s) { return s == PinSign::Plus ? "+" : "-"; }

/// A Pin structure on a non-orientable surface S_{n,B}, in the coordinates
/// (q(a_1), ..., q(a_n), q(r_1), ..., q(r_b)) with boundary condition
/// delta = (q(d_0), ..., q(d_b)).
///
/// Pin+: all values in Z/2.  Pin-: values in Z/4 with q(a_i) in {1,3},
/// q(r_j) in {0,2} and delta_j in {0,2}.
struct PinStructure {
  PinSign sign = PinSign::Plus;
  SurfaceSpec surface;
  std::vector<std::int64_t> coords;  // length n+b
  std::vector<std::int64_t> delta;   // length b+1

  PinStructure() = default;
  PinStructure(PinSign s, SurfaceSpec S, std::vector<std::int64_t> c,
               std::vector<std::int64_t> d)
      : sign(s), surface(S), coords(std::move(c)), delta(std::move(d)) {
    surface.validate();
    if (surface.orientable)
      throw std::invalid_argument("PinStructure: surface must be non-orientable");
    if (static_cast<int>(coords.size()) != surface.coord_count())
      throw std::invalid_argument("PinStructure: coords must have length n+b");
    if (static_cast<int>(delta.size()) != surface.boundaries)
      throw std::invalid_argument("PinStructure: delta must have length b+1");
    const std::int64_t m = modulus();
    for (auto& v : coords) v = ((v % m) + m) % m;
    for (auto& v : delta) v = ((v % m) + m) % m;
  }

  std::int64_t modulus() const { return sign == PinSign::Plus ? 2 : 4; }
  std::int64_t mod(std::int64_t v) const {
    const std::int64_t m = modulus();
    return ((v % m) + m) % m;
  }

  std::int64_t qa(int i) const { return coords[i - 1]; }
  std::int64_t qr(int j) const { return coords[surface.genus + (j - 1)]; }
  std::int64_t& qa(int i) { return coords[i - 1]; }
  std::int64_t& qr(int j) { return coords[surface.genus + (j - 1)]; }

  bool operator==(const PinStructure&) const = default;
};

/// Result of validate(): ok() or the first violated constraint.
struct ValidationReport {
  bool valid = true;
  std::string violation;

  static ValidationReport ok() { return {}; }
  static ValidationReport fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

/// Checks the coordinate-range and boundary-sum constraints:
/// Pin-: q(a_i) in {1,3}, q(r_j) in {0,2}, delta_j in {0,2}, sum delta = 0
/// in Z/4.  Pin+: sum delta = n mod 2.
inline ValidationReport validate(const PinStructure& xi) {
  const int n = xi.surface.genus, b = xi.surface.b();
  if (xi.sign == PinSign::Minus) {
    for (int i = 1; i <= n; ++i)
      if (xi.qa(i) != 1 && xi.qa(i) != 3)
        return ValidationReport::fail("q(a" + std::to_string(i) + ") must be 1 or 3");
    for (int j = 1; j <= b; ++j)
      if (xi.qr(j) != 0 && xi.qr(j) != 2)
        return ValidationReport::fail("q(r" + std::to_string(j) + ") must be 0 or 2");
    std::int64_t s = 0;
    for (int j = 0; j <= b; ++j) {
      if (xi.delta[j] != 0 && xi.delta[j] != 2)
        return ValidationReport::fail("delta_" + std::to_string(j) + " must be 0 or 2");
      s += xi.delta[j];
    }
    if (s % 4 != 0) return ValidationReport::fail("sum of delta must be 0 in Z/4");
    return ValidationReport::ok();
  }
  std::int64_t s = 0;
  for (int j = 0; j <= b; ++j) s += xi.delta[j];
  if ((s - n) % 2 != 0) return ValidationReport::fail("sum of delta must equal n mod 2");
  return ValidationReport::ok();
}

/// The unique quadratic extension of q to homology classes.
///
/// Pin- (coefficients mod 2):  q(x) = sum A_i q(a_i) + sum lambda_j delta_j
/// in Z/4; distinct basis curves have even pairing so no cross terms enter.
/// Pin+ (coefficients mod 4):  q(x) = sum A_i q(a_i) + C(A_i, 2)
/// + sum lambda_j delta_j in Z/2, the left-fold over increasing index; the
/// C(A_i, 2) terms come from <a_i, a_i> = 1.  An arc class r_k + cycle
/// additionally contributes q(r_k) plus Mon(D^2) times the crossing count.
inline std::int64_t q_eval_pin(const PinStructure& xi, const CurveClass& x) {
  x.validate_on(xi.surface);
  const int n = xi.surface.genus;
  std::int64_t v = 0;
  if (xi.sign == PinSign::Minus) {
    for (int i = 0; i < n; ++i) {
      const std::int64_t c = ((x.A[i] % 2) + 2) % 2;
      v += c * xi.coords[i];
    }
    for (int j = 0; j < xi.surface.boundaries; ++j) {
      const std::int64_t c = ((x.lambda[j] % 2) + 2) % 2;
      v += c * xi.delta[j];
    }
    if (x.is_arc) {
      v += xi.qr(x.arc_index);
      v += 2 * (x.lambda[x.arc_index] + x.lambda[0]);
    }
    return xi.mod(v);
  }
  for (int i = 0; i < n; ++i) {
    const std::int64_t c = ((x.A[i] % 4) + 4) % 4;
    v += c * xi.coords[i] + c * (c - 1) / 2;
  }
  for (int j = 0; j < xi.surface.boundaries; ++j) {
    const std::int64_t c = ((x.lambda[j] % 4) + 4) % 4;
    v += c * xi.delta[j];
  }
  if (x.is_arc) {
    v += xi.qr(x.arc_index);
    v += x.lambda[x.arc_index] + x.lambda[0];
  }
  return xi.mod(v);
}

namespace detail {

/// <c, y> mod 2 for the k-th coordinate curve (a_1..a_n, r_1..r_b).
inline std::int64_t pin_pairing_with_coordinate(const CurveClass& c, int k,
                                                const SurfaceSpec& S) {
  std::int64_t v = (k < S.genus) ? c.A[k] : c.lambda[k - S.genus + 1] + c.lambda[0];
  return ((v % 2) + 2) % 2;
}

inline void twist_pin_in_place(PinStructure& xi, const CurveClass& c, std::int64_t qc) {
  const std::int64_t mon = xi.sign == PinSign::Plus ? 1 : 2;
  const std::int64_t inc = xi.mod(qc - mon);
  if (inc == 0) return;
  for (int k = 0; k < static_cast<int>(xi.coords.size()); ++k)
    if (pin_pairing_with_coordinate(c, k, xi.surface))
      xi.coords[k] = xi.mod(xi.coords[k] + inc);
}

}  // namespace detail

/// tau_c acting in coordinates: q(x) <- q(x) + <c,x>(q(c) - Mon(D^2)).
/// The increment is 2-torsion, so the exponent does not change the result;
/// it is still recorded in certificates.  One-sided curves are rejected.
inline PinStructure twist_pin(const PinStructure& xi, const TwistLetter& letter) {
  PinStructure out = xi;
  CurveClass c;
  std::int64_t qc = 0;
  if (letter.named()) {
    c = homology_class(letter.as_named(), xi.surface);
    if (c.is_arc)
      throw std::invalid_argument("twist_pin: cannot twist along the arc " +
                                  letter.as_named().name());
    qc = q_eval_pin(xi, c);
  } else {
    c = letter.as_formal().cls;
    c.validate_on(xi.surface);
    if (c.is_arc) throw std::invalid_argument("twist_pin: cannot twist along an arc class");
    qc = letter.as_formal().q;
    if (xi.sign == PinSign::Minus && qc % 2 != 0)
      throw std::invalid_argument("twist_pin: Pin- twist curves have q in {0,2}");
  }
  if (!two_sided(c, xi.surface))
    throw std::invalid_argument("twist_pin: curve is one-sided");
  detail::twist_pin_in_place(out, c, qc);
  return out;
}

inline PinStructure twist_pin(const PinStructure& xi, const NamedCurve& c,
                              std::int64_t exponent = 1) {
  if (exponent != 1 && exponent != -1)
    throw std::invalid_argument("twist_pin: exponent must be +1 or -1");
  return twist_pin(xi, TwistLetter(c, exponent));
}

/// Crosscap slides act trivially here: the model sees mapping classes only
/// through homology, on which they are the identity.
inline PinStructure crosscap_slide(const PinStructure& xi) { return xi; }

inline PinStructure apply_word_pin(const PinStructure& xi, const TwistWord& w) {
  PinStructure cur = xi;
  for (const auto& l : w.letters) cur = twist_pin(cur, l);
  return cur;
}

/// The invariants classifying orbits:
///   Pin+:  A = sum q(a_i) in Z/2,
///   Pin-:  A = #{q(a_i) = 1} - sum_j delta_j * (q(r_j)/2) in Z/4,
/// with q(r_j)/2 mapping {0,2} to {0,1}.
inline std::int64_t invariant_A(const PinStructure& xi) {
  if (auto rep = validate(xi); !rep)
    throw std::invalid_argument("invariant_A: invalid structure: " + rep.violation);
  const int n = xi.surface.genus, b = xi.surface.b();
  if (xi.sign == PinSign::Plus) {
    std::int64_t v = 0;
    for (int i = 1; i <= n; ++i) v += xi.qa(i);
    return v & 1;
  }
  std::int64_t v = 0;
  for (int i = 1; i <= n; ++i)
    if (xi.qa(i) == 1) ++v;
  for (int j = 1; j <= b; ++j) v -= xi.delta[j] * (xi.qr(j) / 2);
  return xi.mod(v);
}

/// Torsor action of H^1(F, dF; Z/2): adds g (Pin+) or 2g (Pin-) to the
/// coordinates.
inline PinStructure torsor_pin(const PinStructure& xi, const std::vector<std::int64_t>& g) {
  if (g.size() != xi.coords.size())
    throw std::invalid_argument("torsor_pin: dimension mismatch");
  PinStructure out = xi;
  const std::int64_t scale = xi.sign == PinSign::Plus ? 1 : 2;
  for (std::size_t k = 0; k < g.size(); ++k)
    out.coords[k] = out.mod(out.coords[k] + scale * (((g[k] % 2) + 2) % 2));
  return out;
}

/// Predicted A(g . xi) via the closed torsor formulas:
///   Pin+:  A(xi) + sum g(a_i),
///   Pin-:  A(xi) + sum g(a_i)(q(a_i) - 2) - sum delta_j g(r_j).
inline std::int64_t torsor_effect_on_A(const PinStructure& xi,
                                       const std::vector<std::int64_t>& g) {
  if (g.size() != xi.coords.size())
    throw std::invalid_argument("torsor_effect_on_A: dimension mismatch");
  const std::int64_t A = invariant_A(xi);
  const int n = xi.surface.genus, b = xi.surface.b();
  auto bit = [&](std::size_t k) { return ((g[k] % 2) + 2) % 2; };
  if (xi.sign == PinSign::Plus) {
    std::int64_t v = A;
    for (int i = 0; i < n; ++i) v += bit(i);
    return v & 1;
  }
  std::int64_t v = A;
  for (int i = 1; i <= n; ++i) v += bit(i - 1) * (xi.qa(i) - 2);
  for (int j = 1; j <= b; ++j) v -= xi.delta[j] * bit(n + j - 1);
  return xi.mod(v);
}

struct PinNormalForm {
  PinStructure representative;
  TwistWord word;
  bool complete = true;  // canonical completeness holds for n >= 3
};

namespace detail {

// tau_{a_i + a_j}: Pin+ sends (A_i, A_j) to (A_j+1, A_i+1); Pin- swaps.
inline void pin_pair_move(PinStructure& s, int i, int j, TwistWord& w) {
  const NamedCurve c = NamedCurve::pair_sum(std::min(i, j), std::max(i, j));
  s = twist_pin(s, TwistLetter(c, 1));
  w.push(c, 1);
}

// Restores the a-part of a Pin+ structure to (0,1,0,...) for A = 1 or
// (0,1,1,0,...) for A = 0.  Requires n >= 3; the moves permute a pair and
// add 1 to both.
inline void pin_plus_normalize_a(PinStructure& s, TwistWord& w) {
  const int n = s.surface.genus;
  auto ones = [&]() {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
      if (s.qa(i) == 1) v.push_back(i);
    return v;
  };
  // Remove pairs of ones.
  for (auto v = ones(); v.size() >= 2; v = ones()) pin_pair_move(s, v[0], v[1], w);
  auto v = ones();
  if (v.empty()) {
    pin_pair_move(s, 2, 3, w);  // (0,...,0) -> (0,1,1,0,...)
    return;
  }
  const int p = v[0];
  if (p != 2) {
    // Move the single 1 from position p to position 2 through a helper.
    int helper = (p == 1) ? 3 : 1;
    pin_pair_move(s, 2, helper, w);  // creates a pair of ones at {2, helper}
    pin_pair_move(s, p, helper, w);  // annihilates {p, helper}
  }
}

}  // namespace detail

/// Canonical representative and certificate.
///
/// Pin+: a-part (0,1,0,...,0) for A = 1 or (0,1,1,0,...,0) for A = 0, all
/// R_j = 0.  Pin-: a-part sorted to (1,...,1,3,...,3) with #1 = A in
/// {0,1,2,3}, all R_j = 0.  Below n = 3 the reachable reduction is
/// returned with complete == false.
inline PinNormalForm normal_form_pin(const PinStructure& xi) {
  if (xi.surface.genus < 1) throw std::invalid_argument("normal_form_pin: needs n >= 1");
  if (auto rep = validate(xi); !rep)
    throw std::invalid_argument("normal_form_pin: invalid structure: " + rep.violation);
  const int n = xi.surface.genus, b = xi.surface.b();
  PinNormalForm nf;
  nf.representative = xi;
  nf.complete = n >= 3;
  PinStructure& s = nf.representative;
  TwistWord& w = nf.word;

  auto push_twist = [&](const NamedCurve& c) {
    s = twist_pin(s, TwistLetter(c, 1));
    w.push(c, 1);
  };

  if (xi.sign == PinSign::Plus) {
    if (n >= 3) detail::pin_plus_normalize_a(s, w);
    // Clear the arc coordinates.  For delta_j = 1 the move is the twist
    // along (a_1 + a_2) # d_j, which needs q(a_1) + q(a_2) = 1; it also
    // flips a_1 and a_2, keeping that sum intact.
    for (int j = 1; j <= b; ++j) {
      if (s.qr(j) == 0) continue;
      if (s.delta[j] == 0) {
        push_twist(NamedCurve::boundary(j));
      } else if (n >= 2 && (s.qa(1) + s.qa(2)) % 2 == 1) {
        push_twist(NamedCurve::pair_boundary_sum(1, 2, j));
      }
      // otherwise: not clearable with the implemented moves (n < 3)
    }
    if (n >= 3) detail::pin_plus_normalize_a(s, w);
    return nf;
  }

  // Pin-.
  for (int j = 1; j <= b; ++j) {
    if (s.qr(j) == 0) continue;
    if (s.delta[j] == 0) {
      push_twist(NamedCurve::boundary(j));
      continue;
    }
    // delta_j = 2: twist along (a_s + a_t) # d_j for a monochromatic pair.
    int si = 0, ti = 0;
    for (int i = 1; i <= n && !si; ++i)
      for (int k = i + 1; k <= n && !si; ++k)
        if (s.qa(i) == s.qa(k)) si = i, ti = k;
    if (si) push_twist(NamedCurve::pair_boundary_sum(si, ti, j));
    // otherwise: no monochromatic pair exists (n < 3), leave R_j
  }
  // Sort the a-part: 1s first, via pure swaps tau_{a_i + a_j}.
  for (int i = 1; i <= n; ++i) {
    int best = i;
    for (int k = i + 1; k <= n; ++k)
      if (s.qa(k) < s.qa(best)) best = k;
    if (best != i && s.qa(best) != s.qa(i)) detail::pin_pair_move(s, i, best, w);
  }
  // Reduce #1 below 4 via the quadruple move (1,1,1,1) -> (3,3,3,3),
  // re-sorting after each application.
  if (n >= 4) {
    auto count_ones = [&]() {
      int c = 0;
      for (int i = 1; i <= n; ++i)
        if (s.qa(i) == 1) ++c;
      return c;
    };
    while (count_ones() >= 4) {
      push_twist(NamedCurve::quad_sum(1, 2, 3, 4));
      for (int i = 1; i <= n; ++i) {
        int best = i;
        for (int k = i + 1; k <= n; ++k)
          if (s.qa(k) < s.qa(best)) best = k;
        if (best != i && s.qa(best) != s.qa(i)) detail::pin_pair_move(s, i, best, w);
      }
    }
  }
  return nf;
}

}  // namespace spinmcg
