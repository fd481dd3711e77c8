#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinmcg {

/// A compact surface with non-empty boundary.
///
/// Orientable surfaces are the Sigma_{g,B} (genus g >= 0, B >= 1 boundary
/// components, indexed 0..B-1); non-orientable surfaces are the S_{n,B}
/// (n >= 1 crosscaps).  Boundary index 0 is the distinguished one that all
/// standard arcs start from.
struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;       // g (orientable) or n (non-orientable)
  int boundaries = 1;  // B = b + 1

  constexpr int b() const { return boundaries - 1; }

  void validate() const {
    if (boundaries < 1) throw std::invalid_argument("SurfaceSpec: boundaries must be >= 1");
    if (genus < 0) throw std::invalid_argument("SurfaceSpec: genus must be >= 0");
    if (!orientable && genus < 1)
      throw std::invalid_argument("SurfaceSpec: non-orientable surfaces need genus >= 1");
  }

  /// Number of structure coordinates: 2g+b (orientable) or n+b (non-orientable).
  int coord_count() const { return orientable ? 2 * genus + b() : genus + b(); }

  constexpr bool operator==(const SurfaceSpec&) const = default;
};

enum class CurveKind {
  A,                //< a_i, 1 <= i <= genus
  B,                //< b_i (orientable), 1 <= i <= g
  T,                //< t_i (orientable), 1 <= i <= g-1
  Boundary,         //< curve parallel to boundary component j, 0 <= j <= b
  Arc,              //< arc r_j from boundary 0 to boundary j, 1 <= j <= b
  U,                //< u_i = a_g # boundary_i (orientable), 1 <= i <= b
  PairSum,          //< a_i + a_j (non-orientable), i < j
  QuadSum,          //< a_i + a_j + a_k + a_l (non-orientable), i < j < k < l
  PairBoundarySum,  //< (a_i + a_j) # boundary_k (non-orientable), i < j, 1 <= k <= b
};

/// A curve or arc from the fixed catalog.  Every value that passes
/// validate_on() is realizable as a simple closed curve or simple arc on
/// its surface.
struct NamedCurve {
  CurveKind kind = CurveKind::A;
  std::array<int, 4> idx{0, 0, 0, 0};  // indices as required by kind

  static NamedCurve a(int i) { return {CurveKind::A, {i}}; }
  static NamedCurve b(int i) { return {CurveKind::B, {i}}; }
  static NamedCurve t(int i) { return {CurveKind::T, {i}}; }
  static NamedCurve boundary(int j) { return {CurveKind::Boundary, {j}}; }
  static NamedCurve arc(int j) { return {CurveKind::Arc, {j}}; }
  static NamedCurve u(int i) { return {CurveKind::U, {i}}; }
  static NamedCurve pair_sum(int i, int j) { return {CurveKind::PairSum, {i, j}}; }
  static NamedCurve quad_sum(int i, int j, int k, int l) {
    return {CurveKind::QuadSum, {i, j, k, l}};
  }
  static NamedCurve pair_boundary_sum(int i, int j, int k) {
    return {CurveKind::PairBoundarySum, {i, j, k}};
  }

  bool is_arc() const { return kind == CurveKind::Arc; }

  constexpr bool operator==(const NamedCurve&) const = default;

  std::string name() const {
    switch (kind) {
      case CurveKind::A: return "a" + std::to_string(idx[0]);
      case CurveKind::B: return "b" + std::to_string(idx[0]);
      case CurveKind::T: return "t" + std::to_string(idx[0]);
      case CurveKind::Boundary: return "d" + std::to_string(idx[0]);
      case CurveKind::Arc: return "r" + std::to_string(idx[0]);
      case CurveKind::U: return "u" + std::to_string(idx[0]);
      case CurveKind::PairSum:
        return "a" + std::to_string(idx[0]) + "+a" + std::to_string(idx[1]);
      case CurveKind::QuadSum:
        return "a" + std::to_string(idx[0]) + "+a" + std::to_string(idx[1]) + "+a" +
               std::to_string(idx[2]) + "+a" + std::to_string(idx[3]);
      case CurveKind::PairBoundarySum:
        return "a" + std::to_string(idx[0]) + "+a" + std::to_string(idx[1]) + "+d" +
               std::to_string(idx[2]);
    }
    return "?";
  }

  void validate_on(const SurfaceSpec& S) const {
    auto fail = [&](const char* why) {
      throw std::invalid_argument("NamedCurve " + name() + ": " + why);
    };
    const int g = S.genus, b = S.b();
    switch (kind) {
      case CurveKind::A:
        if (idx[0] < 1 || idx[0] > g) fail("index out of range");
        break;
      case CurveKind::B:
        if (!S.orientable) fail("b_i needs an orientable surface");
        if (idx[0] < 1 || idx[0] > g) fail("index out of range");
        break;
      case CurveKind::T:
        if (!S.orientable) fail("t_i needs an orientable surface");
        if (idx[0] < 1 || idx[0] > g - 1) fail("needs 1 <= i <= g-1");
        break;
      case CurveKind::Boundary:
        if (idx[0] < 0 || idx[0] > b) fail("index out of range");
        break;
      case CurveKind::Arc:
        if (idx[0] < 1 || idx[0] > b) fail("needs 1 <= j <= b");
        break;
      case CurveKind::U:
        if (!S.orientable) fail("u_i needs an orientable surface");
        if (g < 1) fail("u_i needs g >= 1");
        if (idx[0] < 1 || idx[0] > b) fail("needs 1 <= i <= b");
        break;
      case CurveKind::PairSum:
        if (S.orientable) fail("a_i+a_j needs a non-orientable surface");
        if (!(1 <= idx[0] && idx[0] < idx[1] && idx[1] <= g)) fail("needs 1 <= i < j <= n");
        break;
      case CurveKind::QuadSum:
        if (S.orientable) fail("quad sum needs a non-orientable surface");
        if (!(1 <= idx[0] && idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3] &&
              idx[3] <= g))
          fail("needs 1 <= i < j < k < l <= n");
        break;
      case CurveKind::PairBoundarySum:
        if (S.orientable) fail("pair-boundary sum needs a non-orientable surface");
        if (!(1 <= idx[0] && idx[0] < idx[1] && idx[1] <= g)) fail("needs 1 <= i < j <= n");
        if (idx[2] < 1 || idx[2] > b) fail("needs 1 <= k <= b");
        break;
    }
  }
};

/// Homology data of a simple closed curve or standard arc.
///
/// Orientable: X, Y hold the a_i / b_i coefficients, lambda the boundary
/// coefficients.  Non-orientable: A holds the a_i coefficients (read mod 4
/// in Pin+ contexts, mod 2 in Pin- contexts), lambda the boundary
/// coefficients.  Arcs carry the index of the standard arc they are
/// modelled on; the cycle part then describes the closed summand.
struct CurveClass {
  std::vector<std::int64_t> X;       // orientable a-coefficients
  std::vector<std::int64_t> Y;       // orientable b-coefficients
  std::vector<std::int64_t> A;       // non-orientable a-coefficients
  std::vector<std::int64_t> lambda;  // boundary coefficients
  bool is_arc = false;
  int arc_index = 0;

  bool operator==(const CurveClass&) const = default;

  void validate_on(const SurfaceSpec& S) const {
    if (S.orientable) {
      if (static_cast<int>(X.size()) != S.genus || static_cast<int>(Y.size()) != S.genus ||
          !A.empty())
        throw std::invalid_argument("CurveClass: dimension mismatch with surface");
    } else {
      if (static_cast<int>(A.size()) != S.genus || !X.empty() || !Y.empty())
        throw std::invalid_argument("CurveClass: dimension mismatch with surface");
    }
    if (static_cast<int>(lambda.size()) != S.boundaries)
      throw std::invalid_argument("CurveClass: lambda dimension mismatch");
    if (is_arc && (arc_index < 1 || arc_index > S.b()))
      throw std::invalid_argument("CurveClass: arc index out of range");
  }
};

/// The catalog of named curves and arcs, in the fixed deterministic order
/// used everywhere (orbit generators, certificates, reports).
inline std::vector<NamedCurve> catalog(const SurfaceSpec& S) {
  S.validate();
  std::vector<NamedCurve> out;
  const int g = S.genus, b = S.b();
  if (S.orientable) {
    for (int i = 1; i <= g; ++i) {
      out.push_back(NamedCurve::a(i));
      out.push_back(NamedCurve::b(i));
    }
    for (int i = 1; i <= g - 1; ++i) out.push_back(NamedCurve::t(i));
    for (int j = 0; j <= b; ++j) out.push_back(NamedCurve::boundary(j));
    for (int j = 1; j <= b; ++j) out.push_back(NamedCurve::arc(j));
    if (g >= 1)
      for (int i = 1; i <= b; ++i) out.push_back(NamedCurve::u(i));
  } else {
    for (int i = 1; i <= g; ++i) out.push_back(NamedCurve::a(i));
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) out.push_back(NamedCurve::pair_sum(i, j));
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        for (int k = j + 1; k <= g; ++k)
          for (int l = k + 1; l <= g; ++l) out.push_back(NamedCurve::quad_sum(i, j, k, l));
    for (int j = 0; j <= b; ++j) out.push_back(NamedCurve::boundary(j));
    for (int j = 1; j <= b; ++j) out.push_back(NamedCurve::arc(j));
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j)
        for (int k = 1; k <= b; ++k) out.push_back(NamedCurve::pair_boundary_sum(i, j, k));
  }
  return out;
}

/// Homology class of a catalog curve.  t_i is homologous to a_{i+1} - a_i
/// and u_i to a_g + boundary_i; the other entries are basis elements or
/// the indicated sums.
inline CurveClass homology_class(const NamedCurve& c, const SurfaceSpec& S) {
  S.validate();
  c.validate_on(S);
  CurveClass cc;
  cc.lambda.assign(S.boundaries, 0);
  if (S.orientable) {
    cc.X.assign(S.genus, 0);
    cc.Y.assign(S.genus, 0);
  } else {
    cc.A.assign(S.genus, 0);
  }
  switch (c.kind) {
    case CurveKind::A:
      if (S.orientable)
        cc.X[c.idx[0] - 1] = 1;
      else
        cc.A[c.idx[0] - 1] = 1;
      break;
    case CurveKind::B: cc.Y[c.idx[0] - 1] = 1; break;
    case CurveKind::T:
      cc.X[c.idx[0] - 1] = -1;
      cc.X[c.idx[0]] = 1;
      break;
    case CurveKind::Boundary: cc.lambda[c.idx[0]] = 1; break;
    case CurveKind::Arc:
      cc.is_arc = true;
      cc.arc_index = c.idx[0];
      break;
    case CurveKind::U:
      cc.X[S.genus - 1] = 1;
      cc.lambda[c.idx[0]] = 1;
      break;
    case CurveKind::PairSum:
      cc.A[c.idx[0] - 1] = 1;
      cc.A[c.idx[1] - 1] = 1;
      break;
    case CurveKind::QuadSum:
      for (int t = 0; t < 4; ++t) cc.A[c.idx[t] - 1] = 1;
      break;
    case CurveKind::PairBoundarySum:
      cc.A[c.idx[0] - 1] = 1;
      cc.A[c.idx[1] - 1] = 1;
      cc.lambda[c.idx[2]] = 1;
      break;
  }
  return cc;
}

/// Algebraic intersection number.  Orientable: the symplectic pairing
/// <a_i, b_i> = +1 with boundary classes central; an arc r_j picks up
/// lambda_j - lambda_0 from a cycle crossing it.  Non-orientable: the
/// mod-2 pairing with <a_i, a_i> = 1; boundary classes central; arcs as
/// above, mod 2.  Arc-arc pairings are 0.
inline std::int64_t intersect(const CurveClass& x, const CurveClass& y, const SurfaceSpec& S) {
  x.validate_on(S);
  y.validate_on(S);
  std::int64_t v = 0;
  if (S.orientable) {
    for (int i = 0; i < S.genus; ++i) v += x.X[i] * y.Y[i] - x.Y[i] * y.X[i];
    if (y.is_arc && !x.is_arc) v += x.lambda[y.arc_index] - x.lambda[0];
    if (x.is_arc && !y.is_arc) v -= y.lambda[x.arc_index] - y.lambda[0];
    return v;
  }
  for (int i = 0; i < S.genus; ++i) v += x.A[i] * y.A[i];
  if (y.is_arc && !x.is_arc) v += x.lambda[y.arc_index] + x.lambda[0];
  if (x.is_arc && !y.is_arc) v += y.lambda[x.arc_index] + y.lambda[0];
  return ((v % 2) + 2) % 2;
}

/// Whether a Dehn twist along a curve in this class is defined
/// (non-orientable surfaces; orientable classes are always two-sided).
inline bool two_sided(const CurveClass& x, const SurfaceSpec& S) {
  x.validate_on(S);
  if (S.orientable) return true;
  std::int64_t s = 0;
  for (auto v : x.A) s += v;
  return s % 2 == 0;
}

}  // namespace spinmcg
