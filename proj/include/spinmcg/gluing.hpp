#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "orbits.hpp"
#include "pin.hpp"
#include "rspin.hpp"

namespace spinmcg {

/// A structure with designated outgoing/incoming boundaries.  Boundary
/// ordering is outgoing-first: outgoing = {0, ..., k}, incoming =
/// {k+1, ..., b}, so the structure's own coordinates already compute the
/// invariant with respect to the cobordism ordering.
struct StructuredCobordism {
  std::variant<ThetaStructure, PinStructure> structure;
  std::vector<int> outgoing;
  std::vector<int> incoming;

  const SurfaceSpec& surface() const {
    return std::holds_alternative<ThetaStructure>(structure)
               ? std::get<ThetaStructure>(structure).surface
               : std::get<PinStructure>(structure).surface;
  }

  std::int64_t delta_at(int boundary) const {
    return std::holds_alternative<ThetaStructure>(structure)
               ? std::get<ThetaStructure>(structure).delta[boundary]
               : std::get<PinStructure>(structure).delta[boundary];
  }

  void validate() const {
    const int B = surface().boundaries;
    if (static_cast<int>(outgoing.size() + incoming.size()) != B)
      throw std::invalid_argument("StructuredCobordism: boundary partition has wrong size");
    for (int j = 0; j < static_cast<int>(outgoing.size()); ++j)
      if (outgoing[j] != j)
        throw std::invalid_argument(
            "StructuredCobordism: outgoing boundaries must be ordered first");
    for (int j = 0; j < static_cast<int>(incoming.size()); ++j)
      if (incoming[j] != static_cast<int>(outgoing.size()) + j)
        throw std::invalid_argument(
            "StructuredCobordism: incoming boundaries must follow the outgoing ones");
  }
};

/// Glues a pair of pants (coordinates (R1, R2), boundary condition
/// pants_delta) along its last boundary to boundary 0 of xi, producing the
/// structure on the surface with one more boundary:
///   (A_1, B_1, ..., A_g, B_g, R_1 + R2 + 1, ..., R_{b-1} + R2 + 1, R1)
/// with boundary condition (pants_delta_0, delta_1, ..., delta_{b-1},
/// pants_delta_1).  Only attachment at boundary 0 carries a coordinate
/// formula; other attachment indices are rejected.
inline ThetaStructure glue_pants(const ThetaStructure& xi, std::int64_t pants_r1,
                                 std::int64_t pants_r2,
                                 const std::vector<std::int64_t>& pants_delta,
                                 int attachment_boundary = 0) {
  if (xi.surface.genus < 1) throw std::invalid_argument("glue_pants: needs g >= 1");
  if (attachment_boundary != 0)
    throw std::invalid_argument(
        "glue_pants: only attachment at boundary 0 is supported");
  if (pants_delta.size() != 3)
    throw std::invalid_argument("glue_pants: a pair of pants has three boundaries");
  const CoeffRing& R = xi.ring;
  if (R.canon(pants_delta[2]) != xi.delta[0])
    throw std::invalid_argument("glue_pants: delta mismatch at the glued boundary");

  const int g = xi.surface.genus;
  const int B = xi.surface.boundaries;
  SurfaceSpec glued{true, g, B + 1};
  std::vector<std::int64_t> coords(xi.coords.begin(), xi.coords.begin() + 2 * g);
  const std::int64_t extension = R.canon(pants_r2 + 1);
  for (int j = 1; j <= B - 1; ++j) coords.push_back(R.add(xi.qr(j), extension));
  coords.push_back(R.canon(pants_r1));
  std::vector<std::int64_t> delta;
  delta.push_back(R.canon(pants_delta[0]));
  for (int j = 1; j <= B - 1; ++j) delta.push_back(xi.delta[j]);
  delta.push_back(R.canon(pants_delta[1]));
  return ThetaStructure(R, glued, std::move(coords), std::move(delta));
}

/// Orbit class of a glued surface, determined at the pi0 level.
struct Pi0Descriptor {
  StructKind kind = StructKind::RSpin;
  std::int64_t r = 2;  // rspin modulus
  SurfaceSpec surface;
  std::int64_t invariant = 0;
  bool complete = true;  // classification hypotheses hold for the glued surface
};

namespace detail {

inline std::int64_t cobordism_invariant(const StructuredCobordism& c) {
  if (std::holds_alternative<ThetaStructure>(c.structure))
    return arf(std::get<ThetaStructure>(c.structure));
  return invariant_A(std::get<PinStructure>(c.structure));
}

}  // namespace detail

/// Glues one outgoing boundary of `left` to one incoming boundary of
/// `right` and computes the glued surface's topological type and invariant
/// by the additivity laws:
///   theta_r (r even):  A(left) + A(right) + delta at the glued boundary,
///   Pin+:              A(left) + A(right),
///   Pin-:              A(left) + A(right) + delta at the glued boundary.
/// The Pin case is restricted to S_{n,1+1}-shaped cobordisms.  Gluing more
/// than one boundary at a time is not supported.
inline Pi0Descriptor glue_pi0(const StructuredCobordism& left, const StructuredCobordism& right,
                              int left_out, int right_in) {
  left.validate();
  right.validate();
  const bool theta = std::holds_alternative<ThetaStructure>(left.structure);
  if (theta != std::holds_alternative<ThetaStructure>(right.structure))
    throw std::invalid_argument("glue_pi0: mixed structure kinds");

  bool found = false;
  for (int v : left.outgoing) found |= v == left_out;
  if (!found) throw std::invalid_argument("glue_pi0: left boundary is not outgoing");
  found = false;
  for (int v : right.incoming) found |= v == right_in;
  if (!found) throw std::invalid_argument("glue_pi0: right boundary is not incoming");
  if (left.delta_at(left_out) != right.delta_at(right_in))
    throw std::invalid_argument("glue_pi0: delta mismatch at the glued boundaries");

  Pi0Descriptor out;
  const std::int64_t dglue = left.delta_at(left_out);
  if (theta) {
    const auto& L = std::get<ThetaStructure>(left.structure);
    const auto& Rt = std::get<ThetaStructure>(right.structure);
    if (L.ring != Rt.ring) throw std::invalid_argument("glue_pi0: ring mismatch");
    if (!L.ring.is_even())
      throw std::invalid_argument("glue_pi0: the additivity law needs even r");
    out.kind = StructKind::RSpin;
    out.r = L.ring.modulus;
    out.surface = SurfaceSpec{true, L.surface.genus + Rt.surface.genus,
                              L.surface.boundaries + Rt.surface.boundaries - 2};
    out.surface.validate();  // closed surfaces fall outside the model
    out.invariant = (arf(L) + arf(Rt) + dglue) & 1;
    out.complete = out.surface.genus >= 2;
    return out;
  }
  const auto& L = std::get<PinStructure>(left.structure);
  const auto& Rt = std::get<PinStructure>(right.structure);
  if (L.sign != Rt.sign) throw std::invalid_argument("glue_pi0: pin sign mismatch");
  auto pin_shape = [](const StructuredCobordism& c) {
    return c.surface().boundaries == 2 && c.outgoing.size() == 1 && c.incoming.size() == 1;
  };
  if (!pin_shape(left) || !pin_shape(right))
    throw std::invalid_argument("glue_pi0: pin gluing needs S_{n,1+1}-shaped cobordisms");
  out.kind = L.sign == PinSign::Plus ? StructKind::PinPlus : StructKind::PinMinus;
  out.surface = SurfaceSpec{false, L.surface.genus + Rt.surface.genus, 2};
  if (L.sign == PinSign::Plus)
    out.invariant = (invariant_A(L) + invariant_A(Rt)) & 1;
  else
    out.invariant = ((invariant_A(L) + invariant_A(Rt) + dglue) % 4 + 4) % 4;
  out.complete = out.surface.genus >= 3;
  return out;
}

// ---------------------------------------------------------------------------
// Genus-1 surjectivity of boundary stabilisation
// ---------------------------------------------------------------------------

struct SurjectivityWitness {
  std::vector<std::int64_t> target_representative;
  std::vector<std::int64_t> source_representative;
  std::int64_t pants_r1 = 0;
  std::int64_t pants_r2 = 0;
};

struct SurjectivityReport {
  std::int64_t r = 0;
  std::vector<std::int64_t> delta_source;
  std::vector<std::int64_t> delta_target;
  std::uint64_t source_classes = 0;
  std::uint64_t target_classes = 0;
  bool surjective = false;          // every pants value induces a surjective map
  bool any_pants_missed = false;    // some single-pants map was not surjective
  std::vector<SurjectivityWitness> witnesses;  // one per target class
};

/// Checks that gluing a pair of pants onto the first boundary of
/// Sigma_{1,B} hits every orbit class of Sigma_{1,B+1}, for every pants
/// value (R1, R2).  delta_target must extend delta_source in the middle
/// entries; the pants boundary condition is forced as
/// (delta_target_0, delta_target_B, delta_source_0).
inline SurjectivityReport check_surjectivity_genus1(std::int64_t r,
                                                    const std::vector<std::int64_t>& delta_src,
                                                    const std::vector<std::int64_t>& delta_tgt,
                                                    std::uint64_t budget = 200'000'000,
                                                    int threads = 1) {
  if (r < 1) throw std::invalid_argument("check_surjectivity_genus1: needs r >= 1");
  const int B = static_cast<int>(delta_src.size());
  if (B < 1) throw std::invalid_argument("check_surjectivity_genus1: source needs a boundary");
  if (static_cast<int>(delta_tgt.size()) != B + 1)
    throw std::invalid_argument("check_surjectivity_genus1: target needs one more boundary");
  const CoeffRing R(r);
  for (int j = 1; j <= B - 1; ++j)
    if (R.canon(delta_tgt[j]) != R.canon(delta_src[j]))
      throw std::invalid_argument(
          "check_surjectivity_genus1: target delta must extend the source delta");

  EnumerationRequest src_req{StructKind::RSpin, r, SurfaceSpec{true, 1, B}, {}, budget,
                             threads};
  for (auto v : delta_src) src_req.delta.push_back(R.canon(v));
  EnumerationRequest tgt_req{StructKind::RSpin, r, SurfaceSpec{true, 1, B + 1}, {}, budget,
                             threads};
  for (auto v : delta_tgt) tgt_req.delta.push_back(R.canon(v));

  const OrbitReport src = enumerate_orbits(src_req);
  const OrbitReport tgt = enumerate_orbits(tgt_req);
  const detail::StateCodec tgt_codec(StructKind::RSpin, r, tgt_req.surface);

  const std::vector<std::int64_t> pants_delta = {R.canon(delta_tgt[0]), R.canon(delta_tgt[B]),
                                                 R.canon(delta_src[0])};

  SurjectivityReport report;
  report.r = r;
  report.delta_source = src_req.delta;
  report.delta_target = tgt_req.delta;
  report.source_classes = src.orbit_count();
  report.target_classes = tgt.orbit_count();
  report.witnesses.resize(tgt.orbit_count());
  std::vector<bool> have_witness(tgt.orbit_count(), false);

  report.surjective = true;
  for (std::int64_t r1 = 0; r1 < r; ++r1) {
    for (std::int64_t r2 = 0; r2 < r; ++r2) {
      std::vector<bool> hit(tgt.orbit_count(), false);
      for (const auto& src_orbit : src.orbits) {
        const ThetaStructure xi = theta_from_state(src_req, src_orbit.representative);
        const ThetaStructure glued = glue_pants(xi, r1, r2, pants_delta);
        const std::uint64_t idx = tgt_codec.encode(glued.coords.data());
        const std::uint32_t oid = tgt.orbit_of_state[idx];
        hit[oid] = true;
        if (!have_witness[oid]) {
          have_witness[oid] = true;
          report.witnesses[oid] = {tgt.orbits[oid].representative, src_orbit.representative,
                                   r1, r2};
        }
      }
      for (bool h : hit)
        if (!h) {
          report.surjective = false;
          report.any_pants_missed = true;
        }
    }
  }
  for (bool h : have_witness)
    if (!h) report.surjective = false;
  return report;
}

// ---------------------------------------------------------------------------
// Diagonal solving for the stabilisation squares
// ---------------------------------------------------------------------------

struct DiagonalInput {
  StructKind kind = StructKind::RSpin;  // RSpin (even r, mod 2) or PinPlus
  std::int64_t a_top = 0;
  std::int64_t a_left = 0;
  std::int64_t a_bottom = 0;
  std::int64_t a_right = 0;
  std::int64_t delta_d = 0;  // rspin only
  std::int64_t delta_b = 0;  // rspin only
};

struct DiagonalResult {
  std::int64_t a_diagonal = 0;
  // Both triangle identities, re-checked from the output.
  bool left_triangle = false;
  bool right_triangle = false;
};

/// Solves for the diagonal invariant in a compatible stabilisation square
/// L.T = B.R:
///   theta_r (even):  A(diag) = A(right) - A(top) - delta_D, requiring
///                    A(right)+A(bottom)+delta_B = A(left)+A(top)+delta_D;
///   Pin+:            A(diag) = A(left) - A(bottom), requiring
///                    A(left)+A(top) = A(bottom)+A(right).
inline DiagonalResult solve_diagonal(const DiagonalInput& in) {
  auto m2 = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
  DiagonalResult out;
  if (in.kind == StructKind::RSpin) {
    if (m2(in.a_right + in.a_bottom + in.delta_b) != m2(in.a_left + in.a_top + in.delta_d))
      throw std::invalid_argument("solve_diagonal: incompatible square");
    out.a_diagonal = m2(in.a_right - in.a_top - in.delta_d);
    out.right_triangle = m2(out.a_diagonal + in.a_top + in.delta_d) == m2(in.a_right);
    out.left_triangle = m2(out.a_diagonal + in.a_bottom + in.delta_b) == m2(in.a_left);
  } else if (in.kind == StructKind::PinPlus) {
    if (m2(in.a_left + in.a_top) != m2(in.a_bottom + in.a_right))
      throw std::invalid_argument("solve_diagonal: incompatible square");
    out.a_diagonal = m2(in.a_left - in.a_bottom);
    out.left_triangle = m2(out.a_diagonal + in.a_bottom) == m2(in.a_left);
    out.right_triangle = m2(out.a_diagonal + in.a_top) == m2(in.a_right);
  } else {
    throw std::invalid_argument("solve_diagonal: supported kinds are rspin (even r) and pin+");
  }
  if (!out.left_triangle || !out.right_triangle)
    throw std::logic_error("solve_diagonal: postcondition failed");
  return out;
}

/// The set of invariant values realized by Pin structures on S_{n,B} with
/// the given boundary condition (a set-level question, no orbit reduction).
inline std::set<std::int64_t> realizable_invariants(PinSign sign, int n, int B,
                                                    const std::vector<std::int64_t>& delta) {
  EnumerationRequest req{sign == PinSign::Plus ? StructKind::PinPlus : StructKind::PinMinus,
                         2, SurfaceSpec{false, n, B}, delta};
  req.surface.validate();
  const detail::StateCodec codec(req.kind, 2, req.surface);
  std::set<std::int64_t> out;
  std::vector<std::int64_t> vals(codec.count);
  for (std::uint64_t s = 0; s < codec.states; ++s) {
    codec.decode(s, vals.data());
    out.insert(detail::state_invariant(req, codec, vals.data()));
  }
  return out;
}

}  // namespace spinmcg
