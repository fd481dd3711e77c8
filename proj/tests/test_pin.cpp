#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <spinmcg/pin.hpp>

using namespace spinmcg;

namespace {

PinStructure mk(PinSign sign, int n, int B, std::vector<std::int64_t> coords,
                std::vector<std::int64_t> delta) {
  return PinStructure(sign, SurfaceSpec{false, n, B}, std::move(coords), std::move(delta));
}

// Every coordinate tuple of the given sign, as raw vectors.
std::vector<std::vector<std::int64_t>> all_coords(PinSign sign, int n, int b) {
  std::vector<std::vector<std::int64_t>> out;
  const int total = n + b;
  for (int code = 0; code < (1 << total); ++code) {
    std::vector<std::int64_t> v(total);
    for (int k = 0; k < total; ++k) {
      const int bit = (code >> k) & 1;
      if (sign == PinSign::Plus)
        v[k] = bit;
      else
        v[k] = k < n ? 1 + 2 * bit : 2 * bit;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> valid_deltas(PinSign sign, int n, int B) {
  std::vector<std::vector<std::int64_t>> out;
  const std::int64_t hi = sign == PinSign::Plus ? 1 : 2;
  std::vector<std::int64_t> cur(B, 0);
  while (true) {
    std::int64_t s = 0;
    for (auto v : cur) s += v;
    if (sign == PinSign::Plus ? ((s - n) % 2 == 0) : (s % 4 == 0)) out.push_back(cur);
    int k = B - 1;
    while (k >= 0 && (cur[k] += hi) > hi) cur[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("validation catches range and boundary-sum violations") {
  CHECK(validate(mk(PinSign::Plus, 3, 1, {0, 1, 0}, {1})));
  CHECK_FALSE(validate(mk(PinSign::Plus, 3, 1, {0, 1, 0}, {0})));
  CHECK_FALSE(validate(mk(PinSign::Minus, 3, 1, {1, 3, 1}, {2})));
  CHECK_FALSE(validate(mk(PinSign::Minus, 3, 1, {0, 3, 1}, {0})));
  CHECK(validate(mk(PinSign::Minus, 3, 2, {1, 3, 1, 2}, {2, 2})));
  CHECK_FALSE(validate(mk(PinSign::Minus, 3, 2, {1, 3, 1, 1}, {0, 0})));
}

TEST_CASE("q_eval_pin on basis elements and small sums") {
  const PinStructure xi = mk(PinSign::Plus, 3, 1, {0, 1, 1}, {1});
  auto q = [&](const CurveClass& c) { return q_eval_pin(xi, c); };
  CHECK(q(homology_class(NamedCurve::a(1), xi.surface)) == 0);
  CHECK(q(homology_class(NamedCurve::a(2), xi.surface)) == 1);
  // a1 + a2 with disjoint representatives: values add
  CHECK(q(homology_class(NamedCurve::pair_sum(1, 2), xi.surface)) == 1);
  // 2a1 + a2 expands as (a1) + (a1 + a2) with <a1, a1+a2> = 1
  CurveClass c;
  c.A = {2, 1, 0};
  c.lambda = {0};
  CHECK(q(c) == ((1 + 1) & 1));

  const PinStructure xm = mk(PinSign::Minus, 3, 2, {1, 3, 3, 2}, {2, 2});
  CHECK(q_eval_pin(xm, homology_class(NamedCurve::a(2), xm.surface)) == 3);
  CHECK(q_eval_pin(xm, homology_class(NamedCurve::pair_sum(1, 2), xm.surface)) == 0);
  CHECK(q_eval_pin(xm, homology_class(NamedCurve::arc(1), xm.surface)) == 2);
  CHECK(q_eval_pin(xm, homology_class(NamedCurve::boundary(1), xm.surface)) == 2);
}

TEST_CASE("pin twists follow the displayed case analysis") {
  // Pin+: tau_{a1+a2} sends (A1, A2, A3) to (1+A2, 1+A1, A3)
  for (const auto& v : all_coords(PinSign::Plus, 3, 0)) {
    const PinStructure xi = mk(PinSign::Plus, 3, 1, v, {1});
    const PinStructure t = twist_pin(xi, NamedCurve::pair_sum(1, 2));
    CHECK(t.coords[0] == ((1 + v[1]) & 1));
    CHECK(t.coords[1] == ((1 + v[0]) & 1));
    CHECK(t.coords[2] == v[2]);
  }
  // Pin-: tau_{a1+a2} swaps the two entries
  for (const auto& v : all_coords(PinSign::Minus, 3, 0)) {
    const PinStructure xi = mk(PinSign::Minus, 3, 1, v, {0});
    const PinStructure t = twist_pin(xi, NamedCurve::pair_sum(1, 2));
    CHECK(t.coords == std::vector<std::int64_t>{v[1], v[0], v[2]});
  }
  // Pin-: the quadruple move replaces (3,3,3,3) by (1,1,1,1)
  {
    const PinStructure xi = mk(PinSign::Minus, 4, 1, {3, 3, 3, 3}, {0});
    const PinStructure t = twist_pin(xi, NamedCurve::quad_sum(1, 2, 3, 4));
    CHECK(t.coords == std::vector<std::int64_t>{1, 1, 1, 1});
  }
  // zero increment: q(c) = Mon(D^2) acts trivially
  {
    const PinStructure xi = mk(PinSign::Minus, 2, 2, {1, 1, 2}, {0, 0});
    // q(a1+a2) = 2 = Mon(D^2)
    CHECK(twist_pin(xi, NamedCurve::pair_sum(1, 2)) == xi);
  }
  // exponents collapse
  {
    const PinStructure xi = mk(PinSign::Plus, 3, 1, {1, 0, 0}, {1});
    CHECK(twist_pin(xi, NamedCurve::pair_sum(1, 3), 1) ==
          twist_pin(xi, NamedCurve::pair_sum(1, 3), -1));
  }
  // one-sided curves are rejected
  CHECK_THROWS_AS(twist_pin(mk(PinSign::Plus, 3, 1, {0, 0, 0}, {1}), NamedCurve::a(1)),
                  std::invalid_argument);
}

TEST_CASE("crosscap slides act trivially") {
  const PinStructure xi = mk(PinSign::Minus, 3, 1, {1, 3, 1}, {0});
  CHECK(crosscap_slide(xi) == xi);
  CHECK(crosscap_slide(crosscap_slide(xi)) == xi);
  const PinStructure t = twist_pin(xi, NamedCurve::pair_sum(1, 2));
  CHECK(crosscap_slide(t) == twist_pin(crosscap_slide(xi), NamedCurve::pair_sum(1, 2)));
}

TEST_CASE("the invariants A+ and A-") {
  CHECK(invariant_A(mk(PinSign::Plus, 3, 1, {0, 1, 0}, {1})) == 1);
  CHECK(invariant_A(mk(PinSign::Minus, 3, 1, {1, 3, 3}, {0})) == 1);
  CHECK(invariant_A(mk(PinSign::Minus, 3, 1, {1, 1, 1}, {0})) == 3);
  // the arc correction enters with delta
  CHECK(invariant_A(mk(PinSign::Minus, 3, 2, {1, 1, 1, 2}, {2, 2})) ==
        ((3 - 2) % 4 + 4) % 4);
  CHECK_THROWS_AS(invariant_A(mk(PinSign::Minus, 3, 1, {1, 3, 1}, {2})),
                  std::invalid_argument);
}

TEST_CASE("invariance of A under every two-sided catalog twist") {
  for (PinSign sign : {PinSign::Plus, PinSign::Minus})
    for (int n : {2, 3, 4})
      for (int B : {1, 2}) {
        const SurfaceSpec S{false, n, B};
        const auto gens = catalog(S);
        for (const auto& d : valid_deltas(sign, n, B))
          for (const auto& v : all_coords(sign, n, B - 1)) {
            const PinStructure xi = mk(sign, n, B, v, d);
            const std::int64_t a = invariant_A(xi);
            for (const auto& c : gens) {
              if (c.is_arc() || !two_sided(homology_class(c, S), S)) continue;
              CHECK(invariant_A(twist_pin(xi, c)) == a);
            }
          }
      }
}

TEST_CASE("torsor action and its effect on A") {
  const PinStructure xi = mk(PinSign::Minus, 3, 1, {1, 3, 1}, {0});
  CHECK(torsor_pin(xi, {0, 0, 0}) == xi);
  CHECK(torsor_pin(xi, {1, 0, 0}).coords == std::vector<std::int64_t>{3, 3, 1});

  // free transitive action: all shifts from one point give every valid tuple
  for (PinSign sign : {PinSign::Plus, PinSign::Minus}) {
    const PinStructure base =
        sign == PinSign::Plus ? mk(PinSign::Plus, 2, 2, {0, 0, 0}, {1, 1})
                              : mk(PinSign::Minus, 2, 2, {1, 1, 0}, {2, 2});
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& g : all_coords(PinSign::Plus, 2, 1))
      seen.insert(torsor_pin(base, g).coords);
    CHECK(seen.size() == 8);
    for (const auto& v : all_coords(sign, 2, 1)) CHECK(seen.count(v) == 1);
  }

  // prediction agreement, exhaustively
  for (PinSign sign : {PinSign::Plus, PinSign::Minus})
    for (int n : {1, 2, 3, 4})
      for (int B : {1, 2, 3}) {
        if (n + B - 1 > 6) continue;
        for (const auto& d : valid_deltas(sign, n, B))
          for (const auto& v : all_coords(sign, n, B - 1)) {
            const PinStructure xi = mk(sign, n, B, v, d);
            for (const auto& g : all_coords(PinSign::Plus, n, B - 1))
              CHECK(torsor_effect_on_A(xi, g) == invariant_A(torsor_pin(xi, g)));
          }
      }
}

TEST_CASE("pin normal forms and certificates") {
  {
    const PinStructure xi = mk(PinSign::Plus, 3, 1, {1, 1, 1}, {1});
    const PinNormalForm nf = normal_form_pin(xi);
    CHECK(nf.representative.coords == std::vector<std::int64_t>{0, 1, 0});
    CHECK(apply_word_pin(xi, nf.word) == nf.representative);
    CHECK(nf.complete);
  }
  {
    // A = 0 class: sorted all-3 representative
    const PinStructure xi = mk(PinSign::Minus, 4, 1, {3, 3, 3, 3}, {0});
    const PinNormalForm nf = normal_form_pin(xi);
    CHECK(nf.representative.coords == std::vector<std::int64_t>{3, 3, 3, 3});
    CHECK(normal_form_pin(mk(PinSign::Minus, 4, 1, {1, 1, 1, 1}, {0})).representative.coords ==
          std::vector<std::int64_t>{3, 3, 3, 3});
  }
  {
    const PinStructure xi = mk(PinSign::Minus, 3, 1, {1, 3, 3}, {0});
    const PinNormalForm nf = normal_form_pin(xi);
    CHECK(nf.representative == xi);
    CHECK(nf.word.empty());
  }
  // exhaustive soundness and canonicality on small boxes
  for (PinSign sign : {PinSign::Plus, PinSign::Minus})
    for (int n : {1, 2, 3, 4})
      for (int B : {1, 2})
        for (const auto& d : valid_deltas(sign, n, B))
          for (const auto& v : all_coords(sign, n, B - 1)) {
            const PinStructure xi = mk(sign, n, B, v, d);
            const PinNormalForm nf = normal_form_pin(xi);
            REQUIRE(apply_word_pin(xi, nf.word) == nf.representative);
            CHECK(nf.complete == (n >= 3));
            if (n >= 3) {
              // all arc coordinates cleared, invariant preserved
              for (int j = 1; j < B; ++j) CHECK(nf.representative.qr(j) == 0);
              CHECK(invariant_A(nf.representative) == invariant_A(xi));
              // orbit consistency under every generator
              for (const auto& c : catalog(xi.surface)) {
                if (c.is_arc() || !two_sided(homology_class(c, xi.surface), xi.surface))
                  continue;
                CHECK(normal_form_pin(twist_pin(xi, c)).representative == nf.representative);
              }
            }
          }
}

TEST_CASE("q_eval_pin depends only on the homology class") {
  // adding 2 to a Pin+ coefficient or 4 to nothing: reductions agree
  const PinStructure xi = mk(PinSign::Plus, 2, 1, {1, 0}, {0});
  CurveClass c1, c2;
  c1.A = {1, 1};
  c1.lambda = {0};
  c2.A = {5, -3};  // same class mod 4
  c2.lambda = {4};
  CHECK(q_eval_pin(xi, c1) == q_eval_pin(xi, c2));
}

TEST_CASE("q_eval_pin is constant along the homology relation") {
  // The first homology of the surface imposes
  // d_0 + ... + d_b + 2(a_1 + ... + a_n) = 0; adding it to any coefficient
  // vector must not change q.  This is exactly where the boundary-sum
  // constraint on delta enters.
  std::mt19937_64 rng(47);
  for (PinSign sign : {PinSign::Plus, PinSign::Minus})
    for (int n : {1, 2, 3})
      for (int B : {1, 2, 3})
        for (const auto& d : valid_deltas(sign, n, B))
          for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::int64_t> coords(n + B - 1);
            for (int i = 0; i < n; ++i)
              coords[i] = sign == PinSign::Plus ? rng() % 2 : 1 + 2 * (rng() % 2);
            for (int j = n; j < n + B - 1; ++j)
              coords[j] = sign == PinSign::Plus ? rng() % 2 : 2 * (rng() % 2);
            const PinStructure xi = mk(sign, n, B, coords, d);
            const std::int64_t m = sign == PinSign::Plus ? 4 : 2;
            CurveClass x, y;
            x.A.assign(n, 0);
            x.lambda.assign(B, 0);
            for (auto& v : x.A) v = static_cast<std::int64_t>(rng() % m);
            for (auto& v : x.lambda) v = static_cast<std::int64_t>(rng() % m);
            y = x;
            for (auto& v : y.A) v += 2;
            for (auto& v : y.lambda) v += 1;
            CHECK(q_eval_pin(xi, x) == q_eval_pin(xi, y));
          }
}
