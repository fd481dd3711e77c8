#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <spinmcg/rspin.hpp>

using namespace spinmcg;

namespace {

ThetaStructure make(std::int64_t r, int g, int B, std::vector<std::int64_t> coords,
                    std::vector<std::int64_t> delta) {
  return ThetaStructure(CoeffRing(r), SurfaceSpec{true, g, B}, std::move(coords),
                        std::move(delta));
}

ThetaStructure random_structure(std::int64_t r, int g, int B, std::mt19937_64& rng) {
  std::vector<std::int64_t> coords(2 * g + B - 1), delta(B);
  for (auto& v : coords) v = static_cast<std::int64_t>(rng() % r);
  for (auto& v : delta) v = static_cast<std::int64_t>(rng() % r);
  return make(r, g, B, coords, delta);
}

}  // namespace

TEST_CASE("q_eval on basis and mixed classes") {
  const ThetaStructure xi = make(4, 1, 1, {1, 2}, {3});
  CHECK(q_eval(xi, homology_class(NamedCurve::a(1), xi.surface)) == 1);
  CHECK(q_eval(xi, homology_class(NamedCurve::b(1), xi.surface)) == 2);
  CHECK(q_eval(xi, homology_class(NamedCurve::boundary(0), xi.surface)) == 3);

  const ThetaStructure x2 = make(2, 2, 1, {1, 1, 0, 1}, {0});
  CurveClass c;
  c.X = {1, 0};
  c.Y = {1, 0};
  c.lambda = {0};
  CHECK(q_eval(x2, c) == 1);  // 1*1 + 1*1 + 1*1 mod 2

  // q(t_i) = q(a_{i+1}) - q(a_i)
  const ThetaStructure x3 = make(7, 2, 1, {2, 5, 6, 1}, {0});
  CHECK(q_eval(x3, homology_class(NamedCurve::t(1), x3.surface)) == x3.ring.canon(6 - 2));
}

TEST_CASE("q_eval on arc classes follows the connected-sum rule") {
  const ThetaStructure xi = make(6, 1, 3, {2, 3, 4, 5}, {1, 2, 3});
  // pure arc
  CHECK(q_eval(xi, homology_class(NamedCurve::arc(1), xi.surface)) == 4);
  // u_i is the disjoint sum a_g # d_i: q adds with no crossing term
  CHECK(q_eval(xi, homology_class(NamedCurve::u(2), xi.surface)) == xi.ring.canon(2 + 3));
}

TEST_CASE("generator twist closed forms") {
  {
    const ThetaStructure xi = make(4, 1, 1, {1, 2}, {0});
    const ThetaStructure t = twist(xi, NamedCurve::a(1), 1);
    CHECK(t.coords == std::vector<std::int64_t>{1, 0});  // B += A+1
  }
  {
    const ThetaStructure xi = make(5, 1, 1, {4, 3}, {0});  // A = -1
    CHECK(twist(xi, NamedCurve::a(1), 1) == xi);
    CHECK(twist(xi, NamedCurve::a(1), -1) == xi);
  }
  {
    const ThetaStructure xi = make(3, 2, 1, {0, 0, 0, 0}, {0});
    const ThetaStructure t = twist(xi, NamedCurve::t(1), 1);
    CHECK(t.coords == std::vector<std::int64_t>{0, 2, 0, 1});
  }
  {
    // tau_b^{+1}: A -= B+1
    const ThetaStructure xi = make(7, 1, 1, {2, 3}, {0});
    const ThetaStructure t = twist(xi, NamedCurve::b(1), 1);
    CHECK(t.coords == std::vector<std::int64_t>{xi.ring.canon(2 - 4), 3});
  }
}

TEST_CASE("named twists match formal twists through the general formula") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 7);
    const ThetaStructure xi = random_structure(r, 2, 2, rng);
    const auto cat = catalog(xi.surface);
    const NamedCurve c = cat[rng() % cat.size()];
    if (c.is_arc()) continue;
    const std::int64_t e = rng() % 2 ? 1 : -1;
    const CurveClass cls = homology_class(c, xi.surface);
    const FormalTwist f{cls, q_eval(xi, cls)};
    CHECK(twist(xi, c, e) == twist(xi, f, e));
  }
}

TEST_CASE("apply_word composes and inverts") {
  std::mt19937_64 rng(34);
  const ThetaStructure xi = random_structure(6, 2, 2, rng);
  CHECK(apply_word(xi, TwistWord{}) == xi);

  TwistWord w;
  w.push(NamedCurve::a(1), 1);
  w.push(NamedCurve::a(1), -1);
  CHECK(apply_word(xi, w) == xi);

  TwistWord random_word;
  const auto cat = catalog(xi.surface);
  for (int l = 0; l < 20; ++l) {
    const NamedCurve c = cat[rng() % cat.size()];
    if (c.is_arc()) continue;
    random_word.push(c, static_cast<std::int64_t>(rng() % 5) - 2);
  }
  CHECK(apply_word(apply_word(xi, random_word), random_word.inverse()) == xi);
}

TEST_CASE("the genus-2 parity move shifts N by two") {
  for (std::int64_t r : {5, 6, 8}) {
    for (std::int64_t n = 0; n < r; ++n) {
      const ThetaStructure xi = make(r, 2, 1, {r - 1, 0, r - 1, n}, {0});
      TwistWord move;
      move.push(NamedCurve::t(1), 2);
      move.push(NamedCurve::b(1), 1);
      move.push(NamedCurve::a(1), 2);
      move.push(NamedCurve::b(1), 1);
      const ThetaStructure out = apply_word(xi, move);
      CHECK(out.coords == std::vector<std::int64_t>{r - 1, 0, r - 1, xi.ring.canon(n + 2)});
    }
  }
}

TEST_CASE("arf evaluates the mod-2 form") {
  CHECK(arf(make(2, 2, 1, {0, 0, 0, 0}, {0})) == 0);
  CHECK(arf(make(2, 2, 1, {1, 1, 1, 1}, {0})) == 0);
  CHECK(arf(make(2, 2, 1, {1, 1, 0, 0}, {0})) == 1);
  CHECK(arf(make(4, 1, 2, {1, 1, 3}, {0, 1})) == ((1 * 1 + 3 * 1) & 1));
  CHECK(arf(make(0, 1, 1, {-3, 5}, {-2})) == 1);
  CHECK_THROWS_AS(arf(make(3, 1, 1, {0, 0}, {0})), std::invalid_argument);
}

TEST_CASE("G invariant") {
  CHECK(G_invariant(-1, -1, CoeffRing(6)) == 5);
  CHECK(G_invariant(1, 3, CoeffRing(8)) == 1);
  CHECK(G_invariant(0, 0, CoeffRing(5)) == 0);
  // parity link for even r: G(A,B) = A*B mod 2
  for (std::int64_t r : {2, 4, 6, 8})
    for (std::int64_t a = 0; a < r; ++a)
      for (std::int64_t b = 0; b < r; ++b)
        CHECK((G_invariant(a, b, CoeffRing(r)) & 1) == ((a * b) & 1));
  // invariance under the tau_{a_i}/tau_{b_i} moves
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t r = 2 + static_cast<std::int64_t>(rng() % 8);
    CoeffRing R(r);
    const std::int64_t a = static_cast<std::int64_t>(rng() % r);
    const std::int64_t b = static_cast<std::int64_t>(rng() % r);
    CHECK(G_invariant(a, R.canon(b + a + 1), R) == G_invariant(a, b, R));
    CHECK(G_invariant(R.canon(a - b - 1), b, R) == G_invariant(a, b, R));
  }
}

TEST_CASE("normal form: fixed points and certificates") {
  {
    const ThetaStructure xi = make(9, 1, 1, {8, 0}, {4});
    const NormalForm nf = normal_form(xi);
    CHECK(nf.representative == xi);
    CHECK(nf.word.empty());
  }
  {
    // r = 3, g = 2: everything reduces to (-1, 0, -1, 0)
    const SurfaceSpec S{true, 2, 1};
    for (std::int64_t code = 0; code < 81; ++code) {
      std::vector<std::int64_t> coords(4);
      std::int64_t c = code;
      for (auto& v : coords) v = c % 3, c /= 3;
      const ThetaStructure xi = make(3, 2, 1, coords, {1});
      const NormalForm nf = normal_form(xi);
      CHECK(nf.representative.coords == std::vector<std::int64_t>{2, 0, 2, 0});
      CHECK(apply_word(xi, nf.word) == nf.representative);
      CHECK(nf.complete);
    }
  }
  {
    const ThetaStructure xi = make(2, 2, 1, {1, 1, 0, 0}, {0});
    const NormalForm nf = normal_form(xi);
    CHECK(nf.representative.coords == std::vector<std::int64_t>{1, 0, 1, 1});
    CHECK(arf(nf.representative) == arf(xi));
    CHECK(apply_word(xi, nf.word) == nf.representative);
  }
  CHECK_THROWS_AS(normal_form(make(4, 0, 2, {1}, {0, 0})), std::invalid_argument);
}

TEST_CASE("normal form certificates replay exhaustively") {
  for (std::int64_t r : {2, 3, 4}) {
    for (int g : {1, 2}) {
      for (int B : {1, 2}) {
        const SurfaceSpec S{true, g, B};
        const int n = 2 * g + B - 1;
        std::int64_t states = 1;
        for (int k = 0; k < n; ++k) states *= r;
        std::vector<std::int64_t> delta(B, 0);
        if (B == 2) delta[1] = r - 1;
        for (std::int64_t code = 0; code < states; ++code) {
          std::vector<std::int64_t> coords(n);
          std::int64_t c = code;
          for (auto& v : coords) v = c % r, c /= r;
          const ThetaStructure xi = make(r, g, B, coords, delta);
          const NormalForm nf = normal_form(xi);
          REQUIRE(apply_word(xi, nf.word) == nf.representative);
          // canonical shape: (-1, 0, ..., -1, N, 0, ..., 0)
          for (int i = 1; i <= g; ++i) CHECK(nf.representative.qa(i) == r - 1);
          for (int i = 1; i < g; ++i) CHECK(nf.representative.qb(i) == 0);
          for (int j = 1; j < B; ++j) CHECK(nf.representative.qr(j) == 0);
        }
      }
    }
  }
}

TEST_CASE("normal form is orbit-constant for g >= 2") {
  for (std::int64_t r : {2, 3}) {
    const SurfaceSpec S{true, 2, 2};
    std::vector<std::int64_t> delta{1 % r, (2 * r - 1) % r};
    std::int64_t dsum = delta[0] + delta[1];
    if (r % 2 == 0 && dsum % 2 != 0) delta[1] = (delta[1] + 1) % r;
    const auto cat = catalog(S);
    std::int64_t states = 1;
    for (int k = 0; k < 5; ++k) states *= r;
    for (std::int64_t code = 0; code < states; ++code) {
      std::vector<std::int64_t> coords(5);
      std::int64_t c = code;
      for (auto& v : coords) v = c % r, c /= r;
      const ThetaStructure xi = make(r, 2, 2, coords, delta);
      const NormalForm nf = normal_form(xi);
      for (const auto& g : cat) {
        if (g.is_arc()) continue;
        CHECK(normal_form(twist(xi, g, 1)).representative == nf.representative);
      }
    }
  }
}

TEST_CASE("framings reduce like residues") {
  // r = 0, g >= 2: N lands in {0, 1}
  const ThetaStructure xi = make(0, 2, 1, {3, -5, 7, 2}, {-2});
  const NormalForm nf = normal_form(xi);
  CHECK(apply_word(xi, nf.word) == nf.representative);
  CHECK(nf.representative.qa(1) == -1);
  CHECK(nf.representative.qa(2) == -1);
  CHECK(nf.representative.qb(1) == 0);
  CHECK((nf.representative.qb(2) == 0 || nf.representative.qb(2) == 1));
  CHECK((arf(nf.representative) == arf(xi)));

  // g = 1 keeps the accumulated integer and is flagged incomplete
  const ThetaStructure t = make(0, 1, 1, {4, 9}, {0});
  const NormalForm nft = normal_form(t);
  CHECK(apply_word(t, nft.word) == nft.representative);
  CHECK_FALSE(nft.complete);
}

TEST_CASE("reduce_mod") {
  const ThetaStructure xi = make(4, 2, 1, {3, 2, 1, 0}, {2});
  const ThetaStructure half = reduce_mod(xi, 2);
  CHECK(half.coords == std::vector<std::int64_t>{1, 0, 1, 0});
  CHECK(half.delta == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(reduce_mod(xi, 3), std::invalid_argument);

  const ThetaStructure fr = make(0, 1, 1, {25, -1}, {0});
  CHECK(reduce_mod(fr, 24).coords == std::vector<std::int64_t>{1, 23});

  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t r = 2 * (1 + static_cast<std::int64_t>(rng() % 6));
    std::vector<std::int64_t> coords(5), delta(2);
    for (auto& v : coords) v = static_cast<std::int64_t>(rng() % r);
    for (auto& v : delta) v = static_cast<std::int64_t>(rng() % r);
    const ThetaStructure x = make(r, 2, 2, coords, delta);
    CHECK(arf(reduce_mod(x, 2)) == arf(x));
  }
}

TEST_CASE("coefficient reduction commutes with twists") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t rp = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t r = rp * (1 + static_cast<std::int64_t>(rng() % 4));
    const ThetaStructure xi = random_structure(r, 2, 2, rng);
    const auto cat = catalog(xi.surface);
    const NamedCurve c = cat[rng() % cat.size()];
    if (c.is_arc()) continue;
    const std::int64_t e = rng() % 2 ? 1 : -1;
    CHECK(reduce_mod(twist(xi, c, e), rp) == twist(reduce_mod(xi, rp), c, e));
  }
}

TEST_CASE("torsor shifts translate coordinates") {
  const ThetaStructure xi = make(5, 1, 2, {1, 2, 3}, {0, 4});
  CHECK(torsor_shift(xi, {0, 0, 0}) == xi);
  const auto once = torsor_shift(xi, {1, 2, 3});
  const auto twice = torsor_shift(once, {4, 3, 2});
  CHECK(twice == torsor_shift(xi, {0, 0, 0}));  // 1+4, 2+3, 3+2 all vanish mod 5
  CHECK_THROWS_AS(torsor_shift(xi, {1, 2}), std::invalid_argument);
  // transitivity: any target is one shift away
  const ThetaStructure target = make(5, 1, 2, {4, 4, 4}, {0, 4});
  std::vector<std::int64_t> g(3);
  for (int k = 0; k < 3; ++k) g[k] = xi.ring.sub(target.coords[k], xi.coords[k]);
  CHECK(torsor_shift(xi, g) == target);
}

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(make(4, 1, 1, {1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make(4, 1, 1, {1, 2}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(ThetaStructure(CoeffRing(4), SurfaceSpec{false, 1, 1}, {1}, {0, 0}),
                  std::invalid_argument);
  const ThetaStructure xi = make(4, 1, 2, {1, 2, 3}, {0, 0});
  CHECK_THROWS_AS(twist(xi, NamedCurve::arc(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(twist(xi, NamedCurve::a(1), 2), std::invalid_argument);
  CurveClass wrong;
  wrong.X = {1};
  wrong.Y = {0};
  wrong.lambda = {0};  // wrong boundary dimension
  CHECK_THROWS_AS(q_eval(xi, wrong), std::invalid_argument);
}
