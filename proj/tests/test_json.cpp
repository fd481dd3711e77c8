#include <catch2/catch_amalgamated.hpp>

#include <spinmcg/json_io.hpp>

using namespace spinmcg;

TEST_CASE("structure records round-trip") {
  const ThetaStructure xi(CoeffRing(4), SurfaceSpec{true, 2, 2}, {1, 2, 3, 0, 1}, {3, 2});
  CHECK(theta_from_json(json::parse(to_json(xi).dump())) == xi);

  const PinStructure pm(PinSign::Minus, SurfaceSpec{false, 3, 2}, {1, 3, 1, 2}, {2, 2});
  CHECK(pin_from_json(json::parse(to_json(pm).dump())) == pm);

  const SurfaceSpec S{false, 4, 3};
  CHECK(surface_from_json(json::parse(to_json(S).dump())) == S);
}

TEST_CASE("words round-trip through JSON and the compact syntax") {
  TwistWord w;
  w.push(NamedCurve::a(1), 2);
  w.push(NamedCurve::b(2), -1);
  w.push(NamedCurve::t(1), 1);
  w.push(NamedCurve::boundary(0), -3);
  w.push(NamedCurve::u(2), 1);
  w.push(NamedCurve::pair_sum(1, 3), 1);
  w.push(NamedCurve::quad_sum(1, 2, 3, 4), 1);
  w.push(NamedCurve::pair_boundary_sum(1, 2, 1), 1);
  CHECK(word_from_json(json::parse(to_json(w).dump())) == w);
  CHECK(parse_word(format_word(w)) == w);

  FormalTwist f;
  f.cls.X = {1, 0};
  f.cls.Y = {0, 1};
  f.cls.lambda = {0, 0};
  f.q = 3;
  TwistWord wf;
  wf.push(f, -1);
  CHECK(word_from_json(json::parse(to_json(wf).dump())) == wf);

  CHECK_THROWS_AS(parse_word("z9"), std::invalid_argument);
  CHECK(parse_word("").empty());
}

TEST_CASE("orbit reports are deterministic up to wall time") {
  EnumerationRequest req{StructKind::RSpin, 3, SurfaceSpec{true, 2, 1}, {0}};
  json a = to_json(enumerate_orbits(req));
  json b = to_json(enumerate_orbits(req));
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  CHECK(a.dump() == b.dump());
  CHECK(a.at("orbit_count").get<int>() == 1);
  CHECK(a.at("parameters").at("kind").get<std::string>() == "rspin");
  CHECK(a.at("generator_set").size() == 6);  // a1,b1,a2,b2,t1,d0
}

TEST_CASE("orbit reports re-parse into the same values") {
  for (EnumerationRequest req :
       {EnumerationRequest{StructKind::RSpin, 4, SurfaceSpec{true, 2, 2}, {1, 1}},
        EnumerationRequest{StructKind::PinMinus, 2, SurfaceSpec{false, 3, 2}, {2, 2}}}) {
    const OrbitReport rep = enumerate_orbits(req);
    const OrbitReport back = orbit_report_from_json(json::parse(to_json(rep).dump()));
    CHECK(back.params.kind == rep.params.kind);
    CHECK(back.params.surface == rep.params.surface);
    CHECK(back.params.delta == rep.params.delta);
    CHECK(back.generator_set == rep.generator_set);
    CHECK(back.state_count == rep.state_count);
    REQUIRE(back.orbits.size() == rep.orbits.size());
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
      CHECK(back.orbits[i].representative == rep.orbits[i].representative);
      CHECK(back.orbits[i].size == rep.orbits[i].size);
      CHECK(back.orbits[i].invariant == rep.orbits[i].invariant);
    }
  }
}

TEST_CASE("cobordism descriptors round-trip") {
  StructuredCobordism c;
  c.structure = ThetaStructure(CoeffRing(2), SurfaceSpec{true, 1, 2}, {0, 1, 0}, {1, 1});
  c.outgoing = {0};
  c.incoming = {1};
  const StructuredCobordism back = cobordism_from_json(json::parse(to_json(c).dump()));
  CHECK(std::get<ThetaStructure>(back.structure) == std::get<ThetaStructure>(c.structure));
  CHECK(back.outgoing == c.outgoing);
  CHECK(back.incoming == c.incoming);
}

TEST_CASE("csv reports") {
  EnumerationRequest req{StructKind::RSpin, 2, SurfaceSpec{true, 2, 1}, {0}};
  const std::string csv = orbit_report_csv(enumerate_orbits(req));
  CHECK(csv == "representative,size,invariant\n\"0 0 0 0\",10,0\n\"0 0 1 1\",6,1\n");
}
