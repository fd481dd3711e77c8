#pragma once

#include <json.hpp>

#include <string>

#include "gluing.hpp"
#include "orbits.hpp"
#include "pin.hpp"
#include "rspin.hpp"
#include "surface.hpp"
#include "twist_word.hpp"

namespace spinmcg {

using json = nlohmann::ordered_json;

inline json to_json(const SurfaceSpec& s) {
  return json{{"orientable", s.orientable}, {"genus", s.genus}, {"boundaries", s.boundaries}};
}

inline SurfaceSpec surface_from_json(const json& j) {
  SurfaceSpec s;
  s.orientable = j.at("orientable").get<bool>();
  s.genus = j.at("genus").get<int>();
  s.boundaries = j.at("boundaries").get<int>();
  s.validate();
  return s;
}

inline json to_json(const CurveClass& c) {
  json j;
  if (!c.X.empty() || !c.Y.empty()) {
    j["X"] = c.X;
    j["Y"] = c.Y;
  }
  if (!c.A.empty()) j["A"] = c.A;
  j["lambda"] = c.lambda;
  if (c.is_arc) j["arc"] = c.arc_index;
  return j;
}

inline CurveClass curve_class_from_json(const json& j) {
  CurveClass c;
  if (j.contains("X")) c.X = j.at("X").get<std::vector<std::int64_t>>();
  if (j.contains("Y")) c.Y = j.at("Y").get<std::vector<std::int64_t>>();
  if (j.contains("A")) c.A = j.at("A").get<std::vector<std::int64_t>>();
  c.lambda = j.at("lambda").get<std::vector<std::int64_t>>();
  if (j.contains("arc")) {
    c.is_arc = true;
    c.arc_index = j.at("arc").get<int>();
  }
  return c;
}

inline json to_json(const TwistWord& w) {
  json arr = json::array();
  for (const auto& l : w.letters) {
    json jl;
    if (l.named()) {
      jl["curve"] = l.as_named().name();
    } else {
      jl["class"] = to_json(l.as_formal().cls);
      jl["q"] = l.as_formal().q;
    }
    jl["exponent"] = l.exponent;
    arr.push_back(std::move(jl));
  }
  return arr;
}

inline TwistWord word_from_json(const json& j) {
  TwistWord w;
  for (const auto& jl : j) {
    const std::int64_t e = jl.at("exponent").get<std::int64_t>();
    if (jl.contains("curve")) {
      TwistWord one = parse_word(jl.at("curve").get<std::string>());
      if (one.letters.size() != 1) throw std::invalid_argument("word: bad curve name");
      w.push(one.letters[0].as_named(), e);
    } else {
      FormalTwist f{curve_class_from_json(jl.at("class")), jl.at("q").get<std::int64_t>()};
      w.push(std::move(f), e);
    }
  }
  return w;
}

inline json to_json(const ThetaStructure& xi) {
  return json{{"ring", xi.ring.modulus},
              {"surface", to_json(xi.surface)},
              {"coords", xi.coords},
              {"delta", xi.delta}};
}

inline ThetaStructure theta_from_json(const json& j) {
  return ThetaStructure(CoeffRing(j.at("ring").get<std::int64_t>()),
                        surface_from_json(j.at("surface")),
                        j.at("coords").get<std::vector<std::int64_t>>(),
                        j.at("delta").get<std::vector<std::int64_t>>());
}

inline json to_json(const PinStructure& xi) {
  return json{{"sign", std::string(to_string(xi.sign))},
              {"surface", to_json(xi.surface)},
              {"coords", xi.coords},
              {"delta", xi.delta}};
}

inline PinStructure pin_from_json(const json& j) {
  const std::string sign = j.at("sign").get<std::string>();
  if (sign != "+" && sign != "-") throw std::invalid_argument("pin sign must be + or -");
  return PinStructure(sign == "+" ? PinSign::Plus : PinSign::Minus,
                      surface_from_json(j.at("surface")),
                      j.at("coords").get<std::vector<std::int64_t>>(),
                      j.at("delta").get<std::vector<std::int64_t>>());
}

inline json to_json(const OrbitReport& rep) {
  json params{{"kind", std::string(to_string(rep.params.kind))}};
  if (rep.params.kind == StructKind::RSpin) params["r"] = rep.params.r;
  params["surface"] = to_json(rep.params.surface);
  params["delta"] = rep.params.delta;
  json orbits = json::array();
  for (const auto& o : rep.orbits) {
    json jo{{"representative", o.representative}, {"size", o.size}};
    jo["invariant"] = o.invariant ? json(*o.invariant) : json(nullptr);
    orbits.push_back(std::move(jo));
  }
  return json{{"parameters", std::move(params)},
              {"generator_set", rep.generator_set},
              {"state_count", rep.state_count},
              {"orbit_count", rep.orbit_count()},
              {"orbits", std::move(orbits)},
              {"wall_time_ms", rep.wall_time_ms}};
}

/// Re-parses a serialized orbit report.  The per-state orbit table is not
/// part of the wire format and comes back empty.
inline OrbitReport orbit_report_from_json(const json& j) {
  OrbitReport rep;
  const json& params = j.at("parameters");
  const std::string kind = params.at("kind").get<std::string>();
  if (kind == "rspin") {
    rep.params.kind = StructKind::RSpin;
    rep.params.r = params.at("r").get<std::int64_t>();
  } else if (kind == "pin+") {
    rep.params.kind = StructKind::PinPlus;
  } else if (kind == "pin-") {
    rep.params.kind = StructKind::PinMinus;
  } else {
    throw std::invalid_argument("orbit report: unknown kind " + kind);
  }
  rep.params.surface = surface_from_json(params.at("surface"));
  rep.params.delta = params.at("delta").get<std::vector<std::int64_t>>();
  rep.generator_set = j.at("generator_set").get<std::vector<std::string>>();
  rep.state_count = j.at("state_count").get<std::uint64_t>();
  for (const auto& jo : j.at("orbits")) {
    Orbit o;
    o.representative = jo.at("representative").get<std::vector<std::int64_t>>();
    o.size = jo.at("size").get<std::uint64_t>();
    if (!jo.at("invariant").is_null()) o.invariant = jo.at("invariant").get<std::int64_t>();
    rep.orbits.push_back(std::move(o));
  }
  rep.wall_time_ms = j.at("wall_time_ms").get<double>();
  return rep;
}

inline std::string orbit_report_csv(const OrbitReport& rep) {
  std::string out = "representative,size,invariant\n";
  for (const auto& o : rep.orbits) {
    std::string repstr;
    for (std::size_t i = 0; i < o.representative.size(); ++i) {
      if (i) repstr += ' ';
      repstr += std::to_string(o.representative[i]);
    }
    out += '"' + repstr + "\"," + std::to_string(o.size) + ',';
    out += o.invariant ? std::to_string(*o.invariant) : std::string();
    out += '\n';
  }
  return out;
}

inline json to_json(const TheoremCheck& row) {
  json j{{"kind", std::string(to_string(row.kind))}};
  if (row.kind == StructKind::RSpin) j["r"] = row.r;
  j["surface"] = to_json(row.surface);
  j["delta"] = row.delta;
  j["orbit_count"] = row.orbit_count;
  j["predicted"] = row.predicted ? json(*row.predicted) : json(nullptr);
  j["invariants_separate"] = row.invariants_separate;
  j["normal_forms_biject"] = row.normal_forms_biject;
  j["pass"] = row.pass ? json(*row.pass) : json(nullptr);
  return j;
}

inline json to_json(const SurjectivityReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back(json{{"target_representative", w.target_representative},
                             {"source_representative", w.source_representative},
                             {"pants", {w.pants_r1, w.pants_r2}}});
  return json{{"r", rep.r},
              {"delta_source", rep.delta_source},
              {"delta_target", rep.delta_target},
              {"source_classes", rep.source_classes},
              {"target_classes", rep.target_classes},
              {"surjective", rep.surjective},
              {"witnesses", std::move(witnesses)}};
}

inline json to_json(const StructuredCobordism& c) {
  json j;
  if (std::holds_alternative<ThetaStructure>(c.structure))
    j["structure"] = to_json(std::get<ThetaStructure>(c.structure));
  else
    j["structure"] = to_json(std::get<PinStructure>(c.structure));
  j["outgoing"] = c.outgoing;
  j["incoming"] = c.incoming;
  return j;
}

inline StructuredCobordism cobordism_from_json(const json& j) {
  StructuredCobordism c;
  if (j.at("structure").contains("ring"))
    c.structure = theta_from_json(j.at("structure"));
  else
    c.structure = pin_from_json(j.at("structure"));
  c.outgoing = j.at("outgoing").get<std::vector<int>>();
  c.incoming = j.at("incoming").get<std::vector<int>>();
  c.validate();
  return c;
}

inline json to_json(const Pi0Descriptor& d) {
  json j{{"kind", std::string(to_string(d.kind))}};
  if (d.kind == StructKind::RSpin) j["r"] = d.r;
  j["surface"] = to_json(d.surface);
  j["invariant"] = d.invariant;
  j["complete"] = d.complete;
  return j;
}

}  // namespace spinmcg
