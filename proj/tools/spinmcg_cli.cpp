// Command-line front end: orbit enumeration, normal forms, invariants,
// twisting, gluing, surjectivity and diagonal checks, and the built-in
// verification matrix.  Reports are JSON (default) or CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <spinmcg/json_io.hpp>
#include <spinmcg/spinmcg.hpp>
#include <spinmcg/verify.hpp>

namespace {

using namespace spinmcg;

// Exit codes: 0 success, 1 domain error, 2 budget exhausted, 3 malformed input.
struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw MalformedInput("trailing characters in integer: " + tok);
    } catch (const MalformedInput&) {
      throw;
    } catch (const std::exception&) {
      throw MalformedInput("not an integer: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TwistWord parse_word_checked(const std::string& text) {
  try {
    return parse_word(text);
  } catch (const std::exception& e) {
    throw MalformedInput(std::string("bad twist word: ") + e.what());
  }
}

struct KindFlag {
  std::string text = "rspin";

  bool is_pin() const { return text == "pin+" || text == "pin-"; }
  PinSign pin_sign() const { return text == "pin+" ? PinSign::Plus : PinSign::Minus; }
  bool is_framed() const { return text == "framed"; }
  StructKind struct_kind() const {
    if (text == "pin+") return StructKind::PinPlus;
    if (text == "pin-") return StructKind::PinMinus;
    return StructKind::RSpin;
  }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"finite models of framed, r-spin and pin structures on surfaces "
               "with boundary, their Dehn-twist actions, invariants and orbits"};
  app.require_subcommand(1);

  KindFlag kind;
  std::int64_t r = 2;
  int genus = 1;
  int boundaries = 1;
  std::string delta_text, coords_text, word_text;
  std::uint64_t budget = 200'000'000;
  int threads = 1;
  std::string format = "json";

  auto add_common = [&](CLI::App* cmd, bool with_coords) {
    cmd->add_option("--kind", kind.text, "structure kind")
        ->check(CLI::IsMember({"framed", "rspin", "pin+", "pin-"}));
    cmd->add_option("--r", r, "modulus r (rspin; 0 = framed)");
    cmd->add_option("--genus", genus, "genus g (orientable) or n (non-orientable)");
    cmd->add_option("--boundaries", boundaries, "number of boundary components B");
    cmd->add_option("--delta", delta_text, "boundary condition, comma-separated");
    if (with_coords) cmd->add_option("--coords", coords_text, "coordinates, comma-separated");
    cmd->add_option("--budget", budget, "generator-application budget");
    cmd->add_option("--threads", threads, "worker threads for enumeration");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  };

  auto effective_r = [&]() { return kind.is_framed() ? 0 : r; };
  auto surface = [&]() {
    return SurfaceSpec{!kind.is_pin(), genus, boundaries};
  };
  auto delta_or_zero = [&]() {
    auto d = parse_ints(delta_text);
    if (d.empty()) d.assign(boundaries, 0);
    return d;
  };
  auto make_theta = [&]() {
    return ThetaStructure(CoeffRing(effective_r()), surface(), parse_ints(coords_text),
                          delta_or_zero());
  };
  auto make_pin = [&]() {
    PinStructure xi(kind.pin_sign(), surface(), parse_ints(coords_text), delta_or_zero());
    if (auto rep = validate(xi); !rep)
      throw std::invalid_argument("invalid pin structure: " + rep.violation);
    return xi;
  };

  // orbits ------------------------------------------------------------------
  auto* orbits_cmd = app.add_subcommand("orbits", "enumerate mapping-class-group orbits");
  add_common(orbits_cmd, false);
  orbits_cmd->callback([&]() {
    EnumerationRequest req{kind.struct_kind(), effective_r(), surface(), delta_or_zero(),
                           budget, threads};
    const OrbitReport rep = enumerate_orbits(req);
    if (format == "csv")
      std::cout << orbit_report_csv(rep);
    else
      emit(to_json(rep));
  });

  // reduce ------------------------------------------------------------------
  auto* reduce_cmd =
      app.add_subcommand("reduce", "canonical form with a replayable twist certificate");
  add_common(reduce_cmd, true);
  reduce_cmd->callback([&]() {
    json out;
    if (kind.is_pin()) {
      const PinStructure xi = make_pin();
      const PinNormalForm nf = normal_form_pin(xi);
      out["input"] = to_json(xi);
      out["representative"] = to_json(nf.representative);
      out["certificate"] = to_json(nf.word);
      out["certificate_compact"] = format_word(nf.word);
      out["complete"] = nf.complete;
    } else {
      const ThetaStructure xi = make_theta();
      const NormalForm nf = normal_form(xi);
      out["input"] = to_json(xi);
      out["representative"] = to_json(nf.representative);
      out["certificate"] = to_json(nf.word);
      out["certificate_compact"] = format_word(nf.word);
      out["complete"] = nf.complete;
    }
    emit(out);
  });

  // invariant ---------------------------------------------------------------
  auto* inv_cmd = app.add_subcommand("invariant", "evaluate the classifying invariant");
  add_common(inv_cmd, true);
  inv_cmd->callback([&]() {
    json out;
    if (kind.is_pin()) {
      const PinStructure xi = make_pin();
      out["A"] = invariant_A(xi);
    } else {
      const ThetaStructure xi = make_theta();
      json gs = json::array();
      for (int i = 1; i <= xi.surface.genus; ++i)
        gs.push_back(G_invariant(xi.qa(i), xi.qb(i), xi.ring));
      out["G"] = std::move(gs);
      if (xi.ring.is_even()) out["arf"] = arf(xi);
    }
    emit(out);
  });

  // twist -------------------------------------------------------------------
  auto* twist_cmd = app.add_subcommand("twist", "apply a twist word to a structure");
  add_common(twist_cmd, true);
  twist_cmd->add_option("--word", word_text, "twist word, e.g. a1^2,b1^-1,t1,a1+a2");
  twist_cmd->callback([&]() {
    const TwistWord w = parse_word_checked(word_text);
    json out;
    if (kind.is_pin())
      out["structure"] = to_json(apply_word_pin(make_pin(), w));
    else
      out["structure"] = to_json(apply_word(make_theta(), w));
    emit(out);
  });

  // glue --------------------------------------------------------------------
  auto* glue_cmd = app.add_subcommand("glue", "pants gluing or pi0-level cobordism gluing");
  add_common(glue_cmd, true);
  std::string mode = "pants";
  std::string pants_text, pants_delta_text;
  int attach = 0;
  std::string right_json_text;
  int out_left = 1, out_right = 1, glue_left = 0, glue_right = 1;
  glue_cmd->add_option("--mode", mode)->check(CLI::IsMember({"pants", "pi0"}));
  glue_cmd->add_option("--pants", pants_text, "pants coordinates R1,R2");
  glue_cmd->add_option("--pants-delta", pants_delta_text, "pants boundary condition d0,d1,d2");
  glue_cmd->add_option("--attach", attach, "attachment boundary of the base surface");
  glue_cmd->add_option("--right", right_json_text,
                       "right cobordism's structure as JSON (pi0 mode)");
  glue_cmd->add_option("--out-left", out_left, "outgoing boundary count of the left piece");
  glue_cmd->add_option("--out-right", out_right, "outgoing boundary count of the right piece");
  glue_cmd->add_option("--glue-left", glue_left, "outgoing boundary of the left piece to glue");
  glue_cmd->add_option("--glue-right", glue_right,
                       "incoming boundary of the right piece to glue");
  glue_cmd->callback([&]() {
    if (mode == "pants") {
      const ThetaStructure xi = make_theta();
      const auto pants = parse_ints(pants_text);
      if (pants.size() != 2) throw MalformedInput("--pants needs exactly R1,R2");
      const auto pd = parse_ints(pants_delta_text);
      emit(json{{"structure", to_json(glue_pants(xi, pants[0], pants[1], pd, attach))}});
      return;
    }
    // pi0 mode: the left piece comes from the common flags, the right one
    // from --right as a JSON structure record.
    json rj;
    try {
      rj = json::parse(right_json_text);
    } catch (const std::exception& e) {
      throw MalformedInput(std::string("--right is not valid JSON: ") + e.what());
    }
    auto partition = [](int B, int out) {
      StructuredCobordism c;
      for (int j = 0; j < B; ++j) (j < out ? c.outgoing : c.incoming).push_back(j);
      return c;
    };
    StructuredCobordism left, right;
    if (kind.is_pin()) {
      const PinStructure li = make_pin();
      left = partition(li.surface.boundaries, out_left);
      left.structure = li;
      const PinStructure ri = pin_from_json(rj);
      right = partition(ri.surface.boundaries, out_right);
      right.structure = ri;
    } else {
      const ThetaStructure li = make_theta();
      left = partition(li.surface.boundaries, out_left);
      left.structure = li;
      const ThetaStructure ri = theta_from_json(rj);
      right = partition(ri.surface.boundaries, out_right);
      right.structure = ri;
    }
    emit(to_json(glue_pi0(left, right, glue_left, glue_right)));
  });

  // surjectivity --------------------------------------------------------------
  auto* surj_cmd =
      app.add_subcommand("surjectivity", "genus-1 boundary stabilisation surjectivity");
  add_common(surj_cmd, false);
  std::string delta_target_text;
  surj_cmd->add_option("--delta-target", delta_target_text,
                       "target boundary condition (one entry longer)");
  surj_cmd->callback([&]() {
    const auto dsrc = parse_ints(delta_text);
    const auto dtgt = parse_ints(delta_target_text);
    emit(to_json(check_surjectivity_genus1(effective_r(), dsrc, dtgt, budget, threads)));
  });

  // diagonal -------------------------------------------------------------------
  auto* diag_cmd = app.add_subcommand("diagonal", "solve a stabilisation square diagonal");
  add_common(diag_cmd, false);
  DiagonalInput din;
  diag_cmd->add_option("--a-top", din.a_top);
  diag_cmd->add_option("--a-left", din.a_left);
  diag_cmd->add_option("--a-bottom", din.a_bottom);
  diag_cmd->add_option("--a-right", din.a_right);
  diag_cmd->add_option("--delta-d", din.delta_d, "delta at boundary D (rspin)");
  diag_cmd->add_option("--delta-b", din.delta_b, "delta at boundary B (rspin)");
  diag_cmd->callback([&]() {
    din.kind = kind.struct_kind();
    if (din.kind == StructKind::PinMinus)
      throw std::invalid_argument("diagonal: supported kinds are rspin and pin+");
    const DiagonalResult out = solve_diagonal(din);
    emit(json{{"a_diagonal", out.a_diagonal},
              {"left_triangle", out.left_triangle},
              {"right_triangle", out.right_triangle}});
  });

  // verify ---------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification matrix");
  add_common(verify_cmd, false);
  std::string suite = "paper";
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));
  verify_cmd->callback([&]() {
    VerifyOptions opt;
    opt.budget = budget;
    opt.threads = threads;
    const auto results = run_verification_matrix(opt);
    bool all_pass = true;
    // Default output is the pass/fail table; --format json for records.
    if (verify_cmd->count("--format") > 0 && format == "json") {
      json arr = json::array();
      for (const auto& res : results) {
        arr.push_back(json{{"id", res.id},
                           {"name", res.name},
                           {"pass", res.pass},
                           {"detail", res.detail},
                           {"wall_time_ms", res.wall_time_ms}});
        all_pass &= res.pass;
      }
      emit(arr);
    } else {
      for (const auto& res : results) {
        std::printf("[%s] %d. %s  (%s)  %.0f ms\n", res.pass ? "PASS" : "FAIL", res.id,
                    res.name.c_str(), res.detail.c_str(), res.wall_time_ms);
        all_pass &= res.pass;
      }
    }
    if (!all_pass) throw std::invalid_argument("verification matrix has failures");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
