#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "surface.hpp"

namespace spinmcg {

/// A twist along a curve known only by its homology class.  Realizability
/// as a simple closed curve is the caller's assertion, and the q-value
/// must be supplied by the caller.
struct FormalTwist {
  CurveClass cls;
  std::int64_t q = 0;

  bool operator==(const FormalTwist&) const = default;
};

/// One letter of a twist word: a Dehn twist generator and its exponent.
struct TwistLetter {
  std::variant<NamedCurve, FormalTwist> curve;
  std::int64_t exponent = 1;

  TwistLetter() = default;
  TwistLetter(NamedCurve c, std::int64_t e) : curve(c), exponent(e) {}
  TwistLetter(FormalTwist f, std::int64_t e) : curve(std::move(f)), exponent(e) {}

  bool named() const { return std::holds_alternative<NamedCurve>(curve); }
  const NamedCurve& as_named() const { return std::get<NamedCurve>(curve); }
  const FormalTwist& as_formal() const { return std::get<FormalTwist>(curve); }

  bool operator==(const TwistLetter&) const = default;
};

/// Certificate format for orbit membership: a finite product of twists,
/// applied left to right.
struct TwistWord {
  std::vector<TwistLetter> letters;

  void push(NamedCurve c, std::int64_t e) {
    if (e != 0) letters.emplace_back(c, e);
  }
  void push(FormalTwist f, std::int64_t e) {
    if (e != 0) letters.emplace_back(std::move(f), e);
  }
  void append(const TwistWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }

  TwistWord inverse() const {
    TwistWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      TwistLetter l = *it;
      l.exponent = -l.exponent;
      w.letters.push_back(std::move(l));
    }
    return w;
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  bool operator==(const TwistWord&) const = default;
};

/// Parses the compact word syntax "a1^2,b1^-1,t1,a1+a2,a1+a2+d1".
/// Atoms are catalog curve names; "^e" is an optional integer exponent.
inline TwistWord parse_word(const std::string& text) {
  TwistWord w;
  std::size_t pos = 0;
  auto parse_curve = [](const std::string& tok) -> NamedCurve {
    auto bad = [&]() { throw std::invalid_argument("unrecognized curve name: " + tok); };
    std::vector<std::pair<char, int>> atoms;
    std::size_t i = 0;
    while (i < tok.size()) {
      char c = tok[i++];
      if (c == '+') continue;
      if (i >= tok.size() || !isdigit(static_cast<unsigned char>(tok[i]))) bad();
      int v = 0;
      while (i < tok.size() && isdigit(static_cast<unsigned char>(tok[i])))
        v = v * 10 + (tok[i++] - '0');
      atoms.emplace_back(c, v);
    }
    if (atoms.empty()) bad();
    if (atoms.size() == 1) {
      auto [c, v] = atoms[0];
      switch (c) {
        case 'a': return NamedCurve::a(v);
        case 'b': return NamedCurve::b(v);
        case 't': return NamedCurve::t(v);
        case 'd': return NamedCurve::boundary(v);
        case 'r': return NamedCurve::arc(v);
        case 'u': return NamedCurve::u(v);
        default: bad();
      }
    }
    if (atoms.size() == 2 && atoms[0].first == 'a' && atoms[1].first == 'a')
      return NamedCurve::pair_sum(atoms[0].second, atoms[1].second);
    if (atoms.size() == 3 && atoms[0].first == 'a' && atoms[1].first == 'a' &&
        atoms[2].first == 'd')
      return NamedCurve::pair_boundary_sum(atoms[0].second, atoms[1].second, atoms[2].second);
    if (atoms.size() == 4)
      for (auto& [c, v] : atoms)
        if (c != 'a') bad();
    if (atoms.size() == 4)
      return NamedCurve::quad_sum(atoms[0].second, atoms[1].second, atoms[2].second,
                                  atoms[3].second);
    bad();
    return {};
  };
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    pos = comma == std::string::npos ? text.size() : comma + 1;
    if (tok.empty()) continue;
    std::int64_t exp = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      exp = std::stoll(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    w.push(parse_curve(tok), exp);
  }
  return w;
}

inline std::string format_word(const TwistWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    const auto& l = w.letters[i];
    out += l.named() ? l.as_named().name() : std::string("<formal>");
    if (l.exponent != 1) out += "^" + std::to_string(l.exponent);
  }
  return out;
}

}  // namespace spinmcg
