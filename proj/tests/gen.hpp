// Random terms, structures, sequents and rule instances for property tests.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "lrc/calculus.hpp"
#include "lrc/syntax.hpp"

namespace lrc::gen {

struct Pools {
  std::vector<std::string> fm_atoms{"p", "q", "r"};
  std::vector<std::string> res_atoms{"a", "b", "c"};
  std::vector<std::string> agents{"", "c", "d"};
  bool roles = true;
  bool reusable = true;  // occasionally mark resource atoms reusable
};

inline int pick(std::mt19937_64& rng, int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[pick(rng, static_cast<int>(xs.size()))];
}

inline std::vector<Kind> kinds_where(bool want_term, Sort sort, bool roles) {
  std::vector<Kind> out;
  for (int k = 0; k < kKindCount; ++k) {
    const Kind kind = static_cast<Kind>(k);
    const auto& info = kind_info(kind);
    if (info.is_var || kind == Kind::Atom) continue;
    if ((want_term ? info.is_term : info.is_struct) == false) continue;
    if (info.fixed_sort != (sort == Sort::Fm ? 0 : 1)) continue;
    if (info.roles && !roles) continue;
    out.push_back(kind);
  }
  return out;
}

inline NodeP term(std::mt19937_64& rng, Sort s, int depth, const Pools& p = {}) {
  static const auto fm_kinds = kinds_where(true, Sort::Fm, true);
  static const auto res_kinds = kinds_where(true, Sort::Res, true);
  if (depth <= 0 || pick(rng, 3) == 0) {
    if (s == Sort::Fm) return atom(pick(rng, p.fm_atoms), Sort::Fm);
    bool reusable = p.reusable && pick(rng, 5) == 0;
    return atom(pick(rng, p.res_atoms), Sort::Res, reusable);
  }
  std::vector<Kind> choices;
  for (Kind k : s == Sort::Fm ? fm_kinds : res_kinds)
    if (p.roles || !kind_info(k).roles) choices.push_back(k);
  const Kind k = pick(rng, choices);
  const auto& info = kind_info(k);
  std::vector<NodeP> kids;
  for (Sort a : info.args) kids.push_back(term(rng, a, depth - 1, p));
  return make(k, kids, info.agent_indexed ? pick(rng, p.agents) : "");
}

// Structure kinds that have a semantic reading at each sign.
inline bool interpretable(Kind k, Sign s) {
  switch (k) {
    case Kind::I: case Kind::Semi: case Kind::Gt: case Kind::Phi: case Kind::Com: case Kind::USup: case Kind::USub:
      return true;
    case Kind::Circ: case Kind::CircR: case Kind::CircR1: case Kind::CircR2: case Kind::Odot: case Kind::BTlt:
    case Kind::TBTlt:
      return s == Sign::Pos;
    case Kind::Blt: case Kind::BltR: case Kind::BltR1: case Kind::BltR2: case Kind::CapS: case Kind::RCapS:
    case Kind::TCapS: case Kind::RgtRes: case Kind::LftRes: case Kind::BTri: case Kind::BTriBar: case Kind::BTriBar1:
    case Kind::BTriBar2:
      return s == Sign::Neg;
    default:
      return false;
  }
}

// Random structure; when `sign` is given only interpretable connectives
// are used, so the result can be evaluated in a model.
inline NodeP structure(std::mt19937_64& rng, Sort s, int depth, const Pools& p = {},
                       std::optional<Sign> sign = std::nullopt) {
  if (depth <= 0 || pick(rng, 3) == 0) return term(rng, s, 2, p);
  std::vector<Kind> choices;
  for (Kind k : kinds_where(false, s, p.roles))
    if (!sign || interpretable(k, *sign)) choices.push_back(k);
  const Kind k = pick(rng, choices);
  const auto& info = kind_info(k);
  std::vector<NodeP> kids;
  for (std::size_t i = 0; i < info.args.size(); ++i) {
    std::optional<Sign> child = sign;
    const bool neg = std::find(info.negative.begin(), info.negative.end(), static_cast<int>(i)) != info.negative.end();
    if (sign && neg) child = flip(*sign);
    kids.push_back(structure(rng, info.args[i], depth - 1, p, child));
  }
  return make(k, kids, info.agent_indexed ? pick(rng, p.agents) : "");
}

inline Sequent sequent(std::mt19937_64& rng, int depth, const Pools& p = {}, bool interpretable_only = false) {
  Sort s = pick(rng, 2) == 0 ? Sort::Fm : Sort::Res;
  auto ps = interpretable_only ? std::optional<Sign>(Sign::Pos) : std::nullopt;
  auto ns = interpretable_only ? std::optional<Sign>(Sign::Neg) : std::nullopt;
  return Sequent(structure(rng, s, depth, p, ps), structure(rng, s, depth, p, ns));
}

// A random instance of `r`: structure variables get interpretable random
// structures at their sign, term and atom variables random terms/atoms,
// agent variables the default agent. Empty when the side condition fails.
inline std::optional<RuleInstance> instance(std::mt19937_64& rng, const RuleSchema& r, int depth, const Pools& p) {
  Substitution sub;
  std::map<std::string, Sign> signs;
  auto note_signs = [&](const Sequent& s) {
    for (const auto& pos : positions(s))
      if (pos.node->kind == Kind::StructVar) signs.emplace(pos.node->name, pos.sign);
  };
  note_signs(r.conclusion);
  for (const auto& pr : r.premises) note_signs(pr);
  for (const auto& [name, decl] : r.metavars) {
    if (decl.kind == Kind::StructVar) {
      Sign s = signs.count(name) ? signs.at(name) : Sign::Pos;
      sub.vars[name] = structure(rng, decl.sort, depth, p, s);
    } else if (decl.kind == Kind::TermVar) {
      sub.vars[name] = term(rng, decl.sort, depth, p);
    } else {
      sub.vars[name] = decl.sort == Sort::Fm ? atom(pick(rng, p.fm_atoms), Sort::Fm)
                                             : atom(pick(rng, p.res_atoms), Sort::Res);
    }
  }
  for (const auto& a : r.agent_vars) sub.agents[a] = "";
  if (!side_condition_holds(r, sub)) return std::nullopt;
  try {
    return instantiate(r, sub);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace lrc::gen
