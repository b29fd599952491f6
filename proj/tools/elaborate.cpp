// Builds the golden corpus from proof sketches. A sketch is a backward
// tactic: explicit rule applications, bridges through unary structural and
// display steps, assumption pruning, surgical cuts, and bounded search for
// the leaves. Every node is kernel-checked as it is built.
//
//   lrc_elaborate <corpus-dir>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "lrc/kernel.hpp"
#include "lrc/scenarios.hpp"
#include "lrc/search.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

using Tactic = std::function<Derivation(const Sequent&)>;

struct Env {
  RuleSet rules;
  ParseContext ctx;
  std::map<std::string, std::string> macros;  // $name expansions
  SearchBudget budget;
};
Env env;

std::string expand(std::string s) {
  // Longest names first so $h1 does not shadow $h10.
  std::vector<std::string> names;
  for (const auto& [k, v] : env.macros) names.push_back(k);
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& n : names) {
      const std::string key = "$" + n;
      for (std::size_t at = s.find(key); at != std::string::npos; at = s.find(key)) {
        s.replace(at, key.size(), env.macros.at(n));
        changed = true;
      }
    }
  }
  return s;
}

Sequent seq(const std::string& s) { return parse_sequent(expand(s), env.ctx); }
NodeP fm(const std::string& s) { return parse_term(expand(s), Sort::Fm, env.ctx); }

[[noreturn]] void stuck(const Sequent& goal, const std::string& what) {
  throw Error(what + " at goal " + render(goal));
}

Derivation checked(Derivation d) {
  if (auto err = check_node(d, env.rules)) stuck(d.conclusion, "kernel rejected " + d.rule + ": " + *err);
  return d;
}

Tactic Auto() {
  return [](const Sequent& goal) {
    SearchResult r = prove(goal, env.rules, env.budget);
    if (!r.proved()) stuck(goal, "search exhausted after " + std::to_string(r.stats.nodes) + " nodes");
    return *r.proof;
  };
}

// Applies `name` backward; premises without a sub-tactic go to search.
Tactic Rule(const std::string& name, std::vector<Tactic> subs = {}) {
  return [name, subs](const Sequent& goal) {
    auto insts = match_rule(env.rules.at(name), goal);
    if (insts.empty()) stuck(goal, "rule " + name + " does not apply");
    Derivation d;
    d.conclusion = goal;
    d.rule = name;
    for (std::size_t i = 0; i < insts[0].premises.size(); ++i)
      d.premises.push_back((i < subs.size() ? subs[i] : Auto())(insts[0].premises[i]));
    return checked(std::move(d));
  };
}

// Unary rules applied in order, then `next`.
Tactic Chain(std::vector<std::string> names, Tactic next) {
  return [names, next](const Sequent& goal) {
    if (names.empty()) return next(goal);
    std::vector<std::string> rest(names.begin() + 1, names.end());
    return Rule(names[0], {Chain(rest, next)})(goal);
  };
}

// Moves from the goal to `target` through unary structural/display steps.
Tactic To(const Sequent& target, Tactic next) {
  return [target, next](const Sequent& goal) {
    auto steps = bridge(goal, target, env.rules, 8);
    if (!steps) stuck(goal, "no bridge to " + render(target));
    std::function<Derivation(std::size_t)> build = [&](std::size_t i) -> Derivation {
      if (i == steps->size()) return next(target);
      Derivation d;
      d.conclusion = (*steps)[i].conclusion;
      d.rule = (*steps)[i].rule;
      d.premises.push_back(build(i + 1));
      return checked(std::move(d));
    };
    return build(0);
  };
}
Tactic To(const std::string& target, Tactic next) { return [target, next](const Sequent& g) { return To(seq(target), next)(g); }; }

// Surgical formula cut: premise 1 is the goal with `a` at `path`, premise 2
// is `a |- <structure at path>`.
Tactic Cut(const std::string& a, Path path, Tactic left, Tactic right) {
  return [a, path, left, right](const Sequent& goal) {
    MatchOptions opts;
    opts.cut_formula = fm(a);
    opts.cut_path = path;
    auto insts = match_rule(env.rules.at("cut-fm"), goal, opts);
    if (insts.empty()) stuck(goal, "cut on " + a + " does not apply");
    Derivation d;
    d.conclusion = goal;
    d.rule = "cut-fm";
    d.cut_path = path;
    d.premises.push_back(left(insts[0].premises[0]));
    d.premises.push_back(right(insts[0].premises[1]));
    return checked(std::move(d));
  };
}

bool contains_any(const NodeP& n, const std::vector<NodeP>& keep) {
  if (std::any_of(keep.begin(), keep.end(), [&](const NodeP& k) { return equal(k, n); })) return true;
  if (n->kind != Kind::Semi) return false;
  return contains_any(n->kids[0], keep) || contains_any(n->kids[1], keep);
}

bool needs_pruning(const NodeP& n, const std::vector<NodeP>& keep) {
  if (n->kind != Kind::Semi) return false;
  for (const auto& k : n->kids)
    if (!contains_any(k, keep) || needs_pruning(k, keep)) return true;
  return false;
}

Sequent mk(const NodeP& l, const NodeP& r) { return Sequent(l, r); }
NodeP semi(const NodeP& a, const NodeP& b) { return make(Kind::Semi, {a, b}); }
NodeP gt(const NodeP& a, const NodeP& b) { return make(Kind::Gt, {a, b}); }

NodeP pruned(const NodeP& n, const std::vector<NodeP>& keep) {
  if (n->kind != Kind::Semi) return n;
  bool kx = contains_any(n->kids[0], keep), ky = contains_any(n->kids[1], keep);
  if (!kx) return pruned(n->kids[1], keep);
  if (!ky) return pruned(n->kids[0], keep);
  return semi(pruned(n->kids[0], keep), pruned(n->kids[1], keep));
}

// Weakens the antecedent Semi tree down to the leaves in `keep`, keeping
// their order, then continues with `next`.
Tactic PruneNodes(std::vector<NodeP> keep, Tactic next) {
  return [keep, next](const Sequent& goal) -> Derivation {
    const NodeP& l = goal.left;
    const NodeP& z = goal.right;
    if (l->kind != Kind::Semi) return next(goal);
    const NodeP x = l->kids[0], y = l->kids[1];
    if (!contains_any(x, keep)) return Rule("W_L", {PruneNodes(keep, next)})(goal);
    if (!contains_any(y, keep)) return Rule("E_L", {Rule("W_L", {PruneNodes(keep, next)})})(goal);
    if (needs_pruning(y, keep)) {
      NodeP y2 = pruned(y, keep);
      return To(mk(y, gt(x, z)), PruneNodes(keep, To(mk(semi(x, y2), z), PruneNodes(keep, next))))(goal);
    }
    if (needs_pruning(x, keep)) {
      NodeP x2 = pruned(x, keep);
      return To(mk(x, gt(y, z)), PruneNodes(keep, To(mk(semi(x2, y), z), next)))(goal);
    }
    return next(goal);
  };
}
Tactic Prune(std::vector<std::string> keep, Tactic next) {
  return [keep, next](const Sequent& g) {
    std::vector<NodeP> k;
    for (const auto& s : keep) k.push_back(fm(s));
    return PruneNodes(k, next)(g);
  };
}

// ---------------------------------------------------------------- output

int failures = 0;

void emit(const fs::path& path, const Derivation& d, const std::vector<std::string>& agents,
          const std::vector<std::string>& exts, const std::vector<std::string>& resources,
          const std::vector<std::string>& reusable, const std::string& note) {
  ProofFile pf;
  pf.proof = d;
  pf.agents = agents;
  pf.extensions = exts;
  pf.resources = resources;
  pf.reusable = reusable;
  pf.note = note;
  CheckReport rep = check_derivation(d, pf.ruleset());
  if (!rep.ok) {
    std::cerr << "FAIL " << path << ": " << rep.failures.front().diagnostic << "\n";
    ++failures;
    return;
  }
  save_proof(pf, path.string());
  std::cout << "wrote " << path.string() << " (" << d.node_count() << " nodes, height " << d.height() << ")\n";
}

void build(const std::string& label, const std::function<void()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    f();
  } catch (const std::exception& e) {
    std::cerr << "FAIL " << label << ": " << e.what() << "\n";
    ++failures;
  }
  std::cerr << "  " << label << " "
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << "s\n";
}

// ---------------------------------------------------------------- axioms

void axioms(const fs::path& dir) {
  env.rules = base_ruleset();
  env.ctx = ParseContext{};
  env.ctx.resources = {"a", "b", "c"};
  env.macros.clear();
  env.budget = SearchBudget{};
  env.budget.max_nodes = 2000000;
  fs::create_directories(dir);

  // Sketches for the two sequents search does not reach within budget.
  const std::string L = "LftRes(Com(b * a, c * a), a)";
  Tactic r4b = Rule(
      "fuse_L",
      {Rule("join_R",
            {To("b + c |- " + L,
                Rule("Cc_R", {Rule("join_L", {To("Odot(b, a) |- Com(b * a, c * a)", Rule("Wc_R", {Rule("fuse_R")})),
                                              To("Odot(c, a) |- Com(b * a, c * a)",
                                                 Rule("Ec_R", {Rule("Wc_R", {Rule("fuse_R")})}))})}))})});
  Tactic bd1 = Rule(
      "and_L",
      {To("own a |- Gt(a |> p, dia p)",
          Rule("own_L", {To("a |> p |- Gt(CircR(a), dia p)",
                            Rule("BD1", {Rule("cap_L", {Auto(), To("Circ(p) |- dia p", Rule("dia_R"))})}))}))});

  // A node `BTlt(G, I) |- D` over `Phi |- D` is an instance of both W_Phi and
  // B7, so relabelling it goes unnoticed. Contracting first keeps every node
  // in this proof an instance of exactly one rule.
  Tactic b7 = Chain({"rcap_R", "dp-rcaps-1-inv", "Cc_L", "W_Phi"}, Rule("one_R"));

  struct Item {
    std::string name, goal;
    Tactic tactic;
  };
  const std::vector<Item> items = {
      {"R4a", "a * (b + c) |- a * b + a * c", Auto()},
      {"R4b", "(b + c) * a |- b * a + c * a", r4b},
      {"D1a", "dia (p \\/ q) |- dia p \\/ dia q", Auto()},
      {"D1b", "dia p \\/ dia q |- dia (p \\/ q)", Auto()},
      {"D2", "dia false |- false", Auto()},
      {"D3a", "own (a + b) |- own a \\/ own b", Auto()},
      {"D3b", "own a \\/ own b |- own (a + b)", Auto()},
      {"D4", "own 0 |- false", Auto()},
      {"B1a", "(a + b) |> p |- a |> p /\\ b |> p", Auto()},
      {"B1b", "a |> p /\\ b |> p |- (a + b) |> p", Auto()},
      {"B2", "I |- 0 |> p", Auto()},
      {"B3", "a |> b |> p |- a * b |> p", Auto()},
      {"B4a", "(a + b) |>> c |- a |>> c /\\ b |>> c", Auto()},
      {"B4b", "a |>> c /\\ b |>> c |- (a + b) |>> c", Auto()},
      {"B5", "I |- 0 |>> a", Auto()},
      {"B6a", "a |>> b & c |- a |>> b /\\ a |>> c", Auto()},
      {"B6b", "a |>> b /\\ a |>> c |- a |>> b & c", Auto()},
      {"B7", "I |- a |>> 1", b7},
      {"BD1", "own a /\\ a |> p |- dia p", bd1},
      {"BD2", "a |>> b |- a |> own b", Auto()},
  };
  for (const auto& it : items)
    build(it.name, [&] {
      Derivation d = it.tactic(seq(it.goal));
      emit(dir / (it.name + ".proof.json"), d, {}, {}, {"a", "b", "c"}, {}, "axiom " + it.name + " at atoms");
    });
}

// ---------------------------------------------------------------- case studies

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
  std::cout << "wrote " << p.string() << "\n";
}

// Loads the scenario so the proof is built against exactly the compiled
// target and rule set.
ProofObligation load_case(const fs::path& scn) {
  ProofObligation ob = compile_scenario(load_scenario(scn.string()));
  env.rules = ob.rules;
  env.ctx = ob.context;
  env.budget = SearchBudget{};
  env.budget.max_nodes = 500000;
  return ob;
}

void emit_case(const fs::path& scn, const Tactic& t, const std::string& note) {
  Scenario s = load_scenario(scn.string());
  ProofObligation ob = load_case(scn);
  Derivation d = t(ob.target);
  std::vector<std::string> plain;
  for (const auto& r : s.resources)
    if (std::find(s.reusable.begin(), s.reusable.end(), r) == s.reusable.end()) plain.push_back(r);
  emit(*ob.golden, d, s.agents, s.extensions, plain, s.reusable, note);
}

// own[i] x ; x |>[i] P |- P, arranged as Semi(capability, ownership).
Tactic exec(const std::string& i, const std::string& x, const std::string& p) {
  const std::string ag = "[" + i + "]";
  return To("own" + ag + " " + x + " |- Gt(" + x + " |>" + ag + " " + p + ", " + p + ")",
            Rule("own_L", {To(x + " |>" + ag + " " + p + " |- Gt(CircR" + ag + "(" + x + "), " + p + ")",
                              Rule("BD1", {Rule("cap_L", {Auto(), To("Circ" + ag + "(" + p + ") |- " + p,
                                                                     Rule("Ex_" + i, {Auto()}))})}))}));
}

// H |- goal from lemma H |- a and the step `Semi(H, a) |- goal`, by
// duplicating H and cutting on a.
Tactic plan(const std::string& a, const std::string& goal, Tactic lemma, Tactic step) {
  return Rule("C_L", {To("$H |- Gt($H, " + goal + ")",
                         Cut(a, {1}, lemma, To("Semi($H, " + a + ") |- " + goal, step)))});
}

// Modus ponens on hypothesis h = (a -> b), pruned to Semi(h, a).
Tactic mp(const std::string& h, const std::string& a, const std::string& b) {
  return Prune({h, a}, To(h + " |- Gt(" + a + ", " + b + ")", Rule("imp_L", {Auto(), Auto()})));
}

void homework(const fs::path& dir) {
  const fs::path scn = dir / "homework.scn";
  write_text(scn,
             "# Two students trade homework: each can produce one paper from owned\n"
             "# material and needs the other's output to produce the second.\n"
             "agents: c, d\n"
             "resources: a, b\n"
             "atoms: Pa, Pb, Ma, Mb\n"
             "extensions: ex\n"
             "assume: a |>[c] Pa\n"
             "assume: b |>[c] Pb\n"
             "assume: own[c] a\n"
             "assume: Mb -> own[c] b\n"
             "assume: a |>[d] Ma\n"
             "assume: b |>[d] Mb\n"
             "assume: own[d] b\n"
             "assume: Pa -> own[d] a\n"
             "goal: (Pa /\\ Mb) /\\ (Pb /\\ Ma)\n"
             "proof: homework.proof.json\n");
  env.macros = {{"h1", "a |>[c] Pa"},          {"h2", "b |>[c] Pb"},   {"h3", "own[c] a"},
                {"h4", "Mb -> own[c] b"},      {"h5", "a |>[d] Ma"},   {"h6", "b |>[d] Mb"},
                {"h7", "own[d] b"},            {"h8", "Pa -> own[d] a"},
                {"H", "Semi(Semi(Semi(Semi(Semi(Semi(Semi($h1, $h2), $h3), $h4), $h5), $h6), $h7), $h8)"}};
  Tactic pa = Prune({"$h1", "$h3"}, exec("c", "a", "Pa"));
  Tactic mb = Prune({"$h6", "$h7"}, exec("d", "b", "Mb"));
  // Planning: Mb yields own[c] b, which yields Pb; Pa yields own[d] a, which yields Ma.
  Tactic ownb = plan("Mb", "own[c] b", mb, mp("$h4", "Mb", "own[c] b"));
  Tactic pb = plan("own[c] b", "Pb", ownb, Prune({"$h2", "own[c] b"}, exec("c", "b", "Pb")));
  Tactic owna = plan("Pa", "own[d] a", pa, mp("$h8", "Pa", "own[d] a"));
  Tactic ma = plan("own[d] a", "Ma", owna, Prune({"$h5", "own[d] a"}, exec("d", "a", "Ma")));
  Tactic top = Rule("C_L", {Rule("and_R", {Rule("C_L", {Rule("and_R", {pa, mb})}),
                                           Rule("C_L", {Rule("and_R", {pb, ma})})})});
  emit_case(scn, top,
            "editorial reconstruction: the executions use BD1 and Ex; the conjuncts Pb and Ma are reached by "
            "planning cuts on own[c] b and own[d] a, each preceded by a cut on the other agent's product");
}

void crow(const fs::path& dir) {
  const fs::path scn = dir / "crow.scn";
  write_text(scn,
             "# A crow drops reusable stones into a pitcher until the water level\n"
             "# rises far enough to drink.\n"
             "resources: s!, r, l, f\n"
             "extensions: contr, scalab, trans\n"
             "assume: s! |>> r\n"
             "assume: r * r |>> l\n"
             "assume: l |>> f\n"
             "assume: own s!\n"
             "goal: dia own f\n"
             "proof: crow.proof.json\n");
  env.macros = {{"A1", "s! |>> r"}, {"A2", "r * r |>> l"}, {"A3", "l |>> f"}, {"X", "Semi(Semi($A1, $A2), $A3)"},
                {"ss", "Odot(s!, s!)"}};
  Tactic one_drop = To("$A1 |- RCapS(s!, r)", Rule("rcap_L"));
  Tactic two_drops =
      Rule("Scalab", {Rule("fuse_R", {one_drop, one_drop})});  // BTlt(ss, Semi(A1, A1)) |- r * r
  Tactic level = To("$A1 |- Gt($A2, RCapS($ss, l))",
                    Rule("C_L", {To("BTlt($ss, Semi(Semi($A1, $A1), $A2)) |- l",
                                    Rule("Trans", {To("$A2 |- RCapS(BTlt($ss, Semi($A1, $A1)), l)",
                                                      Rule("rcap_L", {two_drops}))}))}));
  Tactic t = To(
      "own s! |- Gt($X, dia own f)",
      Rule("own_L",
           {To("$X |- Gt(CircR(s!), dia own f)",
               Rule("BD1", {Rule("BD2", {To("Circ(CircR(BTlt(s!, $X))) |- dia own f",
                                            Rule("dia_R", {Rule("own_R", {To(
                                                                   "s! |- BTriBar($X, f)",
                                                                   Rule("Contr", {To(
                                                                       "BTlt($ss, $X) |- f",
                                                                       Rule("Trans", {To(
                                                                           "$A3 |- RCapS(BTlt($ss, Semi($A1, $A2)), f)",
                                                                           Rule("rcap_L", {level}))}))}))})}))})}))}));
  emit_case(scn, t, "the crow's plan: contract the reusable stone, scale the drop capability, chain by transitivity");
}

void gifts(const fs::path& dir) {
  const fs::path scn = dir / "gifts.scn";
  write_text(scn,
             "# Two agents each own one ingredient in role 1 and one in role 2 and\n"
             "# craft a gift for the other; receiving the gift removes the need to\n"
             "# keep one's role-2 ingredient.\n"
             "agents: j, d\n"
             "resources: eta, omega, beta, gamma\n"
             "extensions: roles, rr\n"
             "assume: own1[j] eta\n"
             "assume: own2[j] omega\n"
             "assume: [eta, omega] |>>[j] beta\n"
             "assume: dia[j] own2[d] beta -> dia[j] ~own2[j] omega\n"
             "assume: own1[d] omega\n"
             "assume: own2[d] eta\n"
             "assume: [omega, eta] |>>[d] gamma\n"
             "assume: dia[d] own2[j] gamma -> dia[d] ~own2[d] eta\n"
             "goal: dia[j] ~own2[j] omega /\\ dia[j] own2[d] beta /\\ dia[d] ~own2[d] eta /\\ dia[d] own2[j] gamma\n"
             "proof: gifts.proof.json\n");
  env.macros = {{"h1", "own1[j] eta"},
                {"h2", "own2[j] omega"},
                {"h3", "[eta, omega] |>>[j] beta"},
                {"h4", "dia[j] own2[d] beta -> dia[j] ~own2[j] omega"},
                {"h5", "own1[d] omega"},
                {"h6", "own2[d] eta"},
                {"h7", "[omega, eta] |>>[d] gamma"},
                {"h8", "dia[d] own2[j] gamma -> dia[d] ~own2[d] eta"},
                {"H", "Semi(Semi(Semi(Semi(Semi(Semi(Semi($h1, $h2), $h3), $h4), $h5), $h6), $h7), $h8)"},
                {"C1", "dia[j] ~own2[j] omega"},
                {"C2", "dia[j] own2[d] beta"},
                {"C3", "dia[d] ~own2[d] eta"},
                {"C4", "dia[d] own2[j] gamma"}};
  // Agent i crafts with s (role 1) and x (role 2) the gift g for agent k.
  auto craft = [](const std::string& i, const std::string& k, const std::string& s, const std::string& x,
                  const std::string& cap, const std::string& g) {
    const std::string ai = "[" + i + "]", ak = "[" + k + "]";
    const std::string o1 = "own1" + ai + " " + s, o2 = "own2" + ai + " " + x;
    const std::string r1 = "CircR1" + ai + "(" + s + ")", r2 = "CircR2" + ai + "(" + x + ")";
    const std::string z = "dia" + ai + " own2" + ak + " " + g;
    return To(o1 + " |- Gt(" + o2 + ", Gt(" + cap + ", " + z + "))",
              Rule(
                  "own1_L",
                  {To(o2 + " |- Gt(" + r1 + ", Gt(" + cap + ", " + z + "))",
                      Rule("own2_L",
                           {To("Semi(Semi(" + r1 + ", " + r2 + "), " + cap + ") |- " + z,
                               Rule("RR_" + i + "_" + k,
                                    {Rule("dia_R", {Rule("own2_R", {To(cap + " |- TCapS" + ai + "(" + s + ", " + x +
                                                                           ", " + g + ")",
                                                                       Rule("tcap_L"))})})}))}))}));
  };
  Tactic c2 = Prune({"$h1", "$h2", "$h3"}, craft("j", "d", "eta", "omega", "$h3", "beta"));
  Tactic c4 = Prune({"$h5", "$h6", "$h7"}, craft("d", "j", "omega", "eta", "$h7", "gamma"));
  Tactic c1 = plan("$C2", "$C1", c2, mp("$h4", "$C2", "$C1"));
  Tactic c3 = plan("$C4", "$C3", c4, mp("$h8", "$C4", "$C3"));
  Tactic top = Rule("C_L", {Rule("and_R", {Rule("C_L", {Rule("and_R", {Rule("C_L", {Rule("and_R", {c1, c2})}), c3})}),
                                           c4})});
  emit_case(scn, top, "each gift is crafted by the role-resource rule; the relief conjuncts follow by cuts");
}

void resilience(const fs::path& dir) {
  const fs::path scn = dir / "resilience.scn";
  write_text(scn,
             "# A producer holding two units of a or one a, together with b, can\n"
             "# still realize both products.\n"
             "resources: a, b, g1, g2\n"
             "extensions: bdr, scalab\n"
             "assume: own (((a * a) + a) * b)\n"
             "assume: a |>> g1\n"
             "assume: a + b |>> g2\n"
             "goal: own (g1 * g2)\n"
             "proof: resilience.proof.json\n");
  env.macros = {{"R", "((a * a) + a) * b"},
                {"AA", "(a * a) + a"},
                {"C1", "a |>> g1"},
                {"C2", "a + b |>> g2"},
                {"X", "Semi($C1, $C2)"}};
  Tactic produce = Rule(
      "Scalab", {Rule("fuse_R", {To("$C1 |- RCapS($AA, g1)", Rule("rcap_L")), To("$C2 |- RCapS(b, g2)", Rule("rcap_L"))})});
  Tactic t = To(
      "own ($R) |- Gt($X, own (g1 * g2))",
      Rule("own_L",
           {To("$X |- Gt(CircR($R), own (g1 * g2))",
               Rule("BDR", {To("CircR(BTlt($R, $X)) |- own (g1 * g2)",
                               Rule("own_R", {To("$R |- BTriBar($X, g1 * g2)",
                                                 Rule("fuse_L", {To("BTlt(Odot($AA, b), $X) |- g1 * g2", produce)}))}))}))}));
  emit_case(scn, t, "affine fusion (via W_Phi) discards the spare a in the a * a branch");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: lrc_elaborate <corpus-dir>\n";
    return 2;
  }
  const fs::path root = argv[1];
  axioms(root / "axioms");
  fs::create_directories(root / "cases");
  build("homework", [&] { homework(root / "cases"); });
  build("crow", [&] { crow(root / "cases"); });
  build("gifts", [&] { gifts(root / "cases"); });
  build("resilience", [&] { resilience(root / "cases"); });
  return failures == 0 ? 0 : 1;
}
