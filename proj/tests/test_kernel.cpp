#include <filesystem>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "lrc/kernel.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = LRC_CORPUS_DIR;

ParseContext res_ctx() {
  ParseContext c;
  c.resources = {"a", "b", "c", "s", "d"};
  return c;
}

Derivation node(const std::string& seq, const std::string& rule, std::vector<Derivation> prems = {}) {
  return Derivation{parse_sequent(seq, res_ctx()), rule, std::move(prems), std::nullopt};
}


// a |> p |- a |> p, by cap_R over cap_L.
Derivation cap_identity() {
  return node("a |> p |- a |> p", "cap_R",
              {node("a |> p |- CapS(a, p)", "cap_L", {node("a |- a", "id-res"), node("p |- p", "id-fm")})});
}

}  // namespace

TEST_CASE("B2 golden proof and its mutation") {
  ProofFile pf = load_proof((kCorpus / "axioms" / "B2.proof.json").string());
  RuleSet rules = pf.ruleset();
  CHECK(check_derivation(pf.proof, rules).ok);
  CHECK(pf.proof.node_count() == 6);
  CHECK(pf.proof.rule == "cap_R");
  Derivation mutated = pf.proof;
  mutated.rule = "cap_L";
  CheckReport rep = check_derivation(mutated, rules);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].tree_path.empty());
  CHECK(rep.failures[0].rule == "cap_L");
}

TEST_CASE("every golden proof checks and every single relabelling is caught") {
  for (const auto& ent : fs::recursive_directory_iterator(kCorpus)) {
    const std::string name = ent.path().filename().string();
    if (name.size() < 11 || name.substr(name.size() - 11) != ".proof.json") continue;
    ProofFile pf = load_proof(ent.path().string());
    RuleSet rules = pf.ruleset();
    REQUIRE_MESSAGE(check_derivation(pf.proof, rules).ok, name);
    // Whole-tree check on a sample of mutants; the acceptance run covers all.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      Derivation m = pf.proof;
      Derivation* n = &m;
      while (!n->premises.empty() && gen::pick(rng, 3) != 0) n = &n->premises[gen::pick(rng, static_cast<int>(n->premises.size()))];
      const std::string& other = gen::pick(rng, rules.rules).name;
      if (other == n->rule) continue;
      n->rule = other;
      CHECK_MESSAGE(!check_derivation(m, rules).ok, name << " relabelled to " << other);
    }
  }
}

TEST_CASE("surgical cut on a capability formula") {
  RuleSet rules = base_ruleset();
  Derivation right = node("a |> p |- CapS(a, p)", "cap_L", {node("a |- a", "id-res"), node("p |- p", "id-fm")});
  Derivation cut = node("a |> p |- CapS(a, p)", "cut-fm", {cap_identity(), right});
  cut.cut_path = Path{1};
  CHECK(check_derivation(cut, rules).ok);
  CHECK(contains_cut(cut, rules));
  CHECK_FALSE(contains_cut(right, rules));

  Derivation missing = cut;
  missing.cut_path.reset();
  CHECK_FALSE(check_derivation(missing, rules).ok);

  Derivation dangling = cut;
  dangling.cut_path = Path{1, 4};
  CHECK_FALSE(check_derivation(dangling, rules).ok);
}

TEST_CASE("cut at a precedent occurrence is rejected") {
  RuleSet rules = base_ruleset();
  // q sits at sign + inside the antecedent slot of Gt on the right.
  Derivation d = node("p |- Gt(r, s)", "cut-fm", {node("p |- Gt(q, s)", "id-fm"), node("q |- r", "id-fm")});
  d.cut_path = Path{1, 0};
  auto why = check_node(d, rules);
  REQUIRE(why);
  CHECK(why->find("cut occurrence not succedent part") != std::string::npos);

  RuleInstance inst;
  inst.schema = "cut-fm";
  inst.conclusion = d.conclusion;
  inst.premises = {d.premises[0].conclusion, d.premises[1].conclusion};
  inst.cut_path = Path{1, 0};
  InstanceCheck c = check_rule_instance(inst, rules);
  CHECK_FALSE(c.ok);
  CHECK(c.diagnostic.find("succedent") != std::string::npos);
}

TEST_CASE("Res cut is a plain two-premise rule") {
  RuleSet rules = base_ruleset();
  ParseContext ctx = res_ctx();
  Derivation d{parse_sequent("a |- b", ctx), "cut-res",
               {Derivation{parse_sequent("a |- a * b", ctx), "x", {}, {}},
                Derivation{parse_sequent("a * b |- b", ctx), "x", {}, {}}},
               {}};
  CHECK_FALSE(check_node(d, rules).has_value());
  d.premises[1].conclusion = parse_sequent("b * a |- b", ctx);
  CHECK(check_node(d, rules).has_value());
}

TEST_CASE("check_rule_instance: weakening Phi and the Contr side condition") {
  ParseContext ctx = res_ctx();
  RuleSet rules = extension_ruleset({"contr"});
  Substitution ws;
  ws.vars["G"] = parse_structure("Odot(Com(a, b), BTlt(a, Semi(p, q)))", Sort::Res, ctx);
  ws.vars["D"] = atom("d", Sort::Res);
  RuleInstance w = instantiate(rules.at("W_Phi"), ws);
  CHECK(render(w.premises[0]) == "Phi |- d");
  CHECK(check_rule_instance(w, rules).ok);
  w.premises[0] = parse_sequent("a |- d", ctx);
  CHECK_FALSE(check_rule_instance(w, rules).ok);

  RuleInstance c;
  c.schema = "Contr";
  c.subst.vars["S"] = parse_structure("Odot(s!, a)", Sort::Res, ctx);
  c.subst.vars["O"] = atom("d", Sort::Res);
  c.premises = {parse_sequent("Odot(Odot(s!, a), Odot(s!, a)) |- d", ctx)};
  c.conclusion = parse_sequent("Odot(s!, a) |- d", ctx);
  InstanceCheck r = check_rule_instance(c, rules);
  CHECK_FALSE(r.ok);
  CHECK(r.diagnostic.find("reusable") != std::string::npos);

  RuleInstance unknown;
  unknown.schema = "nope";
  CHECK_THROWS_AS(check_rule_instance(unknown, rules), UnknownRule);
}

TEST_CASE("structural defects are reported, not thrown") {
  RuleSet rules = base_ruleset();
  CheckReport leaf = check_derivation(node("p /\\ q |- p", "and_L"), rules);
  CHECK_FALSE(leaf.ok);
  CheckReport unknown = check_derivation(node("p |- p", "no-such-rule"), rules);
  REQUIRE_FALSE(unknown.ok);
  CHECK(unknown.failures[0].rule == "no-such-rule");
  // Premise order matters.
  Derivation swapped = node("Semi(p, q) |- p /\\ q", "and_R", {node("q |- q", "id-fm"), node("p |- p", "id-fm")});
  CHECK_FALSE(check_derivation(swapped, rules).ok);
  std::swap(swapped.premises[0], swapped.premises[1]);
  CHECK(check_derivation(swapped, rules).ok);
}

TEST_CASE("failures carry tree paths in order") {
  RuleSet rules = base_ruleset();
  Derivation d = cap_identity();
  d.premises[0].premises[1].rule = "id-res";
  d.premises[0].premises[0].rule = "id-fm";
  CheckReport rep = check_derivation(d, rules);
  REQUIRE(rep.failures.size() == 2);
  CHECK(rep.failures[0].tree_path == std::vector<int>{0, 0});
  CHECK(rep.failures[1].tree_path == std::vector<int>{0, 1});
}

TEST_CASE("matcher and checker agree on random instances") {
  std::mt19937_64 rng(8);
  gen::Pools pools;
  RuleSet all = extension_ruleset(extension_names(), {"c", "d"});
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    const RuleSchema& seed_rule = gen::pick(rng, all.rules);
    if (seed_rule.kind == RuleKind::Cut) continue;
    auto fwd = gen::instance(rng, seed_rule, 3, pools);
    if (!fwd) continue;
    // Every rule that matches the goal yields a node the kernel accepts.
    for (const auto& r : all.rules) {
      for (const auto& inst : match_rule(r, fwd->conclusion)) {
        Derivation d{fwd->conclusion, r.name, {}, inst.cut_path};
        for (const auto& p : inst.premises) d.premises.push_back(Derivation{p, "open", {}, {}});
        CHECK_MESSAGE(!check_node(d, all).has_value(), r.name << " at " << render(fwd->conclusion));
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("proof files round-trip") {
  ProofFile pf = load_proof((kCorpus / "cases" / "crow.proof.json").string());
  ProofFile back = proof_from_json(proof_to_json(pf));
  CHECK(back.proof.conclusion == pf.proof.conclusion);
  CHECK(back.proof.node_count() == pf.proof.node_count());
  CHECK(rules_used(back.proof) == rules_used(pf.proof));
  CHECK(back.reusable == pf.reusable);
  CHECK(back.extensions == pf.extensions);
  CHECK(check_derivation(back.proof, back.ruleset()).ok);
  CHECK_THROWS(proof_from_json("{\"seq\": \"p |- Odot(a, b)\", \"rule\": \"x\", \"prems\": []}"));
  CHECK_THROWS(proof_from_json("[1, 2]"));
}

TEST_CASE("render_tree shows conclusions and rule labels") {
  std::string t = render_tree(cap_identity());
  CHECK(t.find("a |> p |- a |> p") != std::string::npos);
  CHECK(t.find("cap_R") != std::string::npos);
  CHECK(t.find("id-res") != std::string::npos);
  // Conclusion is printed last (bottom-up layout).
  CHECK(t.rfind("a |> p |- a |> p") > t.find("p |- p"));
}
