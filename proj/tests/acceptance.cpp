// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "gen.hpp"
#include "lrc/algebra.hpp"
#include "lrc/kernel.hpp"
#include "lrc/linter.hpp"
#include "lrc/scenarios.hpp"
#include "lrc/search.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

// Pinned thresholds.
constexpr double kCorpusCheckSeconds = 2.0;
constexpr double kSearchSeconds = 10.0;
constexpr int kSearchDepth = 12;
constexpr double kCounterSeconds = 5.0;
constexpr double kInstantSeconds = 0.1;
constexpr int kCounterSizeBound = 2;
constexpr int kFuzzInstances = 1000;
constexpr int kStarFormulas = 500;
constexpr int kRoundTrips = 1000;
constexpr std::uint64_t kSeed = 20240611;

const fs::path kCorpus = LRC_CORPUS_DIR;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<std::string> kAxiomFiles = {"R4a", "R4b", "D1a", "D1b", "D2",  "D3a", "D3b", "D4",  "B1a", "B1b",
                                              "B2",  "B3",  "B4a", "B4b", "B5",  "B6a", "B6b", "B7",  "BD1", "BD2"};
const std::vector<std::string> kCaseFiles = {"homework", "crow", "gifts", "resilience"};

std::vector<std::pair<std::string, ProofFile>> golden_proofs() {
  std::vector<std::pair<std::string, ProofFile>> out;
  for (const auto& n : kAxiomFiles) out.emplace_back(n, load_proof((kCorpus / "axioms" / (n + ".proof.json")).string()));
  for (const auto& n : kCaseFiles) out.emplace_back(n, load_proof((kCorpus / "cases" / (n + ".proof.json")).string()));
  return out;
}

void for_each_node(Derivation& d, const std::function<void(Derivation&)>& f) {
  f(d);
  for (auto& p : d.premises) for_each_node(p, f);
}

// ---------------------------------------------------------------- 1

Outcome golden_corpus() {
  Outcome o;
  auto proofs = golden_proofs();
  std::size_t nodes = 0;
  auto t0 = Clock::now();
  for (auto& [name, pf] : proofs) {
    CheckReport rep = check_derivation(pf.proof, pf.ruleset());
    if (!rep.ok) o.fail(name + " rejected: " + rep.failures.front().diagnostic);
    nodes += pf.proof.node_count();
  }
  const double secs = since(t0);
  if (secs >= kCorpusCheckSeconds) o.fail("check took " + std::to_string(secs) + "s");
  // Relabel every node with every other rule name of its rule set.
  std::size_t mutants = 0, killed = 0;
  for (auto& [name, pf] : proofs) {
    RuleSet rules = pf.ruleset();
    for_each_node(pf.proof, [&](Derivation& node) {
      const std::string original = node.rule;
      for (const auto& r : rules.rules) {
        if (r.name == original) continue;
        node.rule = r.name;
        ++mutants;
        if (check_node(node, rules)) {
          ++killed;
        } else {
          o.fail(name + ": relabelling " + original + " to " + r.name + " at " + render(node.conclusion) +
                 " is accepted");
        }
      }
      node.rule = original;
    });
  }
  std::ostringstream d;
  d << proofs.size() << " proofs (" << kAxiomFiles.size() << " axiom, " << kCaseFiles.size() << " case), " << nodes
    << " nodes checked in " << secs << "s (< " << kCorpusCheckSeconds << "s); mutants killed " << killed << "/"
    << mutants;
  if (o.pass) o.detail = d.str();
  else o.detail += "; " + d.str();
  return o;
}

// ---------------------------------------------------------------- 2

Outcome search_goals() {
  Outcome o;
  const std::vector<std::string> goals = {"I |- 0 |> p",        "I |- 0 |>> a", "I |- a |>> 1",     "dia false |- false",
                                          "own 0 |- false",     "a & b |- b & a", "p /\\ q |- q /\\ p"};
  RuleSet rules = base_ruleset();
  double worst = 0;
  for (const auto& g : goals) {
    SearchBudget b;
    b.max_depth = kSearchDepth;
    auto t0 = Clock::now();
    SearchResult r = prove(parse_sequent(g), rules, b);
    const double secs = since(t0);
    worst = std::max(worst, secs);
    if (!r.proved()) {
      o.fail(g + " not proved (" + std::to_string(r.stats.nodes) + " nodes)");
      continue;
    }
    if (secs >= kSearchSeconds) o.fail(g + " took " + std::to_string(secs) + "s");
    if (!check_derivation(*r.proof, rules).ok) o.fail(g + ": proof rejected by the kernel");
    if (contains_cut(*r.proof, rules)) o.fail(g + ": proof contains a cut");
  }
  if (o.pass) o.detail = std::to_string(goals.size()) + " goals proved at depth <= 12, kernel-checked, slowest " +
                         std::to_string(worst) + "s (< 10s)";
  return o;
}

// ---------------------------------------------------------------- 3

bool preserves_truth(const HeterogeneousModel& m, const RuleInstance& inst, const gen::Pools& p) {
  // Enumerate all assignments over the atom pools.
  std::vector<std::string> fm(p.fm_atoms), res(p.res_atoms);
  const int nf = static_cast<int>(fm.size()), nr = static_cast<int>(res.size());
  std::vector<int> idx(nf + nr, 0);
  for (;;) {
    Assignment v;
    for (int i = 0; i < nf; ++i) v.fm[fm[i]] = idx[i];
    for (int i = 0; i < nr; ++i) v.res[res[i]] = idx[nf + i];
    bool prem = std::all_of(inst.premises.begin(), inst.premises.end(),
                            [&](const Sequent& s) { return holds_under(m, v, s); });
    if (prem && !holds_under(m, v, inst.conclusion)) return false;
    int k = 0;
    for (; k < nf + nr; ++k) {
      int lim = k < nf ? m.nA() : m.nQ();
      if (++idx[k] < lim) break;
      idx[k] = 0;
    }
    if (k == nf + nr) return true;
  }
}

Outcome soundness_fuzz() {
  Outcome o;
  const std::vector<std::string> names = {"trivial-2x2", "trivial-diamond-x-chain", "chain3-dia"};
  for (const auto& n : names) {
    AxiomReport rep = check_axioms(library_model(n));
    if (!rep.ok()) o.fail(n + " fails " + rep.failures());
  }
  int validity_checks = 0;
  for (const auto& [name, pf] : golden_proofs()) {
    const Sequent& c = pf.proof.conclusion;
    for (const auto& n : names) {
      HeterogeneousModel m = library_model(n, agents_of(c));
      try {
        if (!holds(m, c)) o.fail(name + " conclusion fails in " + n);
      } catch (const std::exception& e) {
        o.fail(name + " conclusion in " + n + ": " + e.what());
      }
      ++validity_checks;
    }
  }
  gen::Pools pools;
  pools.fm_atoms = {"p", "q"};
  pools.res_atoms = {"a", "b"};
  pools.agents = {""};
  pools.roles = false;
  pools.reusable = false;
  RuleSet base = base_ruleset();
  std::vector<const RuleSchema*> rules;
  for (const auto& r : base.rules)
    rules.push_back(&r);
  int violations = 0, instances = 0;
  for (const auto& n : names) {
    HeterogeneousModel m = library_model(n);
    std::mt19937_64 rng(kSeed);
    int made = 0;
    while (made < kFuzzInstances) {
      const RuleSchema& r = *gen::pick(rng, rules);
      auto inst = gen::instance(rng, r, 2, pools);
      if (!inst) continue;
      ++made;
      ++instances;
      try {
        if (!preserves_truth(m, *inst, pools)) {
          ++violations;
          o.fail(r.name + " instance not truth-preserving in " + n + ": " + render(inst->conclusion));
        }
      } catch (const Uninterpretable& e) {
        ++violations;
        o.fail(r.name + " instance uninterpretable: " + e.what());
      }
    }
  }
  if (o.pass)
    o.detail = "3 library models verified; " + std::to_string(validity_checks) +
               " golden conclusions valid; " + std::to_string(instances) +
               " random base-rule instances, " + std::to_string(violations) + " violations";
  return o;
}

// ---------------------------------------------------------------- 4

Outcome countermodels() {
  Outcome o;
  struct Goal {
    std::string seq;
    double limit;
  };
  const std::vector<Goal> goals = {{"p |- dia p", kCounterSeconds}, {"I |- own 1", kCounterSeconds}, {"p |- q", kInstantSeconds}};
  std::string found;
  for (const auto& g : goals) {
    Sequent s = parse_sequent(g.seq);
    auto t0 = Clock::now();
    auto cm = find_countermodel(s, kCounterSizeBound, 200, kSeed);
    const double secs = since(t0);
    if (!cm) {
      o.fail(g.seq + ": no countermodel");
      continue;
    }
    if (secs >= g.limit) o.fail(g.seq + " took " + std::to_string(secs) + "s");
    if (holds_under(cm->model, cm->assignment, s)) o.fail(g.seq + ": assignment does not refute");
    // The emitted model file must re-verify.
    HeterogeneousModel back = model_from_json(model_to_json(cm->model));
    if (!check_axioms(back).ok()) o.fail(g.seq + ": emitted model fails check_axioms");
    if (back.nA() > kCounterSizeBound || back.nQ() > kCounterSizeBound) o.fail(g.seq + ": model above size bound");
    found += (found.empty() ? "" : ", ") + g.seq + " by " + cm->source;
  }
  if (o.pass) o.detail = found + "; all re-verify";
  return o;
}

// ---------------------------------------------------------------- 5

// Pair index in a product carrier (first factor major).
int pair_index(int x, int y, int second_size) { return x * second_size + y; }

Outcome disjunction_property() {
  Outcome o;
  auto mp = find_countermodel(parse_sequent("I |- p"), 3, 200, kSeed);
  auto mq = find_countermodel(parse_sequent("I |- q"), 3, 200, kSeed + 1);
  if (!mp || !mq) {
    o.fail("no countermodel for p or q");
    return o;
  }
  HeterogeneousModel prod = product_model(mp->model, mq->model);
  HeterogeneousModel star = star_extension(prod);
  AxiomReport rep = check_axioms(star);
  if (!rep.ok()) o.fail("star(product) fails " + rep.failures());
  // The free coordinates take the top element, so [[p \/ q]] reaches the old
  // top of the product and only the new top stays out of reach.
  Assignment v;
  const int a2 = mq->model.nA();
  const int vp = mp->assignment.fm.at("p"), vq = mq->assignment.fm.at("q");
  if (vp == mp->model.A.top() || vq == mq->model.A.top()) o.fail("countermodel assigns top");
  v.fm["p"] = pair_index(vp, mq->model.A.top(), a2);
  v.fm["q"] = pair_index(mp->model.A.top(), vq, a2);
  const int val = eval_term(star, v, parse_term("p \\/ q", Sort::Fm));
  if (val == star.A.top()) o.fail("[[p \\/ q]]* is the new top");
  if (holds(star, parse_sequent("I |- p")) || holds(star, parse_sequent("I |- q")))
    o.fail("a disjunct is valid in star(product)");

  // Star lemma on random formulas.
  std::mt19937_64 rng(kSeed);
  gen::Pools pools;
  pools.agents = {""};
  pools.roles = false;
  pools.reusable = false;
  int checked = 0, raised = 0;
  for (const auto& m : library_models()) {
    HeterogeneousModel s = star_extension(m);
    for (int i = 0; i < kStarFormulas; ++i) {
      NodeP f = gen::term(rng, Sort::Fm, 4, pools);
      Assignment w;
      for (const auto& a : pools.fm_atoms) w.fm[a] = gen::pick(rng, m.nA());
      for (const auto& a : pools.res_atoms) w.res[a] = gen::pick(rng, m.nQ());
      const int base = eval_term(m, w, f), lifted = eval_term(s, w, f);
      ++checked;
      if (lifted == base) continue;
      if (lifted == s.A.top() && base == m.A.top()) {
        ++raised;
        continue;
      }
      o.fail("star lemma fails in " + m.name + " for " + render(f));
    }
  }
  if (o.pass)
    o.detail = "star(" + prod.name + ") verified, [[p \\/ q]]* = " + star.A.name(val) + " != T*; star lemma on " +
               std::to_string(checked) + " formulas (" + std::to_string(raised) + " lifted to T*)";
  return o;
}

// ---------------------------------------------------------------- 6

Outcome linter() {
  Outcome o;
  RuleSet all = extension_ruleset(extension_names(), {"c", "d"});
  int checked = 0;
  for (const auto& r : all.rules) {
    if (r.kind == RuleKind::Cut) continue;
    ++checked;
    for (const auto& c : lint_rule(r))
      if (c.status == LintStatus::Fail) o.fail(r.name + " fails " + c.id + ": " + c.diagnostic);
  }
  const std::vector<std::pair<std::string, std::string>> bad = {
      {"bad_c1.json", "C1"}, {"bad_c3.json", "C3"}, {"bad_c4.json", "C4"}};
  for (const auto& [file, want] : bad) {
    std::ifstream in(kCorpus / "rules" / file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::vector<std::string> failed;
    for (const auto& c : lint_rule(rule_from_json(ss.str())))
      if (c.status == LintStatus::Fail) failed.push_back(c.id);
    if (failed != std::vector<std::string>{want}) {
      std::string got;
      for (const auto& f : failed) got += " " + f;
      o.fail(file + " fails {" + got + " } instead of " + want);
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " non-cut rules pass all checkable conditions; 3 seeded bad rules fail exactly C1, C3, C4";
  return o;
}

// ---------------------------------------------------------------- 7

Outcome round_trips() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  gen::Pools pools;
  ParseContext ctx;
  ctx.resources = {"a", "b", "c"};
  for (int i = 0; i < kRoundTrips; ++i) {
    Sort s = i % 2 ? Sort::Fm : Sort::Res;
    NodeP t = gen::term(rng, s, 4, pools);
    if (!equal(parse_term(render(t), s, ctx), t)) o.fail("term " + render(t));
    NodeP st = gen::structure(rng, s, 4, pools);
    if (!equal(parse_structure(render(st), s, ctx), st)) o.fail("structure " + render(st));
    Sequent q = gen::sequent(rng, 3, pools);
    if (parse_sequent(render(q), ctx) != q) o.fail("sequent " + render(q));
  }
  gen::Pools sem;
  sem.fm_atoms = {"p", "q"};
  sem.res_atoms = {"a", "b"};
  sem.agents = {""};
  sem.roles = false;
  sem.reusable = false;
  RuleSet base = base_ruleset();
  std::vector<const RuleSchema*> dps;
  for (const auto& r : base.rules)
    if (r.kind == RuleKind::Display) dps.push_back(&r);
  HeterogeneousModel m = library_model("chain3-dia");
  int made = 0;
  while (made < kRoundTrips) {
    auto inst = gen::instance(rng, *gen::pick(rng, dps), 2, sem);
    if (!inst) continue;
    ++made;
    for (int k = 0; k < 8; ++k) {
      Assignment v;
      for (const auto& a : sem.fm_atoms) v.fm[a] = gen::pick(rng, m.nA());
      for (const auto& a : sem.res_atoms) v.res[a] = gen::pick(rng, m.nQ());
      if (holds_under(m, v, inst->premises[0]) != holds_under(m, v, inst->conclusion))
        o.fail(inst->schema + " changes truth value at " + render(inst->conclusion));
    }
  }
  if (o.pass)
    o.detail = std::to_string(kRoundTrips) + " terms, structures and sequents round-trip; " +
               std::to_string(made) + " display-postulate instances invariant on chain3-dia";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 golden corpus and mutation kill", golden_corpus},
      {"2 search acceptance goals", search_goals},
      {"3 soundness fuzz", soundness_fuzz},
      {"4 countermodels", countermodels},
      {"5 disjunction property and star lemma", disjunction_property},
      {"6 linter", linter},
      {"7 round-trips and display invariance", round_trips},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << since(t0) << "s)  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
