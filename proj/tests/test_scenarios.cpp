#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "lrc/kernel.hpp"
#include "lrc/scenarios.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = LRC_CORPUS_DIR;

// Fresh scratch directory under the system temp dir, removed on scope exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("lrc-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

ProofObligation compile_text(const std::string& text) { return compile_scenario(parse_scenario(text)); }

}  // namespace

TEST_CASE("parse_scenario reads every key") {
  Scenario s = parse_scenario(
      "# comment\n"
      "name: demo\n"
      "agents: c, d\n"
      "resources: a, s!\n"
      "atoms: p, q\n"
      "extensions: ex\n"
      "assume: p\n"
      "assume: own[c] a\n"
      "goal: p /\\ q\n"
      "proof: demo.proof.json\n",
      "fallback", "/tmp/x");
  CHECK(s.name == "demo");
  CHECK(s.agents == std::vector<std::string>{"c", "d"});
  CHECK(s.resources == std::vector<std::string>{"a", "s"});
  CHECK(s.reusable == std::vector<std::string>{"s"});
  CHECK(s.atoms == std::vector<std::string>{"p", "q"});
  CHECK(s.atoms_declared);
  CHECK(s.extensions == std::vector<std::string>{"ex"});
  CHECK(s.assumptions == std::vector<std::string>{"p", "own[c] a"});
  CHECK(s.goal == "p /\\ q");
  CHECK(s.proof == "demo.proof.json");
  CHECK(s.dir == "/tmp/x");
  CHECK(s.context().reusable.count("s"));
}

TEST_CASE("parse_scenario errors") {
  CHECK_THROWS_AS(parse_scenario("assume: p\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("goal: p\ncolour: red\n"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("goal p\n"), ScenarioError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/x.scn"), ScenarioError);
}

TEST_CASE("assumptions compile to a left-nested Semi chain") {
  ProofObligation ob = compile_text("assume: p\nassume: q\nassume: r\ngoal: s\n");
  CHECK(render(ob.target) == "Semi(Semi(p, q), r) |- s");
  CHECK(ob.rules.rules.size() == base_ruleset().rules.size());
  CHECK_FALSE(ob.golden);
  CHECK(render(compile_text("goal: p -> p\n").target) == "I |- p -> p");
}

TEST_CASE("compile errors") {
  CHECK_THROWS_AS(compile_text("goal: own a\n"), UndeclaredAtom);
  CHECK_THROWS_AS(compile_text("atoms: p\ngoal: p /\\ q\n"), UndeclaredAtom);
  CHECK_THROWS_AS(compile_text("agents: c\nresources: a\ngoal: own[d] a\n"), UndeclaredAtom);
  CHECK_THROWS_AS(compile_text("extensions: nope\ngoal: p\n"), UnknownExtension);
  CHECK_THROWS_AS(compile_text("extensions: rr\ngoal: p\n"), MissingDependency);
  CHECK_THROWS_AS(compile_text("goal: p /\\\n"), ScenarioError);
  CHECK_NOTHROW(compile_text("resources: a\ngoal: own a\n"));
}

TEST_CASE("shipped scenarios compile to their golden conclusions") {
  for (const std::string name : {"crow", "gifts", "homework", "resilience"}) {
    INFO(name);
    Scenario s = load_scenario((kCorpus / "cases" / (name + ".scn")).string());
    CHECK(s.name == name);
    ProofObligation ob = compile_scenario(s);
    REQUIRE(ob.golden);
    ProofFile pf = load_proof(*ob.golden);
    CHECK(pf.proof.conclusion == ob.target);
    CheckReport rep = check_derivation(pf.proof, ob.rules);
    CHECK(rep.ok);
    // Implications among the assumptions are discharged by cut.
    CHECK(contains_cut(pf.proof, ob.rules) == (name == "gifts" || name == "homework"));
    // Only rules of the declared extensions appear.
    for (const auto& r : rules_used(pf.proof)) CHECK_MESSAGE(ob.rules.find(r) != nullptr, r);
  }
}

TEST_CASE("crow and resilience targets") {
  ProofObligation crow = compile_scenario(load_scenario((kCorpus / "cases" / "crow.scn").string()));
  CHECK(render(crow.target) == "Semi(Semi(Semi(s! |>> r, r * r |>> l), l |>> f), own s!) |- dia own f");
  CHECK(crow.rules.find("Contr") != nullptr);
  CHECK(crow.rules.find("Trans") != nullptr);
  ProofObligation res = compile_scenario(load_scenario((kCorpus / "cases" / "resilience.scn").string()));
  CHECK(render(res.target.right) == "own g1 * g2");
  CHECK(res.rules.find("Scalab") != nullptr);
  ProofObligation gifts = compile_scenario(load_scenario((kCorpus / "cases" / "gifts.scn").string()));
  CHECK(gifts.rules.find("Ex_j") == nullptr);
  CHECK(gifts.rules.rules.size() > base_ruleset().rules.size());
}

TEST_CASE("shipped corpus passes") {
  CorpusReport rep = run_corpus(kCorpus.string());
  CHECK(rep.ok());
  CHECK(rep.entries.size() == 28);
  std::size_t scenarios = 0;
  for (const auto& e : rep.entries) scenarios += e.kind == "scenario";
  CHECK(scenarios == 4);
  CHECK(rep.table().find("28/28 passed") != std::string::npos);
}

TEST_CASE("a relabelled node in a corpus copy is named") {
  TempDir tmp("corpus");
  fs::copy(kCorpus, tmp.path, fs::copy_options::recursive);
  const fs::path target = tmp.path / "axioms" / "B2.proof.json";
  ProofFile pf = load_proof(target.string());
  pf.proof.premises[0].rule = pf.proof.rule;
  {
    std::ofstream out(target);
    out << proof_to_json(pf);
  }
  CorpusReport rep = run_corpus(tmp.path.string());
  CHECK_FALSE(rep.ok());
  std::vector<std::string> failed;
  for (const auto& e : rep.entries)
    if (!e.ok) failed.push_back(fs::path(e.path).filename().string());
  CHECK(failed == std::vector<std::string>{"B2.proof.json"});
  CHECK(rep.table().find("27/28 passed") != std::string::npos);
}

TEST_CASE("a scenario whose golden proof concludes something else fails") {
  TempDir tmp("mismatch");
  fs::copy(kCorpus / "axioms" / "B2.proof.json", tmp.path / "B2.proof.json");
  {
    std::ofstream out(tmp.path / "wrong.scn");
    out << "goal: p\nproof: B2.proof.json\n";
  }
  CorpusEntry e = run_scenario((tmp.path / "wrong.scn").string());
  CHECK_FALSE(e.ok);
  CHECK(e.detail.find("expected") != std::string::npos);
}

TEST_CASE("scenarios without a golden proof are searched") {
  TempDir tmp("search");
  {
    std::ofstream out(tmp.path / "easy.scn");
    out << "assume: p /\\ q\ngoal: q /\\ p\n";
  }
  {
    std::ofstream out(tmp.path / "hard.scn");
    out << "assume: p\ngoal: q\n";
  }
  SearchBudget b;
  b.max_depth = 6;
  CHECK(run_scenario((tmp.path / "easy.scn").string(), b).ok);
  CHECK_FALSE(run_scenario((tmp.path / "hard.scn").string(), b).ok);
}

TEST_CASE("an empty directory gives an empty passing report") {
  TempDir tmp("empty");
  CorpusReport rep = run_corpus(tmp.path.string());
  CHECK(rep.entries.empty());
  CHECK(rep.ok());
  CHECK(run_corpus((tmp.path / "missing").string()).entries.empty());
}
