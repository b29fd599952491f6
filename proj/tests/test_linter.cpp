#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lrc/linter.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = LRC_CORPUS_DIR;

std::vector<std::string> failing(const RuleSchema& r) {
  std::vector<std::string> out;
  for (const auto& c : lint_rule(r))
    if (c.status == LintStatus::Fail) out.push_back(c.id);
  return out;
}

const ConditionResult& result(const std::vector<ConditionResult>& rs, const std::string& id) {
  for (const auto& c : rs)
    if (c.id == id) return c;
  FAIL("no condition " << id);
  return rs.front();
}

RuleSchema load_rule(const std::string& file) {
  std::ifstream in(kCorpus / "rules" / file);
  std::stringstream ss;
  ss << in.rdbuf();
  return rule_from_json(ss.str());
}

}  // namespace

TEST_CASE("condition list") {
  const auto& ids = lint_condition_ids();
  for (const char* id : {"C1", "C2", "C2'", "C3", "C4", "C6'/C7'", "C9", "C10", "C5-family", "C8-family"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK(std::string(lint_status_name(LintStatus::Manual)) == "manual");
}

TEST_CASE("every non-cut rule of every extension passes") {
  RuleSet all = extension_ruleset(extension_names(), {"c", "d"});
  int n = 0;
  for (const auto& r : all.rules) {
    if (r.kind == RuleKind::Cut) continue;
    ++n;
    auto rs = lint_rule(r);
    CHECK_MESSAGE(lint_passes(rs), r.name);
    CHECK(failing(r).empty());
    CHECK(result(rs, "C5-family").status == LintStatus::Manual);
    CHECK(result(rs, "C8-family").status == LintStatus::Manual);
  }
  CHECK(n == 133);
}

TEST_CASE("B3 passes every checkable condition") {
  auto rs = lint_rule(base_ruleset().at("B3"));
  for (const char* id : {"C1", "C2", "C2'", "C3", "C4", "C6'/C7'", "C9", "C10"})
    CHECK(result(rs, id).status == LintStatus::Pass);
}

TEST_CASE("an introduced modality in a premise fails C1") {
  RuleSchema bad = make_rule("bad", RuleKind::Structural, {"X |- dia A"}, "X |- A");
  auto rs = lint_rule(bad);
  CHECK(result(rs, "C1").status == LintStatus::Fail);
  CHECK(result(rs, "C1").diagnostic.find("dia") != std::string::npos);
  // The compound term also sits in a parametric position.
  CHECK(failing(bad) == std::vector<std::string>{"C1", "C6'/C7'"});
}

TEST_CASE("a metavariable changing sides fails C4") {
  RuleSchema bad = make_rule("bad", RuleKind::Structural, {"X |- Y"}, "Y |- X");
  auto rs = lint_rule(bad);
  CHECK(result(rs, "C4").status == LintStatus::Fail);
  CHECK(result(rs, "C4").diagnostic.find('X') != std::string::npos);
}

TEST_CASE("a duplicated conclusion parameter fails C3") {
  CHECK(failing(make_rule("bad", RuleKind::Structural, {"X |- Y"}, "Semi(X, X) |- Y")) ==
        std::vector<std::string>{"C3"});
}

TEST_CASE("seeded bad rules fail exactly their condition") {
  CHECK(failing(load_rule("bad_c1.json")) == std::vector<std::string>{"C1"});
  CHECK(failing(load_rule("bad_c3.json")) == std::vector<std::string>{"C3"});
  CHECK(failing(load_rule("bad_c4.json")) == std::vector<std::string>{"C4"});
  CHECK(failing(load_rule("good_B3.json")).empty());
}

TEST_CASE("moving a parameter across the turnstile is caught") {
  RuleSet all = extension_ruleset(extension_names(), {"c", "d"});
  int mutants = 0;
  for (const auto& r : all.rules) {
    if (r.kind == RuleKind::Cut || r.premises.empty()) continue;
    // Swap two same-sort structure variables of opposite sign in the conclusion.
    auto pos = positions(r.conclusion);
    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = i + 1; j < pos.size(); ++j) {
        const auto &a = pos[i], &b = pos[j];
        if (a.node->kind != Kind::StructVar || b.node->kind != Kind::StructVar) continue;
        if (a.sign == b.sign || a.node->sort != b.node->sort || a.node->name == b.node->name) continue;
        RuleSchema m = r;
        m.conclusion = replace_at(replace_at(r.conclusion, a.path, b.node), b.path, a.node);
        ++mutants;
        CHECK_MESSAGE(!failing(m).empty(), r.name << " with " << a.node->name << "/" << b.node->name);
      }
    // Swap the two sides of each premise that mentions variables on both sides.
    for (std::size_t k = 0; k < r.premises.size(); ++k) {
      const Sequent& p = r.premises[k];
      std::map<std::string, NodeP> l, rt;
      collect_vars(p.left, l);
      collect_vars(p.right, rt);
      if (l.empty() || rt.empty()) continue;
      RuleSchema m = r;
      m.premises[k] = Sequent(p.right, p.left);
      ++mutants;
      CHECK_MESSAGE(!failing(m).empty(), r.name << " premise " << k << " swapped");
    }
  }
  CHECK(mutants > 100);
}

TEST_CASE("lint matrix") {
  std::string m = lint_matrix(extension_ruleset({"ex", "scalab"}, {"c"}));
  CHECK(m.find("Scalab") != std::string::npos);
  CHECK(m.find("Ex_c") != std::string::npos);
  CHECK(m.find("C6'/C7'") != std::string::npos);
  CHECK(m.find("C5-family") != std::string::npos);
  CHECK(m.find(" fail ") == std::string::npos);
  CHECK(m.find(" pass ") != std::string::npos);
}
