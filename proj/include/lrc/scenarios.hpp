// Scenario files (agents, resources, extensions, assumptions, goal) compiled
// into proof obligations, and the corpus runner.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/calculus.hpp"
#include "lrc/search.hpp"

namespace lrc {

struct ScenarioError : Error {
  using Error::Error;
};
struct UndeclaredAtom : Error {
  using Error::Error;
};

struct Scenario {
  std::string name;
  std::vector<std::string> agents;
  std::vector<std::string> resources;  // includes the reusable ones
  std::vector<std::string> reusable;
  std::vector<std::string> atoms;      // formula atoms; checked when declared
  bool atoms_declared = false;
  std::vector<std::string> extensions;
  std::vector<std::string> assumptions;
  std::string goal;
  std::string proof;  // golden proof path relative to the scenario file
  std::string dir;    // directory of the scenario file

  ParseContext context() const;
};

// Line format: `key: value`, keys agents, resources (a trailing `!` marks a
// reusable resource), atoms, extensions, assume (repeatable), goal, proof.
// `#` starts a comment.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario", const std::string& dir = ".");
Scenario load_scenario(const std::string& path);

struct ProofObligation {
  std::string name;
  Sequent target;
  RuleSet rules;
  std::optional<std::string> golden;  // resolved path
  ParseContext context;
};

// Assumptions A1..An become the left-nested Semi chain; throws
// UndeclaredAtom, UnknownExtension, ScenarioError.
ProofObligation compile_scenario(const Scenario& s);

struct CorpusEntry {
  std::string path;
  std::string kind;  // "proof" or "scenario"
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  bool ok() const;
  std::string table() const;
};

// Kernel-checks every *.proof.json and discharges every *.scn under `dir`
// (recursively, ordered by path). Scenarios without a golden proof are
// attempted with prove() under `budget`.
CorpusReport run_corpus(const std::string& dir, const SearchBudget& budget = {});

// Discharges one scenario: checks its golden proof against the compiled
// target, or runs prove().
CorpusEntry run_scenario(const std::string& path, const SearchBudget& budget = {});

}  // namespace lrc
