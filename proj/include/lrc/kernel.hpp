// Derivation trees, the proof checker, and proof JSON files.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/calculus.hpp"
#include "lrc/syntax.hpp"

namespace lrc {

struct Derivation {
  Sequent conclusion;
  std::string rule;
  std::vector<Derivation> premises;
  std::optional<Path> cut_path;

  std::size_t node_count() const;
  std::size_t height() const;
};

struct CheckFailure {
  std::vector<int> tree_path;  // child indices from the root
  std::string rule;
  std::string diagnostic;
};

struct CheckReport {
  bool ok = true;
  std::vector<CheckFailure> failures;
};

CheckReport check_derivation(const Derivation& d, const RuleSet& rules);

struct InstanceCheck {
  bool ok = false;
  std::string diagnostic;
};

// Throws UnknownRule when the schema is not in `rules`.
InstanceCheck check_rule_instance(const RuleInstance& inst, const RuleSet& rules);

// Checks one node against its children's conclusions; empty on success.
std::optional<std::string> check_node(const Derivation& d, const RuleSet& rules);

bool contains_cut(const Derivation& d, const RuleSet& rules);
std::vector<std::string> rules_used(const Derivation& d);

// Proof files carry the parse context they need (declared resources,
// reusable resources, agents) and the extension list of the rule set.
struct ProofFile {
  Derivation proof;
  std::vector<std::string> agents;
  std::vector<std::string> extensions;
  std::vector<std::string> resources;
  std::vector<std::string> reusable;
  std::string note;

  ParseContext context() const;
  RuleSet ruleset() const;
};

ProofFile proof_from_json(const std::string& text);
ProofFile load_proof(const std::string& path);
std::string proof_to_json(const ProofFile& pf);
void save_proof(const ProofFile& pf, const std::string& path);

// Bottom-up tree rendering with right-aligned rule labels.
std::string render_tree(const Derivation& d);

}  // namespace lrc
