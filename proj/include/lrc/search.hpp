// Bounded, cut-free backward proof search.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/calculus.hpp"
#include "lrc/kernel.hpp"

namespace lrc {

struct SearchBudget {
  int max_depth = 12;
  std::uint64_t max_nodes = 200000;
  int max_contractions_per_branch = 2;
  std::uint64_t seed = 0;  // reserved; search is deterministic
};

struct SearchStats {
  std::uint64_t nodes = 0;   // goal expansions
  int depth_reached = 0;     // last completed iterative-deepening bound
  bool node_limit_hit = false;
};

struct SearchResult {
  std::optional<Derivation> proof;  // set when proved
  SearchStats stats;
  bool proved() const { return proof.has_value(); }
};

// Iterative deepening over backward rule applications, ordered axioms,
// operational, structural, display. Cut schemas are ignored.
SearchResult prove(const Sequent& goal, const RuleSet& rules, const SearchBudget& budget = {});

// Every sequent reachable by one display-postulate application.
std::vector<Sequent> display_moves(const Sequent& seq, const RuleSet& rules);

// Pruning key: ; and comma flattened modulo associativity and commutativity,
// fusion flattened modulo associativity only.
std::string loop_key(const Sequent& s);

// Shortest chain of unary structural/display rule applications deriving
// `from` from the single open premise `to`. Each step is (conclusion, rule);
// the premise of the last step is `to`. Empty optional when no chain of at
// most `max_steps` exists under the size cap.
struct BridgeStep {
  Sequent conclusion;
  std::string rule;
};
std::optional<std::vector<BridgeStep>> bridge(const Sequent& from, const Sequent& to, const RuleSet& rules,
                                              int max_steps = 6);

}  // namespace lrc
