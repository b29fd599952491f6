// Rule schemas, rule sets (base calculus plus named extensions) and matching.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lrc/syntax.hpp"

namespace lrc {

struct UnknownExtension : Error {
  using Error::Error;
};
struct MissingDependency : Error {
  using Error::Error;
};
struct UnknownRule : Error {
  using Error::Error;
};
struct RuleFormatError : Error {
  using Error::Error;
};

enum class RuleKind { Axiom, Operational, Structural, Display, Cut };
const char* rule_kind_name(RuleKind k);
RuleKind rule_kind_from_name(const std::string& s);

struct SideCondition {
  std::string name;  // only "reusable-only" is defined
  std::string var;   // structure metavariable it constrains
};

struct RuleSchema {
  std::string name;
  RuleKind kind = RuleKind::Structural;
  std::vector<Sequent> premises;
  Sequent conclusion;
  bool invertible = false;  // one direction of a double-line rule
  std::optional<SideCondition> side_condition;
  std::map<std::string, MetaDecl> metavars;
  std::set<std::string> agent_vars;
  // Fm surgical cut: premises are (X |- Y)[A] and A |- Z, the conclusion is
  // the first premise with Z at the annotated succedent occurrence of A.
  bool surgical = false;
  std::string extension;  // empty for base rules
};

struct RuleSet {
  std::string name;
  std::vector<RuleSchema> rules;
  std::set<std::string> extensions;
  std::vector<std::string> agents;  // declared agents; "" is the default agent

  const RuleSchema* find(const std::string& rule_name) const;
  const RuleSchema& at(const std::string& rule_name) const;  // throws UnknownRule
  void add(RuleSchema r);                                    // throws on duplicate names

 private:
  std::map<std::string, std::size_t> index_;
};

struct RuleInstance {
  std::string schema;
  Substitution subst;
  std::vector<Sequent> premises;
  Sequent conclusion;
  std::optional<Path> cut_path;
};

// Standard metavariable declarations used by the built-in rule tables:
// X Y Z W (Fm structures), G D S P O T Xi (Res structures), A B (Fm terms),
// al be ga (Res terms), p (Fm atom), a (Res atom); agent variables i, k.
ParseContext rule_context();

// Parses a rule from pattern strings under the standard declarations.
RuleSchema make_rule(const std::string& name, RuleKind kind, const std::vector<std::string>& prems,
                     const std::string& concl);

// The base calculus. `agents` lists the declared agents; the default agent
// is always included.
RuleSet base_ruleset(const std::vector<std::string>& agents = {});

// Known extension names in canonical order.
const std::vector<std::string>& extension_names();
RuleSet extension_ruleset(const std::vector<std::string>& names,
                          const std::vector<std::string>& agents = {});
// Parses "base,ex,contr" style lists.
RuleSet ruleset_from_spec(const std::string& spec, const std::vector<std::string>& agents = {});

// Side condition: structure built only from reusable resource atoms, Phi,
// fusion and comma.
bool reusable_only(const NodeP& n);
bool side_condition_holds(const RuleSchema& r, const Substitution& s, std::string* why = nullptr);

struct MatchOptions {
  // For cut schemas: the cut formula (Fm cut) or cut resource (Res cut).
  NodeP cut_formula;
  // For the Fm cut: a fixed hole path; when absent all succedent occurrences
  // of the cut formula are enumerated.
  std::optional<Path> cut_path;
};

// Backward matching: all instances whose conclusion equals goal. Cut schemas
// need opts.cut_formula, otherwise nothing is returned.
std::vector<RuleInstance> match_rule(const RuleSchema& r, const Sequent& goal,
                                     const MatchOptions& opts = {});

// Forward instantiation with a complete substitution.
RuleInstance instantiate(const RuleSchema& r, const Substitution& s);

// JSON rule files.
RuleSchema rule_from_json(const std::string& json_text);
std::string rule_to_json(const RuleSchema& r);

}  // namespace lrc
