#include "lrc/search.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace lrc {

// ---------------------------------------------------------------- keys

namespace {

void flatten_into(const NodeP& n, Kind k, std::vector<NodeP>& out) {
  if (n->kind == k) {
    for (const auto& c : n->kids) flatten_into(c, k, out);
  } else {
    out.push_back(n);
  }
}

std::string node_key(const NodeP& n) {
  const auto& info = kind_info(n->kind);
  std::string head = info.name;
  if (n->kind == Kind::Atom) head = n->name + (n->reusable ? "!" : "");
  if (info.agent_indexed) head += "[" + n->agent + "]";
  if (n->kids.empty()) return head;
  std::vector<std::string> parts;
  if (n->kind == Kind::Semi || n->kind == Kind::Com || n->kind == Kind::Odot) {
    std::vector<NodeP> flat;
    flatten_into(n, n->kind, flat);
    for (const auto& c : flat) parts.push_back(node_key(c));
    if (n->kind != Kind::Odot) std::sort(parts.begin(), parts.end());
  } else {
    for (const auto& c : n->kids) parts.push_back(node_key(c));
  }
  std::string s = head + "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

}  // namespace

std::string loop_key(const Sequent& s) { return node_key(s.left) + " |- " + node_key(s.right); }

// ---------------------------------------------------------------- rule classes

namespace {

bool is_contraction(const std::string& n) {
  return n == "C_L" || n == "C_R" || n == "Cc_L" || n == "Cc_R" || n == "Contr";
}

bool is_weakening(const std::string& n) {
  return n == "W_L" || n == "W_R" || n == "Wc_L" || n == "Wc_R" || n == "W_Phi";
}

// Rules that only rearrange: the premise has the same loop key as the
// conclusion, so pruning compares exact sequents for them instead.
bool is_permutation(const std::string& n) {
  static const std::set<std::string> names = {"E_L",  "E_R",      "A_L",      "A_L-inv", "A_R",      "A_R-inv",
                                              "Ec_L", "Ec_R",     "Ac_L",     "Ac_L-inv", "Ac_R",    "Ac_R-inv"};
  return names.count(n) > 0;
}

int pattern_size(const Sequent& s) { return static_cast<int>(s.left->size() + s.right->size()); }

struct OrderedRule {
  const RuleSchema* schema;
  bool contraction, weakening, permutation, growth;
};

int kind_rank(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom: return 0;
    case RuleKind::Operational: return 1;
    case RuleKind::Structural: return 2;
    case RuleKind::Display: return 3;
    case RuleKind::Cut: return 4;
  }
  return 4;
}

std::vector<OrderedRule> order_rules(const RuleSet& rules) {
  std::vector<OrderedRule> out;
  for (const auto& r : rules.rules) {
    if (r.kind == RuleKind::Cut) continue;
    bool growth = r.premises.size() == 1 && pattern_size(r.premises[0]) > pattern_size(r.conclusion);
    out.push_back({&r, is_contraction(r.name), is_weakening(r.name), is_permutation(r.name), growth});
  }
  std::stable_sort(out.begin(), out.end(), [](const OrderedRule& a, const OrderedRule& b) {
    return kind_rank(a.schema->kind) < kind_rank(b.schema->kind);
  });
  return out;
}

struct SeqHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

class Prover {
 public:
  Prover(const Sequent& goal, const RuleSet& rules, const SearchBudget& budget)
      : rules_(order_rules(rules)), budget_(budget) {
    size_cap_ = 4 * std::max(pattern_size(goal), 4);
  }

  std::optional<Derivation> run(const Sequent& goal) {
    for (int d = 1; d <= budget_.max_depth; ++d) {
      branch_keys_.clear();
      branch_seqs_.clear();
      if (auto r = solve(goal, d, budget_.max_contractions_per_branch)) return r;
      if (stats.node_limit_hit) return std::nullopt;
      stats.depth_reached = d;
    }
    return std::nullopt;
  }

  SearchStats stats;

 private:
  struct FailKey {
    Sequent seq;
    int contractions;
    bool operator==(const FailKey& o) const { return contractions == o.contractions && seq == o.seq; }
  };
  struct FailHash {
    std::size_t operator()(const FailKey& k) const { return k.seq.hash() * 31 + k.contractions; }
  };

  bool out_of_nodes() {
    if (stats.nodes >= budget_.max_nodes) {
      stats.node_limit_hit = true;
      return true;
    }
    return false;
  }

  // True when an axiom or an operational rule applies to `s` within `steps`
  // further non-weakening structural or display moves.
  bool exposes(const Sequent& s, int steps) {
    for (const auto& r : rules_) {
      if (r.schema->kind != RuleKind::Axiom && r.schema->kind != RuleKind::Operational) continue;
      if (!match_rule(*r.schema, s).empty()) return true;
    }
    if (steps == 0) return false;
    for (const auto& r : rules_) {
      if (r.schema->kind != RuleKind::Structural && r.schema->kind != RuleKind::Display) continue;
      if (r.weakening || r.contraction || r.growth || r.schema->premises.size() != 1) continue;
      for (const auto& inst : match_rule(*r.schema, s))
        if (inst.premises[0] != s && exposes(inst.premises[0], steps - 1)) return true;
    }
    return false;
  }

  std::optional<Derivation> solve(const Sequent& goal, int depth, int contractions) {
    if (auto it = proved_.find(goal); it != proved_.end()) return it->second;
    if (depth <= 0) return std::nullopt;
    FailKey fk{goal, contractions};
    if (auto it = failed_.find(fk); it != failed_.end() && it->second >= depth) return std::nullopt;
    if (out_of_nodes()) return std::nullopt;
    ++stats.nodes;
    const std::string key = loop_key(goal);
    branch_keys_.insert(key);
    branch_seqs_.insert(goal);
    std::optional<Derivation> result;
    for (const auto& r : rules_) {
      if (r.contraction && contractions == 0) continue;
      for (auto& inst : match_rule(*r.schema, goal)) {
        if (!premises_allowed(r, inst)) continue;
        Derivation d;
        d.conclusion = goal;
        d.rule = inst.schema;
        bool ok = true;
        for (const auto& p : inst.premises) {
          auto sub = solve(p, depth - 1, contractions - (r.contraction ? 1 : 0));
          if (!sub) {
            ok = false;
            break;
          }
          d.premises.push_back(std::move(*sub));
        }
        if (ok) {
          result = std::move(d);
          break;
        }
        if (stats.node_limit_hit) break;
      }
      if (result || stats.node_limit_hit) break;
    }
    branch_keys_.erase(key);
    branch_seqs_.erase(goal);
    if (result) {
      proved_.emplace(goal, *result);
    } else if (!stats.node_limit_hit) {
      int& f = failed_[fk];
      f = std::max(f, depth);
    }
    return result;
  }

  bool premises_allowed(const OrderedRule& r, const RuleInstance& inst) {
    for (const auto& p : inst.premises) {
      if (pattern_size(p) > size_cap_) return false;
      if (branch_seqs_.count(p)) return false;
      if (!r.permutation && branch_keys_.count(loop_key(p))) return false;
    }
    if (r.weakening && !exposes(inst.premises[0], 2)) return false;
    return true;
  }

  std::vector<OrderedRule> rules_;
  SearchBudget budget_;
  int size_cap_ = 0;
  std::unordered_set<std::string> branch_keys_;
  std::unordered_set<Sequent, SeqHash> branch_seqs_;
  std::unordered_map<Sequent, Derivation, SeqHash> proved_;
  std::unordered_map<FailKey, int, FailHash> failed_;
};

}  // namespace

SearchResult prove(const Sequent& goal, const RuleSet& rules, const SearchBudget& budget) {
  Prover p(goal, rules, budget);
  SearchResult res;
  res.proof = p.run(goal);
  res.stats = p.stats;
  if (res.proof && contains_cut(*res.proof, rules)) throw Error("search produced a cut node");
  return res;
}

std::vector<Sequent> display_moves(const Sequent& seq, const RuleSet& rules) {
  std::vector<Sequent> out;
  for (const auto& r : rules.rules) {
    if (r.kind != RuleKind::Display) continue;
    for (const auto& inst : match_rule(r, seq))
      if (std::find(out.begin(), out.end(), inst.premises[0]) == out.end()) out.push_back(inst.premises[0]);
  }
  return out;
}

// ---------------------------------------------------------------- bridging

namespace {

bool bridge_rule(const RuleSchema& r) {
  return (r.kind == RuleKind::Structural || r.kind == RuleKind::Display) && r.premises.size() == 1 && !r.surgical;
}

// Forward application: conclusions derivable from `s` as the premise.
std::vector<Sequent> forward(const RuleSchema& r, const Sequent& s) {
  std::vector<Sequent> out;
  Substitution sub;
  if (!match(r.premises[0], s, sub)) return out;
  if (!side_condition_holds(r, sub)) return out;
  try {
    out.push_back(substitute(r.conclusion, sub));
  } catch (const UnboundVarError&) {
  } catch (const TypeUniformityError&) {
  }
  return out;
}

}  // namespace

std::optional<std::vector<BridgeStep>> bridge(const Sequent& from, const Sequent& to, const RuleSet& rules,
                                              int max_steps) {
  if (from == to) return std::vector<BridgeStep>{};
  const int cap = 2 * std::max(pattern_size(from), pattern_size(to)) + 4;
  // Backward layer from `from`: seq -> (parent conclusion, rule).
  std::unordered_map<Sequent, std::pair<Sequent, std::string>, SeqHash> back, fwd;
  std::vector<Sequent> back_frontier{from}, fwd_frontier{to};
  back.emplace(from, std::make_pair(from, std::string()));
  fwd.emplace(to, std::make_pair(to, std::string()));
  std::vector<const RuleSchema*> rs;
  for (const auto& r : rules.rules)
    if (bridge_rule(r)) rs.push_back(&r);

  auto assemble = [&](const Sequent& meet) {
    std::vector<BridgeStep> steps;
    // from -> ... -> meet along the backward tree
    std::vector<BridgeStep> head;
    Sequent cur = meet;
    while (!(cur == from)) {
      const auto& [parent, rule] = back.at(cur);
      head.push_back({parent, rule});
      cur = parent;
    }
    std::reverse(head.begin(), head.end());
    steps = head;
    // meet -> ... -> to along the forward tree
    cur = meet;
    while (!(cur == to)) {
      const auto& [premise, rule] = fwd.at(cur);
      steps.push_back({cur, rule});
      cur = premise;
    }
    return steps;
  };

  for (int step = 0; step < max_steps; ++step) {
    const bool expand_back = back_frontier.size() <= fwd_frontier.size();
    std::vector<Sequent> next;
    if (expand_back) {
      for (const auto& s : back_frontier)
        for (const auto* r : rs)
          for (const auto& inst : match_rule(*r, s)) {
            const Sequent& p = inst.premises[0];
            if (pattern_size(p) > cap || back.count(p)) continue;
            back.emplace(p, std::make_pair(s, r->name));
            if (fwd.count(p)) return assemble(p);
            next.push_back(p);
          }
      back_frontier = std::move(next);
    } else {
      for (const auto& s : fwd_frontier)
        for (const auto* r : rs)
          for (const auto& c : forward(*r, s)) {
            if (pattern_size(c) > cap || fwd.count(c)) continue;
            fwd.emplace(c, std::make_pair(s, r->name));
            if (back.count(c)) return assemble(c);
            next.push_back(c);
          }
      fwd_frontier = std::move(next);
    }
    if (back_frontier.empty() && fwd_frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace lrc
