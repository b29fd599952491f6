#include "lrc/kernel.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lrc {

using json = nlohmann::json;

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

std::size_t Derivation::height() const {
  std::size_t h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

namespace {

std::optional<std::string> check_surgical(const Sequent& concl, const std::vector<Sequent>& prems,
                                          const std::optional<Path>& path) {
  if (!path) return "cut-fm needs a cut_path annotation";
  if (prems.size() != 2) return "cut-fm needs two premises";
  const Sequent& p1 = prems[0];
  const Sequent& p2 = prems[1];
  if (p1.sort != Sort::Fm || p2.sort != Sort::Fm) return "cut-fm premises must be Fm sequents";
  NodeP occ;
  Sign sign;
  try {
    occ = node_at(p1, *path);
    sign = sign_at(p1, *path);
  } catch (const PathError& e) {
    return std::string("malformed cut_path: ") + e.what();
  }
  if (!occ->is_term()) return "cut_path " + render_path(*path) + " does not address a formula";
  if (sign != Sign::Neg) return "cut occurrence not succedent part";
  if (!equal(p2.left, occ)) return "second premise must have the cut formula " + render(occ) + " on the left";
  Sequent expected;
  try {
    expected = replace_at(p1, *path, p2.right);
  } catch (const Error& e) {
    return std::string("cut replacement failed: ") + e.what();
  }
  if (expected != concl) return "conclusion is not the first premise with " + render(p2.right) + " at the cut occurrence";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_node(const Derivation& d, const RuleSet& rules) {
  const RuleSchema* r = rules.find(d.rule);
  if (!r) return "unknown rule '" + d.rule + "'";
  if (d.premises.size() != r->premises.size())
    return "rule " + r->name + " expects " + std::to_string(r->premises.size()) + " premises, found " +
           std::to_string(d.premises.size());
  if (r->surgical) {
    std::vector<Sequent> prems;
    for (const auto& p : d.premises) prems.push_back(p.conclusion);
    return check_surgical(d.conclusion, prems, d.cut_path);
  }
  if (d.cut_path) return "cut_path given on non-cut rule " + r->name;
  Substitution s;
  if (!match(r->conclusion, d.conclusion, s)) return "conclusion does not match " + render(r->conclusion);
  for (std::size_t i = 0; i < r->premises.size(); ++i)
    if (!match(r->premises[i], d.premises[i].conclusion, s))
      return "premise " + std::to_string(i + 1) + " does not match " + render(r->premises[i]);
  std::string why;
  if (!side_condition_holds(*r, s, &why)) return why;
  return std::nullopt;
}

CheckReport check_derivation(const Derivation& d, const RuleSet& rules) {
  CheckReport rep;
  std::vector<int> path;
  std::function<void(const Derivation&)> walk = [&](const Derivation& n) {
    if (n.conclusion.left->sort != n.conclusion.right->sort)
      rep.failures.push_back({path, n.rule, "sequent is not type-uniform"});
    else if (auto diag = check_node(n, rules))
      rep.failures.push_back({path, n.rule, *diag});
    for (std::size_t i = 0; i < n.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      walk(n.premises[i]);
      path.pop_back();
    }
  };
  walk(d);
  std::stable_sort(rep.failures.begin(), rep.failures.end(),
                   [](const CheckFailure& a, const CheckFailure& b) { return a.tree_path < b.tree_path; });
  rep.ok = rep.failures.empty();
  return rep;
}

InstanceCheck check_rule_instance(const RuleInstance& inst, const RuleSet& rules) {
  const RuleSchema& r = rules.at(inst.schema);
  InstanceCheck res;
  if (inst.premises.size() != r.premises.size()) {
    res.diagnostic = "premise count mismatch";
    return res;
  }
  if (r.surgical) {
    if (auto diag = check_surgical(inst.conclusion, inst.premises, inst.cut_path)) {
      res.diagnostic = *diag;
      return res;
    }
    res.ok = true;
    return res;
  }
  try {
    if (substitute(r.conclusion, inst.subst) != inst.conclusion) {
      res.diagnostic = "conclusion differs from the instantiated schema";
      return res;
    }
    for (std::size_t i = 0; i < r.premises.size(); ++i)
      if (substitute(r.premises[i], inst.subst) != inst.premises[i]) {
        res.diagnostic = "premise " + std::to_string(i + 1) + " differs from the instantiated schema";
        return res;
      }
  } catch (const Error& e) {
    res.diagnostic = std::string("substitution invalid: ") + e.what();
    return res;
  }
  if (!side_condition_holds(r, inst.subst, &res.diagnostic)) return res;
  res.ok = true;
  return res;
}

bool contains_cut(const Derivation& d, const RuleSet& rules) {
  const RuleSchema* r = rules.find(d.rule);
  if (r && r->kind == RuleKind::Cut) return true;
  return std::any_of(d.premises.begin(), d.premises.end(),
                     [&](const Derivation& p) { return contains_cut(p, rules); });
}

std::vector<std::string> rules_used(const Derivation& d) {
  std::set<std::string> names;
  std::function<void(const Derivation&)> walk = [&](const Derivation& n) {
    names.insert(n.rule);
    for (const auto& p : n.premises) walk(p);
  };
  walk(d);
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------- proof files

ParseContext ProofFile::context() const {
  ParseContext c;
  c.resources.insert(resources.begin(), resources.end());
  c.resources.insert(reusable.begin(), reusable.end());
  c.reusable.insert(reusable.begin(), reusable.end());
  return c;
}

RuleSet ProofFile::ruleset() const { return extension_ruleset(extensions, agents); }

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (j.contains(key))
    for (const auto& v : j.at(key)) out.push_back(v.get<std::string>());
  return out;
}

Derivation derivation_from_json(const json& j, const ParseContext& ctx) {
  Derivation d;
  d.conclusion = parse_sequent(j.at("seq").get<std::string>(), ctx);
  d.rule = j.at("rule").get<std::string>();
  if (j.contains("cut_path") && !j["cut_path"].is_null()) d.cut_path = j["cut_path"].get<Path>();
  if (j.contains("prems"))
    for (const auto& p : j["prems"]) d.premises.push_back(derivation_from_json(p, ctx));
  return d;
}

json derivation_to_json(const Derivation& d) {
  json j;
  j["seq"] = render(d.conclusion);
  j["rule"] = d.rule;
  if (d.cut_path) j["cut_path"] = *d.cut_path;
  j["prems"] = json::array();
  for (const auto& p : d.premises) j["prems"].push_back(derivation_to_json(p));
  return j;
}

void collect_res_atoms(const Derivation& d, std::set<std::string>& plain, std::set<std::string>& reusable) {
  std::function<void(const NodeP&)> walk = [&](const NodeP& n) {
    if (n->kind == Kind::Atom && n->sort == Sort::Res) (n->reusable ? reusable : plain).insert(n->name);
    for (const auto& k : n->kids) walk(k);
  };
  walk(d.conclusion.left);
  walk(d.conclusion.right);
  for (const auto& p : d.premises) collect_res_atoms(p, plain, reusable);
}

}  // namespace

ProofFile proof_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("proof file is not valid JSON: ") + e.what());
  }
  try {
    ProofFile pf;
    pf.agents = string_list(j, "agents");
    pf.extensions = string_list(j, "extensions");
    pf.resources = string_list(j, "resources");
    pf.reusable = string_list(j, "reusable");
    pf.note = j.value("note", "");
    pf.proof = derivation_from_json(j, pf.context());
    return pf;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed proof file: ") + e.what());
  }
}

ProofFile load_proof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return proof_from_json(ss.str());
}

std::string proof_to_json(const ProofFile& pf) {
  json j = derivation_to_json(pf.proof);
  json out;
  if (!pf.note.empty()) out["note"] = pf.note;
  std::vector<std::string> agents;
  for (const auto& a : pf.agents)
    if (!a.empty()) agents.push_back(a);
  if (!agents.empty()) out["agents"] = agents;
  if (!pf.extensions.empty()) out["extensions"] = pf.extensions;
  std::set<std::string> plain(pf.resources.begin(), pf.resources.end()), reusable(pf.reusable.begin(), pf.reusable.end());
  collect_res_atoms(pf.proof, plain, reusable);
  for (const auto& r : reusable) plain.erase(r);
  if (!plain.empty()) out["resources"] = plain;
  if (!reusable.empty()) out["reusable"] = reusable;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
  return out.dump(1);
}

void save_proof(const ProofFile& pf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << proof_to_json(pf) << "\n";
}

std::string render_tree(const Derivation& d) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::function<void(const Derivation&, int)> walk = [&](const Derivation& n, int depth) {
    for (auto it = n.premises.rbegin(); it != n.premises.rend(); ++it) walk(*it, depth + 1);
    std::string label = n.rule;
    if (n.cut_path) label += " @" + render_path(*n.cut_path);
    lines.emplace_back(std::string(2 * depth, ' ') + render(n.conclusion), label);
  };
  walk(d, 0);
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.first.size());
  std::string out;
  for (const auto& [seq, label] : lines)
    out += seq + std::string(width - seq.size() + 2, ' ') + "(" + label + ")\n";
  return out;
}

}  // namespace lrc
