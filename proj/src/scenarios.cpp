#include "lrc/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lrc/kernel.hpp"

namespace lrc {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (auto t = trim(item); !t.empty()) out.push_back(t);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void collect_agents(const NodeP& n, std::set<std::string>& out) {
  if (kind_info(n->kind).agent_indexed) out.insert(n->agent);
  for (const auto& k : n->kids) collect_agents(k, out);
}

}  // namespace

ParseContext Scenario::context() const {
  ParseContext c;
  c.resources.insert(resources.begin(), resources.end());
  c.reusable.insert(reusable.begin(), reusable.end());
  return c;
}

Scenario parse_scenario(const std::string& text, const std::string& name, const std::string& dir) {
  Scenario s;
  s.name = name;
  s.dir = dir;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_goal = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ScenarioError("line " + std::to_string(lineno) + ": expected `key: value`");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "agents") {
      s.agents = split_list(value);
    } else if (key == "resources") {
      for (auto r : split_list(value)) {
        if (r.back() == '!') {
          r.pop_back();
          s.reusable.push_back(r);
        }
        s.resources.push_back(r);
      }
    } else if (key == "atoms") {
      s.atoms = split_list(value);
      s.atoms_declared = true;
    } else if (key == "extensions") {
      s.extensions = split_list(value);
    } else if (key == "assume") {
      s.assumptions.push_back(value);
    } else if (key == "goal") {
      s.goal = value;
      have_goal = true;
    } else if (key == "proof") {
      s.proof = value;
    } else if (key == "name") {
      s.name = value;
    } else {
      throw ScenarioError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_goal) throw ScenarioError("scenario has no goal");
  return s;
}

Scenario load_scenario(const std::string& path) {
  fs::path p(path);
  std::string stem = p.filename().string();
  if (auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_scenario(read_file(path), stem, p.parent_path().empty() ? "." : p.parent_path().string());
}

ProofObligation compile_scenario(const Scenario& s) {
  ProofObligation ob;
  ob.name = s.name;
  ob.context = s.context();
  for (const auto& e : s.extensions)
    if (std::find(extension_names().begin(), extension_names().end(), e) == extension_names().end())
      throw UnknownExtension("unknown extension '" + e + "'");
  ob.rules = extension_ruleset(s.extensions, s.agents);
  auto parse = [&](const std::string& text) {
    try {
      return parse_term(text, Sort::Fm, ob.context);
    } catch (const Error& e) {
      throw ScenarioError("cannot parse '" + text + "': " + e.what());
    }
  };
  const std::set<std::string> declared_agents(s.agents.begin(), s.agents.end());
  auto check = [&](const NodeP& t, const std::string& text) {
    std::set<std::string> fm, res;
    collect_atoms(t, fm, res);
    if (s.atoms_declared)
      for (const auto& a : fm)
        if (std::find(s.atoms.begin(), s.atoms.end(), a) == s.atoms.end())
          throw UndeclaredAtom("formula atom '" + a + "' in '" + text + "' is not declared");
    for (const auto& a : res)
      if (!ob.context.resources.count(a))
        throw UndeclaredAtom("resource '" + a + "' in '" + text + "' is not declared");
    std::set<std::string> agents;
    collect_agents(t, agents);
    for (const auto& a : agents)
      if (!a.empty() && !declared_agents.count(a))
        throw UndeclaredAtom("agent '" + a + "' in '" + text + "' is not declared");
  };
  NodeP left;
  for (const auto& a : s.assumptions) {
    NodeP t = parse(a);
    check(t, a);
    left = left ? make(Kind::Semi, {left, t}) : t;
  }
  NodeP goal = parse(s.goal);
  check(goal, s.goal);
  if (!left) left = unit_i();
  ob.target = Sequent(left, goal);
  if (!s.proof.empty()) ob.golden = (fs::path(s.dir) / s.proof).string();
  return ob;
}

bool CorpusReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.ok; });
}

std::string CorpusReport::table() const {
  std::size_t w = 4;
  for (const auto& e : entries) w = std::max(w, e.path.size());
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.ok ? "PASS  " : "FAIL  ") << e.path << std::string(w - e.path.size() + 2, ' ');
    out.setf(std::ios::fixed);
    out.precision(3);
    out << e.seconds << "s  " << e.detail << "\n";
  }
  std::size_t passed = std::count_if(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.ok; });
  out << passed << "/" << entries.size() << " passed\n";
  return out.str();
}

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const CheckReport& rep) {
  if (rep.failures.empty()) return "";
  const auto& f = rep.failures.front();
  std::string path;
  for (int i : f.tree_path) path += (path.empty() ? "" : ".") + std::to_string(i);
  return "node [" + path + "] " + f.rule + ": " + f.diagnostic;
}

CorpusEntry run_proof_file(const std::string& path) {
  CorpusEntry e{path, "proof", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    ProofFile pf = load_proof(path);
    CheckReport rep = check_derivation(pf.proof, pf.ruleset());
    e.ok = rep.ok;
    e.detail = rep.ok ? std::to_string(pf.proof.node_count()) + " nodes" : first_failure(rep);
  } catch (const std::exception& ex) {
    e.detail = ex.what();
  }
  e.seconds = since(t0);
  return e;
}

}  // namespace

CorpusEntry run_scenario(const std::string& path, const SearchBudget& budget) {
  CorpusEntry e{path, "scenario", false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    ProofObligation ob = compile_scenario(load_scenario(path));
    if (ob.golden) {
      ProofFile pf = load_proof(*ob.golden);
      if (pf.proof.conclusion != ob.target) {
        e.detail = "golden proof concludes " + render(pf.proof.conclusion) + ", expected " + render(ob.target);
      } else {
        CheckReport rep = check_derivation(pf.proof, ob.rules);
        e.ok = rep.ok;
        e.detail = rep.ok ? "golden proof checked (" + std::to_string(pf.proof.node_count()) + " nodes)"
                          : first_failure(rep);
      }
    } else {
      SearchResult r = prove(ob.target, ob.rules, budget);
      e.ok = r.proved() && check_derivation(*r.proof, ob.rules).ok;
      e.detail = r.proved() ? "proved by search" : "search exhausted after " + std::to_string(r.stats.nodes) + " nodes";
    }
  } catch (const std::exception& ex) {
    e.detail = ex.what();
  }
  e.seconds = since(t0);
  return e;
}

CorpusReport run_corpus(const std::string& dir, const SearchBudget& budget) {
  CorpusReport rep;
  if (!fs::is_directory(dir)) return rep;
  std::vector<std::string> files;
  for (const auto& ent : fs::recursive_directory_iterator(dir)) {
    if (!ent.is_regular_file()) continue;
    std::string name = ent.path().filename().string();
    auto ends = [&](const std::string& suf) {
      return name.size() >= suf.size() && name.compare(name.size() - suf.size(), suf.size(), suf) == 0;
    };
    if (ends(".proof.json") || ends(".scn")) files.push_back(ent.path().string());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    bool scn = f.size() >= 4 && f.compare(f.size() - 4, 4, ".scn") == 0;
    rep.entries.push_back(scn ? run_scenario(f, budget) : run_proof_file(f));
  }
  return rep;
}

}  // namespace lrc
