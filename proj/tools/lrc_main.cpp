// lrc: command-line front end. Exit codes: 0 success/proved/valid,
// 1 refuted/unproved/check failed, 2 usage or input error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lrc/algebra.hpp"
#include "lrc/kernel.hpp"
#include "lrc/linter.hpp"
#include "lrc/scenarios.hpp"
#include "lrc/search.hpp"

using namespace lrc;

namespace {

struct Globals {
  std::string rules = "base";
  std::vector<std::string> agents;
  std::vector<std::string> resources;
  std::vector<std::string> reusable;
  std::uint64_t seed = 1;
  std::string emit;
  bool quiet = false;
};

struct InputError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

ParseContext context(const Globals& g) {
  ParseContext c;
  c.resources.insert(g.resources.begin(), g.resources.end());
  c.resources.insert(g.reusable.begin(), g.reusable.end());
  c.reusable.insert(g.reusable.begin(), g.reusable.end());
  return c;
}

std::vector<std::string> extension_list(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty() && item != "base") out.push_back(item);
  return out;
}

HeterogeneousModel resolve_model(const std::string& name, const std::vector<std::string>& agents) {
  if (std::filesystem::exists(name)) return model_from_json(read_file(name));
  const auto& names = library_model_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += " " + n;
    throw InputError("unknown model '" + name + "' (library:" + list + ")");
  }
  return library_model(name, agents);
}

int cmd_parse(const Globals& g, const std::string& text, const std::string& sort) {
  ParseContext c = context(g);
  if (sort == "seq") {
    std::cout << render(parse_sequent(text, c)) << "\n";
  } else {
    Sort s = sort == "res" ? Sort::Res : Sort::Fm;
    NodeP n = text.find('(') != std::string::npos && struct_kind_by_name(text.substr(0, text.find('(')))
                  ? parse_structure(text, s, c)
                  : parse_term(text, s, c);
    std::cout << render(n) << "\n";
  }
  return 0;
}

int cmd_check(const Globals& g, const std::string& path) {
  ProofFile pf = load_proof(path);
  RuleSet rules = pf.ruleset();
  CheckReport rep = check_derivation(pf.proof, rules);
  if (!g.quiet) std::cout << render_tree(pf.proof);
  if (rep.ok) {
    std::cout << "ok: " << pf.proof.node_count() << " nodes, conclusion " << render(pf.proof.conclusion) << "\n";
    return 0;
  }
  for (const auto& f : rep.failures) {
    std::string p;
    for (int i : f.tree_path) p += (p.empty() ? "" : ".") + std::to_string(i);
    std::cout << "FAIL at [" << p << "] " << f.rule << ": " << f.diagnostic << "\n";
  }
  return 1;
}

int cmd_prove(const Globals& g, const std::string& text, const SearchBudget& budget) {
  Sequent goal = parse_sequent(text, context(g));
  std::vector<std::string> agents = g.agents;
  for (const auto& a : agents_of(goal))
    if (std::find(agents.begin(), agents.end(), a) == agents.end()) agents.push_back(a);
  RuleSet rules = extension_ruleset(extension_list(g.rules), agents);
  SearchResult r = prove(goal, rules, budget);
  if (!r.proved()) {
    std::cout << "exhausted: " << r.stats.nodes << " nodes, depth " << r.stats.depth_reached
              << (r.stats.node_limit_hit ? " (node limit)" : "") << "\n";
    return 1;
  }
  if (!g.quiet) std::cout << render_tree(*r.proof);
  std::cout << "proved: " << r.proof->node_count() << " nodes, " << r.stats.nodes << " search nodes\n";
  if (!g.emit.empty()) {
    ProofFile pf;
    pf.proof = *r.proof;
    pf.agents = agents;
    pf.extensions = extension_list(g.rules);
    pf.resources = g.resources;
    pf.reusable = g.reusable;
    save_proof(pf, g.emit);
  }
  return 0;
}

int cmd_model_check(const Globals& g, const std::string& text, const std::string& model, std::uint64_t samples) {
  Sequent s = parse_sequent(text, context(g));
  HeterogeneousModel m = resolve_model(model, agents_of(s));
  Validity v = check_validity(m, s, samples, g.seed);
  if (v.valid) {
    std::cout << "valid in " << m.name << (v.sampled ? " (sampled, " : " (exhaustive, ") << v.evaluated
              << " assignments)\n";
    return 0;
  }
  std::cout << "refuted in " << m.name << " by " << render_assignment(m, *v.witness) << "\n";
  return 1;
}

int cmd_model_counter(const Globals& g, const std::string& text, int max_size, int samples) {
  Sequent s = parse_sequent(text, context(g));
  auto cm = find_countermodel(s, max_size, samples, g.seed);
  if (!cm) {
    std::cout << "no countermodel up to size " << max_size << "\n";
    return 1;
  }
  AxiomReport rep = check_axioms(cm->model);
  std::cout << "countermodel " << cm->source << " (axioms " << (rep.ok() ? "verified" : "FAILED") << ")\n"
            << "assignment: " << render_assignment(cm->model, cm->assignment) << "\n";
  if (!g.quiet) std::cout << model_to_json(cm->model) << "\n";
  if (!g.emit.empty()) write_file(g.emit, model_to_json(cm->model) + "\n");
  return rep.ok() ? 0 : 1;
}

int cmd_model_axioms(const Globals& g, const std::string& model) {
  HeterogeneousModel m = resolve_model(model, g.agents.empty() ? std::vector<std::string>{""} : g.agents);
  AxiomReport rep = check_axioms(m);
  for (const auto& it : rep.items)
    if (!g.quiet || !it.ok) std::cout << (it.ok ? "ok    " : "FAIL  ") << it.name << (it.ok ? "" : "  " + it.witness) << "\n";
  std::cout << (rep.ok() ? "all axioms hold" : "axioms fail") << " in " << m.name << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_lint(const Globals& g, const std::string& file) {
  if (!file.empty()) {
    RuleSchema r = rule_from_json(read_file(file));
    auto res = lint_rule(r);
    for (const auto& c : res)
      std::cout << c.id << std::string(c.id.size() < 10 ? 10 - c.id.size() : 1, ' ') << lint_status_name(c.status)
                << (c.diagnostic.empty() || c.status == LintStatus::Manual ? "" : "  " + c.diagnostic) << "\n";
    return lint_passes(res) ? 0 : 1;
  }
  RuleSet rules = ruleset_from_spec(g.rules, g.agents);
  std::cout << lint_matrix(rules);
  bool ok = std::all_of(rules.rules.begin(), rules.rules.end(), [](const RuleSchema& r) {
    return r.kind == RuleKind::Cut || lint_passes(lint_rule(r));
  });
  return ok ? 0 : 1;
}

int cmd_scenario(const Globals& g, const std::string& path, const SearchBudget& budget) {
  ProofObligation ob = compile_scenario(load_scenario(path));
  std::cout << "target: " << render(ob.target) << "\n";
  CorpusEntry e = run_scenario(path, budget);
  std::cout << (e.ok ? "PASS  " : "FAIL  ") << e.detail << "\n";
  if (e.ok && !g.quiet && ob.golden) std::cout << render_tree(load_proof(*ob.golden).proof);
  return e.ok ? 0 : 1;
}

int cmd_corpus(const std::string& dir, const SearchBudget& budget) {
  if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: " + dir);
  CorpusReport rep = run_corpus(dir, budget);
  std::cout << rep.table();
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for the logic of resources and capabilities and its display calculus"};
  app.require_subcommand(1);
  Globals g;
  SearchBudget budget;
  app.add_option("--rules,--ruleset", g.rules, "rule set: base plus comma-separated extensions")->capture_default_str();
  app.add_option("--agents", g.agents, "declared agents")->delimiter(',');
  app.add_option("--resources", g.resources, "resource atoms")->delimiter(',');
  app.add_option("--reusable", g.reusable, "reusable resource atoms")->delimiter(',');
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--emit", g.emit, "write the JSON artifact to this path");
  app.add_flag("--quiet", g.quiet, "suppress pretty trees and tables");
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--depth", budget.max_depth, "maximum search depth")->capture_default_str();
    c->add_option("--nodes", budget.max_nodes, "maximum search nodes")->capture_default_str();
    c->add_option("--contractions", budget.max_contractions_per_branch, "contractions per branch")
        ->capture_default_str();
  };

  std::string text, sort = "seq", path, model, dir;
  std::uint64_t samples = 20000;
  int max_size = 4, counter_samples = 200;

  auto* parse = app.add_subcommand("parse", "parse and re-render a sequent, term or structure");
  parse->add_option("text", text)->required();
  parse->add_option("--sort", sort, "seq, fm or res")->check(CLI::IsMember({"seq", "fm", "res"}))->capture_default_str();

  auto* check = app.add_subcommand("check", "kernel-check a proof file");
  check->add_option("file", path)->required();

  auto* prove_cmd = app.add_subcommand("prove", "cut-free proof search");
  prove_cmd->add_option("sequent", text)->required();
  add_budget(prove_cmd);

  auto* model_cmd = app.add_subcommand("model", "finite models");
  model_cmd->require_subcommand(1);
  auto* mcheck = model_cmd->add_subcommand("check", "validity of a sequent in a model");
  mcheck->add_option("sequent", text)->required();
  mcheck->add_option("--model", model, "library model name or JSON file")->required();
  mcheck->add_option("--samples", samples, "samples when enumeration is too large")->capture_default_str();
  auto* mcounter = model_cmd->add_subcommand("counter", "search for a countermodel");
  mcounter->add_option("sequent", text)->required();
  mcounter->add_option("--max-size", max_size, "lattice size bound")->capture_default_str();
  mcounter->add_option("--samples", counter_samples, "random models to try")->capture_default_str();
  auto* maxioms = model_cmd->add_subcommand("axioms", "check the algebra axioms of a model");
  maxioms->add_option("model", model)->required();
  auto* mlist = model_cmd->add_subcommand("list", "list library models");

  auto* lint = app.add_subcommand("lint", "check rule schemas against the analyticity conditions");
  lint->add_option("file", path, "rule JSON file; without it the --rules set is linted");

  auto* scenario = app.add_subcommand("scenario", "scenario files");
  scenario->require_subcommand(1);
  auto* srun = scenario->add_subcommand("run", "compile and discharge a scenario");
  srun->add_option("file", path)->required();
  add_budget(srun);

  auto* corpus = app.add_subcommand("corpus", "golden corpus");
  corpus->require_subcommand(1);
  auto* crun = corpus->add_subcommand("run", "check every proof and scenario under a directory");
  crun->add_option("dir", dir)->required();
  add_budget(crun);

  for (auto* sub : {parse, check, prove_cmd, model_cmd, lint, scenario, corpus}) sub->fallthrough();
  for (auto* sub : {mcheck, mcounter, maxioms, mlist, srun, crun}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(g, text, sort);
    if (*check) return cmd_check(g, path);
    if (*prove_cmd) return cmd_prove(g, text, budget);
    if (*mcheck) return cmd_model_check(g, text, model, samples);
    if (*mcounter) return cmd_model_counter(g, text, max_size, counter_samples);
    if (*maxioms) return cmd_model_axioms(g, model);
    if (*mlist) {
      for (const auto& n : library_model_names()) std::cout << n << "\n";
      return 0;
    }
    if (*lint) return cmd_lint(g, path);
    if (*srun) return cmd_scenario(g, path, budget);
    if (*crun) return cmd_corpus(dir, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
