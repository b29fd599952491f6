#include "lrc/calculus.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lrc {

using json = nlohmann::json;

const char* rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Operational: return "operational";
    case RuleKind::Structural: return "structural";
    case RuleKind::Display: return "display";
    case RuleKind::Cut: return "cut";
  }
  return "?";
}

RuleKind rule_kind_from_name(const std::string& s) {
  if (s == "axiom") return RuleKind::Axiom;
  if (s == "operational") return RuleKind::Operational;
  if (s == "structural") return RuleKind::Structural;
  if (s == "display") return RuleKind::Display;
  if (s == "cut") return RuleKind::Cut;
  throw RuleFormatError("unknown rule kind '" + s + "'");
}

const RuleSchema* RuleSet::find(const std::string& rule_name) const {
  auto it = index_.find(rule_name);
  return it == index_.end() ? nullptr : &rules[it->second];
}

const RuleSchema& RuleSet::at(const std::string& rule_name) const {
  const RuleSchema* r = find(rule_name);
  if (!r) throw UnknownRule("unknown rule '" + rule_name + "' in rule set " + name);
  return *r;
}

void RuleSet::add(RuleSchema r) {
  if (index_.count(r.name)) throw RuleFormatError("duplicate rule name '" + r.name + "'");
  index_.emplace(r.name, rules.size());
  rules.push_back(std::move(r));
}

ParseContext rule_context() {
  ParseContext c;
  for (const char* v : {"X", "Y", "Z", "W"}) c.metavars[v] = {Kind::StructVar, Sort::Fm};
  for (const char* v : {"G", "D", "S", "P", "O", "T", "Xi"}) c.metavars[v] = {Kind::StructVar, Sort::Res};
  for (const char* v : {"A", "B"}) c.metavars[v] = {Kind::TermVar, Sort::Fm};
  for (const char* v : {"al", "be", "ga"}) c.metavars[v] = {Kind::TermVar, Sort::Res};
  c.metavars["p"] = {Kind::AtomVar, Sort::Fm};
  c.metavars["a"] = {Kind::AtomVar, Sort::Res};
  c.agent_vars = {"i", "k"};
  return c;
}

namespace {

void fill_metadata(RuleSchema& r) {
  std::map<std::string, NodeP> vars;
  std::set<std::string> agents;
  auto scan = [&](const Sequent& s) {
    collect_vars(s.left, vars);
    collect_vars(s.right, vars);
    collect_agent_vars(s.left, agents);
    collect_agent_vars(s.right, agents);
  };
  for (const auto& p : r.premises) scan(p);
  scan(r.conclusion);
  r.metavars.clear();
  for (const auto& [name, node] : vars) r.metavars[name] = {node->kind, node->sort};
  r.agent_vars = std::move(agents);
}

RuleSchema parse_rule(const std::string& name, RuleKind kind, const std::vector<std::string>& prems,
                      const std::string& concl, const ParseContext& ctx) {
  RuleSchema r;
  r.name = name;
  r.kind = kind;
  for (const auto& p : prems) r.premises.push_back(parse_sequent(p, ctx));
  r.conclusion = parse_sequent(concl, ctx);
  fill_metadata(r);
  return r;
}

class Table {
 public:
  explicit Table(std::string ext) : ext_(std::move(ext)) {}
  RuleSchema& rule(const std::string& name, RuleKind kind, std::vector<std::string> prems,
                   const std::string& concl) {
    out.push_back(make_rule(name, kind, prems, concl));
    out.back().extension = ext_;
    return out.back();
  }
  // Double-line rule: `name` reads top to bottom, `name-inv` bottom to top.
  void both(const std::string& name, RuleKind kind, const std::string& top, const std::string& bottom) {
    rule(name, kind, {top}, bottom).invertible = true;
    rule(name + "-inv", kind, {bottom}, top).invertible = true;
  }
  std::vector<RuleSchema> out;

 private:
  std::string ext_;
};

constexpr RuleKind AX = RuleKind::Axiom;
constexpr RuleKind OP = RuleKind::Operational;
constexpr RuleKind ST = RuleKind::Structural;
constexpr RuleKind DP = RuleKind::Display;

std::vector<RuleSchema> base_rules() {
  Table t("");
  // identity and cut
  t.rule("id-fm", AX, {}, "p |- p");
  t.rule("id-res", AX, {}, "a |- a");
  {
    auto& c = t.rule("cut-fm", RuleKind::Cut, {"X |- Y", "A |- Z"}, "X |- Y");
    c.surgical = true;
  }
  t.rule("cut-res", RuleKind::Cut, {"G |- al", "al |- D"}, "G |- D");

  // display postulates, Fm
  t.both("dp-semi-L", DP, "Semi(X, Y) |- Z", "Y |- Gt(X, Z)");
  t.both("dp-semi-R", DP, "Z |- Semi(X, Y)", "Gt(X, Z) |- Y");
  // display postulates, Res comma and fusion
  t.both("dp-com-L1", DP, "Com(G, D) |- S", "D |- USup(G, S)");
  t.both("dp-com-L2", DP, "Com(G, D) |- S", "G |- USub(S, D)");
  t.both("dp-com-R1", DP, "G |- Com(D, S)", "USup(D, G) |- S");
  t.both("dp-com-R2", DP, "G |- Com(D, S)", "USub(G, S) |- D");
  t.both("dp-odot-1", DP, "Odot(G, D) |- S", "D |- RgtRes(G, S)");
  t.both("dp-odot-2", DP, "Odot(G, D) |- S", "G |- LftRes(S, D)");
  // display postulates, modal
  t.both("dp-circ", DP, "Circ[i](X) |- Y", "X |- Blt[i](Y)");
  t.both("dp-circr", DP, "CircR[i](G) |- X", "G |- BltR[i](X)");
  t.both("dp-caps", DP, "X |- CapS[i](G, Y)", "G |- BTri[i](X, Y)");
  t.both("dp-rcaps-1", DP, "X |- RCapS[i](G, D)", "BTlt[i](G, X) |- D");
  t.both("dp-rcaps-2", DP, "X |- RCapS[i](G, D)", "G |- BTriBar[i](X, D)");

  // structural rules, Fm
  t.both("I_L", ST, "X |- Y", "Semi(I, X) |- Y");
  t.both("I_R", ST, "Y |- X", "Y |- Semi(X, I)");
  t.both("A_L", ST, "Semi(X, Semi(Y, Z)) |- W", "Semi(Semi(X, Y), Z) |- W");
  t.both("A_R", ST, "W |- Semi(Semi(Z, Y), X)", "W |- Semi(Z, Semi(Y, X))");
  t.rule("E_L", ST, {"Semi(Y, X) |- Z"}, "Semi(X, Y) |- Z");
  t.rule("E_R", ST, {"Z |- Semi(X, Y)"}, "Z |- Semi(Y, X)");
  t.rule("W_L", ST, {"Y |- Z"}, "Semi(X, Y) |- Z");
  t.rule("W_R", ST, {"Z |- Y"}, "Z |- Semi(Y, X)");
  t.rule("C_L", ST, {"Semi(X, X) |- Y"}, "X |- Y");
  t.rule("C_R", ST, {"Y |- Semi(X, X)"}, "Y |- X");

  // structural rules, Res
  t.both("Phi_L1", ST, "Odot(G, Phi) |- D", "G |- D");
  t.both("Phi_L2", ST, "G |- D", "Odot(Phi, G) |- D");
  t.both("Phi_R", ST, "G |- D", "G |- Com(D, Phi)");
  t.both("Ao_L", ST, "Odot(G, Odot(D, S)) |- P", "Odot(Odot(G, D), S) |- P");
  t.both("Ac_L", ST, "Com(S, Com(D, G)) |- P", "Com(Com(S, D), G) |- P");
  t.both("Ac_R", ST, "P |- Com(S, Com(D, G))", "P |- Com(Com(S, D), G)");
  t.rule("W_Phi", ST, {"Phi |- D"}, "G |- D");
  t.rule("Wc_L", ST, {"G |- D"}, "Com(G, S) |- D");
  t.rule("Wc_R", ST, {"G |- D"}, "G |- Com(D, S)");
  t.rule("Cc_L", ST, {"Com(G, G) |- D"}, "G |- D");
  t.rule("Cc_R", ST, {"G |- Com(D, D)"}, "G |- D");
  t.rule("Ec_L", ST, {"Com(G, D) |- S"}, "Com(D, G) |- S");
  t.rule("Ec_R", ST, {"S |- Com(G, D)"}, "S |- Com(D, G)");
  t.rule("dis", ST, {"P |- Com(RgtRes(G, D), RgtRes(G, S))"}, "P |- RgtRes(G, Com(D, S))");

  // structural rules for the modal structurals
  t.rule("D1", ST, {"X |- Semi(Blt[i](Y), Blt[i](Z))"}, "X |- Blt[i](Semi(Y, Z))");
  t.rule("D2", ST, {"X |- I"}, "X |- Blt[i](I)");
  t.rule("D3", ST, {"G |- Com(BltR[i](X), BltR[i](Y))"}, "G |- BltR[i](Semi(X, Y))");
  t.rule("D4", ST, {"G |- Phi"}, "G |- BltR[i](I)");
  t.rule("B1", ST, {"G |- Com(BTri[i](Y, W), BTri[i](Z, W))"}, "G |- BTri[i](Semi(Y, Z), W)");
  t.rule("B3", ST, {"X |- CapS[i](G, CapS[i](D, Y))"}, "X |- CapS[i](Odot(G, D), Y)");
  t.rule("B4", ST, {"G |- Com(BTriBar[i](Y, D), BTriBar[i](Z, D))"}, "G |- BTriBar[i](Semi(Y, Z), D)");
  t.rule("B6", ST, {"Com(BTlt[i](G, X), BTlt[i](G, Y)) |- D"}, "BTlt[i](G, Semi(X, Y)) |- D");
  t.rule("B7", ST, {"Phi |- D"}, "BTlt[i](G, I) |- D");
  t.rule("BD1", ST, {"X |- CapS[i](G, Blt[i](Y))"}, "X |- Gt(CircR[i](G), Y)");
  t.rule("BD2", ST, {"X |- RCapS[i](G, BltR[i](Y))"}, "X |- CapS[i](G, Y)");

  // operational rules, Fm
  t.rule("bot_L", AX, {}, "false |- I");
  t.rule("top_R", AX, {}, "I |- true");
  t.rule("bot_R", OP, {"X |- I"}, "X |- false");
  t.rule("top_L", OP, {"I |- X"}, "true |- X");
  t.rule("and_L", OP, {"Semi(A, B) |- X"}, "A /\\ B |- X");
  t.rule("and_R", OP, {"X |- A", "Y |- B"}, "Semi(X, Y) |- A /\\ B");
  t.rule("or_L", OP, {"A |- X", "B |- Y"}, "A \\/ B |- Semi(X, Y)");
  t.rule("or_R", OP, {"X |- Semi(A, B)"}, "X |- A \\/ B");
  t.rule("imp_L", OP, {"X |- A", "B |- Y"}, "A -> B |- Gt(X, Y)");
  t.rule("imp_R", OP, {"X |- Gt(A, B)"}, "X |- A -> B");

  // operational rules, Res
  t.rule("zero_L", AX, {}, "0 |- Phi");
  t.rule("one_R", AX, {}, "Phi |- 1");
  t.rule("zero_R", OP, {"G |- Phi"}, "G |- 0");
  t.rule("one_L", OP, {"Phi |- G"}, "1 |- G");
  t.rule("fuse_L", OP, {"Odot(al, be) |- G"}, "al * be |- G");
  t.rule("fuse_R", OP, {"G |- al", "D |- be"}, "Odot(G, D) |- al * be");
  t.rule("join_L", OP, {"al |- G", "be |- D"}, "al + be |- Com(G, D)");
  t.rule("join_R", OP, {"G |- Com(al, be)"}, "G |- al + be");
  t.rule("meet_L", OP, {"Com(al, be) |- G"}, "al & be |- G");
  t.rule("meet_R", OP, {"G |- al", "D |- be"}, "Com(G, D) |- al & be");

  // operational rules, modal
  t.rule("dia_L", OP, {"Circ[i](A) |- X"}, "dia[i] A |- X");
  t.rule("dia_R", OP, {"X |- A"}, "Circ[i](X) |- dia[i] A");
  t.rule("cap_L", OP, {"G |- al", "A |- X"}, "al |>[i] A |- CapS[i](G, X)");
  t.rule("cap_R", OP, {"X |- CapS[i](al, A)"}, "X |- al |>[i] A");
  t.rule("own_L", OP, {"CircR[i](al) |- X"}, "own[i] al |- X");
  t.rule("own_R", OP, {"G |- al"}, "CircR[i](G) |- own[i] al");
  t.rule("rcap_L", OP, {"G |- al", "be |- D"}, "al |>>[i] be |- RCapS[i](G, D)");
  t.rule("rcap_R", OP, {"X |- RCapS[i](al, be)"}, "X |- al |>>[i] be");
  return std::move(t.out);
}

std::string agent_rule_name(const std::string& base, const std::vector<std::string>& agents) {
  std::string n = base;
  for (const auto& a : agents)
    if (!a.empty()) n += "_" + a;
  return n;
}

// Agents that receive per-agent extension rules: the declared named agents,
// or the default agent when none is declared.
std::vector<std::string> rule_agents(const std::vector<std::string>& agents) {
  std::vector<std::string> named;
  for (const auto& a : agents)
    if (!a.empty()) named.push_back(a);
  if (named.empty()) named.push_back("");
  return named;
}

std::vector<RuleSchema> extension_rules(const std::string& ext, const std::vector<std::string>& agents) {
  Table t(ext);
  auto ag = [](const std::string& a) { return a.empty() ? std::string() : "[" + a + "]"; };
  if (ext == "ex") {
    for (const auto& a : rule_agents(agents))
      t.rule(agent_rule_name("Ex", {a}), ST, {"X |- Y"}, "Circ" + ag(a) + "(X) |- Y");
  } else if (ext == "contr") {
    t.rule("Contr", ST, {"Odot(S, S) |- O"}, "S |- O").side_condition = SideCondition{"reusable-only", "S"};
  } else if (ext == "scalab") {
    t.rule("Scalab", ST, {"Odot(BTlt[i](G, X), BTlt[i](P, Y)) |- D"}, "BTlt[i](Odot(G, P), Semi(X, Y)) |- D");
  } else if (ext == "trans") {
    t.rule("Trans", ST, {"BTlt[i](BTlt[i](G, X), Y) |- D"}, "BTlt[i](G, Semi(X, Y)) |- D");
  } else if (ext == "bdr") {
    t.rule("BDR", ST, {"X |- RCapS[i](G, BltR[i](Y))"}, "X |- Gt(CircR[i](G), Y)");
  } else if (ext == "grishin") {
    t.rule("Gri_L", ST, {"Gt(X, Semi(Y, Z)) |- W"}, "Semi(Gt(X, Y), Z) |- W");
    t.rule("Gri_R", ST, {"X |- Gt(Y, Semi(Z, W))"}, "X |- Semi(Gt(Y, Z), W)");
  } else if (ext == "roles") {
    t.rule("tcap_L", OP, {"G |- al", "T |- be", "ga |- S"}, "[al, be] |>>[i] ga |- TCapS[i](G, T, S)");
    t.rule("tcap_R", OP, {"X |- TCapS[i](al, be, ga)"}, "X |- [al, be] |>>[i] ga");
    t.both("dp-tcaps-1", DP, "X |- TCapS[i](G, T, S)", "TBTlt[i](G, T, X) |- S");
    t.both("dp-tcaps-2", DP, "X |- TCapS[i](G, T, S)", "G |- BTriBar1[i](X, T, S)");
    t.both("dp-tcaps-3", DP, "X |- TCapS[i](G, T, S)", "T |- BTriBar2[i](G, X, S)");
    for (const char* n : {"1", "2"}) {
      std::string c = std::string("CircR") + n, b = std::string("BltR") + n, o = std::string("own") + n;
      t.rule(o + "_L", OP, {c + "[i](al) |- X"}, o + "[i] al |- X");
      t.rule(o + "_R", OP, {"G |- al"}, c + "[i](G) |- " + o + "[i] al");
      t.both("dp-circr" + std::string(n), DP, c + "[i](G) |- X", "G |- " + b + "[i](X)");
      t.rule("D3-" + std::string(n), ST, {"G |- Com(" + b + "[i](X), " + b + "[i](Y))"},
             "G |- " + b + "[i](Semi(X, Y))");
      t.rule("D4-" + std::string(n), ST, {"G |- Phi"}, "G |- " + b + "[i](I)");
    }
  } else if (ext == "rr") {
    auto named = rule_agents(agents);
    for (const auto& i : named)
      for (const auto& k : named)
        t.rule(agent_rule_name("RR", {i, k}), ST,
               {"Circ" + ag(i) + "(CircR2" + ag(k) + "(TBTlt" + ag(i) + "(S, Xi, X))) |- Y"},
               "Semi(Semi(CircR1" + ag(i) + "(S), CircR2" + ag(i) + "(Xi)), X) |- Y");
  } else {
    throw UnknownExtension("unknown extension '" + ext + "'");
  }
  return std::move(t.out);
}

std::vector<std::string> normalize_agents(const std::vector<std::string>& agents) {
  std::vector<std::string> out{""};
  for (const auto& a : agents)
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

}  // namespace

RuleSchema make_rule(const std::string& name, RuleKind kind, const std::vector<std::string>& prems,
                     const std::string& concl) {
  static const ParseContext ctx = rule_context();
  return parse_rule(name, kind, prems, concl, ctx);
}

RuleSet base_ruleset(const std::vector<std::string>& agents) {
  RuleSet rs;
  rs.name = "base";
  rs.agents = normalize_agents(agents);
  for (auto& r : base_rules()) rs.add(std::move(r));
  return rs;
}

const std::vector<std::string>& extension_names() {
  static const std::vector<std::string> names = {"ex",    "contr", "scalab", "trans",
                                                 "roles", "rr",    "bdr",    "grishin"};
  return names;
}

RuleSet extension_ruleset(const std::vector<std::string>& names, const std::vector<std::string>& agents) {
  std::set<std::string> wanted;
  for (const auto& n : names) {
    if (n == "base" || n.empty()) continue;
    const auto& known = extension_names();
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw UnknownExtension("unknown extension '" + n + "'");
    wanted.insert(n);
  }
  if (wanted.count("rr") && !wanted.count("roles"))
    throw MissingDependency("extension 'rr' requires 'roles'");
  RuleSet rs = base_ruleset(agents);
  std::string label = "base";
  for (const auto& n : extension_names()) {
    if (!wanted.count(n)) continue;
    for (auto& r : extension_rules(n, rs.agents)) rs.add(std::move(r));
    rs.extensions.insert(n);
    label += "," + n;
  }
  rs.name = label;
  return rs;
}

RuleSet ruleset_from_spec(const std::string& spec, const std::vector<std::string>& agents) {
  std::vector<std::string> names;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) names.push_back(item);
  }
  return extension_ruleset(names, agents);
}

// ---------------------------------------------------------------- matching

bool reusable_only(const NodeP& n) {
  switch (n->kind) {
    case Kind::Atom:
      return n->sort == Sort::Res && n->reusable;
    case Kind::Phi:
      return true;
    case Kind::Odot:
    case Kind::Com:
      return reusable_only(n->kids[0]) && reusable_only(n->kids[1]);
    default:
      return false;
  }
}

bool side_condition_holds(const RuleSchema& r, const Substitution& s, std::string* why) {
  if (!r.side_condition) return true;
  const auto& sc = *r.side_condition;
  if (sc.name != "reusable-only") {
    if (why) *why = "unknown side condition '" + sc.name + "'";
    return false;
  }
  auto it = s.vars.find(sc.var);
  if (it == s.vars.end()) {
    if (why) *why = "side condition variable " + sc.var + " unbound";
    return false;
  }
  if (!reusable_only(it->second)) {
    if (why) *why = "side condition reusable-only fails on " + sc.var + " = " + render(it->second);
    return false;
  }
  return true;
}

std::vector<RuleInstance> match_rule(const RuleSchema& r, const Sequent& goal, const MatchOptions& opts) {
  std::vector<RuleInstance> out;
  if (r.surgical) {
    if (!opts.cut_formula || opts.cut_formula->sort != Sort::Fm || goal.sort != Sort::Fm) return out;
    std::vector<Path> holes;
    if (opts.cut_path) {
      holes.push_back(*opts.cut_path);
    } else {
      for (const auto& pos : positions(goal))
        if (pos.sign == Sign::Neg && pos.node->sort == Sort::Fm) holes.push_back(pos.path);
    }
    for (const auto& h : holes) {
      try {
        if (sign_at(goal, h) != Sign::Neg) continue;
        NodeP z = node_at(goal, h);
        if (z->sort != Sort::Fm) continue;
        RuleInstance inst;
        inst.schema = r.name;
        inst.subst.vars["A"] = opts.cut_formula;
        inst.subst.vars["Z"] = z;
        inst.premises = {replace_at(goal, h, opts.cut_formula), Sequent(opts.cut_formula, z)};
        inst.conclusion = goal;
        inst.cut_path = h;
        out.push_back(std::move(inst));
      } catch (const PathError&) {
      }
    }
    return out;
  }
  Substitution s;
  if (r.kind == RuleKind::Cut) {
    if (!opts.cut_formula) return out;
    // The cut term is the variable occurring in the premises only.
    std::map<std::string, NodeP> concl_vars;
    collect_vars(r.conclusion.left, concl_vars);
    collect_vars(r.conclusion.right, concl_vars);
    for (const auto& [name, decl] : r.metavars)
      if (!concl_vars.count(name) && decl.kind == Kind::TermVar) {
        if (decl.sort != opts.cut_formula->sort) return out;
        s.vars[name] = opts.cut_formula;
      }
  }
  if (!match(r.conclusion, goal, s)) return out;
  if (!side_condition_holds(r, s)) return out;
  try {
    RuleInstance inst;
    inst.schema = r.name;
    for (const auto& p : r.premises) inst.premises.push_back(substitute(p, s));
    inst.conclusion = goal;
    inst.subst = std::move(s);
    out.push_back(std::move(inst));
  } catch (const UnboundVarError&) {
    // premise-only variables without a supplied value: not backward-applicable
  } catch (const TypeUniformityError&) {
  }
  return out;
}

RuleInstance instantiate(const RuleSchema& r, const Substitution& s) {
  RuleInstance inst;
  inst.schema = r.name;
  inst.subst = s;
  for (const auto& p : r.premises) inst.premises.push_back(substitute(p, s));
  inst.conclusion = substitute(r.conclusion, s);
  return inst;
}

// ---------------------------------------------------------------- JSON

RuleSchema rule_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw RuleFormatError(std::string("rule file is not valid JSON: ") + e.what());
  }
  try {
    ParseContext ctx;
    for (const auto& mv : j.at("metavars")) {
      std::string kind = mv.at("kind").get<std::string>();
      std::string sort = mv.at("sort").get<std::string>();
      MetaDecl d{};
      if (kind == "structure") d.kind = Kind::StructVar;
      else if (kind == "term") d.kind = Kind::TermVar;
      else if (kind == "atom") d.kind = Kind::AtomVar;
      else throw RuleFormatError("unknown metavariable kind '" + kind + "'");
      if (sort == "Fm") d.sort = Sort::Fm;
      else if (sort == "Res") d.sort = Sort::Res;
      else throw RuleFormatError("unknown sort '" + sort + "'");
      ctx.metavars[mv.at("id").get<std::string>()] = d;
    }
    if (j.contains("agent_vars"))
      for (const auto& a : j["agent_vars"]) ctx.agent_vars.insert(a.get<std::string>());
    std::vector<std::string> prems;
    for (const auto& p : j.at("premises")) prems.push_back(p.get<std::string>());
    RuleSchema r = parse_rule(j.at("name").get<std::string>(), rule_kind_from_name(j.at("kind").get<std::string>()),
                              prems, j.at("conclusion").get<std::string>(), ctx);
    r.invertible = j.value("invertible", false);
    if (j.contains("side_condition") && !j["side_condition"].is_null()) {
      const auto& sc = j["side_condition"];
      r.side_condition = SideCondition{sc.at("name").get<std::string>(), sc.at("var").get<std::string>()};
    }
    // Declared kinds win over what the patterns show (unused declarations are kept).
    for (const auto& [id, d] : ctx.metavars) r.metavars[id] = d;
    return r;
  } catch (const json::exception& e) {
    throw RuleFormatError(std::string("malformed rule file: ") + e.what());
  }
}

std::string rule_to_json(const RuleSchema& r) {
  json j;
  j["name"] = r.name;
  j["kind"] = rule_kind_name(r.kind);
  j["metavars"] = json::array();
  for (const auto& [id, d] : r.metavars) {
    j["metavars"].push_back({{"id", id},
                             {"kind", d.kind == Kind::StructVar ? "structure" : d.kind == Kind::TermVar ? "term" : "atom"},
                             {"sort", sort_name(d.sort)}});
  }
  if (!r.agent_vars.empty()) j["agent_vars"] = r.agent_vars;
  j["premises"] = json::array();
  for (const auto& p : r.premises) j["premises"].push_back(render(p));
  j["conclusion"] = render(r.conclusion);
  j["invertible"] = r.invertible;
  if (r.side_condition)
    j["side_condition"] = {{"name", r.side_condition->name}, {"var", r.side_condition->var}};
  else
    j["side_condition"] = nullptr;
  return j.dump(2);
}

}  // namespace lrc
