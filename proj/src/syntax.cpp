#include "lrc/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <functional>
#include <unordered_map>

namespace lrc {

const char* sort_name(Sort s) { return s == Sort::Fm ? "Fm" : "Res"; }
const char* sign_name(Sign s) { return s == Sign::Pos ? "+" : "-"; }

namespace {

using S = Sort;
constexpr S F = Sort::Fm;
constexpr S R = Sort::Res;

// Kind table, indexed by Kind.
const std::array<KindInfo, kKindCount>& kind_table() {
  static const std::array<KindInfo, kKindCount> table = [] {
    std::array<KindInfo, kKindCount> t{};
    auto set = [&](Kind k, KindInfo info) { t[static_cast<int>(k)] = std::move(info); };
    // name, term, struct, var, agent, roles, sort, args, negative
    set(Kind::Atom, {"Atom", true, false, false, false, false, -1, {}, {}});
    set(Kind::Top, {"true", true, false, false, false, false, 0, {}, {}});
    set(Kind::Bot, {"false", true, false, false, false, false, 0, {}, {}});
    set(Kind::And, {"And", true, false, false, false, false, 0, {F, F}, {}});
    set(Kind::Or, {"Or", true, false, false, false, false, 0, {F, F}, {}});
    set(Kind::Imp, {"Imp", true, false, false, false, false, 0, {F, F}, {}});
    set(Kind::Dia, {"dia", true, false, false, true, false, 0, {F}, {}});
    set(Kind::RDia, {"own", true, false, false, true, false, 0, {R}, {}});
    set(Kind::Cap, {"Cap", true, false, false, true, false, 0, {R, F}, {}});
    set(Kind::RCap, {"RCap", true, false, false, true, false, 0, {R, R}, {}});
    set(Kind::RDia1, {"own1", true, false, false, true, true, 0, {R}, {}});
    set(Kind::RDia2, {"own2", true, false, false, true, true, 0, {R}, {}});
    set(Kind::TCap, {"TCap", true, false, false, true, true, 0, {R, R, R}, {}});
    set(Kind::One, {"1", true, false, false, false, false, 1, {}, {}});
    set(Kind::Zero, {"0", true, false, false, false, false, 1, {}, {}});
    set(Kind::Fuse, {"Fuse", true, false, false, false, false, 1, {R, R}, {}});
    set(Kind::Join, {"Join", true, false, false, false, false, 1, {R, R}, {}});
    set(Kind::Meet, {"Meet", true, false, false, false, false, 1, {R, R}, {}});

    set(Kind::I, {"I", false, true, false, false, false, 0, {}, {}});
    set(Kind::Semi, {"Semi", false, true, false, false, false, 0, {F, F}, {}});
    set(Kind::Gt, {"Gt", false, true, false, false, false, 0, {F, F}, {0}});
    set(Kind::Circ, {"Circ", false, true, false, true, false, 0, {F}, {}});
    set(Kind::CircR, {"CircR", false, true, false, true, false, 0, {R}, {}});
    set(Kind::Blt, {"Blt", false, true, false, true, false, 0, {F}, {}});
    set(Kind::CapS, {"CapS", false, true, false, true, false, 0, {R, F}, {0}});
    set(Kind::RCapS, {"RCapS", false, true, false, true, false, 0, {R, R}, {0}});
    set(Kind::TCapS, {"TCapS", false, true, false, true, true, 0, {R, R, R}, {0, 1}});
    set(Kind::CircR1, {"CircR1", false, true, false, true, true, 0, {R}, {}});
    set(Kind::CircR2, {"CircR2", false, true, false, true, true, 0, {R}, {}});

    set(Kind::Phi, {"Phi", false, true, false, false, false, 1, {}, {}});
    set(Kind::Odot, {"Odot", false, true, false, false, false, 1, {R, R}, {}});
    set(Kind::Com, {"Com", false, true, false, false, false, 1, {R, R}, {}});
    set(Kind::RgtRes, {"RgtRes", false, true, false, false, false, 1, {R, R}, {0}});
    set(Kind::LftRes, {"LftRes", false, true, false, false, false, 1, {R, R}, {1}});
    set(Kind::USup, {"USup", false, true, false, false, false, 1, {R, R}, {0}});
    set(Kind::USub, {"USub", false, true, false, false, false, 1, {R, R}, {1}});
    set(Kind::BltR, {"BltR", false, true, false, true, false, 1, {F}, {}});
    set(Kind::BTri, {"BTri", false, true, false, true, false, 1, {F, F}, {0}});
    set(Kind::BTlt, {"BTlt", false, true, false, true, false, 1, {R, F}, {}});
    set(Kind::BTriBar, {"BTriBar", false, true, false, true, false, 1, {F, R}, {0}});
    set(Kind::BTriBar1, {"BTriBar1", false, true, false, true, true, 1, {F, R, R}, {0, 1}});
    set(Kind::BTriBar2, {"BTriBar2", false, true, false, true, true, 1, {R, F, R}, {0, 1}});
    set(Kind::TBTlt, {"TBTlt", false, true, false, true, true, 1, {R, R, F}, {}});
    set(Kind::BltR1, {"BltR1", false, true, false, true, true, 1, {F}, {}});
    set(Kind::BltR2, {"BltR2", false, true, false, true, true, 1, {F}, {}});

    set(Kind::StructVar, {"StructVar", false, false, true, false, false, -1, {}, {}});
    set(Kind::TermVar, {"TermVar", false, false, true, false, false, -1, {}, {}});
    set(Kind::AtomVar, {"AtomVar", false, false, true, false, false, -1, {}, {}});
    return t;
  }();
  return table;
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t compute_hash(const Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 131 + static_cast<std::size_t>(n.sort);
  h = mix(h, n.reusable ? 7 : 3);
  h = mix(h, n.agent_var ? 11 : 5);
  h = mix(h, std::hash<std::string>{}(n.name));
  h = mix(h, std::hash<std::string>{}(n.agent));
  for (const auto& k : n.kids) h = mix(h, k->hash);
  return h;
}

NodeP finish(Node&& n) {
  n.hash = compute_hash(n);
  return std::make_shared<const Node>(std::move(n));
}

}  // namespace

const KindInfo& kind_info(Kind k) { return kind_table()[static_cast<int>(k)]; }

std::optional<Kind> struct_kind_by_name(const std::string& name) {
  static const std::unordered_map<std::string, Kind> names = [] {
    std::unordered_map<std::string, Kind> m;
    for (int i = 0; i < kKindCount; ++i) {
      const auto& info = kind_table()[i];
      if (info.is_struct) m.emplace(info.name, static_cast<Kind>(i));
    }
    return m;
  }();
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::size_t Node::size() const {
  std::size_t s = 1;
  for (const auto& k : kids) s += k->size();
  return s;
}

bool equal(const NodeP& a, const NodeP& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->hash != b->hash || a->kind != b->kind || a->sort != b->sort ||
      a->reusable != b->reusable || a->agent_var != b->agent_var || a->name != b->name ||
      a->agent != b->agent || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!equal(a->kids[i], b->kids[i])) return false;
  return true;
}

NodeP make(Kind k, std::vector<NodeP> kids, std::string agent, bool agent_var) {
  const auto& info = kind_info(k);
  if (info.is_var || k == Kind::Atom)
    throw SortError(std::string("make() cannot build ") + info.name + " nodes");
  if (kids.size() != info.args.size())
    throw SortError(std::string(info.name) + " expects " + std::to_string(info.args.size()) +
                    " arguments");
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (!kids[i]) throw SortError(std::string(info.name) + ": null argument");
    if (kids[i]->sort != info.args[i])
      throw SortError(std::string(info.name) + " argument " + std::to_string(i + 1) + " must be " +
                      sort_name(info.args[i]) + ", got " + sort_name(kids[i]->sort));
    if (info.is_term && !kids[i]->is_operational())
      throw SortError(std::string("operational connective ") + info.name +
                      " cannot take a structure argument");
  }
  Node n;
  n.kind = k;
  n.sort = info.fixed_sort == 0 ? Sort::Fm : Sort::Res;
  n.kids = std::move(kids);
  if (info.agent_indexed) {
    n.agent = std::move(agent);
    n.agent_var = agent_var;
  }
  return finish(std::move(n));
}

NodeP atom(const std::string& name, Sort s, bool reusable) {
  Node n;
  n.kind = Kind::Atom;
  n.sort = s;
  n.name = name;
  n.reusable = s == Sort::Res && reusable;
  return finish(std::move(n));
}

NodeP metavar(Kind var_kind, const std::string& name, Sort s) {
  if (!kind_info(var_kind).is_var) throw SortError("metavar() needs a variable kind");
  Node n;
  n.kind = var_kind;
  n.sort = s;
  n.name = name;
  return finish(std::move(n));
}

NodeP top() {
  static const NodeP n = make(Kind::Top, {});
  return n;
}
NodeP bot() {
  static const NodeP n = make(Kind::Bot, {});
  return n;
}
NodeP one() {
  static const NodeP n = make(Kind::One, {});
  return n;
}
NodeP zero() {
  static const NodeP n = make(Kind::Zero, {});
  return n;
}
NodeP unit_i() {
  static const NodeP n = make(Kind::I, {});
  return n;
}
NodeP unit_phi() {
  static const NodeP n = make(Kind::Phi, {});
  return n;
}

// ---------------------------------------------------------------- sequents

Sequent::Sequent(NodeP l, NodeP r) : left(std::move(l)), right(std::move(r)) {
  if (!left || !right) throw TypeUniformityError("sequent side missing");
  if (left->sort != right->sort)
    throw TypeUniformityError(std::string("sequent sides differ in sort: ") +
                              sort_name(left->sort) + " |- " + sort_name(right->sort));
  sort = left->sort;
}

std::size_t Sequent::hash() const { return mix(left->hash, right->hash * 31); }

NodeP node_at(const Sequent& s, const Path& p) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw PathError("path must start with side 0 or 1");
  NodeP cur = p[0] == 0 ? s.left : s.right;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (cur->is_term() || cur->kind == Kind::TermVar || cur->kind == Kind::AtomVar)
      throw PathError("path " + render_path(p) + " descends into an operational term");
    if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= cur->kids.size())
      throw PathError("path " + render_path(p) + " is dangling");
    cur = cur->kids[p[i]];
  }
  return cur;
}

Sign sign_at(const Sequent& s, const Path& p) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw PathError("path must start with side 0 or 1");
  Sign sign = p[0] == 0 ? Sign::Pos : Sign::Neg;
  NodeP cur = p[0] == 0 ? s.left : s.right;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!cur->is_struct())
      throw PathError("path " + render_path(p) + " descends into a non-structural node");
    if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= cur->kids.size())
      throw PathError("path " + render_path(p) + " is dangling");
    const auto& neg = kind_info(cur->kind).negative;
    if (std::find(neg.begin(), neg.end(), p[i]) != neg.end()) sign = flip(sign);
    cur = cur->kids[p[i]];
  }
  return sign;
}

NodeP replace_in(const NodeP& root, const Path& p, std::size_t from, const NodeP& value) {
  if (from == p.size()) return value;
  if (!root->is_struct() || p[from] < 0 || static_cast<std::size_t>(p[from]) >= root->kids.size())
    throw PathError("path " + render_path(p) + " is dangling");
  auto kids = root->kids;
  kids[p[from]] = replace_in(kids[p[from]], p, from + 1, value);
  return make(root->kind, std::move(kids), root->agent, root->agent_var);
}

Sequent replace_at(const Sequent& s, const Path& p, const NodeP& value) {
  if (p.empty() || (p[0] != 0 && p[0] != 1)) throw PathError("path must start with side 0 or 1");
  if (p[0] == 0) return Sequent(replace_in(s.left, p, 1, value), s.right);
  return Sequent(s.left, replace_in(s.right, p, 1, value));
}

std::vector<Position> positions(const Sequent& s) {
  std::vector<Position> out;
  std::function<void(const NodeP&, Path&, Sign)> walk = [&](const NodeP& n, Path& path, Sign sign) {
    out.push_back({path, n, sign});
    if (!n->is_struct()) return;
    const auto& neg = kind_info(n->kind).negative;
    for (std::size_t i = 0; i < n->kids.size(); ++i) {
      bool flips = std::find(neg.begin(), neg.end(), static_cast<int>(i)) != neg.end();
      path.push_back(static_cast<int>(i));
      walk(n->kids[i], path, flips ? flip(sign) : sign);
      path.pop_back();
    }
  };
  Path p{0};
  walk(s.left, p, Sign::Pos);
  p = {1};
  walk(s.right, p, Sign::Neg);
  return out;
}

// ---------------------------------------------------------------- substitution

NodeP substitute(const NodeP& pat, const Substitution& sub) {
  const auto& info = kind_info(pat->kind);
  if (info.is_var) {
    auto it = sub.vars.find(pat->name);
    if (it == sub.vars.end()) throw UnboundVarError("unbound metavariable " + pat->name);
    const NodeP& v = it->second;
    if (v->sort != pat->sort)
      throw SortError("metavariable " + pat->name + " of sort " + sort_name(pat->sort) +
                      " bound to a " + sort_name(v->sort) + " value");
    if (pat->kind == Kind::TermVar && !v->is_operational())
      throw SortError("term metavariable " + pat->name + " bound to a structure");
    if (pat->kind == Kind::AtomVar && v->kind != Kind::Atom && v->kind != Kind::AtomVar)
      throw SortError("atom metavariable " + pat->name + " bound to a compound value");
    return v;
  }
  if (pat->kids.empty() && !pat->agent_var) return pat;
  std::vector<NodeP> kids;
  kids.reserve(pat->kids.size());
  bool changed = false;
  for (const auto& k : pat->kids) {
    kids.push_back(substitute(k, sub));
    changed = changed || kids.back() != k;
  }
  std::string agent = pat->agent;
  bool agent_var = pat->agent_var;
  if (agent_var) {
    auto it = sub.agents.find(pat->agent);
    if (it == sub.agents.end()) throw UnboundVarError("unbound agent variable " + pat->agent);
    agent = it->second;
    agent_var = false;
    changed = true;
  }
  if (!changed) return pat;
  return make(pat->kind, std::move(kids), agent, agent_var);
}

Sequent substitute(const Sequent& pat, const Substitution& sub) {
  return Sequent(substitute(pat.left, sub), substitute(pat.right, sub));
}

bool match(const NodeP& pat, const NodeP& t, Substitution& sub) {
  if (pat->sort != t->sort) return false;
  switch (pat->kind) {
    case Kind::StructVar:
    case Kind::TermVar:
    case Kind::AtomVar: {
      if (pat->kind == Kind::TermVar && !t->is_term()) return false;
      if (pat->kind == Kind::AtomVar && t->kind != Kind::Atom) return false;
      auto it = sub.vars.find(pat->name);
      if (it != sub.vars.end()) return equal(it->second, t);
      sub.vars.emplace(pat->name, t);
      return true;
    }
    default:
      break;
  }
  if (pat->kind != t->kind || pat->name != t->name || pat->reusable != t->reusable ||
      pat->kids.size() != t->kids.size())
    return false;
  if (pat->agent_var) {
    auto it = sub.agents.find(pat->agent);
    if (it != sub.agents.end()) {
      if (it->second != t->agent) return false;
    } else {
      sub.agents.emplace(pat->agent, t->agent);
    }
  } else if (pat->agent != t->agent) {
    return false;
  }
  for (std::size_t i = 0; i < pat->kids.size(); ++i)
    if (!match(pat->kids[i], t->kids[i], sub)) return false;
  return true;
}

bool match(const Sequent& pat, const Sequent& t, Substitution& sub) {
  return pat.sort == t.sort && match(pat.left, t.left, sub) && match(pat.right, t.right, sub);
}

void collect_vars(const NodeP& n, std::map<std::string, NodeP>& out) {
  if (n->is_var()) {
    out.emplace(n->name, n);
    return;
  }
  for (const auto& k : n->kids) collect_vars(k, out);
}

void collect_agent_vars(const NodeP& n, std::set<std::string>& out) {
  if (n->agent_var) out.insert(n->agent);
  for (const auto& k : n->kids) collect_agent_vars(k, out);
}

void collect_atoms(const NodeP& n, std::set<std::string>& fm, std::set<std::string>& res) {
  if (n->kind == Kind::Atom) (n->sort == Sort::Fm ? fm : res).insert(n->name);
  for (const auto& k : n->kids) collect_atoms(k, fm, res);
}

bool uses_roles(const NodeP& n) {
  if (kind_info(n->kind).roles) return true;
  return std::any_of(n->kids.begin(), n->kids.end(), [](const NodeP& k) { return uses_roles(k); });
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Num, Sym, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t off;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& s) {
  static const std::vector<std::string> syms = {"|>>", "|-", "|>", "->", "\\/", "/\\", "~", "(",
                                                ")",   "[",  "]",  ",",  "+",   "&",   "*", "!"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '0' || c == '1') {
      if (i + 1 < s.size() && ident_char(s[i + 1]))
        throw SyntaxError("identifiers must start with a letter", i);
      out.push_back({Tok::Num, std::string(1, c), i});
      ++i;
      continue;
    }
    bool found = false;
    for (const auto& sym : syms) {
      if (s.compare(i, sym.size(), sym) == 0) {
        out.push_back({Tok::Sym, sym, i});
        i += sym.size();
        found = true;
        break;
      }
    }
    if (!found) throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "true" || s == "false" || s == "dia" || s == "own" || s == "own1" || s == "own2";
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx) : toks_(lex(text)), ctx_(ctx) {}

  NodeP term(Sort s) { return s == Sort::Fm ? fm_imp_level() : res_join(); }

  // Structure of a known sort.
  NodeP structure(Sort s) {
    const Token& t = peek();
    if (t.type == Tok::Ident) {
      if (auto mv = ctx_.metavars.find(t.text);
          mv != ctx_.metavars.end() && mv->second.kind == Kind::StructVar) {
        if (mv->second.sort != s)
          throw SortError("structure variable " + t.text + " has sort " +
                          sort_name(mv->second.sort) + ", expected " + sort_name(s));
        ++pos_;
        return metavar(Kind::StructVar, t.text, s);
      }
      if (auto k = struct_kind_by_name(t.text); k && is_constructor_use(*k)) {
        const auto& info = kind_info(*k);
        Sort ks = info.fixed_sort == 0 ? Sort::Fm : Sort::Res;
        if (ks != s)
          throw SortError(std::string(info.name) + " builds a " + sort_name(ks) +
                          " structure where " + sort_name(s) + " is expected");
        return constructor(*k);
      }
    }
    return term(s);
  }

  // Structure whose sort is inferred; used for sequent sides.
  NodeP side(const std::vector<std::string>& stop) {
    const Token& t = peek();
    if (t.type == Tok::Ident) {
      if (auto mv = ctx_.metavars.find(t.text);
          mv != ctx_.metavars.end() && mv->second.kind == Kind::StructVar) {
        return structure(mv->second.sort);
      }
      if (auto k = struct_kind_by_name(t.text); k && is_constructor_use(*k)) {
        return structure(kind_info(*k).fixed_sort == 0 ? Sort::Fm : Sort::Res);
      }
    }
    std::size_t start = pos_;
    std::exception_ptr fm_err;
    std::size_t fm_reach = 0;
    try {
      NodeP n = term(Sort::Fm);
      bool resource_atom = n->kind == Kind::Atom && ctx_.resources.count(n->name) > 0;
      if (at_stop(stop) && !resource_atom) return n;
      fm_reach = peek().off;
    } catch (const SyntaxError& e) {
      fm_err = std::current_exception();
      fm_reach = e.offset;
    } catch (const SortError&) {
      fm_err = std::current_exception();
    }
    pos_ = start;
    try {
      NodeP n = term(Sort::Res);
      expect_stop(stop);
      return n;
    } catch (const SyntaxError& e) {
      if (fm_err && fm_reach > e.offset) std::rethrow_exception(fm_err);
      throw;
    }
  }

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at_sym(const char* s) const { return peek().type == Tok::Sym && peek().text == s; }
  bool at_end() const { return peek().type == Tok::End; }
  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw SyntaxError(msg + (t.type == Tok::End ? " at end of input" : ", found '" + t.text + "'"),
                      t.off);
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  bool at_stop(const std::vector<std::string>& stop) const {
    if (at_end()) return std::find(stop.begin(), stop.end(), "") != stop.end();
    return peek().type == Tok::Sym && std::find(stop.begin(), stop.end(), peek().text) != stop.end();
  }
  void expect_stop(const std::vector<std::string>& stop) const {
    if (!at_stop(stop)) fail("unexpected token after structure");
  }

  // A constructor name is a structure use when followed by '(' or an agent
  // bracket, or when it is nullary.
  bool is_constructor_use(Kind k) const {
    if (kind_info(k).args.empty()) return true;
    const Token& n = peek(1);
    return n.type == Tok::Sym && (n.text == "(" || n.text == "[");
  }

  void check_roles(Kind k) const {
    if (kind_info(k).roles && !ctx_.allow_roles)
      fail(std::string(kind_info(k).name) + " requires the roles extension");
  }

  NodeP constructor(Kind k) {
    const auto& info = kind_info(k);
    check_roles(k);
    ++pos_;
    auto [agent, agent_var] = info.agent_indexed ? agent_opt() : std::pair<std::string, bool>{"", false};
    if (info.args.empty()) return make(k, {});
    expect_sym("(");
    std::vector<NodeP> kids;
    for (std::size_t i = 0; i < info.args.size(); ++i) {
      if (i > 0) expect_sym(",");
      kids.push_back(structure(info.args[i]));
    }
    expect_sym(")");
    return make(k, std::move(kids), agent, agent_var);
  }

  // Optional "[name]" agent annotation. A '[' that starts a ternary
  // capability ("[a, b] |>> c") is not an annotation.
  std::pair<std::string, bool> agent_opt() {
    if (at_sym("[") && peek(1).type == Tok::Ident && peek(2).type == Tok::Sym &&
        peek(2).text == "]") {
      std::string name = peek(1).text;
      pos_ += 3;
      return {name, ctx_.agent_vars.count(name) > 0};
    }
    return {"", false};
  }

  // Fm levels
  NodeP fm_imp_level() {
    NodeP a = fm_disj();
    if (at_sym("->")) {
      ++pos_;
      NodeP b = fm_imp_level();
      return make(Kind::Imp, {a, b});
    }
    return a;
  }
  NodeP fm_disj() {
    NodeP a = fm_conj();
    while (at_sym("\\/")) {
      ++pos_;
      a = make(Kind::Or, {a, fm_conj()});
    }
    return a;
  }
  NodeP fm_conj() {
    NodeP a = fm_pre();
    while (at_sym("/\\")) {
      ++pos_;
      a = make(Kind::And, {a, fm_pre()});
    }
    return a;
  }

  NodeP fm_pre() {
    const Token& t = peek();
    if (t.type == Tok::Sym && t.text == "~") {
      ++pos_;
      return make(Kind::Imp, {fm_pre(), bot()});
    }
    if (t.type == Tok::Ident) {
      if (t.text == "true") {
        ++pos_;
        return top();
      }
      if (t.text == "false") {
        ++pos_;
        return bot();
      }
      if (t.text == "dia") {
        ++pos_;
        auto [ag, av] = agent_opt();
        return make(Kind::Dia, {fm_pre()}, ag, av);
      }
      if (t.text == "own" || t.text == "own1" || t.text == "own2") {
        Kind k = t.text == "own" ? Kind::RDia : t.text == "own1" ? Kind::RDia1 : Kind::RDia2;
        check_roles(k);
        ++pos_;
        auto [ag, av] = agent_opt();
        return make(k, {res_join()}, ag, av);
      }
    }
    if (t.type == Tok::Sym && t.text == "[") {
      check_roles(Kind::TCap);
      ++pos_;
      NodeP r1 = res_join();
      expect_sym(",");
      NodeP r2 = res_join();
      expect_sym("]");
      expect_sym("|>>");
      auto [ag, av] = agent_opt();
      NodeP r3 = res_join();
      return make(Kind::TCap, {r1, r2, r3}, ag, av);
    }
    // Heterogeneous capability: a resource expression followed by |> or |>>.
    {
      std::size_t start = pos_;
      NodeP r;
      try {
        r = res_join();
      } catch (const Error&) {
        r = nullptr;
      }
      if (r && at_sym("|>")) {
        ++pos_;
        auto [ag, av] = agent_opt();
        return make(Kind::Cap, {r, fm_pre()}, ag, av);
      }
      if (r && at_sym("|>>")) {
        ++pos_;
        auto [ag, av] = agent_opt();
        return make(Kind::RCap, {r, res_join()}, ag, av);
      }
      pos_ = start;
    }
    if (t.type == Tok::Sym && t.text == "(") {
      ++pos_;
      NodeP a = fm_imp_level();
      expect_sym(")");
      return a;
    }
    if (t.type == Tok::Ident && !is_keyword(t.text)) {
      ++pos_;
      return ident_leaf(t, Sort::Fm);
    }
    fail("expected a formula");
  }

  NodeP ident_leaf(const Token& t, Sort s) {
    if (auto mv = ctx_.metavars.find(t.text); mv != ctx_.metavars.end()) {
      if (mv->second.kind == Kind::StructVar)
        throw SortError("structure variable " + t.text + " used inside an operational term");
      if (mv->second.sort != s)
        throw SortError("metavariable " + t.text + " has sort " + sort_name(mv->second.sort) +
                        ", expected " + sort_name(s));
      return metavar(mv->second.kind, t.text, s);
    }
    if (s == Sort::Fm) return atom(t.text, Sort::Fm);
    bool reusable = ctx_.reusable.count(t.text) > 0;
    if (at_sym("!")) {
      ++pos_;
      reusable = true;
    }
    return atom(t.text, Sort::Res, reusable);
  }

  // Res levels
  NodeP res_join() {
    NodeP a = res_meet();
    while (at_sym("+")) {
      ++pos_;
      a = make(Kind::Join, {a, res_meet()});
    }
    return a;
  }
  NodeP res_meet() {
    NodeP a = res_fuse();
    while (at_sym("&")) {
      ++pos_;
      a = make(Kind::Meet, {a, res_fuse()});
    }
    return a;
  }
  NodeP res_fuse() {
    NodeP a = res_prim();
    while (at_sym("*")) {
      ++pos_;
      a = make(Kind::Fuse, {a, res_prim()});
    }
    return a;
  }
  NodeP res_prim() {
    const Token& t = peek();
    if (t.type == Tok::Num) {
      ++pos_;
      return t.text == "1" ? one() : zero();
    }
    if (t.type == Tok::Sym && t.text == "(") {
      ++pos_;
      NodeP a = res_join();
      expect_sym(")");
      return a;
    }
    if (t.type == Tok::Ident && !is_keyword(t.text)) {
      ++pos_;
      return ident_leaf(t, Sort::Res);
    }
    fail("expected a resource");
  }

  std::vector<Token> toks_;
  const ParseContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

NodeP parse_term(const std::string& text, Sort sort, const ParseContext& ctx) {
  try {
    Parser p(text, ctx);
    NodeP n = p.term(sort);
    p.expect_end();
    return n;
  } catch (const SyntaxError&) {
    // Report a sort error when the text is a well-formed term of the other sort.
    Sort other = sort == Sort::Fm ? Sort::Res : Sort::Fm;
    bool other_ok = false;
    try {
      Parser q(text, ctx);
      q.term(other);
      q.expect_end();
      other_ok = true;
    } catch (const Error&) {
    }
    if (other_ok)
      throw SortError("expected a " + std::string(sort_name(sort)) + " term, found a " +
                      sort_name(other) + " term");
    throw;
  }
}

NodeP parse_structure(const std::string& text, Sort sort, const ParseContext& ctx) {
  Parser p(text, ctx);
  NodeP n = p.structure(sort);
  p.expect_end();
  return n;
}

Sequent parse_sequent(const std::string& text, const ParseContext& ctx) {
  Parser p(text, ctx);
  NodeP l = p.side({"|-"});
  p.expect_sym("|-");
  NodeP r = p.side({""});
  p.expect_end();
  return Sequent(l, r);
}

// ---------------------------------------------------------------- printer

namespace {

std::string agent_suffix(const NodeP& n) {
  if (n->agent.empty() && !n->agent_var) return "";
  return "[" + n->agent + "]";
}

std::string render_res(const NodeP& n, int level);

std::string render_fm(const NodeP& n, int level) {
  int prec = 3;
  std::string s;
  switch (n->kind) {
    case Kind::Atom:
    case Kind::TermVar:
    case Kind::AtomVar:
    case Kind::StructVar:
      s = n->name;
      break;
    case Kind::Top:
      s = "true";
      break;
    case Kind::Bot:
      s = "false";
      break;
    case Kind::Imp:
      if (n->kids[1]->kind == Kind::Bot) {
        s = "~" + render_fm(n->kids[0], 3);
      } else {
        prec = 0;
        s = render_fm(n->kids[0], 1) + " -> " + render_fm(n->kids[1], 0);
      }
      break;
    case Kind::Or:
      prec = 1;
      s = render_fm(n->kids[0], 1) + " \\/ " + render_fm(n->kids[1], 2);
      break;
    case Kind::And:
      prec = 2;
      s = render_fm(n->kids[0], 2) + " /\\ " + render_fm(n->kids[1], 3);
      break;
    case Kind::Dia:
      s = "dia" + agent_suffix(n) + " " + render_fm(n->kids[0], 3);
      break;
    case Kind::RDia:
    case Kind::RDia1:
    case Kind::RDia2:
      s = std::string(kind_info(n->kind).name) + agent_suffix(n) + " " + render_res(n->kids[0], 0);
      break;
    case Kind::Cap:
      s = render_res(n->kids[0], 0) + " |>" + agent_suffix(n) + " " + render_fm(n->kids[1], 3);
      break;
    case Kind::RCap:
      s = render_res(n->kids[0], 0) + " |>>" + agent_suffix(n) + " " + render_res(n->kids[1], 0);
      break;
    case Kind::TCap:
      s = "[" + render_res(n->kids[0], 0) + ", " + render_res(n->kids[1], 0) + "] |>>" +
          agent_suffix(n) + " " + render_res(n->kids[2], 0);
      break;
    default:
      throw SortError(std::string("render: not a formula term: ") + kind_info(n->kind).name);
  }
  return prec < level ? "(" + s + ")" : s;
}

std::string render_res(const NodeP& n, int level) {
  int prec = 3;
  std::string s;
  switch (n->kind) {
    case Kind::Atom:
      s = n->name + (n->reusable ? "!" : "");
      break;
    case Kind::TermVar:
    case Kind::AtomVar:
    case Kind::StructVar:
      s = n->name;
      break;
    case Kind::One:
      s = "1";
      break;
    case Kind::Zero:
      s = "0";
      break;
    case Kind::Join:
      prec = 0;
      s = render_res(n->kids[0], 0) + " + " + render_res(n->kids[1], 1);
      break;
    case Kind::Meet:
      prec = 1;
      s = render_res(n->kids[0], 1) + " & " + render_res(n->kids[1], 2);
      break;
    case Kind::Fuse:
      prec = 2;
      s = render_res(n->kids[0], 2) + " * " + render_res(n->kids[1], 3);
      break;
    default:
      throw SortError(std::string("render: not a resource term: ") + kind_info(n->kind).name);
  }
  return prec < level ? "(" + s + ")" : s;
}

}  // namespace

std::string render(const NodeP& n) {
  if (!n->is_struct()) return n->sort == Sort::Fm ? render_fm(n, 0) : render_res(n, 0);
  std::string s = std::string(kind_info(n->kind).name) + agent_suffix(n);
  if (n->kids.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < n->kids.size(); ++i) {
    if (i > 0) s += ", ";
    s += render(n->kids[i]);
  }
  return s + ")";
}

std::string render(const Sequent& s) { return render(s.left) + " |- " + render(s.right); }

std::string render_path(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

}  // namespace lrc
