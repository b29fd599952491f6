// Two-sorted term and structure language, sequents, signs, substitution,
// and the ASCII concrete syntax.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrc {

// ---------------------------------------------------------------- errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(const std::string& msg, std::size_t off)
      : Error("syntax error at offset " + std::to_string(off) + ": " + msg), offset(off) {}
};
struct SortError : Error {
  using Error::Error;
};
struct TypeUniformityError : Error {
  using Error::Error;
};
struct PathError : Error {
  using Error::Error;
};
struct UnboundVarError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------- kinds

enum class Sort : std::uint8_t { Fm, Res };
enum class Sign : std::uint8_t { Pos, Neg };

inline Sign flip(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }
const char* sort_name(Sort s);
const char* sign_name(Sign s);

// Every node of the unified tree has one of these kinds. Term kinds form the
// operational language; structure kinds are the structural connectives; the
// last three are pattern metavariables.
enum class Kind : std::uint8_t {
  // operational, both sorts
  Atom,
  // Fm terms
  Top, Bot, And, Or, Imp, Dia, RDia, Cap, RCap, RDia1, RDia2, TCap,
  // Res terms
  One, Zero, Fuse, Join, Meet,
  // Fm structures
  I, Semi, Gt, Circ, CircR, Blt, CapS, RCapS, TCapS, CircR1, CircR2,
  // Res structures
  Phi, Odot, Com, RgtRes, LftRes, USup, USub, BltR, BTri, BTlt, BTriBar,
  BTriBar1, BTriBar2, TBTlt, BltR1, BltR2,
  // metavariables
  StructVar, TermVar, AtomVar,
};

constexpr int kKindCount = static_cast<int>(Kind::AtomVar) + 1;

struct KindInfo {
  const char* name;         // constructor token used by the ASCII syntax
  bool is_term;             // operational connective
  bool is_struct;           // structural connective
  bool is_var;              // pattern metavariable
  bool agent_indexed;
  bool roles;               // belongs to the roles extension
  int fixed_sort;           // 0 = Fm, 1 = Res, -1 = carried per node
  std::vector<Sort> args;   // child sorts
  std::vector<int> negative;  // 0-based negative coordinates
};

const KindInfo& kind_info(Kind k);
std::optional<Kind> struct_kind_by_name(const std::string& name);

// ---------------------------------------------------------------- nodes

struct Node;
using NodeP = std::shared_ptr<const Node>;

// Immutable tree node shared by terms, structures and patterns.
struct Node {
  Kind kind;
  Sort sort;
  bool reusable = false;   // resource atoms only
  bool agent_var = false;  // agent slot holds an agent metavariable
  std::string name;        // atoms and metavariables
  std::string agent;       // agent-indexed kinds
  std::vector<NodeP> kids;
  std::size_t hash = 0;

  bool is_term() const { return kind_info(kind).is_term; }
  bool is_struct() const { return kind_info(kind).is_struct; }
  bool is_var() const { return kind_info(kind).is_var; }
  // Terms and term/atom variables may appear as operational leaves.
  bool is_operational() const {
    return is_term() || kind == Kind::TermVar || kind == Kind::AtomVar;
  }
  std::size_t size() const;
};

bool equal(const NodeP& a, const NodeP& b);
struct NodeHash {
  std::size_t operator()(const NodeP& n) const { return n->hash; }
};
struct NodeEq {
  bool operator()(const NodeP& a, const NodeP& b) const { return equal(a, b); }
};

// Checked constructor; throws SortError on ill-sorted children.
NodeP make(Kind k, std::vector<NodeP> kids, std::string agent = "", bool agent_var = false);
NodeP atom(const std::string& name, Sort s, bool reusable = false);
NodeP metavar(Kind var_kind, const std::string& name, Sort s);

inline NodeP fm_imp(NodeP a, NodeP b) { return make(Kind::Imp, {std::move(a), std::move(b)}); }
NodeP top();
NodeP bot();
NodeP one();
NodeP zero();
NodeP unit_i();
NodeP unit_phi();

// ---------------------------------------------------------------- sequents

using Path = std::vector<int>;

struct Sequent {
  NodeP left, right;
  Sort sort = Sort::Fm;
  Sequent() = default;
  // Throws TypeUniformityError when the sides differ in sort.
  Sequent(NodeP l, NodeP r);
  bool operator==(const Sequent& o) const { return equal(left, o.left) && equal(right, o.right); }
  bool operator!=(const Sequent& o) const { return !(*this == o); }
  std::size_t hash() const;
};

// path[0] selects the side (0 left, 1 right), remaining entries are child
// indices. Paths never descend into operational terms.
NodeP node_at(const Sequent& s, const Path& p);
Sign sign_at(const Sequent& s, const Path& p);
Sequent replace_at(const Sequent& s, const Path& p, const NodeP& value);
NodeP replace_in(const NodeP& root, const Path& p, std::size_t from, const NodeP& value);

// Every structural position (including leaves) in preorder with its sign.
struct Position {
  Path path;
  NodeP node;
  Sign sign;
};
std::vector<Position> positions(const Sequent& s);

// ---------------------------------------------------------------- substitution

struct Substitution {
  std::map<std::string, NodeP> vars;
  std::map<std::string, std::string> agents;
};

NodeP substitute(const NodeP& pattern, const Substitution& sub);
Sequent substitute(const Sequent& pattern, const Substitution& sub);

// Syntactic one-way matching of a pattern against a concrete tree, extending
// `sub`. On failure `sub` may hold partial bindings; callers copy first.
bool match(const NodeP& pattern, const NodeP& target, Substitution& sub);
bool match(const Sequent& pattern, const Sequent& target, Substitution& sub);

// Collected metavariables of a pattern: name -> node (kind and sort).
void collect_vars(const NodeP& n, std::map<std::string, NodeP>& out);
void collect_agent_vars(const NodeP& n, std::set<std::string>& out);
void collect_atoms(const NodeP& n, std::set<std::string>& fm, std::set<std::string>& res);
bool uses_roles(const NodeP& n);

// ---------------------------------------------------------------- text syntax

struct MetaDecl {
  Kind kind;  // StructVar, TermVar or AtomVar
  Sort sort;
};

struct ParseContext {
  std::map<std::string, MetaDecl> metavars;
  std::set<std::string> agent_vars;
  std::set<std::string> resources;  // identifiers that are resource atoms
  std::set<std::string> reusable;   // reusable resource atoms
  bool allow_roles = true;
};

NodeP parse_term(const std::string& text, Sort sort, const ParseContext& ctx = {});
NodeP parse_structure(const std::string& text, Sort sort, const ParseContext& ctx = {});
Sequent parse_sequent(const std::string& text, const ParseContext& ctx = {});

std::string render(const NodeP& n);
std::string render(const Sequent& s);
std::string render_path(const Path& p);

}  // namespace lrc
