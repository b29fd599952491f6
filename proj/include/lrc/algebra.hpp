// Finite heterogeneous algebras: lattices, operation tables, adjoints,
// axiom checking, evaluation, validity, countermodels, star and product.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrc/syntax.hpp"

namespace lrc {

struct ShapeError : Error {
  using Error::Error;
};
struct NonDistributive : Error {
  using Error::Error;
};
struct NotALattice : Error {
  using Error::Error;
};
struct Uninterpretable : Error {
  using Error::Error;
};
struct UnassignedAtom : Error {
  using Error::Error;
};
struct SamplingRequired : Error {
  using Error::Error;
};
struct AgentMismatch : Error {
  using Error::Error;
};

class FiniteLattice {
 public:
  FiniteLattice() = default;
  // Builds the reflexive-transitive closure of `leq` and checks that it is a
  // bounded lattice. Throws NotALattice.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& leq);
  static FiniteLattice chain(int n);
  static FiniteLattice diamond();  // the four-element Boolean algebra
  static FiniteLattice m3();       // non-distributive, five elements
  static FiniteLattice n5();       // non-distributive pentagon
  static FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);
  static FiniteLattice with_new_top(const FiniteLattice& a, const std::string& top_name = "T*");

  int size() const { return n_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bot() const { return bot_; }
  int top() const { return top_; }
  bool distributive() const { return distributive_; }
  // Heyting implication and co-implication; only defined when distributive.
  int imp(int a, int b) const { return imp_[a * n_ + b]; }
  int coimp(int a, int b) const { return coimp_[a * n_ + b]; }  // min{z : a <= b v z}
  int join_all(const std::vector<int>& xs) const;
  int meet_all(const std::vector<int>& xs) const;
  const std::vector<int>& join_irreducibles() const { return ji_; }
  const std::vector<int>& meet_irreducibles() const { return mi_; }
  bool is_chain() const;
  std::vector<std::pair<int, int>> covers() const;

 private:
  void finish();
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<char> leq_;
  std::vector<int> meet_, join_, imp_, coimp_, ji_, mi_;
  int bot_ = 0, top_ = 0;
  bool distributive_ = false;
};

// Operation tables for one agent. Flat tables are row-major in the listed
// argument order.
struct AgentTables {
  std::vector<int> dia;   // A -> A
  std::vector<int> rdia;  // Q -> A
  std::vector<int> cap;   // Q x A -> A
  std::vector<int> rcap;  // Q x Q -> A
  bool has_roles = false;
  std::vector<int> rdia1, rdia2;  // Q -> A
  std::vector<int> tcap;          // Q x Q x Q -> A
  // adjoints, computed by brute force
  std::vector<int> box;           // A -> A
  std::vector<int> rbox;          // A -> Q
  std::vector<int> rbox1, rbox2;  // A -> Q
  std::vector<int> btri;          // A x A -> Q
  std::vector<int> btlt;          // Q x A -> Q
  std::vector<int> btribar;       // A x Q -> Q
  std::vector<int> tbtlt;         // Q x Q x A -> Q
  std::vector<int> bb1;           // A x Q x Q -> Q
  std::vector<int> bb2;           // Q x A x Q -> Q
};

class HeterogeneousModel {
 public:
  std::string name;
  FiniteLattice A, Q;
  std::vector<int> fuse;  // Q x Q -> Q
  std::map<std::string, AgentTables> agents;

  // Validates table shapes and computes adjoints. Throws ShapeError or
  // NonDistributive.
  void finalize();
  bool has_roles() const;
  const AgentTables& agent(const std::string& a) const;
  std::vector<std::string> agent_names() const;

  int nA() const { return A.size(); }
  int nQ() const { return Q.size(); }
  int f(int x, int y) const { return fuse[x * nQ() + y]; }
  int rres(int g, int s) const { return rres_[g * nQ() + s]; }  // max{d : g.d <= s}
  int lres(int s, int d) const { return lres_[s * nQ() + d]; }  // max{g : g.d <= s}

 private:
  std::vector<int> rres_, lres_;
};

struct Assignment {
  std::map<std::string, int> fm;
  std::map<std::string, int> res;
};
std::string render_assignment(const HeterogeneousModel& m, const Assignment& v);

int eval_term(const HeterogeneousModel& m, const Assignment& v, const NodeP& t);
int eval_structure(const HeterogeneousModel& m, const Assignment& v, const NodeP& s, Sign sign);
bool holds_under(const HeterogeneousModel& m, const Assignment& v, const Sequent& seq);

struct AxiomItem {
  std::string name;
  bool ok = true;
  std::string witness;
};
struct AxiomReport {
  std::vector<AxiomItem> items;
  bool ok() const;
  const AxiomItem* find(const std::string& name) const;
  std::string failures() const;
};
AxiomReport check_axioms(const HeterogeneousModel& m);

constexpr std::uint64_t kExhaustiveCap = 1000000;

struct Validity {
  bool valid = true;
  bool sampled = false;
  std::uint64_t evaluated = 0;
  std::optional<Assignment> witness;
};
// Exhaustive enumeration below `cap` assignments, seeded sampling above.
Validity check_validity(const HeterogeneousModel& m, const Sequent& seq, std::uint64_t samples = 20000,
                        std::uint64_t seed = 1, std::uint64_t cap = kExhaustiveCap);
// Exhaustive only; throws SamplingRequired above the cap.
bool holds(const HeterogeneousModel& m, const Sequent& seq, std::uint64_t cap = kExhaustiveCap);
std::uint64_t assignment_count(const HeterogeneousModel& m, const Sequent& seq);

// Constructions.
HeterogeneousModel trivial_model(const FiniteLattice& A, const FiniteLattice& Q,
                                 const std::vector<std::string>& agents = {""}, bool roles = true);
HeterogeneousModel star_extension(const HeterogeneousModel& m);
HeterogeneousModel product_model(const HeterogeneousModel& m1, const HeterogeneousModel& m2);

// Library of hand-built verified models over the given agents.
std::vector<HeterogeneousModel> library_models(const std::vector<std::string>& agents = {""});
HeterogeneousModel library_model(const std::string& name, const std::vector<std::string>& agents = {""});
const std::vector<std::string>& library_model_names();

// Random model over lattices of at most `max_size` elements; may fail
// check_axioms (callers filter).
HeterogeneousModel random_model(std::mt19937_64& rng, int max_size, const std::vector<std::string>& agents,
                                bool roles);

struct Countermodel {
  HeterogeneousModel model;
  Assignment assignment;
  std::string source;  // "library:<name>" or "random:<index>"
};
std::optional<Countermodel> find_countermodel(const Sequent& seq, int size_bound, int sample_budget,
                                              std::uint64_t seed);

// Agents mentioned by a sequent (the default agent always included).
std::vector<std::string> agents_of(const Sequent& s);

// JSON model files.
HeterogeneousModel model_from_json(const std::string& text);
std::string model_to_json(const HeterogeneousModel& m);

}  // namespace lrc
