#include <algorithm>
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "lrc/search.hpp"

using namespace lrc;

namespace {

SearchBudget depth(int d) {
  SearchBudget b;
  b.max_depth = d;
  return b;
}

ParseContext g_ctx() {
  ParseContext c;
  c.resources = {"G"};
  return c;
}

bool has(const std::vector<Sequent>& xs, const std::string& s) {
  Sequent want = parse_sequent(s, g_ctx());
  return std::find(xs.begin(), xs.end(), want) != xs.end();
}

void require_sound(const SearchResult& r, const Sequent& goal, const RuleSet& rules) {
  REQUIRE(r.proved());
  CHECK(r.proof->conclusion == goal);
  CHECK(check_derivation(*r.proof, rules).ok);
  CHECK_FALSE(contains_cut(*r.proof, rules));
}

}  // namespace

TEST_CASE("shallow completeness derivations") {
  RuleSet base = base_ruleset();
  for (const char* g : {"I |- 0 |> p", "I |- a |>> 1"}) {
    Sequent goal = parse_sequent(g);
    SearchResult r = prove(goal, base, depth(6));
    require_sound(r, goal, base);
    CHECK(r.proof->height() <= 6);
  }
}

TEST_CASE("B2 is found in its five-step shape") {
  RuleSet base = base_ruleset();
  SearchResult r = prove(parse_sequent("I |- 0 |> p"), base);
  REQUIRE(r.proved());
  CHECK(r.proof->node_count() == 6);
  CHECK(r.proof->rule == "cap_R");
  auto used = rules_used(*r.proof);
  CHECK(std::find(used.begin(), used.end(), "zero_L") != used.end());
}

TEST_CASE("refutable goals exhaust") {
  RuleSet base = base_ruleset();
  SearchResult r = prove(parse_sequent("p |- q"), base, depth(6));
  CHECK_FALSE(r.proved());
  CHECK(r.stats.nodes > 0);
  CHECK(r.stats.depth_reached == 6);
  SearchBudget tiny;
  tiny.max_nodes = 50;
  SearchResult t = prove(parse_sequent("p |- dia p"), base, tiny);
  CHECK_FALSE(t.proved());
  CHECK(t.stats.node_limit_hit);
}

TEST_CASE("display moves") {
  RuleSet base = base_ruleset();
  CHECK(has(display_moves(parse_sequent("Circ(X) |- Y"), base), "X |- Blt(Y)"));
  CHECK(has(display_moves(parse_sequent("X |- CapS(G, Y)", g_ctx()), base), "G |- BTri(X, Y)"));
  CHECK(has(display_moves(parse_sequent("Semi(X, Y) |- Z"), base), "Y |- Gt(X, Z)"));
  CHECK(display_moves(parse_sequent("p |- q"), base).empty());
  for (const auto& s : display_moves(parse_sequent("X |- Gt(Y, CapS(G, Z))", g_ctx()), base))
    CHECK(has(display_moves(s, base), "X |- Gt(Y, CapS(G, Z))"));
}

TEST_CASE("loop key") {
  CHECK(loop_key(parse_sequent("Semi(p, q) |- r")) == loop_key(parse_sequent("Semi(q, p) |- r")));
  CHECK(loop_key(parse_sequent("Semi(Semi(p, q), r) |- s")) == loop_key(parse_sequent("Semi(p, Semi(r, q)) |- s")));
  ParseContext ctx;
  ctx.resources = {"a", "b", "c", "d"};
  CHECK(loop_key(parse_sequent("Com(a, b) |- d", ctx)) == loop_key(parse_sequent("Com(b, a) |- d", ctx)));
  CHECK(loop_key(parse_sequent("Odot(Odot(a, b), c) |- d", ctx)) ==
        loop_key(parse_sequent("Odot(a, Odot(b, c)) |- d", ctx)));
  CHECK(loop_key(parse_sequent("Odot(a, b) |- d", ctx)) != loop_key(parse_sequent("Odot(b, a) |- d", ctx)));
  CHECK(loop_key(parse_sequent("p |- q")) != loop_key(parse_sequent("q |- p")));
}

TEST_CASE("bridge") {
  RuleSet base = base_ruleset();
  Sequent from = parse_sequent("Semi(p, q) |- r");
  Sequent to = parse_sequent("q |- Gt(p, r)");
  auto steps = bridge(from, to, base);
  REQUIRE(steps);
  REQUIRE_FALSE(steps->empty());
  CHECK(steps->front().conclusion == from);
  // Rebuild the chain as a derivation with an open top and check each step.
  Derivation top{to, "open", {}, {}};
  for (auto it = steps->rbegin(); it != steps->rend(); ++it) top = Derivation{it->conclusion, it->rule, {top}, {}};
  CHECK(top.conclusion == from);
  std::vector<const Derivation*> stack{&top};
  while (!stack.empty()) {
    const Derivation* d = stack.back();
    stack.pop_back();
    if (d->rule == "open") continue;
    CHECK_FALSE(check_node(*d, base).has_value());
    for (const auto& p : d->premises) stack.push_back(&p);
  }
  CHECK_FALSE(bridge(parse_sequent("p |- q"), parse_sequent("q |- p"), base));
}

TEST_CASE("search is deterministic and monotone in the budget") {
  RuleSet base = base_ruleset();
  for (const char* g : {"a & b |- b & a", "p /\\ q |- q /\\ p", "dia false |- false", "own 0 |- false"}) {
    Sequent goal = parse_sequent(g);
    SearchResult a = prove(goal, base), b = prove(goal, base);
    REQUIRE(a.proved());
    CHECK(render_tree(*a.proof) == render_tree(*b.proof));
    CHECK(a.stats.nodes == b.stats.nodes);
    SearchBudget more;
    more.max_depth = 16;
    more.max_nodes = 1000000;
    more.max_contractions_per_branch = 3;
    require_sound(prove(goal, base, more), goal, base);
  }
}

TEST_CASE("compound identities are found and checked") {
  std::mt19937_64 rng(12);
  gen::Pools p;
  p.agents = {""};
  p.roles = false;
  p.reusable = false;
  RuleSet base = base_ruleset();
  for (int i = 0; i < 60; ++i) {
    NodeP f = gen::term(rng, i % 2 ? Sort::Fm : Sort::Res, 2, p);
    Sequent goal(f, f);
    SearchBudget b;
    b.max_nodes = 50000;
    SearchResult r = prove(goal, base, b);
    INFO(render(goal));
    require_sound(r, goal, base);
  }
}

TEST_CASE("extension rules are used when enabled") {
  ParseContext ctx;
  ctx.resources = {"s", "d"};
  ctx.reusable = {"s"};
  Sequent goal = parse_sequent("s |- s * s", ctx);
  RuleSet with = extension_ruleset({"contr"});
  require_sound(prove(goal, with), goal, with);
  CHECK_FALSE(prove(goal, base_ruleset(), depth(8)).proved());
}
