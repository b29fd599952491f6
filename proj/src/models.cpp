#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"
#include "lrc/algebra.hpp"

namespace lrc {

using json = nlohmann::json;

namespace {

std::vector<int> tabulate(int n, const std::function<int(int)>& f) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- trivial and library

HeterogeneousModel trivial_model(const FiniteLattice& A, const FiniteLattice& Q, const std::vector<std::string>& agents,
                                 bool roles) {
  HeterogeneousModel m;
  m.name = "trivial";
  m.A = A;
  m.Q = Q;
  const int na = A.size(), nq = Q.size();
  m.fuse.resize(nq * nq);
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) m.fuse[x * nq + y] = Q.meet(x, y);
  AgentTables t;
  t.dia = tabulate(na, [](int x) { return x; });
  t.rdia.assign(nq, A.bot());
  t.cap.assign(nq * na, A.top());
  t.rcap.assign(nq * nq, A.top());
  t.has_roles = roles;
  if (roles) {
    t.rdia1.assign(nq, A.bot());
    t.rdia2.assign(nq, A.bot());
    t.tcap.assign(nq * nq * nq, A.top());
  }
  for (const auto& a : agents) m.agents[a] = t;
  if (m.agents.empty()) m.agents[""] = t;
  m.finalize();
  return m;
}

namespace {

// A = Q = L, fuse = meet, dia = rdia = id, cap and rcap are Heyting
// implication; roles: rdia1 = rdia2 = id, tcap(g, t, s) = (g & t) -> s.
HeterogeneousModel owner_model(const std::string& name, const FiniteLattice& L,
                               const std::vector<std::string>& agents) {
  HeterogeneousModel m;
  m.name = name;
  m.A = L;
  m.Q = L;
  const int n = L.size();
  m.fuse.resize(n * n);
  AgentTables t;
  t.dia = tabulate(n, [](int x) { return x; });
  t.rdia = t.dia;
  t.cap.resize(n * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      m.fuse[g * n + x] = L.meet(g, x);
      t.cap[g * n + x] = L.imp(g, x);
    }
  t.rcap = t.cap;
  t.has_roles = true;
  t.rdia1 = t.dia;
  t.rdia2 = t.dia;
  t.tcap.resize(n * n * n);
  for (int g = 0; g < n; ++g)
    for (int th = 0; th < n; ++th)
      for (int s = 0; s < n; ++s) t.tcap[(g * n + th) * n + s] = L.imp(L.meet(g, th), s);
  for (const auto& a : agents) m.agents[a] = t;
  m.finalize();
  return m;
}

HeterogeneousModel renamed(HeterogeneousModel m, const std::string& name) {
  m.name = name;
  return m;
}

}  // namespace

const std::vector<std::string>& library_model_names() {
  static const std::vector<std::string> names = {"trivial-2x2",  "trivial-diamond-x-chain", "chain3-dia",
                                                 "chain2-diabot", "owner-2",                 "owner-diamond"};
  return names;
}

HeterogeneousModel library_model(const std::string& name, const std::vector<std::string>& agents_in) {
  std::vector<std::string> agents = agents_in.empty() ? std::vector<std::string>{""} : agents_in;
  const auto c2 = FiniteLattice::chain(2);
  const auto c3 = FiniteLattice::chain(3);
  if (name == "trivial-2x2") return renamed(trivial_model(c2, c2, agents), name);
  if (name == "trivial-diamond-x-chain") return renamed(trivial_model(FiniteLattice::diamond(), c3, agents), name);
  if (name == "chain3-dia") {
    auto m = renamed(trivial_model(c3, c2, agents), name);
    for (auto& [a, t] : m.agents) t.dia = {0, 2, 2};
    m.finalize();
    return m;
  }
  if (name == "chain2-diabot") {
    auto m = renamed(trivial_model(c2, c2, agents), name);
    for (auto& [a, t] : m.agents) t.dia = {0, 0};
    m.finalize();
    return m;
  }
  if (name == "owner-2") return owner_model(name, c2, agents);
  if (name == "owner-diamond") return owner_model(name, FiniteLattice::diamond(), agents);
  throw Error("unknown library model '" + name + "'");
}

std::vector<HeterogeneousModel> library_models(const std::vector<std::string>& agents) {
  std::vector<HeterogeneousModel> out;
  for (const auto& n : library_model_names()) out.push_back(library_model(n, agents));
  return out;
}

// ---------------------------------------------------------------- star and product

HeterogeneousModel star_extension(const HeterogeneousModel& m) {
  HeterogeneousModel s;
  s.name = m.name + "*";
  s.A = FiniteLattice::with_new_top(m.A);
  s.Q = m.Q;
  s.fuse = m.fuse;
  const int na = m.nA(), ns = na + 1, nq = m.nQ();
  const int top_star = na;
  const int q0 = m.Q.bot(), q1 = m.Q.top();
  for (const auto& [a, t] : m.agents) {
    AgentTables u;
    u.dia = t.dia;
    u.dia.push_back(t.dia[m.A.top()]);
    u.rdia = t.rdia;
    u.cap.resize(nq * ns);
    for (int g = 0; g < nq; ++g)
      for (int x = 0; x < ns; ++x)
        u.cap[g * ns + x] =
            (g == q0 || s.A.leq(t.rdia[q1], x)) ? top_star : t.cap[g * na + x];
    u.rcap.resize(nq * nq);
    for (int g = 0; g < nq; ++g)
      for (int d = 0; d < nq; ++d) u.rcap[g * nq + d] = (g == q0 || d == q1) ? top_star : t.rcap[g * nq + d];
    u.has_roles = t.has_roles;
    if (t.has_roles) {
      u.rdia1 = t.rdia1;
      u.rdia2 = t.rdia2;
      u.tcap.resize(nq * nq * nq);
      for (int g = 0; g < nq; ++g)
        for (int th = 0; th < nq; ++th)
          for (int sg = 0; sg < nq; ++sg) {
            int i = (g * nq + th) * nq + sg;
            u.tcap[i] = (g == q0 || th == q0 || sg == q1) ? top_star : t.tcap[i];
          }
    }
    s.agents[a] = u;
  }
  s.finalize();
  return s;
}

HeterogeneousModel product_model(const HeterogeneousModel& m1, const HeterogeneousModel& m2) {
  if (m1.agent_names() != m2.agent_names()) throw AgentMismatch("product factors declare different agents");
  HeterogeneousModel p;
  p.name = m1.name + "x" + m2.name;
  p.A = FiniteLattice::product(m1.A, m2.A);
  p.Q = FiniteLattice::product(m1.Q, m2.Q);
  const int a2 = m2.nA(), q2 = m2.nQ();
  const int na = p.nA(), nq = p.nQ();
  auto ia = [&](int x, int y) { return x * a2 + y; };
  auto iq = [&](int x, int y) { return x * q2 + y; };
  auto sa = [&](int x) { return std::pair{x / a2, x % a2}; };
  auto sq = [&](int x) { return std::pair{x / q2, x % q2}; };
  p.fuse.resize(nq * nq);
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) {
      auto [x1, x2] = sq(x);
      auto [y1, y2] = sq(y);
      p.fuse[x * nq + y] = iq(m1.f(x1, y1), m2.f(x2, y2));
    }
  for (const auto& [a, t1] : m1.agents) {
    const auto& t2 = m2.agent(a);
    const int n1a = m1.nA(), n1q = m1.nQ();
    AgentTables u;
    u.dia = tabulate(na, [&](int x) {
      auto [x1, x2] = sa(x);
      return ia(t1.dia[x1], t2.dia[x2]);
    });
    u.rdia = tabulate(nq, [&](int g) {
      auto [g1, g2] = sq(g);
      return ia(t1.rdia[g1], t2.rdia[g2]);
    });
    u.cap.resize(nq * na);
    for (int g = 0; g < nq; ++g)
      for (int x = 0; x < na; ++x) {
        auto [g1, g2] = sq(g);
        auto [x1, x2] = sa(x);
        u.cap[g * na + x] = ia(t1.cap[g1 * n1a + x1], t2.cap[g2 * a2 + x2]);
      }
    u.rcap.resize(nq * nq);
    for (int g = 0; g < nq; ++g)
      for (int d = 0; d < nq; ++d) {
        auto [g1, g2] = sq(g);
        auto [d1, d2] = sq(d);
        u.rcap[g * nq + d] = ia(t1.rcap[g1 * n1q + d1], t2.rcap[g2 * q2 + d2]);
      }
    u.has_roles = t1.has_roles && t2.has_roles;
    if (u.has_roles) {
      u.rdia1 = tabulate(nq, [&](int g) {
        auto [g1, g2] = sq(g);
        return ia(t1.rdia1[g1], t2.rdia1[g2]);
      });
      u.rdia2 = tabulate(nq, [&](int g) {
        auto [g1, g2] = sq(g);
        return ia(t1.rdia2[g1], t2.rdia2[g2]);
      });
      u.tcap.resize(nq * nq * nq);
      for (int g = 0; g < nq; ++g)
        for (int th = 0; th < nq; ++th)
          for (int s = 0; s < nq; ++s) {
            auto [g1, g2] = sq(g);
            auto [h1, h2] = sq(th);
            auto [s1, s2] = sq(s);
            u.tcap[(g * nq + th) * nq + s] =
                ia(t1.tcap[(g1 * n1q + h1) * n1q + s1], t2.tcap[(g2 * q2 + h2) * q2 + s2]);
          }
    }
    p.agents[a] = u;
  }
  p.finalize();
  return p;
}

// ---------------------------------------------------------------- random models

namespace {

FiniteLattice random_lattice(std::mt19937_64& rng, int max_size) {
  std::vector<FiniteLattice> pool;
  for (int n = 2; n <= std::min(max_size, 5); ++n) pool.push_back(FiniteLattice::chain(n));
  if (max_size >= 4) pool.push_back(FiniteLattice::diamond());
  if (max_size >= 6) pool.push_back(FiniteLattice::product(FiniteLattice::chain(2), FiniteLattice::chain(3)));
  if (max_size >= 8)
    pool.push_back(FiniteLattice::product(FiniteLattice::diamond(), FiniteLattice::chain(2)));
  if (pool.empty()) pool.push_back(FiniteLattice::chain(std::max(1, max_size)));
  return pool[rng() % pool.size()];
}

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

bool coin(std::mt19937_64& rng, int one_in) { return rng() % static_cast<std::uint64_t>(one_in) == 0; }

// Elements in an order compatible with leq (every element after its lower
// covers).
std::vector<int> linear_extension(const FiniteLattice& L) {
  std::vector<int> order(L.size());
  for (int i = 0; i < L.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = 0, db = 0;
    for (int x = 0; x < L.size(); ++x) {
      da += L.leq(x, a);
      db += L.leq(x, b);
    }
    return da < db;
  });
  return order;
}

// Join-preserving, bottom-preserving map S -> T from random images of the
// join-irreducibles.
std::vector<int> random_join_map(std::mt19937_64& rng, const FiniteLattice& S, const FiniteLattice& T) {
  std::map<int, int> img;
  for (int j : S.join_irreducibles()) img[j] = pick(rng, T.size());
  return tabulate(S.size(), [&](int x) {
    int r = T.bot();
    for (auto [j, y] : img)
      if (S.leq(j, x)) r = T.join(r, y);
    return r;
  });
}

// Meet-preserving, top-preserving map S -> T from random images of the
// meet-irreducibles.
std::vector<int> random_meet_map(std::mt19937_64& rng, const FiniteLattice& S, const FiniteLattice& T) {
  std::map<int, int> img;
  for (int mi : S.meet_irreducibles()) img[mi] = pick(rng, T.size());
  return tabulate(S.size(), [&](int x) {
    int r = T.top();
    for (auto [mi, y] : img)
      if (S.leq(x, mi)) r = T.meet(r, y);
    return r;
  });
}

std::vector<int> random_monotone(std::mt19937_64& rng, const FiniteLattice& L) {
  std::vector<int> h(L.size(), L.bot());
  for (int x : linear_extension(L)) {
    int lo = L.bot();
    for (int y = 0; y < L.size(); ++y)
      if (y != x && L.leq(y, x)) lo = L.join(lo, h[y]);
    h[x] = L.join(lo, pick(rng, L.size()));
  }
  return h;
}

std::vector<int> random_fuse(std::mt19937_64& rng, const FiniteLattice& Q) {
  const int n = Q.size();
  std::vector<int> f(n * n);
  int variant = Q.is_chain() ? pick(rng, 3) : 0;
  // On a chain built by FiniteLattice::chain, index order is the order.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = Q.meet(x, y);
      if (variant == 1) v = std::max(0, x + y - (n - 1));
      if (variant == 2) v = x == n - 1 ? y : y == n - 1 ? x : 0;
      f[x * n + y] = v;
    }
  return f;
}

AgentTables random_tables(std::mt19937_64& rng, const FiniteLattice& A, const FiniteLattice& Q, bool roles) {
  const int na = A.size(), nq = Q.size();
  AgentTables t;
  t.dia = coin(rng, 3) ? tabulate(na, [](int x) { return x; }) : random_join_map(rng, A, A);
  t.rdia = coin(rng, 3) ? std::vector<int>(nq, A.bot()) : random_join_map(rng, Q, A);
  const auto& jq = Q.join_irreducibles();
  if (coin(rng, 3)) {
    t.cap.assign(nq * na, A.top());
  } else {
    std::map<int, std::vector<int>> h;
    for (int j : jq) h[j] = random_monotone(rng, A);
    t.cap.resize(nq * na);
    for (int g = 0; g < nq; ++g)
      for (int x = 0; x < na; ++x) {
        int r = A.top();
        for (const auto& [j, hj] : h)
          if (Q.leq(j, g)) r = A.meet(r, hj[x]);
        t.cap[g * na + x] = r;
      }
  }
  if (coin(rng, 3)) {
    t.rcap.assign(nq * nq, A.top());
  } else {
    std::map<int, std::vector<int>> h;
    for (int j : jq) h[j] = random_meet_map(rng, Q, A);
    t.rcap.resize(nq * nq);
    for (int g = 0; g < nq; ++g)
      for (int d = 0; d < nq; ++d) {
        int r = A.top();
        for (const auto& [j, hj] : h)
          if (Q.leq(j, g)) r = A.meet(r, hj[d]);
        t.rcap[g * nq + d] = r;
      }
  }
  t.has_roles = roles;
  if (roles) {
    t.rdia1 = coin(rng, 3) ? std::vector<int>(nq, A.bot()) : random_join_map(rng, Q, A);
    t.rdia2 = coin(rng, 3) ? std::vector<int>(nq, A.bot()) : random_join_map(rng, Q, A);
    if (coin(rng, 3)) {
      t.tcap.assign(nq * nq * nq, A.top());
    } else {
      std::map<std::pair<int, int>, std::vector<int>> h;
      for (int j : jq)
        for (int k : jq) h[{j, k}] = random_meet_map(rng, Q, A);
      t.tcap.resize(nq * nq * nq);
      for (int g = 0; g < nq; ++g)
        for (int th = 0; th < nq; ++th)
          for (int s = 0; s < nq; ++s) {
            int r = A.top();
            for (const auto& [jk, hj] : h)
              if (Q.leq(jk.first, g) && Q.leq(jk.second, th)) r = A.meet(r, hj[s]);
            t.tcap[(g * nq + th) * nq + s] = r;
          }
    }
  }
  return t;
}

}  // namespace

HeterogeneousModel random_model(std::mt19937_64& rng, int max_size, const std::vector<std::string>& agents,
                                bool roles) {
  HeterogeneousModel m;
  m.name = "random";
  m.A = random_lattice(rng, max_size);
  m.Q = random_lattice(rng, max_size);
  m.fuse = random_fuse(rng, m.Q);
  for (const auto& a : agents) m.agents[a] = random_tables(rng, m.A, m.Q, roles);
  if (m.agents.empty()) m.agents[""] = random_tables(rng, m.A, m.Q, roles);
  m.finalize();
  return m;
}

std::optional<Countermodel> find_countermodel(const Sequent& seq, int size_bound, int sample_budget,
                                              std::uint64_t seed) {
  const auto agents = agents_of(seq);
  const bool roles = uses_roles(seq.left) || uses_roles(seq.right);
  auto try_model = [&](const HeterogeneousModel& m) -> std::optional<Assignment> {
    try {
      auto v = check_validity(m, seq, 20000, seed);
      if (!v.valid) return v.witness;
    } catch (const Uninterpretable&) {
    }
    return std::nullopt;
  };
  for (const auto& m : library_models(agents)) {
    if (std::max(m.nA(), m.nQ()) > size_bound) continue;
    if (auto w = try_model(m)) return Countermodel{m, *w, "library:" + m.name};
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < sample_budget; ++i) {
    HeterogeneousModel m = random_model(rng, size_bound, agents, roles);
    if (!check_axioms(m).ok()) continue;
    m.name = "random-" + std::to_string(i);
    if (auto w = try_model(m)) return Countermodel{m, *w, "random:" + std::to_string(i)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- JSON

namespace {

FiniteLattice lattice_from_json(const json& j) {
  auto names = j.at("elems").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> leq;
  for (const auto& p : j.at("leq")) leq.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return FiniteLattice::from_order(names, leq);
}

json lattice_to_json(const FiniteLattice& L) {
  json j;
  j["elems"] = L.names();
  j["leq"] = json::array();
  for (auto [a, b] : L.covers()) j["leq"].push_back({a, b});
  return j;
}

std::string agent_key(const std::string& a) { return a.empty() ? "_" : a; }

const json* agent_entry(const json& j, const char* table, const std::string& a) {
  if (!j.contains(table)) return nullptr;
  const json& t = j.at(table);
  if (t.contains(agent_key(a))) return &t.at(agent_key(a));
  if (a.empty() && t.contains("")) return &t.at("");
  return nullptr;
}

std::vector<int> flatten(const json& j) {
  std::vector<int> out;
  std::function<void(const json&)> walk = [&](const json& x) {
    if (x.is_array())
      for (const auto& e : x) walk(e);
    else
      out.push_back(x.get<int>());
  };
  walk(j);
  return out;
}

json nest(const std::vector<int>& flat, const std::vector<int>& dims) {
  std::function<json(std::size_t, std::size_t)> build = [&](std::size_t d, std::size_t off) {
    json arr = json::array();
    std::size_t stride = 1;
    for (std::size_t k = d + 1; k < dims.size(); ++k) stride *= dims[k];
    for (int i = 0; i < dims[d]; ++i) {
      if (d + 1 == dims.size())
        arr.push_back(flat[off + i]);
      else
        arr.push_back(build(d + 1, off + i * stride));
    }
    return arr;
  };
  return build(0, 0);
}

}  // namespace

HeterogeneousModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ShapeError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    HeterogeneousModel m;
    m.name = j.value("name", "model");
    m.A = lattice_from_json(j.at("fm"));
    m.Q = lattice_from_json(j.at("res"));
    const int nq = m.nQ();
    m.fuse.assign(nq * nq, -1);
    for (const auto& t : j.at("res").at("fuse")) {
      int x = t.at(0).get<int>(), y = t.at(1).get<int>(), z = t.at(2).get<int>();
      if (x < 0 || y < 0 || x >= nq || y >= nq) throw ShapeError("fuse entry out of range");
      m.fuse[x * nq + y] = z;
    }
    if (std::count(m.fuse.begin(), m.fuse.end(), -1) > 0) throw ShapeError("fuse table is partial");
    std::vector<std::string> agents = j.contains("agents") ? j.at("agents").get<std::vector<std::string>>()
                                                           : std::vector<std::string>{""};
    for (auto& a : agents)
      if (a == "_") a = "";
    for (const auto& a : agents) {
      AgentTables t;
      auto need = [&](const char* table) {
        const json* e = agent_entry(j, table, a);
        if (!e) throw ShapeError(std::string("missing ") + table + " table for agent " + agent_key(a));
        return flatten(*e);
      };
      t.dia = need("dia");
      t.rdia = need("rdia");
      t.cap = need("cap");
      t.rcap = need("rcap");
      if (agent_entry(j, "tcap", a)) {
        t.has_roles = true;
        t.rdia1 = need("rdia1");
        t.rdia2 = need("rdia2");
        t.tcap = need("tcap");
      }
      m.agents[a] = t;
    }
    m.finalize();
    return m;
  } catch (const json::exception& e) {
    throw ShapeError(std::string("malformed model file: ") + e.what());
  }
}

std::string model_to_json(const HeterogeneousModel& m) {
  json j;
  j["name"] = m.name;
  j["fm"] = lattice_to_json(m.A);
  j["res"] = lattice_to_json(m.Q);
  j["res"]["fuse"] = json::array();
  const int na = m.nA(), nq = m.nQ();
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) j["res"]["fuse"].push_back({x, y, m.f(x, y)});
  j["agents"] = json::array();
  for (const auto& [a, t] : m.agents) {
    const std::string k = agent_key(a);
    j["agents"].push_back(k);
    j["dia"][k] = t.dia;
    j["rdia"][k] = t.rdia;
    j["cap"][k] = nest(t.cap, {nq, na});
    j["rcap"][k] = nest(t.rcap, {nq, nq});
    if (t.has_roles) {
      j["rdia1"][k] = t.rdia1;
      j["rdia2"][k] = t.rdia2;
      j["tcap"][k] = nest(t.tcap, {nq, nq, nq});
    }
  }
  return j.dump(1);
}

}  // namespace lrc
