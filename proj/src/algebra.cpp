#include "lrc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lrc {

namespace {

void check_table(const std::vector<int>& t, std::size_t size, int range, const std::string& what) {
  if (t.size() != size)
    throw ShapeError(what + " table has " + std::to_string(t.size()) + " entries, expected " + std::to_string(size));
  for (int v : t)
    if (v < 0 || v >= range) throw ShapeError(what + " table entry " + std::to_string(v) + " out of range");
}

std::string agent_label(const std::string& a) { return a.empty() ? "default" : a; }

}  // namespace

// ---------------------------------------------------------------- model

void HeterogeneousModel::finalize() {
  if (!A.distributive()) throw NonDistributive("formula lattice is not distributive");
  if (!Q.distributive()) throw NonDistributive("resource lattice is not distributive");
  const int na = nA(), nq = nQ();
  check_table(fuse, nq * nq, nq, "fuse");
  if (agents.empty()) throw ShapeError("model declares no agents");
  rres_.assign(nq * nq, 0);
  lres_.assign(nq * nq, 0);
  for (int g = 0; g < nq; ++g)
    for (int s = 0; s < nq; ++s) {
      int r = Q.bot(), l = Q.bot();
      for (int d = 0; d < nq; ++d) {
        if (Q.leq(f(g, d), s)) r = Q.join(r, d);
        if (Q.leq(f(d, g), s)) l = Q.join(l, d);
      }
      rres_[g * nq + s] = r;
      lres_[s * nq + g] = l;
    }
  for (auto& [name, t] : agents) {
    const std::string who = "agent " + agent_label(name) + ": ";
    check_table(t.dia, na, na, who + "dia");
    check_table(t.rdia, nq, na, who + "rdia");
    check_table(t.cap, nq * na, na, who + "cap");
    check_table(t.rcap, nq * nq, na, who + "rcap");
    if (t.has_roles) {
      check_table(t.rdia1, nq, na, who + "rdia1");
      check_table(t.rdia2, nq, na, who + "rdia2");
      check_table(t.tcap, nq * nq * nq, na, who + "tcap");
    }
    t.box.assign(na, 0);
    for (int y = 0; y < na; ++y) {
      int r = A.bot();
      for (int x = 0; x < na; ++x)
        if (A.leq(t.dia[x], y)) r = A.join(r, x);
      t.box[y] = r;
    }
    auto rbox_of = [&](const std::vector<int>& rd) {
      std::vector<int> out(na, 0);
      for (int x = 0; x < na; ++x) {
        int r = Q.bot();
        for (int g = 0; g < nq; ++g)
          if (A.leq(rd[g], x)) r = Q.join(r, g);
        out[x] = r;
      }
      return out;
    };
    t.rbox = rbox_of(t.rdia);
    t.btri.assign(na * na, 0);
    for (int x = 0; x < na; ++x)
      for (int y = 0; y < na; ++y) {
        int r = Q.bot();
        for (int g = 0; g < nq; ++g)
          if (A.leq(x, t.cap[g * na + y])) r = Q.join(r, g);
        t.btri[x * na + y] = r;
      }
    t.btlt.assign(nq * na, 0);
    t.btribar.assign(na * nq, 0);
    for (int g = 0; g < nq; ++g)
      for (int x = 0; x < na; ++x) {
        int r = Q.top();
        for (int d = 0; d < nq; ++d)
          if (A.leq(x, t.rcap[g * nq + d])) r = Q.meet(r, d);
        t.btlt[g * na + x] = r;
      }
    for (int x = 0; x < na; ++x)
      for (int d = 0; d < nq; ++d) {
        int r = Q.bot();
        for (int g = 0; g < nq; ++g)
          if (A.leq(x, t.rcap[g * nq + d])) r = Q.join(r, g);
        t.btribar[x * nq + d] = r;
      }
    if (t.has_roles) {
      t.rbox1 = rbox_of(t.rdia1);
      t.rbox2 = rbox_of(t.rdia2);
      auto tc = [&](int g, int th, int s) { return t.tcap[(g * nq + th) * nq + s]; };
      t.tbtlt.assign(nq * nq * na, 0);
      t.bb1.assign(na * nq * nq, 0);
      t.bb2.assign(nq * na * nq, 0);
      for (int g = 0; g < nq; ++g)
        for (int th = 0; th < nq; ++th)
          for (int x = 0; x < na; ++x) {
            int r = Q.top();
            for (int s = 0; s < nq; ++s)
              if (A.leq(x, tc(g, th, s))) r = Q.meet(r, s);
            t.tbtlt[(g * nq + th) * na + x] = r;
          }
      for (int x = 0; x < na; ++x)
        for (int th = 0; th < nq; ++th)
          for (int s = 0; s < nq; ++s) {
            int r = Q.bot();
            for (int g = 0; g < nq; ++g)
              if (A.leq(x, tc(g, th, s))) r = Q.join(r, g);
            t.bb1[(x * nq + th) * nq + s] = r;
          }
      for (int g = 0; g < nq; ++g)
        for (int x = 0; x < na; ++x)
          for (int s = 0; s < nq; ++s) {
            int r = Q.bot();
            for (int th = 0; th < nq; ++th)
              if (A.leq(x, tc(g, th, s))) r = Q.join(r, th);
            t.bb2[(g * na + x) * nq + s] = r;
          }
    }
  }
}

bool HeterogeneousModel::has_roles() const {
  return !agents.empty() &&
         std::all_of(agents.begin(), agents.end(), [](const auto& kv) { return kv.second.has_roles; });
}

const AgentTables& HeterogeneousModel::agent(const std::string& a) const {
  auto it = agents.find(a);
  if (it == agents.end()) throw Uninterpretable("model " + name + " has no tables for agent " + agent_label(a));
  return it->second;
}

std::vector<std::string> HeterogeneousModel::agent_names() const {
  std::vector<std::string> out;
  for (const auto& kv : agents) out.push_back(kv.first);
  return out;
}

std::string render_assignment(const HeterogeneousModel& m, const Assignment& v) {
  std::string s;
  for (const auto& [k, x] : v.fm) s += (s.empty() ? "" : ", ") + k + "=" + m.A.name(x);
  for (const auto& [k, x] : v.res) s += (s.empty() ? "" : ", ") + k + "=" + m.Q.name(x);
  return s.empty() ? "(no atoms)" : s;
}

// ---------------------------------------------------------------- evaluation

int eval_term(const HeterogeneousModel& m, const Assignment& v, const NodeP& t) {
  const auto& A = m.A;
  const auto& Q = m.Q;
  auto ev = [&](int i) { return eval_term(m, v, t->kids[i]); };
  switch (t->kind) {
    case Kind::Atom: {
      const auto& table = t->sort == Sort::Fm ? v.fm : v.res;
      auto it = table.find(t->name);
      if (it == table.end()) throw UnassignedAtom("atom " + t->name + " is unassigned");
      return it->second;
    }
    case Kind::Top: return A.top();
    case Kind::Bot: return A.bot();
    case Kind::And: return A.meet(ev(0), ev(1));
    case Kind::Or: return A.join(ev(0), ev(1));
    case Kind::Imp: return A.imp(ev(0), ev(1));
    case Kind::Dia: return m.agent(t->agent).dia[ev(0)];
    case Kind::RDia: return m.agent(t->agent).rdia[ev(0)];
    case Kind::Cap: return m.agent(t->agent).cap[ev(0) * m.nA() + ev(1)];
    case Kind::RCap: return m.agent(t->agent).rcap[ev(0) * m.nQ() + ev(1)];
    case Kind::RDia1:
    case Kind::RDia2:
    case Kind::TCap: {
      const auto& tab = m.agent(t->agent);
      if (!tab.has_roles) throw Uninterpretable("model " + m.name + " has no roles tables");
      if (t->kind == Kind::RDia1) return tab.rdia1[ev(0)];
      if (t->kind == Kind::RDia2) return tab.rdia2[ev(0)];
      return tab.tcap[(ev(0) * m.nQ() + ev(1)) * m.nQ() + ev(2)];
    }
    case Kind::One: return Q.top();
    case Kind::Zero: return Q.bot();
    case Kind::Fuse: return m.f(ev(0), ev(1));
    case Kind::Join: return Q.join(ev(0), ev(1));
    case Kind::Meet: return Q.meet(ev(0), ev(1));
    default:
      throw Uninterpretable(std::string("cannot evaluate ") + kind_info(t->kind).name + " as a term");
  }
}

int eval_structure(const HeterogeneousModel& m, const Assignment& v, const NodeP& s, Sign sign) {
  if (s->is_term()) return eval_term(m, v, s);
  const auto& info = kind_info(s->kind);
  if (!info.is_struct) throw Uninterpretable("metavariable " + s->name + " has no value");
  std::vector<int> x(s->kids.size());
  for (std::size_t i = 0; i < s->kids.size(); ++i) {
    bool neg = std::find(info.negative.begin(), info.negative.end(), static_cast<int>(i)) != info.negative.end();
    x[i] = eval_structure(m, v, s->kids[i], neg ? flip(sign) : sign);
  }
  const bool pos = sign == Sign::Pos;
  const auto& A = m.A;
  const auto& Q = m.Q;
  const int na = m.nA(), nq = m.nQ();
  auto roles = [&]() -> const AgentTables& {
    const auto& t = m.agent(s->agent);
    if (!t.has_roles) throw Uninterpretable("model " + m.name + " has no roles tables");
    return t;
  };
  switch (s->kind) {
    case Kind::I: return pos ? A.top() : A.bot();
    case Kind::Semi: return pos ? A.meet(x[0], x[1]) : A.join(x[0], x[1]);
    case Kind::Gt: return pos ? A.coimp(x[1], x[0]) : A.imp(x[0], x[1]);
    case Kind::Phi: return pos ? Q.top() : Q.bot();
    case Kind::Com: return pos ? Q.meet(x[0], x[1]) : Q.join(x[0], x[1]);
    case Kind::USup: return pos ? Q.coimp(x[1], x[0]) : Q.imp(x[0], x[1]);
    case Kind::USub: return pos ? Q.coimp(x[0], x[1]) : Q.imp(x[1], x[0]);
    default: break;
  }
  if (pos) {
    switch (s->kind) {
      case Kind::Circ: return m.agent(s->agent).dia[x[0]];
      case Kind::CircR: return m.agent(s->agent).rdia[x[0]];
      case Kind::CircR1: return roles().rdia1[x[0]];
      case Kind::CircR2: return roles().rdia2[x[0]];
      case Kind::Odot: return m.f(x[0], x[1]);
      case Kind::BTlt: return m.agent(s->agent).btlt[x[0] * na + x[1]];
      case Kind::TBTlt: return roles().tbtlt[(x[0] * nq + x[1]) * na + x[2]];
      default: break;
    }
  } else {
    switch (s->kind) {
      case Kind::Blt: return m.agent(s->agent).box[x[0]];
      case Kind::BltR: return m.agent(s->agent).rbox[x[0]];
      case Kind::BltR1: return roles().rbox1[x[0]];
      case Kind::BltR2: return roles().rbox2[x[0]];
      case Kind::CapS: return m.agent(s->agent).cap[x[0] * na + x[1]];
      case Kind::RCapS: return m.agent(s->agent).rcap[x[0] * nq + x[1]];
      case Kind::TCapS: return roles().tcap[(x[0] * nq + x[1]) * nq + x[2]];
      case Kind::RgtRes: return m.rres(x[0], x[1]);
      case Kind::LftRes: return m.lres(x[0], x[1]);
      case Kind::BTri: return m.agent(s->agent).btri[x[0] * na + x[1]];
      case Kind::BTriBar: return m.agent(s->agent).btribar[x[0] * nq + x[1]];
      case Kind::BTriBar1: return roles().bb1[(x[0] * nq + x[1]) * nq + x[2]];
      case Kind::BTriBar2: return roles().bb2[(x[0] * na + x[1]) * nq + x[2]];
      default: break;
    }
  }
  throw Uninterpretable(std::string(info.name) + " has no interpretation at sign " + sign_name(sign));
}

bool holds_under(const HeterogeneousModel& m, const Assignment& v, const Sequent& seq) {
  int l = eval_structure(m, v, seq.left, Sign::Pos);
  int r = eval_structure(m, v, seq.right, Sign::Neg);
  return seq.sort == Sort::Fm ? m.A.leq(l, r) : m.Q.leq(l, r);
}

// ---------------------------------------------------------------- validity

namespace {

struct AtomLists {
  std::vector<std::string> fm, res;
};

AtomLists atoms_of(const Sequent& s) {
  std::set<std::string> fm, res;
  collect_atoms(s.left, fm, res);
  collect_atoms(s.right, fm, res);
  return {{fm.begin(), fm.end()}, {res.begin(), res.end()}};
}

std::uint64_t count_assignments(const HeterogeneousModel& m, const AtomLists& at, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < at.fm.size(); ++i) {
    n *= static_cast<std::uint64_t>(m.nA());
    if (n > cap) return cap + 1;
  }
  for (std::size_t i = 0; i < at.res.size(); ++i) {
    n *= static_cast<std::uint64_t>(m.nQ());
    if (n > cap) return cap + 1;
  }
  return n;
}

// Calls f on every assignment in odometer order (first atom fastest);
// stops when f returns false.
void for_each_assignment(const HeterogeneousModel& m, const AtomLists& at,
                         const std::function<bool(const Assignment&)>& f) {
  const std::size_t k = at.fm.size() + at.res.size();
  std::vector<int> digit(k, 0);
  Assignment v;
  for (const auto& a : at.fm) v.fm[a] = 0;
  for (const auto& a : at.res) v.res[a] = 0;
  while (true) {
    if (!f(v)) return;
    std::size_t i = 0;
    for (; i < k; ++i) {
      bool fm = i < at.fm.size();
      int base = fm ? m.nA() : m.nQ();
      const std::string& name = fm ? at.fm[i] : at.res[i - at.fm.size()];
      if (++digit[i] < base) {
        (fm ? v.fm : v.res)[name] = digit[i];
        break;
      }
      digit[i] = 0;
      (fm ? v.fm : v.res)[name] = 0;
    }
    if (i == k) return;
  }
}

}  // namespace

std::uint64_t assignment_count(const HeterogeneousModel& m, const Sequent& seq) {
  return count_assignments(m, atoms_of(seq), UINT64_MAX / 64);
}

Validity check_validity(const HeterogeneousModel& m, const Sequent& seq, std::uint64_t samples, std::uint64_t seed,
                        std::uint64_t cap) {
  Validity res;
  AtomLists at = atoms_of(seq);
  if (count_assignments(m, at, cap) <= cap) {
    for_each_assignment(m, at, [&](const Assignment& v) {
      ++res.evaluated;
      if (!holds_under(m, v, seq)) {
        res.valid = false;
        res.witness = v;
        return false;
      }
      return true;
    });
    return res;
  }
  res.sampled = true;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Assignment v;
    for (const auto& a : at.fm) v.fm[a] = static_cast<int>(rng() % m.nA());
    for (const auto& a : at.res) v.res[a] = static_cast<int>(rng() % m.nQ());
    ++res.evaluated;
    if (!holds_under(m, v, seq)) {
      res.valid = false;
      res.witness = v;
      break;
    }
  }
  return res;
}

bool holds(const HeterogeneousModel& m, const Sequent& seq, std::uint64_t cap) {
  AtomLists at = atoms_of(seq);
  if (count_assignments(m, at, cap) > cap)
    throw SamplingRequired("more than " + std::to_string(cap) + " assignments; use sampling");
  return check_validity(m, seq, 0, 0, cap).valid;
}

// ---------------------------------------------------------------- axioms

bool AxiomReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const AxiomItem& i) { return i.ok; });
}

const AxiomItem* AxiomReport::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

std::string AxiomReport::failures() const {
  std::string s;
  for (const auto& i : items)
    if (!i.ok) s += i.name + " fails at " + i.witness + "\n";
  return s;
}

namespace {

// Iterates tuples in lexicographic order (first coordinate slowest) and
// records the first tuple where `ok` is false.
class AxiomChecker {
 public:
  explicit AxiomChecker(const HeterogeneousModel& m) : m_(m) {}

  // Domains: 'A' or 'Q' per coordinate.
  void check(const std::string& name, const std::string& agent, const std::string& doms,
             const std::function<bool(const std::vector<int>&)>& ok) {
    AxiomItem* item = nullptr;
    for (auto& it : rep.items)
      if (it.name == name) item = &it;
    if (!item) {
      rep.items.push_back({name, true, ""});
      item = &rep.items.back();
    }
    if (!item->ok) return;
    std::vector<int> x(doms.size(), 0);
    while (true) {
      if (!ok(x)) {
        item->ok = false;
        std::string w = agent.empty() ? "" : "agent " + agent + ": ";
        for (std::size_t i = 0; i < x.size(); ++i)
          w += (i ? ", " : "") + (doms[i] == 'A' ? m_.A.name(x[i]) : m_.Q.name(x[i]));
        item->witness = w.empty() ? "(no arguments)" : w;
        return;
      }
      std::size_t i = x.size();
      while (i > 0) {
        --i;
        int base = doms[i] == 'A' ? m_.nA() : m_.nQ();
        if (++x[i] < base) break;
        x[i] = 0;
        if (i == 0) return;
      }
      if (x.empty()) return;
    }
  }
  AxiomReport rep;

 private:
  const HeterogeneousModel& m_;
};

}  // namespace

AxiomReport check_axioms(const HeterogeneousModel& m) {
  AxiomChecker c(m);
  const auto& A = m.A;
  const auto& Q = m.Q;
  const int na = m.nA(), nq = m.nQ();
  using V = const std::vector<int>&;
  c.check("R1", "", "", [&](V) { return A.distributive() && Q.distributive(); });
  c.check("R2-assoc", "", "QQQ", [&](V x) { return m.f(m.f(x[0], x[1]), x[2]) == m.f(x[0], m.f(x[1], x[2])); });
  c.check("R2-unit", "", "Q", [&](V x) { return m.f(Q.top(), x[0]) == x[0] && m.f(x[0], Q.top()) == x[0]; });
  c.check("R3", "", "AQ", [&](V x) {
    return A.leq(A.bot(), x[0]) && A.leq(x[0], A.top()) && Q.leq(Q.bot(), x[1]) && Q.leq(x[1], Q.top());
  });
  c.check("R4", "", "QQQ", [&](V x) {
    return m.f(x[0], Q.join(x[1], x[2])) == Q.join(m.f(x[0], x[1]), m.f(x[0], x[2])) &&
           m.f(Q.join(x[1], x[2]), x[0]) == Q.join(m.f(x[1], x[0]), m.f(x[2], x[0]));
  });
  c.check("R4-zero", "", "Q", [&](V x) { return m.f(x[0], Q.bot()) == Q.bot() && m.f(Q.bot(), x[0]) == Q.bot(); });
  c.check("MF", "", "QQQ", [&](V x) {
    return !Q.leq(x[0], x[1]) || (Q.leq(m.f(x[0], x[2]), m.f(x[1], x[2])) && Q.leq(m.f(x[2], x[0]), m.f(x[2], x[1])));
  });
  for (const auto& [ag, t] : m.agents) {
    const std::string a = agent_label(ag);
    auto cap = [&](int g, int y) { return t.cap[g * na + y]; };
    auto rcap = [&](int g, int d) { return t.rcap[g * nq + d]; };
    c.check("D1", a, "AA", [&](V x) { return t.dia[A.join(x[0], x[1])] == A.join(t.dia[x[0]], t.dia[x[1]]); });
    c.check("D2", a, "", [&](V) { return t.dia[A.bot()] == A.bot(); });
    c.check("D3", a, "QQ", [&](V x) { return t.rdia[Q.join(x[0], x[1])] == A.join(t.rdia[x[0]], t.rdia[x[1]]); });
    c.check("D4", a, "", [&](V) { return t.rdia[Q.bot()] == A.bot(); });
    c.check("B1", a, "QQA", [&](V x) { return cap(Q.join(x[0], x[1]), x[2]) == A.meet(cap(x[0], x[2]), cap(x[1], x[2])); });
    c.check("B2", a, "A", [&](V x) { return cap(Q.bot(), x[0]) == A.top(); });
    c.check("B3", a, "QQA", [&](V x) { return A.leq(cap(x[0], cap(x[1], x[2])), cap(m.f(x[0], x[1]), x[2])); });
    c.check("B4", a, "QQQ", [&](V x) { return rcap(Q.join(x[0], x[1]), x[2]) == A.meet(rcap(x[0], x[2]), rcap(x[1], x[2])); });
    c.check("B5", a, "Q", [&](V x) { return rcap(Q.bot(), x[0]) == A.top(); });
    c.check("B6", a, "QQQ", [&](V x) { return rcap(x[0], Q.meet(x[1], x[2])) == A.meet(rcap(x[0], x[1]), rcap(x[0], x[2])); });
    c.check("B7", a, "Q", [&](V x) { return rcap(x[0], Q.top()) == A.top(); });
    c.check("BD1", a, "QA", [&](V x) { return A.leq(A.meet(t.rdia[x[0]], cap(x[0], x[1])), t.dia[x[1]]); });
    c.check("BD2", a, "QQ", [&](V x) { return A.leq(rcap(x[0], x[1]), cap(x[0], t.rdia[x[1]])); });
    c.check("MD", a, "AA", [&](V x) { return !A.leq(x[0], x[1]) || A.leq(t.dia[x[0]], t.dia[x[1]]); });
    c.check("MD'", a, "QQ", [&](V x) { return !Q.leq(x[0], x[1]) || A.leq(t.rdia[x[0]], t.rdia[x[1]]); });
    c.check("MB", a, "QAA", [&](V x) { return !A.leq(x[1], x[2]) || A.leq(cap(x[0], x[1]), cap(x[0], x[2])); });
    c.check("AB", a, "QQA", [&](V x) { return !Q.leq(x[0], x[1]) || A.leq(cap(x[1], x[2]), cap(x[0], x[2])); });
    c.check("MB'", a, "QQQ", [&](V x) { return !Q.leq(x[1], x[2]) || A.leq(rcap(x[0], x[1]), rcap(x[0], x[2])); });
    c.check("AB'", a, "QQQ", [&](V x) { return !Q.leq(x[0], x[1]) || A.leq(rcap(x[1], x[2]), rcap(x[0], x[2])); });
    if (!t.has_roles) continue;
    auto tc = [&](int g, int th, int s) { return t.tcap[(g * nq + th) * nq + s]; };
    c.check("T-join1", a, "QQQQ", [&](V x) {
      return tc(Q.join(x[0], x[1]), x[2], x[3]) == A.meet(tc(x[0], x[2], x[3]), tc(x[1], x[2], x[3]));
    });
    c.check("T-join2", a, "QQQQ", [&](V x) {
      return tc(x[2], Q.join(x[0], x[1]), x[3]) == A.meet(tc(x[2], x[0], x[3]), tc(x[2], x[1], x[3]));
    });
    c.check("T-zero", a, "QQ", [&](V x) { return tc(Q.bot(), x[0], x[1]) == A.top() && tc(x[0], Q.bot(), x[1]) == A.top(); });
    c.check("T-meet3", a, "QQQQ", [&](V x) {
      return tc(x[0], x[1], Q.meet(x[2], x[3])) == A.meet(tc(x[0], x[1], x[2]), tc(x[0], x[1], x[3]));
    });
    c.check("T-one", a, "QQ", [&](V x) { return tc(x[0], x[1], Q.top()) == A.top(); });
    c.check("D1-1", a, "QQ", [&](V x) { return t.rdia1[Q.join(x[0], x[1])] == A.join(t.rdia1[x[0]], t.rdia1[x[1]]); });
    c.check("D2-1", a, "", [&](V) { return t.rdia1[Q.bot()] == A.bot(); });
    c.check("D1-2", a, "QQ", [&](V x) { return t.rdia2[Q.join(x[0], x[1])] == A.join(t.rdia2[x[0]], t.rdia2[x[1]]); });
    c.check("D2-2", a, "", [&](V) { return t.rdia2[Q.bot()] == A.bot(); });
    for (const auto& [ag2, t2] : m.agents) {
      if (!t2.has_roles) continue;
      c.check("RR", a + "/" + agent_label(ag2), "QQQ", [&](V x) {
        int lhs = A.meet(A.meet(t.rdia1[x[0]], t.rdia2[x[1]]), tc(x[0], x[1], x[2]));
        return A.leq(lhs, t.dia[t2.rdia2[x[2]]]);
      });
    }
  }
  return c.rep;
}

std::vector<std::string> agents_of(const Sequent& s) {
  std::set<std::string> out{""};
  std::function<void(const NodeP&)> walk = [&](const NodeP& n) {
    if (kind_info(n->kind).agent_indexed && !n->agent_var) out.insert(n->agent);
    for (const auto& k : n->kids) walk(k);
  };
  walk(s.left);
  walk(s.right);
  return {out.begin(), out.end()};
}

}  // namespace lrc
