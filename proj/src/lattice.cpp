#include <algorithm>

#include "lrc/algebra.hpp"

namespace lrc {

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        const std::vector<std::pair<int, int>>& leq) {
  FiniteLattice L;
  L.n_ = static_cast<int>(names.size());
  if (L.n_ == 0) throw NotALattice("a lattice needs at least one element");
  L.names_ = std::move(names);
  const int n = L.n_;
  L.leq_.assign(n * n, 0);
  for (int i = 0; i < n; ++i) L.leq_[i * n + i] = 1;
  for (auto [a, b] : leq) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ShapeError("order pair out of range");
    L.leq_[a * n + b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (L.leq_[i * n + k])
        for (int j = 0; j < n; ++j)
          if (L.leq_[k * n + j]) L.leq_[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (L.leq_[i * n + j] && L.leq_[j * n + i])
        throw NotALattice("order is not antisymmetric on " + L.names_[i] + ", " + L.names_[j]);
  L.meet_.assign(n * n, -1);
  L.join_.assign(n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lub = -1, glb = -1;
      for (int c = 0; c < n; ++c) {
        if (L.leq(a, c) && L.leq(b, c)) {
          bool least = true;
          for (int d = 0; d < n && least; ++d)
            if (L.leq(a, d) && L.leq(b, d) && !L.leq(c, d)) least = false;
          if (least) lub = c;
        }
        if (L.leq(c, a) && L.leq(c, b)) {
          bool greatest = true;
          for (int d = 0; d < n && greatest; ++d)
            if (L.leq(d, a) && L.leq(d, b) && !L.leq(d, c)) greatest = false;
          if (greatest) glb = c;
        }
      }
      if (lub < 0 || glb < 0)
        throw NotALattice("no join or meet for " + L.names_[a] + ", " + L.names_[b]);
      L.join_[a * n + b] = lub;
      L.meet_[a * n + b] = glb;
    }
  L.finish();
  return L;
}

void FiniteLattice::finish() {
  const int n = n_;
  bot_ = top_ = -1;
  for (int i = 0; i < n; ++i) {
    bool is_bot = true, is_top = true;
    for (int j = 0; j < n; ++j) {
      is_bot = is_bot && leq(i, j);
      is_top = is_top && leq(j, i);
    }
    if (is_bot) bot_ = i;
    if (is_top) top_ = i;
  }
  if (bot_ < 0 || top_ < 0) throw NotALattice("lattice is not bounded");
  distributive_ = true;
  for (int a = 0; a < n && distributive_; ++a)
    for (int b = 0; b < n && distributive_; ++b)
      for (int c = 0; c < n && distributive_; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) distributive_ = false;
  imp_.assign(n * n, -1);
  coimp_.assign(n * n, -1);
  if (distributive_) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int best = bot_, least = top_;
        for (int z = 0; z < n; ++z) {
          if (leq(meet(a, z), b)) best = join(best, z);
          if (leq(a, join(b, z))) least = meet(least, z);
        }
        imp_[a * n + b] = best;
        coimp_[a * n + b] = least;
      }
  }
  ji_.clear();
  mi_.clear();
  std::vector<int> lower(n, 0), upper(n, 0);
  for (auto [lo, hi] : covers()) {
    ++lower[hi];
    ++upper[lo];
  }
  for (int i = 0; i < n; ++i) {
    if (lower[i] == 1) ji_.push_back(i);
    if (upper[i] == 1) mi_.push_back(i);
  }
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

bool FiniteLattice::is_chain() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (!leq(a, b) && !leq(b, a)) return false;
  return true;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int r = bot_;
  for (int x : xs) r = join(r, x);
  return r;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet(r, x);
  return r;
}

FiniteLattice FiniteLattice::chain(int n) {
  if (n < 1) throw NotALattice("chain needs at least one element");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? "bot" : i == n - 1 ? "top" : (n == 3 ? "m" : "m" + std::to_string(i)));
  std::vector<std::pair<int, int>> leq;
  for (int i = 0; i + 1 < n; ++i) leq.emplace_back(i, i + 1);
  return from_order(names, leq);
}

FiniteLattice FiniteLattice::diamond() {
  return from_order({"bot", "x", "y", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

FiniteLattice FiniteLattice::m3() {
  return from_order({"bot", "a", "b", "c", "top"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice FiniteLattice::n5() {
  return from_order({"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

FiniteLattice FiniteLattice::product(const FiniteLattice& a, const FiniteLattice& b) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> leq;
  const int na = a.size(), nb = b.size();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l)
          if (a.leq(i, k) && b.leq(j, l)) leq.emplace_back(i * nb + j, k * nb + l);
  return from_order(names, leq);
}

FiniteLattice FiniteLattice::with_new_top(const FiniteLattice& a, const std::string& top_name) {
  std::vector<std::string> names = a.names();
  names.push_back(top_name);
  std::vector<std::pair<int, int>> leq;
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (a.leq(i, j)) leq.emplace_back(i, j);
    leq.emplace_back(i, n);
  }
  return from_order(names, leq);
}

}  // namespace lrc
