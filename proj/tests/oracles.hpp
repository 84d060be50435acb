#pragma once

// Brute-force reference computations that share no code with the library.
// Permutations are plain vectors; products apply the left factor first.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm &a, const Perm &b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[a[i]];
  return out;
}

inline Perm inv(const Perm &a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[a[i]] = static_cast<int>(i);
  return out;
}

inline Perm ident(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline std::set<Perm> closure(const std::vector<Perm> &gens) {
  std::set<Perm> seen{ident(gens.front().size())};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> now(seen.begin(), seen.end());
    for (const auto &x : now)
      for (const auto &g : gens)
        if (seen.insert(mul(x, g)).second)
          grew = true;
  }
  return seen;
}

inline int order(const Perm &p) {
  Perm x = p;
  int n = 1;
  while (x != ident(p.size())) {
    x = mul(x, p);
    ++n;
  }
  return n;
}

/// Sorted list of conjugacy class sizes.
inline std::vector<std::size_t> class_sizes(const std::set<Perm> &G) {
  std::set<Perm> done;
  std::vector<std::size_t> out;
  for (const auto &x : G) {
    if (done.contains(x))
      continue;
    std::set<Perm> cls;
    for (const auto &g : G)
      cls.insert(mul(mul(inv(g), x), g));
    done.insert(cls.begin(), cls.end());
    out.push_back(cls.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of subgroups, by closing every subset of size <= 3 generators.
/// Adequate for groups whose subgroups are all 3-generated.
inline std::size_t subgroup_count(const std::set<Perm> &G) {
  std::vector<Perm> el(G.begin(), G.end());
  std::set<std::set<Perm>> subs;
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a; b < el.size(); ++b)
      for (std::size_t c = b; c < el.size(); ++c)
        subs.insert(closure({el[a], el[b], el[c]}));
  return subs.size();
}

/// Number of automorphisms by checking all bijections of the element list.
/// Only for very small groups.
inline std::size_t automorphism_count(const std::set<Perm> &G) {
  std::vector<Perm> el(G.begin(), G.end());
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < el.size(); ++i)
    index[el[i]] = i;
  const std::size_t n = el.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = index[mul(el[i], el[j])];
  std::vector<std::size_t> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = phi[table[i][j]] == table[phi[i]][phi[j]];
    count += ok;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return count;
}

/// Exact genus from Riemann-Hurwitz with integer arithmetic, or -1.
/// 2(g-1) = |G| (2(g0-1) + sum(1 - 1/c)), scaled by lcm of the periods.
inline long long rh_genus(long long order, long long g0, const std::vector<long long> &c) {
  long long L = 1;
  for (long long x : c)
    L = std::lcm(L, x);
  long long num = 2 * (g0 - 1) * L;
  for (long long x : c)
    num += L - L / x;
  long long total = order * num; // = 2(g-1) * L
  if (total % (2 * L) != 0)
    return -1;
  long long g = total / (2 * L) + 1;
  return g >= 0 ? g : -1;
}

inline Perm comm(const Perm &a, const Perm &b) { return mul(mul(inv(a), inv(b)), mul(a, b)); }

/// Number of tuples (a_1, b_1, ..., a_g0, b_g0, c_1, ..., c_r) with c_i in
/// classes[i], prod [a_j, b_j] * prod c_i = 1, generating G.
inline std::size_t system_count(const std::set<Perm> &G, int g0,
                                const std::vector<std::set<Perm>> &classes) {
  const std::vector<Perm> el(G.begin(), G.end());
  std::vector<const std::vector<Perm> *> slots;
  std::vector<std::vector<Perm>> cls;
  for (const auto &c : classes)
    cls.emplace_back(c.begin(), c.end());
  for (int j = 0; j < 2 * g0; ++j)
    slots.push_back(&el);
  for (const auto &c : cls)
    slots.push_back(&c);
  std::vector<Perm> tuple(slots.size());
  std::size_t count = 0;
  auto rec = [&](auto &self, std::size_t i) -> void {
    if (i == slots.size()) {
      Perm p = ident(el.front().size());
      for (int j = 0; j < g0; ++j)
        p = mul(p, comm(tuple[2 * j], tuple[2 * j + 1]));
      for (std::size_t k = 2 * g0; k < tuple.size(); ++k)
        p = mul(p, tuple[k]);
      if (p == ident(p.size()) && closure(tuple).size() == G.size())
        ++count;
      return;
    }
    for (const auto &x : *slots[i]) {
      tuple[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

} // namespace oracle
