#pragma once

// Randomized invariant checks shared by the property suite and the
// acceptance runner. Each returns how many cases were checked and the
// first failure, if any.

#include "curveaut/braid.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/constructors.hpp"
#include "curveaut/fullness.hpp"
#include "curveaut/restriction.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace properties {

using namespace curveaut;

struct Result {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void fail(const std::string &what) {
    if (failures++ == 0)
      first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

inline std::vector<GroupPtr> catalog_groups(const Catalog &catalog, std::size_t max_order) {
  std::vector<GroupPtr> out;
  for (const auto &e : catalog.entries())
    if (e.group->order() <= max_order)
      out.push_back(e.group);
  return out;
}

/// Random genus-g systems (2 <= g <= 10) over catalog groups, diversified by
/// random automorphisms and conjugation.
inline std::vector<std::pair<GroupPtr, GeneratingSystem>>
random_systems(const Catalog &catalog, std::size_t count, std::mt19937_64 &rng, std::size_t max_order = 200) {
  struct Source {
    GroupPtr G;
    std::vector<GeneratingSystem> systems;
    std::vector<Automorphism> auts;
  };
  std::vector<Source> sources;
  for (const auto &G : catalog_groups(catalog, max_order))
    for (int g = 2; g <= 10; ++g)
      for (const auto &sig : enumerate_admissible_signatures(g, G->order(), G.get())) {
        if (sig.r() > 6)
          continue;
        auto found = find_generating_systems(*G, sig, {.limit = 8, .node_budget = 200'000});
        if (!found.empty())
          sources.push_back({G, std::move(found), {}});
      }
  std::vector<std::pair<GroupPtr, GeneratingSystem>> out;
  while (out.size() < count && !sources.empty()) {
    auto &src = sources[rng() % sources.size()];
    const FiniteGroup &G = *src.G;
    if (src.auts.empty())
      src.auts = automorphism_group(G);
    GeneratingSystem s = src.systems[rng() % src.systems.size()];
    const auto &a = src.auts[rng() % src.auts.size()];
    const Elem by = static_cast<Elem>(rng() % G.order());
    auto image = [&](Elem x) { return G.conj(a.map[x], by); };
    for (auto *part : {&s.alpha, &s.beta, &s.gamma})
      for (auto &x : *part)
        x = image(x);
    out.emplace_back(src.G, std::move(s));
  }
  return out;
}

/// Product relation, generation, nontrivial gammas and the genus equation.
inline Result check_generating_systems(const Catalog &catalog, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result res;
  for (const auto &[G, s] : random_systems(catalog, count, rng)) {
    ++res.checked;
    const auto sig = signature_of(*G, s);
    const bool relation = relation_product(*G, s) == G->identity();
    std::vector<Elem> all = s.all();
    const bool gen = G->generates(all);
    const bool nontrivial = std::none_of(s.gamma.begin(), s.gamma.end(), [&](Elem x) { return x == G->identity(); });
    const auto g = rh_genus(G->order(), Signature::make(sig.g0, sig.periods));
    if (!relation || !gen || !nontrivial || !g || *g < 2 || !is_generating_system(*G, s))
      res.fail("order " + std::to_string(G->order()) + " " + sig.to_string());
  }
  return res;
}

/// Genus conservation under restriction and independence of the random
/// representative choices, over random (type, subgroup) pairs.
inline Result check_restrictions(const Catalog &catalog, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result res;
  auto systems = random_systems(catalog, 4 * count, rng, 168);
  for (const auto &[G, s] : systems) {
    if (res.checked >= count)
      break;
    auto classes = subgroup_classes(*G);
    const auto &H = classes[rng() % classes.size()].representative;
    auto type = make_type(G, *rh_genus(G->order(), signature_of(*G, s)), classes_of(*G, s));
    ++res.checked;
    try {
      auto base = restrict_type(type, H);
      const auto g = rh_genus(H.order(), base.induced_signature);
      if (!g || *g != type.genus) {
        res.fail("genus not conserved for order " + std::to_string(G->order()) + " into " +
                 std::to_string(H.order()));
        continue;
      }
      auto again = restrict_type(type, H, {&rng});
      auto conj = restrict_type(type, conjugate(*G, H, static_cast<Elem>(rng() % G->order())), {&rng});
      if (again.induced_signature != base.induced_signature || again.induced.classes != base.induced.classes ||
          conj.induced_signature != base.induced_signature)
        res.fail("choice dependence for order " + std::to_string(G->order()) + " into " +
                 std::to_string(H.order()));
    } catch (const std::exception &e) {
      res.fail(e.what());
    }
  }
  return res;
}

/// Random braid moves keep the product, generation and class multiset.
inline Result check_braid_moves(const Catalog &catalog, std::size_t moves, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result res;
  std::vector<std::pair<GroupPtr, NielsenTuple>> tuples;
  for (const auto &[G, s] : random_systems(catalog, 200, rng))
    if (s.g0() == 0)
      tuples.emplace_back(G, s.gamma);
  if (tuples.empty()) {
    res.fail("no genus-0 tuples");
    return res;
  }
  auto sorted_classes = [](const FiniteGroup &G, const NielsenTuple &t) {
    std::vector<ClassId> c;
    for (Elem x : t)
      c.push_back(G.class_of(x));
    std::sort(c.begin(), c.end());
    return c;
  };
  const std::size_t per = moves / tuples.size() + 1;
  for (auto &[G, t] : tuples) {
    const auto classes = sorted_classes(*G, t);
    for (std::size_t k = 0; k < per && res.checked < moves; ++k) {
      const std::size_t i = rng() % (t.size() - 1);
      t = braid_move(*G, t, i, rng() % 2 ? BraidDirection::Forward : BraidDirection::Inverse);
      ++res.checked;
      Elem p = G->identity();
      for (Elem x : t)
        p = G->mul(p, x);
      if (p != G->identity() || !G->generates(t) || sorted_classes(*G, t) != classes)
        res.fail("move broke an invariant in order " + std::to_string(G->order()));
    }
  }
  return res;
}

/// a(xy) = a(x)a(y) and a composed with its inverse is the identity.
inline Result check_automorphisms(const Catalog &catalog, std::size_t groups, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Result res;
  auto pool = catalog_groups(catalog, 96);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min(groups, pool.size()));
  for (const auto &G : pool) {
    auto auts = automorphism_group(*G);
    for (int trial = 0; trial < 20; ++trial) {
      const auto &a = auts[rng() % auts.size()];
      std::vector<Elem> back(G->order());
      for (Elem x = 0; x < G->order(); ++x)
        back[a.map[x]] = x;
      for (int k = 0; k < 10; ++k) {
        const Elem x = static_cast<Elem>(rng() % G->order()), y = static_cast<Elem>(rng() % G->order());
        ++res.checked;
        if (a.map[G->mul(x, y)] != G->mul(a.map[x], a.map[y]) || back[a.map[x]] != x || a.map[back[x]] != x)
          res.fail("automorphism check failed in order " + std::to_string(G->order()));
      }
    }
  }
  return res;
}

/// Every abelian group of order at most max_order, as a product of cyclic
/// groups by invariant factors.
inline std::vector<GroupPtr> abelian_groups(std::size_t max_order) {
  std::vector<GroupPtr> out;
  // invariant factor lists d1 | d2 | ... with product n
  std::vector<std::vector<std::size_t>> lists;
  auto extend = [&](auto &&self, std::vector<std::size_t> &acc, std::size_t remaining) -> void {
    if (remaining == 1) {
      if (!acc.empty())
        lists.push_back(acc);
      return;
    }
    for (std::size_t d = 2; d <= remaining; ++d) {
      if (remaining % d != 0)
        continue;
      // acc is built from the largest factor down; each new factor divides the previous
      if (!acc.empty() && acc.back() % d != 0)
        continue;
      acc.push_back(d);
      self(self, acc, remaining / d);
      acc.pop_back();
    }
  };
  for (std::size_t n = 2; n <= max_order; ++n) {
    std::vector<std::size_t> acc;
    extend(extend, acc, n);
  }
  for (const auto &l : lists) {
    GroupPtr G = cyclic_group(l.front());
    for (std::size_t i = 1; i < l.size(); ++i)
      G = direct_product(*G, *cyclic_group(l[i]));
    out.push_back(G);
  }
  return out;
}

/// Genus-1, two-point systems of abelian groups are never full: every one is
/// checked for groups of order up to `exhaustive_order`, a random sample of
/// `sample` systems beyond.
inline Result check_abelian_not_full(std::size_t max_order, std::size_t exhaustive_order, std::size_t sample,
                                     std::uint64_t seed, std::size_t *groups_seen = nullptr) {
  std::mt19937_64 rng(seed);
  Result res;
  auto groups = abelian_groups(max_order);
  if (groups_seen)
    *groups_seen = 0;
  for (const auto &G : groups) {
    const std::size_t n = G->order();
    std::size_t found = 0;
    auto test = [&](Elem a, Elem b, Elem c) {
      if (c == G->identity())
        return;
      GeneratingSystem s{{a}, {b}, {c, G->inv(c)}};
      if (!G->generates(std::vector<Elem>{a, b, c}))
        return;
      ++found;
      ++res.checked;
      if (is_full_nonexceptional(*G, s).verdict != Verdict::NotFull)
        res.fail("abelian order " + std::to_string(n) + " system is full");
    };
    if (n <= exhaustive_order) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem c = 1; c < n; ++c)
            test(a, b, c);
    } else {
      for (std::size_t k = 0; k < 50 * sample && found < sample; ++k)
        test(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n));
    }
    // groups needing more than three generators have no such system
    if (found > 0 && groups_seen)
      ++*groups_seen;
  }
  return res;
}

} // namespace properties
