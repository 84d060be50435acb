#include "curveaut/lattice.hpp"

#include "curveaut/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace curveaut {

namespace {

Subgroup from_set(const FiniteGroup &G, ElementSet set, std::vector<Elem> generators) {
  Subgroup H;
  H.members = set.members();
  H.set = std::move(set);
  H.generators = std::move(generators);
  H.index = G.order() / H.members.size();
  return H;
}

// Normal closure of `elements` inside the subgroup generated by `ambient`.
ElementSet normal_closure_within(const FiniteGroup &G, std::span<const Elem> ambient,
                                 std::vector<Elem> &gens) {
  ElementSet set = G.closure(gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (Elem a : ambient) {
        Elem t = G.conj(gens[i], a);
        if (!set.contains(t)) {
          gens.push_back(t);
          set = G.closure(gens);
          grew = true;
        }
      }
    }
  }
  return set;
}

std::vector<Elem> commutators_of(const FiniteGroup &G, std::span<const Elem> gens) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Elem c = G.commutator(gens[i], gens[j]);
      if (c != G.identity() && std::find(out.begin(), out.end(), c) == out.end())
        out.push_back(c);
    }
  return out;
}

} // namespace

Subgroup make_subgroup(const FiniteGroup &G, std::vector<Elem> generators) {
  std::erase(generators, G.identity());
  ElementSet set = G.closure(generators);
  return from_set(G, std::move(set), std::move(generators));
}

Subgroup whole_group(const FiniteGroup &G) {
  return make_subgroup(G, std::vector<Elem>(G.generators().begin(), G.generators().end()));
}

Subgroup trivial_subgroup(const FiniteGroup &G) { return make_subgroup(G, {}); }

Subgroup normal_closure(const FiniteGroup &G, std::vector<Elem> elements) {
  std::erase(elements, G.identity());
  ElementSet set = normal_closure_within(G, G.generators(), elements);
  return from_set(G, std::move(set), std::move(elements));
}

Subgroup derived_subgroup(const FiniteGroup &G) {
  return normal_closure(G, commutators_of(G, G.generators()));
}

std::vector<std::size_t> derived_series_orders(const FiniteGroup &G) {
  std::vector<std::size_t> out{G.order()};
  std::vector<Elem> current(G.generators().begin(), G.generators().end());
  for (;;) {
    std::vector<Elem> next = commutators_of(G, current);
    ElementSet set = normal_closure_within(G, current, next);
    std::size_t n = set.count();
    if (n == out.back())
      break;
    out.push_back(n);
    if (n == 1)
      break;
    current = std::move(next);
  }
  return out;
}

bool is_normal(const FiniteGroup &G, const Subgroup &H) {
  for (Elem h : H.generators)
    for (Elem g : G.generators())
      if (!H.contains(G.conj(h, g)))
        return false;
  return true;
}

Subgroup conjugate(const FiniteGroup &G, const Subgroup &H, Elem by) {
  ElementSet set(G.order());
  for (Elem x : H.members)
    set.insert(G.conj(x, by));
  std::vector<Elem> gens;
  for (Elem x : H.generators)
    gens.push_back(G.conj(x, by));
  return from_set(G, std::move(set), std::move(gens));
}

std::size_t conjugacy_class_size(const FiniteGroup &G, const Subgroup &H) {
  std::size_t normalizer = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool keeps = true;
    for (Elem h : H.generators)
      if (!H.contains(G.conj(h, static_cast<Elem>(g)))) {
        keeps = false;
        break;
      }
    normalizer += keeps;
  }
  return G.order() / normalizer;
}

CosetAction coset_action(const FiniteGroup &G, const Subgroup &H) {
  CosetAction action;
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  action.coset_of.assign(G.order(), unassigned);
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (action.coset_of[x] != unassigned)
      continue;
    std::size_t c = action.representatives.size();
    action.representatives.push_back(static_cast<Elem>(x));
    for (Elem h : H.members)
      action.coset_of[G.mul(h, static_cast<Elem>(x))] = c;
  }
  for (Elem g : G.generators())
    action.generator_images.push_back(coset_image(G, action, g));
  return action;
}

Permutation coset_image(const FiniteGroup &G, const CosetAction &action, Elem x) {
  std::vector<Point> images(action.degree());
  for (std::size_t c = 0; c < action.degree(); ++c)
    images[c] = static_cast<Point>(action.coset_of[G.mul(action.representatives[c], x)]);
  return Permutation(std::move(images));
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &G, std::size_t cap) {
  if (G.order() > cap)
    throw CapExceeded("subgroup lattice of a group of order " + std::to_string(G.order()) +
                      " exceeds lattice cap " + std::to_string(cap));

  // One generator per cyclic subgroup; adjoining it is the same as adjoining
  // any of its conjugates' generators once we work up to conjugacy.
  std::vector<Elem> cyclic_generators;
  {
    std::unordered_set<ElementSet, ElementSetHash> cyclic;
    for (std::size_t x = 0; x < G.order(); ++x) {
      Elem e = static_cast<Elem>(x);
      if (cyclic.insert(G.closure(std::span<const Elem>(&e, 1))).second)
        cyclic_generators.push_back(e);
    }
  }

  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<SubgroupClass> reps;

  auto admit = [&](Subgroup T) {
    if (known.contains(T.set))
      return;
    std::vector<ElementSet> conjugates;
    Subgroup best = T;
    for (std::size_t g = 0; g < G.order(); ++g) {
      ElementSet c(G.order());
      for (Elem x : T.members)
        c.insert(G.conj(x, static_cast<Elem>(g)));
      if (known.insert(c).second) {
        Subgroup cand = conjugate(G, T, static_cast<Elem>(g));
        if (cand.members < best.members)
          best = std::move(cand);
        conjugates.push_back(std::move(c));
      }
    }
    reps.push_back({std::move(best), conjugates.size()});
  };

  for (Elem x : cyclic_generators)
    admit(make_subgroup(G, {x}));
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (Elem y : cyclic_generators) {
      if (reps[head].representative.contains(y))
        continue;
      std::vector<Elem> gens = reps[head].representative.generators;
      gens.push_back(y);
      ElementSet set = G.closure(gens);
      if (known.contains(set))
        continue;
      admit(from_set(G, std::move(set), std::move(gens)));
    }
  }

  std::sort(reps.begin(), reps.end(), [](const SubgroupClass &a, const SubgroupClass &b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.members < b.representative.members;
  });
  return reps;
}

std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, std::size_t cap) {
  std::vector<Subgroup> all;
  for (const auto &cls : subgroup_classes(G, cap)) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::size_t g = 0; g < G.order(); ++g) {
      Subgroup c = conjugate(G, cls.representative, static_cast<Elem>(g));
      if (seen.insert(c.set).second)
        all.push_back(std::move(c));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.members < b.members;
  });
  return all;
}

EmbeddedSubgroup embed(const FiniteGroup &G, const Subgroup &H) {
  std::vector<Permutation> gens;
  for (Elem x : H.generators)
    gens.push_back(G.element(x));
  if (gens.empty())
    gens.push_back(Permutation::identity(G.degree()));

  EmbeddedSubgroup E;
  E.group = make_group(gens, G.order());
  E.in_parent = H;
  E.to_parent.resize(E.group->order());
  E.from_parent.assign(G.order(), -1);
  for (std::size_t i = 0; i < E.group->order(); ++i) {
    Elem p = *G.index_of(E.group->element(static_cast<Elem>(i)));
    E.to_parent[i] = p;
    E.from_parent[p] = static_cast<int>(i);
  }
  return E;
}

} // namespace curveaut
