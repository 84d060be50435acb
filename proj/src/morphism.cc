#include "curveaut/morphism.hpp"

#include "curveaut/errors.hpp"
#include "curveaut/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace curveaut {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Order and conjugacy-class size; an automorphism or isomorphism preserves both.
std::pair<unsigned, std::size_t> local_type(const FiniteGroup &G, Elem x) {
  return {G.element_order(x), G.classes()[G.class_of(x)].members.size()};
}

std::vector<std::vector<Elem>> candidates_for(const FiniteGroup &G, std::span<const Elem> gens,
                                              const FiniteGroup &T) {
  std::map<std::pair<unsigned, std::size_t>, std::vector<Elem>> by_type;
  for (std::size_t y = 0; y < T.order(); ++y)
    by_type[local_type(T, static_cast<Elem>(y))].push_back(static_cast<Elem>(y));
  std::vector<std::vector<Elem>> out;
  for (Elem g : gens) {
    auto it = by_type.find(local_type(G, g));
    out.push_back(it == by_type.end() ? std::vector<Elem>{} : it->second);
  }
  return out;
}

std::size_t candidate_count(const FiniteGroup &G, Elem x) {
  std::size_t n = 0;
  auto t = local_type(G, x);
  for (const auto &c : G.classes())
    if (c.element_order == t.first && c.members.size() == t.second)
      n += c.members.size();
  return n;
}

// Backtracking over image tuples. `visit` returns false to stop.
template <class Visit>
void search_images(const FiniteGroup &G, std::span<const Elem> gens, const FiniteGroup &T,
                   Visit &&visit) {
  auto cands = candidates_for(G, gens, T);
  const std::size_t k = gens.size();
  std::vector<Elem> img(k);
  bool stop = false;

  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      if (G.element_order(G.mul(gens[i], gens[depth])) !=
          T.element_order(T.mul(img[i], img[depth])))
        return false;
      if (G.element_order(G.mul(G.inv(gens[i]), gens[depth])) !=
          T.element_order(T.mul(T.inv(img[i]), img[depth])))
        return false;
    }
    return true;
  };

  auto rec = [&](auto &self, std::size_t depth) -> void {
    if (stop)
      return;
    if (depth == k) {
      if (!visit(std::span<const Elem>(img)))
        stop = true;
      return;
    }
    for (Elem y : cands[depth]) {
      img[depth] = y;
      if (consistent(depth))
        self(self, depth + 1);
      if (stop)
        return;
    }
  };
  rec(rec, 0);
}

bool same_invariants(const FiniteGroup &G, const FiniteGroup &H) {
  if (G.order() != H.order() || G.classes().size() != H.classes().size())
    return false;
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    if (G.classes()[c].element_order != H.classes()[c].element_order ||
        G.classes()[c].members.size() != H.classes()[c].members.size())
      return false;
  return true;
}

} // namespace

Automorphism Automorphism::compose(const Automorphism &then, const FiniteGroup &G) const {
  Automorphism out;
  out.map.resize(map.size());
  for (std::size_t x = 0; x < map.size(); ++x)
    out.map[x] = then.map[map[x]];
  for (Elem g : G.generators())
    out.generator_images.push_back(out.map[g]);
  return out;
}

Automorphism Automorphism::inverse(const FiniteGroup &G) const {
  Automorphism out;
  out.map.resize(map.size());
  for (std::size_t x = 0; x < map.size(); ++x)
    out.map[map[x]] = static_cast<Elem>(x);
  for (Elem g : G.generators())
    out.generator_images.push_back(out.map[g]);
  return out;
}

Automorphism Automorphism::identity(const FiniteGroup &G) {
  Automorphism out;
  out.map.resize(G.order());
  for (std::size_t x = 0; x < G.order(); ++x)
    out.map[x] = static_cast<Elem>(x);
  out.generator_images.assign(G.generators().begin(), G.generators().end());
  return out;
}

Automorphism Automorphism::inner(const FiniteGroup &G, Elem by) {
  Automorphism out;
  out.map.resize(G.order());
  for (std::size_t x = 0; x < G.order(); ++x)
    out.map[x] = G.conj(static_cast<Elem>(x), by);
  for (Elem g : G.generators())
    out.generator_images.push_back(out.map[g]);
  return out;
}

std::optional<GroupMap> extend_homomorphism(const FiniteGroup &source, std::span<const Elem> gens,
                                            const FiniteGroup &target,
                                            std::span<const Elem> images) {
  if (gens.size() != images.size())
    throw std::invalid_argument("generator and image lists differ in length");
  std::vector<Elem> phi(source.order(), kUnset);
  std::vector<Elem> queue{source.identity()};
  phi[source.identity()] = target.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = source.mul(x, gens[i]);
      if (phi[y] == kUnset) {
        phi[y] = target.mul(phi[x], images[i]);
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != source.order())
    throw GeneratorsDoNotGenerate("elements generate a subgroup of order " +
                                  std::to_string(queue.size()) + " in a group of order " +
                                  std::to_string(source.order()));
  for (std::size_t x = 0; x < source.order(); ++x)
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (phi[source.mul(static_cast<Elem>(x), gens[i])] != target.mul(phi[x], images[i]))
        return std::nullopt;

  GroupMap out;
  out.map = std::move(phi);
  for (Elem g : source.generators())
    out.generator_images.push_back(out.map[g]);
  return out;
}

std::optional<Automorphism> extend_to_automorphism(const FiniteGroup &G, std::span<const Elem> gens,
                                                   std::span<const Elem> images) {
  auto hom = extend_homomorphism(G, gens, G, images);
  if (!hom)
    return std::nullopt;
  std::vector<bool> hit(G.order(), false);
  for (Elem y : hom->map) {
    if (hit[y])
      return std::nullopt;
    hit[y] = true;
  }
  Automorphism a;
  static_cast<GroupMap &>(a) = std::move(*hom);
  return a;
}

std::vector<Elem> search_generators(const FiniteGroup &G) {
  if (G.order() == 1)
    return {};
  std::vector<std::size_t> cost(G.order());
  for (std::size_t x = 0; x < G.order(); ++x)
    cost[x] = candidate_count(G, static_cast<Elem>(x));

  // Best generating pair, first elements restricted to class representatives.
  std::optional<std::pair<Elem, Elem>> best;
  std::size_t best_cost = 0;
  for (const auto &cls : G.classes()) {
    Elem a = cls.representative;
    if (a == G.identity())
      continue;
    if (G.closure(std::span<const Elem>(&a, 1)).count() == G.order())
      return {a};
    for (std::size_t b = 1; b < G.order(); ++b) {
      std::size_t c = cost[a] * cost[b];
      if (best && c >= best_cost)
        continue;
      Elem pair[2] = {a, static_cast<Elem>(b)};
      if (G.generates(pair)) {
        best = {a, static_cast<Elem>(b)};
        best_cost = c;
      }
    }
  }
  if (best)
    return {best->first, best->second};

  // Greedy: repeatedly adjoin the cheapest element that enlarges the closure.
  std::vector<Elem> gens;
  ElementSet closure = G.closure(gens);
  while (closure.count() < G.order()) {
    std::optional<Elem> pick;
    for (std::size_t x = 1; x < G.order(); ++x) {
      if (closure.contains(static_cast<Elem>(x)))
        continue;
      if (!pick || cost[x] < cost[*pick])
        pick = static_cast<Elem>(x);
    }
    gens.push_back(*pick);
    closure = G.closure(gens);
  }
  // Drop redundant generators.
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Elem> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (G.generates(rest))
      gens = std::move(rest);
  }
  return gens;
}

std::vector<Automorphism> automorphism_group(const FiniteGroup &G, std::size_t aut_cap,
                                             std::size_t count_cap) {
  if (G.order() > aut_cap)
    throw CapExceeded("automorphism group of a group of order " + std::to_string(G.order()) +
                      " exceeds aut cap " + std::to_string(aut_cap));
  if (G.order() == 1)
    return {Automorphism::identity(G)};
  std::vector<Elem> gens = search_generators(G);
  std::vector<Automorphism> out;
  search_images(G, gens, G, [&](std::span<const Elem> images) {
    if (!G.generates(images))
      return true;
    if (auto a = extend_to_automorphism(G, gens, images)) {
      if (out.size() >= count_cap)
        throw CapExceeded("more than " + std::to_string(count_cap) + " automorphisms");
      out.push_back(std::move(*a));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Automorphism> automorphism_generators(const FiniteGroup &G,
                                                  const std::vector<Automorphism> &all) {
  std::vector<Automorphism> gens;
  std::set<std::vector<Elem>> closure{Automorphism::identity(G).map};
  for (const auto &a : all) {
    if (closure.contains(a.map))
      continue;
    gens.push_back(a);
    std::vector<Automorphism> queue;
    for (const auto &m : closure) {
      Automorphism x;
      x.map = m;
      queue.push_back(std::move(x));
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto &g : gens) {
        Automorphism y = queue[head].compose(g, G);
        if (closure.insert(y.map).second)
          queue.push_back(std::move(y));
      }
    }
  }
  return gens;
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup &G, const FiniteGroup &H) {
  if (!same_invariants(G, H))
    return std::nullopt;
  if (G.order() == 1) {
    GroupMap m;
    m.map = {H.identity()};
    for (std::size_t i = 0; i < G.generators().size(); ++i)
      m.generator_images.push_back(H.identity());
    return m;
  }
  if (G.is_abelian() != H.is_abelian())
    return std::nullopt;
  std::vector<Elem> gens = search_generators(G);
  std::optional<GroupMap> found;
  search_images(G, gens, H, [&](std::span<const Elem> images) {
    if (!H.generates(images))
      return true;
    auto m = extend_homomorphism(G, gens, H, images);
    if (!m)
      return true;
    found = std::move(m);
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup &G, const FiniteGroup &H) {
  return find_isomorphism(G, H).has_value();
}

std::vector<ClassId> class_action(const FiniteGroup &G, const GroupMap &a) {
  std::vector<ClassId> out;
  for (const auto &c : G.classes())
    out.push_back(G.class_of(a(c.representative)));
  return out;
}

} // namespace curveaut
