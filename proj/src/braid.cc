#include "curveaut/braid.hpp"

#include "curveaut/errors.hpp"
#include "curveaut/morphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace curveaut {

namespace {

struct TupleHash {
  std::size_t operator()(const NielsenTuple &t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : t)
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

} // namespace

NielsenTuple braid_move(const FiniteGroup &G, const NielsenTuple &t, std::size_t i,
                        BraidDirection direction) {
  if (i + 1 >= t.size())
    throw std::out_of_range("braid position out of range");
  NielsenTuple out = t;
  const Elem x = t[i], y = t[i + 1];
  if (direction == BraidDirection::Forward) {
    out[i] = G.mul(G.mul(x, y), G.inv(x));
    out[i + 1] = x;
  } else {
    out[i] = y;
    out[i + 1] = G.conj(x, y);
  }
  return out;
}

SymmetryGroup::SymmetryGroup(const FiniteGroup &G, Symmetry kind, std::size_t aut_cap)
    : kind_(kind) {
  std::set<std::vector<Elem>> maps;
  if (kind == Symmetry::Inner) {
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::vector<Elem> m(G.order());
      for (std::size_t x = 0; x < G.order(); ++x)
        m[x] = G.conj(static_cast<Elem>(x), static_cast<Elem>(g));
      maps.insert(std::move(m));
    }
  } else {
    for (auto &a : automorphism_group(G, aut_cap))
      maps.insert(std::move(a.map));
  }
  maps_.assign(maps.begin(), maps.end());
}

std::vector<std::vector<ClassId>> SymmetryGroup::class_actions(const FiniteGroup &G) const {
  std::set<std::vector<ClassId>> out;
  for (const auto &m : maps_) {
    std::vector<ClassId> act(G.classes().size());
    for (ClassId c = 0; c < act.size(); ++c)
      act[c] = G.class_of(m[G.classes()[c].representative]);
    out.insert(std::move(act));
  }
  return {out.begin(), out.end()};
}

NielsenTuple SymmetryGroup::canonicalize(const NielsenTuple &t) const {
  // Narrow the candidate maps position by position to those reaching the
  // least image so far.
  std::vector<const std::vector<Elem> *> live;
  live.reserve(maps_.size());
  for (const auto &m : maps_)
    live.push_back(&m);
  NielsenTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Elem best = static_cast<Elem>(-1);
    for (const auto *m : live)
      best = std::min(best, (*m)[t[i]]);
    out[i] = best;
    std::erase_if(live, [&](const std::vector<Elem> *m) { return (*m)[t[i]] != best; });
    if (live.size() == 1) {
      for (std::size_t j = i + 1; j < t.size(); ++j)
        out[j] = (*live.front())[t[j]];
      break;
    }
  }
  return out;
}

std::vector<BraidOrbit> braid_orbits(const FiniteGroup &G, const std::vector<ClassId> &classes,
                                     const BraidOptions &options) {
  return braid_orbits(G, classes, SymmetryGroup(G, options.symmetry, options.aut_cap), options);
}

std::vector<BraidOrbit> braid_orbits(const FiniteGroup &G, const std::vector<ClassId> &classes,
                                     const SymmetryGroup &symmetry, const BraidOptions &options) {
  // Braids permute the positions transitively, so every orbit meets the
  // arrangement the search uses; conjugation fixes its first entry.
  SearchOptions search;
  search.fix_first = true;
  search.node_budget = options.node_budget;
  const auto seeds = find_generating_systems(G, 0, classes, search);

  std::unordered_set<NielsenTuple, TupleHash> seen;
  std::vector<BraidOrbit> orbits;
  for (const auto &seed : seeds) {
    NielsenTuple start = symmetry.canonicalize(seed.gamma);
    if (seen.count(start))
      continue;
    BraidOrbit orbit{start, 0};
    std::deque<NielsenTuple> frontier{start};
    seen.insert(start);
    while (!frontier.empty()) {
      NielsenTuple t = std::move(frontier.front());
      frontier.pop_front();
      ++orbit.size;
      orbit.representative = std::min(orbit.representative, t);
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        NielsenTuple next = symmetry.canonicalize(braid_move(G, t, i));
        if (seen.insert(next).second) {
          if (seen.size() > options.tuple_budget)
            throw CapExceeded("braid orbit enumeration exceeded tuple budget of " +
                              std::to_string(options.tuple_budget));
          frontier.push_back(std::move(next));
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const BraidOrbit &a, const BraidOrbit &b) { return a.representative < b.representative; });
  return orbits;
}

std::vector<BraidOrbit> braid_orbits_for_signature(const FiniteGroup &G, const Signature &sig,
                                                   const BraidOptions &options) {
  if (sig.g0 != 0)
    throw UnsupportedParams("braid orbits need orbit genus 0");
  SymmetryGroup symmetry(G, options.symmetry, options.aut_cap);
  const auto actions = symmetry.class_actions(G);
  std::set<std::vector<ClassId>> done;
  std::vector<BraidOrbit> out;
  for (const auto &classes : class_multisets(G, sig.periods)) {
    if (!done.insert(canonical_classes(classes, actions)).second)
      continue;
    auto part = braid_orbits(G, classes, symmetry, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(),
            [](const BraidOrbit &a, const BraidOrbit &b) { return a.representative < b.representative; });
  return out;
}

} // namespace curveaut
