#pragma once

#include "curveaut/group.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace curveaut {

inline constexpr std::size_t kDefaultAutCap = 1024;
inline constexpr std::size_t kDefaultAutomorphismCountCap = 200000;

/// A homomorphism between two materialized groups, stored as a full element
/// map. The groups are not owned.
struct GroupMap {
  std::vector<Elem> generator_images; // images of source.generators()
  std::vector<Elem> map;              // source element -> target element

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const GroupMap &a, const GroupMap &b) { return a.map == b.map; }
  friend auto operator<=>(const GroupMap &a, const GroupMap &b) { return a.map <=> b.map; }
};

/// A bijective GroupMap of a group onto itself.
struct Automorphism : GroupMap {
  Automorphism compose(const Automorphism &then, const FiniteGroup &G) const;
  Automorphism inverse(const FiniteGroup &G) const;
  static Automorphism identity(const FiniteGroup &G);
  static Automorphism inner(const FiniteGroup &G, Elem by); // x -> x^by
};

/// Extends gens[i] -> images[i] to a homomorphism source -> target. The map
/// is defined on a breadth-first tree over `gens` and accepted iff
/// phi(x * gens[i]) = phi(x) * images[i] for every x and i.
/// Throws GeneratorsDoNotGenerate when <gens> is not all of source.
std::optional<GroupMap> extend_homomorphism(const FiniteGroup &source, std::span<const Elem> gens,
                                            const FiniteGroup &target,
                                            std::span<const Elem> images);

/// As extend_homomorphism with source = target, additionally requiring
/// injectivity.
std::optional<Automorphism> extend_to_automorphism(const FiniteGroup &G, std::span<const Elem> gens,
                                                   std::span<const Elem> images);

/// A short generating tuple chosen so that the number of candidate image
/// tuples (elements of matching order and class size) is small.
std::vector<Elem> search_generators(const FiniteGroup &G);

/// All automorphisms, sorted by element map. Throws CapExceeded when |G| >
/// aut_cap or more than count_cap automorphisms exist.
std::vector<Automorphism> automorphism_group(const FiniteGroup &G,
                                             std::size_t aut_cap = kDefaultAutCap,
                                             std::size_t count_cap = kDefaultAutomorphismCountCap);

/// A generating subset of an automorphism list (greedy, in list order).
std::vector<Automorphism> automorphism_generators(const FiniteGroup &G,
                                                  const std::vector<Automorphism> &all);

/// An isomorphism G -> H if one exists. Cheap invariants are compared first.
std::optional<GroupMap> find_isomorphism(const FiniteGroup &G, const FiniteGroup &H);
bool is_isomorphic(const FiniteGroup &G, const FiniteGroup &H);

/// Class permutation induced by an automorphism: result[c] is the class of
/// the image of class c.
std::vector<ClassId> class_action(const FiniteGroup &G, const GroupMap &a);

} // namespace curveaut
