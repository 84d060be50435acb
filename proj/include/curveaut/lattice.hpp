#pragma once

#include "curveaut/group.hpp"

#include <cstddef>
#include <vector>

namespace curveaut {

inline constexpr std::size_t kDefaultLatticeCap = 512;

/// A subgroup of a parent group, held as a set of parent element indices.
/// The parent is not owned; every function taking a Subgroup also takes the
/// parent it was computed in.
struct Subgroup {
  ElementSet set;
  std::vector<Elem> members;    // sorted
  std::vector<Elem> generators; // small generating list
  std::size_t index = 1;        // [G : H]

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const { return set.contains(x); }

  friend bool operator==(const Subgroup &a, const Subgroup &b) { return a.set == b.set; }
};

Subgroup make_subgroup(const FiniteGroup &G, std::vector<Elem> generators);
Subgroup whole_group(const FiniteGroup &G);
Subgroup trivial_subgroup(const FiniteGroup &G);

/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FiniteGroup &G, std::vector<Elem> elements);
/// Normal closure of the commutators of all generator pairs.
Subgroup derived_subgroup(const FiniteGroup &G);
/// Orders of G, G', G'', ... down to the first repeat.
std::vector<std::size_t> derived_series_orders(const FiniteGroup &G);

bool is_normal(const FiniteGroup &G, const Subgroup &H);
Subgroup conjugate(const FiniteGroup &G, const Subgroup &H, Elem by);
/// Number of conjugates of H, i.e. [G : N_G(H)].
std::size_t conjugacy_class_size(const FiniteGroup &G, const Subgroup &H);

/// Action of G on the right cosets Hx. Point 0 is the coset H itself.
struct CosetAction {
  std::vector<Permutation> generator_images; // one per G generator
  std::vector<Elem> representatives;         // coset i = H * representatives[i]
  std::vector<std::size_t> coset_of;         // element -> coset index
  std::size_t degree() const { return representatives.size(); }
};

CosetAction coset_action(const FiniteGroup &G, const Subgroup &H);
/// Permutation induced by an arbitrary element on the cosets.
Permutation coset_image(const FiniteGroup &G, const CosetAction &action, Elem x);

/// All subgroups, closed from the cyclic subgroups by repeatedly adjoining
/// one element. Sorted by (order, member list). Throws CapExceeded when
/// |G| > cap.
std::vector<Subgroup> subgroup_lattice(const FiniteGroup &G, std::size_t cap = kDefaultLatticeCap);

struct SubgroupClass {
  Subgroup representative;
  std::size_t size; // number of conjugates
};

/// One representative per conjugacy class of subgroups, sorted by
/// (order, member list of the representative).
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &G, std::size_t cap = kDefaultLatticeCap);

/// A subgroup materialized as a group in its own right, with the maps
/// between its element indices and the parent's.
struct EmbeddedSubgroup {
  GroupPtr group;
  Subgroup in_parent;
  std::vector<Elem> to_parent;  // sub element -> parent element
  std::vector<int> from_parent; // parent element -> sub element or -1

  Elem lift(Elem sub) const { return to_parent[sub]; }
  Elem restrict_elem(Elem parent) const { return static_cast<Elem>(from_parent[parent]); }
};

EmbeddedSubgroup embed(const FiniteGroup &G, const Subgroup &H);

} // namespace curveaut
