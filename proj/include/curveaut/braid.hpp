#pragma once

#include "curveaut/covers.hpp"

#include <cstdint>
#include <vector>

namespace curveaut {

/// An ordered tuple (gamma_1, ..., gamma_r) with product 1.
using NielsenTuple = std::vector<Elem>;

enum class BraidDirection { Forward, Inverse };

/// Artin generator Q_i on positions (i, i+1), 0-based:
/// forward (x, y) -> (x y x^-1, x), inverse (x, y) -> (y, y^-1 x y).
NielsenTuple braid_move(const FiniteGroup &G, const NielsenTuple &t, std::size_t i,
                        BraidDirection direction = BraidDirection::Forward);

enum class Symmetry { Inner, FullAut };

/// Element maps of Inn(G) or Aut(G), deduplicated.
class SymmetryGroup {
public:
  SymmetryGroup(const FiniteGroup &G, Symmetry kind, std::size_t aut_cap = kDefaultAutCap);

  Symmetry kind() const { return kind_; }
  std::size_t size() const { return maps_.size(); }
  const std::vector<std::vector<Elem>> &maps() const { return maps_; }
  /// Class permutations induced by the maps.
  std::vector<std::vector<ClassId>> class_actions(const FiniteGroup &G) const;

  /// Least image of the tuple under the group, compared lexicographically.
  NielsenTuple canonicalize(const NielsenTuple &t) const;

private:
  Symmetry kind_;
  std::vector<std::vector<Elem>> maps_;
};

struct BraidOrbit {
  NielsenTuple representative; // least canonical key in the orbit
  std::size_t size = 0;        // canonical keys; each stands for symmetry.size() tuples
};

struct BraidOptions {
  Symmetry symmetry = Symmetry::FullAut;
  std::uint64_t tuple_budget = 10'000'000;
  std::uint64_t node_budget = 100'000'000;
  std::size_t aut_cap = kDefaultAutCap;
};

/// Braid orbits, modulo the symmetry group, of the generating tuples whose
/// entries lie in the given classes (any arrangement). Sorted by
/// representative. Throws CapExceeded past the tuple budget.
std::vector<BraidOrbit> braid_orbits(const FiniteGroup &G, const std::vector<ClassId> &classes,
                                     const BraidOptions &options = {});
std::vector<BraidOrbit> braid_orbits(const FiniteGroup &G, const std::vector<ClassId> &classes,
                                     const SymmetryGroup &symmetry, const BraidOptions &options = {});

/// Orbits over every class multiset of the signature (g0 = 0), each class
/// multiset taken once up to the symmetry group.
std::vector<BraidOrbit> braid_orbits_for_signature(const FiniteGroup &G, const Signature &sig,
                                                   const BraidOptions &options = {});

} // namespace curveaut
