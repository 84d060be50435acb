#pragma once

#include "curveaut/group.hpp"
#include "curveaut/morphism.hpp"

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curveaut {

using Rational = boost::rational<long long>;

/// Orbit genus and ascending periods.
struct Signature {
  int g0 = 0;
  std::vector<int> periods;

  int r() const { return static_cast<int>(periods.size()); }
  /// Sorts periods; checks each period >= 2 and r >= 3 when g0 = 0, r >= 1
  /// when g0 = 1. Throws std::invalid_argument.
  static Signature make(int g0, std::vector<int> periods);
  bool valid() const;
  /// "(2,3,7)" for g0 = 0, "g0=1;(2,2,2,2)" otherwise.
  std::string to_string() const;
  std::string periods_string() const; // "2,3,7"

  friend bool operator==(const Signature &, const Signature &) = default;
  friend auto operator<=>(const Signature &, const Signature &) = default;
};

/// 2(g-1)/|G| = 2(g0-1) + sum(1 - 1/c_i), solved exactly for g.
std::optional<int> rh_genus(std::size_t order, const Signature &sig);
/// The same equation solved for g0.
std::optional<int> orbit_genus_of(int g, std::size_t order, const std::vector<int> &periods);
/// 3 g0 - 3 + r.
int delta(const Signature &sig);

/// Every valid signature with periods dividing `order` (and occurring as
/// element orders of G when given) and at most 4g+2, for which the equation
/// gives genus g. Sorted.
std::vector<Signature> enumerate_admissible_signatures(int g, std::size_t order,
                                                       const FiniteGroup *G = nullptr);

/// A type: genus, group and an unordered tuple of nontrivial classes,
/// stored sorted.
struct RamificationType {
  int genus = 0;
  GroupPtr group;
  int g0 = 0;
  std::vector<ClassId> classes;

  Signature signature() const;
  friend bool operator==(const RamificationType &a, const RamificationType &b) {
    return a.group == b.group && a.genus == b.genus && a.g0 == b.g0 && a.classes == b.classes;
  }
};

/// Builds a type, computing g0 from the class orders. Throws
/// std::invalid_argument if the genus equation has no admissible solution.
RamificationType make_type(GroupPtr G, int genus, std::vector<ClassId> classes);

struct GeneratingSystem {
  std::vector<Elem> alpha, beta; // g0 hyperbolic pairs
  std::vector<Elem> gamma;       // r elliptic elements

  int g0() const { return static_cast<int>(alpha.size()); }
  std::vector<Elem> all() const;
  friend bool operator==(const GeneratingSystem &, const GeneratingSystem &) = default;
  friend auto operator<=>(const GeneratingSystem &, const GeneratingSystem &) = default;
};

/// prod [alpha_j, beta_j] * prod gamma_i.
Elem relation_product(const FiniteGroup &G, const GeneratingSystem &s);
/// Product relation holds, all gamma nontrivial, and the elements generate.
bool is_generating_system(const FiniteGroup &G, const GeneratingSystem &s);
Signature signature_of(const FiniteGroup &G, const GeneratingSystem &s);
/// Sorted class multiset of the gamma entries.
std::vector<ClassId> classes_of(const FiniteGroup &G, const GeneratingSystem &s);

struct SearchOptions {
  std::size_t limit = 0;            // 0 = no limit
  bool fix_first = false;           // first searched element only up to conjugacy
  std::uint64_t node_budget = 100'000'000;
};

/// Systems whose gamma entries lie in the given classes (one per entry) and
/// with g0 hyperbolic pairs. Backtracks over the classes in ascending size
/// order, solving the last gamma from the relation; the output gammas follow
/// that order. Results are sorted. Throws CapExceeded past the node budget.
std::vector<GeneratingSystem> find_generating_systems(const FiniteGroup &G, int g0,
                                                      const std::vector<ClassId> &classes,
                                                      const SearchOptions &options = {});
std::vector<GeneratingSystem> find_generating_systems(const RamificationType &type,
                                                      const SearchOptions &options = {});
/// Searches every class tuple matching the signature's periods.
std::vector<GeneratingSystem> find_generating_systems(const FiniteGroup &G, const Signature &sig,
                                                      const SearchOptions &options = {});

/// Sorted class multisets (nontrivial classes) whose element orders are the
/// given periods.
std::vector<std::vector<ClassId>> class_multisets(const FiniteGroup &G,
                                                  const std::vector<int> &periods);

/// Least image of a sorted class multiset under the given class permutations.
std::vector<ClassId> canonical_classes(const std::vector<ClassId> &classes,
                                       const std::vector<std::vector<ClassId>> &actions);

/// Class permutations induced by all automorphisms of G.
std::vector<std::vector<ClassId>> automorphism_class_actions(const FiniteGroup &G,
                                                             const std::vector<Automorphism> &auts);

/// Types of the signature that admit a generating system, one per orbit of
/// Aut(G) (given by its class actions). Sorted by class multiset.
std::vector<RamificationType> realizable_types(GroupPtr G, int genus, const Signature &sig,
                                               const std::vector<std::vector<ClassId>> &actions,
                                               const SearchOptions &options = {});

struct GroupSignaturePair {
  std::size_t group_index; // into the input list
  Signature signature;
};

/// All (group, signature) pairs of genus g with a generating system.
std::vector<GroupSignaturePair> signature_group_pairs(const std::vector<GroupPtr> &groups, int g,
                                                      const SearchOptions &options = {});

} // namespace curveaut
