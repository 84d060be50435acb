#pragma once

#include "curveaut/covers.hpp"
#include "curveaut/lattice.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace curveaut {

/// One double coset <gamma_i> sigma H of the restriction computation.
struct DoubleCosetEntry {
  std::size_t position; // index into the type's class list
  Elem gamma;
  Elem sigma;
  unsigned m;        // least m >= 1 with sigma^-1 gamma^m sigma in H
  Elem element;      // sigma^-1 gamma^m sigma, as a parent element
  bool trivial;
};

struct RestrictionResult {
  EmbeddedSubgroup subgroup;
  RamificationType induced; // over subgroup.group
  Signature induced_signature;
  std::vector<DoubleCosetEntry> log;
};

/// Optional randomization of the class and coset representatives; the
/// result must not depend on it.
struct RestrictionChoices {
  std::mt19937_64 *rng = nullptr;
};

/// Type of the H-action obtained by restricting a G-action of the given
/// type. Throws InternalContradiction if the induced data does not satisfy
/// the genus equation.
RestrictionResult restrict_type(const RamificationType &type, const Subgroup &H,
                                RestrictionChoices choices = {});
RestrictionResult restrict_type(const RamificationType &type, const EmbeddedSubgroup &H,
                                RestrictionChoices choices = {});

enum class ClauseTag { I, II, IIIa, IIIb, IIIc, IVa, IVb, IVc, IVd, IVe, IVf, IVg, IVh, IViIndeterminate };

std::string to_string(ClauseTag tag);

struct ClauseMatch {
  ClauseTag tag;
  std::size_t n;
  int h0;
  int s, r;
  std::vector<int> c, d;
};

/// The clause of the equal-dimension classification matched by (type, H),
/// or nullopt if restricting strictly raises the dimension. Throws
/// InternalContradiction when the dimensions agree but no clause fits and
/// the shape is not (r, s) = (3, 3).
std::optional<ClauseMatch> classify_equal_dim_pair(const RamificationType &type, const Subgroup &H);

/// True if the induced action of the type restricted to some subgroup of
/// big.group isomorphic to small.group has the same signature as small
/// (signature level) or the same class tuple modulo Aut(small) (class
/// level). `small_actions` are the class actions of Aut(small.group).
struct InclusionMatch {
  bool signature_level = false;
  bool class_level = false;
};
InclusionMatch restricts_to(const RamificationType &big, const RamificationType &small,
                            const std::vector<std::vector<ClassId>> &small_actions,
                            std::size_t lattice_cap = kDefaultLatticeCap);

} // namespace curveaut
