#pragma once

#include "curveaut/covers.hpp"
#include "curveaut/restriction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curveaut {

/// One letter of a word in the symbols of a generating system. Symbols are
/// numbered as in GeneratingSystem::all(): alpha_1, beta_1, ..., gamma_1, ...
struct Letter {
  std::size_t symbol;
  bool inverse = false;
};
using Word = std::vector<Letter>;

Word inverse(const Word &w);
/// x^y = y^-1 x y.
Word conjugate(const Word &x, const Word &y);
Elem evaluate(const FiniteGroup &G, const Word &w, const std::vector<Elem> &symbols);

enum class ActionKind { Genus2Unramified, Genus1TwoPoints, Genus1Inversion, Sigma1, Sigma2, Sigma3 };
std::string to_string(ActionKind kind);

/// A prescribed action on the symbols of a system: images[k] is the word the
/// k-th symbol must be sent to.
struct PrescribedAction {
  ActionKind kind;
  std::vector<Word> images;
};

bool is_exceptional_shape(int h0, int s);
/// (h0, s) in {(2,0), (1,2), (1,1), (0,4)}.
bool is_critical_shape(int h0, int s);
/// The actions an automorphism must not realize for the shape. Throws
/// ShapeNotCritical for other shapes.
std::vector<PrescribedAction> bad_actions_for(int h0, int s);

/// The automorphism of G acting on the system as prescribed, if any.
std::optional<Automorphism> realize_action(const FiniteGroup &G, const GeneratingSystem &sys,
                                           const PrescribedAction &action);

enum class Verdict { Full, NotFull, ExceptionalIndeterminate };
std::string to_string(Verdict v);

/// A group that may contain a given one, with a display label.
struct UniverseGroup {
  GroupPtr group;
  std::string label;
};

struct FullnessVerdict {
  Verdict verdict = Verdict::Full;
  std::optional<PrescribedAction> action;   // NotFull by a prescribed action
  std::optional<Automorphism> automorphism; // its realization
  std::optional<UniverseGroup> extension;   // NotFull by a larger group
  std::optional<RamificationType> extension_type;
  std::optional<ClauseTag> pattern;
  std::string notes;
};

/// Decides one system of shape other than (0,3): Full unless the shape is
/// critical and some bad action extends to an automorphism.
FullnessVerdict is_full_nonexceptional(const FiniteGroup &H, const GeneratingSystem &sys);

/// Possible maximal overgroups (index n, signature c) of a group of the
/// given order acting in genus g with three-point signature d, from the
/// equal-dimension clauses (a) to (h). Non-maximal overgroups contain one of
/// these, so an empty list means no overgroup exists.
struct ExtensionPattern {
  ClauseTag tag;
  std::size_t n;
  Signature c;
};
std::vector<ExtensionPattern> extension_patterns(int genus, std::size_t order, const Signature &d);

/// Decides a type with three branch points and orbit genus 0 against the
/// given candidate overgroups. Complete relative to the universe. A pattern
/// whose overgroup order has no candidate gives ExceptionalIndeterminate,
/// unless the universe is closed: it then holds every group acting in this
/// genus, so the order cannot occur.
FullnessVerdict decide_exceptional_fullness(const RamificationType &type,
                                            const std::vector<UniverseGroup> &universe,
                                            const SearchOptions &options = {},
                                            bool closed_universe = false);

/// Decides whether the type is realized by a curve whose full automorphism
/// group is the type's group.
FullnessVerdict decide_type_fullness(const RamificationType &type,
                                     const std::vector<UniverseGroup> &universe,
                                     const SearchOptions &options = {}, bool closed_universe = false);

} // namespace curveaut
