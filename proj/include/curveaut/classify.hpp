#pragma once

#include "curveaut/braid.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/config.hpp"
#include "curveaut/fullness.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace curveaut {

/// Seeds plus one representative of every isomorphism type of nontrivial
/// subgroup, each labelled by its catalog ID when the catalog knows it.
/// Subgroups of order at most `min_order` are skipped.
std::vector<UniverseGroup> close_group_universe(const std::vector<UniverseGroup> &seeds,
                                                const Catalog *catalog, const Caps &caps = {},
                                                std::size_t min_order = 1);

/// "(n,m)" when the catalog identifies the group, otherwise a fingerprint.
std::string group_label(const FiniteGroup &G, const Catalog *catalog);

/// "2A" style labels: element order, then a letter by position among the
/// classes of that order.
std::string class_label(const FiniteGroup &G, ClassId c);
std::string type_label(const RamificationType &type);

/// Orbit genus 0 after restricting to some central subgroup of order 2.
bool is_hyperelliptic_type(const RamificationType &type);

struct LocusRecord {
  int genus = 0;
  UniverseGroup group;
  RamificationType type;
  Signature signature;
  int delta = 0;
  FullnessVerdict verdict;
  bool hyperelliptic = false;
  bool large = false;
  /// Braid orbits of this type modulo Aut(G); nullopt when unresolved or
  /// when the orbit genus is positive.
  std::optional<std::size_t> type_components;
  /// Components of the locus for (group, signature): the sum over the
  /// records sharing both.
  std::optional<std::size_t> components;
  std::string unresolved; // reason, empty when resolved
  std::size_t row = 0;    // 1-based within the genus
  std::vector<std::size_t> contains;                 // class level
  std::vector<std::size_t> contains_signature_level; // signature level
};

struct ClassifyOptions {
  bool large_only = false;
  Caps caps;
  Symmetry symmetry = Symmetry::FullAut;
  bool inclusions = true;
  /// The seeds include every group acting in this genus (within the order
  /// range), so the closure does too.
  bool closed_universe = false;
};

struct Classification {
  int genus = 0;
  std::vector<UniverseGroup> universe;
  /// All realizable (group, signature) pairs over the universe, plus the
  /// trivial group with orbit genus g unless large_only.
  std::vector<std::pair<UniverseGroup, Signature>> pairs;
  /// Records for every type whose verdict is not NotFull, sorted by
  /// (delta, order descending, signature, label, classes).
  std::vector<LocusRecord> records;
  std::size_t types_examined = 0;
};

/// Runs the pipeline for one genus over the subgroup closure of the seeds.
/// With large_only only groups of order above 4(g-1) are considered.
Classification classify_genus(const std::vector<UniverseGroup> &seeds, int genus,
                              const Catalog *catalog, const ClassifyOptions &options = {});

/// Genus 3 over the bundled genus-3 seed catalog, as a closed universe.
Classification genus3_table(const Catalog &seeds, const Catalog *labels,
                            const ClassifyOptions &options = {});

/// Large groups for 2 <= g <= 10 over the catalog groups of large order,
/// taken as a closed universe.
Classification large_group_table(const Catalog &catalog, int genus, const ClassifyOptions &options = {});

/// Fills the contains lists: a dimension-1 record contains a dimension-0
/// record when the larger group restricts to it.
void compute_inclusions(std::vector<LocusRecord> &records, const Caps &caps = {});

/// Tab-separated rows: genus, groupId, signature, delta, components,
/// contains, hyperelliptic, verdict, classes. Comment lines start with '#'.
void write_tsv(std::ostream &out, const std::vector<LocusRecord> &records,
               const std::vector<std::string> &footer = {});
/// Digraph of the contains relation, dimension-0 nodes boxed.
void write_dot(std::ostream &out, const std::vector<LocusRecord> &records);

} // namespace curveaut
