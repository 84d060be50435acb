#pragma once

#include "curveaut/group.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curveaut {

/// Small Groups Library style identifier (order, index).
using GroupId = std::pair<std::size_t, std::size_t>;

std::string format_id(const GroupId &id); // "(n,m)"
/// Accepts "(n,m)", "n,m" or "n m". Returns nullopt on anything else.
std::optional<GroupId> parse_id(const std::string &text);

struct GroupSpec {
  std::string name;
  std::optional<GroupId> declared_id;
  std::size_t degree = 0;
  std::vector<std::string> generator_words; // cycle notation, 1-based points
};

/// Isomorphism invariants used to pre-filter isomorphism tests.
struct Fingerprint {
  std::size_t order = 0;
  std::map<unsigned, std::size_t> order_histogram;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> abelian_invariants; // invariant factors of G/G'
  std::vector<std::size_t> class_sizes;        // sorted

  friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
  /// Stable text form, used as the label of groups without a known ID.
  std::string to_string() const;
};

Fingerprint fingerprint(const FiniteGroup &G);

struct CatalogEntry {
  GroupSpec spec;
  GroupPtr group;
  Fingerprint print;
};

class Catalog {
public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const CatalogEntry *find_id(const GroupId &id) const;
  const CatalogEntry *find_name(const std::string &name) const;
  /// Looks up "(n,m)" style IDs first, then names.
  const CatalogEntry *find(const std::string &key) const;

  /// Declared ID of a bundled group isomorphic to G. Throws AmbiguousMatch if
  /// entries with different IDs both match.
  std::optional<GroupId> identify(const FiniteGroup &G) const;
  /// format_id of identify(G), or "fp:" + fingerprint text.
  std::string label(const FiniteGroup &G) const;

private:
  std::vector<CatalogEntry> entries_;
};

/// Parses the line-based catalog format:
///   GROUP <name> ID <n>,<m> DEGREE <d>
///   GEN <cycles>        (one or more)
///   END
/// '#' starts a comment line. Throws ParseError (with line number) or
/// OrderMismatch. Entries with a repeated ID are collapsed to the first.
Catalog parse_catalog(std::istream &in, std::size_t element_cap = kDefaultElementCap);
Catalog parse_catalog_file(const std::string &path,
                           std::size_t element_cap = kDefaultElementCap);
std::string serialize_catalog(const Catalog &catalog);

/// Path of the bundled catalog, honouring the CURVEAUT_CATALOG override.
std::string default_catalog_path();
std::string genus3_catalog_path();

} // namespace curveaut
