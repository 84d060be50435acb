#pragma once

#include "curveaut/permutation.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curveaut {

/// Index of an element in its group's canonical element list.
using Elem = std::uint16_t;
/// Index into FiniteGroup::classes().
using ClassId = std::uint16_t;

inline constexpr std::size_t kDefaultElementCap = 2048;

/// Fixed-size set of element indices of one group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t count() const;
  std::vector<Elem> members() const;
  bool subset_of(const ElementSet &other) const;
  const std::vector<std::uint64_t> &words() const { return words_; }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;
  friend auto operator<=>(const ElementSet &a, const ElementSet &b) { return a.words_ <=> b.words_; }

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const noexcept;
};

struct ConjugacyClass {
  Elem representative;      // smallest member
  std::vector<Elem> members; // sorted
  unsigned element_order;
};

/// A finite permutation group with every element materialized.
///
/// Elements are sorted lexicographically by image array, so the identity is
/// element 0. The full Cayley table is stored; groups are small (the default
/// cap is 2048 elements). Every element carries a word in the generators from
/// a breadth-first closure; evaluating that word gives the element back.
///
/// Immutable after construction and safe to share between threads.
class FiniteGroup {
public:
  /// Closes the generators. Throws CapExceeded when the group has more than
  /// `cap` elements, std::invalid_argument on empty or mixed-degree input.
  static FiniteGroup close(std::span<const Permutation> generators,
                           std::size_t cap = kDefaultElementCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }

  static constexpr Elem identity() { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t{a} * order() + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// x^y = y^-1 x y.
  Elem conj(Elem x, Elem y) const { return mul(mul(inv(y), x), y); }
  /// [a,b] = a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem pow(Elem x, long long k) const;
  unsigned element_order(Elem x) const { return orders_[x]; }

  const Permutation &element(Elem x) const { return elements_[x]; }
  std::optional<Elem> index_of(const Permutation &p) const;

  /// Generators as element indices, in the order they were supplied.
  std::span<const Elem> generators() const { return generators_; }
  std::vector<Permutation> generator_permutations() const;

  /// Reduced word (generator positions) for x from the breadth-first tree.
  std::vector<std::size_t> word(Elem x) const;
  Elem evaluate(std::span<const std::size_t> word) const;
  /// Word-tree parent: x = mul(tree_parent(x), generators()[tree_generator(x)]).
  Elem tree_parent(Elem x) const { return parent_[x]; }
  std::size_t tree_generator(Elem x) const { return via_[x]; }
  /// Elements in breadth-first order (identity first).
  std::span<const Elem> bfs_order() const { return bfs_order_; }

  /// Sorted by (element order, class size, representative).
  const std::vector<ConjugacyClass> &classes() const { return classes_; }
  ClassId class_of(Elem x) const { return class_of_[x]; }

  /// Subgroup generated by the given elements.
  ElementSet closure(std::span<const Elem> gens) const;
  /// True iff the elements generate the whole group.
  bool generates(std::span<const Elem> gens) const;

  bool is_abelian() const;
  std::vector<Elem> center() const;
  /// Sorted set of the element orders that occur.
  std::vector<unsigned> element_orders() const;
  unsigned exponent() const;

private:
  FiniteGroup() = default;
  void build_classes();

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Elem> generators_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<unsigned> orders_;
  std::vector<Elem> parent_;
  std::vector<std::size_t> via_;
  std::vector<Elem> bfs_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<ClassId> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr make_group(std::span<const Permutation> gens, std::size_t cap = kDefaultElementCap) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::close(gens, cap));
}

/// Free-function spellings of the kernel operations.
inline unsigned element_order(const FiniteGroup &g, Elem x) { return g.element_order(x); }
inline const std::vector<ConjugacyClass> &conjugacy_classes(const FiniteGroup &g) { return g.classes(); }

} // namespace curveaut
