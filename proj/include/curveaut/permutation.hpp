#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curveaut {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)(x) = b(a(x)), so a is applied first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4 5)" or
  /// "(1,2)(3,4,5)". "()" is the identity. Throws std::invalid_argument.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// Cycle notation with 1-based points; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace curveaut
