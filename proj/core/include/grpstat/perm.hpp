#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace grpstat {

/// Points are 0-based contiguous indices; constructors keep labels elsewhere.
using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Composition follows the exponent convention: `p * q` applies p first and
/// then q, so (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Validates that `images` is a bijection on {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  /// Skips validation; for internal hot paths that construct bijections.
  static Permutation from_images_unchecked(std::vector<Point> images);

  /// Builds from disjoint cycles. Points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  [[nodiscard]] std::size_t degree() const { return images_.size(); }
  [[nodiscard]] Point operator()(Point x) const { return images_[x]; }
  [[nodiscard]] Point operator[](Point x) const { return images_[x]; }
  [[nodiscard]] const std::vector<Point>& images() const { return images_; }

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;

  /// Smallest point moved, or degree() when this is the identity.
  [[nodiscard]] Point first_moved_point() const;

  /// Order of the permutation as an element (lcm of cycle lengths).
  [[nodiscard]] std::uint64_t element_order() const;

  /// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" for identity.
  [[nodiscard]] std::string to_cycle_string() const;

  /// In-place right multiplication: *this = *this * q.
  Permutation& operator*=(const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Result maps x to q(p(x)). Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Image of a point tuple, entry by entry.
std::vector<Point> apply(const Permutation& g, std::span<const Point> tuple);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace grpstat
