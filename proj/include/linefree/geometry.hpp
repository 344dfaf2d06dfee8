#pragma once

// Points, canonical directions and lines of the affine spaces F_p^2 and F_p^3,
// plus a dense bitset PointSet keyed by the row-major point index
// (last coordinate varies fastest).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linefree/field.hpp"

namespace linefree {

inline constexpr unsigned kMaxDim = 3;

using Coords = std::array<Elem, kMaxDim>;

/// A point of F_p^n. Unused trailing coordinates are kept at zero so that
/// defaulted comparison is lexicographic on the live coordinates.
struct Point {
  Coords c{};
  unsigned dim = 0;

  Elem operator[](unsigned i) const { return c[i]; }
  Elem& operator[](unsigned i) { return c[i]; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Nonzero vector with first nonzero coordinate equal to 1.
struct Direction {
  Coords c{};
  unsigned dim = 0;

  unsigned pivot() const noexcept;
  Elem operator[](unsigned i) const { return c[i]; }

  friend auto operator<=>(const Direction&, const Direction&) = default;
};

/// `base` is the lexicographically smallest point of the line, which is the
/// point whose pivot coordinate is zero.
struct Line {
  Point base;
  Direction dir;

  friend auto operator<=>(const Line&, const Line&) = default;
};

std::uint64_t ipow(std::uint64_t b, unsigned e) noexcept;

/// Dimension and field of an affine space F_p^n, n in {2, 3}.
class Space {
 public:
  Space(PrimeModulus mod, unsigned dim);

  const PrimeModulus& mod() const noexcept { return mod_; }
  Elem p() const noexcept { return mod_.p(); }
  unsigned dim() const noexcept { return dim_; }
  /// p^n
  std::uint64_t size() const noexcept { return size_; }
  /// p^(n-1 - i): stride of coordinate i in the point index.
  std::uint64_t stride(unsigned i) const noexcept { return stride_[i]; }

  std::uint64_t index(const Point& pt) const noexcept {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < dim_; ++i) idx += pt.c[i] * stride_[i];
    return idx;
  }
  Point point(std::uint64_t index) const noexcept;
  Point make_point(std::initializer_list<Elem> coords) const;
  bool contains(const Point& pt) const noexcept;

  std::uint64_t direction_count() const noexcept { return (size_ - 1) / (p() - 1); }
  /// Lines per parallel class, p^(n-1).
  std::uint64_t lines_per_direction() const noexcept { return size_ / p(); }
  std::uint64_t line_count() const noexcept {
    return direction_count() * lines_per_direction();
  }

  friend bool operator==(const Space&, const Space&) = default;

 private:
  PrimeModulus mod_;
  unsigned dim_;
  std::uint64_t size_;
  std::array<std::uint64_t, kMaxDim> stride_{};
};

/// All (p^n - 1)/(p - 1) canonical directions: pivot 0 first, then pivot 1,
/// and so on; within a pivot the remaining coordinates count up
/// lexicographically.
std::vector<Direction> canonical_directions(const Space& space);

/// Normalizes a nonzero vector to its canonical direction.
Direction canonicalize(const Space& space, const Coords& v);

/// Position of `dir` in canonical_directions(space).
std::uint64_t direction_index(const Space& space, const Direction& dir) noexcept;

/// The `k`-th line (0 <= k < p^(n-1)) of the parallel class `dir`: its base
/// has pivot coordinate 0 and the other coordinates are the base-p digits of k.
Line line_in_direction(const Space& space, const Direction& dir, std::uint64_t k);

/// Position of a line in enumeration order.
std::uint64_t line_rank(const Space& space, const Line& line) noexcept;

/// The canonical line through two distinct points.
Line line_through(const Space& space, const Point& a, const Point& b);

/// base + lambda * dir for lambda = 0..p-1.
std::vector<Point> line_points(const Space& space, const Line& line);

/// Yields every line exactly once, grouped by direction in canonical order.
class LineEnumerator {
 public:
  explicit LineEnumerator(const Space& space);

  std::optional<Line> next();

 private:
  Space space_;
  std::vector<Direction> dirs_;
  std::size_t dir_ = 0;
  std::uint64_t k_ = 0;
};

class PointSet {
 public:
  explicit PointSet(Space space);

  static PointSet empty(Space space) { return PointSet(std::move(space)); }
  static PointSet full(Space space);

  const Space& space() const noexcept { return space_; }
  std::uint64_t cardinality() const noexcept { return count_; }
  bool is_empty() const noexcept { return count_ == 0; }

  bool contains_index(std::uint64_t idx) const noexcept {
    return (words_[idx >> 6] >> (idx & 63)) & 1u;
  }
  bool contains(const Point& pt) const noexcept {
    return contains_index(space_.index(pt));
  }
  /// Returns true if the point was newly inserted.
  bool insert_index(std::uint64_t idx) noexcept;
  bool remove_index(std::uint64_t idx) noexcept;
  bool insert(const Point& pt);
  bool remove(const Point& pt);

  /// True iff every index in [begin, begin + len) is a member.
  bool contains_run(std::uint64_t begin, std::uint64_t len) const noexcept;

  PointSet complement() const;
  PointSet& unite(const PointSet& other);
  PointSet& subtract(const PointSet& other);
  bool is_subset_of(const PointSet& other) const;

  std::vector<Point> points() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// Replaces the membership bits; bits past p^n must be zero.
  void assign_words(std::vector<std::uint64_t> words);

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.words_ == b.words_;
  }

 private:
  void require_same_space(const PointSet& other) const;
  void recount() noexcept;

  Space space_;
  std::vector<std::uint64_t> words_;
  std::uint64_t count_ = 0;
};

PointSet set_union(PointSet a, const PointSet& b);
PointSet set_difference(PointSet a, const PointSet& b);

/// The planar slice {(y, z) : (i, y, z) in set} of a set in F_p^3.
PointSet layer(const PointSet& set, Elem i);

}  // namespace linefree
