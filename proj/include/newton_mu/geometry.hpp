#pragma once

#include "newton_mu/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace newton_mu {

/// A point of the closed positive orthant. Coordinates are exact and nonnegative.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords);
  Point(std::initializer_list<Rational> coords) : Point(std::vector<Rational>(coords)) {}
  static Point origin(std::size_t n) { return Point(std::vector<Rational>(n)); }
  static Point from_integers(std::span<const std::int64_t> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_origin() const;
  bool is_integral() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const Point& p);

/// Subset I of the coordinate indices {0..n-1}; printed 1-based.
class CoordinateSubset {
 public:
  static constexpr std::size_t kMaxDim = 30;

  CoordinateSubset() = default;
  CoordinateSubset(std::size_t n, std::uint32_t mask);
  CoordinateSubset(std::size_t n, std::initializer_list<std::size_t> members);
  static CoordinateSubset from_members(std::size_t n, std::span<const std::size_t> members);
  static CoordinateSubset full(std::size_t n) { return {n, n ? (~0u >> (32 - n)) : 0u}; }
  static CoordinateSubset empty(std::size_t n) { return {n, 0u}; }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept;
  bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  std::vector<std::size_t> members() const;
  CoordinateSubset complement() const { return {n_, full(n_).mask_ & ~mask_}; }
  CoordinateSubset intersect(const CoordinateSubset& o) const { return {n_, mask_ & o.mask_}; }
  bool is_subset_of(const CoordinateSubset& o) const { return (mask_ & ~o.mask_) == 0; }

  /// True when the point vanishes on every coordinate outside the subset (x in R^I).
  bool holds(const Point& p) const;

  friend bool operator==(const CoordinateSubset&, const CoordinateSubset&) = default;
  /// Orders by size, then by mask.
  friend bool operator<(const CoordinateSubset& a, const CoordinateSubset& b);

 private:
  std::size_t n_ = 0;
  std::uint32_t mask_ = 0;
};

std::string to_string(const CoordinateSubset& s);

/// All 2^n subsets ordered by size then mask.
std::vector<CoordinateSubset> all_subsets(std::size_t n);

/// Keeps only the coordinates in `keep`, in increasing index order.
Point keep_coordinates(const Point& p, const CoordinateSubset& keep);
/// Zeroes the coordinates in `zero` (the projection onto R_I).
Point zero_coordinates(const Point& p, const CoordinateSubset& zero);

/// |I|-volume of a simplex, computed as |det| of edge vectors divided by k!.
struct VolumeResult {
  Rational volume;
  /// k! * volume; the quantity entering every Newton-number term.
  Rational normalized;
  bool degenerate = false;
};

/// Volume of the simplex spanned by k+1 points in R^n. When k < n the points
/// must lie in a coordinate subspace R^I with |I| = k, otherwise
/// std::invalid_argument is thrown. Affinely dependent input yields 0, flagged.
VolumeResult simplex_volume(std::span<const Point> vertices);

/// An affinely independent vertex list stored in lexicographic order.
class Simplex {
 public:
  /// Throws DomainError(Degenerate) for affinely dependent or mixed-dimension input.
  explicit Simplex(std::vector<Point> vertices);

  std::size_t ambient_dim() const noexcept { return vertices_.front().dim(); }
  std::size_t dim() const noexcept { return vertices_.size() - 1; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  bool contains_origin() const { return vertices_.front().is_origin(); }

  /// Vertices lying in R^I.
  std::vector<Point> vertices_in(const CoordinateSubset& s) const;

  friend bool operator==(const Simplex& a, const Simplex& b) { return a.vertices_ == b.vertices_; }
  friend bool operator<(const Simplex& a, const Simplex& b) { return a.vertices_ < b.vertices_; }

 private:
  std::vector<Point> vertices_;
};

bool affinely_independent(std::span<const Point> points);

/// Absolute determinant of the edge matrix of a full-dimensional simplex in R^k.
Rational normalized_volume_full(std::span<const Point> vertices);

}  // namespace newton_mu
