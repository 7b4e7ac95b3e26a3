#include "newton_mu/geometry.hpp"
#include "newton_mu/errors.hpp"
#include "newton_mu/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace newton_mu {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c < 0) throw DomainError(DomainError::Kind::Degenerate, "point with negative coordinate");
  }
}

Point Point::from_integers(std::span<const std::int64_t> coords) {
  std::vector<Rational> q;
  q.reserve(coords.size());
  for (auto c : coords) q.emplace_back(static_cast<long>(c));
  return Point(std::move(q));
}

bool Point::is_origin() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool Point::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return is_integer(c); });
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

CoordinateSubset::CoordinateSubset(std::size_t n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n > kMaxDim) throw std::invalid_argument("coordinate subset dimension too large");
  if (n < 32 && (mask >> n) != 0) throw std::invalid_argument("coordinate index out of range");
}

CoordinateSubset::CoordinateSubset(std::size_t n, std::initializer_list<std::size_t> members)
    : CoordinateSubset(from_members(n, std::span<const std::size_t>(members.begin(), members.size()))) {}

CoordinateSubset CoordinateSubset::from_members(std::size_t n, std::span<const std::size_t> members) {
  std::uint32_t mask = 0;
  for (auto i : members) {
    if (i >= n) throw std::invalid_argument("coordinate index out of range");
    mask |= 1u << i;
  }
  return {n, mask};
}

std::size_t CoordinateSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<std::size_t> CoordinateSubset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool CoordinateSubset::holds(const Point& p) const {
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (!contains(i) && p[i] != 0) return false;
  return true;
}

bool operator<(const CoordinateSubset& a, const CoordinateSubset& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.mask_ < b.mask_;
}

std::string to_string(const CoordinateSubset& s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::vector<CoordinateSubset> all_subsets(std::size_t n) {
  std::vector<CoordinateSubset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (1u << n); ++m) out.emplace_back(n, m);
  std::sort(out.begin(), out.end());
  return out;
}

Point keep_coordinates(const Point& p, const CoordinateSubset& keep) {
  std::vector<Rational> c;
  for (auto i : keep.members()) c.push_back(p[i]);
  return Point(std::move(c));
}

Point zero_coordinates(const Point& p, const CoordinateSubset& zero) {
  std::vector<Rational> c = p.coords();
  for (auto i : zero.members()) c[i] = 0;
  return Point(std::move(c));
}

namespace {

Matrix edge_matrix(std::span<const Point> v, std::span<const std::size_t> cols) {
  Matrix m(v.size() - 1, cols.size());
  for (std::size_t r = 1; r < v.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r - 1, c) = v[r][cols[c]] - v[0][cols[c]];
  return m;
}

std::vector<std::size_t> iota_cols(std::size_t n) {
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return cols;
}

}  // namespace

bool affinely_independent(std::span<const Point> points) {
  if (points.empty()) return false;
  const std::size_t n = points.front().dim();
  if (points.size() > n + 1) return false;
  const auto cols = iota_cols(n);
  return rank(edge_matrix(points, cols)) == points.size() - 1;
}

Rational normalized_volume_full(std::span<const Point> vertices) {
  const std::size_t k = vertices.size() - 1;
  const auto cols = iota_cols(k);
  Rational d = determinant(edge_matrix(vertices, cols));
  return abs(d);
}

VolumeResult simplex_volume(std::span<const Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("simplex_volume of empty vertex list");
  const std::size_t n = vertices.front().dim();
  const std::size_t k = vertices.size() - 1;
  for (const auto& v : vertices)
    if (v.dim() != n) throw std::invalid_argument("simplex_volume: mixed dimensions");
  if (k > n) return {0, 0, true};

  std::vector<std::size_t> cols;
  if (k == n) {
    cols = iota_cols(n);
  } else {
    // Project away coordinates that vanish on every vertex.
    for (std::size_t i = 0; i < n; ++i) {
      const bool used = std::any_of(vertices.begin(), vertices.end(),
                                    [i](const Point& p) { return p[i] != 0; });
      if (used) cols.push_back(i);
    }
    if (cols.size() > k)
      throw std::invalid_argument("simplex_volume: lower-dimensional simplex not in a coordinate subspace of its dimension");
    if (cols.size() < k) return {0, 0, true};
  }
  Rational normalized = abs(determinant(edge_matrix(vertices, cols)));
  if (normalized == 0) return {0, 0, true};
  Rational volume = normalized / Rational(factorial(static_cast<unsigned>(k)));
  return {volume, normalized, false};
}

Simplex::Simplex(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError(DomainError::Kind::Degenerate, "simplex without vertices");
  const std::size_t n = vertices_.front().dim();
  for (const auto& v : vertices_)
    if (v.dim() != n) throw DomainError(DomainError::Kind::Degenerate, "simplex vertices of mixed dimension");
  std::sort(vertices_.begin(), vertices_.end());
  if (!affinely_independent(vertices_))
    throw DomainError(DomainError::Kind::Degenerate, "simplex vertices are affinely dependent");
}

std::vector<Point> Simplex::vertices_in(const CoordinateSubset& s) const {
  std::vector<Point> out;
  for (const auto& v : vertices_)
    if (s.holds(v)) out.push_back(v);
  return out;
}

}  // namespace newton_mu
