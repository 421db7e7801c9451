#pragma once

#include "lrc/field.hpp"
#include "lrc/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

namespace lrc {

using PointIndex = std::uint32_t;

inline constexpr std::size_t kDefaultPointCap = 1'000'000;

// Number of k-dimensional subspaces of GF(q)^n. Throws Error(SizeCap) on
// 64-bit overflow.
std::uint64_t gaussian_binomial(int n, int k, int q);

// Points, hyperplanes and lines of PG(k-1,q).
//
// Points are the nonzero vectors whose first nonzero coordinate is 1, sorted
// lexicographically with coordinate 0 most significant. Hyperplane j is the
// set of points orthogonal to point j, so point i lies on hyperplane j iff
// point j lies on hyperplane i. Incidence lists and lines are built on first
// use.
class Geometry {
 public:
  Geometry(FieldContext field, int k, std::size_t point_cap = kDefaultPointCap);
  Geometry(const Geometry&) = delete;
  Geometry& operator=(const Geometry&) = delete;

  const FieldContext& field() const noexcept { return field_; }
  int q() const noexcept { return field_.order(); }
  int k() const noexcept { return k_; }
  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_hyperplanes() const noexcept { return num_points_; }

  std::span<const Element> point(PointIndex i) const noexcept {
    return {coords_.data() + static_cast<std::size_t>(i) * k_, static_cast<std::size_t>(k_)};
  }
  Row point_vector(PointIndex i) const;

  // Index of the point spanned by a nonzero vector; throws OutOfRange for the
  // zero vector.
  PointIndex index_of(std::span<const Element> v) const;
  // Same, but returns false instead of throwing on the zero vector.
  bool try_index_of(std::span<const Element> v, PointIndex& out) const noexcept;
  PointIndex unit_point(int coordinate) const;

  bool incident(PointIndex point, PointIndex hyperplane) const noexcept;
  // Points on hyperplane j; by duality also the hyperplanes through point j.
  std::span<const PointIndex> hyperplane_points(PointIndex j) const;

  std::size_t num_lines() const;
  std::span<const PointIndex> line_points(std::size_t line) const;
  std::span<const std::uint32_t> lines_through(PointIndex point) const;
  // Line through two distinct points.
  std::size_t line_of(PointIndex a, PointIndex b) const;

  // Sorted indices of all points in the span of the given points.
  std::vector<PointIndex> span_of(std::span<const PointIndex> points) const;
  int rank_of(std::span<const PointIndex> points) const;

  // All subspaces of the given vector dimension, each as a sorted point list.
  std::vector<std::vector<PointIndex>> subspaces(int dim) const;

 private:
  void build_hyperplanes() const;
  void build_lines() const;

  FieldContext field_;
  int k_;
  std::size_t num_points_;
  std::vector<Element> coords_;
  std::vector<std::uint64_t> qpow_;

  mutable std::once_flag hyper_once_;
  mutable std::vector<std::uint32_t> hyper_offsets_;
  mutable std::vector<PointIndex> hyper_points_;

  mutable std::once_flag line_once_;
  mutable std::size_t points_per_line_ = 0;
  mutable std::vector<PointIndex> line_points_;
  mutable std::vector<std::uint32_t> through_offsets_;
  mutable std::vector<std::uint32_t> through_lines_;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

GeometryPtr build_geometry(const FieldContext& field, int k, std::size_t point_cap = kDefaultPointCap);

enum class PointEncoding { Binary, LexIndex };

PointEncoding parse_encoding(std::string_view name);
std::string_view to_string(PointEncoding e);

// binary: bits of `code` are the coordinates, most significant bit first (q=2).
// lexindex: position in the sorted point list.
PointIndex decode_point(const Geometry& g, std::uint64_t code, PointEncoding encoding);
std::uint64_t encode_point(const Geometry& g, PointIndex point, PointEncoding encoding);

class PointMultiset {
 public:
  explicit PointMultiset(GeometryPtr geometry);

  const GeometryPtr& geometry_ptr() const noexcept { return geometry_; }
  const Geometry& geometry() const noexcept { return *geometry_; }

  std::uint32_t operator[](PointIndex p) const noexcept { return mults_[p]; }
  const std::vector<std::uint32_t>& mults() const noexcept { return mults_; }
  void set(PointIndex p, std::uint32_t m);
  void add(PointIndex p, std::uint32_t m = 1);
  // Throws InconsistentInput if the multiplicity would go negative.
  void remove(PointIndex p, std::uint32_t m = 1);

  std::uint64_t cardinality() const noexcept;
  std::uint32_t max_multiplicity() const noexcept;
  std::vector<PointIndex> support() const;

  std::uint64_t hyperplane_multiplicity(PointIndex h) const;
  std::uint64_t line_multiplicity(std::size_t line) const;
  std::vector<std::uint64_t> hyperplane_multiplicities() const;
  std::uint64_t max_hyperplane_multiplicity() const;

  bool is_spanning() const;
  // n - max_H M(H); only meaningful for spanning multisets.
  std::uint64_t minimum_distance() const;

  friend bool operator==(const PointMultiset& a, const PointMultiset& b);

 private:
  GeometryPtr geometry_;
  std::vector<std::uint32_t> mults_;
};

PointMultiset characteristic(const GeometryPtr& g, std::span<const PointIndex> points);
PointMultiset multiset_add(const PointMultiset& a, const PointMultiset& b);
PointMultiset multiset_scale(std::uint32_t t, const PointMultiset& a);
// Raises the multiplicity of the lowest-index positive point until |m| = target_n.
PointMultiset pad_multiset(const PointMultiset& m, std::uint64_t target_n);

}  // namespace lrc
