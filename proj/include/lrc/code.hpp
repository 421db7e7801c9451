#pragma once

#include "lrc/field.hpp"
#include "lrc/geometry.hpp"
#include "lrc/linalg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace lrc {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// Linear code given by a generator matrix. Dependent rows are dropped at
// construction (earlier rows win), so the stored rows are always a basis.
// A code of dimension 0 is representable; it arises as the dual of [n,n].
class LinearCode {
 public:
  LinearCode(FieldContext field, int n, Matrix rows);

  const FieldContext& field() const noexcept { return field_; }
  int q() const noexcept { return field_.order(); }
  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(rows_.size()); }
  const Matrix& generator() const noexcept { return rows_; }

  Row column(int j) const;
  Row encode(const Row& message) const;

 private:
  FieldContext field_;
  int n_;
  Matrix rows_;
};

// Validates symbols and row lengths; throws RaggedRows / BadSymbol.
LinearCode code_from_matrix(const FieldContext& field, const Matrix& rows);

int hamming_weight(const Row& v);

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w

  int length() const { return static_cast<int>(counts.size()) - 1; }
  // Least positive weight with a nonzero count, 0 if there is none.
  int minimum_weight() const;
  // Nonzero weights that occur.
  std::vector<int> support() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// Calls `visit(weight)` for every codeword, the zero word included. Throws
// SizeCap when q^k exceeds `cap`.
void for_each_codeword_weight(const LinearCode& c, const std::function<void(int)>& visit,
                              std::uint64_t cap = kDefaultEnumerationCap);

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap);

// Codeword enumeration when q^k <= cap, otherwise the hyperplane route.
// Returns 0 for a zero-dimensional code.
int minimum_distance(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap);
int minimum_distance_by_enumeration(const LinearCode& c, std::uint64_t cap = kDefaultEnumerationCap);
// n - (#zero columns) - max_H M(H) over the column multiset.
int minimum_distance_by_hyperplanes(const LinearCode& c);

LinearCode dual_code(const LinearCode& c);

// Krawtchouk transform of an [n,k]_q weight distribution. Exact.
WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, int q);

// Appends an overall parity column (q=2 only).
LinearCode extend_parity(const LinearCode& c);

struct ShortenResult {
  LinearCode code;
  bool coordinate_was_zero;  // the coordinate was 0 in every codeword; k unchanged
};
ShortenResult shorten(const LinearCode& c, int coordinate);
LinearCode puncture(const LinearCode& c, int coordinate);

bool is_degenerate(const LinearCode& c);
bool is_projective(const LinearCode& c);
int zero_column_count(const LinearCode& c);

// Column i goes to its point; throws DegenerateCode on a zero column.
PointMultiset code_to_multiset(const LinearCode& c, GeometryPtr geometry = nullptr);
// One column per unit of multiplicity, points in index order; throws NotSpanning.
LinearCode multiset_to_code(const PointMultiset& m);

}  // namespace lrc
