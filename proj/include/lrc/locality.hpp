#pragma once

#include "lrc/code.hpp"
#include "lrc/geometry.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace lrc {

inline constexpr int kInfiniteLocality = -1;

// Recovery of coordinate i from the coordinates in `set`, witnessed by a dual
// codeword whose support is set + {i}. `coefficients[t]` belongs to set[t];
// `self_coefficient` to i.
struct RecoverySet {
  int coordinate = 0;
  std::vector<int> set;
  std::vector<Element> coefficients;
  Element self_coefficient = 1;

  Row dual_word(int n) const;
};

struct LocalityResult {
  int r = kInfiniteLocality;               // max over coordinates
  std::vector<int> per_coordinate;         // kInfiniteLocality where none exists
  std::vector<std::optional<RecoverySet>> recovery;
  bool degenerate = false;

  bool infinite() const noexcept { return r == kInfiniteLocality; }
};

// Exact locality with lexicographically smallest minimum-size recovery sets.
// A zero coordinate, or one outside the span of the other columns, has
// infinite locality.
LocalityResult locality(const LinearCode& c);

// True iff every coordinate has a recovery set of size <= r. Stops early.
bool has_locality(const LinearCode& c, int r);

// Erased symbol recomputed from the recovery coordinates of `word`.
Element recover_symbol(const FieldContext& f, const RecoverySet& rs, const Row& word);

nlohmann::json certificate_to_json(const LinearCode& c, const LocalityResult& res);

// Smallest weight of a nonzero dual codeword, found by column dependencies.
// Returns 0 when the dual code is zero.
int dual_distance(const LinearCode& c);

// Number of weight-3 dual codewords (minimally dependent column triples,
// each counted q-1 times). Requires a dual distance of at least 3.
std::uint64_t dual_weight3_count(const LinearCode& c);

enum class ScreenResult { LocalityAbove2, Inconclusive };
std::string_view to_string(ScreenResult r);

// Dual distance must be exactly 3 (PreconditionFailed otherwise). Reports
// LocalityAbove2 when fewer than (q-1)n/3 weight-3 dual words exist.
ScreenResult weight3_screen(const LinearCode& c);

// q=2 and odd minimum distance. Extends by a parity bit; if the extended
// code has dual distance >= 3 and fewer than n/3 weight-3 dual words, the
// original code cannot have locality 2.
ScreenResult parity_extension_screen(const LinearCode& c);

// Geometric locality test. r=1: no point of multiplicity exactly 1. r=2:
// every multiplicity-1 point is on a line with two other support points.
// Other r go through the code. Throws NotSpanning.
bool locality_geometric(const PointMultiset& m, int r);

}  // namespace lrc
