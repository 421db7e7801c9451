#pragma once

#include "lrc/code.hpp"
#include "lrc/geometry.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

// t copies of every point of PG(k-1,q).
PointMultiset simplex(const GeometryPtr& g, std::uint32_t t);

// Type [sigma; eps_{k-2}, ..., eps_0]: sigma copies of the ambient space minus
// eps_i subspaces of vector dimension i+1.
struct SolomonStifflerType {
  int sigma = 1;
  std::vector<int> eps;  // as written: eps[0] is eps_{k-2}, eps.back() is eps_0

  int k() const { return static_cast<int>(eps.size()) + 1; }
  // eps_i for 0 <= i <= k-2
  int eps_at(int i) const { return eps[eps.size() - 1 - i]; }
  std::string to_string() const;
};

// "sigma:e_{k-2},...,e_0", e.g. "2:1,1,1,1".
SolomonStifflerType parse_ss_type(std::string_view text);

long long ss_length(const SolomonStifflerType& t, int q);
long long ss_distance(const SolomonStifflerType& t, int q);

// Places the removed subspaces by backtracking (larger dimensions first,
// coordinate subspaces first) with per-point overlap <= sigma. Throws
// InfeasibleType when the removals exceed the ambient multiplicity and
// NoPlacement when the search fails or hits `node_limit`.
PointMultiset solomon_stiffler(const GeometryPtr& g, const SolomonStifflerType& type,
                               std::uint64_t node_limit = 2'000'000);

// sum_i eps_i [i+1]_q < sigma [k-1]_q
bool ss_locality2_check(const SolomonStifflerType& type, int q);

// Type reaching the Griesmer bound for d: sigma = ceil(d / q^(k-1)) and the
// eps_i are the base-q digits of sigma*q^(k-1) - d.
SolomonStifflerType griesmer_type(int k, long long d, int q);

// RM(1,m) = [2^m, m+1, 2^(m-1)]_2.
LinearCode reed_muller_first_order(int m);
// [k+1, k, 2]_q: identity plus an all-ones column.
LinearCode parity_check_code(const FieldContext& f, int k);

// Embeds the columns of a projective binary [n',k',d'] code in the hyperplane
// x_{k'+1} = 0, joins each to P = e_{k'+1}, and takes every point on those
// lines: [2n'+1, k'+1, min(2d', n'+1)]_2 with locality 2.
PointMultiset line_construction(const LinearCode& c_prime);

// Points on the lines <e_i, e_{i+1}> (cyclic), q=2, k >= 4: [2k, k, 3]_2.
PointMultiset cycle_construction_d3(int k);

// k = 2t: t coordinate triples plus L' (any q). k = 2t+1: t triples, L'' and a
// double point at e_{2t+1} (q=2). t >= 2.
PointMultiset d4_construction(int k, int q);

enum class R1Variant { Double, AddDoubleAmbient, TripleMinusOne };
R1Variant parse_r1_variant(std::string_view name);
PointMultiset r1_construction(const PointMultiset& m, R1Variant variant);

// Shortest codes with locality r regardless of distance; r in {1, 2, k}.
PointMultiset small_length_optimum(int k, int q, int r);

struct SmallDimensionResult {
  long long n;
  PointMultiset witness;
};
// Closed forms for k in {1,2} with a witnessing multiset.
SmallDimensionResult small_dimension_exact(int k, long long d, int q, int r);

}  // namespace lrc
