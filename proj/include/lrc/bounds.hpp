#pragma once

#include <cstdint>
#include <functional>

namespace lrc {

// g_q(k,d) = sum_{i<k} ceil(d / q^i)
std::uint64_t griesmer(int k, std::uint64_t d, int q);

// d <= n - k - ceil(k/r) + 2; throws BadR unless 1 <= r <= k.
long long singleton_locality_bound(long long n, int k, int r);

// Upper bound on the dimension of an [n,k,d] code.
using KoptOracle = std::function<int(long long n, long long d)>;

// Largest k with g_q(k,d) <= n; 0 if n < d.
KoptOracle griesmer_kopt_oracle(int q);

// min over t >= 0 of r*t + oracle(n - t(r+1), d), with oracle value 0 once the
// residual length drops below d. t runs up to ceil(oracle(n,d)/r) + 1.
int cm_bound(long long n, long long d, int r, const KoptOracle& oracle);

struct MultiplicityBounds {
  long long upper;  // may be negative: no multiset with these parameters
  long long lower;  // clamped at 0
};
// Per-point multiplicity range for an [n,k,d]_q multiset, k >= 3 (BadK).
MultiplicityBounds point_multiplicity_bounds(long long n, long long d, int k, int q);

// (k-2)q^(k-1) - (k-1)q^(k-2) + 1, k >= 3 (BadK).
long long griesmer_attainment_threshold(int k, int q);

// Shortest length of any [n,k]_q code with locality r: 2k (r=1), ceil(3k/2)
// (r=2), k+1 (r>=k), and the Singleton-type floor k + ceil(k/r) - 1 otherwise.
long long locality_length_floor(int k, int r);

}  // namespace lrc
