#include "lrc/bounds.hpp"

#include "lrc/error.hpp"
#include "lrc/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lrc {

std::uint64_t griesmer(int k, std::uint64_t d, int q) {
  if (k < 1) throw Error(ErrorKind::BadK, "griesmer needs k >= 1");
  std::uint64_t sum = 0;
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) {
    sum += (d + p - 1) / p;
    if (p > d) {
      // Every later term is 1 (or 0 for d = 0).
      sum += static_cast<std::uint64_t>(k - 1 - i) * (d > 0 ? 1 : 0);
      break;
    }
    p *= static_cast<std::uint64_t>(q);
  }
  return sum;
}

long long singleton_locality_bound(long long n, int k, int r) {
  if (r < 1 || r > k) throw Error(ErrorKind::BadR, "r must lie in [1, k]");
  return n - k - (k + r - 1) / r + 2;
}

KoptOracle griesmer_kopt_oracle(int q) {
  return [q](long long n, long long d) -> int {
    if (d < 1 || n < d) return 0;
    int k = 0;
    while (griesmer(k + 1, static_cast<std::uint64_t>(d), q) <= static_cast<std::uint64_t>(n)) ++k;
    return k;
  };
}

int cm_bound(long long n, long long d, int r, const KoptOracle& oracle) {
  if (r < 1) throw Error(ErrorKind::BadR, "r must be positive");
  const int kmax = oracle(n, d);
  const long long tmax = (kmax + r - 1) / r + 1;
  long long best = std::numeric_limits<long long>::max();
  for (long long t = 0; t <= tmax; ++t) {
    const long long rest = n - t * (r + 1);
    const long long value = r * t + (rest >= d ? oracle(rest, d) : 0);
    best = std::min(best, value);
  }
  return static_cast<int>(best);
}

MultiplicityBounds point_multiplicity_bounds(long long n, long long d, int k, int q) {
  if (k < 3) throw Error(ErrorKind::BadK, "multiplicity bounds need k >= 3");
  if (n < d) throw Error(ErrorKind::OutOfRange, "n must be at least d");
  const auto h1 = static_cast<long long>(gaussian_binomial(k - 1, 1, q));
  const auto h2 = static_cast<long long>(gaussian_binomial(k - 2, 1, q));
  long long qk2 = 1;
  for (int i = 0; i < k - 2; ++i) qk2 *= q;
  const long long num = (n - d) * h1 - n * h2;
  // floor division for possibly negative numerators
  const long long upper = num >= 0 ? num / qk2 : -((-num + qk2 - 1) / qk2);
  const long long lower = std::max(0LL, n - (n - d) * q);
  return {upper, lower};
}

long long griesmer_attainment_threshold(int k, int q) {
  if (k < 3) throw Error(ErrorKind::BadK, "threshold defined for k >= 3");
  long long qk1 = 1;
  for (int i = 0; i < k - 1; ++i) qk1 *= q;
  return static_cast<long long>(k - 2) * qk1 - static_cast<long long>(k - 1) * (qk1 / q) + 1;
}

long long locality_length_floor(int k, int r) {
  if (k < 1) throw Error(ErrorKind::BadK, "k must be positive");
  if (r < 1) throw Error(ErrorKind::BadR, "r must be positive");
  if (r == 1) return 2LL * k;
  if (r == 2) return (3LL * k + 1) / 2;
  if (r >= k) return k + 1;
  return k + (k + r - 1) / r - 1;
}

}  // namespace lrc
