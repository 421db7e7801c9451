#include "lrc/code.hpp"

#include "lrc/error.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lrc {

namespace {

std::uint64_t checked_power(int q, int k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    v *= static_cast<std::uint64_t>(q);
    if (v > cap)
      throw Error(ErrorKind::SizeCap, std::to_string(q) + "^" + std::to_string(k) + " codewords exceed the enumeration cap");
  }
  return v;
}

void enumerate_binary(const LinearCode& c, const std::function<void(int)>& visit) {
  const int n = c.n();
  const int k = c.k();
  const std::size_t limbs = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * limbs, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      if (c.generator()[i][j]) rows[i * limbs + j / 64] |= std::uint64_t{1} << (j % 64);
  std::vector<std::uint64_t> word(limbs, 0);
  visit(0);
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: flip the row at the lowest set bit of the step counter.
    const int r = std::countr_zero(step);
    int w = 0;
    for (std::size_t l = 0; l < limbs; ++l) {
      word[l] ^= rows[r * limbs + l];
      w += std::popcount(word[l]);
    }
    visit(w);
  }
}

void enumerate_general(const LinearCode& c, const std::function<void(int)>& visit) {
  const auto& f = c.field();
  const int n = c.n();
  const int k = c.k();
  const int q = c.q();
  // scaled[i][a] = a * row i
  std::vector<std::vector<Row>> scaled(k, std::vector<Row>(q, Row(n)));
  for (int i = 0; i < k; ++i)
    for (int a = 0; a < q; ++a)
      for (int j = 0; j < n; ++j) scaled[i][a][j] = f.mul(static_cast<Element>(a), c.generator()[i][j]);
  std::vector<Row> partial(k + 1, Row(n, 0));
  auto rec = [&](auto&& self, int level) -> void {
    if (level == k) {
      visit(hamming_weight(partial[k]));
      return;
    }
    for (int a = 0; a < q; ++a) {
      const Row& s = scaled[level][a];
      Row& dst = partial[level + 1];
      const Row& src = partial[level];
      for (int j = 0; j < n; ++j) dst[j] = f.add(src[j], s[j]);
      self(self, level + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

LinearCode::LinearCode(FieldContext field, int n, Matrix rows) : field_(std::move(field)), n_(n) {
  // Echelon rows with their pivots; a row is kept iff it reduces to nonzero.
  Matrix echelon;
  std::vector<int> pivots;
  for (auto& r : rows) {
    Row v = r;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Element factor = v[pivots[e]];
      if (factor == 0) continue;
      for (int j = 0; j < n_; ++j) v[j] = field_.sub(v[j], field_.mul(factor, echelon[e][j]));
    }
    int lead = 0;
    while (lead < n_ && v[lead] == 0) ++lead;
    if (lead == n_) continue;
    const Element inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(x, inv);
    echelon.push_back(std::move(v));
    pivots.push_back(lead);
    rows_.push_back(std::move(r));
  }
}

Row LinearCode::column(int j) const {
  Row col(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) col[i] = rows_[i][j];
  return col;
}

Row LinearCode::encode(const Row& message) const {
  Row out(n_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (message[i] == 0) continue;
    for (int j = 0; j < n_; ++j) out[j] = field_.add(out[j], field_.mul(message[i], rows_[i][j]));
  }
  return out;
}

LinearCode code_from_matrix(const FieldContext& field, const Matrix& rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "generator matrix has no rows");
  const std::size_t n = rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::RaggedRows, "row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                             ", expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j] >= field.order())
        throw Error(ErrorKind::BadSymbol, "symbol " + std::to_string(rows[i][j]) + " at row " + std::to_string(i) +
                                              ", column " + std::to_string(j) + " is not in GF(" +
                                              std::to_string(field.order()) + ")");
  }
  return LinearCode(field, static_cast<int>(n), rows);
}

int hamming_weight(const Row& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

int WeightDistribution::minimum_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] > 0) return static_cast<int>(w);
  return 0;
}

std::vector<int> WeightDistribution::support() const {
  std::vector<int> s;
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] > 0) s.push_back(static_cast<int>(w));
  return s;
}

void for_each_codeword_weight(const LinearCode& c, const std::function<void(int)>& visit, std::uint64_t cap) {
  checked_power(c.q(), c.k(), cap);
  if (c.q() == 2)
    enumerate_binary(c, visit);
  else
    enumerate_general(c, visit);
}

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t cap) {
  WeightDistribution wd;
  wd.counts.assign(c.n() + 1, 0);
  for_each_codeword_weight(c, [&](int w) { ++wd.counts[w]; }, cap);
  return wd;
}

int minimum_distance_by_enumeration(const LinearCode& c, std::uint64_t cap) {
  int best = 0;
  for_each_codeword_weight(
      c, [&](int w) {
        if (w > 0 && (best == 0 || w < best)) best = w;
      },
      cap);
  return best;
}

int minimum_distance_by_hyperplanes(const LinearCode& c) {
  if (c.k() == 0) return 0;
  const int zeros = zero_column_count(c);
  auto g = build_geometry(c.field(), c.k());
  PointMultiset m(g);
  for (int j = 0; j < c.n(); ++j) {
    PointIndex p;
    const Row col = c.column(j);
    if (g->try_index_of(col, p)) m.add(p);
  }
  if (c.k() == 1) return c.n() - zeros;
  return c.n() - zeros - static_cast<int>(m.max_hyperplane_multiplicity());
}

int minimum_distance(const LinearCode& c, std::uint64_t cap) {
  if (c.k() == 0) return 0;
  std::uint64_t words = 1;
  bool small = true;
  for (int i = 0; i < c.k() && small; ++i) {
    words *= static_cast<std::uint64_t>(c.q());
    small = words <= cap;
  }
  return small ? minimum_distance_by_enumeration(c, cap) : minimum_distance_by_hyperplanes(c);
}

LinearCode dual_code(const LinearCode& c) {
  return LinearCode(c.field(), c.n(), null_space(c.field(), c.generator(), c.n()));
}

WeightDistribution macwilliams_transform(const WeightDistribution& w, int n, int k, int q) {
  using boost::multiprecision::cpp_int;
  if (static_cast<int>(w.counts.size()) != n + 1)
    throw Error(ErrorKind::InconsistentInput, "distribution length differs from n+1");
  cpp_int total = 0;
  for (auto x : w.counts) total += x;
  cpp_int size = 1;
  for (int i = 0; i < k; ++i) size *= q;
  if (total != size) throw Error(ErrorKind::InconsistentInput, "counts do not sum to q^k");

  // binom[a][b]
  std::vector<std::vector<cpp_int>> binom(n + 1, std::vector<cpp_int>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : cpp_int(0));
  }
  std::vector<cpp_int> qm1(n + 1, 1);
  for (int i = 1; i <= n; ++i) qm1[i] = qm1[i - 1] * (q - 1);

  WeightDistribution out;
  out.counts.assign(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    cpp_int acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (w.counts[i] == 0) continue;
      // Krawtchouk K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i,s) C(n-i,j-s)
      cpp_int kr = 0;
      for (int s = 0; s <= std::min(i, j); ++s) {
        if (j - s > n - i) continue;
        cpp_int term = qm1[j - s] * binom[i][s] * binom[n - i][j - s];
        if (s % 2) kr -= term;
        else kr += term;
      }
      acc += kr * w.counts[i];
    }
    if (acc % size != 0 || acc < 0) throw Error(ErrorKind::InconsistentInput, "input is not a linear code distribution");
    out.counts[j] = static_cast<std::uint64_t>(acc / size);
  }
  return out;
}

LinearCode extend_parity(const LinearCode& c) {
  if (c.q() != 2) throw Error(ErrorKind::WrongField, "parity extension is defined here for q=2 only");
  Matrix rows = c.generator();
  for (auto& r : rows) {
    Element s = 0;
    for (Element e : r) s ^= e;
    r.push_back(s);
  }
  return LinearCode(c.field(), c.n() + 1, rows);
}

ShortenResult shorten(const LinearCode& c, int coordinate) {
  if (coordinate < 0 || coordinate >= c.n()) throw Error(ErrorKind::OutOfRange, "coordinate out of range");
  const auto& f = c.field();
  Matrix rows = c.generator();
  int pivot = -1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][coordinate] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  bool zero = pivot < 0;
  if (!zero) {
    const Element inv = f.inv(rows[pivot][coordinate]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == pivot || rows[i][coordinate] == 0) continue;
      const Element factor = f.mul(rows[i][coordinate], inv);
      for (int j = 0; j < c.n(); ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[pivot][j]));
    }
    rows.erase(rows.begin() + pivot);
  }
  if (rows.empty()) throw Error(ErrorKind::DimensionCollapse, "shortening leaves a zero-dimensional code");
  for (auto& r : rows) r.erase(r.begin() + coordinate);
  return {LinearCode(f, c.n() - 1, rows), zero};
}

LinearCode puncture(const LinearCode& c, int coordinate) {
  if (coordinate < 0 || coordinate >= c.n()) throw Error(ErrorKind::OutOfRange, "coordinate out of range");
  Matrix rows = c.generator();
  for (auto& r : rows) r.erase(r.begin() + coordinate);
  return LinearCode(c.field(), c.n() - 1, rows);
}

int zero_column_count(const LinearCode& c) {
  int z = 0;
  for (int j = 0; j < c.n(); ++j) {
    bool all_zero = true;
    for (const auto& r : c.generator()) all_zero = all_zero && r[j] == 0;
    z += all_zero;
  }
  return z;
}

bool is_degenerate(const LinearCode& c) { return zero_column_count(c) > 0; }

bool is_projective(const LinearCode& c) {
  if (c.k() == 0 || is_degenerate(c)) return false;
  auto g = build_geometry(c.field(), c.k());
  std::vector<bool> seen(g->num_points(), false);
  for (int j = 0; j < c.n(); ++j) {
    const PointIndex p = g->index_of(c.column(j));
    if (seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

PointMultiset code_to_multiset(const LinearCode& c, GeometryPtr geometry) {
  if (c.k() == 0) throw Error(ErrorKind::DegenerateCode, "zero-dimensional code");
  if (!geometry) geometry = build_geometry(c.field(), c.k());
  if (geometry->k() != c.k() || geometry->q() != c.q())
    throw Error(ErrorKind::GeometryMismatch, "geometry does not match code parameters");
  PointMultiset m(geometry);
  for (int j = 0; j < c.n(); ++j) {
    PointIndex p;
    if (!geometry->try_index_of(c.column(j), p))
      throw Error(ErrorKind::DegenerateCode, "column " + std::to_string(j) + " is zero");
    m.add(p);
  }
  return m;
}

LinearCode multiset_to_code(const PointMultiset& m) {
  const Geometry& g = m.geometry();
  if (!m.is_spanning()) throw Error(ErrorKind::NotSpanning, "multiset does not span the ambient space");
  Matrix rows(g.k());
  for (PointIndex p = 0; p < g.num_points(); ++p) {
    auto v = g.point(p);
    for (std::uint32_t t = 0; t < m[p]; ++t)
      for (int i = 0; i < g.k(); ++i) rows[i].push_back(v[i]);
  }
  const int n = static_cast<int>(rows.front().size());
  return LinearCode(g.field(), n, rows);
}

}  // namespace lrc
