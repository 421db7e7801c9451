#include "lrc/geometry.hpp"

#include "lrc/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace lrc {

std::uint64_t gaussian_binomial(int n, int k, int q) {
  if (q < 2 || k < 0 || n < k)
    throw Error(ErrorKind::OutOfRange, "gaussian_binomial needs 0 <= k <= n and q >= 2");
  // After step i the running value is [n choose i+1]_q, so every division is exact.
  unsigned __int128 result = 1;
  auto qpow = [q](int e) {
    unsigned __int128 v = 1;
    for (int i = 0; i < e; ++i) {
      v *= static_cast<unsigned>(q);
      if (v > (static_cast<unsigned __int128>(1) << 100))
        throw Error(ErrorKind::SizeCap, "gaussian_binomial overflow");
    }
    return v;
  };
  for (int i = 0; i < k; ++i) {
    result = result * (qpow(n - i) - 1);
    result /= qpow(i + 1) - 1;
    if (result > static_cast<unsigned __int128>(UINT64_MAX))
      throw Error(ErrorKind::SizeCap, "gaussian_binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

Geometry::Geometry(FieldContext field, int k, std::size_t point_cap) : field_(std::move(field)), k_(k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "dimension k must be at least 1");
  const int q = field_.order();
  const std::uint64_t count = gaussian_binomial(k, 1, q);
  if (count > point_cap)
    throw Error(ErrorKind::SizeCap, "PG(" + std::to_string(k - 1) + "," + std::to_string(q) + ") has " +
                                        std::to_string(count) + " points, cap is " + std::to_string(point_cap));
  num_points_ = static_cast<std::size_t>(count);
  qpow_.resize(k + 1);
  qpow_[0] = 1;
  for (int i = 1; i <= k; ++i) qpow_[i] = qpow_[i - 1] * q;

  coords_.reserve(num_points_ * k);
  // Leading one at position `lead`; later leads come first in lex order.
  for (int lead = k - 1; lead >= 0; --lead) {
    const int tail = k - 1 - lead;
    for (std::uint64_t t = 0; t < qpow_[tail]; ++t) {
      for (int c = 0; c < lead; ++c) coords_.push_back(0);
      coords_.push_back(1);
      std::uint64_t rest = t;
      std::vector<Element> digits(tail);
      for (int c = tail - 1; c >= 0; --c) {
        digits[c] = static_cast<Element>(rest % q);
        rest /= q;
      }
      coords_.insert(coords_.end(), digits.begin(), digits.end());
    }
  }
}

Row Geometry::point_vector(PointIndex i) const {
  auto p = point(i);
  return Row(p.begin(), p.end());
}

bool Geometry::try_index_of(std::span<const Element> v, PointIndex& out) const noexcept {
  int lead = 0;
  while (lead < k_ && v[lead] == 0) ++lead;
  if (lead == k_) return false;
  const Element scale = field_.inv(v[lead]);
  const int q = field_.order();
  std::uint64_t t = 0;
  for (int c = lead + 1; c < k_; ++c) t = t * q + field_.mul(v[c], scale);
  const int tail = k_ - 1 - lead;
  out = static_cast<PointIndex>((qpow_[tail] - 1) / (q - 1) + t);
  return true;
}

PointIndex Geometry::index_of(std::span<const Element> v) const {
  if (v.size() != static_cast<std::size_t>(k_)) throw Error(ErrorKind::OutOfRange, "vector length differs from k");
  PointIndex idx = 0;
  if (!try_index_of(v, idx)) throw Error(ErrorKind::OutOfRange, "zero vector is not a point");
  return idx;
}

PointIndex Geometry::unit_point(int coordinate) const {
  Row v(k_, 0);
  v.at(coordinate) = 1;
  return index_of(v);
}

bool Geometry::incident(PointIndex point_idx, PointIndex hyperplane) const noexcept {
  auto a = point(point_idx);
  auto b = point(hyperplane);
  Element s = 0;
  for (int c = 0; c < k_; ++c) s = field_.add(s, field_.mul(a[c], b[c]));
  return s == 0;
}

void Geometry::build_hyperplanes() const {
  std::call_once(hyper_once_, [this] {
    hyper_offsets_.assign(num_points_ + 1, 0);
    for (PointIndex j = 0; j < num_points_; ++j) {
      for (PointIndex i = 0; i < num_points_; ++i)
        if (incident(i, j)) hyper_points_.push_back(i);
      hyper_offsets_[j + 1] = static_cast<std::uint32_t>(hyper_points_.size());
    }
  });
}

std::span<const PointIndex> Geometry::hyperplane_points(PointIndex j) const {
  build_hyperplanes();
  return {hyper_points_.data() + hyper_offsets_[j], hyper_offsets_[j + 1] - hyper_offsets_[j]};
}

std::vector<PointIndex> Geometry::span_of(std::span<const PointIndex> points) const {
  Matrix rows;
  rows.reserve(points.size());
  for (PointIndex p : points) rows.push_back(point_vector(p));
  const Matrix basis = row_reduce(field_, std::move(rows));
  const int r = static_cast<int>(basis.size());
  std::vector<PointIndex> out;
  if (r == 0) return out;
  const int q = field_.order();
  std::vector<Element> coef(r, 0);
  Row v(k_);
  // Enumerate coefficient vectors whose first nonzero entry is 1.
  for (int lead = 0; lead < r; ++lead) {
    std::fill(coef.begin(), coef.end(), 0);
    coef[lead] = 1;
    const int tail = r - 1 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < tail; ++i) total *= q;
    for (std::uint64_t t = 0; t < total; ++t) {
      std::uint64_t rest = t;
      for (int c = r - 1; c > lead; --c) {
        coef[c] = static_cast<Element>(rest % q);
        rest /= q;
      }
      std::fill(v.begin(), v.end(), 0);
      for (int i = 0; i < r; ++i) {
        if (coef[i] == 0) continue;
        for (int c = 0; c < k_; ++c) v[c] = field_.add(v[c], field_.mul(coef[i], basis[i][c]));
      }
      out.push_back(index_of(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Geometry::rank_of(std::span<const PointIndex> points) const {
  Matrix rows;
  rows.reserve(points.size());
  for (PointIndex p : points) rows.push_back(point_vector(p));
  return rank(field_, rows);
}

void Geometry::build_lines() const {
  std::call_once(line_once_, [this] {
    if (k_ < 2) return;
    points_per_line_ = static_cast<std::size_t>(field_.order()) + 1;
    for (PointIndex i = 0; i < num_points_; ++i) {
      for (PointIndex j = i + 1; j < num_points_; ++j) {
        const PointIndex pair[2] = {i, j};
        auto pts = span_of(pair);
        // Register each line once, from its two smallest points.
        if (pts[0] == i && pts[1] == j) line_points_.insert(line_points_.end(), pts.begin(), pts.end());
      }
    }
    const std::size_t nl = line_points_.size() / points_per_line_;
    std::vector<std::uint32_t> counts(num_points_ + 1, 0);
    for (PointIndex p : line_points_) ++counts[p + 1];
    through_offsets_.assign(num_points_ + 1, 0);
    for (std::size_t p = 0; p < num_points_; ++p) through_offsets_[p + 1] = through_offsets_[p] + counts[p + 1];
    through_lines_.assign(line_points_.size(), 0);
    std::vector<std::uint32_t> fill(through_offsets_.begin(), through_offsets_.end() - 1);
    for (std::size_t l = 0; l < nl; ++l)
      for (std::size_t s = 0; s < points_per_line_; ++s) {
        const PointIndex p = line_points_[l * points_per_line_ + s];
        through_lines_[fill[p]++] = static_cast<std::uint32_t>(l);
      }
  });
}

std::size_t Geometry::num_lines() const {
  build_lines();
  return points_per_line_ == 0 ? 0 : line_points_.size() / points_per_line_;
}

std::span<const PointIndex> Geometry::line_points(std::size_t line) const {
  build_lines();
  return {line_points_.data() + line * points_per_line_, points_per_line_};
}

std::span<const std::uint32_t> Geometry::lines_through(PointIndex p) const {
  build_lines();
  if (through_offsets_.empty()) return {};
  return {through_lines_.data() + through_offsets_[p], through_offsets_[p + 1] - through_offsets_[p]};
}

std::size_t Geometry::line_of(PointIndex a, PointIndex b) const {
  if (a == b) throw Error(ErrorKind::OutOfRange, "line_of needs two distinct points");
  for (std::uint32_t l : lines_through(a)) {
    auto pts = line_points(l);
    if (std::find(pts.begin(), pts.end(), b) != pts.end()) return l;
  }
  throw Error(ErrorKind::OutOfRange, "no line through the given points");
}

std::vector<std::vector<PointIndex>> Geometry::subspaces(int dim) const {
  if (dim < 1 || dim > k_) throw Error(ErrorKind::OutOfRange, "subspace dimension out of range");
  const int q = field_.order();
  std::vector<std::vector<PointIndex>> out;
  std::vector<int> piv(dim);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // Free entries of an RREF matrix with these pivot columns.
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < dim; ++r)
      for (int c = piv[r] + 1; c < k_; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
    std::vector<Element> vals(free.size(), 0);
    while (true) {
      Matrix basis(dim, Row(k_, 0));
      for (int r = 0; r < dim; ++r) basis[r][piv[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) basis[free[f].first][free[f].second] = vals[f];
      std::vector<PointIndex> gens;
      for (const auto& row : basis) gens.push_back(index_of(row));
      out.push_back(span_of(gens));
      std::size_t pos = 0;
      while (pos < vals.size() && ++vals[pos] == q) vals[pos++] = 0;
      if (pos == vals.size()) break;
    }
    int i = dim - 1;
    while (i >= 0 && piv[i] == k_ - dim + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

GeometryPtr build_geometry(const FieldContext& field, int k, std::size_t point_cap) {
  return std::make_shared<const Geometry>(field, k, point_cap);
}

PointEncoding parse_encoding(std::string_view name) {
  if (name == "binary") return PointEncoding::Binary;
  if (name == "lexindex") return PointEncoding::LexIndex;
  throw Error(ErrorKind::ParseError, "unknown point encoding '" + std::string(name) + "'");
}

std::string_view to_string(PointEncoding e) { return e == PointEncoding::Binary ? "binary" : "lexindex"; }

PointIndex decode_point(const Geometry& g, std::uint64_t code, PointEncoding encoding) {
  if (encoding == PointEncoding::LexIndex) {
    if (code >= g.num_points()) throw Error(ErrorKind::OutOfRange, "lexindex " + std::to_string(code) + " out of range");
    return static_cast<PointIndex>(code);
  }
  if (g.q() != 2) throw Error(ErrorKind::WrongField, "binary point encoding requires q=2");
  if (g.k() >= 64 || code < 1 || code >= (std::uint64_t{1} << g.k()))
    throw Error(ErrorKind::OutOfRange, "binary code " + std::to_string(code) + " out of range");
  Row v(g.k());
  for (int c = 0; c < g.k(); ++c) v[c] = static_cast<Element>((code >> (g.k() - 1 - c)) & 1u);
  return g.index_of(v);
}

std::uint64_t encode_point(const Geometry& g, PointIndex point, PointEncoding encoding) {
  if (point >= g.num_points()) throw Error(ErrorKind::OutOfRange, "point index out of range");
  if (encoding == PointEncoding::LexIndex) return point;
  if (g.q() != 2) throw Error(ErrorKind::WrongField, "binary point encoding requires q=2");
  std::uint64_t code = 0;
  for (Element e : g.point(point)) code = (code << 1) | e;
  return code;
}

PointMultiset::PointMultiset(GeometryPtr geometry)
    : geometry_(std::move(geometry)), mults_(geometry_->num_points(), 0) {}

void PointMultiset::set(PointIndex p, std::uint32_t m) { mults_.at(p) = m; }
void PointMultiset::add(PointIndex p, std::uint32_t m) { mults_.at(p) += m; }
void PointMultiset::remove(PointIndex p, std::uint32_t m) {
  if (mults_.at(p) < m) throw Error(ErrorKind::InconsistentInput, "negative multiplicity");
  mults_[p] -= m;
}

std::uint64_t PointMultiset::cardinality() const noexcept {
  return std::accumulate(mults_.begin(), mults_.end(), std::uint64_t{0});
}

std::uint32_t PointMultiset::max_multiplicity() const noexcept {
  return mults_.empty() ? 0 : *std::max_element(mults_.begin(), mults_.end());
}

std::vector<PointIndex> PointMultiset::support() const {
  std::vector<PointIndex> s;
  for (PointIndex p = 0; p < mults_.size(); ++p)
    if (mults_[p] > 0) s.push_back(p);
  return s;
}

std::uint64_t PointMultiset::hyperplane_multiplicity(PointIndex h) const {
  std::uint64_t s = 0;
  for (PointIndex p : geometry_->hyperplane_points(h)) s += mults_[p];
  return s;
}

std::uint64_t PointMultiset::line_multiplicity(std::size_t line) const {
  std::uint64_t s = 0;
  for (PointIndex p : geometry_->line_points(line)) s += mults_[p];
  return s;
}

std::vector<std::uint64_t> PointMultiset::hyperplane_multiplicities() const {
  std::vector<std::uint64_t> out(geometry_->num_hyperplanes(), 0);
  // Hyperplanes through P are listed by hyperplane_points(P).
  for (PointIndex p = 0; p < mults_.size(); ++p) {
    if (mults_[p] == 0) continue;
    for (PointIndex h : geometry_->hyperplane_points(p)) out[h] += mults_[p];
  }
  return out;
}

std::uint64_t PointMultiset::max_hyperplane_multiplicity() const {
  const auto hm = hyperplane_multiplicities();
  return hm.empty() ? 0 : *std::max_element(hm.begin(), hm.end());
}

bool PointMultiset::is_spanning() const {
  const auto s = support();
  return geometry_->rank_of(s) == geometry_->k();
}

std::uint64_t PointMultiset::minimum_distance() const {
  if (geometry_->k() == 1) return cardinality();
  return cardinality() - max_hyperplane_multiplicity();
}

bool operator==(const PointMultiset& a, const PointMultiset& b) {
  return a.geometry_ == b.geometry_ && a.mults_ == b.mults_;
}

PointMultiset characteristic(const GeometryPtr& g, std::span<const PointIndex> points) {
  PointMultiset m(g);
  for (PointIndex p : points) m.add(p);
  return m;
}

PointMultiset multiset_add(const PointMultiset& a, const PointMultiset& b) {
  if (a.geometry_ptr() != b.geometry_ptr() &&
      (a.geometry().q() != b.geometry().q() || a.geometry().k() != b.geometry().k()))
    throw Error(ErrorKind::GeometryMismatch, "multisets live in different geometries");
  PointMultiset out = a;
  for (PointIndex p = 0; p < b.mults().size(); ++p) out.add(p, b[p]);
  return out;
}

PointMultiset multiset_scale(std::uint32_t t, const PointMultiset& a) {
  PointMultiset out(a.geometry_ptr());
  for (PointIndex p = 0; p < a.mults().size(); ++p) out.set(p, t * a[p]);
  return out;
}

PointMultiset pad_multiset(const PointMultiset& m, std::uint64_t target_n) {
  const std::uint64_t n = m.cardinality();
  if (n == 0) throw Error(ErrorKind::EmptyMultiset, "cannot pad an empty multiset");
  if (target_n < n) throw Error(ErrorKind::OutOfRange, "target length below current cardinality");
  PointMultiset out = m;
  const auto s = m.support();
  out.add(s.front(), static_cast<std::uint32_t>(target_n - n));
  return out;
}

}  // namespace lrc
