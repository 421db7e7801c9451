#include "lrc/locality.hpp"

#include "lrc/error.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace lrc {

namespace {

// Columns of a generator matrix grouped by the point they span.
class ColumnIndex {
 public:
  explicit ColumnIndex(const LinearCode& c) : f_(c.field()), k_(c.k()) {
    std::uint64_t limit = 1;
    for (int i = 0; i < k_; ++i) {
      if (limit > (UINT64_MAX / 16)) throw Error(ErrorKind::SizeCap, "column keys exceed 64 bits");
      limit *= static_cast<std::uint64_t>(f_.order());
    }
    const int n = c.n();
    cols_.reserve(n);
    key_.assign(n, 0);
    lead_.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      cols_.push_back(c.column(j));
      if (canon(cols_[j], key_[j], lead_[j])) {
        by_key_[key_[j]].push_back(j);
        nonzero_.push_back(j);
      }
    }
  }

  const Row& col(int j) const { return cols_[j]; }
  bool zero(int j) const { return lead_[j] == 0; }
  const std::vector<int>& nonzero() const { return nonzero_; }

  // v = lead * canonical(v); returns false for the zero vector.
  bool canon(const Row& v, std::uint64_t& key, Element& lead) const {
    int first = 0;
    while (first < k_ && v[first] == 0) ++first;
    if (first == k_) {
      lead = 0;
      return false;
    }
    lead = v[first];
    const Element inv = f_.inv(lead);
    std::uint64_t x = 0;
    for (int i = 0; i < k_; ++i) x = x * f_.order() + f_.mul(v[i], inv);
    key = x;
    return true;
  }

  // Smallest coordinate j > after, j != skip, spanning the same point as v.
  int first_match(const Row& v, int after, int skip, Element& scale) const {
    std::uint64_t key;
    Element lead;
    if (!canon(v, key, lead)) return -1;
    auto it = by_key_.find(key);
    if (it == by_key_.end()) return -1;
    for (int j : it->second) {
      if (j <= after || j == skip) continue;
      scale = f_.div(lead, lead_[j]);  // v = scale * column j
      return j;
    }
    return -1;
  }

  std::uint64_t key(int j) const { return key_[j]; }
  const std::vector<int>* with_key(std::uint64_t key) const {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &it->second;
  }

 private:
  const FieldContext& f_;
  int k_;
  std::vector<Row> cols_;
  std::vector<std::uint64_t> key_;
  std::vector<Element> lead_;
  std::vector<int> nonzero_;
  std::unordered_map<std::uint64_t, std::vector<int>> by_key_;
};

// Lexicographically smallest recovery set of exactly s coordinates for i.
std::optional<RecoverySet> search(const ColumnIndex& idx, const FieldContext& f, int i, int s) {
  const Row& ci = idx.col(i);
  const int k = static_cast<int>(ci.size());
  if (s == 1) {
    Element b = 0;
    const int j = idx.first_match(ci, -1, i, b);
    if (j < 0) return std::nullopt;
    return RecoverySet{i, {j}, {f.neg(b)}, 1};
  }
  std::vector<int> cand;
  for (int j : idx.nonzero())
    if (j != i) cand.push_back(j);
  const int m = s - 1;
  if (static_cast<int>(cand.size()) < s) return std::nullopt;
  const int q = f.order();
  std::vector<int> pos(m);
  for (int t = 0; t < m; ++t) pos[t] = t;
  std::vector<Element> a(m);
  Row v(k);
  while (true) {
    const int last = cand[pos[m - 1]];
    int best_j = -1;
    std::vector<Element> best_a;
    Element best_b = 0;
    std::fill(a.begin(), a.end(), 1);
    while (true) {
      v = ci;
      for (int t = 0; t < m; ++t) {
        const Row& ct = idx.col(cand[pos[t]]);
        for (int r = 0; r < k; ++r) v[r] = f.sub(v[r], f.mul(a[t], ct[r]));
      }
      Element b = 0;
      const int j = idx.first_match(v, last, i, b);
      if (j >= 0 && (best_j < 0 || j < best_j)) {
        best_j = j;
        best_a = a;
        best_b = b;
      }
      int t = 0;
      while (t < m && ++a[t] == q) a[t++] = 1;
      if (t == m) break;
    }
    if (best_j >= 0) {
      RecoverySet rs{i, {}, {}, 1};
      for (int t = 0; t < m; ++t) {
        rs.set.push_back(cand[pos[t]]);
        rs.coefficients.push_back(f.neg(best_a[t]));
      }
      rs.set.push_back(best_j);
      rs.coefficients.push_back(f.neg(best_b));
      return rs;
    }
    int t = m - 1;
    const int total = static_cast<int>(cand.size());
    while (t >= 0 && pos[t] == total - m + t) --t;
    if (t < 0) return std::nullopt;
    ++pos[t];
    for (int u = t + 1; u < m; ++u) pos[u] = pos[u - 1] + 1;
  }
}

// Column i lies in the span of the remaining columns.
bool recoverable(const LinearCode& c, int i) {
  Matrix rest = c.generator();
  for (auto& r : rest) r.erase(r.begin() + i);
  return rank(c.field(), rest) == c.k();
}

}  // namespace

Row RecoverySet::dual_word(int n) const {
  Row w(n, 0);
  w[coordinate] = self_coefficient;
  for (std::size_t t = 0; t < set.size(); ++t) w[set[t]] = coefficients[t];
  return w;
}

LocalityResult locality(const LinearCode& c) {
  LocalityResult res;
  const int n = c.n();
  res.per_coordinate.assign(n, kInfiniteLocality);
  res.recovery.assign(n, std::nullopt);
  if (c.k() == 0) {
    // Every codeword is zero; the empty set recovers each coordinate.
    res.r = 0;
    res.degenerate = true;
    std::fill(res.per_coordinate.begin(), res.per_coordinate.end(), 0);
    for (int i = 0; i < n; ++i) res.recovery[i] = RecoverySet{i, {}, {}, 1};
    return res;
  }
  ColumnIndex idx(c);
  bool all_finite = true;
  int worst = 0;
  for (int i = 0; i < n; ++i) {
    if (idx.zero(i)) {
      res.degenerate = true;
      all_finite = false;
      continue;
    }
    if (!recoverable(c, i)) {
      all_finite = false;
      continue;
    }
    for (int s = 1; s <= c.k(); ++s) {
      if (auto rs = search(idx, c.field(), i, s)) {
        res.per_coordinate[i] = s;
        res.recovery[i] = std::move(rs);
        worst = std::max(worst, s);
        break;
      }
    }
    if (res.per_coordinate[i] == kInfiniteLocality) throw Error(ErrorKind::InconsistentInput, "recovery search failed");
  }
  res.r = all_finite ? worst : kInfiniteLocality;
  return res;
}

bool has_locality(const LinearCode& c, int r) {
  if (r < 1) throw Error(ErrorKind::BadR, "locality target must be at least 1");
  if (c.k() == 0) return true;
  ColumnIndex idx(c);
  for (int i = 0; i < c.n(); ++i) {
    if (idx.zero(i)) return false;
    bool ok = false;
    for (int s = 1; s <= std::min(r, c.k()) && !ok; ++s) ok = search(idx, c.field(), i, s).has_value();
    if (!ok) return false;
  }
  return true;
}

Element recover_symbol(const FieldContext& f, const RecoverySet& rs, const Row& word) {
  Element acc = 0;
  for (std::size_t t = 0; t < rs.set.size(); ++t) acc = f.add(acc, f.mul(rs.coefficients[t], word[rs.set[t]]));
  return f.neg(f.div(acc, rs.self_coefficient));
}

nlohmann::json certificate_to_json(const LinearCode& c, const LocalityResult& res) {
  nlohmann::json j;
  j["q"] = c.q();
  j["n"] = c.n();
  j["k"] = c.k();
  if (res.infinite())
    j["locality"] = "infinite";
  else
    j["locality"] = res.r;
  j["degenerate"] = res.degenerate;
  auto coords = nlohmann::json::array();
  for (int i = 0; i < c.n(); ++i) {
    nlohmann::json e;
    e["coordinate"] = i;
    if (!res.recovery[i]) {
      e["locality"] = "infinite";
    } else {
      const auto& rs = *res.recovery[i];
      e["locality"] = res.per_coordinate[i];
      e["recovery_set"] = rs.set;
      auto dual = nlohmann::json::object();
      dual[std::to_string(i)] = rs.self_coefficient;
      for (std::size_t t = 0; t < rs.set.size(); ++t) dual[std::to_string(rs.set[t])] = rs.coefficients[t];
      e["dual_word"] = dual;
    }
    coords.push_back(std::move(e));
  }
  j["coordinates"] = coords;
  return j;
}

int dual_distance(const LinearCode& c) {
  if (c.k() == 0) return c.n() > 0 ? 1 : 0;
  ColumnIndex idx(c);
  if (idx.nonzero().size() < static_cast<std::size_t>(c.n())) return 1;
  for (int s = 1; s <= c.k(); ++s)
    for (int i = 0; i < c.n(); ++i)
      if (search(idx, c.field(), i, s)) return s + 1;
  return 0;
}

std::uint64_t dual_weight3_count(const LinearCode& c) {
  const int dd = dual_distance(c);
  if (dd != 0 && dd < 3) throw Error(ErrorKind::PreconditionFailed, "dual distance is below 3");
  const auto& f = c.field();
  ColumnIndex idx(c);
  const int q = f.order();
  const int n = c.n();
  const int k = c.k();
  std::uint64_t triples = 0;
  Row v(k);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int lam = 1; lam < q; ++lam) {
        for (int r = 0; r < k; ++r) v[r] = f.add(idx.col(a)[r], f.mul(static_cast<Element>(lam), idx.col(b)[r]));
        std::uint64_t key;
        Element lead;
        if (!idx.canon(v, key, lead)) continue;
        if (const auto* list = idx.with_key(key))
          for (int j : *list) triples += j > b;
      }
  return triples * static_cast<std::uint64_t>(q - 1);
}

std::string_view to_string(ScreenResult r) {
  return r == ScreenResult::LocalityAbove2 ? "locality_gt_2" : "inconclusive";
}

ScreenResult weight3_screen(const LinearCode& c) {
  if (dual_distance(c) != 3) throw Error(ErrorKind::PreconditionFailed, "weight-3 screen needs dual distance exactly 3");
  const std::uint64_t words = dual_weight3_count(c);
  return 3 * words < static_cast<std::uint64_t>(c.q() - 1) * c.n() ? ScreenResult::LocalityAbove2
                                                                   : ScreenResult::Inconclusive;
}

ScreenResult parity_extension_screen(const LinearCode& c) {
  if (c.q() != 2) throw Error(ErrorKind::WrongField, "parity extension screen needs q=2");
  if (minimum_distance(c) % 2 == 0) throw Error(ErrorKind::EvenDistance, "minimum distance is even");
  const LinearCode ext = extend_parity(c);
  const int dd = dual_distance(ext);
  if (dd != 0 && dd < 3) return ScreenResult::Inconclusive;
  // Dual words of c, padded with a zero, are dual words of ext. Locality 2
  // would need every coordinate of c inside one of ext's weight-3 dual words.
  const std::uint64_t words = dual_weight3_count(ext);
  return 3 * words < static_cast<std::uint64_t>(c.n()) ? ScreenResult::LocalityAbove2 : ScreenResult::Inconclusive;
}

bool locality_geometric(const PointMultiset& m, int r) {
  if (r < 1) throw Error(ErrorKind::BadR, "locality target must be at least 1");
  if (!m.is_spanning()) throw Error(ErrorKind::NotSpanning, "multiset does not span; evaluate its code instead");
  const Geometry& g = m.geometry();
  if (r == 1) {
    for (auto x : m.mults())
      if (x == 1) return false;
    return true;
  }
  if (r == 2) {
    for (PointIndex p = 0; p < g.num_points(); ++p) {
      if (m[p] != 1) continue;
      bool covered = false;
      for (auto l : g.lines_through(p)) {
        int others = 0;
        for (PointIndex x : g.line_points(l)) others += (x != p && m[x] > 0);
        if (others >= 2) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }
  return has_locality(multiset_to_code(m), r);
}

}  // namespace lrc
