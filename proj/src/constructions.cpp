#include "lrc/constructions.hpp"

#include "lrc/error.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace lrc {

namespace {

long long gauss1(int n, int q) { return static_cast<long long>(gaussian_binomial(n, 1, q)); }

PointIndex point_of(const Geometry& g, const std::vector<int>& ones) {
  Row v(g.k(), 0);
  for (int i : ones) v.at(i) = 1;
  return g.index_of(v);
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::ParseError, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

PointMultiset simplex(const GeometryPtr& g, std::uint32_t t) {
  if (t < 1) throw Error(ErrorKind::OutOfRange, "simplex multiplicity must be positive");
  PointMultiset m(g);
  for (PointIndex p = 0; p < g->num_points(); ++p) m.set(p, t);
  return m;
}

std::string SolomonStifflerType::to_string() const {
  std::string s = "[" + std::to_string(sigma) + ";";
  for (std::size_t i = 0; i < eps.size(); ++i) s += (i ? "," : "") + std::to_string(eps[i]);
  return s + "]";
}

SolomonStifflerType parse_ss_type(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
  const auto sep = s.find_first_of(":;");
  if (sep == std::string::npos) throw Error(ErrorKind::ParseError, "type must look like sigma:e,...,e");
  SolomonStifflerType t;
  t.sigma = parse_int(std::string_view(s).substr(0, sep));
  std::string_view rest = std::string_view(s).substr(sep + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    t.eps.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (t.eps.empty()) throw Error(ErrorKind::ParseError, "type needs at least one epsilon");
  if (t.sigma < 1) throw Error(ErrorKind::ParseError, "sigma must be positive");
  for (int e : t.eps)
    if (e < 0) throw Error(ErrorKind::ParseError, "epsilons must be non-negative");
  return t;
}

long long ss_length(const SolomonStifflerType& t, int q) {
  const int k = t.k();
  long long n = t.sigma * gauss1(k, q);
  for (int i = 0; i <= k - 2; ++i) n -= t.eps_at(i) * gauss1(i + 1, q);
  return n;
}

long long ss_distance(const SolomonStifflerType& t, int q) {
  const int k = t.k();
  long long n_minus_d = t.sigma * gauss1(k - 1, q);
  for (int i = 1; i <= k - 2; ++i) n_minus_d -= t.eps_at(i) * gauss1(i, q);
  return ss_length(t, q) - n_minus_d;
}

bool ss_locality2_check(const SolomonStifflerType& t, int q) {
  const int k = t.k();
  long long removed = 0;
  for (int i = 0; i <= k - 2; ++i) removed += t.eps_at(i) * gauss1(i + 1, q);
  return removed < t.sigma * gauss1(k - 1, q);
}

SolomonStifflerType griesmer_type(int k, long long d, int q) {
  if (k < 2) throw Error(ErrorKind::BadK, "Solomon-Stiffler types need k >= 2");
  if (d < 1) throw Error(ErrorKind::OutOfRange, "d must be positive");
  long long qk1 = 1;
  for (int i = 0; i < k - 1; ++i) qk1 *= q;
  SolomonStifflerType t;
  t.sigma = static_cast<int>((d + qk1 - 1) / qk1);
  long long s = t.sigma * qk1 - d;
  std::vector<int> digits;
  for (int i = 0; i <= k - 2; ++i) {
    digits.push_back(static_cast<int>(s % q));
    s /= q;
  }
  t.eps.assign(digits.rbegin(), digits.rend());
  return t;
}

PointMultiset solomon_stiffler(const GeometryPtr& g, const SolomonStifflerType& type, std::uint64_t node_limit) {
  const int k = g->k();
  const int q = g->q();
  if (type.k() != k) throw Error(ErrorKind::GeometryMismatch, "type " + type.to_string() + " is not for k=" + std::to_string(k));
  long long removed = 0;
  for (int i = 0; i <= k - 2; ++i) removed += type.eps_at(i) * gauss1(i + 1, q);
  if (removed > type.sigma * gauss1(k, q))
    throw Error(ErrorKind::InfeasibleType, "removals exceed the ambient multiplicity for " + type.to_string());

  // Slots in placement order: larger subspaces first.
  std::vector<int> slot_dim;
  for (int i = k - 2; i >= 0; --i)
    for (int e = 0; e < type.eps_at(i); ++e) slot_dim.push_back(i + 1);

  std::vector<std::vector<std::vector<PointIndex>>> candidates(k + 1);
  std::vector<bool> is_unit(g->num_points(), false);
  for (int i = 0; i < k; ++i) is_unit[g->unit_point(i)] = true;
  for (int dim : slot_dim) {
    if (!candidates[dim].empty()) continue;
    auto subs = g->subspaces(dim);
    std::stable_partition(subs.begin(), subs.end(), [&](const std::vector<PointIndex>& s) {
      return std::count_if(s.begin(), s.end(), [&](PointIndex p) { return is_unit[p]; }) == dim;
    });
    candidates[dim] = std::move(subs);
  }

  std::vector<std::uint32_t> cover(g->num_points(), 0);
  std::vector<std::size_t> choice(slot_dim.size(), 0);
  std::uint64_t nodes = 0;
  const auto sigma = static_cast<std::uint32_t>(type.sigma);
  auto fits = [&](const std::vector<PointIndex>& s) {
    return std::all_of(s.begin(), s.end(), [&](PointIndex p) { return cover[p] < sigma; });
  };
  auto place = [&](const std::vector<PointIndex>& s, int delta) {
    for (PointIndex p : s) cover[p] += delta;
  };
  auto rec = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == slot_dim.size()) return true;
    const int dim = slot_dim[slot];
    const auto& cand = candidates[dim];
    // Equal-dimension slots take non-decreasing candidate indices.
    const std::size_t start = (slot > 0 && slot_dim[slot - 1] == dim) ? choice[slot - 1] : 0;
    for (std::size_t c = start; c < cand.size(); ++c) {
      if (++nodes > node_limit) return false;
      if (!fits(cand[c])) continue;
      place(cand[c], 1);
      choice[slot] = c;
      if (self(self, slot + 1)) return true;
      place(cand[c], -1);
    }
    return false;
  };
  if (!rec(rec, 0))
    throw Error(ErrorKind::NoPlacement, "no subspace placement found for " + type.to_string() +
                                            (nodes > node_limit ? " (node limit reached)" : ""));

  PointMultiset m(g);
  for (PointIndex p = 0; p < g->num_points(); ++p) m.set(p, sigma - cover[p]);
  return m;
}

LinearCode reed_muller_first_order(int m) {
  if (m < 1 || m > 20) throw Error(ErrorKind::OutOfRange, "Reed-Muller order parameter out of range");
  const int n = 1 << m;
  Matrix rows(m + 1, Row(n, 0));
  for (int x = 0; x < n; ++x) {
    rows[0][x] = 1;
    for (int i = 0; i < m; ++i) rows[i + 1][x] = static_cast<Element>((x >> (m - 1 - i)) & 1);
  }
  return LinearCode(make_field(2), n, rows);
}

LinearCode parity_check_code(const FieldContext& f, int k) {
  if (k < 1) throw Error(ErrorKind::BadK, "k must be positive");
  Matrix rows(k, Row(k + 1, 0));
  for (int i = 0; i < k; ++i) {
    rows[i][i] = 1;
    rows[i][k] = 1;
  }
  return LinearCode(f, k + 1, rows);
}

PointMultiset line_construction(const LinearCode& c_prime) {
  if (c_prime.q() != 2) throw Error(ErrorKind::WrongField, "line construction is binary");
  if (c_prime.k() < 2) throw Error(ErrorKind::SmallK, "line construction needs k' >= 2");
  if (!is_projective(c_prime)) throw Error(ErrorKind::NotProjective, "input code must be projective");
  const int k = c_prime.k() + 1;
  auto g = build_geometry(c_prime.field(), k);
  PointMultiset m(g);
  const PointIndex apex = g->unit_point(k - 1);
  m.set(apex, 1);
  for (int j = 0; j < c_prime.n(); ++j) {
    Row v = c_prime.column(j);
    v.push_back(0);
    m.set(g->index_of(v), 1);
    v.back() = 1;
    m.set(g->index_of(v), 1);
  }
  return m;
}

PointMultiset cycle_construction_d3(int k) {
  if (k < 4) throw Error(ErrorKind::SmallK, "cycle construction needs k >= 4");
  auto g = build_geometry(make_field(2), k);
  PointMultiset m(g);
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    m.set(point_of(*g, {i}), 1);
    m.set(point_of(*g, {i, j}), 1);
  }
  return m;
}

PointMultiset d4_construction(int k, int q) {
  const int t = k / 2;
  if (t < 2) throw Error(ErrorKind::SmallK, "d=4 construction needs k >= 4");
  if (k % 2 == 1 && q != 2) throw Error(ErrorKind::WrongField, "odd-dimension d=4 construction is binary");
  auto g = build_geometry(make_field(q), k);
  PointMultiset m(g);
  // 0-based: e_{2i-1} -> coordinate 2i-2, e_{2i} -> 2i-1
  for (int i = 1; i <= t; ++i) {
    m.add(point_of(*g, {2 * i - 2}));
    m.add(point_of(*g, {2 * i - 1}));
    m.add(point_of(*g, {2 * i - 2, 2 * i - 1}));
  }
  std::vector<int> odd, even, all;
  for (int i = 1; i <= t; ++i) {
    odd.push_back(2 * i - 2);
    even.push_back(2 * i - 1);
  }
  if (k % 2 == 0) {
    for (int i = 0; i < 2 * t; ++i) all.push_back(i);
    m.add(point_of(*g, odd));
    m.add(point_of(*g, even));
    m.add(point_of(*g, all));
  } else {
    odd.push_back(2 * t);  // sum over i = 1..t+1 of e_{2i-1}
    for (int i = 0; i <= 2 * t; ++i) all.push_back(i);
    m.add(point_of(*g, odd));
    m.add(point_of(*g, even));
    m.add(point_of(*g, all));
    m.add(point_of(*g, {2 * t}), 2);
  }
  return m;
}

R1Variant parse_r1_variant(std::string_view name) {
  if (name == "double") return R1Variant::Double;
  if (name == "add_double_ambient" || name == "add-double-ambient") return R1Variant::AddDoubleAmbient;
  if (name == "triple_minus_one" || name == "triple-minus-one") return R1Variant::TripleMinusOne;
  throw Error(ErrorKind::UnknownConstruction, "unknown r=1 variant '" + std::string(name) + "'");
}

PointMultiset r1_construction(const PointMultiset& m, R1Variant variant) {
  if (m.cardinality() == 0) throw Error(ErrorKind::EmptyInput, "input multiset is empty");
  switch (variant) {
    case R1Variant::Double:
      return multiset_scale(2, m);
    case R1Variant::AddDoubleAmbient:
      return multiset_add(m, simplex(m.geometry_ptr(), 2));
    case R1Variant::TripleMinusOne: {
      PointMultiset out = multiset_scale(3, m);
      out.remove(m.support().front());
      return out;
    }
  }
  throw Error(ErrorKind::UnknownConstruction, "unknown r=1 variant");
}

PointMultiset small_length_optimum(int k, int q, int r) {
  if (k < 1) throw Error(ErrorKind::BadK, "k must be positive");
  auto g = build_geometry(make_field(q), k);
  PointMultiset m(g);
  if (r == 1) {
    for (int i = 0; i < k; ++i) m.add(point_of(*g, {i}), 2);
  } else if (r == 2) {
    for (int i = 0; i + 1 < k; i += 2) {
      m.add(point_of(*g, {i}));
      m.add(point_of(*g, {i + 1}));
      m.add(point_of(*g, {i, i + 1}));
    }
    if (k % 2 == 1) m.add(point_of(*g, {k - 1}), 2);
  } else if (r == k) {
    std::vector<int> all;
    for (int i = 0; i < k; ++i) {
      m.add(point_of(*g, {i}));
      all.push_back(i);
    }
    m.add(point_of(*g, all));
  } else {
    throw Error(ErrorKind::BadR, "small-length optimum is known for r in {1, 2, k}");
  }
  return m;
}

SmallDimensionResult small_dimension_exact(int k, long long d, int q, int r) {
  if (d < 1) throw Error(ErrorKind::OutOfRange, "d must be positive");
  if (r < 1) throw Error(ErrorKind::BadR, "r must be positive");
  if (k != 1 && k != 2) throw Error(ErrorKind::BadK, "closed forms cover k in {1, 2}");
  auto g = build_geometry(make_field(q), k);
  PointMultiset m(g);
  if (k == 1) {
    const long long n = std::max(2LL, d);
    m.set(0, static_cast<std::uint32_t>(n));
    return {n, m};
  }
  if (r == 1 && d < 2LL * q) {
    const long long half = (d + 1) / 2;
    for (long long p = 0; p <= half; ++p) m.set(static_cast<PointIndex>(p), 2);
    return {2 * half + 2, m};
  }
  if (r >= 2 && d == 1) {
    // A doubled point does not span; three points of the line do.
    for (PointIndex p = 0; p < 3; ++p) m.set(p, 1);
    return {3, m};
  }
  const long long a = d / q;
  const long long b = d % q;
  for (PointIndex p = 0; p < g->num_points(); ++p) m.set(p, static_cast<std::uint32_t>(a));
  if (b > 0)
    for (long long p = 0; p <= b; ++p) m.add(static_cast<PointIndex>(p));
  return {d + (d + q - 1) / q, m};
}

}  // namespace lrc
