#include "lrc/error.hpp"
#include "lrc/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace lrc;

namespace {

// Brute-force GF(2) rank of bitmask vectors.
int rank_gf2(std::vector<unsigned> v) {
  int r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(v.begin(), v.end(), [bit](unsigned x) { return (x >> bit) & 1u; });
    if (it == v.end()) continue;
    const unsigned piv = *it;
    v.erase(it);
    for (auto& x : v)
      if ((x >> bit) & 1u) x ^= piv;
    ++r;
  }
  return r;
}

unsigned to_mask(const Geometry& g, PointIndex p) {
  unsigned m = 0;
  for (Element e : g.point(p)) m = (m << 1) | e;
  return m;
}

}  // namespace

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(5, 1, 2), 31u);
  EXPECT_EQ(gaussian_binomial(3, 1, 3), 13u);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35u);
  EXPECT_EQ(gaussian_binomial(5, 2, 2), 155u);
  EXPECT_EQ(gaussian_binomial(7, 0, 2), 1u);
  EXPECT_EQ(gaussian_binomial(6, 6, 3), 1u);
}

TEST(GaussianBinomial, BruteForceTwoDimSubspacesOfGF2_4) {
  std::set<std::set<unsigned>> spaces;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = 1; b < 16; ++b)
      if (a != b) spaces.insert({0u, a, b, a ^ b});
  EXPECT_EQ(spaces.size(), gaussian_binomial(4, 2, 2));
}

TEST(Geometry, Counts) {
  auto g23 = build_geometry(make_field(2), 3);
  EXPECT_EQ(g23->num_points(), 7u);
  EXPECT_EQ(g23->num_lines(), 7u);
  auto g33 = build_geometry(make_field(3), 3);
  EXPECT_EQ(g33->num_points(), 13u);
  EXPECT_EQ(g33->num_lines(), 13u);
  auto g25 = build_geometry(make_field(2), 5);
  EXPECT_EQ(g25->num_points(), 31u);
  EXPECT_EQ(g25->num_lines(), 155u);
  EXPECT_EQ(g25->num_hyperplanes(), 31u);
}

TEST(Geometry, SizeCap) {
  try {
    Geometry g(make_field(2), 12, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}

TEST(Geometry, IncidenceInvariants) {
  for (int q : {2, 3, 4}) {
    for (int k = 2; k <= (q == 2 ? 5 : 4); ++k) {
      auto g = build_geometry(make_field(q), k);
      const auto on_hyper = gaussian_binomial(k - 1, 1, q);
      for (PointIndex p = 0; p < g->num_points(); ++p) {
        EXPECT_EQ(g->hyperplane_points(p).size(), on_hyper);
        if (k >= 3) {
          EXPECT_EQ(g->lines_through(p).size(), on_hyper);
        }
        for (PointIndex h = 0; h < g->num_points(); ++h) EXPECT_EQ(g->incident(p, h), g->incident(h, p));
      }
      for (std::size_t l = 0; l < g->num_lines(); ++l) EXPECT_EQ(g->line_points(l).size(), static_cast<std::size_t>(q + 1));
      EXPECT_EQ(g->num_lines(), gaussian_binomial(k, 2, q));
    }
  }
}

TEST(Geometry, LexOrderAndCanonicalForm) {
  for (int q : {2, 3, 5}) {
    for (int k = 1; k <= 4; ++k) {
      auto g = build_geometry(make_field(q), k);
      // Oracle: enumerate all vectors in lex order, keep those with leading 1.
      std::vector<std::vector<int>> expected;
      std::vector<int> v(k, 0);
      int total = 1;
      for (int i = 0; i < k; ++i) total *= q;
      for (int x = 0; x < total; ++x) {
        for (int c = k - 1, y = x; c >= 0; --c, y /= q) v[c] = y % q;
        auto lead = std::find_if(v.begin(), v.end(), [](int e) { return e != 0; });
        if (lead != v.end() && *lead == 1) expected.push_back(v);
      }
      ASSERT_EQ(expected.size(), g->num_points());
      for (PointIndex p = 0; p < g->num_points(); ++p) {
        auto pt = g->point(p);
        EXPECT_TRUE(std::equal(pt.begin(), pt.end(), expected[p].begin()));
        EXPECT_EQ(g->index_of(pt), p);
      }
    }
  }
}

TEST(Geometry, DecodePoint) {
  auto g5 = build_geometry(make_field(2), 5);
  auto p = decode_point(*g5, 23, PointEncoding::Binary);
  EXPECT_EQ(g5->point_vector(p), (Row{1, 0, 1, 1, 1}));
  auto g3 = build_geometry(make_field(2), 3);
  EXPECT_EQ(g3->point_vector(decode_point(*g3, 4, PointEncoding::Binary)), (Row{1, 0, 0}));
  auto t3 = build_geometry(make_field(3), 3);
  EXPECT_EQ(t3->point_vector(decode_point(*t3, 0, PointEncoding::LexIndex)), (Row{0, 0, 1}));

  EXPECT_THROW(decode_point(*t3, 1, PointEncoding::Binary), Error);
  EXPECT_THROW(decode_point(*g3, 0, PointEncoding::Binary), Error);
  EXPECT_THROW(decode_point(*g3, 8, PointEncoding::Binary), Error);
  EXPECT_THROW(decode_point(*t3, 13, PointEncoding::LexIndex), Error);
  try {
    decode_point(*t3, 1, PointEncoding::Binary);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongField);
  }
}

TEST(Geometry, BinaryDecodingMatchesBits) {
  for (int k = 1; k <= 5; ++k) {
    auto g = build_geometry(make_field(2), k);
    for (std::uint64_t code = 1; code < (1u << k); ++code) {
      const auto p = decode_point(*g, code, PointEncoding::Binary);
      EXPECT_EQ(to_mask(*g, p), code);
      EXPECT_EQ(encode_point(*g, p, PointEncoding::Binary), code);
      EXPECT_EQ(encode_point(*g, p, PointEncoding::LexIndex), p);
    }
  }
}

TEST(Geometry, SubspaceEnumeration) {
  auto g = build_geometry(make_field(2), 4);
  for (int dim = 1; dim <= 4; ++dim) {
    auto subs = g->subspaces(dim);
    EXPECT_EQ(subs.size(), gaussian_binomial(4, dim, 2));
    std::set<std::vector<PointIndex>> uniq(subs.begin(), subs.end());
    EXPECT_EQ(uniq.size(), subs.size());
    for (const auto& s : subs) EXPECT_EQ(s.size(), gaussian_binomial(dim, 1, 2));
  }
  auto t = build_geometry(make_field(3), 3);
  EXPECT_EQ(t->subspaces(2).size(), 13u);
}

TEST(Multiset, LineAndHyperplaneMultiplicities) {
  auto g = build_geometry(make_field(2), 3);
  PointMultiset all(g);
  for (PointIndex p = 0; p < 7; ++p) all.set(p, 1);
  for (std::size_t l = 0; l < g->num_lines(); ++l) EXPECT_EQ(all.line_multiplicity(l), 3u);
  auto two = multiset_scale(2, all);
  for (std::size_t l = 0; l < g->num_lines(); ++l) EXPECT_EQ(two.line_multiplicity(l), 6u);

  auto g5 = build_geometry(make_field(2), 5);
  PointMultiset simplex(g5);
  for (PointIndex p = 0; p < 31; ++p) simplex.set(p, 1);
  for (PointIndex h = 0; h < 31; ++h) EXPECT_EQ(simplex.hyperplane_multiplicity(h), 15u);
  EXPECT_EQ(simplex.minimum_distance(), 16u);
}

TEST(Multiset, DoubleCounting) {
  auto g = build_geometry(make_field(3), 4);
  PointMultiset m(g);
  for (PointIndex p = 0; p < g->num_points(); ++p) m.set(p, (p * 7 + 3) % 4);
  const auto hm = m.hyperplane_multiplicities();
  std::uint64_t sum = 0;
  for (auto x : hm) sum += x;
  EXPECT_EQ(sum, m.cardinality() * gaussian_binomial(3, 1, 3));
  for (PointIndex h = 0; h < g->num_points(); ++h) EXPECT_EQ(hm[h], m.hyperplane_multiplicity(h));
}

TEST(Multiset, Spanning) {
  auto g = build_geometry(make_field(2), 3);
  const PointIndex units[] = {g->unit_point(0), g->unit_point(1), g->unit_point(2)};
  EXPECT_TRUE(characteristic(g, units).is_spanning());
  auto line = g->line_points(0);
  std::vector<PointIndex> lp(line.begin(), line.end());
  EXPECT_FALSE(characteristic(g, lp).is_spanning());

  auto g5 = build_geometry(make_field(2), 5);
  PointMultiset m(g5);
  std::vector<unsigned> masks;
  for (unsigned c : {1, 2, 15, 16, 23, 27}) {
    m.add(decode_point(*g5, c, PointEncoding::Binary), 2);
    masks.push_back(c);
  }
  for (unsigned c : {4, 8, 29, 30}) {
    m.add(decode_point(*g5, c, PointEncoding::Binary), 3);
    masks.push_back(c);
  }
  EXPECT_EQ(m.is_spanning(), rank_gf2(masks) == 5);
  EXPECT_TRUE(m.is_spanning());
}

TEST(Multiset, AddScalePad) {
  auto g2 = build_geometry(make_field(2), 2);
  PointMultiset s(g2);
  for (PointIndex p = 0; p < 3; ++p) s.set(p, 1);
  EXPECT_EQ(multiset_scale(3, s).cardinality(), 9u);

  auto g = build_geometry(make_field(2), 3);
  const PointIndex one[] = {2};
  auto chi = characteristic(g, one);
  EXPECT_EQ(multiset_add(chi, chi), multiset_scale(2, chi));

  PointMultiset all(g);
  for (PointIndex p = 0; p < 7; ++p) all.set(p, 1);
  auto line = g->line_points(3);
  std::vector<PointIndex> lp(line.begin(), line.end());
  EXPECT_EQ(multiset_add(multiset_scale(2, all), characteristic(g, lp)).cardinality(), 17u);

  PointMultiset six(g);
  for (PointIndex p : {1u, 2u, 4u}) six.set(p, 2);
  auto padded = pad_multiset(six, 8);
  EXPECT_EQ(padded.cardinality(), 8u);
  EXPECT_EQ(padded[1], 4u);
  EXPECT_THROW(pad_multiset(PointMultiset(g), 3), Error);

  auto other = build_geometry(make_field(3), 3);
  try {
    multiset_add(chi, PointMultiset(other));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeometryMismatch);
  }
}
