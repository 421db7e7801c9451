#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/locality.hpp"
#include "lrc/registry.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include <unistd.h>

#include "oracles.hpp"

using namespace lrc;
namespace fs = std::filesystem;

namespace {

const Registry& registry() {
  static const Registry reg = load_registry(LRC_DEFAULT_ASSET_DIR);
  return reg;
}

const ParamRecord& record(int q, int k, long long d, int r) {
  auto found = registry().find(q, k, d, r);
  if (found.empty()) throw std::runtime_error("missing record");
  return *found.front();
}

std::string temp_assets(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("lrc_assets_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::copy(LRC_DEFAULT_ASSET_DIR, dir, fs::copy_options::recursive);
  return dir.string();
}

// Row and column count from 0; row 0 is the line after the "q k n" header.
void flip_bit(const std::string& path, int row, int col) {
  std::string text = read_text_file(path);
  std::size_t pos = text.find('\n') + 1;
  for (int i = 0; i < row; ++i) pos = text.find('\n', pos) + 1;
  pos += col;
  text[pos] = text[pos] == '0' ? '1' : '0';
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST(Registry, StatedValues) {
  const auto& a = record(2, 5, 7, 2);
  EXPECT_EQ(a.n, 16);
  EXPECT_EQ(a.kind, RecordKind::Exact);
  EXPECT_EQ(record(2, 6, 45, 1).n, 93);
  EXPECT_EQ(record(2, 6, 16, 2).n, 33);
  EXPECT_EQ(record(2, 7, 5, 2).n, 17);
  EXPECT_EQ(record(2, 3, 5, 1).n, 11);
  EXPECT_EQ(record(2, 4, 9, 1).n, 20);
  EXPECT_EQ(record(3, 3, 5, 1).n, 11);

  const auto& t = record(3, 4, 45, 1);
  EXPECT_EQ(t.n, 69);
  ASSERT_EQ(t.witness.type, WitnessType::Multiset);
  auto m = read_multiset_file(registry().asset_dir + "/" + t.witness.path);
  EXPECT_GE(m.max_multiplicity(), 4u);
}

TEST(Registry, FamiliesExpand) {
  std::map<std::tuple<int, long long, long long>, std::set<int>> seen;
  for (const auto& rec : registry().records) {
    if (!rec.formula) continue;
    const auto& f = *rec.formula;
    EXPECT_EQ(rec.d, f.d0 + f.t * f.d_step);
    EXPECT_EQ(rec.n, f.n0 + f.t * f.n_step);
    seen[{rec.k, f.d0, f.n0}].insert(f.t);
  }
  EXPECT_EQ(seen.size(), 4u + 8u + 16u);
  for (const auto& [key, ts] : seen) {
    if (std::get<0>(key) == 4 && std::get<1>(key) == 8)
      EXPECT_EQ(ts, (std::set<int>{0}));
    else
      EXPECT_EQ(ts, (std::set<int>{0, 1, 2}));
  }
  // n_2(5,9+16t,2) = 20+31t
  EXPECT_EQ(record(2, 5, 9 + 16, 2).n, 51);
  EXPECT_EQ(record(2, 5, 9 + 32, 2).n, 82);
}

TEST(Registry, BoundsConsistency) {
  for (const auto& rec : registry().records) {
    SCOPED_TRACE(rec.label());
    if (rec.kind == RecordKind::Exact) EXPECT_LE(griesmer(rec.k, rec.d, rec.q), static_cast<std::uint64_t>(rec.n));
    if (rec.kind != RecordKind::LowerBound) EXPECT_GE(rec.n, locality_length_floor(rec.k, rec.r));
    if (rec.kind == RecordKind::Exact && rec.r == 2 && rec.k >= 2) EXPECT_GE(rec.n, (3 * rec.k + 1) / 2);
  }
}

TEST(Registry, MonotoneAndOrdered) {
  std::map<std::tuple<int, int, int>, std::map<long long, long long>> exact;
  for (const auto& rec : registry().records)
    if (rec.kind == RecordKind::Exact) exact[{rec.q, rec.k, rec.r}][rec.d] = rec.n;
  for (const auto& [key, row] : exact) {
    long long prev = 0;
    for (const auto& [d, n] : row) {
      EXPECT_GE(n, prev) << "q=" << std::get<0>(key) << " k=" << std::get<1>(key) << " d=" << d;
      prev = n;
    }
  }
  int compared = 0;
  for (const auto& [key, row] : exact) {
    const auto [q, k, r] = key;
    if (r != 1) continue;
    auto it = exact.find({q, k, 2});
    if (it == exact.end()) continue;
    for (const auto& [d, n] : row)
      if (auto j = it->second.find(d); j != it->second.end()) {
        EXPECT_GE(n, j->second) << "q=" << q << " k=" << k << " d=" << d;
        ++compared;
      }
  }
  EXPECT_GT(compared, 50);
}

TEST(Registry, GriesmerAboveThreshold) {
  for (const auto& rec : registry().records) {
    if (rec.q != 2 || rec.r != 2 || rec.kind != RecordKind::Exact) continue;
    const bool k3 = rec.k == 3 && rec.d >= 3;
    const bool k6 = rec.k == 6 && (rec.d >= 21 || rec.d == 17 || rec.d == 18);
    if (k3 || k6) EXPECT_EQ(static_cast<std::uint64_t>(rec.n), griesmer(rec.k, rec.d, 2)) << rec.label();
  }
  EXPECT_EQ(record(2, 6, 21, 2).n, static_cast<long long>(griesmer(6, 21, 2)));
  EXPECT_EQ(record(2, 6, 84, 2).n, static_cast<long long>(griesmer(6, 84, 2)));
}

TEST(Registry, ProofMatrices) {
  const auto sel = RecordFilter::parse("matrices");
  int count = 0;
  for (const auto& rec : registry().records) {
    if (!sel.matches(rec)) continue;
    ++count;
    auto c = read_matrix_file(registry().asset_dir + "/" + rec.witness.path);
    EXPECT_FALSE(is_degenerate(c)) << rec.witness.path;
    EXPECT_EQ(c.k(), rec.k);
  }
  EXPECT_EQ(count, 26);
  auto c = read_matrix_file(registry().asset_dir + "/matrices/q2_k6_n18_d8.txt");
  EXPECT_TRUE(is_projective(c));
  EXPECT_EQ(weight_distribution(c).support().size(), 2u);
}

TEST(Registry, Matrix13_5_5) {
  VerifyOptions opt;
  const auto rep = verify_record(registry(), record(2, 5, 5, 2), opt);
  EXPECT_NE(rep.status, VerifyStatus::Failed) << rep.message;
  EXPECT_EQ(rep.n, 13);
  EXPECT_EQ(rep.k, 5);
  EXPECT_EQ(rep.d, 5);
  EXPECT_EQ(rep.r, 2);
  auto c = read_matrix_file(registry().asset_dir + "/matrices/q2_k5_n13_d5.txt");
  EXPECT_EQ(oracle::min_distance(c.field(), c.generator(), c.n()), 5);
  EXPECT_EQ(locality(c).r, 2);
}

TEST(Registry, ListK5D10) {
  const auto& rec = record(2, 5, 10, 1);
  ASSERT_EQ(rec.witness.type, WitnessType::Multiset);
  auto m = read_multiset_file(registry().asset_dir + "/" + rec.witness.path);
  const auto& g = m.geometry();
  std::map<std::uint32_t, std::set<std::uint64_t>> by_mult;
  for (PointIndex p : m.support()) by_mult[m[p]].insert(encode_point(g, p, PointEncoding::Binary));
  EXPECT_EQ(by_mult[2], (std::set<std::uint64_t>{1, 2, 4, 8, 16}));
  EXPECT_EQ(by_mult[3], (std::set<std::uint64_t>{15, 23, 27, 29, 30}));
  EXPECT_EQ(by_mult.size(), 2u);

  auto c = multiset_to_code(m);
  EXPECT_EQ(c.n(), 25);
  EXPECT_GE(oracle::min_distance(c.field(), c.generator(), c.n()), 10);
  const auto rep = verify_record(registry(), rec);
  EXPECT_NE(rep.status, VerifyStatus::Failed) << rep.message;
  EXPECT_EQ(rep.r, 1);
}

TEST(Registry, CorruptedMatrixFails) {
  const std::string dir = temp_assets("flip");
  const std::string path = dir + "/matrices/q2_k5_n13_d5.txt";
  flip_bit(path, 0, 1);
  const auto bad = read_matrix_file(path);
  ASSERT_EQ(oracle::min_distance(bad.field(), bad.generator(), bad.n()), 4);
  EXPECT_THROW(
      {
        try {
          load_registry(dir);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::DataCorrupt);
          throw;
        }
      },
      Error);
  write_manifest(dir);
  const Registry reg = load_registry(dir);
  const auto rep = verify_record(reg, *reg.find(2, 5, 5, 2).front());
  EXPECT_EQ(rep.status, VerifyStatus::Failed);
  EXPECT_FALSE(rep.message.empty());
  fs::remove_all(dir);
}

TEST(Registry, ManifestCoversRecords) {
  const std::string dir = temp_assets("manifest");
  std::ofstream(dir + "/MANIFEST", std::ios::binary) << "00000000  matrices/q2_k5_n13_d5.txt\n";
  EXPECT_THROW(check_manifest(dir), Error);
  write_manifest(dir);
  EXPECT_NO_THROW(check_manifest(dir));
  fs::remove(dir + "/records.json");
  EXPECT_THROW(check_manifest(dir), Error);
  fs::remove_all(dir);
  EXPECT_EQ(crc32_of("123456789"), 0xCBF43926u);
}

TEST(Registry, Filters) {
  auto count = [](const std::string& f) {
    const auto sel = RecordFilter::parse(f);
    int c = 0;
    for (const auto& rec : registry().records) c += sel.matches(rec);
    return c;
  };
  EXPECT_EQ(count("matrices"), 26);
  EXPECT_EQ(count("matrices,k=5"), 3);
  EXPECT_EQ(count("matrices,k=6"), 12);
  EXPECT_EQ(count("matrices,k=7"), 11);
  EXPECT_EQ(count("q=2,k=3,r=2,families"), 12);
  EXPECT_EQ(count("lists,q=3"), 20);
  EXPECT_EQ(count("kind=lower_bound"), 6);
  EXPECT_EQ(count(""), static_cast<int>(registry().records.size()));
  EXPECT_THROW(RecordFilter::parse("colour=red"), Error);
  EXPECT_THROW(RecordFilter::parse("k=x"), Error);
  EXPECT_THROW(RecordFilter::parse("everything"), Error);
}

TEST(Registry, SmallFamiliesVerifyWithMinimality) {
  const auto s = verify_all(registry(), RecordFilter::parse("q=2,k=3,r=2"));
  ASSERT_GE(s.reports.size(), 14u);
  for (const auto& rep : s.reports) {
    EXPECT_EQ(rep.status, VerifyStatus::Verified) << rep.record.label() << " " << rep.message;
    EXPECT_EQ(rep.minimality, "proved");
  }
  EXPECT_LT(s.seconds, 5.0);
  const auto j = report_to_json(s);
  EXPECT_EQ(j["counts"]["verified"].get<std::size_t>(), s.reports.size());
  EXPECT_EQ(j["records"].size(), s.reports.size());
  const std::string table = format_report_table(s);
  EXPECT_NE(table.find("claimed (n,k,d,r)"), std::string::npos);
  EXPECT_NE(table.find("n_2(3,5,2)"), std::string::npos);
}

TEST(Registry, LowerBoundRecordsHaveNoWitness) {
  const auto s = verify_all(registry(), RecordFilter::parse("kind=lower_bound"));
  ASSERT_EQ(s.reports.size(), 6u);
  for (const auto& rep : s.reports) {
    EXPECT_EQ(rep.record.witness.type, WitnessType::None);
    EXPECT_EQ(rep.status, VerifyStatus::SolverSkipped);
    const auto exact = registry().find(rep.record.q, rep.record.k, rep.record.d, rep.record.r);
    for (const auto* e : exact)
      if (e->kind == RecordKind::Exact) EXPECT_EQ(e->n, rep.record.n) << rep.record.label();
  }
}

// The transcribed data that does not check out, as documented in the README.
TEST(Registry, KnownTranscriptionFailures) {
  const std::set<std::string> expected = {"n_2(5,25,1)", "n_2(6,13,1)", "n_2(6,38,1)", "n_2(6,57,1)",
                                          "n_2(6,65,1)", "n_2(5,6,2)",  "n_2(7,25,2)", "n_2(7,29,2)",
                                          "n_2(7,30,2)", "n_3(3,13,1)"};
  std::set<std::string> failed;
  for (const auto& label : expected) {
    for (const auto& rec : registry().records) {
      if (rec.label() != label || rec.witness.type == WitnessType::Construction) continue;
      const auto rep = verify_record(registry(), rec);
      if (rep.status == VerifyStatus::Failed) failed.insert(label);
    }
  }
  EXPECT_EQ(failed, expected);
}
