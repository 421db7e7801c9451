#include "lrc/registry.hpp"

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/field.hpp"
#include "lrc/ilp.hpp"
#include "lrc/io.hpp"
#include "lrc/locality.hpp"

#include <boost/crc.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <variant>

namespace lrc {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(RecordKind k) {
  switch (k) {
    case RecordKind::Exact: return "exact";
    case RecordKind::LowerBound: return "lower_bound";
    case RecordKind::UpperBound: return "upper_bound";
  }
  return "?";
}

RecordKind parse_record_kind(std::string_view s) {
  if (s == "exact") return RecordKind::Exact;
  if (s == "lower_bound") return RecordKind::LowerBound;
  if (s == "upper_bound") return RecordKind::UpperBound;
  throw Error(ErrorKind::ParseError, "unknown record kind '" + std::string(s) + "'");
}

std::string_view to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified: return "verified";
    case VerifyStatus::SolverSkipped: return "solver-skipped";
    case VerifyStatus::NoWitness: return "no-witness";
    case VerifyStatus::Failed: return "FAILED";
  }
  return "?";
}

std::string WitnessRef::describe() const {
  switch (type) {
    case WitnessType::None: return "-";
    case WitnessType::Matrix:
    case WitnessType::Multiset: return path;
    case WitnessType::Construction: {
      std::string s = construction;
      if (construction == "ss") s += " " + std::to_string(params.value("sigma", 0)) + ":" + [&] {
        std::string e;
        for (const auto& x : params.value("eps", json::array())) e += (e.empty() ? "" : ",") + x.dump();
        return e;
      }();
      return s;
    }
  }
  return "?";
}

std::string ParamRecord::label() const {
  return "n_" + std::to_string(q) + "(" + std::to_string(k) + "," + std::to_string(d) + "," + std::to_string(r) + ")";
}

std::vector<const ParamRecord*> Registry::find(int q, int k, long long d, int r) const {
  std::vector<const ParamRecord*> out;
  for (const auto& rec : records)
    if (rec.q == q && rec.k == k && rec.d == d && rec.r == r) out.push_back(&rec);
  return out;
}

std::string default_asset_dir() {
  if (const char* env = std::getenv("LRC_ASSET_DIR"); env && *env) return env;
#ifdef LRC_DEFAULT_ASSET_DIR
  return LRC_DEFAULT_ASSET_DIR;
#else
  return "assets";
#endif
}

// ---- manifest ----

std::uint32_t crc32_of(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

namespace {

constexpr const char* kManifest = "MANIFEST";

std::vector<std::string> asset_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    auto rel = fs::relative(e.path(), dir).generic_string();
    if (rel == kManifest) continue;
    out.push_back(rel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

}  // namespace

std::string build_manifest(const std::string& asset_dir) {
  std::string out;
  for (const auto& rel : asset_files(asset_dir))
    out += hex8(crc32_of(read_text_file(asset_dir + "/" + rel))) + "  " + rel + "\n";
  return out;
}

void write_manifest(const std::string& asset_dir) {
  const std::string text = build_manifest(asset_dir);
  std::ofstream f(asset_dir + "/" + kManifest, std::ios::binary);
  if (!f) throw Error(ErrorKind::OutOfRange, "cannot write manifest in " + asset_dir);
  f << text;
}

void check_manifest(const std::string& asset_dir) {
  const std::string path = asset_dir + "/" + kManifest;
  if (!fs::exists(path)) throw Error(ErrorKind::DataCorrupt, "missing " + path);
  std::istringstream in(read_text_file(path));
  std::string line;
  bool has_records = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto sp = line.find("  ");
    if (sp != 8) throw Error(ErrorKind::DataCorrupt, "manifest line " + std::to_string(lineno) + " malformed");
    const std::string want = line.substr(0, 8);
    const std::string rel = line.substr(10);
    const std::string file = asset_dir + "/" + rel;
    if (!fs::exists(file)) throw Error(ErrorKind::DataCorrupt, "missing asset " + rel);
    const std::string got = hex8(crc32_of(read_text_file(file)));
    if (got != want) throw Error(ErrorKind::DataCorrupt, "checksum mismatch for " + rel + ": " + got + " != " + want);
    has_records |= rel == "records.json";
  }
  if (!has_records) throw Error(ErrorKind::DataCorrupt, "manifest does not cover records.json");
}

// ---- loading ----

namespace {

WitnessRef parse_witness(const json& w) {
  WitnessRef ref;
  if (w.is_null()) return ref;
  if (w.contains("matrix")) {
    ref.type = WitnessType::Matrix;
    ref.path = w.at("matrix").get<std::string>();
  } else if (w.contains("multiset")) {
    ref.type = WitnessType::Multiset;
    ref.path = w.at("multiset").get<std::string>();
  } else if (w.contains("construction")) {
    ref.type = WitnessType::Construction;
    ref.construction = w.at("construction").get<std::string>();
    ref.params = w;
    ref.params.erase("construction");
    ref.params.erase("expect_d");
  } else {
    throw Error(ErrorKind::ParseError, "witness without matrix, multiset or construction: " + w.dump());
  }
  if (w.contains("expect_d")) ref.expect_d = w.at("expect_d").get<long long>();
  return ref;
}

// "3", 3 or "t+2"
int eval_sigma(const json& s, int t) {
  if (s.is_number_integer()) return s.get<int>();
  const std::string text = s.get<std::string>();
  if (text.rfind("t+", 0) == 0) return t + std::stoi(text.substr(2));
  return std::stoi(text);
}

ParamRecord parse_record(const json& j) {
  ParamRecord rec;
  rec.q = j.at("q").get<int>();
  rec.k = j.at("k").get<int>();
  rec.d = j.at("d").get<long long>();
  rec.r = j.at("r").get<int>();
  rec.n = j.at("n").get<long long>();
  rec.kind = parse_record_kind(j.value("kind", std::string("exact")));
  rec.source = j.value("source", std::string());
  if (j.contains("flags")) rec.flags = j.at("flags").get<std::vector<std::string>>();
  if (j.contains("witness")) rec.witness = parse_witness(j.at("witness"));
  if (rec.witness.type == WitnessType::Construction && rec.witness.construction == "ss")
    rec.witness.params["sigma"] = eval_sigma(rec.witness.params.at("sigma"), 0);
  return rec;
}

std::vector<ParamRecord> expand_family(const json& f) {
  std::vector<ParamRecord> out;
  PeriodicForm form;
  form.d0 = f.at("d0").get<long long>();
  form.n0 = f.at("n0").get<long long>();
  form.d_step = f.at("d_step").get<long long>();
  form.n_step = f.at("n_step").get<long long>();
  for (int t : f.at("t").get<std::vector<int>>()) {
    ParamRecord rec;
    rec.q = f.at("q").get<int>();
    rec.k = f.at("k").get<int>();
    rec.r = f.at("r").get<int>();
    form.t = t;
    rec.formula = form;
    rec.d = form.d0 + t * form.d_step;
    rec.n = form.n0 + t * form.n_step;
    rec.kind = parse_record_kind(f.value("kind", std::string("exact")));
    rec.source = f.value("source", std::string()) + " at t=" + std::to_string(t);
    if (f.contains("flags")) rec.flags = f.at("flags").get<std::vector<std::string>>();
    rec.witness = parse_witness(f.at("witness"));
    if (rec.witness.construction == "ss") rec.witness.params["sigma"] = eval_sigma(f.at("witness").at("sigma"), t);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

Registry load_registry(const std::string& asset_dir) {
  check_manifest(asset_dir);
  Registry reg;
  reg.asset_dir = asset_dir;
  json j;
  try {
    j = json::parse(read_text_file(asset_dir + "/records.json"));
    for (const auto& f : j.at("families"))
      for (auto& rec : expand_family(f)) reg.records.push_back(std::move(rec));
    for (const auto& r : j.at("records")) reg.records.push_back(parse_record(r));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("records.json: ") + e.what());
  }
  std::stable_sort(reg.records.begin(), reg.records.end(), [](const ParamRecord& a, const ParamRecord& b) {
    return std::tie(a.q, a.r, a.k, a.d) < std::tie(b.q, b.r, b.k, b.d);
  });
  return reg;
}

// ---- witnesses ----

namespace {

using Witness = std::variant<LinearCode, PointMultiset>;

struct Built {
  std::optional<Witness> w;
  std::string how;
};

std::uint64_t theta(int k, int q) {
  std::uint64_t s = 0, p = 1;
  for (int i = 0; i < k; ++i, p *= q) s += p;
  return s;
}

GeometryPtr geometry_for(int q, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, GeometryPtr> cache;
  std::lock_guard lock(mu);
  auto& g = cache[{q, k}];
  if (!g) g = build_geometry(make_field(q), k);
  return g;
}

// Griesmer-type Solomon-Stiffler multisets; nullopt when no placement exists.
std::optional<PointMultiset> griesmer_base(int q, int k, long long d) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, long long>, std::optional<PointMultiset>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({q, k, d}); it != cache.end()) return it->second;
  }
  std::optional<PointMultiset> out;
  try {
    out = solomon_stiffler(geometry_for(q, k), griesmer_type(k, d, q));
  } catch (const Error&) {
  }
  std::lock_guard lock(mu);
  cache.emplace(std::make_tuple(q, k, d), out);
  return out;
}

Built build_witness(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt, int depth);

// Drops j points, always from the currently largest multiplicity, keeping
// the multiset spanning. Distance falls by at most one per point.
std::optional<PointMultiset> puncture_points(PointMultiset m, long long j) {
  for (; j > 0; --j) {
    const auto& mu = m.mults();
    auto it = std::max_element(mu.begin(), mu.end());
    if (it == mu.end() || *it == 0) return std::nullopt;
    m.remove(static_cast<PointIndex>(it - mu.begin()));
  }
  if (!m.is_spanning()) return std::nullopt;
  return m;
}

struct Base {
  PointMultiset m;
  std::string how;
};

// A code of exactly n points and distance >= d, punctured from a known one.
std::optional<Base> find_base(const Registry& reg, int q, int k, long long n, long long d) {
  auto accept = [&](const PointMultiset& src, const std::string& how) -> std::optional<Base> {
    const auto len = static_cast<long long>(src.cardinality());
    if (len < n) return std::nullopt;
    auto p = puncture_points(src, len - n);
    if (!p || static_cast<long long>(p->minimum_distance()) < d) return std::nullopt;
    return Base{*p, len == n ? how : how + " minus " + std::to_string(len - n)};
  };
  for (long long dp = d; dp <= n; ++dp) {
    const auto gl = static_cast<long long>(griesmer(k, dp, q));
    if (gl - n > dp - d) break;
    if (gl < n) continue;
    if (auto base = griesmer_base(q, k, dp))
      if (auto b = accept(*base, "griesmer d=" + std::to_string(dp))) return b;
  }
  if (n == k + 1 && d <= 2) return Base{code_to_multiset(parity_check_code(make_field(q), k), geometry_for(q, k)), "parity"};
  for (const auto& other : reg.records) {
    if (other.q != q || other.k != k) continue;
    const auto& w = other.witness;
    if (w.type != WitnessType::Matrix && w.type != WitnessType::Multiset) continue;
    const long long wd = w.expect_d.value_or(other.d);
    if (other.n < n || other.n - n > wd - d) continue;
    try {
      PointMultiset m = w.type == WitnessType::Matrix
                            ? code_to_multiset(read_matrix_file(reg.asset_dir + "/" + w.path), geometry_for(q, k))
                            : read_multiset_file(reg.asset_dir + "/" + w.path);
      if (m.cardinality() != static_cast<std::uint64_t>(other.n) || !m.is_spanning()) continue;
      if (auto b = accept(m, w.path)) return b;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

// r = 1 records without a printed example. Every point of 2M, M + 2*PG and
// 3M - P has multiplicity >= 2, so any base code M works. Tried in order: a
// Griesmer-type code with no point of multiplicity one, known bases, the
// record for d+1 at the same length, a distance-only search for the base, and
// finally the r=1 search itself.
Built synthesize_r1(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt, int depth) {
  const int q = rec.q, k = rec.k;
  if (k <= 2) return {small_dimension_exact(k, rec.d, q, 1).witness, "small_dimension"};
  auto g = geometry_for(q, k);
  if (rec.n == 2LL * k && rec.d <= 2) return {small_length_optimum(k, q, 1), "small_length"};
  if (rec.n == static_cast<long long>(griesmer(k, rec.d, q)))
    if (auto base = griesmer_base(q, k, rec.d); base && locality_geometric(*base, 1))
      return {*base, "griesmer d=" + std::to_string(rec.d)};

  const auto th = static_cast<long long>(theta(k, q));
  long long qk1 = 1;
  for (int i = 0; i + 1 < k; ++i) qk1 *= q;
  struct Need {
    R1Variant v;
    const char* name;
    long long n, d;
  };
  std::vector<Need> needs;
  if (rec.n % 2 == 0) needs.push_back({R1Variant::Double, "double", rec.n / 2, (rec.d + 1) / 2});
  if (rec.n - 2 * th >= k) needs.push_back({R1Variant::AddDoubleAmbient, "add_double_ambient", rec.n - 2 * th,
                                            std::max(1LL, rec.d - 2 * qk1)});
  if ((rec.n + 1) % 3 == 0) needs.push_back({R1Variant::TripleMinusOne, "triple_minus_one", (rec.n + 1) / 3, (rec.d + 3) / 3});

  for (const auto& nd : needs)
    if (auto b = find_base(reg, q, k, nd.n, nd.d)) return {r1_construction(b->m, nd.v), std::string(nd.name) + "(" + b->how + ")"};
  if (depth < 16) {
    for (const ParamRecord* next : reg.find(q, k, rec.d + 1, 1)) {
      if (next->n != rec.n || next->kind == RecordKind::LowerBound) continue;
      Built b = build_witness(reg, *next, opt, depth + 1);
      if (b.w) return {b.w, "from d=" + std::to_string(rec.d + 1) + ": " + b.how};
    }
  }
  const bool full = g->num_points() <= opt.synthesis_point_cap;
  if (full || g->num_points() <= 63) {
    SolveOptions so;
    so.timeout_seconds = full ? opt.synthesis_timeout_seconds : opt.short_synthesis_timeout_seconds;
    so.point_cap = g->num_points();
    for (const auto& nd : needs) {
      auto fr = feasible_length_any_locality(g, nd.n, static_cast<int>(nd.d), so);
      if (fr.witness)
        return {r1_construction(*fr.witness, nd.v), std::string(nd.name) + "(searched [" + std::to_string(nd.n) + "," +
                                                        std::to_string(k) + "," + std::to_string(nd.d) + "])"};
    }
    if (full) {
      auto fr = feasible_length(g, rec.n, static_cast<int>(rec.d), 1, so);
      if (fr.witness) return {*fr.witness, "solver"};
    }
  }
  return {std::nullopt, "none"};
}

Built build_construction(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt, int depth) {
  const auto& w = rec.witness;
  const std::string& name = w.construction;
  const int q = rec.q, k = rec.k;
  if (name == "small_dimension") return {small_dimension_exact(k, rec.d, q, rec.r).witness, name};
  if (name == "small_length") return {small_length_optimum(k, q, rec.r), name};
  if (name == "cycle_d3") return {cycle_construction_d3(k), name};
  if (name == "d4") return {d4_construction(k, q), name};
  if (name == "line_rm") return {line_construction(reed_muller_first_order(k - 2)), "line(RM(1," + std::to_string(k - 2) + "))"};
  if (name == "line_pc") return {line_construction(parity_check_code(make_field(q), k - 1)), "line(parity)"};
  if (name == "ss") {
    SolomonStifflerType t;
    t.sigma = w.params.at("sigma").get<int>();
    t.eps = w.params.at("eps").get<std::vector<int>>();
    return {solomon_stiffler(geometry_for(q, k), t), "ss " + t.to_string()};
  }
  if (name == "ss_griesmer") {
    auto t = griesmer_type(k, rec.d, q);
    return {solomon_stiffler(geometry_for(q, k), t), "ss " + t.to_string()};
  }
  if (name == "auto") {
    if (rec.r != 1) throw Error(ErrorKind::UnknownConstruction, "automatic witnesses exist for r=1 only");
    return synthesize_r1(reg, rec, opt, depth);
  }
  throw Error(ErrorKind::UnknownConstruction, "unknown construction '" + name + "'");
}

Built build_witness(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt, int depth) {
  const auto& w = rec.witness;
  switch (w.type) {
    case WitnessType::None: return {std::nullopt, "-"};
    case WitnessType::Matrix: return {read_matrix_file(reg.asset_dir + "/" + w.path), w.path};
    case WitnessType::Multiset: return {read_multiset_file(reg.asset_dir + "/" + w.path), w.path};
    case WitnessType::Construction: return build_construction(reg, rec, opt, depth);
  }
  return {std::nullopt, "-"};
}

struct Measured {
  long long n = 0, k = 0, d = 0;
  int r = kInfiniteLocality;
  bool spanning = true;
  bool within_r = false;
};

int measured_locality(const PointMultiset& m, int r) {
  for (int s = 1; s <= std::min(r, 2); ++s)
    if (locality_geometric(m, s)) return s;
  return locality(multiset_to_code(m)).r;
}

Measured measure(const Witness& w, int r) {
  Measured out;
  if (const auto* c = std::get_if<LinearCode>(&w)) {
    out.n = c->n();
    out.k = c->k();
    out.d = minimum_distance(*c);
    for (int s = 1; s <= r && !out.within_r; ++s)
      if (has_locality(*c, s)) {
        out.within_r = true;
        out.r = s;
      }
    if (!out.within_r) out.r = locality(*c).r;
    return out;
  }
  const auto& m = std::get<PointMultiset>(w);
  out.n = static_cast<long long>(m.cardinality());
  out.k = m.geometry().k();
  out.spanning = m.is_spanning();
  if (!out.spanning) return out;
  out.d = static_cast<long long>(m.minimum_distance());
  out.r = measured_locality(m, r);
  out.within_r = out.r != kInfiniteLocality && out.r <= r;
  return out;
}

std::string tuple4(long long n, long long k, long long d, int r) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "," +
         (r == kInfiniteLocality ? std::string("inf") : std::to_string(r)) + ")";
}

}  // namespace

VerificationReport verify_record(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.record = rec;
  auto finish = [&](VerifyStatus s, std::string msg = {}) {
    rep.status = s;
    rep.message = std::move(msg);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  bool witness_ok = false;
  try {
    Built b = build_witness(reg, rec, opt, 0);
    rep.witness = b.how;
    if (b.w) {
      const Measured m = measure(*b.w, rec.r);
      rep.n = m.n;
      rep.k = m.k;
      if (!m.spanning) return finish(VerifyStatus::Failed, "witness does not span the ambient space");
      rep.d = m.d;
      if (m.r != kInfiniteLocality) rep.r = m.r;
      std::optional<long long> exact_d = rec.witness.expect_d;
      if (!exact_d && (rec.witness.type == WitnessType::Matrix || rec.witness.type == WitnessType::Multiset))
        exact_d = rec.d;
      if (m.k != rec.k) return finish(VerifyStatus::Failed, "dimension " + std::to_string(m.k) + " != " + std::to_string(rec.k));
      if (m.n != rec.n) return finish(VerifyStatus::Failed, "length " + std::to_string(m.n) + " != " + std::to_string(rec.n));
      if (m.d < rec.d) return finish(VerifyStatus::Failed, "distance " + std::to_string(m.d) + " < " + std::to_string(rec.d));
      if (exact_d && m.d != *exact_d)
        return finish(VerifyStatus::Failed, "distance " + std::to_string(m.d) + " != " + std::to_string(*exact_d));
      if (!m.within_r)
        return finish(VerifyStatus::Failed, "locality " + (m.r == kInfiniteLocality ? std::string("inf") : std::to_string(m.r)) +
                                                " > " + std::to_string(rec.r));
      witness_ok = true;
    } else if (rec.kind != RecordKind::LowerBound && rec.witness.type != WitnessType::None) {
      rep.witness = "none found (" + rec.witness.describe() + ")";
    }
  } catch (const Error& e) {
    return finish(VerifyStatus::Failed, e.what());
  }

  if (rec.kind == RecordKind::UpperBound) {
    rep.minimality = "n/a";
    return finish(witness_ok ? VerifyStatus::Verified : VerifyStatus::NoWitness);
  }

  auto g = geometry_for(rec.q, rec.k);
  if (!opt.check_minimality) {
    rep.minimality = "skipped: disabled";
  } else if (g->num_points() > opt.solver_point_cap) {
    rep.minimality = "skipped: " + std::to_string(g->num_points()) + " points";
  } else {
    SolveOptions so;
    so.timeout_seconds = opt.solver_timeout_seconds;
    try {
      auto fr = feasible_length(g, rec.n - 1, static_cast<int>(rec.d), rec.r, so);
      if (!fr.decided) {
        rep.minimality = "skipped: timeout";
      } else if (fr.witness) {
        rep.minimality = "length n-1 feasible";
        return finish(VerifyStatus::Failed, "a code of length " + std::to_string(rec.n - 1) + " exists");
      } else {
        rep.minimality = "proved";
      }
    } catch (const Error& e) {
      rep.minimality = std::string("skipped: ") + e.what();
    }
  }
  const bool proved = rep.minimality == "proved";
  if (rec.kind == RecordKind::LowerBound) return finish(proved ? VerifyStatus::Verified : VerifyStatus::SolverSkipped);
  if (!witness_ok) return finish(VerifyStatus::NoWitness);
  return finish(proved ? VerifyStatus::Verified : VerifyStatus::SolverSkipped);
}

// ---- filtering and reports ----

RecordFilter RecordFilter::parse(std::string_view text) {
  RecordFilter f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string term(text.substr(pos, comma - pos));
    pos = comma + 1;
    term.erase(0, term.find_first_not_of(' '));
    term.erase(term.find_last_not_of(' ') + 1);
    if (term.empty()) continue;
    const auto eq = term.find('=');
    if (eq == std::string::npos) {
      if (term == "matrices") f.matrices_ = true;
      else if (term == "lists") f.lists_ = true;
      else if (term == "families") f.families_ = true;
      else throw Error(ErrorKind::ParseError, "unknown filter word '" + term + "'");
      continue;
    }
    const std::string key = term.substr(0, eq), value = term.substr(eq + 1);
    if (key == "kind") {
      f.kind_ = parse_record_kind(value);
      continue;
    }
    if (key != "q" && key != "k" && key != "d" && key != "r" && key != "n")
      throw Error(ErrorKind::ParseError, "unknown filter key '" + key + "'");
    try {
      std::size_t used = 0;
      const long long v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      f.eqs_.push_back({key, v});
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "filter value '" + value + "' is not an integer");
    }
  }
  return f;
}

bool RecordFilter::matches(const ParamRecord& rec) const {
  for (const auto& e : eqs_) {
    const long long v = e.key == "q" ? rec.q : e.key == "k" ? rec.k : e.key == "d" ? rec.d : e.key == "r" ? rec.r : rec.n;
    if (v != e.value) return false;
  }
  if (kind_ && rec.kind != *kind_) return false;
  if (matrices_ && !(rec.witness.type == WitnessType::Matrix && !rec.witness.expect_d)) return false;
  if (lists_ && !(rec.witness.type == WitnessType::Multiset && !rec.witness.expect_d)) return false;
  if (families_ && !rec.formula) return false;
  return true;
}

std::size_t VerificationSummary::count(VerifyStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [s](const VerificationReport& r) { return r.status == s; }));
}

VerificationSummary verify_all(const Registry& reg, const RecordFilter& filter, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationSummary s;
  for (const auto& rec : reg.records)
    if (filter.matches(rec)) s.reports.push_back(verify_record(reg, rec, opt));
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

std::string format_report_table(const VerificationSummary& s) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"record", "kind", "claimed (n,k,d,r)", "measured (n,k,d,r)", "witness", "minimality", "status", "note"});
  for (const auto& rep : s.reports) {
    const auto& r = rep.record;
    std::string measured = "-";
    if (rep.n && rep.k) measured = tuple4(*rep.n, *rep.k, rep.d.value_or(0), rep.r.value_or(kInfiniteLocality));
    std::string note = rep.message;
    for (const auto& fl : r.flags) note += (note.empty() ? "" : "; ") + std::string("flag: ") + fl;
    rows.push_back({r.label(), std::string(to_string(r.kind)), tuple4(r.n, r.k, r.d, r.r), measured, rep.witness,
                    rep.minimality, std::string(to_string(rep.status)), note});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t i = 0; i + 1 < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu records: %zu verified, %zu solver-skipped, %zu no-witness, %zu failed (%.1f s)\n",
                s.reports.size(), s.count(VerifyStatus::Verified), s.count(VerifyStatus::SolverSkipped),
                s.count(VerifyStatus::NoWitness), s.count(VerifyStatus::Failed), s.seconds);
  return out + buf;
}

json report_to_json(const VerificationSummary& s) {
  json recs = json::array();
  for (const auto& rep : s.reports) {
    const auto& r = rep.record;
    json j = {{"q", r.q}, {"k", r.k}, {"d", r.d}, {"r", r.r}, {"n", r.n}, {"kind", to_string(r.kind)},
              {"source", r.source}, {"flags", r.flags}, {"witness", rep.witness}, {"minimality", rep.minimality},
              {"status", to_string(rep.status)}, {"message", rep.message}, {"seconds", rep.seconds}};
    json m = json::object();
    if (rep.n) m["n"] = *rep.n;
    if (rep.k) m["k"] = *rep.k;
    if (rep.d) m["d"] = *rep.d;
    if (rep.r) m["r"] = *rep.r;
    j["measured"] = m;
    if (r.formula) j["formula"] = {{"d0", r.formula->d0}, {"n0", r.formula->n0}, {"d_step", r.formula->d_step},
                                   {"n_step", r.formula->n_step}, {"t", r.formula->t}};
    recs.push_back(std::move(j));
  }
  return {{"records", recs},
          {"counts",
           {{"verified", s.count(VerifyStatus::Verified)},
            {"solver_skipped", s.count(VerifyStatus::SolverSkipped)},
            {"no_witness", s.count(VerifyStatus::NoWitness)},
            {"failed", s.count(VerifyStatus::Failed)}}},
          {"seconds", s.seconds}};
}

}  // namespace lrc
