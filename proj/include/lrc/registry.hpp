#pragma once

#include "lrc/geometry.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

enum class RecordKind { Exact, LowerBound, UpperBound };
std::string_view to_string(RecordKind k);
RecordKind parse_record_kind(std::string_view s);

enum class WitnessType { None, Matrix, Multiset, Construction };

struct WitnessRef {
  WitnessType type = WitnessType::None;
  std::string path;          // relative to the asset directory
  std::string construction;  // for WitnessType::Construction
  nlohmann::json params;     // construction parameters as stored
  // Distance the witness must have exactly. Unset: the record's d for matrix
  // and list witnesses, and only ">= d" for constructions.
  std::optional<long long> expect_d;

  std::string describe() const;
};

// n = n0 + t * n_step at d = d0 + t * d_step
struct PeriodicForm {
  long long d0 = 0, n0 = 0, d_step = 0, n_step = 0;
  int t = 0;
};

struct ParamRecord {
  int q = 2, k = 1;
  long long d = 1;
  int r = 1;
  long long n = 0;
  RecordKind kind = RecordKind::Exact;
  std::string source;
  std::vector<std::string> flags;
  std::optional<PeriodicForm> formula;
  WitnessRef witness;

  std::string label() const;  // "n_2(5,7,2)"
};

struct Registry {
  std::string asset_dir;
  std::vector<ParamRecord> records;

  // Records with exactly these parameters.
  std::vector<const ParamRecord*> find(int q, int k, long long d, int r) const;
};

// $LRC_ASSET_DIR if set, else the directory fixed at build time.
std::string default_asset_dir();

// MANIFEST lines: "<crc32 as 8 hex digits>  <relative path>".
std::uint32_t crc32_of(std::string_view bytes);
std::string build_manifest(const std::string& asset_dir);
void write_manifest(const std::string& asset_dir);
// Throws DataCorrupt on a missing file or checksum mismatch.
void check_manifest(const std::string& asset_dir);

// Checks the manifest, then reads records.json and expands the periodic
// families. Throws DataCorrupt or ParseError.
Registry load_registry(const std::string& asset_dir = default_asset_dir());

enum class VerifyStatus {
  Verified,       // witness checks and, where applicable, minimality hold
  SolverSkipped,  // witness fine (or none needed); minimality beyond caps
  NoWitness,      // upper bound not reconstructable here; value kept as stated
  Failed,
};
std::string_view to_string(VerifyStatus s);

struct VerifyOptions {
  std::size_t solver_point_cap = 15;  // minimality is tried only up to this many points
  // Searches that build missing r=1 witnesses: the full r=1 search and long
  // base searches up to synthesis_point_cap points, short base searches up
  // to 63 points.
  std::size_t synthesis_point_cap = 40;
  double synthesis_timeout_seconds = 30.0;
  double short_synthesis_timeout_seconds = 3.0;
  double solver_timeout_seconds = 20.0;
  bool check_minimality = true;
};

struct VerificationReport {
  ParamRecord record;
  VerifyStatus status = VerifyStatus::Failed;
  std::optional<long long> n, k, d;
  std::optional<int> r;  // measured locality; unset when not computed
  std::string witness;   // how the witness was obtained
  std::string minimality;  // "proved", "skipped: ...", "n/a"
  std::string message;     // first violated check on failure
  double seconds = 0;
};

// Reconstructs the witness and checks dimension, length, distance and
// locality; for exact and lower-bound records also asks the solver whether
// length n-1 is feasible.
VerificationReport verify_record(const Registry& reg, const ParamRecord& rec, const VerifyOptions& opt = {});

// Comma-separated terms, all of which must hold: q=, k=, d=, r=, n=,
// kind=exact|lower_bound|upper_bound, and the words "matrices" (designated
// matrix witnesses), "lists" (designated point lists), "families".
class RecordFilter {
 public:
  RecordFilter() = default;
  static RecordFilter parse(std::string_view text);
  bool matches(const ParamRecord& rec) const;

 private:
  struct Eq {
    std::string key;
    long long value;
  };
  std::vector<Eq> eqs_;
  std::optional<RecordKind> kind_;
  bool matrices_ = false, lists_ = false, families_ = false;
};

struct VerificationSummary {
  std::vector<VerificationReport> reports;
  double seconds = 0;

  std::size_t count(VerifyStatus s) const;
  bool all_passed() const { return count(VerifyStatus::Failed) == 0; }
};

VerificationSummary verify_all(const Registry& reg, const RecordFilter& filter = {}, const VerifyOptions& opt = {});

std::string format_report_table(const VerificationSummary& s);
nlohmann::json report_to_json(const VerificationSummary& s);

}  // namespace lrc
