// lrc_cli: analyze codes, run constructions, bounds, the exact search and the
// registry verification from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error,
// 3 size cap or timeout.

#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/error.hpp"
#include "lrc/field.hpp"
#include "lrc/ilp.hpp"
#include "lrc/io.hpp"
#include "lrc/locality.hpp"
#include "lrc/registry.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace lrc;
using nlohmann::json;

namespace {

struct Config {
  bool json = false;
  std::string assets;
  double timeout = 300.0;
  std::size_t point_cap = 63;
  int threads = 1;
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::SizeCap:
    case ErrorKind::Timeout: return 3;
    case ErrorKind::DataCorrupt: return 1;
    default: return 2;
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

LinearCode load_code(const std::string& path) {
  if (ends_with(path, ".json")) return multiset_to_code(read_multiset_file(path));
  return read_matrix_file(path);
}

std::string locality_text(int r) { return r == kInfiniteLocality ? "infinite" : std::to_string(r); }

std::string params_text(long long n, long long k, long long d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

// ---- analyze ----

int cmd_analyze(const Config& cfg, const std::string& path, bool certificate) {
  const LinearCode c = load_code(path);
  const int d = minimum_distance(c);
  const auto loc = locality(c);
  const int dd = dual_distance(c);
  const bool degenerate = is_degenerate(c);
  const bool projective = !degenerate && is_projective(c);
  const auto weights = weight_distribution(c).support();
  const bool two_weight = weights.size() == 2;
  const long long gap = c.n() - static_cast<long long>(griesmer(c.k(), d, c.q()));
  std::optional<long long> slack;
  if (!loc.infinite() && loc.r >= 1 && c.k() >= 1) slack = singleton_locality_bound(c.n(), c.k(), loc.r) - d;

  if (cfg.json) {
    json j = {{"q", c.q()},           {"n", c.n()},       {"k", c.k()},
              {"d", d},               {"dual_distance", dd}, {"locality", loc.infinite() ? json("infinite") : json(loc.r)},
              {"projective", projective}, {"degenerate", degenerate}, {"weights", weights},
              {"two_weight", two_weight}, {"griesmer_gap", gap}};
    if (slack) j["singleton_slack"] = *slack;
    if (certificate) j["certificate"] = certificate_to_json(c, loc);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::string line = "n=" + std::to_string(c.n()) + ", k=" + std::to_string(c.k()) + ", d=" + std::to_string(d) +
                     ", locality=" + locality_text(loc.r);
  if (two_weight) line += ", two-weight";
  if (projective) line += ", projective";
  if (degenerate) line += ", degenerate";
  std::cout << line << "\n";
  std::cout << "q=" << c.q() << " dual distance=" << dd << " griesmer gap=" << gap;
  if (slack) std::cout << " singleton-type slack=" << *slack;
  std::cout << "\n";
  int finite = 0;
  for (int r : loc.per_coordinate) finite += r != kInfiniteLocality;
  std::cout << "recovery sets: " << finite << " of " << c.n() << " coordinates";
  int shown = 0;
  for (int i = 0; i < c.n() && shown < 3; ++i) {
    if (!loc.recovery[i]) continue;
    std::cout << (shown++ == 0 ? "; " : ", ") << i << " <- {";
    const auto& set = loc.recovery[i]->set;
    for (std::size_t t = 0; t < set.size(); ++t) std::cout << (t ? "," : "") << set[t];
    std::cout << "}";
  }
  std::cout << (finite > shown ? ", ..." : "") << "\n";
  if (certificate) std::cout << certificate_to_json(c, loc).dump(2) << "\n";
  return 0;
}

// ---- construct ----

struct ConstructArgs {
  std::string name;
  int k = 0, q = 2, t = 1, m = 0, r = 2;
  long long d = 0;
  std::string type, variant, input, out, encoding = "binary";
};

std::uint64_t theta(int k, int q) {
  std::uint64_t s = 0, p = 1;
  for (int i = 0; i < k; ++i, p *= q) s += p;
  return s;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int cmd_construct(const Config& cfg, const ConstructArgs& a) {
  std::optional<LinearCode> code;
  std::optional<PointMultiset> ms;
  std::optional<std::array<long long, 3>> predicted;
  const auto need_k = [&](int lo) {
    if (a.k < lo) throw Error(ErrorKind::BadK, a.name + " needs --k >= " + std::to_string(lo));
  };
  if (a.name == "simplex") {
    need_k(1);
    auto g = build_geometry(make_field(a.q), a.k);
    ms = simplex(g, static_cast<std::uint32_t>(a.t));
    predicted = {{static_cast<long long>(a.t * theta(a.k, a.q)), a.k, a.t * ipow(a.q, a.k - 1)}};
  } else if (a.name == "ss") {
    const auto type = parse_ss_type(a.type);
    auto g = build_geometry(make_field(a.q), type.k());
    ms = solomon_stiffler(g, type);
    predicted = {{ss_length(type, a.q), type.k(), ss_distance(type, a.q)}};
  } else if (a.name == "ss-griesmer") {
    need_k(2);
    const auto type = griesmer_type(a.k, a.d, a.q);
    ms = solomon_stiffler(build_geometry(make_field(a.q), a.k), type);
    predicted = {{ss_length(type, a.q), a.k, ss_distance(type, a.q)}};
  } else if (a.name == "reed-muller") {
    code = reed_muller_first_order(a.m);
    predicted = {{ipow(2, a.m), a.m + 1, ipow(2, a.m - 1)}};
  } else if (a.name == "parity") {
    need_k(1);
    code = parity_check_code(make_field(a.q), a.k);
    predicted = {{a.k + 1, a.k, 2}};
  } else if (a.name == "line-rm" || a.name == "line-parity" || a.name == "line") {
    LinearCode base = a.name == "line" ? load_code(a.input)
                      : a.name == "line-rm" ? (need_k(3), reed_muller_first_order(a.k - 2))
                                            : (need_k(2), parity_check_code(make_field(2), a.k - 1));
    const long long d0 = minimum_distance(base);
    ms = line_construction(base);
    predicted = {{2LL * base.n() + 1, base.k() + 1, std::min(2 * d0, static_cast<long long>(base.n()) + 1)}};
  } else if (a.name == "cycle-d3") {
    ms = cycle_construction_d3(a.k);
    predicted = {{2LL * a.k, a.k, 3}};
  } else if (a.name == "d4") {
    ms = d4_construction(a.k, a.q);
  } else if (a.name == "small-length") {
    ms = small_length_optimum(a.k, a.q, a.r);
  } else if (a.name == "small-dimension") {
    auto res = small_dimension_exact(a.k, a.d, a.q, a.r);
    ms = res.witness;
    predicted = {{res.n, a.k, a.d}};
  } else if (a.name == "r1") {
    PointMultiset base = ends_with(a.input, ".json") ? read_multiset_file(a.input) : code_to_multiset(read_matrix_file(a.input));
    const auto v = parse_r1_variant(a.variant);
    const auto n0 = static_cast<long long>(base.cardinality());
    const auto d0 = static_cast<long long>(base.minimum_distance());
    const int k = base.geometry().k(), q = base.geometry().q();
    ms = r1_construction(base, v);
    if (v == R1Variant::Double) predicted = {{2 * n0, k, 2 * d0}};
    if (v == R1Variant::AddDoubleAmbient)
      predicted = {{n0 + 2 * static_cast<long long>(theta(k, q)), k, d0 + 2 * ipow(q, k - 1)}};
    if (v == R1Variant::TripleMinusOne) predicted = {{3 * n0 - 1, k, 3 * d0 - 1}};
  } else {
    throw Error(ErrorKind::UnknownConstruction, "unknown construction '" + a.name + "'");
  }
  if (!code) code = multiset_to_code(*ms);
  const int d = minimum_distance(*code);
  const auto loc = locality(*code);

  if (!a.out.empty()) {
    if (ends_with(a.out, ".json")) {
      const PointMultiset out = ms ? *ms : code_to_multiset(*code);
      write_multiset_file(a.out, out, parse_encoding(a.encoding));
    } else {
      write_matrix_file(a.out, *code);
    }
  }
  if (cfg.json) {
    json j = {{"construction", a.name},
              {"measured", {{"n", code->n()}, {"k", code->k()}, {"d", d}, {"locality", loc.infinite() ? json("infinite") : json(loc.r)}}},
              {"q", code->q()}};
    if (predicted) j["predicted"] = {{"n", (*predicted)[0]}, {"k", (*predicted)[1]}, {"d", (*predicted)[2]}};
    if (a.out.empty()) j["matrix"] = format_matrix_text(*code);
    std::cout << j.dump(2) << "\n";
  } else {
    if (predicted)
      std::cout << "predicted " << params_text((*predicted)[0], (*predicted)[1], (*predicted)[2]) << "_" << code->q() << "\n";
    std::cout << "measured  " << params_text(code->n(), code->k(), d) << "_" << code->q()
              << ", locality " << locality_text(loc.r) << "\n";
    if (a.out.empty()) std::cout << format_matrix_text(*code);
    else std::cout << "wrote " << a.out << "\n";
  }
  if (predicted && ((*predicted)[0] != code->n() || (*predicted)[1] != code->k() || (*predicted)[2] != d)) return 1;
  return 0;
}

// ---- bound ----

int cmd_bound(const Config& cfg, int q, int k, long long d, int r) {
  if (k < 1 || d < 1) throw Error(ErrorKind::OutOfRange, "k and d must be positive");
  if (r < 1 || r > k) throw Error(ErrorKind::BadR, "r must lie in [1, k]");
  const auto g = static_cast<long long>(griesmer(k, d, q));
  const long long floor = locality_length_floor(k, r);
  const long long lower = std::max(g, floor);
  json registry_rows = json::array();
  std::string registry_text;
  try {
    const Registry reg = load_registry(cfg.assets);
    for (const auto* rec : reg.find(q, k, d, r)) {
      registry_rows.push_back({{"kind", to_string(rec->kind)}, {"n", rec->n}, {"source", rec->source}});
      registry_text += std::string("registry ") + std::string(to_string(rec->kind)) + " " + std::to_string(rec->n) +
                       "  (" + rec->source + ")\n";
    }
  } catch (const Error& e) {
    registry_text = std::string("registry unavailable: ") + e.what() + "\n";
  }
  if (cfg.json) {
    std::cout << json{{"q", q}, {"k", k}, {"d", d}, {"r", r}, {"griesmer", g}, {"locality_floor", floor},
                      {"lower_bound", lower}, {"registry", registry_rows}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "griesmer " << g << "\n";
  std::cout << "locality floor " << floor << "\n";
  std::cout << "lower bound " << lower << "\n";
  std::cout << (registry_text.empty() ? "registry: no record\n" : registry_text);
  return 0;
}

// ---- ilp ----

struct IlpArgs {
  int q = 2, k = 0, r = 2;
  int d = 0;
  std::string export_path, witness_path;
  std::optional<long long> fixed_n, lambda;
  bool solve = false;
};

int cmd_ilp(const Config& cfg, const IlpArgs& a) {
  auto g = build_geometry(make_field(a.q), a.k);
  if (!a.export_path.empty()) {
    long long lambda = a.lambda.value_or(default_lambda(a.k, a.d, a.q));
    if (a.fixed_n && !a.lambda) lambda = std::max(a.r == 1 ? 2LL : 1LL, tighten_lambda(lambda, *a.fixed_n, a.d, a.k, a.q));
    IlpModel m = a.r == 1 ? build_model_r1(*g, a.d, lambda) : build_model_r2(*g, a.d, lambda);
    if (a.fixed_n) fix_length(m, *a.fixed_n);
    std::ofstream f(a.export_path);
    if (!f) throw Error(ErrorKind::OutOfRange, "cannot write " + a.export_path);
    f << export_lp(m);
    if (cfg.json)
      std::cout << json{{"exported", a.export_path}, {"variables", m.variables.size()}, {"constraints", m.constraints.size()},
                        {"lambda", lambda}}
                       .dump(2)
                << "\n";
    else
      std::cout << "wrote " << a.export_path << ": " << m.variables.size() << " variables, " << m.constraints.size()
                << " constraints, lambda=" << lambda << "\n";
    if (!a.solve) return 0;
  }
  if (!a.solve) throw Error(ErrorKind::PreconditionFailed, "ilp needs --export or --solve");
  SolveOptions opt;
  opt.timeout_seconds = cfg.timeout;
  opt.point_cap = cfg.point_cap;
  const SolveResult res = solve_min_length(g, a.d, a.r, opt);
  if (res.status == SolveStatus::Timeout) {
    if (cfg.json)
      std::cout << json{{"status", "timeout"}, {"lower", res.lower}, {"upper", res.upper}, {"log", res.log}}.dump(2) << "\n";
    else
      std::cout << "timeout: " << res.lower << " <= n_opt <= " << res.upper << "\n";
    return 3;
  }
  const json witness = multiset_to_json(*res.witness, a.q == 2 ? PointEncoding::Binary : PointEncoding::LexIndex);
  if (!a.witness_path.empty()) write_multiset_file(a.witness_path, *res.witness,
                                                   a.q == 2 ? PointEncoding::Binary : PointEncoding::LexIndex);
  if (cfg.json) {
    std::cout << json{{"status", "optimal"}, {"n", res.n}, {"witness", witness}, {"log", res.log}}.dump(2) << "\n";
  } else {
    std::cout << "n_opt=" << res.n << "\n";
    for (const auto& l : res.log) std::cout << "  " << l << "\n";
    if (a.witness_path.empty()) std::cout << witness.dump() << "\n";
    else std::cout << "witness written to " << a.witness_path << "\n";
  }
  return 0;
}

// ---- verify-paper ----

int cmd_verify(const Config& cfg, const std::string& filter, bool minimality, std::size_t solver_cap) {
  const Registry reg = load_registry(cfg.assets);
  VerifyOptions opt;
  opt.check_minimality = minimality;
  opt.solver_point_cap = solver_cap;
  opt.solver_timeout_seconds = std::min(cfg.timeout, opt.solver_timeout_seconds);
  const auto summary = verify_all(reg, RecordFilter::parse(filter), opt);
  if (cfg.json)
    std::cout << report_to_json(summary).dump(2) << "\n";
  else
    std::cout << format_report_table(summary);
  return summary.all_passed() ? 0 : 1;
}

int cmd_manifest(const Config& cfg, bool write) {
  if (write) {
    write_manifest(cfg.assets);
    std::cout << "wrote " << cfg.assets << "/MANIFEST\n";
    return 0;
  }
  check_manifest(cfg.assets);
  std::cout << "manifest ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally recoverable codes: analysis, constructions, bounds, exact search"};
  app.require_subcommand(1);
  Config cfg;
  cfg.assets = default_asset_dir();
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--assets", cfg.assets, "asset directory (default: $LRC_ASSET_DIR or the build-time path)");
  app.add_option("--timeout", cfg.timeout, "solver timeout in seconds")->check(CLI::Range(1.0, 1e9));
  app.add_option("--point-cap", cfg.point_cap, "largest geometry the search accepts")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads (searches run single-threaded)")->check(CLI::PositiveNumber);

  std::string analyze_path;
  bool certificate = false;
  auto* analyze = app.add_subcommand("analyze", "parameters and locality of a matrix or multiset file");
  analyze->add_option("file", analyze_path, "matrix text file, or multiset .json")->required();
  analyze->add_flag("--certificate", certificate, "print every recovery set");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a code and compare predicted with measured parameters");
  construct->add_option("name", ca.name,
                        "simplex | ss | ss-griesmer | reed-muller | parity | line | line-rm | line-parity | cycle-d3 | "
                        "d4 | small-length | small-dimension | r1")
      ->required();
  construct->add_option("--k", ca.k, "dimension");
  construct->add_option("--q", ca.q, "field order");
  construct->add_option("--t", ca.t, "copies (simplex)");
  construct->add_option("--m", ca.m, "Reed-Muller parameter");
  construct->add_option("--d", ca.d, "distance (ss-griesmer, small-dimension)");
  construct->add_option("--r", ca.r, "locality (small-length, small-dimension)");
  construct->add_option("--type", ca.type, "Solomon-Stiffler type sigma:e_{k-2},...,e_0");
  construct->add_option("--variant", ca.variant, "r1 variant: double | add-double-ambient | triple-minus-one");
  construct->add_option("--input", ca.input, "input code for line and r1");
  construct->add_option("--out", ca.out, "write the result (.json: multiset, otherwise matrix text)");
  construct->add_option("--encoding", ca.encoding, "multiset encoding: binary | lexindex");

  int bq = 2, bk = 0, br = 2;
  long long bd = 0;
  auto* bound = app.add_subcommand("bound", "lower bounds and the registry value for n_q(k,d,r)");
  bound->add_option("--q", bq)->required();
  bound->add_option("--k", bk)->required();
  bound->add_option("--d", bd)->required();
  bound->add_option("--r", br)->required();

  IlpArgs ia;
  long long fixed_n = 0, lambda = 0;
  auto* ilp = app.add_subcommand("ilp", "export the integer program or solve for the shortest length");
  ilp->add_option("--q", ia.q)->required();
  ilp->add_option("--k", ia.k)->required();
  ilp->add_option("--d", ia.d)->required();
  ilp->add_option("--r", ia.r)->required();
  auto* export_opt = ilp->add_option("--export", ia.export_path, "write the LP file");
  ilp->add_flag("--solve", ia.solve, "run the exact search");
  auto* n_opt = ilp->add_option("--n", fixed_n, "fix the length in the exported model");
  auto* lambda_opt = ilp->add_option("--lambda", lambda, "multiplicity cap used in the model");
  ilp->add_option("--witness", ia.witness_path, "write the optimal multiset here");
  n_opt->needs(export_opt);

  std::string filter;
  bool no_minimality = false;
  std::size_t solver_cap = 15;
  auto* verify = app.add_subcommand("verify-paper", "check every registry record");
  verify->add_option("--filter", filter, "e.g. q=2,k=5 or matrices or lists,kind=exact");
  verify->add_flag("--no-minimality", no_minimality, "skip the n-1 infeasibility checks");
  verify->add_option("--solver-cap", solver_cap, "largest geometry for the n-1 check")->check(CLI::PositiveNumber);

  bool write = false;
  auto* manifest = app.add_subcommand("manifest", "check (or rewrite) the asset checksums");
  manifest->add_flag("--write", write, "recompute and write MANIFEST");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, analyze_path, certificate);
    if (*construct) return cmd_construct(cfg, ca);
    if (*bound) return cmd_bound(cfg, bq, bk, bd, br);
    if (*ilp) {
      if (*n_opt) ia.fixed_n = fixed_n;
      if (*lambda_opt) ia.lambda = lambda;
      return cmd_ilp(cfg, ia);
    }
    if (*verify) return cmd_verify(cfg, filter, !no_minimality, solver_cap);
    if (*manifest) return cmd_manifest(cfg, write);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
