#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/geometry.hpp"

namespace lrc {

enum class VarKind { Integer, Binary };
enum class Sense { LessEq, GreaterEq, Equal };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Integer;
};

struct Term {
  std::size_t var;
  long long coef;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::LessEq;
  long long rhs = 0;
};

struct IlpModel {
  int q = 0, k = 0, d = 0, r = 0;
  long long lambda = 0;
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::size_t objective = 0;  // index of n, minimised

  std::optional<std::size_t> find(std::string_view name) const;
};

// r=1: x_P, y_P per point and n. BadLambda if lambda < 2.
IlpModel build_model_r1(const Geometry& g, int d, long long lambda);
// r=2: adds u_P per point and z_L per line. BadK for k=1, BadLambda if lambda < 1.
IlpModel build_model_r2(const Geometry& g, int d, long long lambda);

// ceil(d / q^(k-1)) * [k choose 1]_q
long long default_lambda(int k, long long d, int q);
// Largest multiplicity any point can have in an [n,k,d]_q multiset, k >= 2.
long long multiplicity_cap(long long n, long long d, int k, int q);
// min(lambda, multiplicity_cap(n, d, k, q)), clamped at 0.
long long tighten_lambda(long long lambda, long long n, long long d, int k, int q);

// Appends `n = value` so the exported model is a feasibility question.
void fix_length(IlpModel& m, long long value);

// CPLEX LP text. Continuation lines are indented; one declaration per line in
// the General and Binary sections.
std::string export_lp(const IlpModel& m);
// Reads the subset of LP format written by export_lp. Metadata comes from the
// leading comment. ParseError on malformed input.
IlpModel parse_lp(std::string_view text);

// Checks an assignment against every constraint; values indexed like variables.
bool satisfies(const IlpModel& m, const std::vector<long long>& values);

struct SolveOptions {
  double timeout_seconds = 300.0;  // per feasibility question
  std::uint64_t log_every = 1u << 20;  // nodes between log lines
  std::size_t point_cap = 63;
  std::optional<long long> start_n;  // default: max(griesmer, locality floor)
};

enum class SolveStatus { Optimal, Timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  long long n = 0;      // optimum when Optimal
  long long lower = 0;  // every length below this is infeasible
  long long upper = 0;  // a witness exists at this length
  std::optional<PointMultiset> witness;
  std::vector<std::string> log;
};

struct FeasibilityResult {
  bool decided = true;  // false on timeout
  std::optional<PointMultiset> witness;
  std::uint64_t nodes = 0;
};

// Is there a spanning multiset of cardinality n, distance >= d, locality <= r?
FeasibilityResult feasible_length(const GeometryPtr& g, long long n, int d, int r, const SolveOptions& opt,
                                  std::vector<std::string>* log = nullptr);

// Spanning multiset of cardinality n and distance >= d, any locality.
FeasibilityResult feasible_length_any_locality(const GeometryPtr& g, long long n, int d, const SolveOptions& opt);

// First feasible n upward from the lower bound; monotone in n, so optimal.
SolveResult solve_min_length(const GeometryPtr& g, int d, int r, const SolveOptions& opt = {});

}  // namespace lrc
