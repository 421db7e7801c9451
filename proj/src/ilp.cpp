#include "lrc/ilp.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/error.hpp"
#include "lrc/locality.hpp"

namespace lrc {

namespace {

long long theta(int m, int q) {
  long long s = 0, p = 1;
  for (int i = 0; i < m; ++i, p *= q) s += p;
  return s;
}

long long ipow(int q, int e) {
  long long p = 1;
  for (int i = 0; i < e; ++i) p *= q;
  return p;
}

struct Builder {
  IlpModel m;

  std::size_t var(std::string name, VarKind kind) {
    m.variables.push_back({std::move(name), kind});
    return m.variables.size() - 1;
  }
  void add(std::string name, std::vector<Term> terms, Sense s, long long rhs) {
    m.constraints.push_back({std::move(name), std::move(terms), s, rhs});
  }
};

// Shared prefix of both models: n, x_P, and the length, spanning and
// hyperplane constraints.
Builder common_prefix(const Geometry& g, int d, int r, long long lambda) {
  if (d < 1) throw Error(ErrorKind::PreconditionFailed, "d must be positive");
  Builder b;
  b.m.q = g.q();
  b.m.k = g.k();
  b.m.d = d;
  b.m.r = r;
  b.m.lambda = lambda;
  const std::size_t np = g.num_points();
  b.m.objective = b.var("n", VarKind::Integer);
  for (std::size_t p = 0; p < np; ++p) b.var("xP" + std::to_string(p), VarKind::Integer);
  return b;
}

void add_prefix_constraints(Builder& b, const Geometry& g) {
  const std::size_t np = g.num_points();
  auto x = [](std::size_t p) { return 1 + p; };
  std::vector<Term> sum;
  for (std::size_t p = 0; p < np; ++p) sum.push_back({x(p), 1});
  sum.push_back({0, -1});
  b.add("length", std::move(sum), Sense::Equal, 0);
  for (int i = 0; i < g.k(); ++i)
    b.add("span" + std::to_string(i + 1), {{x(g.unit_point(i)), 1}}, Sense::GreaterEq, 1);
  for (PointIndex h = 0; h < g.num_hyperplanes(); ++h) {
    std::vector<Term> t;
    for (PointIndex p : g.hyperplane_points(h)) t.push_back({x(p), 1});
    t.push_back({0, -1});
    b.add("hyp" + std::to_string(h), std::move(t), Sense::LessEq, -b.m.d);
  }
}

}  // namespace

std::optional<std::size_t> IlpModel::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i].name == name) return i;
  return std::nullopt;
}

IlpModel build_model_r1(const Geometry& g, int d, long long lambda) {
  if (lambda < 2) throw Error(ErrorKind::BadLambda, "lambda must be at least 2 for r=1");
  Builder b = common_prefix(g, d, 1, lambda);
  const std::size_t np = g.num_points();
  const std::size_t y0 = b.m.variables.size();
  for (std::size_t p = 0; p < np; ++p) b.var("yP" + std::to_string(p), VarKind::Binary);
  add_prefix_constraints(b, g);
  for (std::size_t p = 0; p < np; ++p)
    b.add("twoy" + std::to_string(p), {{1 + p, 1}, {y0 + p, -2}}, Sense::GreaterEq, 0);
  for (std::size_t p = 0; p < np; ++p)
    b.add("capy" + std::to_string(p), {{1 + p, 1}, {y0 + p, -lambda}}, Sense::LessEq, 0);
  return std::move(b.m);
}

IlpModel build_model_r2(const Geometry& g, int d, long long lambda) {
  if (g.k() < 2) throw Error(ErrorKind::BadK, "the r=2 model needs k >= 2; use the r=1 model");
  if (lambda < 1) throw Error(ErrorKind::BadLambda, "lambda must be positive");
  Builder b = common_prefix(g, d, 2, lambda);
  const std::size_t np = g.num_points();
  const std::size_t nl = g.num_lines();
  const std::size_t y0 = b.m.variables.size();
  for (std::size_t p = 0; p < np; ++p) b.var("yP" + std::to_string(p), VarKind::Binary);
  const std::size_t u0 = b.m.variables.size();
  for (std::size_t p = 0; p < np; ++p) b.var("uP" + std::to_string(p), VarKind::Binary);
  const std::size_t z0 = b.m.variables.size();
  for (std::size_t l = 0; l < nl; ++l) b.var("zL" + std::to_string(l), VarKind::Binary);
  add_prefix_constraints(b, g);
  for (std::size_t p = 0; p < np; ++p)
    b.add("lowu" + std::to_string(p), {{1 + p, 1}, {u0 + p, -1}}, Sense::GreaterEq, 0);
  for (std::size_t p = 0; p < np; ++p)
    b.add("capu" + std::to_string(p), {{1 + p, 1}, {u0 + p, -lambda}}, Sense::LessEq, 0);
  for (std::size_t p = 0; p < np; ++p)
    b.add("twoy" + std::to_string(p), {{1 + p, 1}, {y0 + p, -2}}, Sense::GreaterEq, 0);
  for (std::size_t l = 0; l < nl; ++l) {
    std::vector<Term> t;
    for (PointIndex p : g.line_points(l)) t.push_back({u0 + p, 1});
    t.push_back({z0 + l, -3});
    b.add("line" + std::to_string(l), std::move(t), Sense::GreaterEq, 0);
  }
  for (std::size_t p = 0; p < np; ++p) {
    std::vector<Term> t{{y0 + p, 1}};
    for (std::uint32_t l : g.lines_through(static_cast<PointIndex>(p))) t.push_back({z0 + l, 1});
    t.push_back({u0 + p, -1});
    b.add("cover" + std::to_string(p), std::move(t), Sense::GreaterEq, 0);
  }
  return std::move(b.m);
}

long long default_lambda(int k, long long d, int q) {
  const long long top = ipow(q, k - 1);
  return (d + top - 1) / top * theta(k, q);
}

long long multiplicity_cap(long long n, long long d, int k, int q) {
  if (k < 1) throw Error(ErrorKind::BadK, "k must be positive");
  if (k == 1) return n;
  const long long num = (n - d) * theta(k - 1, q) - n * theta(k - 2, q);
  const long long den = ipow(q, k - 2);
  // floor division that respects negative numerators
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

long long tighten_lambda(long long lambda, long long n, long long d, int k, int q) {
  return std::max(0LL, std::min(lambda, multiplicity_cap(n, d, k, q)));
}

void fix_length(IlpModel& m, long long value) {
  m.constraints.push_back({"fixlength", {{m.objective, 1}}, Sense::Equal, value});
}

namespace {

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEq: return "<=";
    case Sense::GreaterEq: return ">=";
    case Sense::Equal: return "=";
  }
  return "=";
}

}  // namespace

std::string export_lp(const IlpModel& m) {
  std::ostringstream os;
  os << "\\ lrc q=" << m.q << " k=" << m.k << " d=" << m.d << " r=" << m.r << " lambda=" << m.lambda << "\n";
  os << "Minimize\n obj: " << m.variables[m.objective].name << "\n";
  os << "Subject To\n";
  for (const auto& c : m.constraints) {
    os << " " << c.name << ":";
    int on_line = 0;
    for (std::size_t i = 0; i < c.terms.size(); ++i) {
      if (on_line == 12) {
        os << "\n   ";
        on_line = 0;
      }
      const auto& t = c.terms[i];
      long long a = t.coef;
      if (a < 0) {
        os << " -";
        a = -a;
      } else if (i > 0) {
        os << " +";
      }
      if (a != 1) os << " " << a;
      os << " " << m.variables[t.var].name;
      ++on_line;
    }
    os << " " << sense_text(c.sense) << " " << c.rhs << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : m.variables)
    if (v.kind == VarKind::Integer) os << " " << v.name << " >= 0\n";
  os << "General\n";
  for (const auto& v : m.variables)
    if (v.kind == VarKind::Integer) os << " " << v.name << "\n";
  os << "Binary\n";
  for (const auto& v : m.variables)
    if (v.kind == VarKind::Binary) os << " " << v.name << "\n";
  os << "End\n";
  return os.str();
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(s, &pos);
  } catch (...) {
    return false;
  }
  return pos == s.size();
}

}  // namespace

IlpModel parse_lp(std::string_view text) {
  IlpModel m;
  enum class Section { None, Objective, Constraints, Bounds, General, Binary, Done } sec = Section::None;
  std::vector<std::string> cons_tokens;
  std::vector<std::pair<std::string, VarKind>> decls;
  std::string objective_name;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r") + 1);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '\\') {
      std::istringstream meta(trimmed.substr(1));
      std::string tok;
      while (meta >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        long long v = 0;
        if (!parse_int(tok.substr(eq + 1), v)) continue;
        const std::string key = tok.substr(0, eq);
        if (key == "q") m.q = static_cast<int>(v);
        else if (key == "k") m.k = static_cast<int>(v);
        else if (key == "d") m.d = static_cast<int>(v);
        else if (key == "r") m.r = static_cast<int>(v);
        else if (key == "lambda") m.lambda = v;
      }
      continue;
    }
    const std::string key = lower(trimmed);
    if (key == "minimize" || key == "minimise" || key == "min") { sec = Section::Objective; continue; }
    if (key == "subject to" || key == "st" || key == "s.t.") { sec = Section::Constraints; continue; }
    if (key == "bounds") { sec = Section::Bounds; continue; }
    if (key == "general" || key == "generals") { sec = Section::General; continue; }
    if (key == "binary" || key == "binaries") { sec = Section::Binary; continue; }
    if (key == "end") { sec = Section::Done; continue; }
    std::istringstream ts(trimmed);
    std::string tok;
    switch (sec) {
      case Section::Objective: {
        std::vector<std::string> toks;
        while (ts >> tok) toks.push_back(tok);
        if (!toks.empty() && toks.front().back() == ':') toks.erase(toks.begin());
        if (toks.size() != 1) fail("objective must be a single variable");
        objective_name = toks[0];
        break;
      }
      case Section::Constraints:
        while (ts >> tok) cons_tokens.push_back(tok);
        break;
      case Section::Bounds: {
        std::vector<std::string> toks;
        while (ts >> tok) toks.push_back(tok);
        if (toks.size() != 3 || toks[1] != ">=" || toks[2] != "0") fail("unsupported bound '" + trimmed + "'");
        break;
      }
      case Section::General:
        while (ts >> tok) decls.emplace_back(tok, VarKind::Integer);
        break;
      case Section::Binary:
        while (ts >> tok) decls.emplace_back(tok, VarKind::Binary);
        break;
      default:
        fail("text outside any section");
    }
  }
  if (sec != Section::Done) fail("missing End");
  for (auto& [name, kind] : decls) {
    if (m.find(name)) fail("variable declared twice: " + name);
    m.variables.push_back({name, kind});
  }
  auto obj = m.find(objective_name);
  if (!obj) fail("objective variable not declared");
  m.objective = *obj;

  std::size_t i = 0;
  while (i < cons_tokens.size()) {
    Constraint c;
    if (cons_tokens[i].back() == ':') {
      c.name = cons_tokens[i].substr(0, cons_tokens[i].size() - 1);
      ++i;
    }
    long long sign = 1;
    long long coef = 1;
    bool closed = false;
    while (i < cons_tokens.size()) {
      const std::string& t = cons_tokens[i++];
      if (t == "+") { sign = 1; continue; }
      if (t == "-") { sign = -1; continue; }
      if (t == "<=" || t == ">=" || t == "=") {
        c.sense = t == "<=" ? Sense::LessEq : t == ">=" ? Sense::GreaterEq : Sense::Equal;
        if (i >= cons_tokens.size() || !parse_int(cons_tokens[i], c.rhs)) fail("constraint " + c.name + " lacks a right-hand side");
        ++i;
        closed = true;
        break;
      }
      long long v = 0;
      if (parse_int(t, v)) {
        coef = v;
        continue;
      }
      auto var = m.find(t);
      if (!var) fail("undeclared variable '" + t + "' in constraint " + c.name);
      c.terms.push_back({*var, sign * coef});
      sign = 1;
      coef = 1;
    }
    if (!closed) fail("unterminated constraint " + c.name);
    m.constraints.push_back(std::move(c));
  }
  return m;
}

bool satisfies(const IlpModel& m, const std::vector<long long>& values) {
  if (values.size() != m.variables.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) return false;
    if (m.variables[i].kind == VarKind::Binary && values[i] > 1) return false;
  }
  for (const auto& c : m.constraints) {
    long long s = 0;
    for (const auto& t : c.terms) s += t.coef * values[t.var];
    const bool ok = c.sense == Sense::LessEq ? s <= c.rhs : c.sense == Sense::GreaterEq ? s >= c.rhs : s == c.rhs;
    if (!ok) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct TimedOut {};

// Depth-first assignment of point multiplicities. Points are visited unit
// points first; after relabelling by a greedy basis every multiset can be
// brought to x(e1) >= ... >= x(ek) >= 1 and x(Q) <= x(e_m) where m is the
// last nonzero coordinate of Q.
class Search {
 public:
  Search(const GeometryPtr& g, long long n, int d, int r, const SolveOptions& opt, std::vector<std::string>* log)
      : g_(g), geo_(*g), n_(n), d_(d), r_(r), opt_(opt), log_(log) {
    const std::size_t np = geo_.num_points();
    const int k = geo_.k();
    for (int i = 0; i < k; ++i) order_.push_back(geo_.unit_point(i));
    std::vector<char> is_unit(np, 0);
    for (PointIndex u : order_) is_unit[u] = 1;
    for (PointIndex p = 0; p < np; ++p)
      if (!is_unit[p]) order_.push_back(p);
    pos_of_.assign(np, 0);
    for (std::size_t i = 0; i < np; ++i) pos_of_[order_[i]] = i;
    guard_.assign(np, 0);
    for (PointIndex p = 0; p < np; ++p) {
      auto v = geo_.point(p);
      int last = 0;
      for (int c = 0; c < k; ++c)
        if (v[c] != 0) last = c;
      guard_[p] = geo_.unit_point(last);
    }
    cap_ = multiplicity_cap(n, d, k, geo_.q());
    long long lo = k >= 2 ? n - static_cast<long long>(geo_.q()) * (n - d) : 0;
    lo = std::max(0LL, lo);
    lo_.assign(np, lo);
    for (PointIndex u : order_) {
      if (pos_of_[u] >= static_cast<std::size_t>(k)) break;
      lo_[u] = std::max(lo_[u], 1LL);
    }
    if (r_ == 1)
      for (auto& l : lo_)
        if (l == 1) l = 2;
    x_.assign(np, 0);
    hyp_.assign(geo_.num_hyperplanes(), 0);
    in_h_.assign(geo_.num_hyperplanes(), std::vector<char>(np, 0));
    for (PointIndex h = 0; h < geo_.num_hyperplanes(); ++h)
      for (PointIndex p : geo_.hyperplane_points(h)) in_h_[h][p] = 1;
    suf_lo_.assign(np + 1, 0);
    suf_lo_in_.assign(geo_.num_hyperplanes(), std::vector<long long>(np + 1, 0));
    for (std::size_t i = np; i-- > 0;) {
      const PointIndex p = order_[i];
      suf_lo_[i] = suf_lo_[i + 1] + lo_[p];
      for (PointIndex h = 0; h < geo_.num_hyperplanes(); ++h)
        suf_lo_in_[h][i] = suf_lo_in_[h][i + 1] + (in_h_[h][p] ? lo_[p] : 0);
    }
    suf_cap_.assign(np + 1, 0);
    suf_cap_out_.assign(geo_.num_hyperplanes(), std::vector<long long>(np + 1, 0));
    if (r_ == 2) {
      line_pos_.assign(geo_.num_lines(), 0);
      line_open_.assign(geo_.num_lines(), 0);
      for (std::size_t l = 0; l < geo_.num_lines(); ++l) line_open_[l] = static_cast<int>(geo_.line_points(l).size());
    }
    start_ = Clock::now();
  }

  FeasibilityResult run() {
    FeasibilityResult res;
    if (cap_ < 1 || suf_lo_[0] > n_) {
      res.nodes = 0;
      return res;
    }
    try {
      if (dfs(0, n_)) {
        PointMultiset m(g_);
        for (PointIndex p = 0; p < geo_.num_points(); ++p) m.set(p, static_cast<std::uint32_t>(x_[p]));
        res.witness = std::move(m);
      }
    } catch (const TimedOut&) {
      res.decided = false;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  long long cap_of(std::size_t i) const {
    const PointIndex p = order_[i];
    const int k = geo_.k();
    if (i < static_cast<std::size_t>(k)) return i == 0 ? cap_ : std::min(cap_, x_[order_[i - 1]]);
    return std::min(cap_, x_[guard_[p]]);
  }

  // Caps of non-unit points are fixed once every unit point is assigned.
  void build_cap_suffixes() {
    const std::size_t np = geo_.num_points();
    const std::size_t k = static_cast<std::size_t>(geo_.k());
    for (std::size_t i = np; i-- > k;) {
      const long long c = cap_of(i);
      suf_cap_[i] = suf_cap_[i + 1] + c;
      for (PointIndex h = 0; h < geo_.num_hyperplanes(); ++h)
        suf_cap_out_[h][i] = suf_cap_out_[h][i + 1] + (in_h_[h][order_[i]] ? 0 : c);
    }
  }

  // During the unit phase, bound every unassigned point by the last unit value.
  void unit_phase_caps(std::size_t pos, long long& total, std::vector<long long>& out) const {
    const std::size_t np = geo_.num_points();
    const long long c = pos == 0 ? cap_ : std::min(cap_, x_[order_[pos - 1]]);
    total = 0;
    out.assign(geo_.num_hyperplanes(), 0);
    for (std::size_t i = pos; i < np; ++i) {
      total += c;
      for (PointIndex h = 0; h < geo_.num_hyperplanes(); ++h)
        if (!in_h_[h][order_[i]]) out[h] += c;
    }
  }

  bool bounds_ok(std::size_t pos, long long rem) {
    const long long assigned = n_ - rem;
    long long total_cap;
    const std::vector<long long>* out_caps;
    std::vector<long long> tmp;
    if (pos < static_cast<std::size_t>(geo_.k())) {
      unit_phase_caps(pos, total_cap, tmp);
      out_caps = &tmp;
    } else {
      total_cap = suf_cap_[pos];
      out_caps = nullptr;
    }
    if (rem > total_cap || rem < suf_lo_[pos]) return false;
    if (r_ == 1 && rem == 1) return false;
    for (PointIndex h = 0; h < geo_.num_hyperplanes(); ++h) {
      const long long oc = out_caps ? (*out_caps)[h] : suf_cap_out_[h][pos];
      const long long lo_in = suf_lo_in_[h][pos];
      const long long in_now = hyp_[h];
      const long long out_now = assigned - in_now;
      const long long forced_in = std::max(lo_in, rem - oc);
      if (in_now + forced_in > n_ - d_) return false;
      const long long max_out = std::min(oc, rem - lo_in);
      if (out_now + max_out < d_) return false;
    }
    return true;
  }

  bool line_alive(std::size_t l, bool more_mass) const {
    return line_pos_[l] + (more_mass ? line_open_[l] : 0) >= 3;
  }

  bool point_covered(PointIndex p, bool more_mass) const {
    for (std::uint32_t l : geo_.lines_through(p))
      if (line_alive(l, more_mass)) return true;
    return false;
  }

  // A multiplicity-one point needs a line with three support points.
  bool locality_ok(PointIndex just, long long rem) const {
    const bool more = rem > 0;
    if (x_[just] == 1 && !point_covered(just, more)) return false;
    if (x_[just] == 0) {
      for (std::uint32_t l : geo_.lines_through(just))
        for (PointIndex p : geo_.line_points(l))
          if (p != just && pos_of_[p] < pos_of_[just] && x_[p] == 1 && !point_covered(p, more)) return false;
    }
    return true;
  }

  void tick(std::size_t pos, long long rem) {
    ++nodes_;
    if ((nodes_ & 4095) == 0) {
      const double el = std::chrono::duration<double>(Clock::now() - start_).count();
      if (el > opt_.timeout_seconds) throw TimedOut{};
    }
    if (log_ && opt_.log_every && nodes_ % opt_.log_every == 0) {
      const double el = std::chrono::duration<double>(Clock::now() - start_).count();
      char buf[160];
      std::snprintf(buf, sizeof buf, "n=%lld nodes=%llu depth=%zu remaining=%lld elapsed=%.1fs", n_,
                    static_cast<unsigned long long>(nodes_), pos, rem, el);
      log_->push_back(buf);
    }
  }

  bool dfs(std::size_t pos, long long rem) {
    tick(pos, rem);
    const std::size_t np = geo_.num_points();
    const std::size_t k = static_cast<std::size_t>(geo_.k());
    if (pos == k) build_cap_suffixes();
    if (!bounds_ok(pos, rem)) return false;
    if (pos == np) {
      if (rem != 0) return false;
      if (r_ == 2)
        for (PointIndex p = 0; p < np; ++p)
          if (x_[p] == 1 && !point_covered(p, false)) return false;
      return true;
    }
    const PointIndex p = order_[pos];
    const long long hi = std::min(cap_of(pos), rem - suf_lo_[pos + 1]);
    for (long long v = hi; v >= lo_[p]; --v) {
      if (r_ == 1 && v == 1) continue;
      x_[p] = v;
      bool ok = true;
      for (PointIndex h : geo_.hyperplane_points(p)) {
        hyp_[h] += v;
        if (hyp_[h] > n_ - d_) ok = false;
      }
      if (r_ == 2) {
        for (std::uint32_t l : geo_.lines_through(p)) {
          --line_open_[l];
          if (v > 0) ++line_pos_[l];
        }
        if (ok) ok = locality_ok(p, rem - v);
      }
      if (ok && dfs(pos + 1, rem - v)) return true;
      for (PointIndex h : geo_.hyperplane_points(p)) hyp_[h] -= v;
      if (r_ == 2)
        for (std::uint32_t l : geo_.lines_through(p)) {
          ++line_open_[l];
          if (v > 0) --line_pos_[l];
        }
      x_[p] = 0;
    }
    return false;
  }

  GeometryPtr g_;
  const Geometry& geo_;
  long long n_;
  int d_, r_;
  const SolveOptions& opt_;
  std::vector<std::string>* log_;
  std::vector<PointIndex> order_;
  std::vector<std::size_t> pos_of_;
  std::vector<PointIndex> guard_;
  long long cap_ = 0;
  std::vector<long long> lo_, x_, hyp_;
  std::vector<std::vector<char>> in_h_;
  std::vector<long long> suf_lo_, suf_cap_;
  std::vector<std::vector<long long>> suf_lo_in_, suf_cap_out_;
  std::vector<int> line_pos_, line_open_;
  std::uint64_t nodes_ = 0;
  Clock::time_point start_;
};

}  // namespace

FeasibilityResult feasible_length(const GeometryPtr& g, long long n, int d, int r, const SolveOptions& opt,
                                  std::vector<std::string>* log) {
  if (r != 1 && r != 2) throw Error(ErrorKind::BadR, "only r = 1 and r = 2 are modelled");
  if (g->num_points() > opt.point_cap)
    throw Error(ErrorKind::SizeCap, std::to_string(g->num_points()) + " points exceed the search cap of " +
                                        std::to_string(opt.point_cap));
  if (d < 1) throw Error(ErrorKind::PreconditionFailed, "d must be positive");
  // For k=1 every code of length >= 2 has locality 1.
  const int rr = g->k() == 1 ? 1 : r;
  Search s(g, n, d, rr, opt, log);
  return s.run();
}

FeasibilityResult feasible_length_any_locality(const GeometryPtr& g, long long n, int d, const SolveOptions& opt) {
  if (g->num_points() > opt.point_cap)
    throw Error(ErrorKind::SizeCap, std::to_string(g->num_points()) + " points exceed the search cap of " +
                                        std::to_string(opt.point_cap));
  if (d < 1) throw Error(ErrorKind::PreconditionFailed, "d must be positive");
  Search s(g, n, d, 0, opt, nullptr);
  return s.run();
}

SolveResult solve_min_length(const GeometryPtr& g, int d, int r, const SolveOptions& opt) {
  if (r != 1 && r != 2) throw Error(ErrorKind::BadR, "only r = 1 and r = 2 are modelled");
  const int k = g->k(), q = g->q();
  SolveResult res;
  long long n = std::max<long long>(static_cast<long long>(griesmer(k, d, q)), locality_length_floor(k, r));
  if (opt.start_n) n = std::max(n, *opt.start_n);
  const long long top = ipow(q, k - 1);
  const long long t = std::max<long long>(r == 1 ? 2 : 1, (d + top - 1) / top);
  res.upper = t * theta(k, q);
  res.lower = n;
  for (;; ++n) {
    auto fr = feasible_length(g, n, d, r, opt, &res.log);
    char buf[160];
    if (!fr.decided) {
      std::snprintf(buf, sizeof buf, "n=%lld timeout after %llu nodes", n, static_cast<unsigned long long>(fr.nodes));
      res.log.push_back(buf);
      res.status = SolveStatus::Timeout;
      res.lower = n;
      return res;
    }
    std::snprintf(buf, sizeof buf, "n=%lld %s nodes=%llu lambda=%lld", n, fr.witness ? "feasible" : "infeasible",
                  static_cast<unsigned long long>(fr.nodes),
                  tighten_lambda(default_lambda(k, d, q), n, d, k, q));
    res.log.push_back(buf);
    if (fr.witness) {
      const auto& w = *fr.witness;
      if (!w.is_spanning() || w.cardinality() != static_cast<std::uint64_t>(n) ||
          w.minimum_distance() < static_cast<std::uint64_t>(d) || !locality_geometric(w, r))
        throw Error(ErrorKind::InconsistentInput, "search produced a witness that fails re-verification");
      res.status = SolveStatus::Optimal;
      res.n = res.lower = res.upper = n;
      res.witness = std::move(fr.witness);
      return res;
    }
    res.lower = n + 1;
  }
}

}  // namespace lrc
