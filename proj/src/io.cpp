#include "lrc/io.hpp"

#include "lrc/error.hpp"

#include <fstream>
#include <sstream>

namespace lrc {

namespace {

std::string where(int line, int column) { return "line " + std::to_string(line) + ", column " + std::to_string(column); }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearCode parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int q = 0, k = 0, n = 0;
  bool have_header = false;
  Matrix rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> q >> k >> n)) throw Error(ErrorKind::ParseError, where(lineno, 1) + ": expected header 'q k n'");
      std::string extra;
      if (hs >> extra) throw Error(ErrorKind::ParseError, where(lineno, 1) + ": trailing text after header");
      if (k < 1 || n < 1) throw Error(ErrorKind::ParseError, where(lineno, 1) + ": k and n must be positive");
      have_header = true;
      continue;
    }
    const auto last = line.find_last_not_of(" \t");
    const std::string_view digits(line.data() + first, last - first + 1);
    if (static_cast<int>(rows.size()) == k)
      throw Error(ErrorKind::ParseError, where(lineno, static_cast<int>(first) + 1) + ": more than k rows");
    if (static_cast<int>(digits.size()) != n)
      throw Error(ErrorKind::RaggedRows, where(lineno, static_cast<int>(first) + 1) + ": row has " +
                                             std::to_string(digits.size()) + " symbols, expected " + std::to_string(n));
    Row r;
    r.reserve(n);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char ch = digits[i];
      if (ch < '0' || ch > '9' || ch - '0' >= q)
        throw Error(ErrorKind::BadSymbol, where(lineno, static_cast<int>(first + i) + 1) + ": symbol '" +
                                              std::string(1, ch) + "' is not in GF(" + std::to_string(q) + ")");
      r.push_back(static_cast<Element>(ch - '0'));
    }
    rows.push_back(std::move(r));
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing header line");
  if (static_cast<int>(rows.size()) != k)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(k) + " rows, found " + std::to_string(rows.size()));
  return code_from_matrix(make_field(q), rows);
}

LinearCode read_matrix_file(const std::string& path) { return parse_matrix_text(read_text_file(path)); }

std::string format_matrix_text(const LinearCode& c) {
  std::string out = std::to_string(c.q()) + " " + std::to_string(c.k()) + " " + std::to_string(c.n()) + "\n";
  for (const auto& r : c.generator()) {
    for (Element e : r) out.push_back(static_cast<char>('0' + e));
    out.push_back('\n');
  }
  return out;
}

void write_matrix_file(const std::string& path, const LinearCode& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << format_matrix_text(c);
}

PointMultiset multiset_from_json(const nlohmann::json& j, GeometryPtr geometry) {
  try {
    const int q = j.at("q").get<int>();
    const int k = j.at("k").get<int>();
    const auto encoding = parse_encoding(j.at("encoding").get<std::string>());
    if (!geometry) geometry = build_geometry(make_field(q), k);
    if (geometry->q() != q || geometry->k() != k)
      throw Error(ErrorKind::GeometryMismatch, "multiset file geometry differs from the requested one");
    PointMultiset m(geometry);
    if (j.contains("lists")) {
      // multiplicity -> points; a point listed twice accumulates
      for (const auto& [mult, codes] : j.at("lists").items()) {
        std::size_t used = 0;
        const auto value = std::stoul(mult, &used);
        if (used != mult.size()) throw Error(ErrorKind::ParseError, "bad multiplicity '" + mult + "'");
        for (const auto& code : codes)
          m.add(decode_point(*geometry, code.get<std::uint64_t>(), encoding), static_cast<std::uint32_t>(value));
      }
      return m;
    }
    for (const auto& [code, mult] : j.at("mults").items()) {
      std::size_t used = 0;
      const auto value = std::stoull(code, &used);
      if (used != code.size()) throw Error(ErrorKind::ParseError, "bad point code '" + code + "'");
      m.add(decode_point(*geometry, value, encoding), mult.get<std::uint32_t>());
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "point codes must be decimal integers");
  }
}

nlohmann::json multiset_to_json(const PointMultiset& m, PointEncoding encoding) {
  nlohmann::json j;
  j["q"] = m.geometry().q();
  j["k"] = m.geometry().k();
  j["encoding"] = std::string(to_string(encoding));
  nlohmann::json mults = nlohmann::json::object();
  for (PointIndex p : m.support()) mults[std::to_string(encode_point(m.geometry(), p, encoding))] = m[p];
  j["mults"] = mults;
  return j;
}

PointMultiset read_multiset_file(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  return multiset_from_json(j);
}

void write_multiset_file(const std::string& path, const PointMultiset& m, PointEncoding encoding) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << multiset_to_json(m, encoding).dump(1) << "\n";
}

}  // namespace lrc
