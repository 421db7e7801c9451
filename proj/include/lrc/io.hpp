#pragma once

#include "lrc/code.hpp"
#include "lrc/geometry.hpp"

#include "json.hpp"
#include <string>
#include <string_view>

namespace lrc {

// Matrix text format: first line "q k n", then k lines of n digits.
// Blank lines and lines starting with '#' are ignored. Parse errors carry
// "line L, column C".
LinearCode parse_matrix_text(std::string_view text);
LinearCode read_matrix_file(const std::string& path);
std::string format_matrix_text(const LinearCode& c);
void write_matrix_file(const std::string& path, const LinearCode& c);

// {"q":int,"k":int,"encoding":"binary"|"lexindex","mults":{"<code>":m,...}}
// or, as transcribed lists, "lists":{"<m>":[code,...],...}.
PointMultiset multiset_from_json(const nlohmann::json& j, GeometryPtr geometry = nullptr);
nlohmann::json multiset_to_json(const PointMultiset& m, PointEncoding encoding);
PointMultiset read_multiset_file(const std::string& path);
void write_multiset_file(const std::string& path, const PointMultiset& m, PointEncoding encoding);

std::string read_text_file(const std::string& path);

}  // namespace lrc
