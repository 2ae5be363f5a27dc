#pragma once

// File formats. Vertices and colors are written 1-based; a pair color (i, j)
// over s symbols is written as (i-1)*s + j.
//
//   family        JSON  {"name","kind","symbols","params","colors","members":[
//                        {"label","main","vertices","edges":[[u,v,c],...],"classes"?}]}
//   decomposition JSON  {"n","superpure","family":{...},"blocks":[
//                        {"member","classes"} | {"member","pair"} | {"member","vertices"}]}
//   code          text  "q Q n N" or "m M n N w W", then one codeword per line

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "ecd/code_bridge.hpp"
#include "ecd/families.hpp"
#include "ecd/search.hpp"

namespace ecd::io {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json family_to_json(const DigraphFamily& family);
[[nodiscard]] DigraphFamily family_from_json(const Json& j);

[[nodiscard]] Json decomposition_to_json(const Decomposition& dec);
[[nodiscard]] Decomposition decomposition_from_json(const Json& j);

void write_code(std::ostream& os, const AnyCode& code);
/// Errors name the offending line.
[[nodiscard]] AnyCode read_code(std::istream& is);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

[[nodiscard]] DigraphFamily load_family(const std::string& path);
[[nodiscard]] Decomposition load_decomposition(const std::string& path);
[[nodiscard]] AnyCode load_code(const std::string& path);

}  // namespace ecd::io
