#pragma once

#include <string>

#include <json.hpp>

#include "mckay/corner_functors.hpp"
#include "mckay/moduli_tools.hpp"
#include "mckay/rep_theory.hpp"

namespace mckay::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become Error(kParse) with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json matrix_to_json(const Matrix<Rational>& m);
/// Rows of "p/q" strings; the expected shape is checked (empty rows are allowed for 0 columns).
Matrix<Rational> matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what);

Json quiver_to_json(const Quiver& q);
/// Accepts the full quiver document or the short form {"group", "framing"?, "tripled"?};
/// the arrows of a full document must match the quiver rebuilt from its header.
Quiver quiver_from_json(const Json& j);

Json module_to_json(const FramedRep& m);
/// Maps missing from "maps" are zero.
FramedRep module_from_json(const Json& j);

Json adhm_to_json(const AdhmData& d);
AdhmData adhm_from_json(const Json& j);

Json truncated_to_json(const TruncatedGradedModule<Rational>& m);
TruncatedGradedModule<Rational> truncated_from_json(const Json& j);

AlgebraBase algebra_base_from_string(const std::string& s);
std::string algebra_base_name(AlgebraBase b);

/// 0 ok, 2 usage and invalid input, 3 caps, 4 oracle mismatch, 5 relation violation,
/// 6 stability precondition; everything else maps to 1.
int exit_code(ErrorCode code);

}  // namespace mckay::io
