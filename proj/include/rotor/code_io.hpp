#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rotor/rotor_code.hpp"

namespace rotor {

using Json = nlohmann::ordered_json;

// Raised for unparsable or structurally invalid code files. CSS violations
// surface separately as CssViolation.
class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCodeSchema = "rotorcodes.code/1";
inline constexpr const char* kReportSchema = "rotorcodes.report/1";

Json code_to_json(const RotorCode& code);
RotorCode code_from_json(const Json& j);

// Canonical text: fixed key order, one matrix row per line, sorted meta.
// Parsing and re-emitting a canonical file reproduces it byte for byte.
std::string canonical_code_text(const RotorCode& code);
RotorCode parse_code_text(const std::string& text);

RotorCode read_code_file(const std::string& path);
void write_code_file(const std::string& path, const RotorCode& code);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t cols_hint);

// "[[n,(k,T),(dX,dZ)]]" with "?" for unknown distances.
std::string parameter_string(const RotorCode& code, const std::string& dx = "?", const std::string& dz = "?");

// {"value": v, "method": "exact" | "bound" | "numeric"}
Json tagged(const Json& value, const std::string& method);

}  // namespace rotor
