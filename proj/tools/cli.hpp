#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chahn/scaled_value.hpp"

namespace chahn::cli {

/// "re", "imi", "re+imi" or "re-imi"; nullopt on anything else.
std::optional<Complex> parse_complex(std::string_view text);
/// Shortest form that parse_complex maps back to the same bits.
std::string render_complex(Complex z);

/// "m.mmmmmme+k" per component, "a, b" style "(re, im)" when complex.
std::string decimal_string(const ScaledValue& v);

nlohmann::ordered_json value_json(const ScaledValue& v);
/// Inverse of value_json on the exact fields.
ScaledValue value_from_json(const nlohmann::ordered_json& j);

/// argv without the program name. Exit codes: 0 ok, 2 domain error (one
/// JSON line on err), 3 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chahn::cli
