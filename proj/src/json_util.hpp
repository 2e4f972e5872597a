#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lcgerm/errors.hpp"
#include "lcgerm/rational.hpp"

namespace lcgerm {
struct ConfigFile;
}

namespace lcgerm::detail {

inline nlohmann::ordered_json parse_json(std::string_view text, const std::string& what) {
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + " is not valid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
}

inline const nlohmann::ordered_json& require(const nlohmann::ordered_json& obj, const char* key,
                                             const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InvariantError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

// "p/q" strings or JSON integers.
inline Rational rational_field(const nlohmann::ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw InvariantError(where + " must be a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.message(), e.position());
  }
}

nlohmann::ordered_json config_json(const ConfigFile& cfg);

}  // namespace lcgerm::detail
