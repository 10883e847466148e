#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "symtree/error.hpp"

namespace symtree::detail {

inline std::string quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

inline nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

inline const nlohmann::json& require(const nlohmann::json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

inline std::string require_string(const nlohmann::json& j, std::string_view what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace symtree::detail
