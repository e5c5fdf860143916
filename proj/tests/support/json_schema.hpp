#ifndef TRADEBLOC_TESTS_JSON_SCHEMA_HPP
#define TRADEBLOC_TESTS_JSON_SCHEMA_HPP

#include <string>
#include <vector>

#include <json.hpp>

// Minimal JSON-Schema checker covering the subset the shipped schema uses:
// type (single or list), enum, required, properties, additionalProperties
// (boolean), and a single items schema for arrays.

namespace tradebloc::testing {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline void validate_against_schema(const nlohmann::json& value, const nlohmann::json& schema,
                                    const std::string& where, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& type = schema["type"];
    bool ok = false;
    if (type.is_string()) {
      ok = type_matches(value, type.get<std::string>());
    } else {
      for (const auto& t : type) ok = ok || type_matches(value, t.get<std::string>());
    }
    if (!ok) {
      errors.push_back(where + ": type mismatch");
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& candidate : schema["enum"]) ok = ok || candidate == value;
    if (!ok) errors.push_back(where + ": value not in enum");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(where + ": missing required key " + key.get<std::string>());
        }
      }
    }
    const bool closed =
        schema.contains("additionalProperties") && schema["additionalProperties"].is_boolean() &&
        !schema["additionalProperties"].get<bool>();
    for (const auto& [key, child] : value.items()) {
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        validate_against_schema(child, schema["properties"][key], where + "." + key, errors);
      } else if (closed) {
        errors.push_back(where + ": unexpected key " + key);
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t i = 0; i < value.size(); ++i) {
      validate_against_schema(value[i], schema["items"], where + "[" + std::to_string(i) + "]",
                              errors);
    }
  }
}

inline std::vector<std::string> schema_errors(const nlohmann::json& value,
                                              const nlohmann::json& schema) {
  std::vector<std::string> errors;
  validate_against_schema(value, schema, "$", errors);
  return errors;
}

}  // namespace tradebloc::testing

#endif  // TRADEBLOC_TESTS_JSON_SCHEMA_HPP
