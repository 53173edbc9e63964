#pragma once

#include <string>

#include "json.hpp"

#include "ctri/core_model.hpp"

namespace ctri {

// Text form: a header line "n N" followed by N lines, line k holding the n*k
// colors of level k separated by single spaces.
std::string to_text(const Triangle& t);
Triangle triangle_from_text(const std::string& text);

// JSON form: {"n": n, "N": N, "rows": [[...], ...]}.
nlohmann::json to_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);

/// Detects the format by the first non-blank character ('{' means JSON).
Triangle parse_triangle(const std::string& content);

}  // namespace ctri
