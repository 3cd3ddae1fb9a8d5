#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avgamma/gamma.hpp"

namespace avgamma {

// Parsed variety configuration document.
struct VarietyConfig {
  VarietyData data;
  std::optional<SplittingProfile> profile;
  std::optional<std::vector<bool>> toric_place;
};

// Parses the JSON configuration text; throws ParseError naming the offending
// field, or InvariantViolation for structurally valid but inconsistent data.
VarietyConfig parse_config(const std::string& text);

// Reads a file fully; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace avgamma
