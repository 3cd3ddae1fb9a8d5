#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "avgamma/rational.hpp"

namespace avgamma {

using Json = nlohmann::ordered_json;

// Every command emits one of these.  Rendering is deterministic: field order
// is insertion order, rationals are always "p/q", and big integers are decimal
// strings (they can exceed the exact range of a JSON number).
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
};

Json json_rational(const BigRational& value);
Json json_bigint(const BigInt& value);

std::string render_json(const Report& report);
// Flat key<TAB>value lines, arrays indexed numerically in the key path.
std::string render_tsv(const Report& report);

}  // namespace avgamma
