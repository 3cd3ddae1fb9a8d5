#include "avgamma/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace avgamma {

namespace {

using nlohmann::json;

long long require_positive_int(const json& obj, const char* field, size_t index) {
  if (!obj.contains(field))
    throw ParseError(std::string("factor ") + std::to_string(index + 1) +
                     " is missing field \"" + field + "\"");
  const json& v = obj.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ParseError(std::string("field \"") + field + "\" of factor " +
                     std::to_string(index + 1) + " must be a positive integer");
  return v.get<long long>();
}

}  // namespace

VarietyConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("factors") || !doc.at("factors").is_array() ||
      doc.at("factors").empty())
    throw ParseError("configuration needs a nonempty \"factors\" list");

  std::vector<IsotypicFactor> factors;
  for (size_t i = 0; i < doc.at("factors").size(); ++i) {
    const json& f = doc.at("factors").at(i);
    if (!f.is_object())
      throw ParseError("factor " + std::to_string(i + 1) + " must be an object");
    if (!f.contains("type") || !f.at("type").is_string())
      throw ParseError("factor " + std::to_string(i + 1) +
                       " is missing the string field \"type\"");
    std::string type = f.at("type").get<std::string>();
    AlbertType albert;
    if (type == "I")
      albert = AlbertType::I;
    else if (type == "II")
      albert = AlbertType::II;
    else
      throw ParseError("field \"type\" of factor " + std::to_string(i + 1) +
                       " must be \"I\" or \"II\", got \"" + type + "\"");
    factors.emplace_back(albert, require_positive_int(f, "e", i),
                         require_positive_int(f, "h", i),
                         require_positive_int(f, "multiplicity", i));
  }

  VarietyConfig config{VarietyData(std::move(factors)), std::nullopt, std::nullopt};

  if (doc.contains("profiles")) {
    const json& prof = doc.at("profiles");
    if (!prof.is_array() || prof.size() != config.data.factors.size())
      throw ParseError("field \"profiles\" must list one entry per factor");
    SplittingProfile profile;
    for (size_t i = 0; i < prof.size(); ++i) {
      if (!prof.at(i).is_array() || prof.at(i).empty())
        throw ParseError("profile of factor " + std::to_string(i + 1) +
                         " must be a nonempty list of [e_lambda, f_lambda] pairs");
      std::vector<PlacePair> places;
      for (const json& pair : prof.at(i)) {
        if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number_integer() ||
            !pair.at(1).is_number_integer())
          throw ParseError("profile of factor " + std::to_string(i + 1) +
                           " must contain [e_lambda, f_lambda] integer pairs");
        places.emplace_back(pair.at(0).get<long long>(), pair.at(1).get<long long>());
      }
      profile.by_factor.push_back(std::move(places));
    }
    validate_profile(config.data, profile);  // InvariantViolation on bad sums
    config.profile = std::move(profile);
  }

  if (doc.contains("toric_place")) {
    const json& toric = doc.at("toric_place");
    if (!toric.is_array() || toric.size() != config.data.factors.size())
      throw ParseError("field \"toric_place\" must list one boolean per factor");
    std::vector<bool> flags;
    for (size_t i = 0; i < toric.size(); ++i) {
      if (!toric.at(i).is_boolean())
        throw ParseError("field \"toric_place\" entry " + std::to_string(i + 1) +
                         " must be a boolean");
      flags.push_back(toric.at(i).get<bool>());
    }
    config.toric_place = std::move(flags);
  }
  return config;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open configuration file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace avgamma
