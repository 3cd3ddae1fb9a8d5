#include "avgamma/report.hpp"

namespace avgamma {

namespace {

constexpr const char* kVersion = "1.0.0";

void flatten(const std::string& path, const Json& node, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(path.empty() ? key : path + "." + key, value, out);
  } else if (node.is_array()) {
    size_t i = 0;
    for (const Json& value : node) flatten(path + "." + std::to_string(i++), value, out);
    if (node.empty()) out += path + "\t[]\n";
  } else {
    out += path + "\t";
    out += node.is_string() ? node.get<std::string>() : node.dump();
    out += "\n";
  }
}

Json assemble(const Report& report) {
  Json doc = Json::object();
  doc["command"] = report.command;
  doc["version"] = kVersion;
  doc["inputs"] = report.inputs;
  doc["results"] = report.results;
  return doc;
}

}  // namespace

Json json_rational(const BigRational& value) { return rat_str(value); }

Json json_bigint(const BigInt& value) { return value.str(); }

std::string render_json(const Report& report) { return assemble(report).dump(2) + "\n"; }

std::string render_tsv(const Report& report) {
  std::string out;
  flatten("", assemble(report), out);
  return out;
}

}  // namespace avgamma
