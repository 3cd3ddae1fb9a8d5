#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "avgamma/errors.hpp"

namespace avgamma {

struct PropertyResult {
  std::string name;
  long long trials = 0;
  long long failures = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;
  bool ok() const {
    for (const PropertyResult& p : properties)
      if (p.failures != 0) return false;
    return true;
  }
};

const std::vector<std::string>& verify_suite_names();  // excludes "all"

// Runs one named suite ("all" runs every suite in order).  Deterministic for
// a fixed seed.  Throws UnknownSuite for unknown names.
std::vector<SuiteResult> run_verify(const std::string& name, std::uint64_t seed);

}  // namespace avgamma
