#pragma once

#include "ade/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ade {

struct SuiteOptions {
  std::uint64_t seed = 0x5eed'ade0ULL;
  int property_cases = 500;
  int transform_cases = 1000;
  int forced_collisions = 100;
  int maxdeg = 8;
};

struct CriterionReport {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  Json detail;
};

/// Runs the eight acceptance checks against frozen reference values.
std::vector<CriterionReport> run_paper_checks(const SuiteOptions& options = {});

/// Timing is left out so that the report is reproducible byte for byte.
Json suite_json(const std::vector<CriterionReport>& reports);

}  // namespace ade
