#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddm/verify.hpp"

namespace ddm {

struct SuiteOptions {
  std::uint64_t seed = 7;
  /// Random instances per suite; 0 keeps each suite's default.
  std::size_t samples = 0;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws UnknownName for anything outside suite_names().
Report run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace ddm
