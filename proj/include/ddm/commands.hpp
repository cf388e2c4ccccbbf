#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddm/problem_spec.hpp"

namespace ddm {

struct OutputOptions {
  bool witness = false;
  /// Adds a display-only decimal rendering with this many digits.
  std::optional<int> decimal;
};

/// Result of one command: a JSON document, the same content as a table, and the exit code
/// (0 ok, 1 when a report has a FAIL verdict).
struct CommandOutput {
  nlohmann::ordered_json json;
  std::vector<std::vector<std::string>> table;
  int exit_code = 0;

  std::string render_json() const;
  std::string render_csv() const;
};

CommandOutput cmd_eval(const ProblemSpec& spec, const OutputOptions& out);
CommandOutput cmd_phi(const ProblemSpec& spec, const OutputOptions& out);
CommandOutput cmd_psi(const ProblemSpec& spec, const OutputOptions& out);
CommandOutput cmd_chain(const ProblemSpec& spec, const OutputOptions& out);
/// name is e1, e2 or all.
CommandOutput cmd_example(const ProblemSpec& spec, const std::string& name);
/// suite is a suite name or all; suites of "all" run concurrently and are reported in fixed order.
CommandOutput cmd_verify(const ProblemSpec& spec, const std::string& suite, std::uint64_t seed);

/// Witness cover as {"base_shift", "cost_shift", "entries": [{"m", "set"}]}.
nlohmann::ordered_json certificate_witness_json(const ValueCertificate& cert);

}  // namespace ddm
