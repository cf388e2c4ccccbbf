#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ddm/commands.hpp"
#include "ddm/errors.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncated cover values for shift-space set functions"};
  app.require_subcommand(1);
  std::string spec_path;
  std::string format = "json";
  bool witness = false;
  std::uint64_t seed = 7;
  std::optional<int> decimal;
  std::string target;

  const auto common = [&](CLI::App* cmd, bool spec_required) {
    auto* opt = cmd->add_option("--spec", spec_path, "problem-spec JSON file")->check(CLI::ExistingFile);
    if (spec_required) opt->required();
    cmd->add_option("--out", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--witness", witness, "include witness covers");
    cmd->add_option("--seed", seed, "seed for sampled instances");
    cmd->add_option("--decimal", decimal, "add a display-only decimal rendering with K digits")
        ->check(CLI::Range(0, 60));
  };
  auto* eval = app.add_subcommand("eval", "evaluate measures on sets");
  auto* phi = app.add_subcommand("phi", "truncated Phi grid");
  auto* psi = app.add_subcommand("psi", "budgeted Psi grid over eps and shift");
  auto* chain = app.add_subcommand("chain", "Psi chain, signed when coefficients are given");
  auto* example = app.add_subcommand("example", "reproduce a worked example");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  for (auto* cmd : {eval, phi, psi, chain}) common(cmd, true);
  common(example, false);
  common(verify, false);
  example->add_option("name", target, "e1, e2 or all")->required();
  verify->add_option("suite", target, "suite name or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const ddm::ProblemSpec spec = spec_path.empty() ? ddm::ProblemSpec{} : ddm::load_problem_spec(spec_path);
    const ddm::OutputOptions out{witness, decimal};
    ddm::CommandOutput result;
    if (*eval) result = ddm::cmd_eval(spec, out);
    else if (*phi) result = ddm::cmd_phi(spec, out);
    else if (*psi) result = ddm::cmd_psi(spec, out);
    else if (*chain) result = ddm::cmd_chain(spec, out);
    else if (*example) result = ddm::cmd_example(spec, target);
    else result = ddm::cmd_verify(spec, target, seed);
    std::cout << (format == "csv" ? result.render_csv() : result.render_json());
    return result.exit_code;
  } catch (const ddm::Error& e) {
    std::cerr << "error (" << ddm::to_string(e.kind()) << "): " << e.what() << "\n";
    return e.is_resource_cap() ? kExitResource : kExitInput;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kExitResource;
  }
}
