#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddm/approx.hpp"
#include "ddm/examples.hpp"
#include "ddm/measures.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

struct EvalQuery {
  std::string measure;
  std::string set;
  int shift = 0;
};

struct PhiQuery {
  std::string measure;
  std::string query;
  std::vector<int> depths{1};
  std::vector<int> widths{0};
  std::vector<int> shifts{0};
  bool parenthesized = false;
};

struct PsiQuery {
  std::string objective;
  std::string phi;
  std::string query;
  std::vector<Rational> eps;
  std::vector<int> shifts{0};
  int depth = 1;
  int width = 0;
};

struct ChainQuery {
  std::string phi;
  std::vector<std::string> psis;
  /// Signed coefficients; empty runs the unsigned chain.
  std::vector<Rational> c;
  Rational eps{1, 4};
  std::string query;
  TruncationConfig config;
};

/// Parsed problem-spec file. Measure and set references are names from the maps; inline
/// measure objects and set literals are registered under their own text.
struct ProblemSpec {
  Alphabet alphabet{2};
  std::map<std::string, CylinderMeasure> measures;
  std::map<std::string, WindowSet> sets;
  std::vector<EvalQuery> eval;
  std::vector<PhiQuery> phi;
  std::vector<PsiQuery> psi;
  std::vector<ChainQuery> chain;
  Example1Params example1;
  Example2Params example2;
  /// Per-suite sample count; 0 keeps the suite default.
  std::size_t verify_samples = 0;

  const CylinderMeasure& measure(const std::string& name) const;
  const WindowSet& set(const std::string& name) const;
};

/// Throws InvalidInput on malformed content and UnknownName on unresolved references.
ProblemSpec parse_problem_spec(const nlohmann::json& doc);
ProblemSpec load_problem_spec(const std::string& path);

}  // namespace ddm
