#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "ddm/approx.hpp"
#include "ddm/cover_engine.hpp"
#include "ddm/measures.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

enum class Verdict { Pass, Fail, Inconclusive };

const char* to_string(Verdict v);
/// Fail beats Inconclusive beats Pass.
Verdict combine(Verdict a, Verdict b);

/// One named check. Keeps the first counterexample it sees.
struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::size_t cases = 0;
  nlohmann::ordered_json witness;

  void record_fail(nlohmann::ordered_json w);
  void record_inconclusive(nlohmann::ordered_json w);
  nlohmann::ordered_json to_json() const;
};

struct Report {
  std::string name;
  /// Finite surrogate the checks ran on.
  std::string surrogate;
  std::deque<Check> checks;
  /// Statements that need genuine limits and are therefore not checked.
  std::vector<std::string> not_finitely_decidable;

  Check& add(std::string check_name);
  Verdict verdict() const;
  nlohmann::ordered_json to_json() const;
};

/// Named set function on window sets. Values are cached; copies share the cache.
class SetFunctionHandle {
 public:
  using Evaluator = std::function<Rational(const WindowSet&)>;

  /// Throws InvalidInput when evaluator(empty) != 0.
  SetFunctionHandle(std::string label, Alphabet alphabet, Evaluator evaluator);

  static SetFunctionHandle measure(const CylinderMeasure& mu);
  static SetFunctionHandle truncated_phi(const CylinderMeasure& phi, const TruncationConfig& cfg,
                                         const EngineLimits& limits = {});
  /// Q -> psi_budgeted(Q; psi, phi < budget) at a fixed budget; throws InvalidInput where infeasible.
  static SetFunctionHandle budgeted_psi(const CylinderMeasure& psi, const CylinderMeasure& phi, const Rational& budget,
                                        const TruncationConfig& cfg, const EngineLimits& limits = {});
  /// Q -> psi_budgeted(Q; psi, phi < phi_truncated(Q) + eps): one member of the Psi family.
  static SetFunctionHandle psi_family_member(const CylinderMeasure& psi, const CylinderMeasure& phi,
                                             const Rational& eps, const TruncationConfig& cfg,
                                             const EngineLimits& limits = {});

  Rational operator()(const WindowSet& s) const;
  const std::string& label() const;
  Alphabet alphabet() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Finite Boolean algebra generated by window sets, represented through its atoms.
class FiniteAlgebra {
 public:
  FiniteAlgebra(Alphabet alphabet, std::vector<WindowSet> generators);
  /// Algebra of sets determined on `window`, generated by the single-coordinate cylinders.
  static FiniteAlgebra window_algebra(Alphabet alphabet, Window window);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<WindowSet>& generators() const { return generators_; }
  const std::vector<WindowSet>& atoms() const { return atoms_; }
  /// Union of the atoms selected by `mask`.
  WindowSet element(const boost::dynamic_bitset<>& mask) const;
  bool contains(const WindowSet& s) const;
  /// Every element when there are at most `max_count` of them; otherwise empty, full, the
  /// generators, their complements, atoms and seeded random unions of atoms, `max_count` in total.
  std::vector<WindowSet> test_sets(std::size_t max_count, std::uint64_t seed) const;
  std::string describe() const;

 private:
  Alphabet alphabet_;
  std::vector<WindowSet> generators_;
  std::vector<WindowSet> atoms_;
  std::optional<Window> common_window_;
};

struct MeasurabilityResult {
  bool measurable = true;
  std::size_t tested = 0;
  /// First violating Q with mu(Q), mu(Q n A), mu(Q \ A).
  std::optional<WindowSet> counterexample;
  Rational whole, inside, outside;
};

/// mu(Q) = mu(Q n A) + mu(Q \ A) for every Q in `tests`.
MeasurabilityResult caratheodory_measurable(const SetFunctionHandle& mu, const WindowSet& a,
                                            const std::vector<WindowSet>& tests);
MeasurabilityResult caratheodory_measurable(const SetFunctionHandle& mu, const WindowSet& a,
                                            const FiniteAlgebra& tests, std::size_t max_tests = 256,
                                            std::uint64_t seed = 0);

/// Measurability of each candidate, then closure of the passing family under complement,
/// intersection and disjoint union, and finite additivity of mu on it.
Report check_measurable_family(const SetFunctionHandle& mu, const FiniteAlgebra& algebra,
                               const std::vector<WindowSet>& candidates, std::size_t max_tests = 128,
                               std::size_t max_pairs = 64, std::uint64_t seed = 0);

/// mu(empty) = 0, monotonicity on nested sample pairs, finite subadditivity on sample pairs and triples.
Report check_outer_measure_axioms(const SetFunctionHandle& mu, const std::vector<WindowSet>& samples);

/// Piecewise-linear f with rational breakpoints, f(0) = 0, constant after the last breakpoint.
class PiecewiseLinear {
 public:
  static PiecewiseLinear identity();
  /// Points must start at (0,0), have increasing x and nondecreasing y.
  explicit PiecewiseLinear(std::vector<std::pair<Rational, Rational>> points);

  Rational operator()(const Rational& x) const;

 private:
  bool identity_ = false;
  std::vector<std::pair<Rational, Rational>> points_;
};

struct ApproxFamilySpec {
  /// Decreasing grid t_0 > t_1 > ... > 0 with family[k] = mu_{t_k}.
  std::vector<Rational> t;
  std::vector<SetFunctionHandle> family;
  SetFunctionHandle nu;
  PiecewiseLinear f = PiecewiseLinear::identity();
};

/// Properties (i)-(iii) of an outer measure approximation in finite form. The limit mu is
/// represented by the member at the smallest grid point. Throws GridNotMonotone when some
/// sample has mu_t < mu_s for t <= s.
Report check_approximation(const ApproxFamilySpec& spec, const std::vector<std::pair<WindowSet, WindowSet>>& pairs,
                           const std::vector<std::vector<WindowSet>>& disjoint_families);

struct NormDefectReport {
  /// sup over m in [-m_cap, 0] and sets on [0, window_cap] of |phi_0(S^m A) - phi_0(A)|.
  Rational defect;
  Rational mass;
  Rational phi_truncated_x;
  /// Pass when phi_truncated(X) <= mass - defect, otherwise Inconclusive (both sides are bounds).
  Verdict bound;
};

Rational norm_defect(const CylinderMeasure& phi, int window_cap, int m_cap);
NormDefectReport norm_defect_report(const CylinderMeasure& phi, int window_cap, int m_cap,
                                    const TruncationConfig& cfg, const EngineLimits& limits = {});

struct ConsistencyOptions {
  std::vector<TruncationConfig> configs;
  /// Consistent chain prepended in front of phi; nullopt skips the prepending check.
  std::optional<CylinderMeasure> lambda;
  Rational eps{1, 4};
};

/// phi_0(A) = phi_0(S^{-1} A) on grade-0 samples. When that holds, also phi_truncated(Q) equals the
/// direct value for every sample and config, and prepending lambda leaves truncated values unchanged.
Report check_consistency(const CylinderMeasure& phi, const std::vector<WindowSet>& samples,
                         const ConsistencyOptions& options, const EngineLimits& limits = {});

}  // namespace ddm
