#pragma once

#include <optional>
#include <vector>

#include "ddm/cover.hpp"
#include "ddm/cover_engine.hpp"
#include "ddm/measures.hpp"

namespace ddm {

/// Strict upper bound on the cover cost of `measure`.
struct BudgetConstraint {
  CylinderMeasure measure;
  Rational bound;
};

struct BudgetedProblem {
  WindowSet q;
  CylinderMeasure objective;
  std::vector<BudgetConstraint> constraints;
  TruncationConfig cfg;
};

/// Exact minimum of the objective over truncated covers of q meeting every budget strictly;
/// nullopt when no truncated cover is feasible.
std::optional<ValueCertificate> psi_budgeted(const BudgetedProblem& p, const EngineLimits& limits = {});

struct PsiGrid {
  /// phi_truncated at the lowest shift; every cell uses the budget phi_reference + eps.
  Rational phi_reference;
  std::vector<Rational> eps;
  std::vector<int> shifts;
  /// cells[e][s] for eps[e], shifts[s]; nullopt marks an infeasible cell.
  std::vector<std::vector<std::optional<ValueCertificate>>> cells;
  /// Values nondecreasing as eps decreases.
  bool monotone_in_eps = true;
  /// Values nondecreasing as the shift decreases (Psi_{eps,i} <= Psi_{eps,i-1}).
  bool monotone_in_shift = true;
};

/// psi_budgeted over eps x shift. Shifts share the anchored floor min(shifts) - depth; the
/// phi budget is the truncated Phi value at the lowest shift plus eps.
PsiGrid psi_eps_grid(const WindowSet& q, const CylinderMeasure& psi, const CylinderMeasure& phi,
                     const std::vector<Rational>& eps, const std::vector<int>& shifts, int depth, int width,
                     const EngineLimits& limits = {});

inline constexpr int kDefaultChainCap = 3;

struct ChainLevel {
  /// Problem solved at this level (objective and all budgets).
  BudgetedProblem problem;
  std::optional<ValueCertificate> certificate;
};

struct ChainResult {
  Rational phi_reference;
  std::vector<ChainLevel> levels;
  /// 1-based level at which the chain became infeasible.
  std::optional<int> failed_level;

  bool feasible() const { return !failed_level.has_value(); }
};

/// Level k minimizes psi_k subject to phi < phi_truncated(Q) + eps and psi_j < value_j + eps for
/// j < k. Stops at the first infeasible level. Throws DimensionCap when the chain exceeds `cap`.
ChainResult psi_chain(const WindowSet& q, const CylinderMeasure& phi, const std::vector<CylinderMeasure>& psis,
                      const Rational& eps, const TruncationConfig& cfg, int cap = kDefaultChainCap,
                      const EngineLimits& limits = {});

/// psi_chain with every psi_k replaced by psi_k - c_k phi, in objectives and budgets alike.
ChainResult psi_signed(const WindowSet& q, const CylinderMeasure& phi, const std::vector<CylinderMeasure>& psis,
                       const std::vector<Rational>& c, const Rational& eps, const TruncationConfig& cfg,
                       int cap = kDefaultChainCap, const EngineLimits& limits = {});

}  // namespace ddm
