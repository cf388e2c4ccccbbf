#include "ddm/approx.hpp"

namespace ddm {

std::optional<ValueCertificate> psi_budgeted(const BudgetedProblem& p, const EngineLimits& limits) {
  validate(p.cfg);
  std::vector<CylinderMeasure> measures{p.objective};
  std::vector<Rational> bounds;
  for (const BudgetConstraint& c : p.constraints) {
    measures.push_back(c.measure);
    bounds.push_back(c.bound);
  }
  for (const CylinderMeasure& mu : measures)
    if (mu.alphabet() != p.q.alphabet()) fail(ErrorKind::InvalidInput, "query and measure alphabets differ");
  auto sol = solve_cover_problem(truncated_shape(p.q.alphabet(), p.cfg), p.q, measures, bounds, limits);
  if (!sol) return std::nullopt;
  ValueCertificate cert;
  cert.value = sol->costs[0];
  cert.witness = std::move(sol->witness);
  cert.config = p.cfg;
  cert.cost_shift = p.cfg.shift;
  cert.constraint_costs.assign(sol->costs.begin() + 1, sol->costs.end());
  return cert;
}

PsiGrid psi_eps_grid(const WindowSet& q, const CylinderMeasure& psi, const CylinderMeasure& phi,
                     const std::vector<Rational>& eps, const std::vector<int>& shifts, int depth, int width,
                     const EngineLimits& limits) {
  if (shifts.empty() || eps.empty()) fail(ErrorKind::InvalidInput, "eps and shift lists must be nonempty");
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (eps[k] <= 0) fail(ErrorKind::InvalidInput, "eps must be positive");
    if (k > 0 && eps[k] >= eps[k - 1]) fail(ErrorKind::InvalidInput, "eps list must be decreasing");
  }
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (shifts[k] > 0) fail(ErrorKind::InvalidInput, "shifts must be <= 0");
    if (k > 0 && shifts[k] > shifts[k - 1]) fail(ErrorKind::InvalidInput, "shift list must be nonincreasing");
  }
  const int i_min = shifts.back();
  PsiGrid grid;
  grid.eps = eps;
  grid.shifts = shifts;
  grid.phi_reference = phi_truncated(q, phi, {depth, width, i_min}, limits).value;
  grid.cells.resize(eps.size());
  for (std::size_t e = 0; e < eps.size(); ++e) {
    for (int i : shifts) {
      BudgetedProblem p{q, psi, {{phi, grid.phi_reference + eps[e]}}, {anchored_depth(depth, i, i_min), width, i}};
      grid.cells[e].push_back(psi_budgeted(p, limits));
    }
  }
  // An infeasible cell counts as +infinity.
  auto not_above = [](const std::optional<ValueCertificate>& a, const std::optional<ValueCertificate>& b) {
    if (!b) return true;
    return a && a->value <= b->value;
  };
  for (std::size_t e = 0; e < eps.size(); ++e)
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      if (e > 0 && !not_above(grid.cells[e - 1][s], grid.cells[e][s])) grid.monotone_in_eps = false;
      if (s > 0 && !not_above(grid.cells[e][s - 1], grid.cells[e][s])) grid.monotone_in_shift = false;
    }
  return grid;
}

namespace {

ChainResult run_chain(const WindowSet& q, const CylinderMeasure& phi, const std::vector<CylinderMeasure>& objectives,
                      const Rational& eps, const TruncationConfig& cfg, int cap, const EngineLimits& limits) {
  if (objectives.empty()) fail(ErrorKind::InvalidInput, "chain needs at least one psi");
  if (static_cast<int>(objectives.size()) > cap)
    fail(ErrorKind::DimensionCap, "chain length " + std::to_string(objectives.size()) + " exceeds cap " +
                                      std::to_string(cap));
  if (eps <= 0) fail(ErrorKind::InvalidInput, "eps must be positive");
  ChainResult result;
  result.phi_reference = phi_truncated(q, phi, cfg, limits).value;
  std::vector<BudgetConstraint> budgets{{phi, result.phi_reference + eps}};
  for (std::size_t k = 0; k < objectives.size(); ++k) {
    ChainLevel level{BudgetedProblem{q, objectives[k], budgets, cfg}, std::nullopt};
    level.certificate = psi_budgeted(level.problem, limits);
    const bool ok = level.certificate.has_value();
    if (ok) budgets.push_back({objectives[k], level.certificate->value + eps});
    result.levels.push_back(std::move(level));
    if (!ok) {
      result.failed_level = static_cast<int>(k) + 1;
      break;
    }
  }
  return result;
}

}  // namespace

ChainResult psi_chain(const WindowSet& q, const CylinderMeasure& phi, const std::vector<CylinderMeasure>& psis,
                      const Rational& eps, const TruncationConfig& cfg, int cap, const EngineLimits& limits) {
  return run_chain(q, phi, psis, eps, cfg, cap, limits);
}

ChainResult psi_signed(const WindowSet& q, const CylinderMeasure& phi, const std::vector<CylinderMeasure>& psis,
                       const std::vector<Rational>& c, const Rational& eps, const TruncationConfig& cfg, int cap,
                       const EngineLimits& limits) {
  if (c.size() != psis.size()) fail(ErrorKind::InvalidInput, "need one coefficient per psi");
  std::vector<CylinderMeasure> objectives;
  for (std::size_t k = 0; k < psis.size(); ++k) {
    if (c[k] < 0) fail(ErrorKind::InvalidInput, "signed coefficients must be nonnegative");
    objectives.push_back(c[k] == 0 ? psis[k] : CylinderMeasure::signed_diff(psis[k], c[k], phi));
  }
  return run_chain(q, phi, objectives, eps, cfg, cap, limits);
}

}  // namespace ddm
