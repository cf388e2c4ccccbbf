#include "ddm/cover_engine.hpp"

#include <algorithm>

namespace ddm {

namespace {

void require_nonnegative(const CylinderMeasure& phi) {
  if (!phi.nonnegative()) fail(ErrorKind::InvalidInput, "phi must be nonnegative");
}

void require_alphabet(const WindowSet& q, const CylinderMeasure& phi) {
  if (q.alphabet() != phi.alphabet()) fail(ErrorKind::InvalidInput, "query and measure alphabets differ");
}

ValueCertificate certify(CoverSolution sol, const TruncationConfig& cfg, int cost_shift) {
  ValueCertificate cert;
  cert.value = sol.costs[0];
  cert.witness = std::move(sol.witness);
  cert.config = cfg;
  cert.cost_shift = cost_shift;
  cert.constraint_costs.assign(sol.costs.begin() + 1, sol.costs.end());
  return cert;
}

ValueCertificate solve_unconstrained(const TreeShape& shape, const WindowSet& q, const CylinderMeasure& phi,
                                     const TruncationConfig& cfg, const EngineLimits& limits) {
  validate(cfg);
  require_alphabet(q, phi);
  require_nonnegative(phi);
  auto sol = solve_cover_problem(shape, q, {phi}, {}, limits);
  if (!sol) throw std::logic_error("unconstrained cover problem reported infeasible");
  return certify(std::move(*sol), cfg, cfg.shift);
}

}  // namespace

TreeShape truncated_shape(Alphabet alphabet, const TruncationConfig& cfg) {
  return {alphabet, cfg.depth, cfg.width, cfg.shift, cfg.shift};
}

TreeShape parenthesized_shape(Alphabet alphabet, const TruncationConfig& cfg) {
  return {alphabet, cfg.depth, cfg.width, 0, cfg.shift};
}

std::optional<CoverSolution> solve_cover_problem(const TreeShape& shape, const WindowSet& q,
                                                 const std::vector<CylinderMeasure>& measures,
                                                 const std::vector<Rational>& bounds, const EngineLimits& limits) {
  const RefinementTree tree(shape, q, limits.max_cells);
  std::vector<CostTable> tables;
  for (const CylinderMeasure& mu : measures) tables.push_back(price_cells(tree, mu));
  try {
    return solve_disjoint_covers(tree, tables, bounds, limits.dp);
  } catch (const FrontOverflow&) {
    if (tree.total_cells() > limits.fallback_max_cells) throw;
    return enumerate_disjoint_covers(shape, q, measures, bounds, limits.fallback);
  }
}

ValueCertificate phi_truncated(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                               const EngineLimits& limits) {
  return solve_unconstrained(truncated_shape(q.alphabet(), cfg), q, phi, cfg, limits);
}

ValueCertificate phi_paren_truncated(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                                     const EngineLimits& limits) {
  return solve_unconstrained(parenthesized_shape(q.alphabet(), cfg), q, phi, cfg, limits);
}

int anchored_depth(int depth, int i, int i_min) { return depth + (i - i_min); }

PhiGrid phi_grid(const WindowSet& q, const CylinderMeasure& phi, int depth, int width, const std::vector<int>& shifts,
                 const EngineLimits& limits) {
  PhiGrid grid;
  if (shifts.empty()) return grid;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    if (shifts[k] > 0) fail(ErrorKind::InvalidInput, "shifts must be <= 0");
    if (k > 0 && shifts[k] > shifts[k - 1]) fail(ErrorKind::InvalidInput, "shift list must be nonincreasing");
  }
  const int i_min = shifts.back();
  for (int i : shifts) {
    const TruncationConfig cfg{anchored_depth(depth, i, i_min), width, i};
    PhiGridRow row;
    row.shift = i;
    row.certificate = phi_truncated(q, phi, cfg, limits);
    const TruncationConfig moved{cfg.depth, width - i, 0};
    row.shifted_value = phi_truncated(shift(q, i), phi, moved, limits).value;
    row.shift_covariant = row.shifted_value == row.certificate.value;
    grid.shift_covariant = grid.shift_covariant && row.shift_covariant;
    if (!grid.rows.empty() && row.certificate.value < grid.rows.back().certificate.value) grid.monotone = false;
    grid.rows.push_back(std::move(row));
  }
  return grid;
}

Rational brute_force_phi(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                         CoverClass cover_class, bool parenthesized, const EnumerationLimits& limits) {
  validate(cfg);
  require_alphabet(q, phi);
  require_nonnegative(phi);
  const TreeShape shape =
      parenthesized ? parenthesized_shape(q.alphabet(), cfg) : truncated_shape(q.alphabet(), cfg);
  const auto sol = cover_class == CoverClass::Disjoint ? enumerate_disjoint_covers(shape, q, {phi}, {}, limits)
                                                       : enumerate_overlapping_covers(shape, q, {phi}, {}, limits);
  if (!sol) throw std::logic_error("unconstrained enumeration found no cover");
  return sol->costs[0];
}

}  // namespace ddm
