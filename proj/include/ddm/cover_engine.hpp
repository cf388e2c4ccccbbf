#pragma once

#include <optional>
#include <vector>

#include "ddm/cover.hpp"
#include "ddm/measures.hpp"
#include "ddm/refinement_tree.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

struct EngineLimits {
  std::size_t max_cells = kDefaultMaxCells;
  DpLimits dp;
  /// Used when a Pareto front overflows on a class small enough to enumerate.
  EnumerationLimits fallback;
  std::size_t fallback_max_cells = 64;
};

/// Cells at index m live on [m + i, W] and are priced by phi_{m+i}.
TreeShape truncated_shape(Alphabet alphabet, const TruncationConfig& cfg);
/// Cells at index m live on [m, W] and are priced by phi_{m+i}.
TreeShape parenthesized_shape(Alphabet alphabet, const TruncationConfig& cfg);

/// Minimizes measures[0] over disjoint covers of q in the class `shape`, subject to
/// cost(measures[k]) < bounds[k-1]. Exact; falls back to enumeration when a front overflows on a
/// small class and throws BudgetExceeded otherwise.
std::optional<CoverSolution> solve_cover_problem(const TreeShape& shape, const WindowSet& q,
                                                 const std::vector<CylinderMeasure>& measures,
                                                 const std::vector<Rational>& bounds,
                                                 const EngineLimits& limits = {});

/// Exact minimum of sum phi_{m+i}(A_m) over the truncated cover class; an upper bound for Phi_i(Q).
ValueCertificate phi_truncated(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                               const EngineLimits& limits = {});

/// Covers graded at shift 0 and priced at shift i.
ValueCertificate phi_paren_truncated(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                                     const EngineLimits& limits = {});

/// Depth used at shift i on an anchored grid: every shift shares the lowest coordinate
/// i_min - depth, so a cover at shift i-1 pads into the class at shift i.
int anchored_depth(int depth, int i, int i_min);

struct PhiGridRow {
  int shift = 0;
  ValueCertificate certificate;
  /// Value of S^i Q at shift 0 over the translated class.
  Rational shifted_value;
  bool shift_covariant = false;
};

struct PhiGrid {
  std::vector<PhiGridRow> rows;
  /// Values nondecreasing along the list (Phi_i <= Phi_{i-1}).
  bool monotone = true;
  /// Every row satisfied Phi_i(Q) = Phi_0(S^i Q).
  bool shift_covariant = true;
};

/// phi_truncated for every shift in `shifts` (nonincreasing, all <= 0) on the anchored grid
/// with floor min(shifts) - depth.
PhiGrid phi_grid(const WindowSet& q, const CylinderMeasure& phi, int depth, int width, const std::vector<int>& shifts,
                 const EngineLimits& limits = {});

enum class CoverClass { Disjoint, Overlapping };

/// Exhaustive optimum over the same truncated class (disjoint antichains or all overlapping
/// graded covers). Throws TooLarge past the enumeration limits.
Rational brute_force_phi(const WindowSet& q, const CylinderMeasure& phi, const TruncationConfig& cfg,
                         CoverClass cover_class = CoverClass::Disjoint, bool parenthesized = false,
                         const EnumerationLimits& limits = {});

}  // namespace ddm
