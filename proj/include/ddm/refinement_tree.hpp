#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ddm/cover.hpp"
#include "ddm/errors.hpp"
#include "ddm/measures.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

/// Geometry of a truncated cover class. Level g = 0..depth carries index m = -g; its cells are the
/// cylinders over [grade_base - g, top] and are priced by phi_{m + cost_base}.
struct TreeShape {
  Alphabet alphabet;
  int depth = 0;
  int top = 0;
  int grade_base = 0;
  int cost_base = 0;
};

inline constexpr std::size_t kDefaultMaxCells = std::size_t{1} << 18;

/// Cells of every level together with the parent/child relation (a child prepends one symbol at
/// the new lowest coordinate) and the cells that meet the query set.
class RefinementTree {
 public:
  /// Throws TooLarge when the tree holds more than `max_cells` cells.
  RefinementTree(TreeShape shape, const WindowSet& query, std::size_t max_cells = kDefaultMaxCells);

  const TreeShape& shape() const { return shape_; }
  int levels() const { return shape_.depth + 1; }
  Window window(int level) const { return {shape_.grade_base - level, shape_.top}; }
  std::size_t size(int level) const { return sizes_[level]; }
  std::size_t total_cells() const;
  bool meets_query(int level, std::size_t idx) const { return meets_[level].test(idx); }
  std::size_t child(int level, std::size_t idx, Symbol a) const {
    return static_cast<std::size_t>(a) * sizes_[level] + idx;
  }
  std::vector<Symbol> word(int level, std::size_t idx) const;
  WindowSet cell(int level, std::size_t idx) const;
  /// Start coordinate of every cell after the shift that prices it.
  int cost_start() const { return shape_.grade_base - shape_.cost_base; }

 private:
  TreeShape shape_;
  std::vector<std::size_t> sizes_;
  std::vector<boost::dynamic_bitset<>> meets_;
};

/// Per-cell prices of one set function, indexed [level][cell].
struct CostTable {
  std::vector<std::vector<Rational>> cells;
  bool nonnegative = true;
};

CostTable price_cells(const RefinementTree& tree, const CylinderMeasure& mu);

/// Thrown when a Pareto front outgrows its cap.
class FrontOverflow : public Error {
 public:
  explicit FrontOverflow(std::size_t size)
      : Error(ErrorKind::BudgetExceeded, "Pareto front exceeded " + std::to_string(size) + " entries") {}
};

struct DpLimits {
  std::size_t max_front = 4096;
};

struct CoverSolution {
  /// Cost under every component; entry 0 is the objective.
  std::vector<Rational> costs;
  Cover witness;
};

/// Minimizes component 0 over the disjoint covers built from tree cells (antichains covering every
/// cell that meets the query) subject to cost_k < bounds[k-1] for the remaining components.
/// nullopt when no cover is feasible.
std::optional<CoverSolution> solve_disjoint_covers(const RefinementTree& tree, const std::vector<CostTable>& tables,
                                                   const std::vector<Rational>& bounds,
                                                   const DpLimits& limits = {});

struct EnumerationLimits {
  std::size_t max_covers = std::size_t{1} << 20;
  std::size_t max_nodes = std::size_t{1} << 26;
};

/// Same optimum as solve_disjoint_covers by listing every antichain cover and pricing it with
/// generic set evaluation. When every measure is nonnegative, cells missing the query are left
/// empty. Throws TooLarge past the limits.
std::optional<CoverSolution> enumerate_disjoint_covers(const TreeShape& shape, const WindowSet& query,
                                                       const std::vector<CylinderMeasure>& measures,
                                                       const std::vector<Rational>& bounds,
                                                       const EnumerationLimits& limits = {});

/// Optimum over all graded covers of the truncated class, overlaps between levels allowed
/// (branch and bound over cell subsets). Requires at most 64 finest cells.
std::optional<CoverSolution> enumerate_overlapping_covers(const TreeShape& shape, const WindowSet& query,
                                                          const std::vector<CylinderMeasure>& measures,
                                                          const std::vector<Rational>& bounds,
                                                          const EnumerationLimits& limits = {});

}  // namespace ddm
