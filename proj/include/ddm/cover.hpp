#pragma once

#include <vector>

#include "ddm/measures.hpp"
#include "ddm/rational.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

struct CoverEntry {
  int m = 0;  ///< index m <= 0
  WindowSet set;
};

/// Finite indexed family (A_m); entry m must be determined by coordinates >= m + base_shift.
struct Cover {
  std::vector<CoverEntry> entries;
  int base_shift = 0;

  /// Entries with equal m merged, empty entries dropped, sorted by m descending.
  Cover canonical() const;
};

/// Every entry has m <= 0 and lies in grade m + base_shift.
bool is_graded(const Cover& c);
/// Graded and q is contained in the union of the entries.
bool is_valid_cover(const WindowSet& q, const Cover& c);
WindowSet cover_union(const Cover& c, Alphabet alphabet);
bool is_disjoint(const Cover& c);

/// sum_m phi_{m + base_shift}(A_m).
Rational cover_cost(const Cover& c, const CylinderMeasure& phi);
/// sum_m phi_{m + cost_shift}(A_m); used for covers graded at one shift and priced at another.
Rational cover_cost_at(const Cover& c, const CylinderMeasure& phi, int cost_shift);

/// B_m = A_m \ (A_{m+1} u ... u A_0). Result is canonical, pairwise disjoint and covers the same
/// union. Throws GradingViolation if some B_m leaves its grade.
Cover disjointify(const Cover& c);

/// Truncation of the cover class: indices m in {-depth..0}; the entry at index m is a union of
/// cylinders over the coordinate window [m + shift, width].
struct TruncationConfig {
  int depth = 1;
  int width = 0;
  int shift = 0;
};

/// Rejects negative depth/width, positive shift and windows outside the coordinate bound.
void validate(const TruncationConfig& cfg);

/// Optimal value with an auditable witness.
struct ValueCertificate {
  Rational value;
  Cover witness;
  TruncationConfig config;
  /// Index offset used to price the witness (equals config.shift except for parenthesized values).
  int cost_shift = 0;
  /// Witness cost under each budget constraint, in constraint order (empty for unconstrained values).
  std::vector<Rational> constraint_costs;
};

}  // namespace ddm
