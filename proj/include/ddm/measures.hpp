#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ddm/rational.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Eventually periodic two-sided sequence: sigma_j = period[j mod |period|] unless j is listed
/// in `exceptions`.
struct PeriodicPoint {
  std::vector<Symbol> period;
  std::map<int, Symbol> exceptions;

  Symbol at(int j) const;
};

/// A finitely additive set function phi_0 on the sets determined by coordinates >= 0, evaluated
/// exactly on cylinders. Values are shared and immutable; copies are cheap.
class CylinderMeasure {
 public:
  enum class Kind { Markov, Dirac, Bernoulli, Cesaro, Convex, SignedDiff };

  /// Markov chain started in `initial`: phi_0(_j[w]) = (initial A^j)(w_0) a_{w_0 w_1} ... .
  static CylinderMeasure markov(RationalVector initial, RationalMatrix transition);
  /// Markov chain started in its stationary distribution.
  static CylinderMeasure stationary_markov(RationalMatrix transition);
  static CylinderMeasure dirac(Alphabet alphabet, PeriodicPoint point);
  static CylinderMeasure bernoulli(RationalVector p);
  /// 1/(n+1) sum_{t=0..n} base o S^{-t}.
  static CylinderMeasure cesaro(CylinderMeasure base, int n);
  /// sum_k weights[k] * parts[k] with nonnegative weights.
  static CylinderMeasure convex(RationalVector weights, std::vector<CylinderMeasure> parts);
  /// psi - c * phi; may take negative values.
  static CylinderMeasure signed_diff(CylinderMeasure psi, Rational c, CylinderMeasure phi);

  Kind kind() const;
  Alphabet alphabet() const;
  /// False only for signed differences with c > 0.
  bool nonnegative() const;
  /// Nonnegative with total mass 1.
  bool is_probability() const;
  std::string describe() const;

  /// phi_0 of the cylinder fixing coordinates start..start+|word|-1 to `word` (start >= 0).
  /// The empty word denotes X.
  Rational cylinder(int start, std::span<const Symbol> word) const;

  struct Node;

 private:
  explicit CylinderMeasure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// phi_0(s); s must be determined by coordinates >= 0 (NegativeCoordinate otherwise).
Rational eval0(const CylinderMeasure& mu, const WindowSet& s);
/// phi_m(s) = phi_0(S^m s) for m <= 0; s must lie in grade m (GradingViolation otherwise).
Rational eval_shifted(const CylinderMeasure& mu, int m, const WindowSet& s);
/// Total mass phi_0(X).
Rational total_mass(const CylinderMeasure& mu);

/// Unique pi with pi A = pi and sum pi = 1, by exact Gaussian elimination.
/// Throws NotStochastic or NotIrreducible.
RationalVector stationary_distribution(const RationalMatrix& transition);
void check_stochastic(const RationalMatrix& transition);
bool is_irreducible(const RationalMatrix& transition);

/// Same as CylinderMeasure::cesaro.
CylinderMeasure cesaro(const CylinderMeasure& mu, int n);

}  // namespace ddm
