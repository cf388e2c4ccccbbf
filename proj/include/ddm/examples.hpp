#pragma once

#include <cstdint>
#include <vector>

#include "ddm/measures.hpp"
#include "ddm/verify.hpp"

namespace ddm {

/// The two-periodic point with sigma_j = 0 for even j and 1 for odd j.
PeriodicPoint alternating_point();

struct Example1Params {
  std::vector<int> n{1, 2, 3, 4};
  int max_depth = 3;
  int max_width = 2;
};

/// Dirac measure at the alternating point and its Cesaro averages: Phi(X) = 0 for the raw
/// measure, 1 for odd n and at least n/(n+1) for even n, over every D <= max_depth, W <= max_width.
Report example1(const Example1Params& params = {});

struct Example2Params {
  RationalMatrix transition{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};
  /// Initial distribution pi^(0); empty means uniform.
  RationalVector initial;
  int depth = 3;
  int width = 2;
  int samples = 20;
  std::uint64_t seed = 7;
};

/// Stationary chain against the chain started in pi^(0): sandwich
/// lambda_0 Phi^(0) <= Phi <= alpha_0 Phi^(0), Phi(X) = 1, Phi^(0)(X) >= 1/alpha_0 and >= 1/N, and
/// the deviation bound max(alpha_0 - 1, 1/lambda_0 - 1) on sampled window sets.
Report example2(const Example2Params& params = {});

}  // namespace ddm
