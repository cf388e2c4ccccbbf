#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ddm/cover.hpp"
#include "ddm/measures.hpp"
#include "ddm/symbolic.hpp"

namespace ddm {

/// Seeded generator of small random instances. Draws use plain modulo reduction of a
/// std::mt19937_64 stream so sequences are identical across standard libraries.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  int integer(int lo, int hi);
  bool coin() { return (rng_() & 1U) != 0; }

  /// Strictly positive rational vector summing to 1 with denominators dividing `den`.
  RationalVector distribution(int n, int den = 8);
  /// Stochastic matrix with strictly positive entries (hence irreducible).
  RationalMatrix stochastic(int n, int den = 8);
  PeriodicPoint periodic_point(int alphabet_size, int max_period = 3);

  /// One of: Dirac, Markov, stationary Markov, Bernoulli, Cesaro of a Dirac, convex pair.
  CylinderMeasure measure(Alphabet alphabet);
  CylinderMeasure shift_invariant_measure(Alphabet alphabet);

  /// Each word over `window` joins the set with probability 1/2.
  WindowSet window_set(Alphabet alphabet, Window window);
  /// Window set on a random sub-window of `range`.
  WindowSet window_set_within(Alphabet alphabet, Window range);
  /// Cylinder with lo in [lo_min, lo_max] and hi in [lo, hi_max].
  WindowSet cylinder(Alphabet alphabet, int lo_min, int lo_max, int hi_max);
  /// Graded cover at base shift i with entries on windows inside [m + i, top].
  Cover cover(Alphabet alphabet, int depth, int top, int base_shift);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ddm
