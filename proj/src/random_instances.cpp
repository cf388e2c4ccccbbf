#include "ddm/random_instances.hpp"

namespace ddm {

int InstanceGenerator::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

RationalVector InstanceGenerator::distribution(int n, int den) {
  // Split den into n positive parts.
  std::vector<int> parts(n, 1);
  for (int r = den - n; r > 0; --r) ++parts[integer(0, n - 1)];
  RationalVector out;
  for (int p : parts) out.emplace_back(p, den);
  return out;
}

RationalMatrix InstanceGenerator::stochastic(int n, int den) {
  RationalMatrix out;
  for (int r = 0; r < n; ++r) out.push_back(distribution(n, den));
  return out;
}

PeriodicPoint InstanceGenerator::periodic_point(int alphabet_size, int max_period) {
  PeriodicPoint p;
  const int period = integer(1, max_period);
  for (int t = 0; t < period; ++t) p.period.push_back(integer(0, alphabet_size - 1));
  if (integer(0, 3) == 0) p.exceptions[integer(-3, 3)] = integer(0, alphabet_size - 1);
  return p;
}

CylinderMeasure InstanceGenerator::measure(Alphabet alphabet) {
  const int n = alphabet.size;
  switch (integer(0, 5)) {
    case 0: return CylinderMeasure::dirac(alphabet, periodic_point(n));
    case 1: return CylinderMeasure::markov(distribution(n), stochastic(n));
    case 2: return CylinderMeasure::stationary_markov(stochastic(n));
    case 3: return CylinderMeasure::bernoulli(distribution(n));
    case 4: return cesaro(CylinderMeasure::dirac(alphabet, periodic_point(n)), integer(1, 3));
    default: {
      const Rational w(integer(1, 3), 4);
      return CylinderMeasure::convex({w, 1 - w}, {CylinderMeasure::dirac(alphabet, periodic_point(n)),
                                                  CylinderMeasure::markov(distribution(n), stochastic(n))});
    }
  }
}

CylinderMeasure InstanceGenerator::shift_invariant_measure(Alphabet alphabet) {
  if (coin()) return CylinderMeasure::stationary_markov(stochastic(alphabet.size));
  return CylinderMeasure::bernoulli(distribution(alphabet.size));
}

WindowSet InstanceGenerator::window_set(Alphabet alphabet, Window window) {
  boost::dynamic_bitset<> bits(word_count(alphabet, window));
  for (std::size_t k = 0; k < bits.size(); ++k)
    if (coin()) bits.set(k);
  return WindowSet::from_bits(alphabet, window, std::move(bits));
}

WindowSet InstanceGenerator::window_set_within(Alphabet alphabet, Window range) {
  const int lo = integer(range.lo, range.hi);
  const int hi = integer(lo, range.hi);
  return window_set(alphabet, {lo, hi});
}

WindowSet InstanceGenerator::cylinder(Alphabet alphabet, int lo_min, int lo_max, int hi_max) {
  const int lo = integer(lo_min, lo_max);
  const int hi = integer(lo, std::max(lo, hi_max));
  std::vector<Symbol> word;
  for (int j = lo; j <= hi; ++j) word.push_back(integer(0, alphabet.size - 1));
  return WindowSet::cylinder(alphabet, lo, word);
}

Cover InstanceGenerator::cover(Alphabet alphabet, int depth, int top, int base_shift) {
  Cover c;
  c.base_shift = base_shift;
  for (int m = 0; m >= -depth; --m) {
    if (integer(0, 3) == 0) continue;
    c.entries.push_back({m, window_set_within(alphabet, {m + base_shift, top})});
  }
  return c;
}

}  // namespace ddm
