#include "ddm/examples.hpp"

#include <algorithm>

#include "ddm/cover_engine.hpp"
#include "ddm/random_instances.hpp"

namespace ddm {

using Json = nlohmann::ordered_json;

PeriodicPoint alternating_point() { return PeriodicPoint{{0, 1}, {}}; }

Report example1(const Example1Params& params) {
  const Alphabet alphabet{2};
  const WindowSet x = WindowSet::full(alphabet);
  const CylinderMeasure dirac = CylinderMeasure::dirac(alphabet, alternating_point());
  Report report;
  report.name = "example e1";
  report.surrogate = "truncations D<=" + std::to_string(params.max_depth) + ", W<=" + std::to_string(params.max_width) +
                     ", i=0";
  report.not_finitely_decidable.push_back("Phi^(n)(X) itself (truncated values are upper bounds)");

  Check& raw = report.add("Phi(X) = 0 for the Dirac measure");
  {
    ++raw.cases;
    const Rational v = phi_truncated(x, dirac, {1, 0, 0}).value;
    if (v != 0) raw.record_fail(Json{{"D", 1}, {"W", 0}, {"value", to_string(v)}});
    else raw.witness = Json{{"D", 1}, {"W", 0}, {"value", to_string(v)}};
  }
  for (int n : params.n) {
    if (n < 1) fail(ErrorKind::InvalidInput, "Cesaro order must be >= 1");
    const CylinderMeasure mu = cesaro(dirac, n);
    const bool odd = n % 2 == 1;
    const Rational lower = odd ? Rational(1) : Rational(n, n + 1);
    Check& c = report.add(odd ? "Phi^(" + std::to_string(n) + ")(X) = 1"
                              : "Phi^(" + std::to_string(n) + ")(X) in [" + to_string(lower) + ", 1]");
    Json values = Json::array();
    for (int d = 1; d <= params.max_depth; ++d)
      for (int w = 0; w <= params.max_width; ++w) {
        ++c.cases;
        const Rational v = phi_truncated(x, mu, {d, w, 0}).value;
        values.push_back(Json{{"D", d}, {"W", w}, {"value", to_string(v)}});
        if (v < lower || v > 1) c.record_fail(Json{{"D", d}, {"W", w}, {"value", to_string(v)}});
      }
    if (c.verdict == Verdict::Pass) c.witness = std::move(values);
  }
  return report;
}

Report example2(const Example2Params& params) {
  const int n = static_cast<int>(params.transition.size());
  const Alphabet alphabet{n};
  RationalVector initial = params.initial;
  if (initial.empty()) initial.assign(n, Rational(1, n));
  if (static_cast<int>(initial.size()) != n) fail(ErrorKind::InvalidInput, "initial distribution has wrong size");
  if (!is_irreducible(params.transition)) fail(ErrorKind::NotIrreducible, "example e2 needs an irreducible chain");
  const RationalVector pi = stationary_distribution(params.transition);
  Rational lambda0 = pi[0] / initial[0], alpha0 = lambda0;
  for (int a = 0; a < n; ++a) {
    if (initial[a] <= 0) fail(ErrorKind::InvalidInput, "initial distribution must be positive");
    lambda0 = std::min<Rational>(lambda0, pi[a] / initial[a]);
    alpha0 = std::max<Rational>(alpha0, pi[a] / initial[a]);
  }
  const Rational deviation = std::max<Rational>(alpha0 - 1, 1 / lambda0 - 1);
  const CylinderMeasure phi = CylinderMeasure::stationary_markov(params.transition);
  const CylinderMeasure phi0 = CylinderMeasure::markov(initial, params.transition);
  const TruncationConfig cfg{params.depth, params.width, 0};
  const WindowSet x = WindowSet::full(alphabet);

  Report report;
  report.name = "example e2";
  report.surrogate = "truncation D=" + std::to_string(cfg.depth) + ", W=" + std::to_string(cfg.width) + ", i=0; " +
                     std::to_string(params.samples) + " sampled window sets";

  Check& constants = report.add("sandwich constants");
  ++constants.cases;
  Json pis = Json::array();
  for (const Rational& p : pi) pis.push_back(to_string(p));
  constants.witness = Json{{"pi", pis}, {"lambda0", to_string(lambda0)}, {"alpha0", to_string(alpha0)},
                           {"deviation_bound", to_string(deviation)}};

  const Rational phi_x = phi_truncated(x, phi, cfg).value;
  const Rational phi0_x = phi_truncated(x, phi0, cfg).value;
  Check& mass = report.add("Phi(X) = 1");
  ++mass.cases;
  if (phi_x != 1) mass.record_fail(Json{{"value", to_string(phi_x)}});
  Check& lower = report.add("Phi^(0)(X) >= 1/alpha0 and >= 1/N");
  ++lower.cases;
  Json lw{{"value", to_string(phi0_x)}, {"1/alpha0", to_string(1 / alpha0)}, {"1/N", to_string(Rational(1, n))}};
  if (phi0_x < 1 / alpha0 || phi0_x < Rational(1, n)) lower.record_fail(lw);
  else lower.witness = lw;

  Check& sandwich = report.add("lambda0 Phi^(0)(Q) <= Phi(Q) <= alpha0 Phi^(0)(Q)");
  Check& dev = report.add("|Phi^(0)(Q) - Phi(Q)| <= max(alpha0 - 1, 1/lambda0 - 1)");
  InstanceGenerator gen(params.seed);
  std::vector<WindowSet> samples{x};
  while (static_cast<int>(samples.size()) < params.samples)
    samples.push_back(gen.window_set_within(alphabet, {-cfg.depth, cfg.width}));
  for (const WindowSet& q : samples) {
    const Rational a = phi_truncated(q, phi, cfg).value;
    const Rational b = phi_truncated(q, phi0, cfg).value;
    Json w{{"Q", to_literal(q)}, {"Phi", to_string(a)}, {"Phi0", to_string(b)}};
    ++sandwich.cases;
    if (lambda0 * b > a || a > alpha0 * b) sandwich.record_fail(w);
    ++dev.cases;
    if (abs(a - b) > deviation) dev.record_fail(w);
  }
  return report;
}

}  // namespace ddm
