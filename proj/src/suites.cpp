#include "ddm/suites.hpp"

#include <algorithm>

#include "ddm/approx.hpp"
#include "ddm/cover_engine.hpp"
#include "ddm/examples.hpp"
#include "ddm/random_instances.hpp"

namespace ddm {

namespace {

using Json = nlohmann::ordered_json;

const Alphabet kBinary{2};

std::size_t count_or(const SuiteOptions& o, std::size_t fallback) { return o.samples ? o.samples : fallback; }

void absorb(Report& into, const Report& from, const std::string& prefix) {
  for (const Check& c : from.checks) {
    Check copy = c;
    copy.name = prefix + ": " + c.name;
    into.checks.push_back(std::move(copy));
  }
  for (const std::string& s : from.not_finitely_decidable)
    if (std::find(into.not_finitely_decidable.begin(), into.not_finitely_decidable.end(), s) ==
        into.not_finitely_decidable.end())
      into.not_finitely_decidable.push_back(s);
}

Json config_json(const TruncationConfig& cfg) { return Json{{"D", cfg.depth}, {"W", cfg.width}, {"i", cfg.shift}}; }

/// Small truncated class: N=2, D <= 2, finest span W - i + 1 + D <= 4.
struct OracleInstance {
  TruncationConfig cfg;
  WindowSet q;
  CylinderMeasure phi;
};

OracleInstance oracle_instance(InstanceGenerator& gen) {
  const int depth = gen.integer(0, 2);
  const int shift = gen.integer(-1, 0);
  const int width = gen.integer(0, 3 - depth + shift);
  const TruncationConfig cfg{depth, width, shift};
  WindowSet q = gen.window_set_within(kBinary, {shift - depth - 1, width + 1});
  return {cfg, std::move(q), gen.measure(kBinary)};
}

Json instance_json(const OracleInstance& in) {
  return Json{{"Q", to_literal(in.q)}, {"phi", in.phi.describe()}, {"config", config_json(in.cfg)}};
}

// ---------------------------------------------------------------------------------------------

Report suite_oracle(const SuiteOptions& o) {
  Report r;
  r.name = "oracle";
  r.surrogate = "N=2, D<=2, finest window span <= 4";
  InstanceGenerator gen(o.seed);
  Check& phi = r.add("tree DP equals exhaustive enumeration (phi)");
  Check& paren = r.add("tree DP equals exhaustive enumeration (parenthesized phi)");
  Check& witness = r.add("witness is a disjoint valid cover priced at the value");
  Check& psi = r.add("Pareto DP equals exhaustive enumeration (budgeted psi)");
  const std::size_t n = count_or(o, 100);
  for (std::size_t k = 0; k < n; ++k) {
    const OracleInstance in = oracle_instance(gen);
    const ValueCertificate cert = phi_truncated(in.q, in.phi, in.cfg);
    ++phi.cases;
    const Rational bf = brute_force_phi(in.q, in.phi, in.cfg);
    if (bf != cert.value) {
      Json w = instance_json(in);
      w["dp"] = to_string(cert.value);
      w["enumeration"] = to_string(bf);
      phi.record_fail(std::move(w));
    }
    ++witness.cases;
    if (!is_valid_cover(in.q, cert.witness) || !is_disjoint(cert.witness) ||
        cover_cost(cert.witness, in.phi) != cert.value)
      witness.record_fail(instance_json(in));

    ++paren.cases;
    const Rational pv = phi_paren_truncated(in.q, in.phi, in.cfg).value;
    const Rational pb = brute_force_phi(in.q, in.phi, in.cfg, CoverClass::Disjoint, true);
    if (pv != pb) {
      Json w = instance_json(in);
      w["dp"] = to_string(pv);
      w["enumeration"] = to_string(pb);
      paren.record_fail(std::move(w));
    }

    ++psi.cases;
    const CylinderMeasure objective = gen.measure(kBinary);
    const Rational budget = cert.value + Rational(1, 1 << gen.integer(0, 3));
    const auto dp = psi_budgeted({in.q, objective, {{in.phi, budget}}, in.cfg});
    const auto en = enumerate_disjoint_covers(truncated_shape(kBinary, in.cfg), in.q, {objective, in.phi}, {budget});
    const bool same = dp.has_value() == en.has_value() && (!dp || dp->value == en->costs[0]);
    if (!same) {
      Json w = instance_json(in);
      w["psi"] = objective.describe();
      w["budget"] = to_string(budget);
      w["dp"] = dp ? to_string(dp->value) : "infeasible";
      w["enumeration"] = en ? to_string(en->costs[0]) : "infeasible";
      psi.record_fail(std::move(w));
    }
  }
  return r;
}

Report suite_axioms(const SuiteOptions& o) {
  Report r;
  r.name = "axioms";
  r.surrogate = "sampled window sets, finite families";
  InstanceGenerator gen(o.seed);
  const std::size_t n = count_or(o, 12);
  std::vector<WindowSet> grade0, wide;
  for (std::size_t k = 0; k < n; ++k) {
    grade0.push_back(gen.window_set_within(kBinary, {0, 3}));
    wide.push_back(gen.window_set_within(kBinary, {-1, 2}));
  }
  const CylinderMeasure probabilities[] = {
      CylinderMeasure::stationary_markov(gen.stochastic(2)),
      CylinderMeasure::markov(gen.distribution(2), gen.stochastic(2)),
      CylinderMeasure::dirac(kBinary, alternating_point()),
      cesaro(CylinderMeasure::dirac(kBinary, alternating_point()), 2),
  };
  for (const CylinderMeasure& mu : probabilities)
    absorb(r, check_outer_measure_axioms(SetFunctionHandle::measure(mu), grade0), "eval0 " + mu.describe());
  for (int k = 0; k < 3; ++k) {
    const CylinderMeasure mu = gen.measure(kBinary);
    absorb(r, check_outer_measure_axioms(SetFunctionHandle::truncated_phi(mu, {1, 2, 0}), wide),
           "phi_truncated " + mu.describe());
  }
  // A signed difference is not monotone; the checker must say so.
  Check& signed_check = r.add("signed difference detected as non-monotone");
  ++signed_check.cases;
  const CylinderMeasure signed_mu = CylinderMeasure::signed_diff(
      CylinderMeasure::bernoulli({Rational(1, 2), Rational(1, 2)}), Rational(2),
      CylinderMeasure::dirac(kBinary, alternating_point()));
  const Symbol one[] = {1};
  const std::vector<WindowSet> probe{WindowSet::cylinder(kBinary, 0, one), WindowSet::full(kBinary)};
  const Report sr = check_outer_measure_axioms(
      SetFunctionHandle("eval0 " + signed_mu.describe(), kBinary, [signed_mu](const WindowSet& s) { return eval0(signed_mu, s); }),
      probe);
  const Check& mono = sr.checks[1];
  if (mono.verdict != Verdict::Fail) signed_check.record_fail(Json{{"monotone", to_string(mono.verdict)}});
  else signed_check.witness = mono.witness;
  return r;
}

Report suite_disjoint(const SuiteOptions& o) {
  Report r;
  r.name = "disjoint";
  r.surrogate = "random graded covers with D<=2 and oracle-sized classes";
  InstanceGenerator gen(o.seed);
  Check& union_check = r.add("disjointify preserves the union");
  Check& disjoint_check = r.add("disjointified entries are pairwise disjoint and inside the originals");
  Check& cost_check = r.add("disjointify never increases a nonnegative cost");
  const std::size_t n = count_or(o, 1000);
  for (std::size_t k = 0; k < n; ++k) {
    const Cover c = gen.cover(kBinary, gen.integer(0, 2), gen.integer(0, 2), gen.integer(-1, 0));
    const Cover d = disjointify(c);
    const CylinderMeasure mu = gen.measure(kBinary);
    ++union_check.cases;
    if (!(cover_union(c, kBinary) == cover_union(d, kBinary))) union_check.record_fail(Json{{"case", k}});
    ++disjoint_check.cases;
    bool inside = is_disjoint(d) && is_graded(d);
    const Cover canon = c.canonical();
    for (const CoverEntry& e : d.entries) {
      auto it = std::find_if(canon.entries.begin(), canon.entries.end(), [&](const CoverEntry& x) { return x.m == e.m; });
      inside = inside && it != canon.entries.end() && is_subset(e.set, it->set);
    }
    if (!inside) disjoint_check.record_fail(Json{{"case", k}});
    ++cost_check.cases;
    const Rational before = cover_cost(c, mu), after = cover_cost(d, mu);
    if (after > before)
      cost_check.record_fail(Json{{"case", k}, {"measure", mu.describe()}, {"before", to_string(before)},
                                  {"after", to_string(after)}});
  }
  Check& overlap = r.add("disjoint DP value equals optimum over overlapping covers");
  const std::size_t m = std::max<std::size_t>(1, n / 10);
  for (std::size_t k = 0; k < m; ++k) {
    const OracleInstance in = oracle_instance(gen);
    ++overlap.cases;
    const Rational dp = phi_truncated(in.q, in.phi, in.cfg).value;
    const Rational ov = brute_force_phi(in.q, in.phi, in.cfg, CoverClass::Overlapping);
    if (dp != ov) {
      Json w = instance_json(in);
      w["dp"] = to_string(dp);
      w["overlapping"] = to_string(ov);
      overlap.record_fail(std::move(w));
    }
  }
  return r;
}

Report suite_consistency(const SuiteOptions& o) {
  Report r;
  r.name = "consistency";
  r.surrogate = "sampled cylinders and window sets on [-2,2]";
  InstanceGenerator gen(o.seed);
  const std::size_t n = count_or(o, 15);
  std::vector<WindowSet> samples;
  for (std::size_t k = 0; k < n; ++k)
    samples.push_back(k % 2 ? gen.cylinder(kBinary, -2, 2, 2) : gen.window_set_within(kBinary, {-2, 2}));
  ConsistencyOptions options;
  for (int d : {0, 1, 2})
    for (int w : {2, 3})
      for (int i : {0, -1}) options.configs.push_back({d, w, i});
  for (int k = 0; k < 2; ++k) {
    const CylinderMeasure mu = gen.shift_invariant_measure(kBinary);
    absorb(r, check_consistency(mu, samples, options), mu.describe());
  }
  Check& dirac = r.add("alternating Dirac family detected as inconsistent");
  ++dirac.cases;
  const CylinderMeasure d = CylinderMeasure::dirac(kBinary, alternating_point());
  const Report dr = check_consistency(d, samples, {});
  if (dr.checks.front().verdict != Verdict::Fail) dirac.record_fail(Json{{"identity", "held on every sample"}});
  else dirac.witness = dr.checks.front().witness;

  ConsistencyOptions prepend;
  prepend.configs.push_back({1, 2, 0});
  prepend.lambda = CylinderMeasure::stationary_markov(gen.stochastic(2));
  std::vector<WindowSet> cylinders;
  for (std::size_t k = 0; k < n; ++k) cylinders.push_back(gen.cylinder(kBinary, 0, 2, 2));
  const Report pr = check_consistency(cesaro(d, 2), cylinders, prepend);
  for (const Check& c : pr.checks)
    if (c.name == "prepending a consistent chain") {
      Check copy = c;
      copy.name = "cesaro(2) with a stationary chain prepended: " + c.name;
      r.checks.push_back(std::move(copy));
    }
  return r;
}

Report suite_monotonicity(const SuiteOptions& o) {
  Report r;
  r.name = "monotonicity";
  r.surrogate = "eps in {1,1/2,1/4,1/8}, shifts {0,-1,-2} on an anchored grid, D=1, W=2";
  r.not_finitely_decidable.push_back("limits over eps -> 0 and i -> -infinity");
  InstanceGenerator gen(o.seed);
  Check& eps = r.add("Psi nondecreasing as eps decreases");
  Check& shift = r.add("Psi nondecreasing as the shift decreases");
  Check& phi_shift = r.add("Phi_i nondecreasing as the shift decreases");
  Check& trunc = r.add("truncated Phi nonincreasing in D and W");
  const std::vector<Rational> eps_list{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  const std::vector<int> shifts{0, -1, -2};
  const std::size_t n = count_or(o, 12);
  for (std::size_t k = 0; k < n; ++k) {
    const WindowSet q = gen.window_set_within(kBinary, {-2, 2});
    const CylinderMeasure phi = gen.measure(kBinary);
    const CylinderMeasure psi = gen.measure(kBinary);
    const PsiGrid grid = psi_eps_grid(q, psi, phi, eps_list, shifts, 1, 2);
    Json w{{"Q", to_literal(q)}, {"phi", phi.describe()}, {"psi", psi.describe()}};
    ++eps.cases;
    if (!grid.monotone_in_eps) eps.record_fail(w);
    ++shift.cases;
    if (!grid.monotone_in_shift) shift.record_fail(w);
    ++phi_shift.cases;
    if (!phi_grid(q, phi, 1, 2, shifts).monotone) phi_shift.record_fail(w);
    ++trunc.cases;
    const Rational base = phi_truncated(q, phi, {1, 2, 0}).value;
    if (phi_truncated(q, phi, {2, 2, 0}).value > base || phi_truncated(q, phi, {1, 3, 0}).value > base)
      trunc.record_fail(w);
  }
  return r;
}

Report suite_caratheodory(const SuiteOptions& o) {
  Report r;
  r.name = "caratheodory";
  r.surrogate = "[-2,2]-window algebra, truncation D=3, W=3, i=0";
  r.not_finitely_decidable.push_back("measurability against every set of the sigma-algebra");
  InstanceGenerator gen(o.seed);
  const FiniteAlgebra algebra = FiniteAlgebra::window_algebra(kBinary, {-2, 2});
  const TruncationConfig cfg{3, 3, 0};
  const CylinderMeasure stationary = CylinderMeasure::stationary_markov(gen.stochastic(2));
  const CylinderMeasure bernoulli = CylinderMeasure::bernoulli(gen.distribution(2));
  const CylinderMeasure dirac = CylinderMeasure::dirac(kBinary, alternating_point());
  const Rational budget = phi_truncated(WindowSet::full(kBinary), stationary, cfg).value + Rational(1, 4);
  const std::vector<SetFunctionHandle> handles{
      SetFunctionHandle::truncated_phi(stationary, cfg),
      SetFunctionHandle::truncated_phi(dirac, cfg),
      SetFunctionHandle::budgeted_psi(bernoulli, stationary, budget, cfg),
  };
  const std::size_t extra = count_or(o, 4);
  std::vector<WindowSet> candidates = algebra.generators();
  for (const WindowSet& s : algebra.test_sets(algebra.generators().size() * 2 + 2 + extra, o.seed))
    if (candidates.size() < algebra.generators().size() + extra && !s.is_degenerate() &&
        std::find(candidates.begin(), candidates.end(), s) == candidates.end())
      candidates.push_back(s);
  const std::vector<WindowSet> tests = algebra.test_sets(48, o.seed);
  for (const SetFunctionHandle& mu : handles) {
    absorb(r, check_measurable_family(mu, algebra, candidates, 48, 16, o.seed), mu.label());
    Check& shifted = r.add(mu.label() + ": shifted generators stay measurable");
    for (const WindowSet& g : algebra.generators())
      for (int s : {-1, 1}) {
        ++shifted.cases;
        const WindowSet a = shift(g, s);
        const MeasurabilityResult m = caratheodory_measurable(mu, a, tests);
        if (!m.measurable)
          shifted.record_fail(Json{{"A", to_literal(a)}, {"Q", to_literal(*m.counterexample)},
                                   {"mu(Q)", to_string(m.whole)}, {"mu(Q&A)", to_string(m.inside)},
                                   {"mu(Q\\A)", to_string(m.outside)}});
      }
  }
  return r;
}

ApproxFamilySpec psi_family(const CylinderMeasure& psi, const CylinderMeasure& phi, const TruncationConfig& cfg,
                            const std::vector<Rational>& grid) {
  ApproxFamilySpec spec{grid, {}, SetFunctionHandle::truncated_phi(phi, cfg)};
  for (const Rational& t : grid) spec.family.push_back(SetFunctionHandle::psi_family_member(psi, phi, t, cfg));
  return spec;
}

Report suite_approximation(const SuiteOptions& o) {
  Report r;
  r.name = "approximation";
  r.surrogate = "Psi family on eps in {1,1/2,1/4,1/8}, D=1, W=2, i=0";
  InstanceGenerator gen(o.seed);
  const TruncationConfig cfg{1, 2, 0};
  const std::vector<Rational> grid{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  const std::size_t n = count_or(o, 10);
  std::vector<std::pair<WindowSet, WindowSet>> pairs;
  std::vector<std::vector<WindowSet>> families;
  for (std::size_t k = 0; k < n; ++k) {
    const WindowSet b = gen.window_set_within(kBinary, {-1, 2});
    const WindowSet a = set_intersection(b, gen.window_set_within(kBinary, {-1, 2}));
    pairs.emplace_back(a, b);
    const WindowSet c = gen.window_set_within(kBinary, {-1, 2});
    families.push_back({a, set_difference(c, a)});
    if (k % 3 == 0) families.push_back({a, set_difference(b, a), complement(b)});
  }
  const CylinderMeasure stationary = CylinderMeasure::stationary_markov(gen.stochastic(2));
  const CylinderMeasure bernoulli = CylinderMeasure::bernoulli(gen.distribution(2));
  absorb(r, check_approximation(psi_family(bernoulli, stationary, cfg, grid), pairs, families), "consistent pair");
  const CylinderMeasure dirac = CylinderMeasure::dirac(kBinary, alternating_point());
  absorb(r, check_approximation(psi_family(cesaro(dirac, 1), dirac, cfg, grid), pairs, families),
         "alternating Dirac pair");
  return r;
}

Report suite_signed(const SuiteOptions& o) {
  Report r;
  r.name = "signed";
  r.surrogate = "chains n in {1,2}, eps=1/4, D=1, W=2";
  InstanceGenerator gen(o.seed);
  Check& sandwich = r.add("unsigned - c*budget <= signed <= unsigned - c*Phi_truncated on the same class");
  Check& zero = r.add("c = 0 reproduces the unsigned chain");
  Check& linear = r.add("signed witness cost = psi cost - c * phi cost");
  const Rational eps(1, 4);
  const std::size_t n = count_or(o, 12);
  for (std::size_t k = 0; k < n; ++k) {
    const WindowSet q = gen.window_set_within(kBinary, {-1, 2});
    const CylinderMeasure phi = gen.measure(kBinary);
    const int len = 1 + static_cast<int>(k % 2);
    std::vector<CylinderMeasure> psis;
    std::vector<Rational> c;
    for (int j = 0; j < len; ++j) {
      psis.push_back(gen.measure(kBinary));
      c.emplace_back(gen.integer(0, 4), 2);
    }
    const TruncationConfig cfg{1, 2, gen.integer(-1, 0)};
    const ChainResult s = psi_signed(q, phi, psis, c, eps, cfg);
    const Rational budget = s.phi_reference + eps;
    Json w{{"Q", to_literal(q)}, {"phi", phi.describe()}, {"config", config_json(cfg)}};
    for (std::size_t lv = 0; lv < s.levels.size(); ++lv) {
      const ChainLevel& level = s.levels[lv];
      if (!level.certificate) continue;
      BudgetedProblem unsigned_problem = level.problem;
      unsigned_problem.objective = psis[lv];
      const auto u = psi_budgeted(unsigned_problem);
      ++sandwich.cases;
      if (!u || u->value - c[lv] * budget > level.certificate->value ||
          level.certificate->value > u->value - c[lv] * s.phi_reference) {
        Json f = w;
        f["level"] = lv + 1;
        f["signed"] = to_string(level.certificate->value);
        f["unsigned"] = u ? to_string(u->value) : "infeasible";
        sandwich.record_fail(std::move(f));
      }
      ++linear.cases;
      const Cover& wit = level.certificate->witness;
      if (cover_cost(wit, level.problem.objective) != cover_cost(wit, psis[lv]) - c[lv] * cover_cost(wit, phi))
        linear.record_fail(w);
    }
    ++zero.cases;
    const ChainResult a = psi_chain(q, phi, psis, eps, cfg);
    const ChainResult b = psi_signed(q, phi, psis, std::vector<Rational>(psis.size(), Rational(0)), eps, cfg);
    bool same = a.levels.size() == b.levels.size() && a.failed_level == b.failed_level;
    for (std::size_t lv = 0; same && lv < a.levels.size(); ++lv) {
      const auto& x = a.levels[lv].certificate;
      const auto& y = b.levels[lv].certificate;
      same = x.has_value() == y.has_value() && (!x || (x->value == y->value && to_literal(cover_union(x->witness, kBinary)) ==
                                                                              to_literal(cover_union(y->witness, kBinary))));
    }
    if (!same) zero.record_fail(w);
  }
  return r;
}

Report suite_norm_defect(const SuiteOptions& o) {
  Report r;
  r.name = "norm-defect";
  r.surrogate = "sets on [0,window_cap], shifts |m| <= m_cap";
  r.not_finitely_decidable.push_back("supremum over all m <= 0 and all sets of the grade");
  InstanceGenerator gen(o.seed);
  const TruncationConfig cfg{1, 1, 0};
  Check& invariant = r.add("shift-invariant measures have defect 0 and Phi(X) = phi_0(X)");
  for (int k = 0; k < 4; ++k) {
    const CylinderMeasure mu = gen.shift_invariant_measure(kBinary);
    const NormDefectReport nd = norm_defect_report(mu, 2, 2, cfg);
    ++invariant.cases;
    if (nd.defect != 0 || nd.phi_truncated_x != nd.mass)
      invariant.record_fail(Json{{"measure", mu.describe()}, {"defect", to_string(nd.defect)},
                                 {"Phi(X)", to_string(nd.phi_truncated_x)}});
  }
  Check& dirac = r.add("alternating Dirac: defect 1 at caps (1,1) and Phi(X) = 0 within the bound");
  ++dirac.cases;
  const NormDefectReport nd = norm_defect_report(CylinderMeasure::dirac(kBinary, alternating_point()), 1, 1, cfg);
  Json w{{"defect", to_string(nd.defect)}, {"mass", to_string(nd.mass)}, {"Phi(X)", to_string(nd.phi_truncated_x)},
         {"bound", to_string(nd.bound)}};
  if (nd.defect != 1 || nd.phi_truncated_x != 0 || nd.bound != Verdict::Pass) dirac.record_fail(w);
  else dirac.witness = w;
  Check& bound = r.add("Phi(X) <= phi_0(X) - defect on random measures");
  for (int k = 0; k < 6; ++k) {
    const CylinderMeasure mu = gen.measure(kBinary);
    const NormDefectReport x = norm_defect_report(mu, 1, 1, cfg);
    ++bound.cases;
    if (x.bound != Verdict::Pass)
      bound.record_inconclusive(Json{{"measure", mu.describe()}, {"defect", to_string(x.defect)},
                                     {"Phi(X)", to_string(x.phi_truncated_x)}});
  }
  return r;
}

Report suite_example_bounds(const SuiteOptions& o) {
  Report r;
  r.name = "example-bounds";
  r.surrogate = "exact truncated values";
  absorb(r, example1(), "e1");
  Example2Params p;
  p.seed = o.seed;
  absorb(r, example2(p), "e2 uniform start");
  Example2Params tight = p;
  tight.initial = stationary_distribution(tight.transition);
  tight.samples = 8;
  absorb(r, example2(tight), "e2 stationary start");
  return r;
}

Report suite_shift(const SuiteOptions& o) {
  Report r;
  r.name = "shift";
  r.surrogate = "random window sets within [-3,3]";
  InstanceGenerator gen(o.seed);
  Check& round = r.add("shift round trip and grade offset");
  Check& eval = r.add("phi_m(A) = phi_0(S^m A)");
  Check& cov = r.add("Phi_i(Q) = Phi_0(S^i Q) at matched truncation");
  const std::size_t n = count_or(o, 30);
  for (std::size_t k = 0; k < n; ++k) {
    const WindowSet q = gen.window_set_within(kBinary, {-3, 3});
    const int i = gen.integer(-2, 0);
    ++round.cases;
    const WindowSet moved = shift(q, i);
    const auto before = min_coordinate(q), after = min_coordinate(moved);
    if (!(shift(moved, -i) == q) || before.has_value() != after.has_value() || (before && *after != *before - i))
      round.record_fail(Json{{"Q", to_literal(q)}, {"i", i}});
    const CylinderMeasure mu = gen.measure(kBinary);
    if (before && *before >= i) {
      ++eval.cases;
      if (eval_shifted(mu, i, q) != eval0(mu, shift(q, i))) eval.record_fail(Json{{"A", to_literal(q)}, {"m", i}});
    }
    ++cov.cases;
    const TruncationConfig cfg{1, 2, i};
    const Rational a = phi_truncated(q, mu, cfg).value;
    const Rational b = phi_truncated(shift(q, i), mu, {1, 2 - i, 0}).value;
    if (a != b)
      cov.record_fail(Json{{"Q", to_literal(q)}, {"i", i}, {"Phi_i(Q)", to_string(a)}, {"Phi_0(S^iQ)", to_string(b)}});
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle",       "axioms",        "disjoint", "consistency",
                                              "monotonicity", "caratheodory",  "approximation",
                                              "signed",       "norm-defect",   "example-bounds", "shift"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "oracle") return suite_oracle(options);
  if (name == "axioms") return suite_axioms(options);
  if (name == "disjoint") return suite_disjoint(options);
  if (name == "consistency") return suite_consistency(options);
  if (name == "monotonicity") return suite_monotonicity(options);
  if (name == "caratheodory") return suite_caratheodory(options);
  if (name == "approximation") return suite_approximation(options);
  if (name == "signed") return suite_signed(options);
  if (name == "norm-defect") return suite_norm_defect(options);
  if (name == "example-bounds") return suite_example_bounds(options);
  if (name == "shift") return suite_shift(options);
  fail(ErrorKind::UnknownName, "unknown suite '" + name + "'");
}

}  // namespace ddm
