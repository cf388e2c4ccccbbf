#include <doctest.h>

#include <algorithm>

#include "ddm/errors.hpp"
#include "ddm/examples.hpp"
#include "ddm/verify.hpp"

using namespace ddm;

namespace {

const Alphabet kBin{2};
const RationalMatrix kChain{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};

WindowSet lit(const char* text) { return parse_window_set(kBin, text); }

CylinderMeasure dirac() { return CylinderMeasure::dirac(kBin, alternating_point()); }

const Check& find_check(const Report& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("verdicts combine with FAIL first") {
  CHECK(combine(Verdict::Pass, Verdict::Inconclusive) == Verdict::Inconclusive);
  CHECK(combine(Verdict::Inconclusive, Verdict::Fail) == Verdict::Fail);
  CHECK(std::string(to_string(Verdict::Inconclusive)) == "INCONCLUSIVE");
  Check c;
  c.record_inconclusive({{"x", 1}});
  c.record_fail({{"x", 2}});
  c.record_fail({{"x", 3}});
  CHECK(c.verdict == Verdict::Fail);
  CHECK(c.witness["x"] == 2);
}

TEST_CASE("finite window algebra") {
  const FiniteAlgebra a = FiniteAlgebra::window_algebra(kBin, {0, 1});
  CHECK(a.generators().size() == 2);
  CHECK(a.atoms().size() == 4);
  CHECK(a.test_sets(64, 1).size() == 16);
  CHECK(a.contains(lit("cyl(0,[1,0])")));
  CHECK_FALSE(a.contains(lit("cyl(2,[1])")));
}

TEST_CASE("Caratheodory splitting") {
  const SetFunctionHandle stat = SetFunctionHandle::measure(CylinderMeasure::stationary_markov(kChain));
  CHECK(caratheodory_measurable(stat, lit("cyl(0,[0])"), FiniteAlgebra::window_algebra(kBin, {0, 1})).measurable);

  const SetFunctionHandle phi = SetFunctionHandle::truncated_phi(dirac(), {1, 1, 0});
  const MeasurabilityResult r =
      caratheodory_measurable(phi, lit("cyl(0,[0])"), FiniteAlgebra::window_algebra(kBin, {-1, 1}));
  CHECK(r.measurable);
  CHECK(r.tested == 256);

  const CylinderMeasure b = CylinderMeasure::bernoulli({Rational(1, 2), Rational(1, 2)});
  const CylinderMeasure d = dirac();
  const SetFunctionHandle max_of_two("max", kBin, [b, d](const WindowSet& s) {
    return std::max<Rational>(eval0(b, s), eval0(d, s));
  });
  const MeasurabilityResult bad =
      caratheodory_measurable(max_of_two, lit("cyl(0,[0])"), FiniteAlgebra::window_algebra(kBin, {0, 1}));
  CHECK_FALSE(bad.measurable);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.whole != bad.inside + bad.outside);
}

TEST_CASE("measurable family on a small algebra") {
  const FiniteAlgebra a = FiniteAlgebra::window_algebra(kBin, {0, 1});
  const SetFunctionHandle stat = SetFunctionHandle::measure(CylinderMeasure::stationary_markov(kChain));
  const Report r = check_measurable_family(stat, a, a.generators());
  CHECK(r.verdict() == Verdict::Pass);
  CHECK_THROWS_AS(check_measurable_family(stat, a, {lit("cyl(3,[0])")}), Error);
}

TEST_CASE("outer measure axioms") {
  const std::vector<WindowSet> samples{lit("cyl(0,[0])"), lit("cyl(0,[0,1])"), lit("cyl(1,[1])"),
                                       WindowSet::full(kBin), lit("union(cyl(0,[1]),cyl(2,[0]))")};
  CHECK(check_outer_measure_axioms(SetFunctionHandle::measure(dirac()), samples).verdict() == Verdict::Pass);
  CHECK(check_outer_measure_axioms(SetFunctionHandle::truncated_phi(dirac(), {1, 2, 0}), samples).verdict() ==
        Verdict::Pass);
  const CylinderMeasure s =
      CylinderMeasure::signed_diff(CylinderMeasure::bernoulli({Rational(1, 2), Rational(1, 2)}), Rational(2), dirac());
  const SetFunctionHandle h("signed", kBin, [s](const WindowSet& x) { return eval0(s, x); });
  const Report r = check_outer_measure_axioms(h, {lit("cyl(0,[1])"), WindowSet::full(kBin)});
  CHECK(find_check(r, "monotone").verdict == Verdict::Fail);
  CHECK_THROWS_AS(SetFunctionHandle("bad", kBin, [](const WindowSet&) { return Rational(1); }), Error);
}

TEST_CASE("piecewise linear f") {
  CHECK(PiecewiseLinear::identity()(Rational(3, 7)) == Rational(3, 7));
  const PiecewiseLinear f({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}, {Rational(2), Rational(3)}});
  CHECK(f(Rational(1, 2)) == 1);
  CHECK(f(Rational(3, 2)) == Rational(5, 2));
  CHECK(f(Rational(5)) == 3);
  CHECK_THROWS_AS(PiecewiseLinear({{Rational(1), Rational(0)}}), Error);
}

TEST_CASE("approximation properties") {
  const CylinderMeasure stat = CylinderMeasure::stationary_markov(kChain);
  const CylinderMeasure coin = CylinderMeasure::bernoulli({Rational(1, 3), Rational(2, 3)});
  const TruncationConfig cfg{1, 2, 0};
  const std::vector<Rational> t{Rational(1), Rational(1, 2), Rational(1, 4)};
  ApproxFamilySpec spec{t, {}, SetFunctionHandle::truncated_phi(stat, cfg)};
  for (const Rational& x : t) spec.family.push_back(SetFunctionHandle::psi_family_member(coin, stat, x, cfg));
  const WindowSet b = lit("union(cyl(0,[1]),cyl(-1,[0,0]))");
  const WindowSet a = lit("cyl(0,[1])");
  const Report r = check_approximation(spec, {{a, b}}, {{a, lit("cyl(0,[0,1])")}});
  CHECK(r.verdict() == Verdict::Pass);

  ApproxFamilySpec reversed = spec;
  const SetFunctionHandle m = SetFunctionHandle::measure(coin);
  const SetFunctionHandle twice("twice", kBin, [coin](const WindowSet& s) { return 2 * eval0(coin, s); });
  reversed.t = {Rational(1), Rational(1, 2)};
  reversed.family = {twice, m};
  try {
    check_approximation(reversed, {{a, b}}, {});
    FAIL("expected GridNotMonotone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridNotMonotone);
  }
}

TEST_CASE("norm defect") {
  CHECK(norm_defect(dirac(), 1, 1) == 1);
  CHECK(norm_defect(CylinderMeasure::stationary_markov(kChain), 2, 2) == 0);
  CHECK(norm_defect(CylinderMeasure::bernoulli({Rational(1, 3), Rational(2, 3)}), 2, 2) == 0);
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  CHECK(norm_defect(uni, 0, 1) == Rational(1, 8));
  const NormDefectReport r = norm_defect_report(dirac(), 1, 1, {1, 1, 0});
  CHECK(r.mass == 1);
  CHECK(r.phi_truncated_x == 0);
  CHECK(r.bound == Verdict::Pass);
}

TEST_CASE("consistency checks") {
  const std::vector<WindowSet> samples{lit("cyl(0,[0])"), lit("cyl(-1,[1,0])"), lit("union(cyl(0,[1]),cyl(2,[0]))")};
  ConsistencyOptions options;
  options.configs = {{1, 2, 0}, {2, 2, -1}};
  const Report ok = check_consistency(CylinderMeasure::stationary_markov(kChain), samples, options);
  CHECK(ok.verdict() == Verdict::Pass);
  const Report bad = check_consistency(dirac(), samples, options);
  CHECK(find_check(bad, "consistency identity").verdict == Verdict::Fail);

  ConsistencyOptions prepend;
  prepend.configs = {{1, 2, 0}};
  prepend.lambda = CylinderMeasure::stationary_markov(kChain);
  const Report p = check_consistency(CylinderMeasure::bernoulli({Rational(1, 3), Rational(2, 3)}),
                                     {lit("cyl(0,[0])"), lit("cyl(1,[1,1])")}, prepend);
  CHECK(find_check(p, "prepending a consistent chain").verdict != Verdict::Fail);
}
