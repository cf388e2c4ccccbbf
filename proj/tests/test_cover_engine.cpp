#include <doctest.h>

#include "ddm/cover_engine.hpp"
#include "ddm/errors.hpp"
#include "ddm/examples.hpp"

using namespace ddm;

namespace {

const Alphabet kBin{2};
const RationalMatrix kChain{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};

WindowSet lit(const char* text) { return parse_window_set(kBin, text); }

CylinderMeasure dirac() { return CylinderMeasure::dirac(kBin, alternating_point()); }

}  // namespace

TEST_CASE("covers of X from the alternating example") {
  const Cover c{{{-1, lit("cyl(0,[0])")}, {0, lit("cyl(0,[1])")}}, 0};
  CHECK(is_graded(c));
  CHECK(is_valid_cover(WindowSet::full(kBin), c));
  CHECK(cover_cost(c, dirac()) == 0);
  CHECK_FALSE(is_valid_cover(lit("cyl(0,[0])"), Cover{}));
  CHECK(is_valid_cover(WindowSet::empty(kBin), Cover{}));
  const Cover whole{{{0, WindowSet::full(kBin)}}, 0};
  CHECK(cover_cost(whole, CylinderMeasure::stationary_markov(kChain)) == 1);
  // both [-1,0]-cells of _0[0] miss the alternating point once shifted
  const Cover cells{{{-1, lit("cyl(-1,[0,0])")}, {-1, lit("cyl(-1,[1,0])")}}, 0};
  CHECK(is_valid_cover(lit("cyl(0,[0])"), cells));
  CHECK(cover_cost(cells, dirac()) == 0);
}

TEST_CASE("grading is enforced") {
  const Cover bad{{{0, lit("cyl(-1,[0])")}}, 0};
  CHECK_FALSE(is_graded(bad));
  CHECK_FALSE(is_valid_cover(lit("cyl(-1,[0])"), bad));
  const Cover shifted{{{0, lit("cyl(-1,[0])")}}, -1};
  CHECK(is_graded(shifted));
}

TEST_CASE("disjointify") {
  const Cover c{{{0, WindowSet::full(kBin)}, {-1, lit("cyl(0,[0])")}}, 0};
  const Cover d = disjointify(c);
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].m == 0);
  CHECK(d.entries[0].set.is_full());
  const Cover already{{{0, lit("cyl(0,[1])")}, {-1, lit("cyl(0,[0])")}}, 0};
  const Cover same = disjointify(already);
  CHECK(same.entries.size() == 2);
  CHECK(cover_union(same, kBin).is_full());
  CHECK(is_disjoint(same));
}

TEST_CASE("truncated values from the worked examples") {
  const WindowSet x = WindowSet::full(kBin);
  CHECK(phi_truncated(x, dirac(), {1, 0, 0}).value == 0);
  CHECK(phi_truncated(lit("cyl(0,[0])"), dirac(), {1, 0, 0}).value == 0);
  CHECK(phi_truncated(WindowSet::empty(kBin), dirac(), {1, 0, 0}).value == 0);
  const CylinderMeasure stat = CylinderMeasure::stationary_markov(kChain);
  for (int d : {0, 1, 2})
    for (int w : {0, 1, 2}) CHECK(phi_truncated(x, stat, {d, w, 0}).value == 1);
  // values frozen from tests/oracle/truncated_oracle.py
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  CHECK(phi_truncated(x, uni, {0, 0, 0}).value == 1);
  CHECK(phi_truncated(x, uni, {1, 0, 0}).value == Rational(7, 8));
  CHECK(phi_truncated(x, uni, {2, 0, 0}).value == Rational(13, 16));
  CHECK(phi_truncated(x, uni, {3, 0, 0}).value == Rational(25, 32));
  const WindowSet q = lit("union(cyl(-1,[0,1]),cyl(1,[1]))");
  CHECK(phi_truncated(q, stat, {1, 2, 0}).value == Rational(17, 24));
  CHECK(phi_truncated(q, stat, {1, 2, -1}).value == Rational(17, 24));
  CHECK(phi_truncated(q, uni, {1, 2, 0}).value == Rational(5, 8));
  CHECK(phi_truncated(q, dirac(), {1, 2, -1}).value == 0);
  const Rational cesaro_values[] = {Rational(1), Rational(2, 3), Rational(1), Rational(4, 5)};
  for (int n = 1; n <= 4; ++n) CHECK(phi_truncated(x, cesaro(dirac(), n), {3, 2, 0}).value == cesaro_values[n - 1]);
}

TEST_CASE("witnesses re-validate and re-price") {
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  const WindowSet q = lit("union(cyl(-1,[0,1]),cyl(1,[1]))");
  const ValueCertificate cert = phi_truncated(q, uni, {2, 1, -1});
  CHECK(is_valid_cover(q, cert.witness));
  CHECK(is_disjoint(cert.witness));
  CHECK(cover_cost(cert.witness, uni) == cert.value);
  CHECK(cert.witness.base_shift == -1);
}

TEST_CASE("parenthesized truncation") {
  const WindowSet x = WindowSet::full(kBin);
  CHECK(phi_paren_truncated(x, dirac(), {1, 0, -1}).value == 0);
  const CylinderMeasure stat = CylinderMeasure::stationary_markov(kChain);
  const WindowSet q = lit("cyl(0,[0,1])");
  for (int i : {0, -1, -2}) CHECK(phi_paren_truncated(q, stat, {1, 2, i}).value == Rational(1, 6));
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  CHECK(phi_paren_truncated(q, uni, {1, 2, 0}).value == phi_truncated(q, uni, {1, 2, 0}).value);
  const ValueCertificate cert = phi_paren_truncated(q, uni, {1, 2, -1});
  CHECK(cert.cost_shift == -1);
  CHECK(cover_cost_at(cert.witness, uni, cert.cost_shift) == cert.value);
  CHECK(cert.value == brute_force_phi(q, uni, {1, 2, -1}, CoverClass::Disjoint, true));
}

TEST_CASE("phi grid over shifts") {
  const CylinderMeasure stat = CylinderMeasure::stationary_markov(kChain);
  const PhiGrid g = phi_grid(lit("cyl(0,[0])"), stat, 1, 1, {0, -1, -2});
  REQUIRE(g.rows.size() == 3);
  for (const PhiGridRow& r : g.rows) CHECK(r.certificate.value == Rational(1, 3));
  CHECK(g.monotone);
  CHECK(g.shift_covariant);
  const PhiGrid e = phi_grid(WindowSet::empty(kBin), stat, 1, 1, {0, -1});
  for (const PhiGridRow& r : e.rows) CHECK(r.certificate.value == 0);
  const PhiGrid d = phi_grid(lit("cyl(0,[0])"), dirac(), 1, 0, {0, -1});
  for (const PhiGridRow& r : d.rows) CHECK(r.certificate.value == 0);
  CHECK(anchored_depth(1, 0, -2) == 3);
}

TEST_CASE("brute force agrees on the examples") {
  CHECK(brute_force_phi(WindowSet::full(kBin), dirac(), {1, 0, 0}) == 0);
  CHECK(brute_force_phi(WindowSet::empty(kBin), dirac(), {1, 0, 0}) == 0);
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  CHECK(brute_force_phi(WindowSet::full(kBin), uni, {2, 0, 0}) == Rational(13, 16));
  CHECK(brute_force_phi(WindowSet::full(kBin), uni, {2, 0, 0}, CoverClass::Overlapping) == Rational(13, 16));
}

TEST_CASE("a child outside the budget does not make the problem infeasible") {
  // The cheap phi cover takes the level-0 cells whole; their children are over budget on their own.
  const CylinderMeasure d = dirac();
  const WindowSet q = lit("cyl(-1,[0,1])");
  const TruncationConfig cfg{1, 2, 0};
  const Rational budget = phi_truncated(q, d, cfg).value + Rational(1, 8);
  const auto dp = solve_cover_problem(truncated_shape(kBin, cfg), q, {cesaro(d, 1), d}, {budget});
  const auto en = enumerate_disjoint_covers(truncated_shape(kBin, cfg), q, {cesaro(d, 1), d}, {budget});
  REQUIRE(dp.has_value());
  REQUIRE(en.has_value());
  CHECK(dp->costs[0] == en->costs[0]);
  CHECK(dp->costs[0] == Rational(1, 2));
}

TEST_CASE("front overflow falls back to enumeration on small classes") {
  const CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  const WindowSet q = lit("union(cyl(-1,[0,1]),cyl(1,[1]))");
  const TruncationConfig cfg{1, 1, 0};
  const std::vector<CylinderMeasure> ms{dirac(), uni};
  const std::vector<Rational> bounds{Rational(1)};
  EngineLimits tight;
  tight.dp.max_front = 1;
  const auto a = solve_cover_problem(truncated_shape(kBin, cfg), q, ms, bounds);
  const auto c = solve_cover_problem(truncated_shape(kBin, cfg), q, ms, bounds, tight);
  REQUIRE(a.has_value());
  REQUIRE(c.has_value());
  CHECK(a->costs[0] == c->costs[0]);
  tight.fallback_max_cells = 0;
  CHECK_THROWS_AS(solve_cover_problem(truncated_shape(kBin, cfg), q, ms, bounds, tight), Error);
}

TEST_CASE("configuration and size errors") {
  const CylinderMeasure b = CylinderMeasure::bernoulli({Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(phi_truncated(WindowSet::full(kBin), b, {-1, 0, 0}), Error);
  CHECK_THROWS_AS(phi_truncated(WindowSet::full(kBin), b, {1, 0, 1}), Error);
  try {
    phi_truncated(WindowSet::full(kBin), b, {25, 3, 0});
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.is_resource_cap());
  }
  const CylinderMeasure s = CylinderMeasure::signed_diff(b, Rational(1), b);
  CHECK_THROWS_AS(phi_truncated(WindowSet::full(kBin), s, {1, 0, 0}), Error);
}
