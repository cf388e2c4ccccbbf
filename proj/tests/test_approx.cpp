#include <doctest.h>

#include "ddm/approx.hpp"
#include "ddm/errors.hpp"
#include "ddm/examples.hpp"

using namespace ddm;

namespace {

const Alphabet kBin{2};
const RationalMatrix kChain{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};

WindowSet lit(const char* text) { return parse_window_set(kBin, text); }

struct Fixture {
  CylinderMeasure stat = CylinderMeasure::stationary_markov(kChain);
  CylinderMeasure uni = CylinderMeasure::markov({Rational(1, 2), Rational(1, 2)}, kChain);
  CylinderMeasure coin = CylinderMeasure::bernoulli({Rational(1, 3), Rational(2, 3)});
  WindowSet q = lit("union(cyl(-1,[0,1]),cyl(1,[1]))");
  TruncationConfig cfg{1, 2, 0};
};

}  // namespace

// Values below are frozen from tests/oracle/truncated_oracle.py.

TEST_CASE_FIXTURE(Fixture, "budgeted psi") {
  const Rational base = phi_truncated(q, stat, cfg).value;
  REQUIRE(base == Rational(17, 24));
  for (const Rational& eps : {Rational(1), Rational(1, 8)}) {
    const auto cert = psi_budgeted({q, coin, {{stat, base + eps}}, cfg});
    REQUIRE(cert.has_value());
    CHECK(cert->value == Rational(20, 27));
    CHECK(is_valid_cover(q, cert->witness));
    CHECK(cover_cost(cert->witness, coin) == cert->value);
    REQUIRE(cert->constraint_costs.size() == 1);
    CHECK(cert->constraint_costs[0] == cover_cost(cert->witness, stat));
    CHECK(cert->constraint_costs[0] < base + eps);
  }
  CHECK_FALSE(psi_budgeted({q, coin, {{stat, base}}, cfg}).has_value());
}

TEST_CASE_FIXTURE(Fixture, "slack budget gives the unconstrained minimum") {
  const auto cert = psi_budgeted({q, uni, {{stat, Rational(100)}}, cfg});
  REQUIRE(cert.has_value());
  CHECK(cert->value == phi_truncated(q, uni, cfg).value);
}

TEST_CASE_FIXTURE(Fixture, "psi with phi as objective stays within eps of Phi") {
  const Rational base = phi_truncated(q, uni, cfg).value;
  const auto cert = psi_budgeted({q, uni, {{uni, base + Rational(1, 4)}}, cfg});
  REQUIRE(cert.has_value());
  CHECK(cert->value >= base);
  CHECK(cert->value < base + Rational(1, 4));
}

TEST_CASE_FIXTURE(Fixture, "psi grid") {
  const std::vector<Rational> eps{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  const PsiGrid g = psi_eps_grid(q, coin, stat, eps, {0, -1, -2}, 1, 2);
  CHECK(g.monotone_in_eps);
  CHECK(g.monotone_in_shift);
  for (const auto& row : g.cells)
    for (const auto& cell : row) {
      REQUIRE(cell.has_value());
      CHECK(cell->value == Rational(20, 27));
    }
  CHECK_THROWS_AS(psi_eps_grid(q, coin, stat, {Rational(1, 2), Rational(1)}, {0}, 1, 2), Error);
  CHECK_THROWS_AS(psi_eps_grid(q, coin, stat, eps, {-1, 0}, 1, 2), Error);
}

TEST_CASE_FIXTURE(Fixture, "psi chain and its signed version") {
  const ChainResult chain = psi_chain(q, stat, {coin, uni}, Rational(1, 4), cfg);
  REQUIRE(chain.feasible());
  REQUIRE(chain.levels.size() == 2);
  CHECK(chain.phi_reference == Rational(17, 24));
  CHECK(chain.levels[0].certificate->value == Rational(20, 27));
  CHECK(chain.levels[1].certificate->value == Rational(5, 8));
  CHECK(chain.levels[1].problem.constraints.size() == 2);

  const ChainResult zero = psi_signed(q, stat, {coin, uni}, {Rational(0), Rational(0)}, Rational(1, 4), cfg);
  REQUIRE(zero.levels.size() == 2);
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(zero.levels[k].certificate->value == chain.levels[k].certificate->value);
    CHECK(cover_union(zero.levels[k].certificate->witness, kBin) ==
          cover_union(chain.levels[k].certificate->witness, kBin));
  }

  const ChainResult s = psi_signed(q, stat, {coin, uni}, {Rational(1, 2), Rational(1)}, Rational(1, 4), cfg);
  REQUIRE(s.feasible());
  CHECK(s.levels[0].certificate->value == Rational(245, 648));
  CHECK(s.levels[1].certificate->value == Rational(-1, 6));
}

TEST_CASE_FIXTURE(Fixture, "chain arguments") {
  CHECK_THROWS_AS(psi_chain(q, stat, {coin, uni, coin, uni}, Rational(1, 4), cfg), Error);
  CHECK_THROWS_AS(psi_chain(q, stat, {coin}, Rational(0), cfg), Error);
  CHECK_THROWS_AS(psi_signed(q, stat, {coin}, {Rational(1), Rational(1)}, Rational(1, 4), cfg), Error);
  try {
    psi_chain(q, stat, {coin, uni, coin, uni}, Rational(1, 4), cfg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionCap);
  }
}

TEST_CASE("infeasible chain levels are reported") {
  const CylinderMeasure d = CylinderMeasure::dirac(kBin, alternating_point());
  // Every cover of X has Dirac cost 0 or 1; a budget on d forces 0 and the chain stays feasible.
  const ChainResult r = psi_chain(WindowSet::full(kBin), d, {d}, Rational(1, 2), {1, 0, 0});
  CHECK(r.feasible());
  CHECK(r.levels[0].certificate->value == 0);
}
