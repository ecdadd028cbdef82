#include <doctest.h>

#include "overrank/asymptotic/asymptotic.hpp"
#include "overrank/bounds/bounds.hpp"
#include "overrank/error.hpp"
#include "overrank/qseries/series.hpp"
#include "support.hpp"

using namespace overrank;
using namespace overrank::bounds;

TEST_SUITE("bounds") {
  TEST_CASE("coefficient sums") {
    const num::Real one = coeff_sum(Fraction(1));
    // the quoted figure 1.17944 rounds the true sum 1.1794444... down
    CHECK(one.to_double() > 1.179);
    CHECK(one.to_double() < 1.179445);
    const num::Real fiftieth = coeff_sum(Fraction(1, 50));
    CHECK(fiftieth.to_double() > 3.9e19);
    CHECK(fiftieth.to_double() <= 4.01014e19);
    // for a large scale only the r = 1 term, e^{pi - pi s}, survives
    const num::Real big = coeff_sum(Fraction(100));
    const num::Real first = num::exp(num::Real::pi(128) * num::Real(-99L, 128));
    CHECK(num::abs(big / first - num::Real(1L, 128)).to_double() < 1e-30);
    // partial sums by hand
    num::Real partial(0L, 256);
    for (long r = 1; r <= 60; ++r) {
      partial += num::exp(num::Real::pi(256) * (num::sqrt(num::Real(r, 256)) - num::Real(r, 256)));
    }
    CHECK(num::abs(coeff_sum(Fraction(1), 256) - partial).to_double() < 1e-60);
    CHECK_THROWS_AS(coeff_sum(Fraction(0)), PreconditionError);
  }

  TEST_CASE("dominance at sample points") {
    CHECK_FALSE(bound_report(100).dominated);
    CHECK(bound_report(1030).dominated);
    const BoundReport r = bound_report(400);
    REQUIRE(r.sides.size() == 2);
    for (const auto& side : r.sides) {
      REQUIRE(side.components.size() == component_names().size());
      for (std::size_t i = 0; i < side.components.size(); ++i) {
        CHECK(side.components[i].name == component_names()[i]);
        CHECK(side.components[i].value.sign() >= 0);
      }
    }
    CHECK(bound_report(400, Family::C6).sides.size() == 1);
  }

  TEST_CASE("main term is the leading estimate term") {
    const BoundReport r = bound_report(400);
    const auto mt = asymptotic::main_term(1, 10, 400);
    REQUIRE(mt.has_value());
    const num::Real rel = num::abs(r.main / mt->contribution.re() - num::Real(1L, r.main.precision()));
    CHECK(rel.to_double() < 1e-12);
  }

  TEST_CASE("components shrink relative to main for large n") {
    BoundReport prev = bound_report(10000);
    for (std::int64_t n : {20000, 40000, 80000}) {
      const BoundReport cur = bound_report(n);
      CHECK(cur.main > prev.main);
      CHECK(cur.dominated);
      for (std::size_t s = 0; s < cur.sides.size(); ++s) {
        for (std::size_t i = 0; i < cur.sides[s].components.size(); ++i) {
          CAPTURE(cur.sides[s].components[i].name);
          CHECK(cur.sides[s].components[i].value.sign() >= 0);
          CHECK(cur.sides[s].components[i].value / cur.main <= prev.sides[s].components[i].value / prev.main);
        }
      }
      prev = cur;
    }
  }

  TEST_CASE("crossover") {
    const CrossoverResult r = crossover();
    REQUIRE(r.found);
    CHECK(r.n0 >= 980);
    CHECK(r.n0 <= 1080);
    CHECK(r.checked_to == 4 * r.n0);
    CHECK_FALSE(bound_report(r.n0 - 1).dominated);
    CHECK_FALSE(r.assembly.empty());
    const CrossoverResult capped = crossover(Family::C10, 128, 500);
    CHECK_FALSE(capped.found);
  }

  TEST_CASE("generating-function identities") {
    const auto& t = testing::shared_table(200);
    for (std::int64_t a : {1, 3, 7, 9}) CHECK(zeta_relation_10(a, 200, t));
    for (std::int64_t a : {1, 5}) CHECK(zeta_relation_6(a, 200, t));
    CHECK(mao_decomposition(200, t));
    CHECK_THROWS_AS(zeta_relation_10(5, 200, t), PreconditionError);
  }

  TEST_CASE("inequality catalogue") {
    CHECK(find_inequality("eq:0312prime").id == "eq:0312'");
    CHECK(find_inequality("eq:0312″").id == "eq:0312''");
    CHECK(find_inequality("eq:0312''").relations.front() == Relation::LE);
    CHECK_THROWS_AS(find_inequality("eq:9999"), PreconditionError);
    for (const auto& spec : inequality_specs()) {
      CHECK(spec.relations.size() + 1 == spec.terms.size());
      CHECK_FALSE(spec.statement().empty());
    }
  }

  TEST_CASE("all inequalities hold on [0, 1500]") {
    const auto& t = testing::shared_table(1500);
    for (const auto& spec : inequality_specs()) {
      CAPTURE(spec.id);
      const InequalityReport r = verify_inequality(spec.id, 0, 1500, t);
      CHECK(r.passed());
      CHECK(r.checked > 0);
    }
  }

  TEST_CASE("threshold of the filtered chains") {
    const auto& t = testing::shared_table(100);
    // below index 11 the filtered chains do fail somewhere
    for (const char* id : {"SolvedWei1", "SolvedWei2", "SolvedWei3"}) {
      const InequalitySpec& spec = find_inequality(id);
      bool any_fail = false;
      for (std::int64_t j = 0; j < spec.min_index; ++j) {
        const std::int64_t n = 3 * j + *spec.residue3;
        if (!chain_holds(spec, n, t)) any_fail = true;
      }
      CHECK(any_fail);
    }
  }

  TEST_CASE("equality chain and threads") {
    const auto& t = testing::shared_table(400);
    VerifyOptions opts;
    opts.threads = 3;
    const InequalityReport a = verify_inequality("SolvedWei33", 0, 400, t, opts);
    const InequalityReport b = verify_inequality("SolvedWei33", 0, 400, t);
    CHECK(a.passed());
    CHECK(a.violations == b.violations);
    CHECK(a.checked == b.checked);
  }

  TEST_CASE("O(-1; q) coefficients stay small") {
    // independent series: pbar(q) (1 + 8 sum_{j>=1} (-1)^j q^{j^2+j} / (1+q^j)^2)
    const std::int64_t n_max = 2000;
    qseries::IntSeries inner = qseries::IntSeries::one(n_max);
    for (std::int64_t j = 1; j * j + j <= n_max; ++j) {
      // q^{j^2+j} / (1+q^j)^2 = sum_{i>=0} (-1)^i (i+1) q^{j^2+j+ij}
      for (std::int64_t i = 0, e = j * j + j; e <= n_max; ++i, e += j) {
        mpz_class term = 8 * (i + 1);
        if ((i + j) % 2) term = -term;
        inner[e] += term;
      }
    }
    const qseries::IntSeries om1 = qseries::pbar_series(n_max).multiply(inner);
    const auto& t = testing::shared_table(n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      mpz_class s = 0;
      for (std::int64_t m = -n; m <= n; ++m) s += (m % 2 == 0 ? 1 : -1) * t.count(m, n);
      REQUIRE(s == om1[n]);
      REQUIRE(abs(s) <= 3 * n);
    }
  }
}
