#include <doctest.h>

#include <cmath>

#include "overrank/asymptotic/asymptotic.hpp"
#include "overrank/error.hpp"
#include "overrank/qseries/group_ring.hpp"
#include "overrank/qseries/series.hpp"
#include "support.hpp"

using namespace overrank;
using namespace overrank::asymptotic;

namespace {

double rel_error(std::int64_t a, std::int64_t c, std::int64_t n) {
  const auto& t = testing::shared_table(n);
  const Estimate e = estimate_A(a, c, n);
  const qseries::ZetaValue z = qseries::zeta_eval(a, c, n, t, e.precision);
  return num::abs(e.value.re() / z.value - num::Real(1L, e.precision)).to_double();
}

}  // namespace

TEST_SUITE("asymptotic") {
  TEST_CASE("empty estimate") {
    const Estimate e = estimate_A(1, 3, 4);
    CHECK(e.terms.empty());
    CHECK(e.value.abs().is_zero());
    CHECK(e.k_max == 2);
    CHECK_FALSE(main_term(1, 3, 4).has_value());
  }

  TEST_CASE("estimate structure") {
    for (std::int64_t n : {1, 15, 16, 17, 400, 999}) {
      const Estimate e = estimate_A(1, 10, n);
      CHECK(e.k_max * e.k_max <= n);
      CHECK((e.k_max + 1) * (e.k_max + 1) > n);
      expsums::ComplexVal sum(e.precision);
      for (const auto& term : e.terms) {
        CHECK(term.k <= e.k_max);
        CHECK(term.k % 2 == 1);
        sum += term.contribution;
      }
      CHECK(sum.re() == e.value.re());
      CHECK(sum.im() == e.value.im());
    }
  }

  TEST_CASE("leading term for a=1, c=10") {
    const std::int64_t n = 10000;
    const auto mt = main_term(1, 10, n);
    REQUIRE(mt.has_value());
    CHECK(mt->kind == TermKind::D);
    CHECK(mt->k == 1);
    CHECK(mt->r == 0);
    const num::Precision p = mt->contribution.precision();
    const num::Real sq = num::sqrt(num::Real(n, p));
    const num::Real want = num::Real(2L, p) / sq * num::sin_pi(arith::Fraction(1, 10), p) /
                           num::cos_pi(arith::Fraction(1, 10), p) *
                           num::sinh(num::Real::pi(p) * sq * num::Real(arith::Fraction(3, 5), p));
    CHECK(num::abs(mt->contribution.re() / want - num::Real(1L, p)).to_double() < 1e-30);
  }

  TEST_CASE("leading term for a=1, c=3") {
    const auto mt = main_term(1, 3, 10000);
    REQUIRE(mt.has_value());
    CHECK(mt->kind == TermKind::B);
    CHECK(mt->k == 3);
  }

  TEST_CASE("doubled precision") {
    const Estimate lo = estimate_A(3, 10, 900, 128);
    const Estimate hi = estimate_A(3, 10, 900, 256);
    const num::Real d = num::abs(lo.value.re() - hi.value.re()) / num::abs(hi.value.re());
    CHECK(d.to_double() < 1e-19);
  }

  TEST_CASE("estimate tracks the exact value") {
    CHECK(rel_error(1, 10, 400) < 1e-12);
    CHECK(rel_error(1, 3, 900) < 1e-10);
    CHECK(rel_error(1, 6, 900) < 0.05);
    CHECK(rel_error(1, 10, 1600) < rel_error(1, 10, 900));
    CHECK(rel_error(1, 3, 1600) < rel_error(1, 3, 900));
  }

  TEST_CASE("zuckerman series") {
    CHECK(zuckerman_pbar(4, 15).round_to_integer() == 14);
    CHECK(zuckerman_pbar(1, 15).round_to_integer() == 2);
    CHECK(default_kcap(100) == 50);
    CHECK(default_kcap(101) == 55);
    const auto p = qseries::pbar_series(120);
    CHECK(zuckerman_pbar(100, 35).round_to_integer() == p[100]);
    for (std::int64_t n = 1; n <= 120; n += 7) {
      const num::Real z = zuckerman_pbar(n, default_kcap(n));
      CHECK(z.round_to_integer() == p[n]);
      // raising the cutoff moves the value by less than a quarter
      const num::Real z2 = zuckerman_pbar(n, 2 * default_kcap(n));
      CHECK(num::abs(z - z2).to_double() < 0.25);
    }
    CHECK_THROWS_AS(zuckerman_pbar(0, 15), PreconditionError);
  }

  TEST_CASE("equidistribution") {
    const auto& t = testing::shared_table(2000);
    const auto at0 = equidistribution_report(5, 0, t);
    REQUIRE(at0.size() == 5);
    CHECK(at0[0].ratio == 5);
    for (std::size_t i = 1; i < at0.size(); ++i) CHECK(at0[i].ratio == 0);
    for (const auto& r : equidistribution_report(3, 2000, t)) CHECK(std::abs(r.value - 1) < 0.02);
    // deviations are far below double resolution here, so compare exactly
    arith::Fraction worst1000 = 0;
    arith::Fraction worst2000 = 0;
    for (const auto& r : equidistribution_report(6, 1000, t)) worst1000 = std::max<arith::Fraction>(worst1000, abs(r.ratio - 1));
    for (const auto& r : equidistribution_report(6, 2000, t)) worst2000 = std::max<arith::Fraction>(worst2000, abs(r.ratio - 1));
    CHECK(worst1000 > 0);
    CHECK(worst2000 < worst1000);
  }
}
