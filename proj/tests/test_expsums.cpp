#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "overrank/error.hpp"
#include "overrank/expsums/expsums.hpp"

using namespace overrank;
using namespace overrank::expsums;
using arith::make_fraction;

namespace {

using cld = std::complex<long double>;
constexpr long double kPi = std::numbers::pi_v<long double>;

long double to_ld(const Fraction& f) { return static_cast<long double>(f.get_d()); }

// e^{pi i t}
cld unit(long double t) { return std::polar<long double>(1.0L, kPi * t); }

// Brute force: the even h' in (-k, k] by scan, Dedekind sums by the defining sum.
std::int64_t even_inverse_scan(std::int64_t h, std::int64_t k) {
  if (k == 1) return 0;
  for (std::int64_t x = -k + 1; x <= k; ++x) {
    if (x % 2 == 0 && ((h * x + 1) % k + k) % k == 0) return x;
  }
  return 0;
}

long double direct_s(std::int64_t h, std::int64_t k) { return to_ld(arith::dedekind_sum_direct(h, k)); }

cld oracle_B(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t m) {
  const std::int64_t k1 = k / std::gcd(c, k);
  cld sum = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const std::int64_t hp = even_inverse_scan(h, k);
    const long double th = 2 * direct_s(h, k) - direct_s((2 * h) % k, k) -
                           2.0L * static_cast<long double>(hp * a * a * k1) / c +
                           2.0L * static_cast<long double>(n * h + m * hp) / k;
    sum += unit(th) / std::sin(kPi * a * hp / c);
  }
  return -std::tan(kPi * a / c) / std::sqrt(2.0L) * sum;
}

cld oracle_D(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t twice_m, int sign) {
  cld sum = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    if (std::gcd(h, k) != 1) continue;
    const std::int64_t hp = even_inverse_scan(h, k);
    const long double th = 2 * direct_s(h, k) - direct_s((2 * h) % k, k) + 2.0L * static_cast<long double>(n * h) / k +
                           static_cast<long double>(twice_m * hp) / k;
    sum += unit(th);
  }
  return static_cast<long double>(sign) * std::tan(kPi * a / c) / std::sqrt(2.0L) * sum;
}

cld to_cld(const ComplexVal& z) { return {z.re().to_double(), z.im().to_double()}; }

double dist(const ComplexVal& a, const ComplexVal& b) { return (a - b).abs().to_double(); }

}  // namespace

TEST_SUITE("expsums") {
  TEST_CASE("group data") {
    const GroupData g = group_data(1, 10, 1);
    CHECK(g.k1 == 1);
    CHECK(g.c1 == 10);
    CHECK(g.ell == 1);
    const GroupData h = group_data(1, 3, 3);
    CHECK(h.d == 3);
    CHECK(h.k1 == 1);
    CHECK(h.c1 == 1);
    CHECK(h.ell == 0);
    const GroupData w = group_data(3, 10, 3);
    CHECK(w.k1 == 3);
    CHECK(w.c1 == 10);
    CHECK(w.ell == 9);
    CHECK(w.k_tilde == 1);
    CHECK_THROWS_AS(group_data(2, 10, 3), PreconditionError);
  }

  TEST_CASE("s and t") {
    CHECK(s_func(1, 4) == 0);
    CHECK(s_func(1, 2) == 1);
    CHECK(t_func(1, 4) == 1);
    CHECK(s_func(9, 10) == 2);
    CHECK(t_func(9, 10) == 3);
    CHECK(s_func(3, 4) == 1);
    CHECK_THROWS_AS(t_func(2, 4), PreconditionError);
    CHECK_THROWS_AS(s_func(0, 4), PreconditionError);
  }

  TEST_CASE("delta examples") {
    CHECK(delta_terms(1, 10, 1) == std::vector<DeltaTerm>{{0, Fraction(9, 400), 0, false}});
    CHECK(delta_terms(1, 6, 1) == std::vector<DeltaTerm>{{0, Fraction(1, 144), 0, false}});
    CHECK(delta_terms(3, 10, 3) == std::vector<DeltaTerm>{{0, Fraction(9, 400), -1, false}});
    CHECK(delta_terms(1, 3, 1).empty());
    CHECK(delta_terms(1, 3, 5).empty());
    CHECK_THROWS_AS(delta_terms(1, 3, 3), PreconditionError);
    CHECK_THROWS_AS(delta_terms(1, 10, 2), PreconditionError);
  }

  TEST_CASE("delta terms bounded and complete") {
    for (std::int64_t c = 3; c <= 30; ++c) {
      for (std::int64_t a = 1; a < c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        for (std::int64_t k = 1; k <= 45; k += 2) {
          if (k % c == 0) continue;
          for (bool primed : {false, true}) {
            const auto terms = delta_terms(a, c, k, primed);
            for (const auto& t : terms) {
              REQUIRE(t.delta > 0);
              if (!primed) REQUIRE(t.delta <= Fraction(1, 16));
            }
            // the primed table only enters at c1 = 4, where it never fires
            if (primed && group_data(a, c, k).c1 == 4) REQUIRE(terms.empty());
            // brute-force scan of r in [0, 4c] against the same closed form
            const GroupData g = group_data(a, c, k);
            const Fraction x = g.ratio();
            const int s = s_func(g.ell, g.c1);
            std::vector<std::int64_t> want;
            if (primed || s != 1) {
              for (std::int64_t r = 0; r <= 4 * c; ++r) {
                Fraction v;
                if (s == 0) {
                  v = Fraction(1, 16) - (primed ? 3 : 1) * x / 2 + x * x - r * x;
                } else if (s == 1) {
                  v = Fraction(1, 16) - 3 * x / 2 + x * x + Fraction(1, 2) - r * (1 - x);
                } else if (!primed) {
                  v = Fraction(1, 16) - 3 * x / 2 + x * x + Fraction(1, 2) - r * (1 - x);
                } else {
                  v = Fraction(1, 16) - 5 * x / 2 + x * x + Fraction(3, 2) - r * (1 - x);
                }
                if (v > 0) want.push_back(r);
              }
            }
            std::vector<std::int64_t> got;
            for (const auto& t : terms) got.push_back(t.r);
            REQUIRE(got == want);
          }
        }
      }
    }
  }

  TEST_CASE("D for a=1, c=10, k=1") {
    const num::Precision prec = 128;
    const num::Real want = num::sin_pi(Fraction(1, 10), prec) / num::cos_pi(Fraction(1, 10), prec) /
                           num::sqrt(num::Real(2L, prec));
    for (std::int64_t n : {-7, -5, -1, 0, 3, 12}) {
      const ComplexVal d = kloosterman_D(1, 10, 1, n, 0);
      CHECK(num::abs(d.re() - want).to_double() < 1e-30);
      CHECK(num::abs(d.im()).to_double() < 1e-30);
    }
    CHECK(want.to_string(14).rfind("2.2975292054736", 0) == 0);
  }

  TEST_CASE("D middle range rejected") {
    // (1,3,k=1): ell/c1 = 1/3
    CHECK_THROWS_AS(kloosterman_D(1, 3, 1, 0, 0), PreconditionError);
  }

  TEST_CASE("D against independent oracle and trivial bound") {
    const num::Precision prec = 96;
    struct Case {
      std::int64_t a, c, k;
    };
    for (Case cs : {Case{1, 10, 1}, Case{1, 10, 9}, Case{3, 10, 3}, Case{1, 6, 1}, Case{1, 6, 5}, Case{5, 6, 7},
                    Case{9, 10, 11}, Case{1, 10, 21}}) {
      const GroupData g = group_data(cs.a, cs.c, cs.k);
      const int s = s_func(g.ell, g.c1);
      if (s == 1) continue;
      const double bound = std::tan(std::numbers::pi * cs.a / cs.c) * expsums::reduced_residues(cs.k).size() /
                           std::sqrt(2.0);
      for (std::int64_t n : {-4, -1, 0, 5}) {
        for (std::int64_t tm : {0, -1, 3}) {
          const ComplexVal d = kloosterman_D(cs.a, cs.c, cs.k, n, tm, {prec, 0});
          const cld o = oracle_D(cs.a, cs.c, cs.k, n, tm, s == 2 ? -1 : 1);
          CHECK(std::abs(to_cld(d) - o) < 1e-12L);
          CHECK(d.abs().to_double() <= std::abs(bound) + 1e-12);
        }
      }
    }
  }

  TEST_CASE("B for a=1, c=3, k=3") {
    // these follow the definition with S(1,3) = 1/18; see the README
    const double r2 = std::sqrt(2.0);
    const double want[3] = {-r2, -r2, 2 * r2};
    for (std::int64_t n = 0; n <= 8; ++n) {
      const ComplexVal b = kloosterman_B(1, 3, 3, -n, 0);
      CHECK(std::abs(b.re().to_double()) < 1e-30);
      CHECK(b.im().to_double() == doctest::Approx(want[n % 3]).epsilon(1e-15));
    }
  }

  TEST_CASE("B against independent oracle, purely imaginary at m = 0") {
    struct Case {
      std::int64_t a, c, k;
    };
    for (Case cs : {Case{1, 3, 3}, Case{2, 3, 9}, Case{1, 3, 15}, Case{1, 5, 5}, Case{2, 5, 15}, Case{1, 7, 7},
                    Case{3, 7, 21}, Case{4, 9, 9}}) {
      for (std::int64_t n : {0, -1, -2, -7, 4}) {
        const ComplexVal b = kloosterman_B(cs.a, cs.c, cs.k, n, 0);
        CHECK(std::abs(to_cld(b) - oracle_B(cs.a, cs.c, cs.k, n, 0)) < 1e-12L);
        CHECK(num::abs(b.re()).to_double() < 1e-25 * (1 + b.abs().to_double()));
      }
      CHECK(std::abs(to_cld(kloosterman_B(cs.a, cs.c, cs.k, -3, 2)) - oracle_B(cs.a, cs.c, cs.k, -3, 2)) < 1e-12L);
    }
  }

  TEST_CASE("shifting h' by 2k leaves B and D unchanged") {
    for (std::int64_t shift : {-2, -1, 1, 3}) {
      const SumOptions o{128, shift};
      CHECK(dist(kloosterman_B(1, 3, 9, -4, 0), kloosterman_B(1, 3, 9, -4, 0, o)) < 1e-30);
      CHECK(dist(kloosterman_B(2, 5, 15, -2, 1), kloosterman_B(2, 5, 15, -2, 1, o)) < 1e-30);
      CHECK(dist(kloosterman_D(1, 10, 9, -5, 0), kloosterman_D(1, 10, 9, -5, 0, o)) < 1e-30);
      CHECK(dist(kloosterman_D(3, 10, 3, -1, -1), kloosterman_D(3, 10, 3, -1, -1, o)) < 1e-30);
      CHECK(dist(kloosterman_D(1, 6, 11, -9, 2), kloosterman_D(1, 6, 11, -9, 2, o)) < 1e-30);
    }
  }

  TEST_CASE("A sums") {
    const ComplexVal a136 = kloosterman_A(1, 3, 6, 0, 0);
    const double bound = std::tan(std::numbers::pi / 3) * (1 / std::tan(std::numbers::pi / 3)) * 2;
    CHECK(a136.abs().to_double() <= bound + 1e-12);
    // depends on n only mod k
    CHECK(dist(kloosterman_A(1, 4, 4, -1, 0), kloosterman_A(1, 4, 4, 3, 0)) < 1e-30);
    CHECK(dist(kloosterman_A(1, 6, 12, 5, 0), kloosterman_A(1, 6, 12, 5 - 24, 0)) < 1e-30);
    // doubled precision self-oracle
    const ComplexVal lo = kloosterman_A(1, 4, 4, -1, 0, {128, 0});
    const ComplexVal hi = kloosterman_A(1, 4, 4, -1, 0, {256, 0});
    CHECK(dist(lo, hi) < 1e-19);
    CHECK_THROWS_AS(kloosterman_A(1, 3, 3, 0, 0), PreconditionError);
    CHECK_THROWS_AS(kloosterman_A(1, 4, 6, 0, 0), PreconditionError);
  }

  TEST_CASE("doubled precision agrees") {
    const ComplexVal b1 = kloosterman_B(1, 3, 21, -5, 0, {128, 0});
    const ComplexVal b2 = kloosterman_B(1, 3, 21, -5, 0, {256, 0});
    CHECK(dist(b1, b2) < 1e-19);
    const ComplexVal d1 = kloosterman_D(1, 10, 19, -5, 0, {128, 0});
    const ComplexVal d2 = kloosterman_D(1, 10, 19, -5, 0, {256, 0});
    CHECK(dist(d1, d2) < 1e-19);
  }

  TEST_CASE("reduced residues") {
    CHECK(reduced_residues(1) == std::vector<std::int64_t>{0});
    CHECK(reduced_residues(10) == std::vector<std::int64_t>{1, 3, 7, 9});
  }
}
