#include "overrank/expsums/expsums.hpp"

#include "overrank/error.hpp"

namespace overrank::expsums {

namespace {

constexpr num::Precision kGuardBits = 32;

void require_pair(std::int64_t a, std::int64_t c) {
  detail::require(c >= 2 && a > 0 && a < c, "need 0 < a < c");
  detail::require(arith::gcd(a, c) == 1, "need gcd(a,c) = 1");
}

Fraction frac(std::int64_t num, std::int64_t den) { return arith::make_fraction(num, den); }

num::Real tan_pi(const Fraction& t, num::Precision prec) { return num::sin_pi(t, prec) / num::cos_pi(t, prec); }

// tan(pi a/c) / sqrt 2
num::Real tan_over_sqrt2(std::int64_t a, std::int64_t c, num::Precision prec) {
  return tan_pi(frac(a, c), prec) / num::sqrt(num::Real(2L, prec));
}

ComplexVal finish(ComplexVal sum, const num::Real& scale, num::Precision prec) {
  sum *= scale;
  num::Real re = sum.re();
  num::Real im = sum.im();
  re.set_precision(prec);
  im.set_precision(prec);
  return ComplexVal(re, im);
}

}  // namespace

std::vector<std::int64_t> reduced_residues(std::int64_t k) {
  detail::require(k >= 1, "k must be >= 1");
  if (k == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t h = 1; h < k; ++h) {
    if (arith::gcd(h, k) == 1) out.push_back(h);
  }
  return out;
}

GroupData group_data(std::int64_t a, std::int64_t c, std::int64_t k) {
  require_pair(a, c);
  detail::require(k >= 1, "group_data: k must be >= 1");
  const std::int64_t d = arith::gcd(c, k);
  const std::int64_t k1 = k / d;
  const std::int64_t c1 = c / d;
  return GroupData{static_cast<int>(k % 2), d, k1, c1, arith::mod_floor(a * k1, c1)};
}

int s_func(std::int64_t b, std::int64_t c) {
  detail::require(c >= 1 && b > 0 && b < c, "s_func: need 0 < b < c");
  const Fraction x = frac(b, c);
  if (x <= Fraction(1, 4)) return 0;
  if (x <= Fraction(3, 4)) return 1;
  return 2;
}

int t_func(std::int64_t b, std::int64_t c) {
  detail::require(c >= 1 && b > 0 && b < c, "t_func: need 0 < b < c");
  const Fraction x = frac(b, c);
  detail::require(x != Fraction(1, 2), "t_func: undefined at b/c = 1/2");
  return x < Fraction(1, 2) ? 1 : 3;
}

std::vector<DeltaTerm> delta_terms(std::int64_t a, std::int64_t c, std::int64_t k, bool primed) {
  const GroupData g = group_data(a, c, k);
  detail::require(g.c1 > 1, "delta_terms: c must not divide k");
  detail::require(k % 2 == 1, "delta_terms: k must be odd");
  const Fraction x = g.ratio();
  const std::int64_t j = (a * g.k1 - g.ell) / g.c1;
  const int s = s_func(g.ell, g.c1);
  if (!primed && s == 1) return {};

  const Fraction sixteenth(1, 16);
  auto delta_at = [&](std::int64_t r) -> Fraction {
    const Fraction rr = arith::make_fraction(r);
    Fraction v;
    if (!primed) {
      if (s == 0) {
        v = sixteenth - x / 2 + x * x - rr * x;
      } else {
        v = sixteenth - 3 * x / 2 + x * x + Fraction(1, 2) - rr * (1 - x);
      }
    } else if (s == 0) {
      v = sixteenth - 3 * x / 2 + x * x - rr * x;
    } else if (s == 1) {
      v = sixteenth - 3 * x / 2 + x * x + Fraction(1, 2) - rr * (1 - x);
    } else {
      v = sixteenth - 5 * x / 2 + x * x + Fraction(3, 2) - rr * (1 - x);
    }
    v.canonicalize();
    return v;
  };
  auto twice_m_at = [&](std::int64_t r) -> std::int64_t {
    if (!primed) {
      return s == 0 ? -(2 * j * j + j + 2 * r * j) : -(2 * j * j + 3 * j - 2 * r * j - (2 * r - 1));
    }
    if (s == 0) return -(2 * j * j + 3 * j + 2 * r * j);
    if (s == 1) return -(2 * j * j + 3 * j - 2 * r * j - (2 * r - 1));
    return -(2 * j * j + 5 * j - 2 * r * j - (2 * r - 3));
  };

  // delta decreases in r with slope >= 1/c1, and delta(0) < 1, so r <= c1 bounds the search
  const std::int64_t r_max = g.c1;
  std::vector<DeltaTerm> out;
  for (std::int64_t r = 0; r <= r_max; ++r) {
    Fraction dl = delta_at(r);
    if (sgn(dl) > 0) out.push_back(DeltaTerm{r, std::move(dl), twice_m_at(r), primed});
  }
  if (sgn(delta_at(r_max + 1)) > 0) throw ConsistencyError("delta_terms: search bound too small");
  return out;
}

ComplexVal kloosterman_B(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t m,
                         const SumOptions& options) {
  require_pair(a, c);
  detail::require(k >= 1 && k % 2 == 1, "kloosterman_B: k must be odd");
  detail::require(k % c == 0, "kloosterman_B: c must divide k");
  const GroupData g = group_data(a, c, k);
  const num::Precision wp = options.prec + kGuardBits;
  ComplexVal sum(wp);
  for (std::int64_t h : reduced_residues(k)) {
    const std::int64_t hp = arith::inv_neg_even(h, k) + 2 * k * options.hprime_shift;
    const Fraction sin_arg = frac(a * hp, c);
    if (sin_arg.get_den() == 1) throw ConsistencyError("kloosterman_B: sin(pi a h'/c) vanishes");
    Fraction theta = arith::omega_ratio_theta(h, k) - frac(2 * hp * a * a * g.k1, c) + frac(2 * (n * h + m * hp), k);
    ComplexVal term = ComplexVal::unit_pi(theta, wp);
    term *= num::Real(1L, wp) / num::sin_pi(sin_arg, wp);
    sum += term;
  }
  return finish(std::move(sum), -tan_over_sqrt2(a, c, wp), options.prec);
}

ComplexVal kloosterman_D(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t twice_m,
                         const SumOptions& options) {
  require_pair(a, c);
  detail::require(k >= 1 && k % 2 == 1, "kloosterman_D: k must be odd");
  const GroupData g = group_data(a, c, k);
  detail::require(g.c1 > 1, "kloosterman_D: c must not divide k");
  const int s = s_func(g.ell, g.c1);
  detail::require(s != 1, "kloosterman_D: undefined for 1/4 < ell/c1 <= 3/4");
  const num::Precision wp = options.prec + kGuardBits;
  ComplexVal sum(wp);
  for (std::int64_t h : reduced_residues(k)) {
    const std::int64_t hp = arith::inv_neg_even(h, k) + 2 * k * options.hprime_shift;
    const Fraction theta = arith::omega_ratio_theta(h, k) + frac(2 * n * h, k) + frac(twice_m * hp, k);
    sum += ComplexVal::unit_pi(theta, wp);
  }
  num::Real scale = tan_over_sqrt2(a, c, wp);
  if (s == 2) scale = -scale;
  return finish(std::move(sum), scale, options.prec);
}

ComplexVal kloosterman_A(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t m,
                         const SumOptions& options) {
  require_pair(a, c);
  detail::require(k >= 2 && k % 2 == 0, "kloosterman_A: k must be even");
  detail::require(k % c == 0, "kloosterman_A: c must divide k");
  const GroupData g = group_data(a, c, k);
  const num::Precision wp = options.prec + kGuardBits;
  const std::int64_t half = k / 2;
  ComplexVal sum(wp);
  for (std::int64_t h : reduced_residues(k)) {
    const std::int64_t hp = arith::inv_neg(h, k) + 2 * k * options.hprime_shift;
    const Fraction cot_arg = frac(a * hp, c);
    if (cot_arg.get_den() == 1) throw ConsistencyError("kloosterman_A: cot(pi a h'/c) has a pole");
    const Fraction omega_theta = 2 * arith::dedekind_sum(h, k) - arith::dedekind_sum(arith::mod_floor(h, half), half);
    const Fraction theta = omega_theta - frac(2 * hp * a * a * g.k1, c) + frac(2 * (n * h + m * hp), k);
    ComplexVal term = ComplexVal::unit_pi(theta, wp);
    term *= num::cos_pi(cot_arg, wp) / num::sin_pi(cot_arg, wp);
    sum += term;
  }
  num::Real scale = tan_pi(frac(a, c), wp);
  if (g.k1 % 2 == 0) scale = -scale;  // (-1)^{k1+1}
  return finish(std::move(sum), scale, options.prec);
}

}  // namespace overrank::expsums
