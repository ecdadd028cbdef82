#include "overrank/asymptotic/asymptotic.hpp"

#include <cmath>

#include "overrank/error.hpp"

namespace overrank::asymptotic {

namespace {

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

num::Real sqrt_of(const Fraction& q, num::Precision prec) { return num::sqrt(num::Real(q, prec)); }

}  // namespace

num::Precision working_precision(std::int64_t n, num::Precision prec) {
  const double bits = M_PI * std::sqrt(static_cast<double>(n)) / M_LN2;
  return std::max<num::Precision>(prec, static_cast<num::Precision>(std::ceil(bits)) + 64);
}

Estimate estimate_A(std::int64_t a, std::int64_t c, std::int64_t n, num::Precision prec) {
  detail::require(c > 2, "estimate_A: c must be > 2");
  detail::require(a > 0 && a < c && arith::gcd(a, c) == 1, "estimate_A: need 0 < a < c coprime");
  detail::require(n >= 1, "estimate_A: n must be >= 1");
  const num::Precision wp = working_precision(n, prec);
  const expsums::SumOptions opts{wp, 0};
  const std::int64_t k_max = isqrt(n);
  const num::Real pi = num::Real::pi(wp);
  const num::Real sqrt_n = num::sqrt(num::Real(static_cast<long>(n), wp));
  const num::Real sqrt_2_over_n = sqrt_of(arith::make_fraction(2, n), wp);

  Estimate est{ComplexVal(wp), {}, n, k_max, a, c, wp};
  for (std::int64_t k = 1; k <= k_max; k += 2) {
    const num::Real sqrt_k = num::sqrt(num::Real(static_cast<long>(k), wp));
    if (k % c == 0) {
      const ComplexVal b = expsums::kloosterman_B(a, c, k, -n, 0, opts);
      const num::Real scale = sqrt_2_over_n * num::sinh(pi * sqrt_n / num::Real(static_cast<long>(k), wp)) / sqrt_k;
      ComplexVal term = (b * scale).times_i();
      est.value += term;
      est.terms.push_back(EstimateTerm{TermKind::B, k, 0, Fraction(1, 16), 0, std::move(term)});
      continue;
    }
    // c1 = 4 yields no positive delta; that branch is skipped by construction
    if (expsums::group_data(a, c, k).c1 == 4) continue;
    for (const expsums::DeltaTerm& dt : expsums::delta_terms(a, c, k, false)) {
      const ComplexVal dsum = expsums::kloosterman_D(a, c, k, -n, dt.twice_m, opts);
      const num::Real arg = 4 * pi * sqrt_of(dt.delta * arith::make_fraction(n), wp) /
                            num::Real(static_cast<long>(k), wp);
      const num::Real scale = 2 * sqrt_2_over_n * num::sinh(arg) / sqrt_k;
      ComplexVal term = dsum * scale;
      est.value += term;
      est.terms.push_back(EstimateTerm{TermKind::D, k, dt.r, dt.delta, dt.twice_m, std::move(term)});
    }
  }
  return est;
}

std::optional<EstimateTerm> main_term(const Estimate& e) {
  const EstimateTerm* best = nullptr;
  num::Real best_abs(e.precision);
  for (const auto& t : e.terms) {
    num::Real v = t.contribution.abs();
    if (best == nullptr || v > best_abs) {
      best = &t;
      best_abs = std::move(v);
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<EstimateTerm> main_term(std::int64_t a, std::int64_t c, std::int64_t n, num::Precision prec) {
  return main_term(estimate_A(a, c, n, prec));
}

std::int64_t default_kcap(std::int64_t n) {
  const std::int64_t r = isqrt(n);
  return 5 * (r * r == n ? r : r + 1);
}

num::Real zuckerman_pbar(std::int64_t n, std::int64_t k_cap, num::Precision prec) {
  detail::require(n >= 1, "zuckerman_pbar: n must be >= 1");
  detail::require(k_cap >= 1, "zuckerman_pbar: k_cap must be >= 1");
  const num::Precision wp = working_precision(n, prec);
  const num::Real pi = num::Real::pi(wp);
  const num::Real nn(static_cast<long>(n), wp);
  const num::Real sqrt_n = num::sqrt(nn);
  const num::Real n_three_halves = nn * sqrt_n;
  num::Real total(wp);
  for (std::int64_t k = 1; k <= k_cap; k += 2) {
    ComplexVal ksum(wp);
    for (std::int64_t h : expsums::reduced_residues(k)) {
      const Fraction theta = arith::omega_ratio_theta(h, k) - arith::make_fraction(2 * n * h, k);
      ksum += ComplexVal::unit_pi(theta, wp);
    }
    const num::Real kk(static_cast<long>(k), wp);
    const num::Real x = pi * sqrt_n / kk;
    // d/dn [ n^{-1/2} sinh(pi sqrt(n)/k) ]
    const num::Real deriv = pi / (2 * kk * nn) * num::cosh(x) - num::sinh(x) / (2 * n_three_halves);
    total += num::sqrt(kk) * ksum.re() * deriv;
  }
  total /= 2 * pi;
  total.set_precision(prec);
  return total;
}

std::vector<EquidistributionRatio> equidistribution_report(std::int64_t c, std::int64_t n,
                                                           const qseries::RankTable& t) {
  detail::require(c >= 2, "equidistribution_report: c must be >= 2");
  const auto classes = qseries::rank_classes(c, n, t);
  const mpz_class total = t.row_total(n);
  std::vector<EquidistributionRatio> out;
  for (std::int64_t a = 0; a < c; ++a) {
    Fraction ratio(c * classes[a], total);
    ratio.canonicalize();
    out.push_back(EquidistributionRatio{a, ratio, ratio.get_d()});
  }
  return out;
}

}  // namespace overrank::asymptotic
