#include "overrank/bounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "overrank/error.hpp"
#include "overrank/qseries/group_ring.hpp"

namespace overrank::bounds {

namespace {

using num::Real;

struct SideParams {
  std::int64_t a;
  std::vector<std::int64_t> residues;
  std::vector<std::int64_t> tail_start;  // first index k per residue, K = c k + r
};

struct FamilyParams {
  std::int64_t c;
  Fraction sinh_scale;  // main term is sinh(sinh_scale * pi sqrt n)
  bool index_weight;    // tail weight sqrt(k) of the index, else sqrt(K)
  std::int64_t even_skip;
  std::vector<SideParams> sides;
};

const FamilyParams& params(Family f) {
  static const FamilyParams c10{10, Fraction(3, 5), true, 5, {{1, {1, 9}, {2, 1}}, {3, {3, 7}, {1, 1}}}};
  static const FamilyParams c6{6, Fraction(1, 3), false, 3, {{1, {1, 5}, {1, 0}}}};
  return f == Family::C10 ? c10 : c6;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Real rl(std::int64_t v, num::Precision prec) { return Real(static_cast<long>(v), prec); }

bool in_residues(std::int64_t k, std::int64_t c, const std::vector<std::int64_t>& res) {
  return std::find(res.begin(), res.end(), k % c) != res.end();
}

struct Constants {
  Real pi, e2pi, e_sym, e_arc, c1, c50;
};

const Constants& constants(num::Precision prec) {
  static std::mutex mu;
  static std::map<num::Precision, Constants> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  const Real pi = Real::pi(prec);
  Constants k{pi,
              num::exp(2 * pi),
              num::exp(2 * pi + pi / 8),
              num::exp(2 * pi + pi / 16),
              coeff_sum(Fraction(1), prec),
              coeff_sum(Fraction(1, 50), prec)};
  return cache.emplace(prec, std::move(k)).first->second;
}

// Parts of one side that depend on N = floor(sqrt n) only.
struct SideSums {
  Real sum_inv_sqrt;  // over k <= N in the residue classes
  Real sum_sqrt;
  Real sum_k;
  Real mordell_odd;  // inner double sum, before the prefactor
  Real mordell_even;
};

SideSums side_sums(const FamilyParams& fp, const SideParams& sp, std::int64_t N, num::Precision prec) {
  SideSums s{Real(prec), Real(prec), Real(prec), Real(prec), Real(prec)};
  for (std::int64_t k = 1; k <= N; ++k) {
    if (!in_residues(k, fp.c, sp.residues)) continue;
    const Real rk = num::sqrt(rl(k, prec));
    s.sum_inv_sqrt += Real(1L, prec) / rk;
    s.sum_sqrt += rk;
    s.sum_k += rl(k, prec);
  }
  const std::int64_t c = fp.c;
  const std::int64_t a = sp.a;
  // 1/min|nu/k - 1/(4k) +- a/c| = 4ck / min|4c nu - c +- 4ak|
  for (std::int64_t k = 1; k <= N; k += 2) {
    Real inner(prec);
    for (std::int64_t nu = 1; nu <= k; ++nu) {
      const std::int64_t u = std::min(std::abs(4 * c * nu - c + 4 * a * k), std::abs(4 * c * nu - c - 4 * a * k));
      inner += rl(4 * c * k, prec) / rl(u, prec);
    }
    const Real kk = rl(k, prec);
    s.mordell_odd += inner / (kk * num::sqrt(kk));
  }
  // 1/min|nu/k +- a/c| = ck / min|c nu +- ak|
  for (std::int64_t k = 2; k <= N; k += 2) {
    if (k % fp.even_skip == 0) continue;
    Real inner(prec);
    for (std::int64_t nu = 1; nu <= k; ++nu) {
      const std::int64_t u = std::min(std::abs(c * nu + a * k), std::abs(c * nu - a * k));
      inner += rl(c * k, prec) / rl(u, prec);
    }
    const Real kk = rl(k, prec);
    s.mordell_even += inner / (kk * num::sqrt(kk));
  }
  return s;
}

const SideSums& cached_side_sums(Family f, std::size_t side, std::int64_t N, num::Precision prec) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::size_t, std::int64_t, num::Precision>, SideSums> cache;
  const auto key = std::make_tuple(static_cast<int>(f), side, N, prec);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const FamilyParams& fp = params(f);
  SideSums s = side_sums(fp, fp.sides[side], N, prec);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(s)).first->second;
}

std::string residue_list(const std::vector<std::int64_t>& res) {
  std::string out;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(res[i]);
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return f == Family::C10 ? "c10" : "c6"; }

Real coeff_sum(const Fraction& scale, num::Precision prec) {
  detail::require(sgn(scale) > 0, "coeff_sum: scale must be positive");
  const num::Precision wp = prec + 32;
  const Real pi = Real::pi(wp);
  const Real s(scale, wp);
  // past r = 1/s^2 consecutive terms shrink by at least q = e^{-pi s/2}
  const Real q = num::exp(-(pi * s) / 2);
  const Real tail_factor = q / (Real(1L, wp) - q);
  const Fraction r_geo = 1 / (scale * scale);
  Real eps(1L, wp);
  mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(prec) - 8, MPFR_RNDN);
  Real total(wp);
  for (std::int64_t r = 1;; ++r) {
    const Real rr = rl(r, wp);
    const Real term = num::exp(pi * num::sqrt(rr) - pi * s * rr);
    total += term;
    if (Fraction(r) > r_geo && term * tail_factor < total * eps) break;
  }
  total.set_precision(prec);
  return total;
}

const std::vector<std::string>& component_names() {
  static const std::vector<std::string> names{"tail",   "coeff_U", "sym_path",    "small_arc",
                                              "O_series", "O_half", "mordell_odd", "mordell_even"};
  return names;
}

BoundReport bound_report(std::int64_t n, Family family, num::Precision prec) {
  detail::require(n >= 1, "bound_report: n must be >= 1");
  detail::require(prec >= 64, "bound_report: precision must be >= 64 bits");
  const FamilyParams& fp = params(family);
  const Constants& k = constants(prec);
  const std::int64_t c = fp.c;
  const std::int64_t N = isqrt(n);
  const Real nn = rl(n, prec);
  const Real sqrt_n = num::sqrt(nn);
  const Real sinh_arg = Real(fp.sinh_scale, prec) * k.pi * sqrt_n;

  BoundReport rep{n, family, Real(prec), {}, Real(prec), false};
  rep.main = rl(2, prec) / sqrt_n * (num::sin_pi(Fraction(1, c), prec) / num::cos_pi(Fraction(1, c), prec)) * num::sinh(sinh_arg);

  Real sum_tenth(prec);  // sum_{k <= N/c} k^{-1/2}
  for (std::int64_t j = 1; j <= N / c; ++j) sum_tenth += Real(1L, prec) / num::sqrt(rl(j, prec));
  const Real sqrt_c = num::sqrt(rl(c, prec));

  for (std::size_t si = 0; si < fp.sides.size(); ++si) {
    const SideParams& sp = fp.sides[si];
    const SideSums& ss = cached_side_sums(family, si, N, prec);
    BoundSide side{sp.a, sp.residues, {}, Real(prec)};

    Real tail(prec);
    for (std::size_t ri = 0; ri < sp.residues.size(); ++ri) {
      const std::int64_t r = sp.residues[ri];
      for (std::int64_t idx = sp.tail_start[ri]; c * idx + r <= N; ++idx) {
        const std::int64_t K = c * idx + r;
        const Real w = num::sqrt(rl(fp.index_weight ? idx : K, prec));
        tail += w * num::sinh(sinh_arg / rl(K, prec));
      }
    }
    tail *= rl(4, prec) / sqrt_n;

    const Real coeff_u = 2 * num::sqrt(rl(2, prec)) * k.e2pi * k.c50 * ss.sum_inv_sqrt;
    const Real sym_path = 2 * k.e_sym / sqrt_n * ss.sum_sqrt;
    const Real small_arc = 8 * k.pi * k.e_arc / num::pow(nn, Real(Fraction(3, 4), prec)) * ss.sum_k;
    const Real o_series = 2 * k.e2pi / sqrt_c * (Real(1L, prec) + k.c1) * sum_tenth;
    const Real o_half = 2 * k.e2pi * k.c50 * ss.sum_inv_sqrt;
    const Real m_odd = 2 * k.e2pi * num::sqrt(k.pi) / 5 * ss.mordell_odd;
    const Real m_even =
        2 * k.e2pi * num::sqrt(2 * k.pi) / 5 * (ss.mordell_even + sum_tenth / (c * sqrt_c));

    const Real* values[] = {&tail, &coeff_u, &sym_path, &small_arc, &o_series, &o_half, &m_odd, &m_even};
    for (std::size_t i = 0; i < component_names().size(); ++i) {
      side.components.push_back(BoundComponent{component_names()[i], *values[i]});
      side.total += *values[i];
    }
    rep.total += side.total;
    rep.sides.push_back(std::move(side));
  }
  rep.dominated = rep.main > rep.total;
  return rep;
}

std::string bound_assembly(Family family) {
  const FamilyParams& fp = params(family);
  const std::string c = std::to_string(fp.c);
  std::string out = "c=" + c + "; main = (2/sqrt n) tan(pi/" + c + ") sinh(" + fp.sinh_scale.get_str() +
                    " pi sqrt n); N = floor(sqrt n); total = sum over sides of tail + coeff_U + sym_path + "
                    "small_arc + O_series + O_half + mordell_odd + mordell_even";
  for (const SideParams& sp : fp.sides) {
    out += "; side a=" + std::to_string(sp.a) + ": k = " + residue_list(sp.residues) + " mod " + c + ", tail over K = " +
           c + "k+r with k >= ";
    for (std::size_t i = 0; i < sp.residues.size(); ++i) {
      if (i) out += "/";
      out += std::to_string(sp.tail_start[i]) + " (r=" + std::to_string(sp.residues[i]) + ")";
    }
    out += ", alpha = " + std::to_string(sp.a) + "/" + c;
  }
  out += fp.index_weight ? "; tail weight sqrt(k) of the index k" : "; tail weight sqrt(K)";
  out += "; O_series and the N/" + c + " part of mordell_even are counted once per side";
  out += "; mordell_even skips k divisible by " + std::to_string(fp.even_skip);
  return out;
}

CrossoverResult crossover(Family family, num::Precision prec, std::int64_t cap) {
  CrossoverResult res;
  res.assembly = bound_assembly(family);
  std::int64_t n = 1;
  while (n <= cap) {
    if (!bound_report(n, family, prec).dominated) {
      ++n;
      continue;
    }
    const std::int64_t n0 = n;
    std::int64_t fail = 0;
    for (std::int64_t m = n0 + 1; m <= 4 * n0; ++m) {
      if (!bound_report(m, family, prec).dominated) {
        fail = m;
        break;
      }
    }
    if (fail == 0) {
      res.found = true;
      res.n0 = n0;
      res.checked_to = 4 * n0;
      return res;
    }
    res.rejected.push_back(n0);
    n = fail + 1;
  }
  res.checked_to = cap;
  return res;
}

IdentityCheck zeta_relation_10(std::int64_t a, std::int64_t n_max, const qseries::RankTable& t) {
  detail::require(a == 1 || a == 3 || a == 7 || a == 9, "zeta_relation_10: a must be 1, 3, 7 or 9");
  detail::require(n_max >= 0 && n_max <= t.n_max(), "zeta_relation_10: n_max exceeds table");
  IdentityCheck out{true, std::nullopt, n_max};
  const auto mult = qseries::GroupRingElt::basis(10, 2 * a) - qseries::GroupRingElt::basis(10, 3 * a);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto N = qseries::rank_classes(10, n, t);
    const auto lhs = qseries::zeta_element(a, 10, n, t);
    const auto rhs = qseries::GroupRingElt::scalar(10, N[0] + N[1] - N[4] - N[5]) +
                     mult * qseries::GroupRingElt::scalar(10, N[1] + N[2] - N[3] - N[4]);
    if (!lhs.same_value(rhs)) return IdentityCheck{false, n, n_max};
  }
  return out;
}

IdentityCheck zeta_relation_6(std::int64_t a, std::int64_t n_max, const qseries::RankTable& t) {
  detail::require(a == 1 || a == 5, "zeta_relation_6: a must be 1 or 5");
  detail::require(n_max >= 0 && n_max <= t.n_max(), "zeta_relation_6: n_max exceeds table");
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto N = qseries::rank_classes(6, n, t);
    const auto lhs = qseries::zeta_element(a, 6, n, t);
    if (!lhs.same_value(qseries::GroupRingElt::scalar(6, N[0] + N[1] - N[2] - N[3]))) {
      return IdentityCheck{false, n, n_max};
    }
  }
  return IdentityCheck{true, std::nullopt, n_max};
}

IdentityCheck mao_decomposition(std::int64_t n_max, const qseries::RankTable& t) {
  detail::require(n_max >= 0 && n_max <= t.n_max(), "mao_decomposition: n_max exceeds table");
  static constexpr long kWeights[4][4] = {{1, 2, 2, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -2, 2, -1}};
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto N = qseries::rank_classes(6, n, t);
    std::vector<qseries::GroupRingElt> E;
    for (std::int64_t j = 0; j < 4; ++j) E.push_back(qseries::zeta_element(j, 6, n, t));
    for (int r = 0; r < 4; ++r) {
      qseries::GroupRingElt rhs(6);
      for (int j = 0; j < 4; ++j) rhs += E[j] * mpz_class(kWeights[r][j]);
      if (!rhs.same_value(qseries::GroupRingElt::scalar(6, 6 * N[r]))) return IdentityCheck{false, n, n_max};
    }
  }
  return IdentityCheck{true, std::nullopt, n_max};
}

std::string InequalitySpec::statement() const {
  std::string arg = "n";
  if (residue3) arg = *residue3 == 0 ? "3n" : "3n+" + std::to_string(*residue3);
  auto side = [&](const std::vector<std::int64_t>& res) {
    std::string s;
    for (std::size_t i = 0; i < res.size(); ++i) {
      if (i) s += " + ";
      s += "N(" + std::to_string(res[i]) + "," + std::to_string(c) + "," + arg + ")";
    }
    return s;
  };
  std::string out = side(terms[0]);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    out += relations[i] == Relation::GE ? " >= " : relations[i] == Relation::LE ? " <= " : " = ";
    out += side(terms[i + 1]);
  }
  out += min_index > 0 ? " for n >= " + std::to_string(min_index) : " for n >= 0";
  return out;
}

const std::vector<InequalitySpec>& inequality_specs() {
  using R = Relation;
  static const std::vector<InequalitySpec> specs = [] {
    std::vector<InequalitySpec> v;
    auto add = [&](std::string id, std::vector<std::string> aliases, std::int64_t c, std::optional<int> res,
                   std::int64_t min_index, std::vector<std::vector<std::int64_t>> terms, std::vector<R> rel,
                   Family fam, bool conj = false) {
      v.push_back(InequalitySpec{std::move(id), std::move(aliases), c, res, min_index, std::move(terms),
                                 std::move(rel), fam, conj});
    };
    add("eq:1234", {}, 10, std::nullopt, 0, {{1, 2}, {3, 4}}, {R::GE}, Family::C10);
    add("eq:0325", {}, 10, std::nullopt, 0, {{0, 3}, {2, 5}}, {R::GE}, Family::C10);
    add("eq:0145", {}, 10, std::nullopt, 0, {{0, 1}, {4, 5}}, {R::GE}, Family::C10);
    add("eq:0123", {}, 6, std::nullopt, 0, {{0, 1}, {2, 3}}, {R::GE}, Family::C6);
    add("eq:0312", {}, 6, 0, 0, {{0, 3}, {1, 2}}, {R::GE}, Family::C6);
    add("eq:0312'", {"eq:0312′", "eq:0312prime"}, 6, 1, 0, {{0, 3}, {1, 2}}, {R::GE}, Family::C6);
    add("eq:0312''", {"eq:0312″", "eq:0312primeprime"}, 6, 2, 0, {{0, 3}, {1, 2}}, {R::LE}, Family::C6);
    add("SolvedWei11", {}, 3, 0, 0, {{0}, {1}, {2}}, {R::GE, R::EQ}, Family::C6);
    add("SolvedWei22", {}, 3, 1, 0, {{0}, {1}, {2}}, {R::GE, R::EQ}, Family::C6);
    add("SolvedWei33", {}, 3, 2, 0, {{0}, {1}, {2}}, {R::LE, R::EQ}, Family::C6);
    add("SolvedWei1", {}, 6, 0, 11, {{0}, {1}, {2}}, {R::GE, R::GE}, Family::C6);
    add("SolvedWei2", {}, 6, 1, 11, {{0}, {1}, {2}}, {R::GE, R::GE}, Family::C6);
    add("SolvedWei3", {}, 6, 2, 11, {{1}, {2}, {0}, {3}}, {R::GE, R::GE, R::GE}, Family::C6);
    add("Wei1", {}, 6, 0, 11, {{0}, {1}, {3}, {2}}, {R::GE, R::EQ, R::GE}, Family::C6, true);
    add("Wei2", {}, 6, 1, 11, {{0}, {1}, {3}, {2}}, {R::GE, R::EQ, R::GE}, Family::C6, true);
    add("Wei3", {}, 6, 2, 11, {{1}, {2}, {0}, {3}}, {R::GE, R::GE, R::GE}, Family::C6, true);
    return v;
  }();
  return specs;
}

const InequalitySpec& find_inequality(std::string_view id) {
  for (const InequalitySpec& s : inequality_specs()) {
    if (s.id == id) return s;
    for (const std::string& al : s.aliases) {
      if (al == id) return s;
    }
  }
  throw PreconditionError("unknown inequality id: " + std::string(id));
}

bool chain_holds(const InequalitySpec& spec, std::int64_t n, const qseries::RankTable& t) {
  const auto N = qseries::rank_classes(spec.c, n, t);
  std::vector<mpz_class> sums;
  for (const auto& term : spec.terms) {
    mpz_class s = 0;
    for (std::int64_t r : term) s += N[r];
    sums.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const int cmp_v = cmp(sums[i], sums[i + 1]);
    switch (spec.relations[i]) {
      case Relation::GE:
        if (cmp_v < 0) return false;
        break;
      case Relation::LE:
        if (cmp_v > 0) return false;
        break;
      case Relation::EQ:
        if (cmp_v != 0) return false;
        break;
    }
  }
  return true;
}

InequalityReport verify_inequality(std::string_view id, std::int64_t n_lo, std::int64_t n_hi,
                                   const qseries::RankTable& t, const VerifyOptions& options) {
  const InequalitySpec& spec = find_inequality(id);
  detail::require(0 <= n_lo && n_lo <= n_hi, "verify_inequality: need 0 <= from <= to");
  detail::require(n_hi <= t.n_max(), "verify_inequality: range exceeds table n_max");

  std::vector<std::int64_t> ns;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    if (spec.residue3 && n % 3 != *spec.residue3) continue;
    const std::int64_t index = spec.residue3 ? n / 3 : n;
    if (index < spec.min_index) continue;
    ns.push_back(n);
  }

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, ns.size())));
  std::vector<std::vector<std::int64_t>> found(threads);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < ns.size(); i += threads) {
      if (!chain_holds(spec, ns[i], t)) found[w].push_back(ns[i]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  InequalityReport rep{spec.id, n_lo, n_hi, static_cast<std::int64_t>(ns.size()), {}, options.crossover,
                       bound_assembly(spec.bound_family)};
  for (auto& f : found) rep.violations.insert(rep.violations.end(), f.begin(), f.end());
  std::sort(rep.violations.begin(), rep.violations.end());
  if (!rep.crossover_used && options.compute_crossover) {
    const CrossoverResult cr = crossover(spec.bound_family, options.prec);
    if (cr.found) rep.crossover_used = cr.n0;
  }
  return rep;
}

}  // namespace overrank::bounds
