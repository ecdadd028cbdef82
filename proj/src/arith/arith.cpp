#include "overrank/arith/arith.hpp"

#include <numeric>
#include <utility>

#include "overrank/error.hpp"

namespace overrank::arith {

namespace {

void require_coprime(std::int64_t h, std::int64_t k, const char* what) {
  detail::require(k >= 1, std::string(what) + ": k must be >= 1");
  detail::require(std::gcd(h, k) == 1, std::string(what) + ": gcd(h,k) must be 1");
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
  return out;
}

Fraction reduce_mod_two(const Fraction& t) {
  const mpz_class twice_den = 2 * t.get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), t.get_num().get_mpz_t(), twice_den.get_mpz_t());
  Fraction out(r, t.get_den());
  out.canonicalize();
  return out;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

Fraction make_fraction(std::int64_t num, std::int64_t den) {
  detail::require(den != 0, "fraction with zero denominator");
  Fraction f(to_mpz(num), to_mpz(den));
  f.canonicalize();
  return f;
}

Fraction sawtooth(const Fraction& x) {
  if (x.get_den() == 1) return Fraction(0);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Fraction out = x - Fraction(fl) - Fraction(1, 2);
  out.canonicalize();
  return out;
}

Fraction dedekind_sum_direct(std::int64_t h, std::int64_t k) {
  require_coprime(h, k, "dedekind_sum");
  h = mod_floor(h, k);
  Fraction total(0);
  for (std::int64_t mu = 1; mu < k; ++mu) {
    total += sawtooth(make_fraction(mu, k)) * sawtooth(make_fraction(mod_floor(h * mu, k), k));
  }
  total.canonicalize();
  return total;
}

Fraction dedekind_sum(std::int64_t h, std::int64_t k) {
  require_coprime(h, k, "dedekind_sum");
  h = mod_floor(h, k);
  // S(h,k) = (h^2 + k^2 + 1)/(12hk) - 1/4 - S(k mod h, h)
  Fraction total(0);
  int sign = 1;
  while (h != 0) {
    const mpz_class hz = to_mpz(h);
    const mpz_class kz = to_mpz(k);
    Fraction step(hz * hz + kz * kz + 1, 12 * hz * kz);
    step.canonicalize();
    step -= Fraction(1, 4);
    if (sign > 0) total += step; else total -= step;
    sign = -sign;
    const std::int64_t next = k % h;
    k = h;
    h = next;
  }
  total.canonicalize();
  return total;
}

Phase::Phase(Fraction theta) : theta_(reduce_mod_two(theta)) {}

Phase& Phase::operator*=(const Phase& rhs) {
  theta_ = reduce_mod_two(theta_ + rhs.theta_);
  return *this;
}

Phase Phase::inverse() const { return Phase(-theta_); }

Phase Phase::pow(std::int64_t e) const { return Phase(theta_ * make_fraction(e)); }

num::Complex Phase::value(num::Precision prec) const { return num::Complex::unit_pi(theta_, prec); }

std::string Phase::to_string() const { return "exp(pi*i*" + theta_.get_str() + ")"; }

Phase omega(std::int64_t h, std::int64_t k) { return Phase(dedekind_sum(h, k)); }

Fraction omega_ratio_theta(std::int64_t h, std::int64_t k) {
  detail::require(k % 2 == 1, "omega ratio: k must be odd");
  return 2 * dedekind_sum(h, k) - dedekind_sum(mod_floor(2 * h, k), k);
}

std::int64_t inv_neg(std::int64_t h, std::int64_t k) {
  require_coprime(h, k, "inv_neg");
  if (k == 1) return 0;
  mpz_class inv;
  const mpz_class hz = to_mpz(mod_floor(h, k));
  const mpz_class kz = to_mpz(k);
  mpz_invert(inv.get_mpz_t(), hz.get_mpz_t(), kz.get_mpz_t());
  return mod_floor(-static_cast<std::int64_t>(inv.get_si()), k);
}

std::int64_t inv_neg_even(std::int64_t h, std::int64_t k) {
  detail::require(k % 2 == 1, "inv_neg_even: k must be odd");
  const std::int64_t h0 = inv_neg(h, k);
  return h0 % 2 == 0 ? h0 : h0 - k;
}

}  // namespace overrank::arith
