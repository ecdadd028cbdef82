#include "overrank/num/real.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

namespace overrank::num {

namespace {

// Extra bits used when forming pi * t before a trig call.
constexpr Precision kGuardBits = 32;

template <typename Fn>
Real apply_unary(const Real& x, Fn fn) {
  Real out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

// t reduced exactly into [0, 2).
mpq_class reduce_mod_two(const mpq_class& t) {
  mpz_class twice_den = 2 * t.get_den();
  mpz_class num = t.get_num();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), twice_den.get_mpz_t());
  mpq_class out(r, t.get_den());
  out.canonicalize();
  return out;
}

}  // namespace

Real::Real(Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Precision prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(Precision prec) { mpfr_prec_round(value_, prec, MPFR_RNDN); }

Real Real::pi(Precision prec) {
  Real out(prec);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

mpz_class Real::round_to_integer() const {
  Real rounded(precision());
  mpfr_round(rounded.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), rounded.value_, MPFR_RNDN);
  return out;
}

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  const Real v = is_zero() ? Real(precision()) : *this;  // no "-0"
  mpfr_asprintf(&raw, "%.*Re", digits > 1 ? digits - 1 : 0, v.value_);
  return take_mpfr_string(raw);
}

std::string Real::to_fixed(int decimals) const {
  char* raw = nullptr;
  const Real v = is_zero() ? Real(precision()) : *this;
  mpfr_asprintf(&raw, "%.*Rf", decimals, v.value_);
  return take_mpfr_string(raw);
}

Real abs(const Real& x) { return apply_unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return apply_unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return apply_unary(x, mpfr_exp); }
Real log(const Real& x) { return apply_unary(x, mpfr_log); }
Real sin(const Real& x) { return apply_unary(x, mpfr_sin); }
Real cos(const Real& x) { return apply_unary(x, mpfr_cos); }
Real tan(const Real& x) { return apply_unary(x, mpfr_tan); }
Real cot(const Real& x) { return apply_unary(x, mpfr_cot); }
Real sinh(const Real& x) { return apply_unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return apply_unary(x, mpfr_cosh); }

Real pow(const Real& x, const Real& y) {
  Real out(std::max(x.precision(), y.precision()));
  mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

Real sin_pi(const mpq_class& t, Precision prec) {
  const mpq_class r = reduce_mod_two(t);
  // Exact values at multiples of 1/2.
  if (r.get_den() <= 2) {
    if (r == 0 || r == 1) return Real(0L, prec);
    return Real(r == mpq_class(1, 2) ? 1L : -1L, prec);
  }
  Real angle = Real::pi(prec + kGuardBits) * Real(r, prec + kGuardBits);
  Real out = sin(angle);
  out.set_precision(prec);
  return out;
}

Real cos_pi(const mpq_class& t, Precision prec) {
  const mpq_class r = reduce_mod_two(t);
  if (r.get_den() <= 2) {
    if (r == mpq_class(1, 2) || r == mpq_class(3, 2)) return Real(0L, prec);
    return Real(r == 0 ? 1L : -1L, prec);
  }
  Real angle = Real::pi(prec + kGuardBits) * Real(r, prec + kGuardBits);
  Real out = cos(angle);
  out.set_precision(prec);
  return out;
}

double log2_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, x.get(), MPFR_RNDN);
  return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

}  // namespace overrank::num
