#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace overrank::num {

/// Working precision in bits.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

/// Owning MPFR real with value semantics.
///
/// Every value carries its own precision. Binary operators produce a result at
/// the larger of the two operand precisions, rounding to nearest.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision);
  Real(long value, Precision prec);
  Real(double value, Precision prec);
  Real(const mpz_class& value, Precision prec);
  Real(const mpq_class& value, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  [[nodiscard]] Precision precision() const { return mpfr_get_prec(value_); }
  /// Re-rounds in place to a new precision.
  void set_precision(Precision prec);

  static Real pi(Precision prec);

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  Real operator-() const;

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  [[nodiscard]] mpz_class round_to_integer() const;
  /// Scientific notation with `digits` significant decimal digits.
  [[nodiscard]] std::string to_string(int digits = 20) const;
  /// Fixed notation with `decimals` digits after the point.
  [[nodiscard]] std::string to_fixed(int decimals) const;

  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  [[nodiscard]] mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, const Real& y);

/// sin(pi * t) and cos(pi * t) for an exact rational t; the argument is reduced
/// exactly modulo 2 before any rounding happens.
Real sin_pi(const mpq_class& t, Precision prec);
Real cos_pi(const mpq_class& t, Precision prec);

/// log2 of |x|, as a double; -inf for zero.
double log2_abs(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

}  // namespace overrank::num
