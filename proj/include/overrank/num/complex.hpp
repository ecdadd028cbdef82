#pragma once

#include <iosfwd>
#include <string>

#include "overrank/num/real.hpp"

namespace overrank::num {

/// Complex number over MPFR reals. Both parts share one working precision.
class Complex {
 public:
  explicit Complex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  Complex(Real re, Real im);

  /// e^{pi i t} for exact rational t.
  static Complex unit_pi(const mpq_class& t, Precision prec);

  [[nodiscard]] const Real& re() const { return re_; }
  [[nodiscard]] const Real& im() const { return im_; }
  [[nodiscard]] Precision precision() const { return re_.precision(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);

  friend Complex operator+(Complex lhs, const Complex& rhs) { return lhs += rhs; }
  friend Complex operator-(Complex lhs, const Complex& rhs) { return lhs -= rhs; }
  friend Complex operator*(Complex lhs, const Complex& rhs) { return lhs *= rhs; }
  friend Complex operator*(Complex lhs, const Real& rhs) { return lhs *= rhs; }
  friend Complex operator*(const Real& lhs, Complex rhs) { return rhs *= lhs; }

  /// Multiplication by i.
  [[nodiscard]] Complex times_i() const;
  [[nodiscard]] Complex conj() const;
  [[nodiscard]] Real abs() const;
  [[nodiscard]] Real norm() const;

  /// "re + im i" with `digits` significant digits per part.
  [[nodiscard]] std::string to_string(int digits = 20) const;

 private:
  Real re_;
  Real im_;
};

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace overrank::num
