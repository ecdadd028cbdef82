#include "overrank/num/complex.hpp"

#include <algorithm>
#include <ostream>

namespace overrank::num {

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const Precision prec = std::max(re_.precision(), im_.precision());
  re_.set_precision(prec);
  im_.set_precision(prec);
}

Complex Complex::unit_pi(const mpq_class& t, Precision prec) {
  return Complex(cos_pi(t, prec), sin_pi(t, prec));
}

Complex& Complex::operator+=(const Complex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  Real re = re_ * rhs.re_ - im_ * rhs.im_;
  Real im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

Complex Complex::times_i() const { return Complex(-im_, re_); }

Complex Complex::conj() const { return Complex(re_, -im_); }

Real Complex::norm() const { return re_ * re_ + im_ * im_; }

Real Complex::abs() const {
  Real out(precision());
  mpfr_hypot(out.get(), re_.get(), im_.get(), MPFR_RNDN);
  return out;
}

std::string Complex::to_string(int digits) const {
  std::string out = re_.to_string(digits);
  out += im_.sign() < 0 ? " - " : " + ";
  out += num::abs(im_).to_string(digits);
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.to_string(); }

}  // namespace overrank::num
