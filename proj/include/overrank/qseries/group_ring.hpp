#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "overrank/num/complex.hpp"
#include "overrank/qseries/rank_table.hpp"

namespace overrank::qseries {

/// Coefficients of the c-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(std::int64_t c);

/// Element of Z[Z/c]: sum_j coeffs[j] * zeta_c^j.
class GroupRingElt {
 public:
  explicit GroupRingElt(std::int64_t c);
  GroupRingElt(std::int64_t c, std::vector<mpz_class> coeffs);

  /// The integer v placed at index 0.
  static GroupRingElt scalar(std::int64_t c, const mpz_class& v);
  /// zeta_c^j.
  static GroupRingElt basis(std::int64_t c, std::int64_t j);

  [[nodiscard]] std::int64_t modulus() const { return c_; }
  [[nodiscard]] std::span<const mpz_class> coeffs() const { return coeffs_; }
  [[nodiscard]] const mpz_class& operator[](std::int64_t j) const;

  GroupRingElt& operator+=(const GroupRingElt& rhs);
  GroupRingElt& operator-=(const GroupRingElt& rhs);
  GroupRingElt& operator*=(const GroupRingElt& rhs);
  GroupRingElt& operator*=(const mpz_class& rhs);
  friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
  friend GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }
  friend GroupRingElt operator*(GroupRingElt a, const GroupRingElt& b) { return a *= b; }
  friend GroupRingElt operator*(GroupRingElt a, const mpz_class& b) { return a *= b; }

  /// Multiplication by zeta_c^j (index rotation).
  [[nodiscard]] GroupRingElt shifted(std::int64_t j) const;

  /// Exact group-ring equality (no relations imposed).
  friend bool operator==(const GroupRingElt& a, const GroupRingElt& b) = default;

  /// Image in Z[x]/Phi_c(x), as phi(c) coefficients; the exact value at a
  /// primitive c-th root of unity.
  [[nodiscard]] std::vector<mpz_class> reduced() const;
  /// Equality of values at zeta_c (equality after cyclotomic reduction).
  [[nodiscard]] bool same_value(const GroupRingElt& other) const;
  /// If the value at zeta_c is a rational integer, that integer.
  [[nodiscard]] bool value_is_integer(mpz_class* out = nullptr) const;

  /// Numeric value at zeta_c = e^{2 pi i/c}.
  [[nodiscard]] num::Complex evaluate(num::Precision prec) const;

  [[nodiscard]] std::string to_string() const;

 private:
  std::int64_t c_;
  std::vector<mpz_class> coeffs_;
};

/// sum_m N̄(m,n) zeta_c^{a m}, i.e. the coefficient of q^n in the rank
/// generating function at u = zeta_c^a, as an exact group-ring element.
GroupRingElt zeta_element(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t);

struct ZetaValue {
  GroupRingElt exact;
  num::Real value;
  /// |imaginary part| of the numeric evaluation.
  num::Real imag_residual;
};

/// A(a/c; n) exactly and numerically. Requires 0 < a < c, gcd(a,c) = 1.
ZetaValue zeta_eval(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t,
                    num::Precision prec = num::kDefaultPrecision);

/// N̄(a,c,n) recomputed as (1/c) sum_{j=0}^{c-1} zeta^{-aj} O(zeta^j; q)[q^n],
/// exactly in Z[zeta_c]. Throws ConsistencyError if the result is not an integer.
mpz_class orthogonality_decompose(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t);

}  // namespace overrank::qseries
