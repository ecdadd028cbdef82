#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "overrank/num/complex.hpp"

namespace overrank::arith {

/// Exact rational, always canonical (reduced, positive denominator).
using Fraction = mpq_class;

/// num/den in canonical form; den must be nonzero.
Fraction make_fraction(std::int64_t num, std::int64_t den = 1);

/// ((x)) = x - floor(x) - 1/2, and 0 on integers.
Fraction sawtooth(const Fraction& x);

/// S(h,k) by the Euclidean reciprocity recursion. h is taken mod k.
Fraction dedekind_sum(std::int64_t h, std::int64_t k);

/// S(h,k) by the defining O(k) sum; reference oracle.
Fraction dedekind_sum_direct(std::int64_t h, std::int64_t k);

/// Unit complex number e^{pi i theta}, theta kept exactly and reduced into [0,2).
class Phase {
 public:
  Phase() = default;
  explicit Phase(Fraction theta);

  [[nodiscard]] const Fraction& theta() const { return theta_; }

  Phase& operator*=(const Phase& rhs);
  friend Phase operator*(Phase lhs, const Phase& rhs) { return lhs *= rhs; }
  [[nodiscard]] Phase inverse() const;
  [[nodiscard]] Phase pow(std::int64_t e) const;

  friend bool operator==(const Phase& a, const Phase& b) { return a.theta_ == b.theta_; }

  [[nodiscard]] num::Complex value(num::Precision prec) const;
  [[nodiscard]] std::string to_string() const;

 private:
  Fraction theta_{0};
};

/// omega_{h,k} = e^{pi i S(h,k)}.
Phase omega(std::int64_t h, std::int64_t k);

/// theta of omega_{h,k}^2 / omega_{2h,k}, k odd.
Fraction omega_ratio_theta(std::int64_t h, std::int64_t k);

/// The even h' in (-k, k] with h h' = -1 (mod k); 0 for k = 1. k must be odd.
std::int64_t inv_neg_even(std::int64_t h, std::int64_t k);

/// The representative of -h^{-1} mod k in [0, k).
std::int64_t inv_neg(std::int64_t h, std::int64_t k);

/// Floor-mod, result in [0, m).
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace overrank::arith
