#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace overrank::qseries {

/// Power series in q truncated at q^order; coefficients are exact integers.
class IntSeries {
 public:
  /// Zero series valid through q^order.
  explicit IntSeries(std::int64_t order);
  explicit IntSeries(std::vector<mpz_class> coeffs);

  static IntSeries one(std::int64_t order);

  [[nodiscard]] std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const mpz_class> coeffs() const { return coeffs_; }
  [[nodiscard]] const mpz_class& operator[](std::int64_t i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  mpz_class& operator[](std::int64_t i) { return coeffs_[static_cast<std::size_t>(i)]; }

  /// Result order is the smaller of the two orders.
  [[nodiscard]] IntSeries add(const IntSeries& rhs) const;
  [[nodiscard]] IntSeries multiply(const IntSeries& rhs) const;
  /// Multiplicative inverse; the constant term must be +1 or -1.
  [[nodiscard]] IntSeries inverse() const;
  [[nodiscard]] IntSeries truncated(std::int64_t order) const;

  friend bool operator==(const IntSeries& a, const IntSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

/// Coefficients p̄(0..n_max) of prod (1+q^j)/(1-q^j).
IntSeries pbar_series(std::int64_t n_max);

}  // namespace overrank::qseries
