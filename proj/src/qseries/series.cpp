#include "overrank/qseries/series.hpp"

#include <algorithm>

#include "overrank/error.hpp"

namespace overrank::qseries {

IntSeries::IntSeries(std::int64_t order) {
  detail::require(order >= 0, "series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, mpz_class(0));
}

IntSeries::IntSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  detail::require(!coeffs_.empty(), "series needs at least one coefficient");
}

IntSeries IntSeries::one(std::int64_t order) {
  IntSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

IntSeries IntSeries::add(const IntSeries& rhs) const {
  IntSeries out(std::min(order(), rhs.order()));
  for (std::int64_t i = 0; i <= out.order(); ++i) out[i] = (*this)[i] + rhs[i];
  return out;
}

IntSeries IntSeries::multiply(const IntSeries& rhs) const {
  IntSeries out(std::min(order(), rhs.order()));
  const std::int64_t n = out.order();
  for (std::int64_t i = 0; i <= n; ++i) {
    if (sgn((*this)[i]) == 0) continue;
    for (std::int64_t j = 0; i + j <= n; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), (*this)[i].get_mpz_t(), rhs[j].get_mpz_t());
    }
  }
  return out;
}

IntSeries IntSeries::inverse() const {
  const mpz_class& c0 = coeffs_[0];
  detail::require(c0 == 1 || c0 == -1, "series inverse needs a unit constant term");
  IntSeries out(order());
  out[0] = c0;
  for (std::int64_t n = 1; n <= order(); ++n) {
    mpz_class acc(0);
    for (std::int64_t j = 1; j <= n; ++j) {
      if (sgn((*this)[j]) != 0) mpz_addmul(acc.get_mpz_t(), (*this)[j].get_mpz_t(), out[n - j].get_mpz_t());
    }
    // c0 * out[n] = -acc, and c0 = +-1
    out[n] = c0 == 1 ? mpz_class(-acc) : acc;
  }
  return out;
}

IntSeries IntSeries::truncated(std::int64_t new_order) const {
  detail::require(new_order >= 0 && new_order <= order(), "truncation beyond series order");
  return IntSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

IntSeries pbar_series(std::int64_t n_max) {
  detail::require(n_max >= 0, "pbar_series: n_max must be >= 0");
  IntSeries s = IntSeries::one(n_max);
  for (std::int64_t j = 1; j <= n_max; ++j) {
    // times (1 + q^j), in place from the top
    for (std::int64_t n = n_max; n >= j; --n) s[n] += s[n - j];
    // divided by (1 - q^j), in place from the bottom
    for (std::int64_t n = j; n <= n_max; ++n) s[n] += s[n - j];
  }
  return s;
}

}  // namespace overrank::qseries
