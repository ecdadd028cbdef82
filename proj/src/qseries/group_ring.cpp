#include "overrank/qseries/group_ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "overrank/arith/arith.hpp"
#include "overrank/error.hpp"

namespace overrank::qseries {

namespace {

using Poly = std::vector<mpz_class>;

// Exact quotient of num by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, mpz_class(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class coef = num[i];
    q[i - dn] = coef;
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= coef * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (sgn(num[i]) != 0) throw ConsistencyError("cyclotomic division left a remainder");
  }
  return q;
}

// Remainder of p modulo a monic polynomial.
Poly reduce_monic(Poly p, const Poly& mod) {
  const std::size_t dm = mod.size() - 1;
  for (std::size_t i = p.size(); i-- > dm;) {
    const mpz_class coef = p[i];
    if (sgn(coef) == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= coef * mod[j];
  }
  p.resize(std::min(p.size(), dm));
  p.resize(dm, mpz_class(0));
  return p;
}

std::int64_t bit_length(const mpz_class& v) {
  return sgn(v) == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::int64_t c) {
  detail::require(c >= 1, "cyclotomic_polynomial: c must be >= 1");
  static std::mutex mutex;
  static std::map<std::int64_t, Poly> cache;
  {
    const std::lock_guard lock(mutex);
    if (auto it = cache.find(c); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(c) + 1, mpz_class(0));
  p[0] = -1;
  p[c] = 1;
  for (std::int64_t d = 1; d < c; ++d) {
    if (c % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  const std::lock_guard lock(mutex);
  cache.emplace(c, p);
  return p;
}

GroupRingElt::GroupRingElt(std::int64_t c) : c_(c) {
  detail::require(c >= 1, "group ring modulus must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(c), mpz_class(0));
}

GroupRingElt::GroupRingElt(std::int64_t c, std::vector<mpz_class> coeffs) : c_(c), coeffs_(std::move(coeffs)) {
  detail::require(c >= 1, "group ring modulus must be >= 1");
  detail::require(coeffs_.size() == static_cast<std::size_t>(c), "group ring element needs exactly c coefficients");
}

GroupRingElt GroupRingElt::scalar(std::int64_t c, const mpz_class& v) {
  GroupRingElt out(c);
  out.coeffs_[0] = v;
  return out;
}

GroupRingElt GroupRingElt::basis(std::int64_t c, std::int64_t j) {
  GroupRingElt out(c);
  out.coeffs_[arith::mod_floor(j, c)] = 1;
  return out;
}

const mpz_class& GroupRingElt::operator[](std::int64_t j) const { return coeffs_[arith::mod_floor(j, c_)]; }

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& rhs) {
  detail::require(c_ == rhs.c_, "group ring moduli differ");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& rhs) {
  detail::require(c_ == rhs.c_, "group ring moduli differ");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const GroupRingElt& rhs) {
  detail::require(c_ == rhs.c_, "group ring moduli differ");
  std::vector<mpz_class> out(coeffs_.size(), mpz_class(0));
  const auto c = static_cast<std::size_t>(c_);
  for (std::size_t i = 0; i < c; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < c; ++j) {
      mpz_addmul(out[(i + j) % c].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

GroupRingElt& GroupRingElt::operator*=(const mpz_class& rhs) {
  for (auto& v : coeffs_) v *= rhs;
  return *this;
}

GroupRingElt GroupRingElt::shifted(std::int64_t j) const {
  GroupRingElt out(c_);
  for (std::int64_t i = 0; i < c_; ++i) out.coeffs_[arith::mod_floor(i + j, c_)] = coeffs_[i];
  return out;
}

std::vector<mpz_class> GroupRingElt::reduced() const { return reduce_monic(coeffs_, cyclotomic_polynomial(c_)); }

bool GroupRingElt::same_value(const GroupRingElt& other) const {
  detail::require(c_ == other.c_, "group ring moduli differ");
  return (*this - other).reduced() == std::vector<mpz_class>(reduced().size(), mpz_class(0));
}

bool GroupRingElt::value_is_integer(mpz_class* out) const {
  const auto r = reduced();
  if (!std::all_of(r.begin() + 1, r.end(), [](const mpz_class& v) { return sgn(v) == 0; })) return false;
  if (out != nullptr) *out = r[0];
  return true;
}

num::Complex GroupRingElt::evaluate(num::Precision prec) const {
  std::int64_t bits = 0;
  for (const auto& v : coeffs_) bits = std::max(bits, bit_length(v));
  // headroom for cancellation between large coefficients
  const num::Precision wp = prec + bits + 32;
  num::Real re(wp);
  num::Real im(wp);
  for (std::int64_t j = 0; j < c_; ++j) {
    if (sgn(coeffs_[j]) == 0) continue;
    const mpq_class t = arith::make_fraction(2 * j, c_);
    const num::Real v(coeffs_[j], wp);
    re += v * num::cos_pi(t, wp);
    im += v * num::sin_pi(t, wp);
  }
  re.set_precision(prec);
  im.set_precision(prec);
  return num::Complex(re, im);
}

std::string GroupRingElt::to_string() const {
  std::string out = "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ",";
    out += coeffs_[j].get_str();
  }
  return out + "]";
}

GroupRingElt zeta_element(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t) {
  detail::require(c >= 1, "zeta_element: c must be >= 1");
  detail::require(n >= 0 && n <= t.n_max(), "zeta_element: n outside the table range");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(c), mpz_class(0));
  for (std::int64_t m = -n; m <= n; ++m) coeffs[arith::mod_floor(a * m, c)] += t.count(m, n);
  return GroupRingElt(c, std::move(coeffs));
}

ZetaValue zeta_eval(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t, num::Precision prec) {
  detail::require(c >= 2 && a > 0 && a < c, "zeta_eval: need 0 < a < c");
  detail::require(arith::gcd(a, c) == 1, "zeta_eval: gcd(a,c) must be 1");
  GroupRingElt exact = zeta_element(a, c, n, t);
  const num::Complex z = exact.evaluate(prec);
  return ZetaValue{std::move(exact), z.re(), num::abs(z.im())};
}

mpz_class orthogonality_decompose(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t) {
  detail::require(c >= 1 && a >= 0 && a < c, "orthogonality_decompose: need 0 <= a < c");
  detail::require(n >= 0 && n <= t.n_max(), "orthogonality_decompose: n outside the table range");
  // j = 0 term is p̄(n); the rest are O(zeta^j; q) coefficients twisted by zeta^{-aj}
  GroupRingElt total = GroupRingElt::scalar(c, t.row_total(n));
  for (std::int64_t j = 1; j < c; ++j) total += zeta_element(j, c, n, t).shifted(-a * j);
  mpz_class value;
  if (!total.value_is_integer(&value)) {
    throw ConsistencyError("orthogonality_decompose: value is not rational at n=" + std::to_string(n));
  }
  if (!mpz_divisible_ui_p(value.get_mpz_t(), static_cast<unsigned long>(c))) {
    throw ConsistencyError("orthogonality_decompose: value not divisible by c at n=" + std::to_string(n));
  }
  return value / c;
}

}  // namespace overrank::qseries
