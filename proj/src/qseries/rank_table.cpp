#include "overrank/qseries/rank_table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>

#include "overrank/arith/arith.hpp"
#include "overrank/error.hpp"
#include "overrank/qseries/series.hpp"

namespace overrank::qseries {

namespace {

using Triangle = std::vector<std::vector<std::int64_t>>;

// Coefficients of u^m (m >= 0) in the Lambert-series factor of the rank
// generating function, i.e. N̄(m,·) = P̄(q) * R_m(q). R_m[s] is stored as
// lambert[s][m], nonzero only for m <= s.
//   R_0 = 1 + 4 sum_{n>=1} (-1)^n q^{n^2+n} sum_{j>=0} (-1)^j q^{nj}
//   R_m = -2 sum_{n>=1} (-1)^n sum_{j>=0} c_j q^{n^2+nm+nj},  c_0 = 1, c_j = 2(-1)^j
Triangle lambert_triangle(std::int64_t n_max) {
  Triangle r(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t s = 0; s <= n_max; ++s) r[s].assign(static_cast<std::size_t>(s) + 1, 0);
  r[0][0] = 1;
  for (std::int64_t n = 1; n * n + n <= n_max; ++n) {
    const std::int64_t sn = n % 2 == 0 ? 1 : -1;
    for (std::int64_t j = 0; n * n + n + n * j <= n_max; ++j) {
      r[n * n + n + n * j][0] += 4 * sn * (j % 2 == 0 ? 1 : -1);
    }
  }
  for (std::int64_t m = 1; m <= n_max; ++m) {
    for (std::int64_t n = 1; n * n + n * m <= n_max; ++n) {
      const std::int64_t sn = n % 2 == 0 ? 1 : -1;
      for (std::int64_t j = 0; n * n + n * m + n * j <= n_max; ++j) {
        const std::int64_t cj = j == 0 ? 1 : (j % 2 == 0 ? 2 : -2);
        r[n * n + n * m + n * j][m] += -2 * sn * cj;
      }
    }
  }
  return r;
}

// Nonzero terms (d, w_d), d >= 1, of 1/P̄(q) through q^n_max.
std::vector<std::pair<std::int64_t, mpz_class>> sparse_inverse(const IntSeries& pbar) {
  const IntSeries inv = pbar.inverse();
  std::vector<std::pair<std::int64_t, mpz_class>> out;
  for (std::int64_t d = 1; d <= inv.order(); ++d) {
    if (sgn(inv[d]) != 0) out.emplace_back(d, inv[d]);
  }
  return out;
}

// X[s] = R[s] - sum_d w_d X[s-d], the solution of (1/P̄) X = R.
std::vector<std::vector<mpz_class>> solve_exact(const Triangle& lambert,
                                                const std::vector<std::pair<std::int64_t, mpz_class>>& inv) {
  const auto rows = static_cast<std::int64_t>(lambert.size());
  std::vector<std::vector<mpz_class>> x(lambert.size());
  for (std::int64_t s = 0; s < rows; ++s) {
    auto& row = x[s];
    row.resize(static_cast<std::size_t>(s) + 1);
    for (std::int64_t m = 0; m <= s; ++m) row[m] = static_cast<long>(lambert[s][m]);
    for (const auto& [d, w] : inv) {
      if (d > s) break;
      const auto& prev = x[s - d];
      for (std::size_t m = 0; m < prev.size(); ++m) {
        mpz_submul(row[m].get_mpz_t(), w.get_mpz_t(), prev[m].get_mpz_t());
      }
    }
  }
  return x;
}

// ---- multi-modular engine ----

std::vector<std::uint32_t> choose_primes(const mpz_class& bound) {
  std::vector<std::uint32_t> primes;
  mpz_class product = 1;
  mpz_class candidate = (mpz_class(1) << 31) - 1;
  while (product <= bound) {
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
    primes.push_back(static_cast<std::uint32_t>(candidate.get_ui()));
    product *= candidate;
    candidate -= 2;
  }
  return primes;
}

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

struct WeightGroup {
  std::uint32_t magnitude;                // |w| mod p
  std::vector<std::int64_t> add_offsets;  // w < 0: X[s] += |w| X[s-d]
  std::vector<std::int64_t> sub_offsets;  // w > 0: X[s] -= |w| X[s-d]
};

std::vector<WeightGroup> group_weights(const std::vector<std::pair<std::int64_t, mpz_class>>& inv, std::uint32_t p) {
  std::vector<std::pair<mpz_class, WeightGroup>> groups;
  for (const auto& [d, w] : inv) {
    const mpz_class mag = abs(w);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == mag; });
    if (it == groups.end()) {
      groups.push_back({mag, WeightGroup{reduce_mpz(mag, p), {}, {}}});
      it = std::prev(groups.end());
    }
    (sgn(w) < 0 ? it->second.add_offsets : it->second.sub_offsets).push_back(d);
  }
  std::vector<WeightGroup> out;
  for (auto& g : groups) out.push_back(std::move(g.second));
  return out;
}

std::size_t row_offset(std::int64_t s) { return static_cast<std::size_t>(s) * (static_cast<std::size_t>(s) + 1) / 2; }

// Residue triangle mod p, flat, row s at row_offset(s) with s+1 lanes.
std::vector<std::uint32_t> solve_modular(const Triangle& lambert,
                                         const std::vector<std::pair<std::int64_t, mpz_class>>& inv,
                                         std::uint32_t p, const simd::ModKernels& k) {
  const auto rows = static_cast<std::int64_t>(lambert.size());
  std::vector<std::uint32_t> x(row_offset(rows));
  const std::vector<WeightGroup> groups = group_weights(inv, p);
  std::vector<std::uint32_t> combo(static_cast<std::size_t>(rows));
  std::vector<std::uint32_t> scratch(static_cast<std::size_t>(rows));
  for (std::int64_t s = 0; s < rows; ++s) {
    const std::span<std::uint32_t> row(x.data() + row_offset(s), static_cast<std::size_t>(s) + 1);
    for (std::int64_t m = 0; m <= s; ++m) row[m] = reduce_signed(lambert[s][m], p);
    for (const WeightGroup& g : groups) {
      const std::span<std::uint32_t> acc(combo.data(), row.size());
      std::fill(acc.begin(), acc.end(), 0u);
      bool any = false;
      for (std::int64_t d : g.add_offsets) {
        if (d > s) break;
        simd::add_mod(k, acc, std::span<const std::uint32_t>(x.data() + row_offset(s - d), s - d + 1), p);
        any = true;
      }
      for (std::int64_t d : g.sub_offsets) {
        if (d > s) break;
        simd::sub_mod(k, acc, std::span<const std::uint32_t>(x.data() + row_offset(s - d), s - d + 1), p);
        any = true;
      }
      if (any) simd::add_scaled_mod(k, row, acc, g.magnitude, p, scratch);
    }
  }
  return x;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint32_t p) { return a * b % p; }

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  mpz_class inv;
  const mpz_class az = a;
  const mpz_class pz = p;
  mpz_invert(inv.get_mpz_t(), az.get_mpz_t(), pz.get_mpz_t());
  return static_cast<std::uint32_t>(inv.get_ui());
}

using InverseTable = std::vector<std::vector<std::uint32_t>>;

InverseTable garner_inverses(const std::vector<std::uint32_t>& primes) {
  const std::size_t t = primes.size();
  InverseTable inv(t, std::vector<std::uint32_t>(t, 0));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) inv[i][j] = inverse_mod(primes[i] % primes[j], primes[j]);
  return inv;
}

// Garner mixed-radix reconstruction of row s; values lie in [0, prod p).
void crt_row(const std::vector<std::uint32_t>& primes, const InverseTable& inv,
             const std::vector<std::vector<std::uint32_t>>& residues, std::int64_t s,
             std::vector<mpz_class>& row) {
  const std::size_t t = primes.size();
  std::vector<std::uint64_t> v(t);
  row.resize(static_cast<std::size_t>(s) + 1);
  for (std::int64_t m = 0; m <= s; ++m) {
    const std::size_t idx = row_offset(s) + static_cast<std::size_t>(m);
    for (std::size_t j = 0; j < t; ++j) {
      const std::uint32_t pj = primes[j];
      std::uint64_t x = residues[j][idx];
      for (std::size_t i = 0; i < j; ++i) {
        x = (x + pj - v[i] % pj) % pj;
        x = mul_mod(x, inv[i][j], pj);
      }
      v[j] = x;
    }
    mpz_class& value = row[m];
    value = static_cast<unsigned long>(v[t - 1]);
    for (std::size_t j = t - 1; j-- > 0;) {
      mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), primes[j]);
      mpz_add_ui(value.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(v[j]));
    }
  }
}

unsigned resolve_threads(unsigned requested, std::size_t tasks) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

template <typename Fn>
void parallel_for(std::size_t tasks, unsigned threads, Fn fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks; i = next++) fn(i);
    });
  }
}

std::vector<std::vector<mpz_class>> solve_multimodular(const Triangle& lambert,
                                                       const std::vector<std::pair<std::int64_t, mpz_class>>& inv,
                                                       const mpz_class& bound, const TableOptions& options) {
  const simd::ModKernels& k = options.isa ? simd::kernels(*options.isa) : simd::default_kernels();
  // 0 <= N̄(m,n) <= p̄(n); 31 spare bits as margin
  const std::vector<std::uint32_t> primes = choose_primes(bound << 31);
  const unsigned threads = resolve_threads(options.threads, primes.size());
  std::vector<std::vector<std::uint32_t>> residues(primes.size());
  parallel_for(primes.size(), threads, [&](std::size_t i) { residues[i] = solve_modular(lambert, inv, primes[i], k); });

  const auto rows = static_cast<std::int64_t>(lambert.size());
  std::vector<std::vector<mpz_class>> out(lambert.size());
  const InverseTable inv_table = garner_inverses(primes);
  const std::size_t chunks = std::max<std::size_t>(1, threads);
  parallel_for(chunks, threads, [&](std::size_t c) {
    // interleaved rows keep the chunks balanced
    for (std::int64_t s = static_cast<std::int64_t>(c); s < rows; s += static_cast<std::int64_t>(chunks))
      crt_row(primes, inv_table, residues, s, out[s]);
  });
  return out;
}

}  // namespace

RankTable::RankTable(std::int64_t n_max, std::vector<std::vector<mpz_class>> rows)
    : n_max_(n_max), rows_(std::move(rows)) {
  detail::require(n_max_ >= 0, "rank table n_max must be >= 0");
  detail::require(rows_.size() == static_cast<std::size_t>(n_max_) + 1, "rank table needs n_max+1 rows");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    detail::require(rows_[n].size() == n + 1, "rank table row " + std::to_string(n) + " must hold n+1 entries");
  }
}

const mpz_class& RankTable::count(std::int64_t m, std::int64_t n) const {
  static const mpz_class zero(0);
  detail::require(n >= 0 && n <= n_max_, "rank table: n out of range");
  const std::int64_t am = m < 0 ? -m : m;
  if (am > n) return zero;
  return rows_[n][am];
}

std::span<const mpz_class> RankTable::row(std::int64_t n) const {
  detail::require(n >= 0 && n <= n_max_, "rank table: n out of range");
  return rows_[n];
}

mpz_class RankTable::row_total(std::int64_t n) const {
  const auto r = row(n);
  mpz_class total = r[0];
  for (std::size_t m = 1; m < r.size(); ++m) total += 2 * r[m];
  return total;
}

void RankTable::validate() const {
  const IntSeries pbar = pbar_series(n_max_);
  if (rows_[0][0] != 1) throw ConsistencyError("rank table: N̄(0,0) != 1");
  for (std::int64_t n = 0; n <= n_max_; ++n) {
    const auto& r = rows_[n];
    for (std::size_t m = 0; m < r.size(); ++m) {
      if (sgn(r[m]) < 0) throw ConsistencyError("rank table: negative count at n=" + std::to_string(n));
    }
    if (n >= 1 && sgn(r[n]) != 0) throw ConsistencyError("rank table: nonzero count at |m| >= n, n=" + std::to_string(n));
    if (row_total(n) != pbar[n]) throw ConsistencyError("rank table: row total != p̄(n) at n=" + std::to_string(n));
  }
}

RankTable RankTable::truncated(std::int64_t n) const {
  detail::require(n >= 0 && n <= n_max_, "rank table truncation out of range");
  return RankTable(n, std::vector<std::vector<mpz_class>>(rows_.begin(), rows_.begin() + n + 1));
}

RankTable rank_table(std::int64_t n_max, const TableOptions& options) {
  detail::require(n_max >= 0, "rank_table: n_max must be >= 0");
  const IntSeries pbar = pbar_series(n_max);
  const Triangle lambert = lambert_triangle(n_max);
  const auto inv = sparse_inverse(pbar);
  auto rows = options.engine == TableEngine::Exact ? solve_exact(lambert, inv)
                                                   : solve_multimodular(lambert, inv, pbar[n_max], options);
  RankTable table(n_max, std::move(rows));
  table.validate();
  return table;
}

mpz_class rank_class(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t) {
  detail::require(c >= 1, "rank_class: c must be >= 1");
  detail::require(a >= 0 && a < c, "rank_class: need 0 <= a < c");
  detail::require(n >= 0 && n <= t.n_max(), "rank_class: n outside the table range");
  mpz_class total(0);
  for (std::int64_t m = -n; m <= n; ++m) {
    if (arith::mod_floor(m, c) == a) total += t.count(m, n);
  }
  return total;
}

std::vector<mpz_class> rank_classes(std::int64_t c, std::int64_t n, const RankTable& t) {
  detail::require(c >= 1, "rank_classes: c must be >= 1");
  detail::require(n >= 0 && n <= t.n_max(), "rank_classes: n outside the table range");
  std::vector<mpz_class> out(static_cast<std::size_t>(c), mpz_class(0));
  for (std::int64_t m = -n; m <= n; ++m) out[arith::mod_floor(m, c)] += t.count(m, n);
  return out;
}

}  // namespace overrank::qseries
