#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "overrank/simd/kernels.hpp"

namespace overrank::qseries {

inline constexpr std::int64_t kDefaultTableCap = 2500;

enum class TableEngine {
  Exact,    ///< big-integer recurrence, the reference
  Modular,  ///< u32 residues per prime with SIMD kernels, CRT-lifted
};

struct TableOptions {
  TableEngine engine = TableEngine::Modular;
  /// Kernel variant for the modular engine; unset means simd::default_kernels().
  std::optional<simd::Isa> isa;
  /// Worker threads for the modular engine (one prime per task); 0 = hardware.
  unsigned threads = 0;
};

/// Exact counts N̄(m,n) for 0 <= n <= n_max, stored for m >= 0 only.
class RankTable {
 public:
  /// Rows indexed by n; row n holds N̄(0,n), ..., N̄(n,n).
  RankTable(std::int64_t n_max, std::vector<std::vector<mpz_class>> rows);

  [[nodiscard]] std::int64_t n_max() const { return n_max_; }
  /// N̄(m,n) for any integer m (symmetric in m).
  [[nodiscard]] const mpz_class& count(std::int64_t m, std::int64_t n) const;
  [[nodiscard]] std::span<const mpz_class> row(std::int64_t n) const;
  /// Sum over all m of N̄(m,n).
  [[nodiscard]] mpz_class row_total(std::int64_t n) const;

  /// Checks symmetry-free invariants against pbar_series: row totals,
  /// nonnegativity, vanishing for |m| >= n >= 1, and N̄(0,0) = 1.
  /// Throws ConsistencyError on failure.
  void validate() const;

  /// Table restricted to n <= n.
  [[nodiscard]] RankTable truncated(std::int64_t n) const;

  friend bool operator==(const RankTable& a, const RankTable& b) { return a.rows_ == b.rows_; }

 private:
  std::int64_t n_max_;
  std::vector<std::vector<mpz_class>> rows_;
};

RankTable rank_table(std::int64_t n_max, const TableOptions& options = {});

/// N̄(a,c,n): sum of N̄(m,n) over m = a (mod c).
mpz_class rank_class(std::int64_t a, std::int64_t c, std::int64_t n, const RankTable& t);

/// All classes a = 0..c-1 at once.
std::vector<mpz_class> rank_classes(std::int64_t c, std::int64_t n, const RankTable& t);

}  // namespace overrank::qseries
