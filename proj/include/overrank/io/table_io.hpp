#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "overrank/qseries/rank_table.hpp"

namespace overrank::io {

/// Little-endian binary: "OVRKTBL1", i64 n_max, then per entry a sign byte,
/// u32 byte length and big-endian magnitude bytes.
void write_binary(std::ostream& os, const qseries::RankTable& t);
qseries::RankTable read_binary(std::istream& is);

/// Header "n,m,count", one line per 0 <= m <= n, decimal integers.
void write_csv(std::ostream& os, const qseries::RankTable& t);
qseries::RankTable read_csv(std::istream& is);

/// {"format_version": 1, "n_max": N, "rows": [[[m, "count"], ...], ...]},
/// m >= 0, counts as decimal strings.
void write_json(std::ostream& os, const qseries::RankTable& t);
qseries::RankTable read_json(std::istream& is);

inline constexpr int kJsonFormatVersion = 1;

/// Write-once directory of ranks_<n_max>.bin files.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  /// explicit_dir if given, else OVERRANK_CACHE, else the user cache directory.
  static std::filesystem::path resolve(const std::optional<std::filesystem::path>& explicit_dir);

  [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }

  /// Smallest cached table covering n_max, truncated to n_max.
  [[nodiscard]] std::optional<qseries::RankTable> load(std::int64_t n_max) const;
  /// Stores t unless a file for t.n_max() already exists.
  void store(const qseries::RankTable& t) const;
  /// load(), else build with `options`, validate, store.
  qseries::RankTable get_or_build(std::int64_t n_max, const qseries::TableOptions& options = {}) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace overrank::io
