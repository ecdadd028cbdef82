#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace overrank::qseries {

inline constexpr int kEnumerationCap = 30;

/// Parts in non-increasing order; `overlined` holds the distinct part values
/// whose first occurrence carries an overline, in decreasing order.
struct Overpartition {
  std::vector<int> parts;
  std::vector<int> overlined;

  [[nodiscard]] int size() const;
  [[nodiscard]] bool is_overlined(int value) const;
  /// Throws PreconditionError if the invariants do not hold.
  void check() const;
  /// e.g. "3'+1+1" with a trailing quote marking an overlined part; "()" when empty.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Overpartition&, const Overpartition&) = default;
  friend auto operator<=>(const Overpartition&, const Overpartition&) = default;
};

/// Every overpartition of n, in a canonical order. Refuses n > cap.
std::vector<Overpartition> enumerate_overpartitions(int n, int cap = kEnumerationCap);

/// Largest part minus number of parts; 0 for the empty overpartition.
int rank(const Overpartition& op);

}  // namespace overrank::qseries
