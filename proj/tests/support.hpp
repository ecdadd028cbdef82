#pragma once

#include <stdexcept>

#include "overrank/qseries/rank_table.hpp"

namespace overrank::testing {

/// One table shared across the unit suites.
inline const qseries::RankTable& shared_table(std::int64_t n_max) {
  static const qseries::RankTable t = qseries::rank_table(2000);
  return n_max <= t.n_max() ? t : throw std::out_of_range("shared table too small");
}

}  // namespace overrank::testing
