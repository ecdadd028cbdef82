#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "overrank/expsums/expsums.hpp"
#include "overrank/num/complex.hpp"
#include "overrank/qseries/rank_table.hpp"

namespace overrank::asymptotic {

using arith::Fraction;
using expsums::ComplexVal;

enum class TermKind { B, D };

struct EstimateTerm {
  TermKind kind;
  std::int64_t k;
  std::int64_t r;        // 0 for B terms
  Fraction delta;        // 1/16 for B terms (sinh argument pi sqrt(n)/k)
  std::int64_t twice_m;  // 0 for B terms
  ComplexVal contribution;
};

struct Estimate {
  ComplexVal value;
  std::vector<EstimateTerm> terms;  // k ascending, then r
  std::int64_t n;
  std::int64_t k_max;  // floor(sqrt n)
  std::int64_t a;
  std::int64_t c;
  num::Precision precision;  // working precision actually used
};

/// Working precision for n: at least prec, and enough to absorb cancellation
/// between terms of size e^{pi sqrt n}.
num::Precision working_precision(std::int64_t n, num::Precision prec);

/// The B-sum plus D-sum asymptotic for A(a/c; n), truncated at k <= sqrt n.
Estimate estimate_A(std::int64_t a, std::int64_t c, std::int64_t n, num::Precision prec = num::kDefaultPrecision);

/// Term of largest magnitude; empty when the estimate has no terms.
std::optional<EstimateTerm> main_term(std::int64_t a, std::int64_t c, std::int64_t n,
                                      num::Precision prec = num::kDefaultPrecision);
std::optional<EstimateTerm> main_term(const Estimate& e);

/// Default truncation 5 * ceil(sqrt n) for the convergent p̄(n) series.
std::int64_t default_kcap(std::int64_t n);

/// Convergent series for p̄(n) truncated at odd k <= k_cap.
num::Real zuckerman_pbar(std::int64_t n, std::int64_t k_cap, num::Precision prec = num::kDefaultPrecision);

struct EquidistributionRatio {
  std::int64_t a;
  Fraction ratio;  // c * N̄(a,c,n) / p̄(n)
  double value;
};

std::vector<EquidistributionRatio> equidistribution_report(std::int64_t c, std::int64_t n,
                                                           const qseries::RankTable& t);

}  // namespace overrank::asymptotic
