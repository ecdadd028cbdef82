#pragma once

#include <cstdint>
#include <vector>

#include "overrank/arith/arith.hpp"
#include "overrank/num/complex.hpp"

namespace overrank::expsums {

using arith::Fraction;
using ComplexVal = num::Complex;

struct GroupData {
  int k_tilde;       // k mod 2
  std::int64_t d;    // gcd(c, k)
  std::int64_t k1;   // k / d
  std::int64_t c1;   // c / d
  std::int64_t ell;  // a k1 mod c1

  [[nodiscard]] Fraction ratio() const { return Fraction(ell, c1); }
};

GroupData group_data(std::int64_t a, std::int64_t c, std::int64_t k);

/// 0 on (0,1/4], 1 on (1/4,3/4], 2 on (3/4,1).
int s_func(std::int64_t b, std::int64_t c);
/// 1 on (0,1/2), 3 on (1/2,1); b/c = 1/2 is rejected.
int t_func(std::int64_t b, std::int64_t c);

struct DeltaTerm {
  std::int64_t r;
  Fraction delta;
  std::int64_t twice_m;
  bool primed;

  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

/// Every r >= 0 with delta > 0, for c not dividing k and k odd.
std::vector<DeltaTerm> delta_terms(std::int64_t a, std::int64_t c, std::int64_t k, bool primed = false);

/// Options shared by the sums. `hprime_shift` adds a multiple of 2k to every
/// even inverse h' (the sums must not change); used to test well-definedness.
struct SumOptions {
  num::Precision prec = num::kDefaultPrecision;
  std::int64_t hprime_shift = 0;
};

/// B_{a,c,k}(n, m): c | k, k odd.
ComplexVal kloosterman_B(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t m,
                         const SumOptions& options = {});

/// D_{a,c,k}(n, m) with m given as 2m: c does not divide k, k odd, ell/c1 outside (1/4, 3/4].
ComplexVal kloosterman_D(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t twice_m,
                         const SumOptions& options = {});

/// A_{a,c,k}(n, m): c | k, k even.
ComplexVal kloosterman_A(std::int64_t a, std::int64_t c, std::int64_t k, std::int64_t n, std::int64_t m,
                         const SumOptions& options = {});

/// The residues 0 <= h < k coprime to k (just {0} for k = 1).
std::vector<std::int64_t> reduced_residues(std::int64_t k);

}  // namespace overrank::expsums
