#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "overrank/arith/arith.hpp"
#include "overrank/num/real.hpp"
#include "overrank/qseries/rank_table.hpp"

namespace overrank::bounds {

using arith::Fraction;

/// Which explicit bound suite: the mod-10 one (sides a = 1, 3) or its mod-6
/// analogue (side a = 1).
enum class Family { C10, C6 };

std::string_view family_name(Family f);

/// sum_{r>=1} e^{pi sqrt r - pi scale r}, scale > 0.
num::Real coeff_sum(const Fraction& scale, num::Precision prec = num::kDefaultPrecision);

struct BoundComponent {
  std::string name;
  num::Real value;
};

struct BoundSide {
  std::int64_t a;
  std::vector<std::int64_t> residues;      // k classes mod c
  std::vector<BoundComponent> components;  // fixed order, see component_names()
  num::Real total;
};

struct BoundReport {
  std::int64_t n;
  Family family;
  num::Real main;
  std::vector<BoundSide> sides;
  num::Real total;
  bool dominated;  // main > total
};

/// tail, coeff_U, sym_path, small_arc, O_series, O_half, mordell_odd, mordell_even.
const std::vector<std::string>& component_names();

BoundReport bound_report(std::int64_t n, Family family = Family::C10,
                         num::Precision prec = num::kDefaultPrecision);

/// Plain-text description of how main and the per-side components are built.
std::string bound_assembly(Family family);

struct CrossoverResult {
  bool found = false;
  std::int64_t n0 = 0;          // first n with dominance holding on all of [n0, 4 n0]
  std::int64_t checked_to = 0;  // 4 n0 when found, else the cap
  std::vector<std::int64_t> rejected;  // earlier candidates whose [n, 4n] check failed
  std::string assembly;
};

inline constexpr std::int64_t kCrossoverCap = 1'000'000;

/// Smallest n0 with bound_report(n).dominated for every n in [n0, 4 n0] and
/// not at n0 - 1. Every n in the window is evaluated, nothing is assumed
/// monotone. found = false if no such n0 <= cap exists.
CrossoverResult crossover(Family family = Family::C10, num::Precision prec = num::kDefaultPrecision,
                          std::int64_t cap = kCrossoverCap);

struct IdentityCheck {
  bool holds = true;
  std::optional<std::int64_t> witness;  // first n that failed
  std::int64_t n_max = 0;
  explicit operator bool() const { return holds; }
};

/// O(zeta_10^a; q) against the rank-difference decomposition, a in {1,3,7,9}.
IdentityCheck zeta_relation_10(std::int64_t a, std::int64_t n_max, const qseries::RankTable& t);
/// O(zeta_6^a; q) against N̄(0)+N̄(1)-N̄(2)-N̄(3) (mod 6), a in {1,5}.
IdentityCheck zeta_relation_6(std::int64_t a, std::int64_t n_max, const qseries::RankTable& t);
/// 6 N̄(r,6,n) for r = 0..3 as combinations of O(zeta_6^j; q), j = 0..3.
IdentityCheck mao_decomposition(std::int64_t n_max, const qseries::RankTable& t);

enum class Relation { GE, LE, EQ };

/// One (in)equality chain: sums over residue sets, compared left to right.
struct InequalitySpec {
  std::string id;
  std::vector<std::string> aliases;
  std::int64_t c;
  std::optional<int> residue3;  // restrict to n = 3j + residue3
  std::int64_t min_index;       // j >= min_index under the residue filter
  std::vector<std::vector<std::int64_t>> terms;
  std::vector<Relation> relations;  // terms.size() - 1 entries
  Family bound_family;
  bool conjecture = false;
  [[nodiscard]] std::string statement() const;
};

const std::vector<InequalitySpec>& inequality_specs();
/// Lookup by id or alias; throws PreconditionError for an unknown id.
const InequalitySpec& find_inequality(std::string_view id);

/// Whether the chain holds for the class counts of one n.
bool chain_holds(const InequalitySpec& spec, std::int64_t n, const qseries::RankTable& t);

struct InequalityReport {
  std::string id;
  std::int64_t n_lo;
  std::int64_t n_hi;
  std::int64_t checked;  // n values inside the filters
  std::vector<std::int64_t> violations;
  std::optional<std::int64_t> crossover_used;
  std::string bound_assembly;
  [[nodiscard]] bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  unsigned threads = 1;  // 0 = hardware
  /// Crossover of the spec's bound family, reported alongside; computed if unset
  /// and compute_crossover is true.
  std::optional<std::int64_t> crossover;
  bool compute_crossover = false;
  num::Precision prec = num::kDefaultPrecision;
};

InequalityReport verify_inequality(std::string_view id, std::int64_t n_lo, std::int64_t n_hi,
                                   const qseries::RankTable& t, const VerifyOptions& options = {});

}  // namespace overrank::bounds
