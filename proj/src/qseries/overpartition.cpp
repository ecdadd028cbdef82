#include "overrank/qseries/overpartition.hpp"

#include <algorithm>
#include <numeric>

#include "overrank/error.hpp"

namespace overrank::qseries {

int Overpartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Overpartition::is_overlined(int value) const {
  return std::find(overlined.begin(), overlined.end(), value) != overlined.end();
}

void Overpartition::check() const {
  detail::require(std::is_sorted(parts.rbegin(), parts.rend()), "overpartition parts must be non-increasing");
  detail::require(std::all_of(parts.begin(), parts.end(), [](int p) { return p > 0; }),
                  "overpartition parts must be positive");
  for (std::size_t i = 0; i < overlined.size(); ++i) {
    detail::require(std::find(parts.begin(), parts.end(), overlined[i]) != parts.end(),
                    "overlined value must occur among the parts");
    detail::require(i == 0 || overlined[i] < overlined[i - 1], "overlined values must be distinct and decreasing");
  }
}

std::string Overpartition::to_string() const {
  if (parts.empty()) return "()";
  std::string out;
  int previous = 0;
  for (int p : parts) {
    if (!out.empty()) out += '+';
    out += std::to_string(p);
    if (p != previous && is_overlined(p)) out += '\'';
    previous = p;
  }
  return out;
}

namespace {

// Distinct values are chosen in decreasing order; each value gets a
// multiplicity and, when present, an optional overline on its first copy.
void extend(int remaining, int max_value, Overpartition& current, std::vector<Overpartition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int v = std::min(remaining, max_value); v >= 1; --v) {
    for (int mult = remaining / v; mult >= 1; --mult) {
      for (int bar = 1; bar >= 0; --bar) {
        current.parts.insert(current.parts.end(), static_cast<std::size_t>(mult), v);
        if (bar) current.overlined.push_back(v);
        extend(remaining - mult * v, v - 1, current, out);
        if (bar) current.overlined.pop_back();
        current.parts.resize(current.parts.size() - static_cast<std::size_t>(mult));
      }
    }
  }
}

}  // namespace

std::vector<Overpartition> enumerate_overpartitions(int n, int cap) {
  detail::require(n >= 0, "enumerate_overpartitions: n must be >= 0");
  detail::require(n <= cap, "enumerate_overpartitions: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(cap));
  std::vector<Overpartition> out;
  Overpartition current;
  extend(n, n, current, out);
  return out;
}

int rank(const Overpartition& op) {
  if (op.parts.empty()) return 0;
  return op.parts.front() - static_cast<int>(op.parts.size());
}

}  // namespace overrank::qseries
