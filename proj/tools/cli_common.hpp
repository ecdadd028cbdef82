#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "overrank/num/real.hpp"
#include "overrank/qseries/rank_table.hpp"

namespace overrank::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2, kInternal = 3 };

struct Config {
  num::Precision prec = 128;
  std::string format = "text";
  std::string cache;  // empty: $OVERRANK_CACHE or the user cache directory
  bool no_cache = false;
  unsigned threads = 0;
  bool force = false;
  std::string isa = "auto";
};

Format format_of(const Config& cfg);

/// Exact table for 0..n_max, through the cache unless disabled.
qseries::RankTable table_for(const Config& cfg, std::int64_t n_max);

/// Enforces the n_max <= 2500 limit unless --force.
void check_cap(const Config& cfg, std::int64_t n_max);

/// Significant decimal digits printed for a given precision.
int digits(num::Precision prec);

std::string str(const num::Real& x, const Config& cfg);

void emit(const Json& j);

/// One CSV line; fields are written as-is.
void csv_row(const std::vector<std::string>& fields);

/// Subcommand registration; the callback stores its exit status in rc.
void register_exact(CLI::App& app, Config& cfg, int& rc);
void register_analytic(CLI::App& app, Config& cfg, int& rc);
void register_bounds(CLI::App& app, Config& cfg, int& rc);

}  // namespace overrank::cli
