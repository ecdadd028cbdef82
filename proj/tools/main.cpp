#include <cmath>
#include <iostream>

#include "cli_common.hpp"
#include "overrank/error.hpp"
#include "overrank/io/table_io.hpp"
#include "overrank/simd/kernels.hpp"

namespace overrank::cli {

void check_cap(const Config& cfg, std::int64_t n_max) {
  detail::require(n_max >= 0, "n must be >= 0");
  if (n_max > qseries::kDefaultTableCap && !cfg.force) {
    throw PreconditionError("n_max " + std::to_string(n_max) + " exceeds " +
                            std::to_string(qseries::kDefaultTableCap) + "; pass --force");
  }
}

qseries::RankTable table_for(const Config& cfg, std::int64_t n_max) {
  check_cap(cfg, n_max);
  qseries::TableOptions opts;
  opts.threads = cfg.threads;
  if (cfg.isa != "auto") {
    const simd::Isa isa = simd::parse_isa(cfg.isa);
    detail::require(simd::isa_available(isa), "--isa " + cfg.isa + " is not available on this machine");
    opts.isa = isa;
  }
  if (cfg.no_cache) {
    qseries::RankTable t = qseries::rank_table(n_max, opts);
    t.validate();
    return t;
  }
  std::optional<std::filesystem::path> dir;
  if (!cfg.cache.empty()) dir = cfg.cache;
  return io::TableCache(io::TableCache::resolve(dir)).get_or_build(n_max, opts);
}

Format format_of(const Config& cfg) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  return Format::Text;
}

int digits(num::Precision prec) {
  return std::max(10, static_cast<int>(std::floor(static_cast<double>(prec) * 0.30102999566398120)) - 2);
}

std::string str(const num::Real& x, const Config& cfg) { return x.to_string(digits(cfg.prec)); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void csv_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << fields[i];
  }
  std::cout << '\n';
}

}  // namespace overrank::cli

int main(int argc, char** argv) {
  using namespace overrank::cli;
  CLI::App app{"overrank: exact and asymptotic overpartition rank statistics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "overrank 1.0.0");

  Config cfg;
  app.add_option("--prec", cfg.prec, "working precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", cfg.cache, "rank table cache directory (default: $OVERRANK_CACHE or ~/.cache/overrank)");
  app.add_flag("--no-cache", cfg.no_cache, "build tables in memory only");
  app.add_option("--threads", cfg.threads, "worker threads, 0 = all cores");
  app.add_flag("--force", cfg.force, "allow n above 2500");
  app.add_option("--isa", cfg.isa, "kernel variant for table builds")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  int rc = kPass;
  register_exact(app, cfg, rc);
  register_analytic(app, cfg, rc);
  register_bounds(app, cfg, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  } catch (const overrank::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const overrank::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kInternal;
  } catch (const overrank::FormatError& e) {
    std::cerr << "bad data: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return rc;
}
