#include <memory>

#include "cli_common.hpp"
#include "overrank/asymptotic/asymptotic.hpp"
#include "overrank/bounds/bounds.hpp"
#include "overrank/error.hpp"
#include "overrank/io/table_io.hpp"
#include "overrank/qseries/group_ring.hpp"
#include "overrank/qseries/overpartition.hpp"
#include "overrank/qseries/series.hpp"

namespace overrank::cli {

namespace {

Json str_array(std::span<const mpz_class> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string tuple_str(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

int run_pbar(const Config& cfg, std::int64_t n, bool zuckerman, std::int64_t kcap) {
  check_cap(cfg, n);
  const qseries::IntSeries p = qseries::pbar_series(n);
  if (!zuckerman) {
    switch (format_of(cfg)) {
      case Format::Json:
        emit(Json{{"n", n}, {"pbar", str_array(p.coeffs())}});
        break;
      case Format::Csv:
        csv_row({"n", "pbar"});
        for (std::int64_t i = 0; i <= n; ++i) csv_row({std::to_string(i), p[i].get_str()});
        break;
      case Format::Text: {
        std::string line;
        for (std::int64_t i = 0; i <= n; ++i) line += (i ? "," : "") + p[i].get_str();
        std::cout << line << '\n';
      }
    }
    return kPass;
  }
  detail::require(n >= 1, "--zuckerman needs n >= 1");
  if (kcap == 0) kcap = asymptotic::default_kcap(n);
  const num::Real z = asymptotic::zuckerman_pbar(n, kcap, cfg.prec);
  const mpz_class rounded = z.round_to_integer();
  const bool match = rounded == p[n];
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"n", n},
                {"kcap", kcap},
                {"value", str(z, cfg)},
                {"rounded", rounded.get_str()},
                {"exact", p[n].get_str()},
                {"match", match}});
      break;
    case Format::Csv:
      csv_row({"n", "kcap", "value", "rounded", "exact", "match"});
      csv_row({std::to_string(n), std::to_string(kcap), str(z, cfg), rounded.get_str(), p[n].get_str(),
               match ? "true" : "false"});
      break;
    case Format::Text:
      std::cout << "n=" << n << " kcap=" << kcap << '\n'
                << "series=" << str(z, cfg) << '\n'
                << "rounded=" << rounded.get_str() << '\n'
                << "exact=" << p[n].get_str() << '\n'
                << "match=" << (match ? "true" : "false") << '\n';
  }
  return match ? kPass : kViolation;
}

int run_ranks(const Config& cfg, std::int64_t n_max) {
  const qseries::RankTable t = table_for(cfg, n_max);
  switch (format_of(cfg)) {
    case Format::Csv:
      io::write_csv(std::cout, t);
      break;
    case Format::Json:
      io::write_json(std::cout, t);
      break;
    case Format::Text:
      for (std::int64_t n = 0; n <= n_max; ++n) {
        std::cout << n << ':';
        for (std::int64_t m = -n; m <= n; ++m) std::cout << ' ' << t.count(m, n).get_str();
        std::cout << '\n';
      }
  }
  return kPass;
}

int run_classes(const Config& cfg, std::int64_t c, std::int64_t n_max) {
  detail::require(c >= 1, "c must be >= 1");
  const qseries::RankTable t = table_for(cfg, n_max);
  switch (format_of(cfg)) {
    case Format::Csv: {
      std::vector<std::string> head{"n"};
      for (std::int64_t a = 0; a < c; ++a) head.push_back("a" + std::to_string(a));
      csv_row(head);
      for (std::int64_t n = 0; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& v : qseries::rank_classes(c, n, t)) row.push_back(v.get_str());
        csv_row(row);
      }
      break;
    }
    case Format::Json: {
      Json rows = Json::array();
      for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto cl = qseries::rank_classes(c, n, t);
        rows.push_back(Json{{"n", n}, {"classes", str_array(cl)}});
      }
      emit(Json{{"c", c}, {"n_max", n_max}, {"rows", std::move(rows)}});
      break;
    }
    case Format::Text:
      for (std::int64_t n = 0; n <= n_max; ++n) {
        std::cout << "n=" << n << ": " << tuple_str(qseries::rank_classes(c, n, t)) << '\n';
      }
  }
  return kPass;
}

int run_eval_zeta(const Config& cfg, std::int64_t a, std::int64_t c, std::int64_t n) {
  const qseries::RankTable t = table_for(cfg, n);
  const qseries::ZetaValue z = qseries::zeta_eval(a, c, n, t, cfg.prec);
  mpz_class exact_int;
  const bool is_int = z.exact.value_is_integer(&exact_int);
  const std::string value = is_int ? exact_int.get_str() : str(z.value, cfg);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"a", a},
                {"c", c},
                {"n", n},
                {"exact", str_array(z.exact.coeffs())},
                {"value", str(z.value, cfg)},
                {"integer", is_int ? Json(exact_int.get_str()) : Json(nullptr)},
                {"imag_residual", str(z.imag_residual, cfg)}});
      break;
    case Format::Csv:
      csv_row({"a", "c", "n", "value", "integer"});
      csv_row({std::to_string(a), std::to_string(c), std::to_string(n), str(z.value, cfg),
               is_int ? exact_int.get_str() : ""});
      break;
    case Format::Text:
      std::cout << value << '\n' << "exact " << z.exact.to_string() << '\n';
  }
  return kPass;
}

int run_enumerate(const Config& cfg, int n) {
  const auto ops = qseries::enumerate_overpartitions(n);
  switch (format_of(cfg)) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& op : ops) arr.push_back(Json{{"overpartition", op.to_string()}, {"rank", qseries::rank(op)}});
      emit(Json{{"n", n}, {"count", ops.size()}, {"overpartitions", std::move(arr)}});
      break;
    }
    case Format::Csv:
      csv_row({"overpartition", "rank"});
      for (const auto& op : ops) csv_row({op.to_string(), std::to_string(qseries::rank(op))});
      break;
    case Format::Text:
      for (const auto& op : ops) std::cout << op.to_string() << "  rank " << qseries::rank(op) << '\n';
  }
  return kPass;
}

int run_identities(const Config& cfg, std::int64_t n_max) {
  const qseries::RankTable t = table_for(cfg, n_max);
  std::vector<std::pair<std::string, bounds::IdentityCheck>> checks;
  for (std::int64_t a : {1, 3, 7, 9}) checks.emplace_back("zeta10 a=" + std::to_string(a), bounds::zeta_relation_10(a, n_max, t));
  for (std::int64_t a : {1, 5}) checks.emplace_back("zeta6 a=" + std::to_string(a), bounds::zeta_relation_6(a, n_max, t));
  checks.emplace_back("mod6 classes", bounds::mao_decomposition(n_max, t));
  for (std::int64_t c : {3, 6, 10}) {
    bounds::IdentityCheck chk{true, std::nullopt, n_max};
    for (std::int64_t n = 0; n <= n_max && chk.holds; ++n) {
      for (std::int64_t a = 0; a < c; ++a) {
        if (qseries::orthogonality_decompose(a, c, n, t) != qseries::rank_class(a, c, n, t)) {
          chk = bounds::IdentityCheck{false, n, n_max};
          break;
        }
      }
    }
    checks.emplace_back("orthogonality c=" + std::to_string(c), chk);
  }
  bool all = true;
  Json arr = Json::array();
  for (const auto& [name, chk] : checks) {
    all = all && chk.holds;
    arr.push_back(Json{{"identity", name}, {"holds", chk.holds}, {"witness", chk.witness ? Json(*chk.witness) : Json(nullptr)}});
  }
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"n_max", n_max}, {"checks", std::move(arr)}, {"all_hold", all}});
      break;
    case Format::Csv:
      csv_row({"identity", "holds", "witness"});
      for (const auto& [name, chk] : checks) {
        csv_row({name, chk.holds ? "true" : "false", chk.witness ? std::to_string(*chk.witness) : ""});
      }
      break;
    case Format::Text:
      for (const auto& [name, chk] : checks) {
        std::cout << (chk.holds ? "ok   " : "FAIL ") << name;
        if (chk.witness) std::cout << " at n=" << *chk.witness;
        std::cout << '\n';
      }
  }
  return all ? kPass : kInternal;
}

}  // namespace

void register_exact(CLI::App& app, Config& cfg, int& rc) {
  {
    auto* sub = app.add_subcommand("pbar", "overpartition counts p(0..N), or the convergent series at N");
    auto n = std::make_shared<std::int64_t>(0);
    auto zuck = std::make_shared<bool>(false);
    auto kcap = std::make_shared<std::int64_t>(0);
    sub->add_option("--n", *n, "N")->required()->check(CLI::NonNegativeNumber);
    sub->add_flag("--zuckerman", *zuck, "evaluate the convergent series at N instead");
    sub->add_option("--kcap", *kcap, "series truncation (default 5*ceil(sqrt N))")->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, n, zuck, kcap] { rc = run_pbar(cfg, *n, *zuck, *kcap); });
  }
  {
    auto* sub = app.add_subcommand("ranks", "rank counts N(m,n), m >= 0 in csv/json, all m in text");
    auto n = std::make_shared<std::int64_t>(0);
    sub->add_option("--nmax", *n, "largest n")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, n] { rc = run_ranks(cfg, *n); });
  }
  {
    auto* sub = app.add_subcommand("classes", "residue-class counts N(a,c,n) for a = 0..c-1");
    auto c = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    sub->add_option("--c", *c, "modulus")->required();
    sub->add_option("--nmax", *n, "largest n")->required()->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, c, n] { rc = run_classes(cfg, *c, *n); });
  }
  {
    auto* sub = app.add_subcommand("eval-zeta", "A(a/c;n) exactly in Z[zeta_c] and numerically");
    auto a = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    sub->add_option("--a", *a)->required();
    sub->add_option("--c", *c)->required();
    sub->add_option("--n", *n)->required()->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, a, c, n] { rc = run_eval_zeta(cfg, *a, *c, *n); });
  }
  {
    auto* sub = app.add_subcommand("enumerate", "list the overpartitions of n with their ranks");
    auto n = std::make_shared<int>(0);
    sub->add_option("--n", *n)->required()->check(CLI::Range(0, qseries::kEnumerationCap));
    sub->callback([&cfg, &rc, n] { rc = run_enumerate(cfg, *n); });
  }
  {
    auto* sub = app.add_subcommand("identities", "root-of-unity identities and orthogonality, checked exactly");
    auto n = std::make_shared<std::int64_t>(200);
    sub->add_option("--nmax", *n, "largest n (default 200)")->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, n] { rc = run_identities(cfg, *n); });
  }
}

}  // namespace overrank::cli
