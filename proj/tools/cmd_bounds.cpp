#include <memory>

#include "cli_common.hpp"
#include "overrank/bounds/bounds.hpp"
#include "overrank/error.hpp"

namespace overrank::cli {

namespace {

bounds::Family parse_family(const std::string& s) { return s == "c6" ? bounds::Family::C6 : bounds::Family::C10; }

int run_verify(const Config& cfg, const std::string& id, std::int64_t lo, std::int64_t hi, bool skip_crossover) {
  const bounds::InequalitySpec& spec = bounds::find_inequality(id);
  const qseries::RankTable t = table_for(cfg, hi);
  bounds::VerifyOptions opts;
  opts.threads = cfg.threads;
  opts.compute_crossover = !skip_crossover;
  opts.prec = cfg.prec;
  const bounds::InequalityReport rep = bounds::verify_inequality(id, lo, hi, t, opts);
  Json viol = Json::array();
  for (auto v : rep.violations) viol.push_back(v);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"id", rep.id},
                {"statement", spec.statement()},
                {"range", Json::array({rep.n_lo, rep.n_hi})},
                {"checked", rep.checked},
                {"violations", std::move(viol)},
                {"crossover_used", rep.crossover_used ? Json(*rep.crossover_used) : Json(nullptr)},
                {"bound_assembly", rep.bound_assembly}});
      break;
    case Format::Csv:
      csv_row({"id", "from", "to", "checked", "violations", "crossover_used"});
      {
        std::string vs;
        for (std::size_t i = 0; i < rep.violations.size(); ++i) vs += (i ? " " : "") + std::to_string(rep.violations[i]);
        csv_row({rep.id, std::to_string(lo), std::to_string(hi), std::to_string(rep.checked), vs,
                 rep.crossover_used ? std::to_string(*rep.crossover_used) : ""});
      }
      break;
    case Format::Text:
      std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.id << " [" << lo << "," << hi << "] checked "
                << rep.checked << ", violations " << rep.violations.size() << '\n';
      std::cout << spec.statement() << '\n';
      if (!rep.violations.empty()) {
        std::cout << "violations:";
        for (std::size_t i = 0; i < rep.violations.size() && i < 50; ++i) std::cout << ' ' << rep.violations[i];
        if (rep.violations.size() > 50) std::cout << " ...";
        std::cout << '\n';
      }
      if (rep.crossover_used) std::cout << "crossover " << *rep.crossover_used << '\n';
      std::cout << "bounds: " << rep.bound_assembly << '\n';
  }
  return rep.passed() ? kPass : kViolation;
}

int run_bounds(const Config& cfg, std::int64_t n, const std::string& family) {
  const bounds::BoundReport r = bounds::bound_report(n, parse_family(family), cfg.prec);
  switch (format_of(cfg)) {
    case Format::Json: {
      Json sides = Json::array();
      for (const auto& s : r.sides) {
        Json comps = Json::object();
        for (const auto& c : s.components) comps[c.name] = str(c.value, cfg);
        sides.push_back(Json{{"a", s.a}, {"residues", s.residues}, {"components", std::move(comps)},
                             {"total", str(s.total, cfg)}});
      }
      emit(Json{{"n", n},
                {"family", std::string(bounds::family_name(r.family))},
                {"main", str(r.main, cfg)},
                {"sides", std::move(sides)},
                {"total", str(r.total, cfg)},
                {"dominated", r.dominated},
                {"bound_assembly", bounds::bound_assembly(r.family)}});
      break;
    }
    case Format::Csv:
      csv_row({"side", "component", "value"});
      csv_row({"", "main", str(r.main, cfg)});
      for (const auto& s : r.sides) {
        for (const auto& c : s.components) csv_row({std::to_string(s.a), c.name, str(c.value, cfg)});
      }
      csv_row({"", "total", str(r.total, cfg)});
      csv_row({"", "dominated", r.dominated ? "true" : "false"});
      break;
    case Format::Text:
      std::cout << "n=" << n << " family=" << bounds::family_name(r.family) << '\n';
      std::cout << "main " << r.main.to_string(12) << '\n';
      for (const auto& s : r.sides) {
        std::cout << "side a=" << s.a << '\n';
        for (const auto& c : s.components) std::cout << "  " << c.name << ' ' << c.value.to_string(12) << '\n';
      }
      std::cout << "total " << r.total.to_string(12) << '\n';
      std::cout << "dominated=" << (r.dominated ? "true" : "false") << '\n';
  }
  return kPass;
}

int run_crossover(const Config& cfg, const std::string& family, std::int64_t cap) {
  const bounds::CrossoverResult r = bounds::crossover(parse_family(family), cfg.prec, cap);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"family", family},
                {"found", r.found},
                {"crossover", r.found ? Json(r.n0) : Json(nullptr)},
                {"checked_to", r.checked_to},
                {"rejected", r.rejected},
                {"bound_assembly", r.assembly}});
      break;
    case Format::Csv:
      csv_row({"family", "found", "crossover", "checked_to"});
      csv_row({family, r.found ? "true" : "false", r.found ? std::to_string(r.n0) : "", std::to_string(r.checked_to)});
      break;
    case Format::Text:
      if (r.found) {
        std::cout << "crossover " << r.n0 << " (dominated on [" << r.n0 << "," << r.checked_to << "], not at "
                  << r.n0 - 1 << ")\n";
      } else {
        std::cout << "no crossover found up to " << r.checked_to << '\n';
      }
      std::cout << "bounds: " << r.assembly << '\n';
  }
  return r.found ? kPass : kViolation;
}

int run_coeff_sum(const Config& cfg, const std::string& scale_text) {
  arith::Fraction scale;
  if (scale_text.empty() || scale.set_str(scale_text, 10) != 0 || sgn(scale.get_den()) == 0) {
    throw PreconditionError("not a rational: " + scale_text);
  }
  scale.canonicalize();
  const num::Real v = bounds::coeff_sum(scale, cfg.prec);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"scale", scale.get_str()}, {"value", str(v, cfg)}});
      break;
    case Format::Csv:
      csv_row({"scale", "value"});
      csv_row({scale.get_str(), str(v, cfg)});
      break;
    case Format::Text:
      std::cout << str(v, cfg) << '\n';
  }
  return kPass;
}

}  // namespace

void register_bounds(CLI::App& app, Config& cfg, int& rc) {
  {
    auto* sub = app.add_subcommand("verify", "check an inequality exactly on a range of n");
    auto id = std::make_shared<std::string>();
    auto lo = std::make_shared<std::int64_t>(0);
    auto hi = std::make_shared<std::int64_t>(0);
    auto skip = std::make_shared<bool>(false);
    sub->add_option("--id", *id, "inequality id")->required();
    sub->add_option("--from", *lo)->check(CLI::NonNegativeNumber);
    sub->add_option("--to", *hi)->required()->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-crossover", *skip, "do not compute the bound crossover");
    sub->callback([&cfg, &rc, id, lo, hi, skip] { rc = run_verify(cfg, *id, *lo, *hi, *skip); });
  }
  {
    auto* sub = app.add_subcommand("bounds", "main term against the explicit error bounds at n");
    auto n = std::make_shared<std::int64_t>(0);
    auto family = std::make_shared<std::string>("c10");
    sub->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
    sub->add_option("--family", *family)->check(CLI::IsMember({"c10", "c6"}));
    sub->callback([&cfg, &rc, n, family] { rc = run_bounds(cfg, *n, *family); });
  }
  {
    auto* sub = app.add_subcommand("crossover", "first n from which the main term dominates the bounds");
    auto family = std::make_shared<std::string>("c10");
    auto cap = std::make_shared<std::int64_t>(bounds::kCrossoverCap);
    sub->add_option("--family", *family)->check(CLI::IsMember({"c10", "c6"}));
    sub->add_option("--cap", *cap, "give up above this n")->check(CLI::PositiveNumber);
    sub->callback([&cfg, &rc, family, cap] { rc = run_crossover(cfg, *family, *cap); });
  }
  {
    auto* sub = app.add_subcommand("coeff-sum", "sum over r >= 1 of exp(pi sqrt r - pi s r)");
    auto scale = std::make_shared<std::string>("1");
    sub->add_option("--scale", *scale, "s, e.g. 1 or 1/50");
    sub->callback([&cfg, &rc, scale] { rc = run_coeff_sum(cfg, *scale); });
  }
}

}  // namespace overrank::cli
