#include <memory>

#include "cli_common.hpp"
#include "overrank/arith/arith.hpp"
#include "overrank/asymptotic/asymptotic.hpp"
#include "overrank/error.hpp"
#include "overrank/expsums/expsums.hpp"
#include "overrank/qseries/group_ring.hpp"

namespace overrank::cli {

namespace {

using arith::Fraction;

Fraction parse_fraction(const std::string& s) {
  Fraction q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0) throw PreconditionError("not a rational: " + s);
  q.canonicalize();
  return q;
}

std::int64_t to_i64(const mpz_class& z, const std::string& what) {
  detail::require(z.fits_slong_p(), what + " out of range");
  return z.get_si();
}

std::string kind_name(asymptotic::TermKind k) { return k == asymptotic::TermKind::B ? "B" : "D"; }

Json term_json(const asymptotic::EstimateTerm& t, const Config& cfg) {
  return Json{{"kind", kind_name(t.kind)},
              {"k", t.k},
              {"r", t.r},
              {"delta", t.delta.get_str()},
              {"twice_m", t.twice_m},
              {"re", str(t.contribution.re(), cfg)},
              {"im", str(t.contribution.im(), cfg)}};
}

int run_asym(const Config& cfg, std::int64_t a, std::int64_t c, std::int64_t n, bool breakdown) {
  const asymptotic::Estimate e = asymptotic::estimate_A(a, c, n, cfg.prec);
  num::Real re = e.value.re();
  num::Real im = e.value.im();
  re.set_precision(cfg.prec);
  im.set_precision(cfg.prec);
  switch (format_of(cfg)) {
    case Format::Json: {
      Json j{{"a", a}, {"c", c}, {"n", n}, {"k_max", e.k_max}, {"working_precision", e.precision},
             {"re", str(re, cfg)}, {"im", str(im, cfg)}};
      if (breakdown) {
        Json terms = Json::array();
        for (const auto& t : e.terms) terms.push_back(term_json(t, cfg));
        j["terms"] = std::move(terms);
      }
      emit(j);
      break;
    }
    case Format::Csv:
      if (breakdown) {
        csv_row({"kind", "k", "r", "delta", "twice_m", "re", "im"});
        for (const auto& t : e.terms) {
          csv_row({kind_name(t.kind), std::to_string(t.k), std::to_string(t.r), t.delta.get_str(),
                   std::to_string(t.twice_m), str(t.contribution.re(), cfg), str(t.contribution.im(), cfg)});
        }
      } else {
        csv_row({"a", "c", "n", "re", "im"});
        csv_row({std::to_string(a), std::to_string(c), std::to_string(n), str(re, cfg), str(im, cfg)});
      }
      break;
    case Format::Text:
      std::cout << "A(" << a << "/" << c << ";" << n << ") ~ " << str(re, cfg) << '\n';
      std::cout << "imaginary part " << str(im, cfg) << '\n';
      if (breakdown) {
        std::cout << "kind k r delta 2m contribution\n";
        for (const auto& t : e.terms) {
          std::cout << kind_name(t.kind) << ' ' << t.k << ' ' << t.r << ' ' << t.delta.get_str() << ' '
                    << t.twice_m << ' ' << t.contribution.to_string(digits(cfg.prec)) << '\n';
        }
      }
  }
  return kPass;
}

int run_compare(const Config& cfg, std::int64_t a, std::int64_t c, std::int64_t n) {
  const qseries::RankTable t = table_for(cfg, n);
  const qseries::ZetaValue exact = qseries::zeta_eval(a, c, n, t, cfg.prec);
  const asymptotic::Estimate e = asymptotic::estimate_A(a, c, n, cfg.prec);
  const num::Real one(1L, e.precision);
  num::Real rel = num::abs(e.value.re() / exact.value - one);
  num::Real imag_rel = num::abs(e.value.im()) / num::abs(e.value.re());
  num::Real est = e.value.re();
  est.set_precision(cfg.prec);
  rel.set_precision(cfg.prec);
  imag_rel.set_precision(cfg.prec);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"a", a},
                {"c", c},
                {"n", n},
                {"estimate", str(est, cfg)},
                {"exact", str(exact.value, cfg)},
                {"relative_error", str(rel, cfg)},
                {"imag_relative", str(imag_rel, cfg)}});
      break;
    case Format::Csv:
      csv_row({"a", "c", "n", "estimate", "exact", "relative_error", "imag_relative"});
      csv_row({std::to_string(a), std::to_string(c), std::to_string(n), str(est, cfg), str(exact.value, cfg),
               str(rel, cfg), str(imag_rel, cfg)});
      break;
    case Format::Text:
      std::cout << "estimate " << str(est, cfg) << '\n'
                << "exact    " << str(exact.value, cfg) << '\n'
                << "relative error " << rel.to_string(6) << '\n'
                << "imaginary/real " << imag_rel.to_string(6) << '\n';
  }
  return kPass;
}

int run_dedekind(const Config& cfg, std::int64_t h, std::int64_t k) {
  const Fraction s = arith::dedekind_sum(h, k);
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"h", h}, {"k", k}, {"value", s.get_str()}});
      break;
    case Format::Csv:
      csv_row({"h", "k", "value"});
      csv_row({std::to_string(h), std::to_string(k), s.get_str()});
      break;
    case Format::Text:
      std::cout << s.get_str() << '\n';
  }
  return kPass;
}

int run_kloosterman(const Config& cfg, const std::string& kind, std::int64_t a, std::int64_t c, std::int64_t k,
                    std::int64_t n, const std::string& m_text, std::int64_t shift) {
  const Fraction m = parse_fraction(m_text);
  const expsums::SumOptions opts{cfg.prec, shift};
  num::Complex v(cfg.prec);
  if (kind == "D") {
    const Fraction twice = 2 * m;
    detail::require(twice.get_den() == 1, "D needs 2m integral");
    v = expsums::kloosterman_D(a, c, k, n, to_i64(twice.get_num(), "m"), opts);
  } else {
    detail::require(m.get_den() == 1, kind + " needs integral m");
    const std::int64_t mi = to_i64(m.get_num(), "m");
    v = kind == "B" ? expsums::kloosterman_B(a, c, k, n, mi, opts) : expsums::kloosterman_A(a, c, k, n, mi, opts);
  }
  switch (format_of(cfg)) {
    case Format::Json:
      emit(Json{{"kind", kind}, {"a", a}, {"c", c}, {"k", k}, {"n", n}, {"m", m.get_str()},
                {"re", str(v.re(), cfg)}, {"im", str(v.im(), cfg)}});
      break;
    case Format::Csv:
      csv_row({"kind", "a", "c", "k", "n", "m", "re", "im"});
      csv_row({kind, std::to_string(a), std::to_string(c), std::to_string(k), std::to_string(n), m.get_str(),
               str(v.re(), cfg), str(v.im(), cfg)});
      break;
    case Format::Text:
      std::cout << v.to_string(digits(cfg.prec)) << '\n';
  }
  return kPass;
}

int run_delta(const Config& cfg, std::int64_t a, std::int64_t c, std::int64_t k, bool primed) {
  const auto terms = expsums::delta_terms(a, c, k, primed);
  const expsums::GroupData g = expsums::group_data(a, c, k);
  switch (format_of(cfg)) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& t : terms) arr.push_back(Json{{"r", t.r}, {"delta", t.delta.get_str()}, {"twice_m", t.twice_m}});
      emit(Json{{"a", a}, {"c", c}, {"k", k}, {"primed", primed}, {"k1", g.k1}, {"c1", g.c1}, {"ell", g.ell},
                {"terms", std::move(arr)}});
      break;
    }
    case Format::Csv:
      csv_row({"r", "delta", "twice_m"});
      for (const auto& t : terms) csv_row({std::to_string(t.r), t.delta.get_str(), std::to_string(t.twice_m)});
      break;
    case Format::Text:
      std::cout << "k1=" << g.k1 << " c1=" << g.c1 << " ell=" << g.ell << '\n';
      for (const auto& t : terms) std::cout << "r=" << t.r << " delta=" << t.delta.get_str() << " 2m=" << t.twice_m << '\n';
  }
  return kPass;
}

int run_equidistribution(const Config& cfg, std::int64_t c, std::int64_t n) {
  const qseries::RankTable t = table_for(cfg, n);
  const auto rows = asymptotic::equidistribution_report(c, n, t);
  switch (format_of(cfg)) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(Json{{"a", r.a}, {"ratio", r.ratio.get_str()}, {"value", r.value}});
      emit(Json{{"c", c}, {"n", n}, {"ratios", std::move(arr)}});
      break;
    }
    case Format::Csv:
      csv_row({"a", "ratio", "value"});
      for (const auto& r : rows) csv_row({std::to_string(r.a), r.ratio.get_str(), std::to_string(r.value)});
      break;
    case Format::Text:
      for (const auto& r : rows) std::cout << "a=" << r.a << " c*N/p = " << r.value << '\n';
  }
  return kPass;
}

}  // namespace

void register_analytic(CLI::App& app, Config& cfg, int& rc) {
  {
    auto* sub = app.add_subcommand("asym", "asymptotic estimate of A(a/c;n)");
    auto a = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    auto br = std::make_shared<bool>(false);
    sub->add_option("--a", *a)->required();
    sub->add_option("--c", *c)->required();
    sub->add_option("--n", *n)->required();
    sub->add_flag("--breakdown", *br, "print every (k, r) term");
    sub->callback([&cfg, &rc, a, c, n, br] { rc = run_asym(cfg, *a, *c, *n, *br); });
  }
  {
    auto* sub = app.add_subcommand("compare", "asymptotic estimate against the exact A(a/c;n)");
    auto a = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    sub->add_option("--a", *a)->required();
    sub->add_option("--c", *c)->required();
    sub->add_option("--n", *n)->required();
    sub->callback([&cfg, &rc, a, c, n] { rc = run_compare(cfg, *a, *c, *n); });
  }
  {
    auto* sub = app.add_subcommand("dedekind", "Dedekind sum S(h,k) as an exact rational");
    sub->set_help_flag("--help", "print this help");  // frees -h for --h
    auto h = std::make_shared<std::int64_t>(0);
    auto k = std::make_shared<std::int64_t>(0);
    sub->add_option("--h", *h)->required();
    sub->add_option("--k", *k)->required();
    sub->callback([&cfg, &rc, h, k] { rc = run_dedekind(cfg, *h, *k); });
  }
  {
    auto* sub = app.add_subcommand("kloosterman", "Kloosterman-type sums B, D (k odd) and A (k even)");
    auto kind = std::make_shared<std::string>();
    auto a = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    auto k = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    auto m = std::make_shared<std::string>("0");
    auto shift = std::make_shared<std::int64_t>(0);
    sub->add_option("--kind", *kind)->required()->check(CLI::IsMember({"A", "B", "D"}));
    sub->add_option("--a", *a)->required();
    sub->add_option("--c", *c)->required();
    sub->add_option("--k", *k)->required();
    sub->add_option("--n", *n)->required();
    sub->add_option("--m", *m, "m, may be a half-integer for D");
    sub->add_option("--hprime-shift", *shift, "add 2k*shift to every h'");
    sub->callback([&cfg, &rc, kind, a, c, k, n, m, shift] {
      rc = run_kloosterman(cfg, *kind, *a, *c, *k, *n, *m, *shift);
    });
  }
  {
    auto* sub = app.add_subcommand("delta", "the positive delta values and 2m for (a, c, k)");
    auto a = std::make_shared<std::int64_t>(0);
    auto c = std::make_shared<std::int64_t>(0);
    auto k = std::make_shared<std::int64_t>(0);
    auto primed = std::make_shared<bool>(false);
    sub->add_option("--a", *a)->required();
    sub->add_option("--c", *c)->required();
    sub->add_option("--k", *k)->required();
    sub->add_flag("--primed", *primed, "primed table");
    sub->callback([&cfg, &rc, a, c, k, primed] { rc = run_delta(cfg, *a, *c, *k, *primed); });
  }
  {
    auto* sub = app.add_subcommand("equidistribution", "c*N(a,c,n)/p(n) for a = 0..c-1");
    auto c = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    sub->add_option("--c", *c)->required();
    sub->add_option("--n", *n)->required()->check(CLI::NonNegativeNumber);
    sub->callback([&cfg, &rc, c, n] { rc = run_equidistribution(cfg, *c, *n); });
  }
}

}  // namespace overrank::cli
