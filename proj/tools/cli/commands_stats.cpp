#include <cmath>
#include <sstream>

#include "context.hpp"
#include "powsec/data/dataset.hpp"
#include "powsec/error.hpp"
#include "powsec/stats/ardl.hpp"
#include "powsec/stats/diagnostics.hpp"
#include "powsec/stats/tables.hpp"
#include "powsec/stats/unit_root.hpp"

namespace powsec::cli {
namespace {

using stats::UnitRootReport;

std::vector<double> difference(const std::vector<double>& v) {
  std::vector<double> d(v.size(), std::nan(""));
  for (std::size_t t = 1; t < v.size(); ++t) d[t] = v[t] - v[t - 1];
  return d;
}

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const UnitRootReport& r) {
  Json j;
  j["test"] = r.test;
  j["deterministic"] = stats::to_string(r.det);
  j["statistic"] = r.statistic;
  j["lags"] = r.lags;
  j["n_obs"] = r.n_obs;
  j["critical_values"] = {{"1%", r.critical.one}, {"5%", r.critical.five}, {"10%", r.critical.ten}};
  j["p_value"] = opt(r.p_value);
  j["conclusion"] = r.conclusion();
  return j;
}

Json to_json(const stats::Coefficient& c) {
  Json j;
  j["name"] = c.name;
  j["estimate"] = c.estimate;
  j["std_error"] = c.se;
  j["p_value"] = c.p_value;
  j["stars"] = stats::significance_stars(c.p_value);
  return j;
}

Json to_json(const stats::OlsFit& fit) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < fit.n_params(); ++i) {
    rows.push_back(to_json(stats::Coefficient{fit.names[static_cast<std::size_t>(i)], fit.coefficients(i),
                                              fit.se(i), fit.p_value(i)}));
  }
  Json j;
  j["coefficients"] = rows;
  j["n_obs"] = fit.n_obs;
  j["r_squared"] = fit.r_squared;
  j["sigma2"] = fit.sigma2;
  j["loglik"] = fit.loglik;
  j["aic"] = fit.aic;
  j["bic"] = fit.bic;
  return j;
}

Json to_json(const stats::TestResult& t) {
  Json j;
  j["test"] = t.name;
  j["statistic"] = t.statistic;
  j["df"] = t.df;
  j["p_value"] = t.p_value;
  j["rejects_5%"] = t.rejects(0.05);
  return j;
}

Json to_json(const stats::DiagnosticsReport& d) {
  Json j;
  j["breusch_godfrey"] = to_json(d.breusch_godfrey);
  j["durbin_alternative"] = to_json(d.durbin_alternative);
  j["breusch_pagan"] = to_json(d.breusch_pagan);
  j["jarque_bera"] = to_json(d.jarque_bera);
  j["cusum_stable"] = d.cusum.stable;
  j["cusum_of_squares_stable"] = d.cusum_of_squares.stable;
  j["stable"] = d.stable();
  return j;
}

std::string stability_csv(const stats::DiagnosticsReport& d) {
  std::ostringstream os;
  os << "step,cusum,cusum_lower,cusum_upper,cusumsq,cusumsq_lower,cusumsq_upper\n";
  for (std::size_t i = 0; i < d.cusum.statistic.size(); ++i) {
    os << i + 1 << ',' << number(d.cusum.statistic[i]) << ',' << number(d.cusum.lower[i]) << ','
       << number(d.cusum.upper[i]) << ',' << number(d.cusum_of_squares.statistic[i]) << ','
       << number(d.cusum_of_squares.lower[i]) << ',' << number(d.cusum_of_squares.upper[i]) << '\n';
  }
  return os.str();
}

stats::Deterministic det(const Context& ctx) {
  try {
    return stats::parse_deterministic(ctx.text("det"));
  } catch (const InvalidParameter&) {
    throw UsageError("--det must be none, const or trend");
  }
}

stats::Dataset load(Context& ctx) {
  auto data = data::read_dataset_csv(ctx.input(ctx.required_text("input")));
  if (ctx.flag("log")) data = data::log_transform(data);
  return data;
}

int max_lags(const Context& ctx, std::size_t n) {
  if (!ctx.has("max-lags")) return stats::default_max_lags(n);
  const auto v = ctx.integer("max-lags");
  if (v < 0) throw InvalidParameter("max-lags", "must be >= 0");
  return static_cast<int>(v);
}

}  // namespace

std::vector<Field> unitroot_fields() {
  return {
      {"input", FieldType::Text, nullptr, "dataset CSV"},
      {"vars", FieldType::Text, nullptr, "comma-separated columns (default: all)"},
      {"test", FieldType::Text, "all", "adf|pp|dfgls|all"},
      {"det", FieldType::Text, "const", "deterministic terms: none|const|trend"},
      {"max-lags", FieldType::Integer, nullptr, "augmentation lag cap (default floor(12 (n/100)^0.25))"},
      {"log", FieldType::Flag, false, "log-transform first"},
  };
}

std::vector<Field> ardl_fields() {
  return {
      {"input", FieldType::Text, nullptr, "dataset CSV"},
      {"y", FieldType::Text, nullptr, "dependent column"},
      {"x", FieldType::Text, nullptr, "comma-separated regressor columns"},
      {"pmax", FieldType::Integer, std::int64_t{8}, "largest lag of the dependent variable"},
      {"qmax", FieldType::Integer, std::int64_t{4}, "largest lag of each regressor"},
      {"level", FieldType::Real, 0.05, "bounds-test significance: 0.01|0.05|0.10"},
      {"det", FieldType::Text, "const", "deterministic terms for the unit-root screen"},
      {"max-lags", FieldType::Integer, nullptr, "unit-root augmentation lag cap"},
      {"diag-lags", FieldType::Integer, std::int64_t{1}, "lags in the serial-correlation tests"},
      {"log", FieldType::Flag, false, "log-transform first"},
  };
}

int cmd_unitroot(Context& ctx) {
  const auto data = load(ctx);
  const auto d = det(ctx);
  const std::string which = ctx.text("test");
  if (which != "all" && which != "adf" && which != "pp" && which != "dfgls") {
    throw UsageError("--test must be adf, pp, dfgls or all");
  }
  const auto vars = ctx.has("vars") ? split_list(ctx.text("vars")) : data.names();

  std::vector<std::pair<std::string, UnitRootReport>> rows;
  for (const auto& name : vars) {
    if (!data.contains(name)) throw DataError("unknown column '" + name + "'");
    const auto level = data.column(name).with_nan();
    const auto diff = difference(level);
    for (const auto& [label, series] : {std::pair{name, level}, std::pair{"D." + name, diff}}) {
      const int lags = max_lags(ctx, series.size());
      if (which == "all" || which == "adf") rows.emplace_back(label, stats::adf_test(series, lags, d));
      if (which == "all" || which == "pp") rows.emplace_back(label, stats::pp_test(series, d));
      if ((which == "all" || which == "dfgls") && d != stats::Deterministic::None) {
        // DF-GLS needs a gap-free series; the differenced one starts with a gap.
        std::vector<double> clean(series.begin() + (label == name ? 0 : 1), series.end());
        bool complete = true;
        for (double v : clean) complete = complete && std::isfinite(v);
        if (complete) rows.emplace_back(label, stats::dfgls_test(clean, lags, d));
      }
    }
  }

  if (ctx.format == "csv") {
    ctx.emit("unitroot.csv", stats::unit_root_table_csv(rows));
    return 0;
  }
  Json report = ctx.header();
  Json list = Json::array();
  for (const auto& [label, r] : rows) {
    Json j = to_json(r);
    j["series"] = label;
    list.push_back(j);
  }
  report["tests"] = list;
  ctx.emit("unitroot.json", dump(report));
  return 0;
}

int cmd_ardl(Context& ctx) {
  const auto data = load(ctx);
  const std::string y = ctx.required_text("y");
  const auto xs = split_list(ctx.required_text("x"));
  if (xs.empty()) throw UsageError("--x needs at least one column");
  const auto pmax = ctx.integer("pmax");
  const auto qmax = ctx.integer("qmax");
  const double level = ctx.real("level");
  if (level != 0.01 && level != 0.05 && level != 0.10) throw UsageError("--level must be 0.01, 0.05 or 0.10");
  const auto d = det(ctx);
  const auto diag_lags = ctx.integer("diag-lags");

  Json report = ctx.header();
  Json warnings = Json::array();
  Json files = Json::array();
  auto write = [&](const std::string& name, const std::string& content) {
    ctx.write(name, content);
    files.push_back(name);
  };

  // Unit-root screen: ADF on levels and first differences.
  std::vector<std::pair<std::string, UnitRootReport>> screen;
  Json integration = Json::object();
  std::string i2;
  std::vector<std::string> vars{y};
  vars.insert(vars.end(), xs.begin(), xs.end());
  for (const auto& name : vars) {
    if (!data.contains(name)) throw DataError("unknown column '" + name + "'");
    const auto level_series = data.column(name).with_nan();
    const auto diff = difference(level_series);
    const auto a = stats::adf_test(level_series, max_lags(ctx, level_series.size()), d);
    const auto b = stats::adf_test(diff, max_lags(ctx, diff.size()), d);
    screen.emplace_back(name, a);
    screen.emplace_back("D." + name, b);
    const char* order = a.rejects(0.05) ? "I(0)" : b.rejects(0.05) ? "I(1)" : "I(2)";
    integration[name] = order;
    if (std::string(order) == "I(2)" && i2.empty()) i2 = name;
  }
  write("unitroot.csv", stats::unit_root_table_csv(screen));
  Json ur = Json::array();
  for (const auto& [label, r] : screen) {
    Json j = to_json(r);
    j["series"] = label;
    ur.push_back(j);
  }
  report["unit_root"] = ur;
  report["integration_order"] = integration;
  if (!i2.empty()) {
    report["error"] = "variable '" + i2 + "' is I(2); bounds-test critical values do not apply";
    write("report.json", dump(report));
    throw DataError("variable '" + i2 + "' appears to be I(2); the bounds test is invalid for I(2) regressors");
  }

  const auto ad = stats::make_ardl_data(data, y, xs);
  const auto selection = stats::select_ardl_order(ad, static_cast<int>(pmax), static_cast<int>(qmax));
  const auto fit = stats::fit_ardl(ad, selection.best);
  Json order;
  order["p"] = selection.best.p;
  Json q = Json::object();
  for (std::size_t j = 0; j < xs.size(); ++j) q[xs[j]] = selection.best.q[j];
  order["q"] = q;
  order["label"] = "ARDL" + selection.best.to_string();
  order["selection_aic"] = selection.aic;
  order["candidates"] = selection.candidates.size();
  order["selection_sample_start"] = selection.sample_start;
  report["order"] = order;
  report["levels_fit"] = to_json(fit.ols);

  const auto bounds = stats::bounds_test(fit, level);
  Json b;
  b["f_statistic"] = bounds.f_statistic;
  b["k"] = bounds.k;
  b["level"] = bounds.level;
  b["lower_I0"] = bounds.lower;
  b["upper_I1"] = bounds.upper;
  b["decision"] = stats::to_string(bounds.decision);
  report["bounds"] = b;

  const bool emit_ecm = bounds.decision != stats::BoundsDecision::NotCointegrated;
  const bool emit_diff = bounds.decision != stats::BoundsDecision::Cointegrated;
  if (bounds.decision == stats::BoundsDecision::Inconclusive) {
    warnings.push_back("bounds test inconclusive; both the error-correction and first-difference models are reported");
  }

  stats::DiagnosticsReport diag;
  if (emit_ecm) {
    const auto ecm = stats::to_ecm(fit);
    write("longrun.csv", stats::longrun_table_csv(ecm));
    write("shortrun.csv", stats::shortrun_table_csv(ecm));
    Json e;
    e["alpha"] = to_json(ecm.alpha);
    e["speed_of_adjustment_days"] = opt(ecm.speed_days);
    e["longrun_defined"] = ecm.longrun_defined;
    Json lr = Json::array();
    for (const auto& c : ecm.longrun) lr.push_back(to_json(c));
    e["longrun"] = lr;
    Json sr = Json::array();
    for (const auto& c : ecm.shortrun) sr.push_back(to_json(c));
    e["shortrun"] = sr;
    e["intercept"] = to_json(ecm.intercept);
    report["ecm"] = e;
    if (!ecm.longrun_defined) warnings.push_back("sum of autoregressive coefficients is 1; long-run effects undefined");
    diag = stats::run_diagnostics(fit.ols, static_cast<int>(diag_lags));
  }
  if (emit_diff) {
    const auto fd = stats::fit_difference_model(ad, selection.best);
    write("firstdiff.csv", stats::coefficient_table_csv(fd));
    report["first_difference"] = to_json(fd);
    if (!emit_ecm) diag = stats::run_diagnostics(fd, static_cast<int>(diag_lags));
  }
  write("diagnostics.csv", stats::diagnostics_table_csv(diag));
  write("stability.csv", stability_csv(diag));
  report["diagnostics"] = to_json(diag);
  report["diagnostics_model"] = emit_ecm ? "levels ARDL / error-correction" : "first difference";
  report["warnings"] = warnings;
  files.push_back("report.json");
  report["files"] = files;
  ctx.write("report.json", dump(report));

  *ctx.out << "order " << order["label"].get<std::string>() << ", bounds F = " << stats::format_short(bounds.f_statistic)
           << " (" << stats::to_string(bounds.decision) << " at " << level * 100 << "%)\n";
  for (const auto& w : warnings) *ctx.err << "warning: " << w.get<std::string>() << "\n";
  return 0;
}

}  // namespace powsec::cli
