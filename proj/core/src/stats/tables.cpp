#include "powsec/stats/tables.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace powsec::stats {
namespace {

std::string format(const char* fmt, double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

const char* kHeader = "variable,estimate,std_error,p_value,stars\n";

void row(std::ostringstream& os, const Coefficient& c) {
  os << c.name << ',' << format_short(c.estimate) << ',' << format_short(c.se) << ',' << format_short(c.p_value)
     << ',' << significance_stars(c.p_value) << '\n';
}

}  // namespace

std::string format_full(double v) {
  if (std::isnan(v)) return "nan";
  return format("%.17g", v);
}

std::string format_short(double v) { return format("%.6g", v); }

std::string significance_stars(double p) {
  if (!(p >= 0.0)) return "";
  if (p < 0.01) return "***";
  if (p < 0.05) return "**";
  if (p < 0.10) return "*";
  return "";
}

std::string longrun_table_csv(const EcmFit& ecm) {
  std::ostringstream os;
  os << kHeader;
  for (const auto& c : ecm.longrun) row(os, c);
  row(os, ecm.alpha);
  os << "speed_of_adjustment_days," << (ecm.speed_days ? format_short(*ecm.speed_days) : "") << ",,,\n";
  return os.str();
}

std::string shortrun_table_csv(const EcmFit& ecm) {
  std::ostringstream os;
  os << kHeader;
  for (const auto& c : ecm.shortrun) row(os, c);
  row(os, ecm.intercept);
  return os.str();
}

std::string coefficient_table_csv(const OlsFit& fit) {
  std::ostringstream os;
  os << kHeader;
  for (Eigen::Index i = 0; i < fit.n_params(); ++i) {
    row(os, Coefficient{fit.names[static_cast<std::size_t>(i)], fit.coefficients(i), fit.se(i), fit.p_value(i)});
  }
  return os.str();
}

std::string unit_root_table_csv(const std::vector<std::pair<std::string, UnitRootReport>>& rows) {
  std::ostringstream os;
  os << "series,test,deterministic,lags,statistic,cv_1,cv_5,cv_10,p_value,conclusion\n";
  for (const auto& [label, r] : rows) {
    os << label << ',' << r.test << ',' << to_string(r.det) << ',' << r.lags << ',' << format_short(r.statistic)
       << ',' << format_short(r.critical.one) << ',' << format_short(r.critical.five) << ','
       << format_short(r.critical.ten) << ',' << (r.p_value ? format_short(*r.p_value) : "") << ','
       << r.conclusion() << '\n';
  }
  return os.str();
}

std::string diagnostics_table_csv(const DiagnosticsReport& d) {
  std::ostringstream os;
  os << "test,statistic,df,p_value,result\n";
  for (const TestResult* t : {&d.breusch_godfrey, &d.durbin_alternative, &d.breusch_pagan, &d.jarque_bera}) {
    os << t->name << ',' << format_short(t->statistic) << ',' << t->df << ',' << format_short(t->p_value) << ','
       << (t->rejects(0.05) ? "reject" : "fail to reject") << '\n';
  }
  os << "CUSUM,,,," << (d.cusum.stable ? "stable" : "unstable") << '\n';
  os << "CUSUM of squares,,,," << (d.cusum_of_squares.stable ? "stable" : "unstable") << '\n';
  return os.str();
}

}  // namespace powsec::stats
