#include <sstream>

#include "context.hpp"
#include "powsec/data/blocks.hpp"
#include "powsec/data/daily.hpp"
#include "powsec/data/dataset.hpp"
#include "powsec/data/descriptive.hpp"
#include "powsec/data/fetch.hpp"
#include "powsec/error.hpp"

namespace powsec::cli {
namespace {

const char* kExternals[] = {"electricity_eu", "electricity_cn", "electricity_na", "treasury_10y", "hashrate"};

std::string external_flag(const std::string& name) {
  std::string flag = name;
  for (auto& c : flag) {
    if (c == '_') c = '-';
  }
  return flag;
}

bool is_url(const std::string& s) { return s.rfind("http://", 0) == 0 || s.rfind("https://", 0) == 0; }

}  // namespace

std::vector<Field> ingest_fields() {
  std::vector<Field> f{
      {"blocks", FieldType::Text, nullptr, "block dump (tab or comma separated)"},
      {"hardware", FieldType::Text, nullptr, "hardware table CSV overriding the built-in one"},
      {"start", FieldType::Text, "2014-12-27", "first day of the window"},
      {"end", FieldType::Text, "2021-01-10", "last day of the window"},
      {"cache", FieldType::Text, ".powsec-cache", "download cache directory for URL inputs"},
      {"offline", FieldType::Flag, false, "use only cached downloads"},
      {"refresh", FieldType::Flag, false, "re-download URL inputs"},
  };
  for (const char* name : kExternals) {
    f.push_back({external_flag(name), FieldType::Text, nullptr, std::string(name) + " series: CSV path or URL"});
  }
  return f;
}

std::vector<Field> report_fields() {
  return {
      {"input", FieldType::Text, nullptr, "dataset CSV"},
      {"log", FieldType::Flag, false, "log-transform before summarising"},
  };
}

int cmd_ingest(Context& ctx) {
  const auto blocks_path = ctx.input(ctx.required_text("blocks"));
  const auto parsed = data::parse_blocks_file(blocks_path);
  const auto daily = data::aggregate_daily(parsed.records);

  data::AlignOptions options;
  options.start = parse_date(ctx.text("start"));
  options.end = parse_date(ctx.text("end"));
  if (ctx.has("hardware")) options.epochs = data::load_hardware_epochs(ctx.input(ctx.text("hardware")));

  data::FetchOptions fetch;
  fetch.offline = ctx.flag("offline");
  fetch.force = ctx.flag("refresh");
  std::vector<data::ExternalSeries> externals;
  for (const char* name : kExternals) {
    const auto key = external_flag(name);
    if (!ctx.has(key)) continue;
    std::string source = ctx.text(key);
    if (is_url(source)) {
      const auto fetched = data::fetch_external(source, ctx.text("cache"), fetch);
      ctx.inputs[source] = fetched.sha256;
      source = fetched.path.string();
    } else {
      ctx.input(source);
    }
    externals.push_back(data::load_external(name, source));
  }

  const auto raw = data::align_and_fill(daily, externals, options);
  const auto logged = data::log_transform(raw);
  ctx.write("dataset.csv", data::dataset_csv(raw));
  ctx.write("dataset_log.csv", data::dataset_csv(logged));

  std::ostringstream errors;
  errors << "line,message\n";
  for (const auto& e : parsed.errors) errors << e.line << ",\"" << e.message << "\"\n";
  ctx.write("block_errors.csv", errors.str());

  std::int64_t unknown = 0;
  for (const auto& r : parsed.records) unknown += r.miner.empty() ? 1 : 0;
  Json report = ctx.header();
  report["blocks_parsed"] = parsed.records.size();
  report["block_rows_rejected"] = parsed.errors.size();
  report["blocks_unattributed"] = unknown;
  report["unattributed_label"] = data::kUnknownMiner;
  report["days"] = raw.rows();
  report["first_day"] = raw.rows() ? format_date(raw.index().front()) : "";
  report["last_day"] = raw.rows() ? format_date(raw.index().back()) : "";
  report["log_floor"] = data::kLogFloor;
  Json units = Json::object();
  for (const auto& e : externals) units[e.name] = e.unit;
  report["external_units"] = units;
  report["hashrate_source"] = ctx.has("hashrate") ? "external" : "implied from difficulty and block count";
  ctx.write("ingest.json", dump(report));
  if (!parsed.errors.empty()) {
    *ctx.err << "warning: " << parsed.errors.size() << " malformed block row(s), see block_errors.csv\n";
  }
  return 0;
}

int cmd_report(Context& ctx) {
  auto data = data::read_dataset_csv(ctx.input(ctx.required_text("input")));
  if (ctx.flag("log")) data = data::log_transform(data);
  const auto rows = data::descriptive_stats(data);
  if (ctx.format == "csv") {
    ctx.emit("descriptive.csv", data::descriptive_csv(rows));
    return 0;
  }
  Json report = ctx.header();
  Json table = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["variable"] = r.variable;
    j["obs"] = r.obs;
    j["mean"] = r.mean;
    j["std_dev"] = r.std_dev;
    j["min"] = r.min;
    j["max"] = r.max;
    table.push_back(j);
  }
  report["descriptive"] = table;
  ctx.emit("descriptive.json", dump(report));
  return 0;
}

}  // namespace powsec::cli
