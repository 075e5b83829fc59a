#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "powsec/data/blocks.hpp"
#include "powsec/data/concentration.hpp"
#include "powsec/data/csv.hpp"
#include "powsec/data/daily.hpp"
#include "powsec/data/dataset.hpp"
#include "powsec/data/descriptive.hpp"
#include "powsec/data/fetch.hpp"
#include "powsec/data/hardware.hpp"
#include "powsec/error.hpp"

using namespace powsec;
using namespace powsec::data;
namespace fs = std::filesystem;

namespace {

const char* kHeader = "id,time,difficulty,reward_usd,fee_total_usd,guessed_miner\n";

ParsedBlocks parse(const std::string& text) {
  std::istringstream in(text);
  return parse_blocks(in);
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("powsec_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// `count` blocks spread over one UTC day, the first `split` won by "A".
std::vector<BlockRecord> day_of_blocks(const std::string& day, int count, int split, double reward) {
  std::vector<BlockRecord> out;
  const auto start = parse_timestamp(day);
  for (int i = 0; i < count; ++i) {
    BlockRecord b;
    b.block_id = i;
    b.time = start + std::chrono::seconds(600 * i);
    b.difficulty = 2.0;
    b.reward_usd = reward;
    b.miner = i < split ? "A" : "B";
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(Csv, SplitHandlesQuotesAndCr) {
  const auto f = split_line("a,\"b,c\",\"d\"\"e\",\r", ',');
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[1], "b,c");
  EXPECT_EQ(f[2], "d\"e");
  EXPECT_EQ(f[3], "");
  EXPECT_EQ(detect_delimiter("a\tb"), '\t');
  EXPECT_EQ(detect_delimiter("a,b"), ',');
}

TEST(Csv, StrictNumbers) {
  double d = 0;
  EXPECT_TRUE(parse_double("1.5e3", d));
  EXPECT_EQ(d, 1500.0);
  EXPECT_FALSE(parse_double("1.5x", d));
  EXPECT_FALSE(parse_double("", d));
  long long i = 0;
  EXPECT_TRUE(parse_int("-12", i));
  EXPECT_FALSE(parse_int("1.0", i));
}

TEST(Blocks, HeaderOnly) {
  const auto p = parse(kHeader);
  EXPECT_TRUE(p.records.empty());
  EXPECT_TRUE(p.errors.empty());
}

TEST(Blocks, OneRowRoundTrips) {
  const auto p = parse(std::string(kHeader) + "7,2020-01-02 03:04:05,1.5e13,81234.5,12.25,F2Pool\n");
  ASSERT_EQ(p.records.size(), 1u);
  const auto& r = p.records[0];
  EXPECT_EQ(r.block_id, 7);
  EXPECT_EQ(r.time, parse_timestamp("2020-01-02T03:04:05Z"));
  EXPECT_EQ(r.difficulty, 1.5e13);
  EXPECT_EQ(r.reward_usd, 81234.5);
  EXPECT_EQ(r.fee_total_usd, 12.25);
  EXPECT_EQ(r.miner, "F2Pool");
  EXPECT_EQ(parse(blocks_csv(p)).records, p.records);
}

TEST(Blocks, BadRowsAreReportedNotDropped) {
  const auto p = parse(std::string(kHeader) + "1,2020-01-01,1,abc,0,A\n2,2020-01-01,1,5,0,B\n3,2020-01-01,1,-5,0,C\n");
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_EQ(p.records[0].block_id, 2);
  ASSERT_EQ(p.errors.size(), 2u);
  EXPECT_EQ(p.errors[0].line, 2u);
  EXPECT_EQ(p.errors[1].line, 4u);
}

TEST(Blocks, TabSeparatedWithExtras) {
  const auto p = parse("block_id\ttime\tdifficulty\treward_usd\tfee_total_usd\tminer\tsize\n1\t2020-01-01\t1\t2\t3\t\t900\n");
  EXPECT_EQ(p.delimiter, '\t');
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_TRUE(p.records[0].miner.empty());
  EXPECT_EQ(p.extra_columns, std::vector<std::string>{"size"});
  EXPECT_EQ(p.records[0].extra, std::vector<std::string>{"900"});
}

TEST(Blocks, MissingColumnOrEmptyInput) {
  EXPECT_THROW(parse("id,time,difficulty\n"), DataError);
  EXPECT_THROW(parse(""), DataError);
}

TEST(Concentration, Basics) {
  EXPECT_DOUBLE_EQ(hhi(std::vector<double>{0.75, 0.25}), 0.625);
  EXPECT_NEAR(hhi(std::vector<double>{0.25, 0.25, 0.25, 0.25}), 0.25, 1e-15);
  EXPECT_NEAR(hhi_normalised(std::vector<double>{0.25, 0.25, 0.25, 0.25}), 0.0, 1e-15);
  EXPECT_EQ(hhi_normalised(std::vector<double>{1.0}), 1.0);
  EXPECT_EQ(competition_intensity(2), 0.25);
  EXPECT_EQ(competition_intensity(1), 0.0);
  EXPECT_THROW(hhi(std::vector<double>{0.5, 0.4}), InvalidParameter);
  EXPECT_THROW(competition_intensity(0), InvalidParameter);
}

TEST(Daily, MiningRewardPerBlock) {
  const auto blocks = day_of_blocks("2020-05-01", 144, 144, 6.25 * 100);
  const auto days = aggregate_daily(blocks);
  ASSERT_EQ(days.size(), 1u);
  EXPECT_EQ(days[0].block_count, 144);
  EXPECT_DOUBLE_EQ(days[0].mining_reward, 625.0);
  EXPECT_EQ(days[0].n_miners, 1);
  EXPECT_EQ(days[0].hhi, 1.0);
  EXPECT_DOUBLE_EQ(days[0].implied_hashrate, 2.0 * 4294967296.0 * 144 / 86400);
}

TEST(Daily, SeventyFiveTwentyFive) {
  const auto days = aggregate_daily(day_of_blocks("2020-05-01", 100, 75, 1));
  EXPECT_DOUBLE_EQ(days[0].hhi, 0.625);
  EXPECT_DOUBLE_EQ(days[0].hhi_normalised, 0.25);
  EXPECT_EQ(days[0].n_miners, 2);
}

TEST(Daily, EmptyDaysAreKept) {
  auto blocks = day_of_blocks("2020-05-01", 3, 3, 1);
  const auto later = day_of_blocks("2020-05-03", 2, 0, 1);
  blocks.insert(blocks.end(), later.begin(), later.end());
  const auto days = aggregate_daily(blocks);
  ASSERT_EQ(days.size(), 3u);
  EXPECT_EQ(days[1].block_count, 0);
  EXPECT_TRUE(std::isnan(days[1].mining_reward));
}

TEST(Daily, UnattributedBlocksShareOneLabel) {
  auto blocks = day_of_blocks("2020-05-01", 4, 2, 1);
  blocks[2].miner.clear();
  blocks[3].miner.clear();
  const auto days = aggregate_daily(blocks);
  EXPECT_EQ(days[0].n_miners, 2);
  EXPECT_DOUBLE_EQ(days[0].hhi, 0.5);
}

TEST(Daily, RoundTripThroughCsv) {
  ParsedBlocks p;
  p.records = day_of_blocks("2020-05-01", 300, 120, 17.5);
  const auto again = parse(blocks_csv(p));
  const auto a = aggregate_daily(p.records);
  const auto b = aggregate_daily(again.records);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].block_count, b[i].block_count);
    EXPECT_EQ(a[i].mining_reward, b[i].mining_reward);
    EXPECT_EQ(a[i].hhi, b[i].hhi);
  }
}

TEST(Hardware, LookupAndSteps) {
  const auto& epochs = embedded_hardware_epochs();
  EXPECT_EQ(epochs.size(), 17u);
  validate(epochs);
  const auto& e = epoch_at(epochs, parse_date("2020-06-01"));
  EXPECT_EQ(e.device, "Antminer S19 Pro");
  EXPECT_EQ(e.joules_per_th, 30.0);
  EXPECT_DOUBLE_EQ(efficiency_gh_per_joule(e), 1000.0 / 30.0);
  EXPECT_EQ(epoch_at(epochs, parse_date("2020-03-23")).device, "Antminer S19 Pro");
  EXPECT_NE(epoch_at(epochs, parse_date("2020-03-22")).device, "Antminer S19 Pro");
  EXPECT_THROW(epoch_at(epochs, epochs.front().start - std::chrono::days(1)), DataError);
}

TEST(Hardware, EfficiencyIsMonotone) {
  const auto& epochs = embedded_hardware_epochs();
  std::vector<Date> dates;
  for (auto d = parse_date("2014-12-27"); d <= parse_date("2021-01-10"); d += std::chrono::days(1)) dates.push_back(d);
  const auto s = hardware_efficiency_series(epochs, dates);
  EXPECT_EQ(s.name, "hw_eff");
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s.values[i - 1], s.values[i]);
}

TEST(Hardware, ValidationRejectsDisorder) {
  std::vector<HardwareEpoch> bad{{"a", parse_date("2015-01-01"), 10}, {"b", parse_date("2014-01-01"), 5}};
  EXPECT_THROW(validate(bad), DataError);
}

TEST(Transform, LogFloor) {
  EXPECT_NEAR(floored_log(0.001), -6.907755278982137, 1e-12);
  EXPECT_EQ(floored_log(0.0), floored_log(0.001));
  EXPECT_EQ(floored_log(-3.0), floored_log(0.001));
  EXPECT_EQ(floored_log(1.0), 0.0);
  EXPECT_NEAR(floored_log(0.5), -0.6931471805599453, 1e-15);
}

TEST(Align, WeekendForwardFill) {
  auto blocks = day_of_blocks("2020-01-03", 10, 5, 1);  // Friday
  for (const char* day : {"2020-01-04", "2020-01-05", "2020-01-06", "2020-01-07"}) {
    const auto more = day_of_blocks(day, 10, 5, 1);
    blocks.insert(blocks.end(), more.begin(), more.end());
  }
  const auto daily = aggregate_daily(blocks);
  ExternalSeries treasury;
  treasury.name = "treasury_10y";
  treasury.unit = external_unit("treasury_10y");
  treasury.series.name = "treasury_10y";
  treasury.series.dates = {parse_date("2020-01-03"), parse_date("2020-01-06"), parse_date("2020-01-07")};
  treasury.series.values = {1.8, 1.81, 1.83};
  treasury.series.missing = {false, false, false};
  AlignOptions options;
  options.start = parse_date("2020-01-01");
  options.end = parse_date("2020-12-31");
  const auto ds = align_and_fill(daily, std::vector<ExternalSeries>{treasury}, options);
  ASSERT_EQ(ds.rows(), 5u);
  const auto& t = ds.column("treasury10y");
  EXPECT_EQ(t.values[1], 1.8);
  EXPECT_EQ(t.values[2], 1.8);
  EXPECT_EQ(t.values[3], 1.81);
  EXPECT_TRUE(ds.column("elec_eu").is_missing(0));
  EXPECT_EQ(ds.column("hhi").values[0], 0.5);
}

TEST(Align, EmptyIntersection) {
  const auto daily = aggregate_daily(day_of_blocks("2010-01-01", 2, 1, 1));
  EXPECT_THROW(align_and_fill(daily, {}), DataError);
}

TEST(Align, DatasetCsvRoundTripAndDeterminism) {
  auto blocks = day_of_blocks("2020-01-03", 20, 7, 3.25);
  const auto more = day_of_blocks("2020-01-04", 15, 15, 4.5);
  blocks.insert(blocks.end(), more.begin(), more.end());
  const auto build = [&] { return dataset_csv(align_and_fill(aggregate_daily(blocks), {})); };
  const auto text = build();
  EXPECT_EQ(text, build());
  EXPECT_EQ(text.rfind("date,hashrate,difficulty,mining_reward,elec_eu,elec_cn,elec_na,hw_eff,n_miners,comp_intensity,"
                       "hhi,hhi_norm,treasury10y\n",
                       0),
            0u);
  EXPECT_EQ(dataset_csv(parse_dataset_csv(text)), text);
  const auto logged = log_transform(parse_dataset_csv(text));
  for (const auto& c : logged.columns()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c.is_missing(i)) EXPECT_GE(c.values[i], std::log(0.001));
    }
  }
}

TEST(Descriptive, HandComputed) {
  stats::Dataset ds(stats::make_series("a", std::vector<double>{1, 2, 3, 4}).dates);
  ds.add(stats::make_series("a", std::vector<double>{1, 2, 3, 4}));
  ds.add(stats::make_series("c", std::vector<double>{5, 5, std::nan(""), 5}));
  const auto rows = descriptive_stats(ds);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].obs, 4u);
  EXPECT_DOUBLE_EQ(rows[0].mean, 2.5);
  EXPECT_NEAR(rows[0].std_dev, 1.2909944487358056, 1e-15);
  EXPECT_EQ(rows[0].min, 1);
  EXPECT_EQ(rows[0].max, 4);
  EXPECT_EQ(rows[1].obs, 3u);
  EXPECT_EQ(rows[1].std_dev, 0.0);
  EXPECT_EQ(rows[1].min, rows[1].max);
  EXPECT_EQ(descriptive_csv(rows).substr(0, 33), "variable,obs,mean,std_dev,min,max");
}

TEST(Fetch, SecondCallIsServedFromCache) {
  const auto dir = scratch("fetch");
  int calls = 0;
  FetchOptions options;
  options.transport = [&](const std::string&) {
    ++calls;
    return std::string("date,value\n2020-01-01,1.5\n");
  };
  const std::string url = "https://example.org/series.csv";
  const auto first = fetch_external(url, dir, options);
  EXPECT_FALSE(first.from_cache);
  const auto second = fetch_external(url, dir, options);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(first.sha256, second.sha256);
  EXPECT_TRUE(fs::exists(first.path.string() + ".meta.json"));
  options.force = true;
  fetch_external(url, dir, options);
  EXPECT_EQ(calls, 2);
  FetchOptions offline;
  offline.offline = true;
  EXPECT_THROW(fetch_external("https://example.org/other.csv", dir, offline), DataError);
  EXPECT_TRUE(fetch_external(url, dir, offline).from_cache);
}

TEST(External, LoadAndUnits) {
  const auto dir = scratch("external");
  std::ofstream(dir / "eu.csv") << "date,value\n2020-01-01,40.5\n2020-01-02,\n2020-01-03,41\n";
  const auto e = load_external("electricity_eu", (dir / "eu.csv").string());
  EXPECT_EQ(e.unit, "EUR/MWh");
  ASSERT_EQ(e.series.size(), 3u);
  EXPECT_TRUE(e.series.is_missing(1));
  EXPECT_THROW(external_unit("gold"), InvalidParameter);
}
