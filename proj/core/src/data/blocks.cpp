#include "powsec/data/blocks.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "powsec/data/csv.hpp"
#include "powsec/error.hpp"

namespace powsec::data {
namespace {

struct Columns {
  std::size_t id, time, difficulty, reward, fee, miner;
  std::vector<std::size_t> extra;
};

std::optional<std::size_t> find(const std::vector<std::string>& header, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
  }
  return std::nullopt;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timestamp(Timestamp t) {
  const Date d = utc_day(t);
  const auto secs = (t - d).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, " %02lld:%02lld:%02lld", static_cast<long long>(secs / 3600),
                static_cast<long long>(secs / 60 % 60), static_cast<long long>(secs % 60));
  return format_date(d) + buf;
}

std::string quote(const std::string& v, char d) {
  if (v.find(d) == std::string::npos && v.find('"') == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

ParsedBlocks parse_blocks(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("block dump is empty");
  ParsedBlocks out;
  out.delimiter = detect_delimiter(line);
  const auto header = split_line(line, out.delimiter);

  Columns c{};
  std::string missing;
  auto require = [&](std::initializer_list<const char*> names, std::size_t& slot) {
    if (auto i = find(header, names)) {
      slot = *i;
    } else {
      missing += (missing.empty() ? "" : ", ") + std::string(*names.begin());
    }
  };
  require({"block_id", "id"}, c.id);
  require({"time"}, c.time);
  require({"difficulty"}, c.difficulty);
  require({"reward_usd"}, c.reward);
  require({"fee_total_usd"}, c.fee);
  require({"miner", "guessed_miner"}, c.miner);
  if (!missing.empty()) throw DataError("block dump: missing required column(s): " + missing);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i != c.id && i != c.time && i != c.difficulty && i != c.reward && i != c.fee && i != c.miner) {
      c.extra.push_back(i);
      out.extra_columns.push_back(header[i]);
    }
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_line(line, out.delimiter);
    if (f.size() != header.size()) {
      out.errors.push_back({line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                                         std::to_string(f.size())});
      continue;
    }
    BlockRecord r;
    long long id = 0;
    std::string error;
    if (!parse_int(f[c.id], id)) error = "block_id not an integer: '" + f[c.id] + "'";
    r.block_id = id;
    if (error.empty()) {
      try {
        r.time = parse_timestamp(f[c.time]);
      } catch (const DataError&) {
        error = "time not parseable: '" + f[c.time] + "'";
      }
    }
    if (error.empty() && !parse_double(f[c.difficulty], r.difficulty)) {
      error = "difficulty not numeric: '" + f[c.difficulty] + "'";
    }
    if (error.empty() && !parse_double(f[c.reward], r.reward_usd)) {
      error = "reward_usd not numeric: '" + f[c.reward] + "'";
    }
    if (error.empty() && !(r.reward_usd >= 0.0)) error = "reward_usd negative";
    if (error.empty() && !parse_double(f[c.fee], r.fee_total_usd)) {
      error = "fee_total_usd not numeric: '" + f[c.fee] + "'";
    }
    if (!error.empty()) {
      out.errors.push_back({line_no, error});
      continue;
    }
    r.miner = f[c.miner];
    for (std::size_t i : c.extra) r.extra.push_back(f[i]);
    out.records.push_back(std::move(r));
  }
  return out;
}

ParsedBlocks parse_blocks_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  return parse_blocks(in);
}

std::string blocks_csv(const ParsedBlocks& blocks) {
  const char d = blocks.delimiter;
  std::ostringstream os;
  os << "block_id" << d << "time" << d << "difficulty" << d << "reward_usd" << d << "fee_total_usd" << d << "miner";
  for (const auto& name : blocks.extra_columns) os << d << quote(name, d);
  os << '\n';
  for (const auto& r : blocks.records) {
    os << r.block_id << d << timestamp(r.time) << d << number(r.difficulty) << d << number(r.reward_usd) << d
       << number(r.fee_total_usd) << d << quote(r.miner, d);
    for (const auto& v : r.extra) os << d << quote(v, d);
    os << '\n';
  }
  return os.str();
}

}  // namespace powsec::data
