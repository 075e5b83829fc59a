#pragma once

// Block-level dumps: one row per block with at least id, time, difficulty,
// reward_usd, fee_total_usd and the miner label.

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "powsec/date.hpp"

namespace powsec::data {

struct BlockRecord {
  std::int64_t block_id = 0;
  Timestamp time{};
  double difficulty = 0;
  double reward_usd = 0;
  double fee_total_usd = 0;
  std::string miner;               // empty when unattributed
  std::vector<std::string> extra;  // remaining columns, in ParsedBlocks::extra_columns order

  bool operator==(const BlockRecord&) const = default;
};

struct RowError {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string message;
};

struct ParsedBlocks {
  std::vector<BlockRecord> records;
  std::vector<RowError> errors;
  std::vector<std::string> extra_columns;
  char delimiter = ',';
};

// Accepted header aliases: block_id or id; miner or guessed_miner.
// Throws DataError when a required column is missing or the input is empty.
ParsedBlocks parse_blocks(std::istream& in);
ParsedBlocks parse_blocks_file(const std::string& path);

// Writes records back in the required-column layout plus pass-through columns.
std::string blocks_csv(const ParsedBlocks& blocks);

}  // namespace powsec::data
