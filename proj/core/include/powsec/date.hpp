#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace powsec {

using Date = std::chrono::sys_days;
using Timestamp = std::chrono::sys_seconds;

// ISO-8601 calendar date, "YYYY-MM-DD". Throws DataError on malformed input.
Date parse_date(std::string_view text);

// "YYYY-MM-DD" or "YYYY-MM-DD HH:MM:SS" / "YYYY-MM-DDTHH:MM:SS[Z]", read as UTC.
Timestamp parse_timestamp(std::string_view text);

std::string format_date(Date d);

inline Date utc_day(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }

}  // namespace powsec
