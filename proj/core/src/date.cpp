#include "powsec/date.hpp"

#include <charconv>
#include <cstdio>

#include "powsec/error.hpp"

namespace powsec {
namespace {

int read_int(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos + len > text.size()) throw DataError("truncated date/time: '" + std::string(text) + "'");
  int value = 0;
  const char* first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc{} || ptr != first + len) {
    throw DataError("malformed date/time: '" + std::string(text) + "'");
  }
  return value;
}

void expect_char(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw DataError("malformed date/time: '" + std::string(text) + "'");
  }
}

}  // namespace

Date parse_date(std::string_view text) {
  if (text.size() != 10) throw DataError("expected YYYY-MM-DD, got '" + std::string(text) + "'");
  expect_char(text, 4, '-');
  expect_char(text, 7, '-');
  const std::chrono::year_month_day ymd{std::chrono::year{read_int(text, 0, 4)},
                                        std::chrono::month{static_cast<unsigned>(read_int(text, 5, 2))},
                                        std::chrono::day{static_cast<unsigned>(read_int(text, 8, 2))}};
  if (!ymd.ok()) throw DataError("invalid calendar date '" + std::string(text) + "'");
  return Date{ymd};
}

Timestamp parse_timestamp(std::string_view text) {
  const Date day = parse_date(text.substr(0, std::min<std::size_t>(10, text.size())));
  if (text.size() == 10) return Timestamp{day};
  if (text[10] != ' ' && text[10] != 'T') throw DataError("malformed timestamp '" + std::string(text) + "'");
  expect_char(text, 13, ':');
  expect_char(text, 16, ':');
  const int h = read_int(text, 11, 2);
  const int m = read_int(text, 14, 2);
  const int s = read_int(text, 17, 2);
  const std::size_t rest = text.size() - 19;
  if (rest > 1 || (rest == 1 && text[19] != 'Z')) {
    throw DataError("unsupported timestamp suffix in '" + std::string(text) + "'");
  }
  if (h > 23 || m > 59 || s > 60) throw DataError("time out of range in '" + std::string(text) + "'");
  return Timestamp{day} + std::chrono::hours{h} + std::chrono::minutes{m} + std::chrono::seconds{s};
}

std::string format_date(Date d) {
  const std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

}  // namespace powsec
