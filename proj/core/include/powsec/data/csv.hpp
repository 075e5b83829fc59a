#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace powsec::data {

// Splits one delimited line. Double-quoted fields may contain the delimiter
// and "" escapes; a trailing CR is ignored.
std::vector<std::string> split_line(std::string_view line, char delimiter);

// Tab if the header line contains one, else comma.
char detect_delimiter(std::string_view header);

// Strict full-field number parse; false on junk, empty or trailing text.
bool parse_double(std::string_view text, double& out);
bool parse_int(std::string_view text, long long& out);

std::string read_file(const std::string& path);

}  // namespace powsec::data
