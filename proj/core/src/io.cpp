#include "rsph/io.hpp"

#include "rsph/version.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace rsph {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto res = std::from_chars(first, last, v, std::chars_format::general);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::invalid_argument("parse_double: malformed number '" + token + "'");
  }
  return v;
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

void write_header_block(std::ostream& out,
                        const std::vector<std::pair<std::string, std::string>>& meta) {
  out << "# tool: riesz-sphere\n";
  out << "# version: " << kVersion << "\n";
  out << "# generated: " << timestamp_utc() << "\n";
  for (const auto& [key, value] : meta) {
    out << "# " << key << ": " << value << "\n";
  }
}

}  // namespace rsph
