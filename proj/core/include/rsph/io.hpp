#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rsph {

/// Locale-independent decimal formatting, 17 significant digits.
std::string format_double(double value);

/// Parse a decimal number, locale-independent. Throws on malformed input.
double parse_double(const std::string& token);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string timestamp_utc();

/// Writes the standard output-file header block as '#'-prefixed comment
/// lines: tool, version, timestamp, then the given key/value pairs.
void write_header_block(std::ostream& out,
                        const std::vector<std::pair<std::string, std::string>>& meta);

}  // namespace rsph
