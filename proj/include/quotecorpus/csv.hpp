#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace quotecorpus {

/// RFC 4180 quoting: fields containing comma, quote, CR or LF are wrapped in
/// double quotes with inner quotes doubled.
std::string csv_field(std::string_view value);

/// Writes one comma-separated row with an LF terminator.
void csv_row(std::ostream& out, std::span<const std::string> fields);

}  // namespace quotecorpus
