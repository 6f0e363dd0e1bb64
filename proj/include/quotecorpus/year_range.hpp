#pragma once

#include <compare>

namespace quotecorpus {

/// Publication years of a quotation's source, inclusive on both ends.
/// BC years are negative: -70 means 70 BC. Single-year works have from == to.
struct YearRange {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const YearRange&, const YearRange&) = default;
};

}  // namespace quotecorpus
