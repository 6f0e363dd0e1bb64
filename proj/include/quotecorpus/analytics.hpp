#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quotecorpus/corpus_store.hpp"
#include "quotecorpus/year_range.hpp"

namespace quotecorpus {

/// Quotation count per year; only years with a positive count are stored.
using YearHistogram = std::map<int, std::int64_t>;

/// counts[y] = number of ranges covering y. Sweep over (from, to+1) deltas
/// followed by a prefix sum, so the cost is O(n log n + span) rather than
/// O(n * span). Throws InvalidRange on from > to (an upstream normalization
/// bug, not data).
YearHistogram year_histogram(std::span<const YearRange> ranges);

/// (min, max) over years with counts[y] > threshold; nullopt when no year
/// qualifies.
std::optional<std::pair<int, int>> dense_range(const YearHistogram& hist,
                                               std::int64_t threshold);

/// 1-based century ordinal: 1700-1799 -> 18, 2000-2099 -> 21. BC years map
/// by symmetry: -70 -> -1.
int century_of(int year);

/// Quotes per century, each quotation attributed to the century of its
/// from-year, so the bucket total equals the number of input ranges.
std::map<int, std::int64_t> century_distribution(std::span<const YearRange> ranges);

struct AuthorWindow {
  std::string name;
  int pub_from = 0;
  int pub_to = 0;
};

struct AuthorRow {
  std::string author;
  std::int64_t quote_count = 0;
  int pub_from = 0;
  int pub_to = 0;
  std::int64_t total_in_range = 0;
  double contribution = 0.0;  // quote_count / total_in_range, in [0,1]
};

/// Author windows are caller-supplied configuration (the publication spans
/// come from the Russian National Corpus, not from the store): one
/// name <tab> from <tab> to record per line.
std::vector<AuthorWindow> load_author_windows(const std::filesystem::path& path);

/// Per window: quote_count = quotes whose reference author equals the name
/// (trimmed, case-insensitive); total_in_range = quotes whose year range
/// intersects [pub_from, pub_to]. Rows sorted by quote_count descending.
std::vector<AuthorRow> author_stats(const Store& store,
                                    std::span<const AuthorWindow> windows);

struct MultiYearRow {
  Quotation quote;
  SourceRef ref;
  StoredYear years;
};

/// Quotes in the given language with a reference whose year range spans more
/// than one year (to > from), ordered by entry then quote_id.
std::vector<MultiYearRow> multi_year_query(const Store& store,
                                           std::string_view lang);

/// Ranges of all dated quotes, one per quote, for the histogram commands.
std::vector<YearRange> dated_quote_ranges(const Store& store);

/// "19.8" for 0.1979...; one decimal, period separator.
std::string format_pct(double ratio);

}  // namespace quotecorpus
