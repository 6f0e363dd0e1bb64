#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quotecorpus/wikitext.hpp"
#include "quotecorpus/year_range.hpp"

namespace quotecorpus {

inline constexpr std::string_view kSchemaVersion = "wikiquote-corpus/1";
/// A reference counts as Russian National Corpus iff its source field equals
/// this marker, case-insensitive and trimmed.
inline constexpr std::string_view kRncMarker = "НКРЯ";

struct Quotation {
  std::int64_t quote_id = 0;
  std::string entry;
  std::string quote_lang;
  std::string text;
  std::optional<std::string> translation;
  std::optional<std::string> transcription;
  std::optional<std::int64_t> ref_id;
};

struct SourceRef {
  std::int64_t ref_id = 0;
  std::optional<std::string> author;
  std::optional<std::string> title;
  std::optional<std::string> source;
  std::optional<std::int64_t> year_id;
};

struct StoredYear {
  std::int64_t year_id = 0;
  YearRange range;
};

struct QuoteRow {
  Quotation quote;
  std::optional<SourceRef> ref;
  std::optional<StoredYear> years;
};

struct QuoteFilter {
  std::optional<std::string> quote_lang;
  std::optional<bool> has_ref;
  std::optional<bool> has_year;
  std::optional<bool> multi_year;  // year range with to > from
  std::optional<std::string> entry;
};

struct CorpusStats {
  std::int64_t total_quotes = 0;
  std::map<std::string, std::int64_t> quotes_per_lang;
  std::int64_t quotes_with_ref = 0;
  std::int64_t refs_to_rnc = 0;
  std::int64_t quotes_with_year = 0;
  std::int64_t unique_year_pairs = 0;
};

/// Single-file relational store for the quotation corpus, tables
/// quote / quot_translation / quot_transcription / quot_ref / quot_year.
/// (from, to) pairs in quot_year are deduplicated on insert. One writer at a
/// time; a handle must not be shared between threads without external
/// serialization.
class Store {
 public:
  /// Creates the file when absent; opens an existing compatible one.
  /// Throws SchemaMismatch when the file carries a different schema version,
  /// IoFailure on anything the engine cannot read or write.
  static Store open(const std::filesystem::path& path);

  Store(Store&&) noexcept;
  Store& operator=(Store&&) noexcept;
  ~Store();

  /// Persists one draft: quote row, optional translation / transcription
  /// rows, optional reference with its deduplicated year pair. Returns the
  /// new quote_id. draft.text must be non-empty.
  std::int64_t insert_quotation(const QuotationDraft& draft);

  /// Rows matching the conjunction of present filter fields, by quote_id.
  std::vector<QuoteRow> query_quotes(const QuoteFilter& filter = {}) const;

  CorpusStats count_stats() const;

  bool empty() const;

  /// Removes all corpus rows, keeping the schema. Backs the CLI's explicit
  /// overwrite re-ingestion.
  void clear();

  /// Groups many inserts into one transaction.
  void begin_bulk();
  void commit_bulk();

 private:
  Store();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace quotecorpus
