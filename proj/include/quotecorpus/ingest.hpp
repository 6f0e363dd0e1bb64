#pragma once

#include <cstdint>
#include <filesystem>

#include "quotecorpus/corpus_store.hpp"
#include "quotecorpus/dump_reader.hpp"
#include "quotecorpus/lang_registry.hpp"
#include "quotecorpus/wikitext.hpp"

namespace quotecorpus {

struct IngestSummary {
  std::uint64_t pages_read = 0;        // all pages in the dump
  std::uint64_t main_pages = 0;        // namespace-0 pages processed
  std::uint64_t quotes_inserted = 0;
  std::uint64_t year_parse_failures = 0;
  std::uint64_t year_order_swaps = 0;
  std::uint64_t dropped_templates = 0;
  std::uint64_t empty_text_rejected = 0;
  std::uint64_t unknown_sections = 0;
  std::size_t reader_buffer_high_water = 0;
};

/// dump -> main-namespace pages -> extract -> insert, one transaction.
IngestSummary ingest_dump(Store& store,
                          const std::filesystem::path& dump_path,
                          const WikiProfile& profile,
                          const LangRegistry& registry);

}  // namespace quotecorpus
