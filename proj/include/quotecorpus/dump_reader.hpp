#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace quotecorpus {

/// One page of a MediaWiki XML export.
struct RawPage {
  std::string title;
  int namespace_id = 0;
  std::int64_t page_id = 0;
  std::string wikitext;
};

struct ReaderStats {
  std::uint64_t pages_read = 0;
  /// Peak bytes buffered for a single page (title + accumulated revision
  /// text). Independent of dump size: the reader never holds more than the
  /// current page plus one fixed read chunk.
  std::size_t buffer_high_water = 0;
};

class PageSource {
 public:
  virtual ~PageSource() = default;
  virtual std::optional<RawPage> next_page() = 0;
};

/// Streaming reader over a pages-articles export. Only title, ns, id and the
/// latest revision/text are decoded; everything else is skipped. Single
/// consumer; yielded pages are plain values and freely shareable.
class DumpReader final : public PageSource {
 public:
  explicit DumpReader(const std::filesystem::path& path);
  ~DumpReader() override;

  DumpReader(DumpReader&&) noexcept;
  DumpReader& operator=(DumpReader&&) noexcept;

  std::optional<RawPage> next_page() override;

  const ReaderStats& stats() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Yields only namespace-0 pages of the wrapped source, preserving order.
class MainNamespaceFilter final : public PageSource {
 public:
  explicit MainNamespaceFilter(PageSource& inner) : inner_(&inner) {}

  std::optional<RawPage> next_page() override {
    while (auto page = inner_->next_page()) {
      if (page->namespace_id == 0) return page;
    }
    return std::nullopt;
  }

 private:
  PageSource* inner_;
};

}  // namespace quotecorpus
