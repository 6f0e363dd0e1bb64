#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace quotecorpus {

struct LangInfo {
  std::string code;     // lowercase, [a-z-]
  std::string name_en;
  std::string name_ru;
};

/// Language-code table shared by the per-wiki profiles. Loaded once from a
/// tab-separated data file (code, English name, Russian name) and immutable
/// afterwards.
class LangRegistry {
 public:
  static LangRegistry load_file(const std::filesystem::path& path);

  std::optional<LangInfo> lookup_code(std::string_view code) const;

  /// Reverse lookup by English language name (trimmed, case-insensitive);
  /// used to resolve English-Wiktionary section headings like ==Old French==.
  std::optional<LangInfo> lookup_name_en(std::string_view name) const;

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<LangInfo>& entries() const noexcept { return entries_; }

 private:
  std::vector<LangInfo> entries_;
  std::unordered_map<std::string, std::size_t> by_code_;
  std::unordered_map<std::string, std::size_t> by_name_en_;
};

/// Loads the registry bundled for a wiki profile ("ru" or "en") from
/// data_dir. Throws UnknownProfile for anything else.
LangRegistry registry_for(std::string_view profile_id,
                          const std::filesystem::path& data_dir);

}  // namespace quotecorpus
