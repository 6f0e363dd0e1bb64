#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace quotecorpus {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDumpError = 3;
inline constexpr int kStoreError = 4;
}  // namespace exit_code

struct RunConfig {
  std::string command;  // ingest | stats | hist-years | hist-centuries |
                        // authors | multi-year | export
  std::filesystem::path db_path;
  std::string wiki = "ru";
  std::optional<std::filesystem::path> dump_path;  // required by ingest
  std::int64_t threshold = 10;
  std::optional<std::filesystem::path> out_path;   // default: stdout
  std::optional<std::string> lang;                 // required by multi-year
  std::filesystem::path data_dir;                  // registries, author table
  std::optional<std::filesystem::path> authors_file;
  bool overwrite = false;
};

/// Executes one validated command. Diagnostics go to err; command output
/// (summaries, stats, CSV when no out_path is set) goes to out.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it. Returns a process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace quotecorpus
