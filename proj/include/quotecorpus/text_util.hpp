#pragma once

#include <string>
#include <string_view>

namespace quotecorpus {

std::string_view trim(std::string_view s);

std::string ascii_lower(std::string_view s);

/// Lowercases ASCII A-Z and the Cyrillic ranges U+0400-U+042F (Ё, А-Я).
/// Everything else passes through unchanged. Enough for template names,
/// language codes, author names and the RNC source marker.
std::string fold_case(std::string_view s);

/// fold_case(trim(a)) == fold_case(trim(b))
bool equals_fold(std::string_view a, std::string_view b);

void append_utf8(std::string& out, char32_t cp);

}  // namespace quotecorpus
