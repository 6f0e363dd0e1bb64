#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quotecorpus/dump_reader.hpp"
#include "quotecorpus/lang_registry.hpp"
#include "quotecorpus/year_range.hpp"

namespace quotecorpus {

/// A template call found in wikitext. Argument values keep nested templates
/// and links verbatim; byte_begin/byte_end delimit the {{...}} span in the
/// source string, half-open.
struct TemplateCall {
  std::string name;  // trimmed, original case
  std::vector<std::string> positional_args;
  std::vector<std::pair<std::string, std::string>> named_args;  // in order
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;

  /// Last occurrence wins, like MediaWiki.
  const std::string* named(std::string_view key) const;
};

struct TemplateScan {
  std::vector<TemplateCall> calls;
  int dropped_unterminated = 0;
};

/// Finds every top-level {{...}} call by balanced-brace matching. Pipes
/// inside nested templates, [[...]] links or <!-- --> comments do not split
/// the enclosing call's arguments. Unterminated calls are dropped and
/// counted.
TemplateScan extract_templates(std::string_view wikitext);

/// Reduces wikitext to plain searchable text: drops ''' and '' emphasis,
/// flattens [[target|display]] links to their display text, replaces nested
/// templates by their last positional argument (or drops them), removes
/// comments, and converts newlines to spaces.
std::string strip_markup(std::string_view text);

struct QuotationDraft {
  std::string entry;
  std::string quote_lang;
  std::string text;
  std::optional<std::string> translation;
  std::optional<std::string> transcription;
  std::optional<std::string> author;
  std::optional<std::string> title;
  std::optional<std::string> source;
  std::optional<std::string> raw_date;
  std::optional<YearRange> years;
};

struct YearParseInfo {
  bool swapped = false;  // range arrived reversed and was normalized
};

/// Pulls a year or year range out of a free-form date field: "1927 г." ->
/// {1927,1927}, "1945—1955" -> {1945,1955}, "70 BC" / "70 г. до н. э." ->
/// {-70,-70}. Returns nullopt when no 1-4 digit year token is present.
/// Total: never throws on any byte sequence.
std::optional<YearRange> parse_year_field(std::string_view raw,
                                          YearParseInfo* info = nullptr);

enum class QuoteField {
  kText,
  kTranslation,
  kTranscription,
  kAuthor,
  kTitle,
  kSource,
  kDate,
};

enum class SectionRule {
  kRuLevel1Template,  // = {{-ru-}} =
  kEnLevel2Name,      // ==English==
};

/// Per-wiki parsing conventions. The common extraction code never hardcodes
/// a template name or parameter; everything wiki-specific lives here.
struct WikiProfile {
  std::string wiki_id;
  std::vector<std::string> quote_template_names;  // canonical (case-folded)
  std::map<QuoteField, std::vector<std::string>> field_aliases;
  int positional_text_index = -1;  // 1-based; -1 = positional text not used
  SectionRule section_rule = SectionRule::kRuLevel1Template;
  bool parse_citation_lines = false;  // enwiki '''1837''' citation lines
  std::string default_lang;           // language before the first section

  static WikiProfile russian();
  static WikiProfile english();

  bool is_quote_template(std::string_view raw_name) const;
};

struct QuoteParseInfo {
  bool rejected_empty_text = false;
  bool year_parse_failed = false;  // date field present but no year found
  bool year_swapped = false;
};

/// Turns one template call into a quotation draft. Returns nullopt when the
/// call is not a quote template of this profile or its text field is empty
/// after markup stripping.
std::optional<QuotationDraft> parse_quote_template(const TemplateCall& call,
                                                   const WikiProfile& profile,
                                                   std::string_view entry,
                                                   std::string_view section_lang,
                                                   QuoteParseInfo* info = nullptr);

struct PageWarnings {
  int dropped_templates = 0;
  int empty_text_rejected = 0;
  int year_parse_failures = 0;
  int year_order_swaps = 0;
  int unknown_sections = 0;
};

struct PageExtraction {
  std::vector<QuotationDraft> drafts;
  PageWarnings warnings;
};

/// Splits the page into language sections per the profile rule and collects
/// quotation drafts from each, assigning quote_lang from the section.
PageExtraction extract_quotations(const RawPage& page,
                                  const WikiProfile& profile,
                                  const LangRegistry& registry);

}  // namespace quotecorpus
