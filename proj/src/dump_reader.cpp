#include "quotecorpus/dump_reader.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <vector>

#include "quotecorpus/errors.hpp"
#include "quotecorpus/text_util.hpp"

namespace quotecorpus {

namespace {

constexpr std::size_t kChunkSize = 64 * 1024;
constexpr std::size_t kMaxMarkupLen = 1 << 20;  // runaway-tag guard
constexpr int kMaxDepth = 256;

// local part of a possibly prefixed element name
std::string_view local_name(std::string_view name) {
  auto colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

}  // namespace

struct DumpReader::Impl {
  enum class Lex {
    Content,      // character data
    Entity,       // inside &...;
    MarkupStart,  // just consumed '<'
    StartTag,     // inside <name ...>
    EndTag,       // inside </name>
    Pi,           // inside <?...?>
    Bang,         // after <!, deciding comment/CDATA/decl
    Comment,      // inside <!-- -->
    Cdata,        // inside <![CDATA[ ]]>
    Decl,         // inside <!DOCTYPE ...> and friends
  };

  // what the current character data feeds
  enum class Capture { None, Title, Ns, PageId, Text };

  std::ifstream file;
  std::vector<char> chunk = std::vector<char>(kChunkSize);
  std::size_t chunk_len = 0;
  std::size_t chunk_pos = 0;
  std::size_t offset = 0;  // absolute bytes consumed
  bool input_eof = false;

  Lex lex = Lex::Content;
  std::string markup;   // current tag / PI / bang accumulation
  std::string entity;   // current &...; accumulation
  int bang_dashes = 0;  // trailing '-' run inside a comment
  int cdata_brackets = 0;
  char quote_char = 0;  // inside attribute value of a start tag

  std::vector<std::string> open_elements;
  bool root_seen = false;
  bool doc_done = false;
  bool prolog_checked = false;

  // current page state
  bool in_page = false;
  bool in_revision = false;
  int skip_below_depth = -1;  // ignore everything under this depth (e.g. contributor)
  Capture capture = Capture::None;
  std::string title;
  std::string ns_buf;
  std::string id_buf;
  bool page_id_set = false;
  std::string text;

  bool page_ready = false;
  RawPage ready_page;

  ReaderStats stats;

  explicit Impl(const std::filesystem::path& path) {
    std::error_code ec;
    auto status = std::filesystem::status(path, ec);
    if (ec || !std::filesystem::exists(status)) {
      throw FileNotFound("no such file: " + path.string());
    }
    if (std::filesystem::is_directory(status)) {
      throw FileNotFound("not a file: " + path.string());
    }
    file.open(path, std::ios::binary);
    if (!file) {
      throw FileNotFound("cannot open: " + path.string());
    }
    // decide the root element eagerly so open_dump reports NotADump
    while (!root_seen && !doc_done) {
      if (!step()) {
        if (!root_seen) throw NotADump("no root element found");
      }
    }
  }

  [[noreturn]] void malformed(const std::string& what) const {
    throw MalformedXml(what, offset);
  }

  void refill() {
    if (input_eof) return;
    file.read(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    chunk_len = static_cast<std::size_t>(file.gcount());
    chunk_pos = 0;
    if (chunk_len == 0) input_eof = true;
  }

  // Processes bytes until a page completes, the document ends, or input is
  // exhausted. Returns false when no more bytes are available.
  bool step() {
    while (true) {
      if (chunk_pos >= chunk_len) {
        refill();
        if (chunk_len == 0) {
          at_eof();
          return false;
        }
      }
      while (chunk_pos < chunk_len) {
        char c = chunk[chunk_pos++];
        ++offset;
        feed(c);
        if (page_ready || doc_done) return true;
      }
    }
  }

  void at_eof() {
    if (!doc_done) {
      if (!open_elements.empty() || lex != Lex::Content) {
        malformed("unexpected end of file");
      }
      if (!root_seen) return;  // constructor reports NotADump
      doc_done = true;
    }
  }

  void feed(char raw) {
    unsigned char c = static_cast<unsigned char>(raw);
    switch (lex) {
      case Lex::Content:
        if (c == '<') {
          lex = Lex::MarkupStart;
          markup.clear();
        } else if (c == '&') {
          if (capture != Capture::None) {
            lex = Lex::Entity;
            entity.clear();
          }
          // entities outside captured elements are skipped with the rest
        } else {
          // UTF-8 BOM before the prolog
          if (!root_seen && offset <= 3 &&
              (c == 0xEF || c == 0xBB || c == 0xBF)) {
            return;
          }
          append_char(raw);
        }
        return;

      case Lex::Entity:
        if (c == ';') {
          decode_entity();
          lex = Lex::Content;
        } else if (entity.size() > 12 || c == '<' || c == '&') {
          // not a real entity; emit literally and resume
          append_char('&');
          for (char e : entity) append_char(e);
          entity.clear();
          if (c == '<') {
            lex = Lex::MarkupStart;
            markup.clear();
          } else if (c == '&') {
            entity.clear();
            // stay in Entity for the new candidate
          } else {
            append_char(raw);
            lex = Lex::Content;
          }
        } else {
          entity.push_back(raw);
        }
        return;

      case Lex::MarkupStart:
        if (c == '/') {
          lex = Lex::EndTag;
        } else if (c == '?') {
          lex = Lex::Pi;
        } else if (c == '!') {
          lex = Lex::Bang;
          bang_dashes = 0;
        } else {
          lex = Lex::StartTag;
          markup.push_back(raw);
        }
        return;

      case Lex::StartTag:
        if (quote_char != 0) {
          if (raw == quote_char) quote_char = 0;
          markup.push_back(raw);
        } else if (c == '"' || c == '\'') {
          quote_char = raw;
          markup.push_back(raw);
        } else if (c == '>') {
          lex = Lex::Content;
          handle_start_tag();
        } else {
          markup.push_back(raw);
          if (markup.size() > kMaxMarkupLen) malformed("tag too long");
        }
        return;

      case Lex::EndTag:
        if (c == '>') {
          lex = Lex::Content;
          handle_end_tag();
        } else {
          markup.push_back(raw);
          if (markup.size() > kMaxMarkupLen) malformed("tag too long");
        }
        return;

      case Lex::Pi:
        markup.push_back(raw);
        if (markup.size() >= 2 && markup[markup.size() - 2] == '?' &&
            c == '>') {
          handle_pi();
          lex = Lex::Content;
        } else if (markup.size() > kMaxMarkupLen) {
          malformed("processing instruction too long");
        }
        return;

      case Lex::Bang:
        markup.push_back(raw);
        if (markup == "--") {
          lex = Lex::Comment;
          markup.clear();
          bang_dashes = 0;
        } else if (markup == "[CDATA[") {
          lex = Lex::Cdata;
          cdata_brackets = 0;
        } else if (markup.size() >= 7 ||
                   (c == '>' && markup.front() != '-' &&
                    markup.front() != '[')) {
          // DOCTYPE or similar declaration
          if (c == '>') {
            lex = Lex::Content;
          } else {
            lex = Lex::Decl;
          }
          markup.clear();
        }
        return;

      case Lex::Comment:
        if (c == '-') {
          ++bang_dashes;
        } else if (c == '>' && bang_dashes >= 2) {
          lex = Lex::Content;
          bang_dashes = 0;
        } else {
          bang_dashes = 0;
        }
        return;

      case Lex::Cdata:
        if (c == ']') {
          ++cdata_brackets;
        } else if (c == '>' && cdata_brackets >= 2) {
          lex = Lex::Content;
          cdata_brackets = 0;
        } else {
          while (cdata_brackets > 0) {
            append_char(']');
            --cdata_brackets;
          }
          append_char(raw);
        }
        return;

      case Lex::Decl:
        if (c == '>') lex = Lex::Content;
        return;
    }
  }

  void append_char(char c) {
    switch (capture) {
      case Capture::None:
        return;
      case Capture::Title:
        title.push_back(c);
        return;
      case Capture::Ns:
        ns_buf.push_back(c);
        return;
      case Capture::PageId:
        id_buf.push_back(c);
        return;
      case Capture::Text:
        text.push_back(c);
        return;
    }
  }

  void decode_entity() {
    if (entity == "lt") {
      append_char('<');
    } else if (entity == "gt") {
      append_char('>');
    } else if (entity == "amp") {
      append_char('&');
    } else if (entity == "quot") {
      append_char('"');
    } else if (entity == "apos") {
      append_char('\'');
    } else if (entity.size() > 1 && entity[0] == '#') {
      char32_t cp = 0;
      bool ok = false;
      if (entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X')) {
        for (std::size_t i = 2; i < entity.size(); ++i) {
          char d = entity[i];
          int v = d >= '0' && d <= '9'   ? d - '0'
                  : d >= 'a' && d <= 'f' ? d - 'a' + 10
                  : d >= 'A' && d <= 'F' ? d - 'A' + 10
                                         : -1;
          if (v < 0) {
            ok = false;
            break;
          }
          cp = cp * 16 + static_cast<char32_t>(v);
          ok = true;
        }
      } else {
        for (std::size_t i = 1; i < entity.size(); ++i) {
          char d = entity[i];
          if (d < '0' || d > '9') {
            ok = false;
            break;
          }
          cp = cp * 10 + static_cast<char32_t>(d - '0');
          ok = true;
        }
      }
      if (ok && cp <= 0x10FFFF) {
        if (capture != Capture::None) {
          std::string tmp;
          append_utf8(tmp, cp);
          for (char t : tmp) append_char(t);
        }
      } else {
        emit_entity_literal();
      }
      return;
    } else {
      emit_entity_literal();
      return;
    }
  }

  void emit_entity_literal() {
    append_char('&');
    for (char e : entity) append_char(e);
    append_char(';');
  }

  void handle_pi() {
    // markup holds "...?>"; only the xml declaration matters
    std::string_view pi(markup.data(), markup.size() - 2);
    if (prolog_checked || root_seen) return;
    prolog_checked = true;
    std::string low = ascii_lower(pi);
    if (!low.starts_with("xml")) return;
    auto enc = low.find("encoding");
    if (enc == std::string::npos) return;
    auto q1 = low.find_first_of("\"'", enc);
    if (q1 == std::string::npos) return;
    auto q2 = low.find(low[q1], q1 + 1);
    if (q2 == std::string::npos) return;
    std::string_view value(low.data() + q1 + 1, q2 - q1 - 1);
    if (value != "utf-8" && value != "utf8") {
      throw NotADump("unsupported encoding: " + std::string(value));
    }
  }

  void handle_start_tag() {
    std::string_view tag(markup);
    bool self_closing = false;
    while (!tag.empty() &&
           (tag.back() == ' ' || tag.back() == '\t' || tag.back() == '\n' ||
            tag.back() == '\r')) {
      tag.remove_suffix(1);
    }
    if (!tag.empty() && tag.back() == '/') {
      self_closing = true;
      tag.remove_suffix(1);
    }
    auto name_end = tag.find_first_of(" \t\n\r");
    std::string_view name =
        name_end == std::string_view::npos ? tag : tag.substr(0, name_end);
    if (name.empty()) malformed("empty element name");

    open_element(std::string(local_name(name)));
    if (self_closing) {
      close_element(std::string(local_name(name)));
    }
    markup.clear();
  }

  void handle_end_tag() {
    std::string_view tag = trim(std::string_view(markup));
    close_element(std::string(local_name(tag)));
    markup.clear();
  }

  void open_element(std::string name) {
    if (doc_done) malformed("content after document end");
    if (!root_seen) {
      if (name != "mediawiki") {
        throw NotADump("root element is <" + name + ">, not <mediawiki>");
      }
      root_seen = true;
    }
    if (static_cast<int>(open_elements.size()) >= kMaxDepth) {
      malformed("element nesting too deep");
    }
    open_elements.push_back(name);
    int depth = static_cast<int>(open_elements.size());

    if (skip_below_depth >= 0 && depth > skip_below_depth) return;

    capture = Capture::None;
    if (depth == 2 && name == "page") {
      in_page = true;
      in_revision = false;
      title.clear();
      ns_buf.clear();
      id_buf.clear();
      page_id_set = false;
      text.clear();
    } else if (in_page && depth == 3) {
      if (name == "title") {
        capture = Capture::Title;
      } else if (name == "ns") {
        capture = Capture::Ns;
      } else if (name == "id" && !page_id_set) {
        capture = Capture::PageId;
      } else if (name == "revision") {
        in_revision = true;
        // latest revision wins
        note_high_water();
        text.clear();
      } else {
        skip_below_depth = depth;
      }
    } else if (in_revision && depth == 4) {
      if (name == "text") {
        capture = Capture::Text;
      } else {
        skip_below_depth = depth;
      }
    } else if (depth >= 3 && !in_page) {
      skip_below_depth = depth;
    } else if (in_page && depth >= 4 && !in_revision) {
      skip_below_depth = depth;
    } else if (in_revision && depth >= 5) {
      skip_below_depth = depth;
    }
  }

  void close_element(const std::string& name) {
    if (open_elements.empty()) {
      malformed("closing tag </" + name + "> with no open element");
    }
    if (open_elements.back() != name) {
      malformed("mismatched closing tag </" + name + ">, expected </" +
                open_elements.back() + ">");
    }
    int depth = static_cast<int>(open_elements.size());
    open_elements.pop_back();
    capture = Capture::None;
    if (skip_below_depth >= 0) {
      if (depth > skip_below_depth) return;
      skip_below_depth = -1;
    }

    if (depth == 3 && name == "id" && in_page && !in_revision) {
      page_id_set = !id_buf.empty();
    } else if (depth == 3 && name == "revision") {
      in_revision = false;
    } else if (depth == 2 && name == "page") {
      finish_page();
    } else if (depth == 1) {
      doc_done = true;
    }
  }

  void finish_page() {
    in_page = false;
    note_high_water();
    RawPage page;
    page.title = std::string(trim(title));
    if (page.title.empty()) malformed("page with empty <title>");
    auto parse_int = [&](const std::string& buf, const char* what) {
      std::string_view t = trim(buf);
      if (t.empty()) malformed(std::string("page without <") + what + ">");
      std::int64_t value = 0;
      bool neg = false;
      std::size_t i = 0;
      if (t[0] == '-') {
        neg = true;
        i = 1;
      }
      if (i == t.size()) malformed(std::string("bad <") + what + "> value");
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') {
          malformed(std::string("bad <") + what + "> value");
        }
        value = value * 10 + (t[i] - '0');
      }
      return neg ? -value : value;
    };
    page.namespace_id = static_cast<int>(parse_int(ns_buf, "ns"));
    page.page_id = parse_int(id_buf, "id");
    page.wikitext = std::move(text);
    text.clear();
    ready_page = std::move(page);
    page_ready = true;
    ++stats.pages_read;
  }

  void note_high_water() {
    std::size_t held = title.size() + ns_buf.size() + id_buf.size() + text.size();
    stats.buffer_high_water = std::max(stats.buffer_high_water, held);
  }

  std::optional<RawPage> next_page() {
    if (page_ready) {
      page_ready = false;
      return std::move(ready_page);
    }
    while (!doc_done) {
      if (!step()) return std::nullopt;
      if (page_ready) {
        page_ready = false;
        return std::move(ready_page);
      }
    }
    return std::nullopt;
  }
};

DumpReader::DumpReader(const std::filesystem::path& path)
    : impl_(std::make_unique<Impl>(path)) {}

DumpReader::~DumpReader() = default;
DumpReader::DumpReader(DumpReader&&) noexcept = default;
DumpReader& DumpReader::operator=(DumpReader&&) noexcept = default;

std::optional<RawPage> DumpReader::next_page() { return impl_->next_page(); }

const ReaderStats& DumpReader::stats() const noexcept { return impl_->stats; }

}  // namespace quotecorpus
