#include "wikidb/wikitext.hpp"

#include <array>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "entities.hpp"
#include "wikidb/utf8.hpp"

// Rendering happens in two stages.
//
// preprocess() removes comments, templates and tables in place and marks
// <nowiki> content as literal. The renderer then walks the result line by
// line, turning links, headings, quotes, tags and entities into plain text.
//
// Every character reaches the output through Renderer::put(), which refuses
// characters that would complete a markup token in the output ("[[", "''",
// a tag, an entity, ...). Rendered text therefore renders to itself.

namespace wikidb {

namespace {

constexpr std::size_t kMaxTagLength = 512;
constexpr std::size_t kMaxExtLinkScan = 4096;
constexpr std::size_t kMaxLinkScan = 16384;
constexpr std::size_t kMaxEntityScan = 40;

bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool ascii_alnum(char c) { return ascii_alpha(c) || (c >= '0' && c <= '9'); }
bool blank(char c) { return c == ' ' || c == '\t'; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool istarts_with(std::string_view s, std::size_t at, std::string_view prefix) {
  if (s.size() - at < prefix.size() || at > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (lower(s[at + i]) != prefix[i]) return false;
  }
  return true;
}

constexpr std::array<std::string_view, 9> kUrlSchemes = {
    "http://", "https://", "ftp://", "ftps://", "irc://", "ircs://", "mailto:", "news:", "//"};

/// Length of the URL scheme at `s[at]`, or 0.
std::size_t scheme_length(std::string_view s, std::size_t at) {
  for (const auto scheme : kUrlSchemes) {
    if (istarts_with(s, at, scheme)) return scheme.size();
  }
  return 0;
}

bool url_char(char c) {
  return c != ' ' && c != '\t' && c != '\n' && c != '[' && c != ']' && c != '<' && c != '>' &&
         c != '"';
}

/// Entities whose decoded character cannot take part in markup.
bool decodes_safely(char32_t cp) {
  if (cp >= 0xA0) return cp != 0x2028 && cp != 0x2029 && cp != 0xFEFF;
  if (cp >= U'0' && cp <= U'9') return true;
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  return cp == U' ' || cp == U'"' || cp == U'.' || cp == U',' || cp == U'(' || cp == U')';
}

constexpr std::array<std::string_view, 20> kInterwikiPrefixes = {
    "wikt",   "wiktionary", "w",          "wikipedia", "commons", "meta",    "m",
    "q",      "wikiquote",  "s",          "wikisource", "b",      "wikibooks", "n",
    "wikinews", "species",  "v",          "wikiversity", "voy",   "d"};

bool is_interwiki(std::string_view target) {
  const auto colon = target.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  const std::string_view prefix = target.substr(0, colon);
  // Language links: lowercase code such as "fr", "de", "zh-yue", "simple".
  bool language = prefix.size() >= 2 && prefix.size() <= 12;
  for (std::size_t i = 0; language && i < prefix.size(); ++i) {
    const char c = prefix[i];
    language = (c >= 'a' && c <= 'z') || (c == '-' && i > 1);
  }
  if (language && (prefix.size() <= 3 || prefix.find('-') != std::string_view::npos || prefix == "simple")) {
    return true;
  }
  for (const auto p : kInterwikiPrefixes) {
    if (prefix.size() == p.size() && istarts_with(prefix, 0, p)) return true;
  }
  return false;
}

bool has_media_prefix(std::string_view target) {
  return istarts_with(target, 0, "file:") || istarts_with(target, 0, "image:") ||
         istarts_with(target, 0, "media:");
}

bool has_category_prefix(std::string_view target) {
  if (!istarts_with(target, 0, "category")) return false;
  std::size_t i = 8;
  while (i < target.size() && blank(target[i])) ++i;
  return i < target.size() && target[i] == ':';
}

// ---------------------------------------------------------------------------
// Stage 1

struct Frame {
  enum Kind { Template, Parameter, Table } kind;
  std::size_t mark;
};

void preprocess(std::string& s, std::vector<bool>& literal, std::size_t& warnings) {
  const std::size_t n = s.size();
  literal.assign(n, false);
  std::vector<Frame> frames;
  std::size_t r = 0;
  std::size_t w = 0;

  auto write = [&](char c, bool lit) {
    s[w] = c;
    literal[w] = lit;
    ++w;
  };
  auto at_line_start = [&] { return w == 0 || s[w - 1] == '\n'; };

  while (r < n) {
    const char c = s[r];
    if (c == '<') {
      if (s.compare(r, 4, "<!--") == 0) {
        const auto close = s.find("-->", r + 4);
        if (close == std::string::npos) {
          ++warnings;
          r += 4;
        } else {
          r = close + 3;
        }
        continue;
      }
      if (istarts_with(s, r, "<nowiki")) {
        std::size_t gt = r + 7;
        while (gt < n && gt - r < 64 && s[gt] != '>' && s[gt] != '<') ++gt;
        if (gt < n && s[gt] == '>' && (gt == r + 7 || blank(s[r + 7]) || s[r + 7] == '/')) {
          if (s[gt - 1] == '/') {
            r = gt + 1;
            continue;
          }
          std::size_t close = gt + 1;
          while (close < n && !istarts_with(s, close, "</nowiki>")) {
            close = s.find('<', close + 1);
            if (close == std::string::npos) close = n;
          }
          if (close >= n) {
            ++warnings;
            r = gt + 1;
            continue;
          }
          for (std::size_t i = gt + 1; i < close; ++i) write(s[i], true);
          r = close + 9;
          continue;
        }
      }
    } else if (c == '{') {
      if (s.compare(r, 3, "{{{") == 0) {
        frames.push_back({Frame::Parameter, w});
        r += 3;
        continue;
      }
      if (s.compare(r, 2, "{{") == 0) {
        frames.push_back({Frame::Template, w});
        r += 2;
        continue;
      }
      if (s.compare(r, 2, "{|") == 0 && at_line_start()) {
        frames.push_back({Frame::Table, w});
        r += 2;
        continue;
      }
    } else if (c == '}' && !frames.empty()) {
      const auto kind = frames.back().kind;
      if (kind == Frame::Parameter && s.compare(r, 3, "}}}") == 0) {
        w = frames.back().mark;
        frames.pop_back();
        r += 3;
        continue;
      }
      if (kind == Frame::Template && s.compare(r, 2, "}}") == 0) {
        w = frames.back().mark;
        frames.pop_back();
        r += 2;
        continue;
      }
    } else if (c == '|' && !frames.empty() && frames.back().kind == Frame::Table &&
               r + 1 < n && s[r + 1] == '}' && at_line_start()) {
      w = frames.back().mark;
      frames.pop_back();
      r += 2;
      continue;
    }
    write(c, false);
    ++r;
  }
  // Unclosed openers were never written; their content stays as text.
  warnings += frames.size();
  s.resize(w);
  literal.resize(w);
}

// ---------------------------------------------------------------------------
// Redirect directive

struct RedirectMatch {
  bool directive = false;
  std::optional<std::string> target;
  std::size_t end = 0;  ///< first byte after the directive's link
};

RedirectMatch match_redirect(std::string_view s, const std::vector<bool>* literal) {
  RedirectMatch m;
  auto plain = [&](std::size_t i) { return literal == nullptr || !(*literal)[i]; };
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])) && plain(i)) ++i;
  if (!istarts_with(s, i, "#redirect")) return m;
  for (std::size_t k = i; k < i + 9; ++k) {
    if (!plain(k)) return m;
  }
  m.directive = true;
  i += 9;
  while (i < s.size() && blank(s[i])) ++i;
  if (i < s.size() && s[i] == ':') ++i;
  while (i < s.size() && blank(s[i])) ++i;
  if (s.compare(i, 2, "[[") != 0 || !plain(i) || !plain(i + 1)) return m;
  const std::size_t begin = i + 2;
  std::size_t k = begin;
  std::size_t target_end = std::string_view::npos;
  while (k + 1 < s.size() && s[k] != '\n') {
    if (!plain(k)) return m;
    if (s[k] == '|' && target_end == std::string_view::npos) target_end = k;
    if (s[k] == ']' && s[k + 1] == ']') break;
    if (s[k] == '[' && s[k + 1] == '[') return m;
    ++k;
  }
  if (k + 1 >= s.size() || s[k] != ']' || s[k + 1] != ']') return m;
  if (target_end == std::string_view::npos) target_end = k;
  std::string_view target = s.substr(begin, target_end - begin);
  while (!target.empty() && blank(target.front())) target.remove_prefix(1);
  if (!target.empty() && target.front() == ':') target.remove_prefix(1);
  m.target = normalize_title(target);
  if (m.target) m.end = k + 2;
  return m;
}

// ---------------------------------------------------------------------------
// Stage 2

class Renderer {
 public:
  Renderer(std::string_view src, const std::vector<bool>& literal, RenderedPage& page,
           const LinkSink* sink)
      : src_(src), literal_(literal), page_(page), sink_(sink), out_(page.text) {
    out_.reserve(src.size());
  }

  void run() {
    std::size_t pos = 0;
    const RedirectMatch redirect = match_redirect(src_, &literal_);
    if (redirect.target) {
      page_.redirect_target = redirect.target;
      pos = redirect.end;
    } else if (redirect.directive) {
      ++page_.warnings;
    }

    while (pos <= src_.size()) {
      std::size_t eol = src_.find('\n', pos);
      if (eol == std::string_view::npos) eol = src_.size();
      if (!render_heading(pos, eol)) render_inline(pos, eol, Mode::Full);
      if (eol == src_.size()) break;
      put(U'\n');
      pos = eol + 1;
    }
    page_.paragraphs = segment_paragraphs(out_, page_.headings);
  }

 private:
  enum class Mode { Full, Anchor };

  bool plain(std::size_t i) const { return !literal_[i]; }

  bool plain_pair(std::size_t i, char a, char b, std::size_t end) const {
    return i + 1 < end && src_[i] == a && src_[i + 1] == b && plain(i) && plain(i + 1);
  }

  // -- output ---------------------------------------------------------------

  void put(char32_t cp) {
    if (cp == U'\n') {
      out_.push_back('\n');
      ++out_cp_;
      line_start_ = out_.size();
      return;
    }
    if (blocked(cp)) {
      ++page_.warnings;
      return;
    }
    utf8::append(out_, cp);
    ++out_cp_;
  }

  bool blocked(char32_t cp) const {
    const char prev = out_.empty() ? '\n' : out_.back();
    switch (cp) {
      case U'=':
        return out_.size() == line_start_;
      case U'[':
        return prev == '[';
      case U'{':
        return prev == '{';
      case U'|':
        return prev == '{';
      case U'\'':
        return prev == '\'';
      case U'-':
        return out_.ends_with("<!-");
      case U']':
        return would_close_ext_link();
      case U'>':
        return would_close_tag();
      case U';':
        return would_complete_entity();
      default:
        return false;
    }
  }

  bool would_close_ext_link() const {
    const std::size_t floor = out_.size() > kMaxExtLinkScan ? out_.size() - kMaxExtLinkScan : 0;
    std::size_t j = out_.size();
    while (j > std::max(floor, line_start_)) {
      --j;
      if (out_[j] == ']') return false;
      if (out_[j] == '[') {
        const std::string_view rest = std::string_view(out_).substr(j + 1);
        const std::size_t scheme = scheme_length(rest, 0);
        if (scheme == 0) return false;
        std::size_t k = scheme;
        while (k < rest.size() && url_char(rest[k])) ++k;
        if (k == scheme) return false;
        return k == rest.size() || blank(rest[k]);
      }
    }
    return false;
  }

  bool would_close_tag() const {
    const std::size_t floor = out_.size() > kMaxTagLength - 1 ? out_.size() - (kMaxTagLength - 1) : 0;
    std::size_t j = out_.size();
    while (j > std::max(floor, line_start_)) {
      --j;
      if (out_[j] == '>') return false;
      if (out_[j] == '<') return opens_tag(out_, j, out_.size());
    }
    return false;
  }

  static bool opens_tag(std::string_view s, std::size_t lt, std::size_t end) {
    if (lt + 1 >= end) return false;
    if (ascii_alpha(s[lt + 1])) return true;
    return s[lt + 1] == '/' && lt + 2 < end && ascii_alpha(s[lt + 2]);
  }

  bool would_complete_entity() const {
    const std::size_t floor = out_.size() > kMaxEntityScan ? out_.size() - kMaxEntityScan : 0;
    std::size_t j = out_.size();
    while (j > std::max(floor, line_start_)) {
      --j;
      const char c = out_[j];
      if (c == '&') {
        std::string candidate = out_.substr(j);
        candidate.push_back(';');
        const auto m = detail::match_entity(candidate);
        return m && m->length == candidate.size() && decodes_safely(m->code_point);
      }
      if (!ascii_alnum(c) && c != '#') return false;
    }
    return false;
  }

  /// Emits src_[from, to) verbatim (still subject to the output guard).
  void put_source(std::size_t from, std::size_t to) {
    std::size_t pos = from;
    const std::string_view range = src_.substr(0, to);
    while (pos < to) put(utf8::decode(range, pos));
  }

  /// Code-point offset of the first non-space character at or after
  /// byte `from` in the output, or nullopt if only spaces follow.
  std::optional<std::size_t> first_visible(std::size_t from_byte, std::size_t from_cp) const {
    std::size_t pos = from_byte;
    std::size_t cp_index = from_cp;
    while (pos < out_.size()) {
      const std::size_t at = pos;
      const char32_t cp = utf8::decode(out_, pos);
      if (!utf8::is_space(cp)) {
        (void)at;
        return cp_index;
      }
      ++cp_index;
    }
    return std::nullopt;
  }

  void trim_output_tail(std::size_t floor) {
    while (out_.size() > floor) {
      std::size_t start = out_.size() - 1;
      while (start > floor && (static_cast<unsigned char>(out_[start]) & 0xC0) == 0x80) --start;
      std::size_t pos = start;
      if (!utf8::is_space(utf8::decode(out_, pos))) return;
      out_.resize(start);
      --out_cp_;
    }
  }

  // -- constructs -----------------------------------------------------------

  bool render_heading(std::size_t begin, std::size_t end) {
    if (begin >= end || src_[begin] != '=' || !plain(begin)) return false;
    std::size_t te = end;
    while (te > begin && blank(src_[te - 1]) && plain(te - 1)) --te;
    if (te - begin < 2 || src_[te - 1] != '=' || !plain(te - 1)) return false;

    std::size_t lead = 0;
    while (begin + lead < te && src_[begin + lead] == '=' && plain(begin + lead)) ++lead;
    std::size_t trail = 0;
    while (trail < te - begin && src_[te - 1 - trail] == '=' && plain(te - 1 - trail)) ++trail;

    std::size_t fence = 0;
    if (lead == te - begin) {
      fence = (te - begin - 1) / 2;
    } else {
      fence = std::min(lead, trail);
    }
    if (fence == 0) return false;

    std::size_t tb = begin + fence;
    std::size_t tend = te - fence;
    while (tb < tend && blank(src_[tb]) && plain(tb)) ++tb;
    while (tend > tb && blank(src_[tend - 1]) && plain(tend - 1)) --tend;
    if (tb == tend) return false;

    const std::size_t start_byte = out_.size();
    const std::size_t start_cp = out_cp_;
    render_inline(tb, tend, Mode::Full);
    if (auto at = first_visible(start_byte, start_cp)) {
      page_.headings.push_back({*at, static_cast<int>(fence)});
    } else {
      ++page_.warnings;
    }
    return true;
  }

  void render_inline(std::size_t begin, std::size_t end, Mode mode) {
    std::size_t i = begin;
    while (i < end) {
      if (!plain(i)) {
        const std::size_t from = i;
        while (i < end && !plain(i)) ++i;
        put_source(from, i);
        continue;
      }
      const char c = src_[i];
      if (c == '[') {
        if (mode == Mode::Full && plain_pair(i, '[', '[', end)) {
          if (i + 2 < end && src_[i + 2] == '[' && plain(i + 2)) {
            put(U'[');
            ++i;
            continue;
          }
          if (auto next = render_link(i, end)) {
            i = *next;
          } else {
            ++page_.warnings;
            i += 2;
          }
          continue;
        }
        if (mode == Mode::Full) {
          if (auto next = render_ext_link(i, end)) {
            i = *next;
            continue;
          }
        }
        put(U'[');
        ++i;
      } else if (c == '\'') {
        std::size_t k = i;
        while (k < end && src_[k] == '\'' && plain(k)) ++k;
        if (k - i >= 2) {
          i = k;
        } else {
          put(U'\'');
          ++i;
        }
      } else if (c == '<') {
        if (auto next = match_tag(i, end)) {
          i = *next;
        } else {
          put(U'<');
          ++i;
        }
      } else if (c == '&') {
        const auto m = detail::match_entity(src_.substr(i, std::min(end - i, kMaxEntityScan + 2)));
        bool all_plain = m.has_value();
        for (std::size_t k = i; all_plain && k < i + m->length; ++k) all_plain = plain(k);
        if (all_plain && decodes_safely(m->code_point)) {
          put(m->code_point);
          i += m->length;
        } else {
          put(U'&');
          ++i;
        }
      } else {
        std::size_t pos = i;
        const char32_t cp = utf8::decode(src_.substr(0, end), pos);
        put(cp);
        i = pos;
      }
    }
  }

  std::optional<std::size_t> match_tag(std::size_t lt, std::size_t end) const {
    if (!opens_tag(src_, lt, end) || !plain(lt + 1)) return std::nullopt;
    for (std::size_t m = lt + 1; m < end && m - lt < kMaxTagLength; ++m) {
      if (!plain(m) || src_[m] == '<') return std::nullopt;
      if (src_[m] == '>') return m + 1;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> render_ext_link(std::size_t open, std::size_t end) {
    const std::size_t scheme = scheme_length(src_.substr(0, end), open + 1);
    if (scheme == 0) return std::nullopt;
    std::size_t k = open + 1 + scheme;
    const std::size_t url_begin = k;
    while (k < end && url_char(src_[k]) && plain(k)) ++k;
    if (k == url_begin || k >= end) return std::nullopt;
    if (src_[k] == ']' && plain(k)) return k + 1;
    if (!blank(src_[k]) || !plain(k)) return std::nullopt;
    const std::size_t label = k + 1;
    std::size_t close = label;
    while (close < end && close - open < kMaxExtLinkScan && src_[close] != ']' && src_[close] != '[') {
      ++close;
    }
    if (close >= end || close - open >= kMaxExtLinkScan || src_[close] != ']' || !plain(close)) {
      return std::nullopt;
    }
    render_inline(label, close, Mode::Anchor);
    return close + 1;
  }

  /// Handles `[[...]]` starting at `open`. Returns the index after the
  /// construct, or nullopt when it is not a valid link.
  std::optional<std::size_t> render_link(std::size_t open, std::size_t end) {
    const std::size_t scan_end = std::min(end, open + kMaxLinkScan);
    const std::size_t tb = open + 2;
    std::size_t k = tb;
    while (k < scan_end && !(src_[k] == '|' && plain(k)) && !plain_pair(k, ']', ']', scan_end)) {
      if (!plain(k)) return std::nullopt;
      const char c = src_[k];
      if (c == '[' || c == ']' || c == '{' || c == '}' || c == '<' || c == '>') return std::nullopt;
      ++k;
    }
    if (k >= scan_end) return std::nullopt;
    const bool piped = src_[k] == '|';

    std::size_t target_begin = tb;
    std::size_t target_end = k;
    while (target_begin < target_end && blank(src_[target_begin])) ++target_begin;
    while (target_end > target_begin && blank(src_[target_end - 1])) --target_end;
    bool leading_colon = false;
    if (target_begin < target_end && src_[target_begin] == ':') {
      leading_colon = true;
      ++target_begin;
      while (target_begin < target_end && blank(src_[target_begin])) ++target_begin;
    }
    const std::string_view target = src_.substr(target_begin, target_end - target_begin);

    if (has_media_prefix(target)) {
      // Captions may hold nested links; skip the balanced construct.
      int depth = 1;
      for (std::size_t m = tb; m + 1 < scan_end; ++m) {
        if (plain_pair(m, '[', '[', scan_end)) {
          ++depth;
          ++m;
        } else if (plain_pair(m, ']', ']', scan_end)) {
          if (--depth == 0) return m + 2;
          ++m;
        }
      }
      return std::nullopt;
    }

    std::size_t close = k;
    if (piped) {
      close = k + 1;
      while (close < scan_end && !plain_pair(close, ']', ']', scan_end)) {
        if (plain_pair(close, '[', '[', scan_end)) return std::nullopt;
        ++close;
      }
      if (close >= scan_end) return std::nullopt;
    }
    std::size_t anchor_begin = piped ? k + 1 : target_begin;
    std::size_t anchor_end = piped ? close : target_end;
    while (anchor_begin < anchor_end && blank(src_[anchor_begin]) && plain(anchor_begin)) ++anchor_begin;
    while (anchor_end > anchor_begin && blank(src_[anchor_end - 1]) && plain(anchor_end - 1)) --anchor_end;
    if (piped && anchor_begin == anchor_end) {
      anchor_begin = target_begin;
      anchor_end = target_end;
    }
    const std::size_t after = close + 2;

    if (!leading_colon && has_category_prefix(target)) {
      if (auto title = normalize_title(target)) {
        bool seen = false;
        for (const auto& existing : page_.categories) seen = seen || existing == *title;
        if (!seen) page_.categories.push_back(std::move(*title));
      } else {
        ++page_.warnings;
      }
      return after;
    }

    if (is_interwiki(target)) {
      if (piped && anchor_begin != target_begin) render_inline(anchor_begin, anchor_end, Mode::Anchor);
      return after;
    }

    const auto normalized = normalize_title(target);
    if (!normalized) {
      if (target.empty() || target.front() != '#') return std::nullopt;
      // Section link within the same page: text only.
      render_inline(anchor_begin, anchor_end, Mode::Anchor);
      return after;
    }

    const std::size_t start_byte = out_.size();
    const std::size_t start_cp = out_cp_;
    render_inline(anchor_begin, anchor_end, Mode::Anchor);
    std::size_t trail = after;
    while (trail < end && src_[trail] >= 'a' && src_[trail] <= 'z' && plain(trail)) ++trail;
    put_source(after, trail);
    trim_output_tail(start_byte);

    const auto offset = first_visible(start_byte, start_cp);
    if (!offset) {
      ++page_.warnings;
      return trail;
    }
    std::size_t anchor_byte = start_byte;
    for (std::size_t skip = *offset - start_cp; skip > 0; --skip) utf8::decode(out_, anchor_byte);
    RawLink link{*normalized, out_.substr(anchor_byte), *offset};
    if (sink_ != nullptr) {
      (*sink_)(std::move(link));
    } else {
      page_.links.push_back(std::move(link));
    }
    return trail;
  }

  std::string_view src_;
  const std::vector<bool>& literal_;
  RenderedPage& page_;
  const LinkSink* sink_;
  std::string& out_;
  std::size_t out_cp_ = 0;
  std::size_t line_start_ = 0;
};

}  // namespace

namespace {

RenderedPage parse_impl(std::string&& wikitext, const LinkSink* sink) {
  std::string src = std::move(wikitext);
  RenderedPage page;
  std::vector<bool> literal;
  preprocess(src, literal, page.warnings);
  Renderer(src, literal, page, sink).run();
  return page;
}

}  // namespace

RenderedPage parse_page(std::string&& wikitext) { return parse_impl(std::move(wikitext), nullptr); }

RenderedPage parse_page(std::string&& wikitext, const LinkSink& sink) {
  return parse_impl(std::move(wikitext), &sink);
}

RenderedPage parse_page(std::string_view wikitext) { return parse_page(std::string(wikitext)); }

std::optional<std::string> extract_redirect(std::string_view wikitext, std::size_t* warnings) {
  if (!has_redirect_directive(wikitext)) return std::nullopt;
  std::string src(wikitext);
  std::vector<bool> literal;
  std::size_t ignored = 0;
  preprocess(src, literal, ignored);
  RedirectMatch m = match_redirect(src, &literal);
  if (m.directive && !m.target && warnings != nullptr) ++*warnings;
  return std::move(m.target);
}

bool has_redirect_directive(std::string_view wikitext) {
  std::size_t i = 0;
  while (i < wikitext.size() && std::isspace(static_cast<unsigned char>(wikitext[i]))) ++i;
  return istarts_with(wikitext, i, "#redirect");
}

}  // namespace wikidb
