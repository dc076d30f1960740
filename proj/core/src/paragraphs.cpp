#include <optional>

#include "wikidb/utf8.hpp"
#include "wikidb/wikitext.hpp"

namespace wikidb {

std::vector<RawParagraph> segment_paragraphs(std::string_view text,
                                             std::span<const HeadingMark> headings) {
  std::vector<RawParagraph> out;
  std::optional<RawParagraph> open;  // paragraph being extended
  std::optional<std::size_t> first_visible;
  std::optional<std::size_t> last_visible;
  std::size_t next = 0;

  auto close = [&] {
    if (open && last_visible && *last_visible >= open->start) {
      open->end = *last_visible;
      out.push_back(*open);
    }
    open.reset();
  };

  std::size_t pos = 0;
  std::size_t index = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode(text, pos);
    while (next < headings.size() && headings[next].offset < index) ++next;  // stale marks
    if (next < headings.size() && headings[next].offset == index) {
      if (!open && first_visible) {
        open = RawParagraph{*first_visible, 0, 1};
      }
      close();
      open = RawParagraph{index, index, std::max(1, headings[next].fence_width - 1)};
      ++next;
    }
    if (!utf8::is_space(cp)) {
      if (!first_visible) first_visible = index;
      last_visible = index;
    }
    ++index;
  }
  if (!open && first_visible) {
    open = RawParagraph{*first_visible, 0, 1};
  }
  close();
  return out;
}

}  // namespace wikidb
