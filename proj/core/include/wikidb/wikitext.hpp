#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wikidb {

// All offsets below are code-point offsets into RenderedPage::text.

struct RawLink {
  std::string target_title;  ///< normalized
  std::string anchor;
  std::size_t offset = 0;

  bool operator==(const RawLink&) const = default;
};

/// Inclusive interval [start, end] plus heading depth (1 = no parent).
struct RawParagraph {
  std::size_t start = 0;
  std::size_t end = 0;
  int level = 1;

  bool operator==(const RawParagraph&) const = default;
};

/// Where a heading's title begins in the rendered text, and how many `=`
/// characters its fence used on each side.
struct HeadingMark {
  std::size_t offset = 0;
  int fence_width = 1;

  bool operator==(const HeadingMark&) const = default;
};

struct RenderedPage {
  std::string text;
  std::vector<RawLink> links;
  std::vector<std::string> categories;  ///< "Category:..." titles, first occurrence order
  std::optional<std::string> redirect_target;
  std::vector<HeadingMark> headings;
  std::vector<RawParagraph> paragraphs;
  /// Constructs that could not be parsed and were degraded to plain text.
  std::size_t warnings = 0;
};

/// Renders wikitext to plain text and collects links, categories, the
/// redirect target and the paragraph structure. Never throws on bad markup.
RenderedPage parse_page(std::string_view wikitext);

/// Same as above, reusing the caller's buffer as scratch space.
RenderedPage parse_page(std::string&& wikitext);

inline RenderedPage parse_page(const char* wikitext) { return parse_page(std::string_view(wikitext)); }

/// Receives each link once, in page order, as soon as it is rendered.
using LinkSink = std::function<void(RawLink&&)>;

/// Streaming variant: links go to `sink` and `RenderedPage::links` stays
/// empty, so a link-dense page never holds its whole link list.
RenderedPage parse_page(std::string&& wikitext, const LinkSink& sink);

/// Target of a leading `#REDIRECT [[...]]` directive. A directive without a
/// following link yields nullopt and bumps `*warnings` when given.
std::optional<std::string> extract_redirect(std::string_view wikitext,
                                            std::size_t* warnings = nullptr);

/// True when the text starts (after whitespace) with a case-insensitive
/// `#REDIRECT`, regardless of what follows.
bool has_redirect_directive(std::string_view wikitext);

/// Canonical page title: entities decoded, `#fragment` dropped, underscores
/// and whitespace runs folded to single spaces, trimmed, first letter
/// upper-cased. Known namespace prefixes are canonicalized too
/// ("category:foo" -> "Category:Foo"). nullopt means the title is invalid.
std::optional<std::string> normalize_title(std::string_view raw);

/// Title used for a page stored under namespace `ns`.
std::optional<std::string> canonical_page_title(int ns, std::string_view title);

/// Title with its namespace prefix removed ("Category:Foo" -> "Foo").
std::string_view strip_namespace(std::string_view title);

/// Lead text becomes a level-1 paragraph; every heading opens a new one at
/// level fence_width - 1 (at least 1). Intervals end at the last
/// non-whitespace character before the next heading and never overlap.
std::vector<RawParagraph> segment_paragraphs(std::string_view text,
                                             std::span<const HeadingMark> headings);

}  // namespace wikidb
