#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wikidb/types.hpp"

namespace wikidb {

enum class PageType : std::uint8_t { Entity = 1, Redirect = 2, Category = 3 };

/// tbl_Wiki_Page
struct WikiPage {
  PageId page_id = 0;
  std::string page_name;
  std::string file_path;  ///< relative to the store root
  PageType page_type = PageType::Entity;
  std::string stemmed_name;

  bool operator==(const WikiPage&) const = default;
};

/// tbl_Wiki_Page_Redirect
struct RedirectEntry {
  PageId page_id = 0;
  std::string redirected_page_title;
  std::optional<PageId> redirected_page_id;

  bool operator==(const RedirectEntry&) const = default;
};

/// tbl_Wiki_Page_Categories
struct CategoryAssignment {
  PageId page_id = 0;
  PageId category_page_id = 0;

  bool operator==(const CategoryAssignment&) const = default;
};

/// tbl_Wiki_Page_Links
struct LinkEntry {
  PageId page_id = 0;
  PageId link_page_id = 0;
  std::int64_t pos_in_page = 0;
  std::string link_description;
  std::string stemmed_link_description;

  bool operator==(const LinkEntry&) const = default;
};

/// tbl_Wiki_Page_Paragraphs
struct ParagraphEntry {
  PageId page_id = 0;
  std::int64_t paragraph_id = 0;
  std::int64_t paragraph_start_pos = 0;
  std::int64_t paragraph_end_pos = 0;
  std::int64_t paragraph_level = 1;

  bool operator==(const ParagraphEntry&) const = default;
};

struct BuildStats {
  std::uint64_t pages_read = 0;
  std::uint64_t skipped_namespaces = 0;
  std::uint64_t duplicate_titles = 0;
  std::uint64_t invalid_titles = 0;
  std::uint64_t dropped_red_links = 0;
  std::uint64_t dropped_categories = 0;
  std::uint64_t unresolved_redirects = 0;
  std::uint64_t render_warnings = 0;
  std::uint64_t spill_runs = 0;

  bool operator==(const BuildStats&) const = default;
};

/// The five Wiki-DB tables plus the directory holding the rendered texts.
/// Rows are kept sorted: pages by id, satellites by (page_id, source order).
class WikiStore {
 public:
  WikiStore() = default;
  WikiStore(std::filesystem::path root, std::vector<WikiPage> pages,
            std::vector<RedirectEntry> redirects, std::vector<CategoryAssignment> categories,
            std::vector<LinkEntry> links, std::vector<ParagraphEntry> paragraphs,
            BuildStats stats);

  const std::filesystem::path& root() const noexcept { return root_; }
  const std::vector<WikiPage>& pages() const noexcept { return pages_; }
  const std::vector<RedirectEntry>& redirects() const noexcept { return redirects_; }
  const std::vector<CategoryAssignment>& categories() const noexcept { return categories_; }
  const std::vector<LinkEntry>& links() const noexcept { return links_; }
  const std::vector<ParagraphEntry>& paragraphs() const noexcept { return paragraphs_; }
  const BuildStats& stats() const noexcept { return stats_; }

  const WikiPage* find_page(PageId id) const;
  const RedirectEntry* find_redirect(PageId id) const;
  const ParagraphEntry* find_paragraph(PageId page, std::int64_t paragraph_id) const;
  std::span<const LinkEntry> links_of(PageId page) const;
  std::span<const ParagraphEntry> paragraphs_of(PageId page) const;
  /// Member page ids of a category, ascending.
  std::span<const PageId> members_of(PageId category) const;

 private:
  std::filesystem::path root_;
  std::vector<WikiPage> pages_;
  std::vector<RedirectEntry> redirects_;
  std::vector<CategoryAssignment> categories_;
  std::vector<LinkEntry> links_;
  std::vector<ParagraphEntry> paragraphs_;
  BuildStats stats_;

  // (category_page_id, page_id) sorted, flattened into ids + offsets.
  std::vector<PageId> member_ids_;
  std::vector<std::pair<PageId, std::size_t>> member_ranges_;
};


}  // namespace wikidb
