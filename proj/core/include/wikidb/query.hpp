#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wikidb/store.hpp"

namespace wikidb {

struct PageRef {
  PageId page_id;
  std::string page_name;

  bool operator==(const PageRef&) const = default;
  auto operator<=>(const PageRef&) const = default;
};

using PageIdSet = std::set<PageId>;
using LinkPair = std::pair<PageId, PageId>;

/// One group of redirect_counts. `target` is empty for redirects whose
/// target page is not in the store (SQL's NULL group).
struct RedirectCount {
  std::optional<PageId> target;
  std::size_t count = 0;

  bool operator==(const RedirectCount&) const = default;
  auto operator<=>(const RedirectCount&) const = default;
};

/// Pages assigned to the category, ascending by id.
std::vector<PageRef> pages_sharing_category(const WikiStore& store, PageId category_page_id);

/// Distinct (source, target) link pairs with source in `group1` and target
/// in `group2`, ascending.
std::vector<LinkPair> cross_group_links(const WikiStore& store, const PageIdSet& group1,
                                        const PageIdSet& group2);

/// Redirect rows whose own page_id is in `pages`, grouped by target.
/// Missing targets sort first.
std::vector<RedirectCount> redirect_counts(const WikiStore& store, const PageIdSet& pages);

/// Targets of the links positioned inside the paragraph (bounds inclusive),
/// in page order. Throws NotFoundError for an unknown page or paragraph.
std::vector<PageId> links_in_paragraph(const WikiStore& store, PageId page_id,
                                       std::int64_t paragraph_id);

}  // namespace wikidb
