#include "wikidb/query.hpp"

#include <map>

#include "wikidb/error.hpp"

namespace wikidb {

std::vector<PageRef> pages_sharing_category(const WikiStore& store, PageId category_page_id) {
  std::vector<PageRef> out;
  for (const PageId id : store.members_of(category_page_id)) {
    if (const auto* page = store.find_page(id)) out.push_back({id, page->page_name});
  }
  return out;
}

std::vector<LinkPair> cross_group_links(const WikiStore& store, const PageIdSet& group1,
                                        const PageIdSet& group2) {
  std::set<LinkPair> pairs;
  for (const PageId source : group1) {
    for (const auto& link : store.links_of(source)) {
      if (group2.contains(link.link_page_id)) pairs.emplace(source, link.link_page_id);
    }
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<RedirectCount> redirect_counts(const WikiStore& store, const PageIdSet& pages) {
  std::map<std::optional<PageId>, std::size_t> groups;
  for (const PageId id : pages) {
    if (const auto* r = store.find_redirect(id)) ++groups[r->redirected_page_id];
  }
  std::vector<RedirectCount> out;
  out.reserve(groups.size());
  for (const auto& [target, count] : groups) out.push_back({target, count});
  return out;
}

std::vector<PageId> links_in_paragraph(const WikiStore& store, PageId page_id,
                                       std::int64_t paragraph_id) {
  if (store.find_page(page_id) == nullptr) {
    throw NotFoundError("no page with id " + std::to_string(page_id));
  }
  const auto* paragraph = store.find_paragraph(page_id, paragraph_id);
  if (paragraph == nullptr) {
    throw NotFoundError("page " + std::to_string(page_id) + " has no paragraph " +
                        std::to_string(paragraph_id));
  }
  std::vector<PageId> out;
  for (const auto& link : store.links_of(page_id)) {
    if (link.pos_in_page >= paragraph->paragraph_start_pos &&
        link.pos_in_page <= paragraph->paragraph_end_pos) {
      out.push_back(link.link_page_id);
    }
  }
  return out;
}

}  // namespace wikidb
