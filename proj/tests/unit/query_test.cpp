#include <gtest/gtest.h>

#include "wikidb/error.hpp"
#include "wikidb/query.hpp"

namespace wikidb {
namespace {

// 1..4 entities, 5 and 6 redirects, 7 and 8 categories.
WikiStore sample() {
  std::vector<WikiPage> pages;
  for (PageId id = 1; id <= 4; ++id) pages.push_back({id, "E" + std::to_string(id), "", PageType::Entity, ""});
  pages.push_back({5, "R5", "", PageType::Redirect, ""});
  pages.push_back({6, "R6", "", PageType::Redirect, ""});
  pages.push_back({7, "Category:X", "", PageType::Category, ""});
  pages.push_back({8, "Category:Empty", "", PageType::Category, ""});
  std::vector<RedirectEntry> redirects = {{5, "E1", 1}, {6, "Lost", std::nullopt}};
  std::vector<CategoryAssignment> categories = {{3, 7}, {1, 7}, {5, 7}};
  std::vector<LinkEntry> links = {{1, 2, 0, "a", "a"},  {1, 3, 10, "b", "b"}, {1, 2, 25, "c", "c"},
                                  {2, 1, 4, "d", "d"},  {3, 4, 9, "e", "e"},  {1, 4, 30, "f", "f"}};
  std::vector<ParagraphEntry> paragraphs = {{1, 0, 0, 10, 1}, {1, 1, 12, 30, 1}, {2, 0, 0, 8, 1}};
  return WikiStore("", pages, redirects, categories, links, paragraphs, {});
}

TEST(SharedCategory, MembersAscending) {
  const auto s = sample();
  EXPECT_EQ(pages_sharing_category(s, 7),
            (std::vector<PageRef>{{1, "E1"}, {3, "E3"}, {5, "R5"}}));
  EXPECT_TRUE(pages_sharing_category(s, 8).empty());
  EXPECT_TRUE(pages_sharing_category(s, 999).empty());
}

TEST(CrossLinks, DistinctPairs) {
  const auto s = sample();
  EXPECT_EQ(cross_group_links(s, {1, 3}, {2, 4}),
            (std::vector<LinkPair>{{1, 2}, {1, 4}, {3, 4}}));
  EXPECT_TRUE(cross_group_links(s, {}, {1, 2}).empty());
  EXPECT_TRUE(cross_group_links(s, {4}, {1, 2, 3}).empty());
}

TEST(RedirectCounts, NullGroupFirst) {
  const auto s = sample();
  EXPECT_EQ(redirect_counts(s, {5, 6, 1, 42}),
            (std::vector<RedirectCount>{{std::nullopt, 1}, {1, 1}}));
  EXPECT_TRUE(redirect_counts(s, {1, 2}).empty());
}

TEST(ParagraphLinks, BoundsAreInclusive) {
  const auto s = sample();
  EXPECT_EQ(links_in_paragraph(s, 1, 0), (std::vector<PageId>{2, 3}));
  EXPECT_EQ(links_in_paragraph(s, 1, 1), (std::vector<PageId>{2, 4}));
  EXPECT_EQ(links_in_paragraph(s, 2, 0), (std::vector<PageId>{1}));
}

TEST(ParagraphLinks, UnknownPageOrParagraphThrows) {
  const auto s = sample();
  EXPECT_THROW(links_in_paragraph(s, 99, 0), NotFoundError);
  EXPECT_THROW(links_in_paragraph(s, 1, 2), NotFoundError);
  EXPECT_THROW(links_in_paragraph(s, 3, 0), NotFoundError);
}

}  // namespace
}  // namespace wikidb
