#include <gtest/gtest.h>

#include <unistd.h>

#include "fixture.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"
#include "wikidb/error.hpp"
#include "wikidb/schema_builder.hpp"

namespace wikidb {
namespace {

using testing::TempDir;

class VectorSource final : public PageSource {
 public:
  explicit VectorSource(std::vector<PageRecord> pages) : pages_(std::move(pages)) {}
  std::optional<PageRecord> next() override {
    if (at_ == pages_.size()) return std::nullopt;
    return pages_[at_++];
  }

 private:
  std::vector<PageRecord> pages_;
  std::size_t at_ = 0;
};

PageRecord page(PageId id, std::string title, std::string text, int ns = 0) {
  PageRecord r;
  r.page_id = id;
  r.ns = ns;
  r.title = std::move(title);
  r.wikitext = std::move(text);
  return r;
}

PageRecord redirect(PageId id, std::string title, std::string target) {
  PageRecord r = page(id, std::move(title), "#REDIRECT [[" + target + "]]");
  r.is_redirect = true;
  r.redirect_title = std::move(target);
  return r;
}

WikiStore build(std::vector<PageRecord> pages, const std::filesystem::path& out,
                BuildOptions options = {}) {
  VectorSource src(std::move(pages));
  return build_store(src, out, options);
}

TEST(AssignFilePath, BucketsByLastThreeDigits) {
  EXPECT_EQ(assign_file_path(12), "texts/012/12.txt");
  EXPECT_EQ(assign_file_path(1000), "texts/000/1000.txt");
  EXPECT_EQ(assign_file_path(1), "texts/001/1.txt");
  EXPECT_EQ(assign_file_path(691014), "texts/014/691014.txt");
}

TEST(TitleIndex, FirstInsertWins) {
  TitleIndex index;
  EXPECT_TRUE(index.insert("A", 1, PageType::Entity));
  EXPECT_FALSE(index.insert("A", 2, PageType::Redirect));
  ASSERT_NE(index.find("A"), nullptr);
  EXPECT_EQ(index.find("A")->page_id, 1);
  EXPECT_EQ(index.find("B"), nullptr);
  EXPECT_EQ(index.size(), 1u);
}

TEST(ResolveRedirect, SingleHop) {
  TitleIndex index;
  index.insert("Target", 1, PageType::Entity);
  index.insert("Middle", 2, PageType::Redirect);
  EXPECT_EQ(resolve_redirect(index, "Target"), 1);
  EXPECT_EQ(resolve_redirect(index, "Middle"), 2);
  EXPECT_EQ(resolve_redirect(index, "Nowhere"), std::nullopt);
}

TEST(BuildStore, FourPageDump) {
  TempDir tmp;
  auto reader = open_dump(std::filesystem::path(WIKIDB_TEST_FIXTURES) / "four_pages.xml");
  const auto store = build_store(*reader, tmp.path());

  ASSERT_EQ(store.pages().size(), 4u);
  // "a" is a stop word.
  EXPECT_EQ(store.pages()[0], (WikiPage{10, "A", "texts/010/10.txt", PageType::Entity, ""}));
  EXPECT_EQ(store.pages()[1].page_type, PageType::Entity);
  EXPECT_EQ(store.pages()[2], (WikiPage{30, "R", "texts/030/30.txt", PageType::Redirect, "r"}));
  EXPECT_EQ(store.pages()[3], (WikiPage{40, "Category:C", "texts/040/40.txt", PageType::Category, "c"}));

  EXPECT_EQ(store.redirects(), (std::vector<RedirectEntry>{{30, "A", 10}}));
  EXPECT_EQ(store.categories(), (std::vector<CategoryAssignment>{{10, 40}}));
  EXPECT_EQ(store.links(), (std::vector<LinkEntry>{{10, 20, 12, "B", "b"}}));
  EXPECT_EQ(store.paragraphs(), (std::vector<ParagraphEntry>{{10, 0, 0, 13, 1},
                                                             {20, 0, 0, 10, 1},
                                                             {40, 0, 0, 11, 1}}));

  EXPECT_EQ(testing::read_file(tmp / "texts/010/10.txt"), "A points to B.\n");
  EXPECT_EQ(testing::read_file(tmp / "texts/030/30.txt"), "");
  EXPECT_EQ(store.stats().pages_read, 4u);
  EXPECT_EQ(store.stats().dropped_red_links, 0u);
  EXPECT_TRUE(std::filesystem::exists(tmp / "build_stats.txt"));
  EXPECT_EQ(read_stats(tmp / "build_stats.txt"), store.stats());
}

TEST(BuildStore, SinglePageWithoutReferences) {
  TempDir tmp;
  const auto store = build({page(5, "Lonely page", "Just words.")}, tmp.path());
  ASSERT_EQ(store.pages().size(), 1u);
  EXPECT_EQ(store.pages()[0].stemmed_name, "lon pag");
  EXPECT_TRUE(store.links().empty());
  EXPECT_TRUE(store.redirects().empty());
  EXPECT_EQ(store.paragraphs().size(), 1u);
}

TEST(BuildStore, RedLinksAndGhostCategoriesAreCounted) {
  TempDir tmp;
  const auto store = build({page(1, "A", "[[Missing]] [[B]] [[Category:Ghost]] [[Category:B]]"),
                            page(2, "B", "x")},
                           tmp.path());
  EXPECT_EQ(store.links(), (std::vector<LinkEntry>{{1, 2, 8, "B", "b"}}));
  EXPECT_TRUE(store.categories().empty());
  EXPECT_EQ(store.stats().dropped_red_links, 1u);
  // Neither category page exists; B is an article.
  EXPECT_EQ(store.stats().dropped_categories, 2u);
}

TEST(BuildStore, RedirectChainsResolveOneHop) {
  TempDir tmp;
  const auto store = build({page(1, "Target", "t"), redirect(2, "Middle", "Target"),
                            redirect(3, "Outer", "Middle"), redirect(4, "Dangling", "Nowhere")},
                           tmp.path());
  EXPECT_EQ(store.redirects(), (std::vector<RedirectEntry>{{2, "Target", 1},
                                                           {3, "Middle", 2},
                                                           {4, "Nowhere", std::nullopt}}));
  EXPECT_EQ(store.stats().unresolved_redirects, 1u);
  EXPECT_TRUE(store.paragraphs_of(2).empty());
}

TEST(BuildStore, RedirectTargetIsNormalized) {
  TempDir tmp;
  const auto store = build({page(1, "Foo bar", "x"), redirect(2, "F", "foo_bar")}, tmp.path());
  EXPECT_EQ(store.redirects(), (std::vector<RedirectEntry>{{2, "Foo bar", 1}}));
}

TEST(BuildStore, RedirectFlagWithoutTargetIsAnEntity) {
  TempDir tmp;
  PageRecord r = page(1, "Odd", "#REDIRECT nowhere");
  r.is_redirect = true;
  const auto store = build({r}, tmp.path());
  EXPECT_EQ(store.pages().at(0).page_type, PageType::Entity);
  EXPECT_TRUE(store.redirects().empty());
  EXPECT_GE(store.stats().render_warnings, 1u);
}

TEST(BuildStore, OtherNamespacesAreSkipped) {
  TempDir tmp;
  const auto store = build({page(1, "A", "x"), page(2, "Template:T", "x", 10),
                            page(3, "File:F.png", "x", 6), page(4, "Category:K", "x", 14)},
                           tmp.path());
  EXPECT_EQ(store.pages().size(), 2u);
  EXPECT_EQ(store.stats().skipped_namespaces, 2u);
  EXPECT_EQ(store.stats().pages_read, 2u);
}

TEST(BuildStore, DuplicateIdIsAnError) {
  TempDir tmp;
  EXPECT_THROW(build({page(1, "A", "x"), page(1, "B", "y")}, tmp.path()), BuildError);
}

TEST(BuildStore, DuplicateTitleKeepsTheFirstPage) {
  TempDir tmp;
  const auto store = build({page(1, "Same", "first"), page(2, "same", "second"),
                            page(3, "Linker", "[[Same]]")},
                           tmp.path());
  EXPECT_EQ(store.pages().size(), 2u);
  EXPECT_EQ(store.find_page(2), nullptr);
  EXPECT_EQ(store.stats().duplicate_titles, 1u);
  EXPECT_EQ(store.links().at(0).link_page_id, 1);
}

TEST(BuildStore, InvalidTitlesAreCounted) {
  TempDir tmp;
  const auto store = build({page(1, "Bad[title]", "x"), page(2, "Good", "y")}, tmp.path());
  EXPECT_EQ(store.pages().size(), 1u);
  EXPECT_EQ(store.stats().invalid_titles, 1u);
}

TEST(BuildStore, LinksKeepSourceOrderAndStemmedAnchors) {
  TempDir tmp;
  const auto store = build({page(1, "A", "[[B|Running dogs]] then [[C]] and [[B]]"),
                            page(2, "B", "x"), page(3, "C", "y")},
                           tmp.path());
  EXPECT_EQ(store.links(), (std::vector<LinkEntry>{{1, 2, 0, "Running dogs", "run dog"},
                                                   {1, 3, 18, "C", "c"},
                                                   {1, 2, 24, "B", "b"}}));
}

TEST(BuildStore, SmallBudgetSpillsWithoutChangingTheResult) {
  TempDir a;
  TempDir b;
  const auto pages = testing::generate_fixture();
  testing::write_dump(a / "dump.xml", pages);

  auto r1 = open_dump(a / "dump.xml");
  const auto big = build_store(*r1, a / "out");
  BuildOptions small;
  small.memory_budget_bytes = 2048;
  auto r2 = open_dump(a / "dump.xml");
  const auto tiny = build_store(*r2, b / "out", small);

  EXPECT_EQ(big.stats().spill_runs, 0u);
  EXPECT_GT(tiny.stats().spill_runs, 1u);
  EXPECT_EQ(big.pages(), tiny.pages());
  EXPECT_EQ(big.redirects(), tiny.redirects());
  EXPECT_EQ(big.categories(), tiny.categories());
  EXPECT_EQ(big.links(), tiny.links());
  EXPECT_EQ(big.paragraphs(), tiny.paragraphs());
  EXPECT_FALSE(std::filesystem::exists(b / "out" / (".spill-" + std::to_string(::getpid()))));
}

TEST(BuildStore, FixtureStoreIsConsistent) {
  TempDir tmp;
  testing::write_dump(tmp / "dump.xml", testing::generate_fixture());
  auto reader = open_dump(tmp / "dump.xml");
  const auto store = build_store(*reader, tmp / "out");
  EXPECT_EQ(testing::integrity_violations(store), std::vector<std::string>{});
  EXPECT_GE(store.pages().size(), 200u);
  EXPECT_FALSE(store.members_of(691014).empty());
  EXPECT_GE(store.paragraphs_of(12).size(), 2u);
  EXPECT_GT(store.stats().dropped_red_links, 0u);
  EXPECT_GT(store.stats().unresolved_redirects, 0u);
  EXPECT_GT(store.stats().skipped_namespaces, 0u);
}

}  // namespace
}  // namespace wikidb
