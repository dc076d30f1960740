#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "fixture.hpp"
#include "process.hpp"
#include "temp_dir.hpp"

namespace wikidb::cli {
namespace {

using testing::read_file;
using testing::TempDir;
using testing::write_file;

const std::filesystem::path kFixtures = WIKIDB_TEST_FIXTURES;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

class CliStore : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto r = invoke({"build", "--dump", (kFixtures / "four_pages.xml").string(), "--out",
                           (tmp_ / "store").string()});
    ASSERT_EQ(r.code, kOk) << r.err;
  }
  std::string store() const { return (tmp_ / "store").string(); }
  TempDir tmp_;
};

TEST(Cli, NoArgumentsIsUsage) { EXPECT_EQ(invoke({}).code, kUsage); }

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("build"), std::string::npos);
}

TEST(Cli, BuildWithoutOutIsUsage) {
  const auto r = invoke({"build", "--dump", (kFixtures / "four_pages.xml").string()});
  EXPECT_EQ(r.code, kUsage);
}

TEST(Cli, UnknownQueryKindIsUsage) {
  EXPECT_EQ(invoke({"query", "everything", "--store", "/tmp"}).code, kUsage);
}

TEST(Cli, MissingStoreIsUsage) {
  const auto r = invoke({"stats", "--store", "/nonexistent/store"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("not found"), std::string::npos);
}

TEST(Cli, MalformedDumpReportsOffset) {
  TempDir tmp;
  const auto r = invoke({"build", "--dump", (kFixtures / "mismatched.xml").string(), "--out",
                         (tmp / "s").string()});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.err.find("mismatched.xml:168:"), std::string::npos) << r.err;
}

TEST(Cli, MissingDumpFails) {
  TempDir tmp;
  const auto r = invoke({"build", "--dump", "/nonexistent.xml", "--out", (tmp / "s").string()});
  EXPECT_EQ(r.code, kFailure);
}

TEST(Cli, BadStopWordFileIsUsage) {
  TempDir tmp;
  write_file(tmp / "stop.txt", "Upper\n");
  const auto r = invoke({"build", "--dump", (kFixtures / "four_pages.xml").string(), "--out",
                         (tmp / "s").string(), "--stop-words", (tmp / "stop.txt").string()});
  EXPECT_EQ(r.code, kUsage);
}

TEST(Cli, FormatSelectsExports) {
  TempDir tmp;
  ASSERT_EQ(invoke({"build", "--dump", (kFixtures / "four_pages.xml").string(), "--out",
                    (tmp / "s").string(), "--format", "sql"}).code,
            kOk);
  EXPECT_TRUE(std::filesystem::exists(tmp / "s/wikidb.sql"));
  EXPECT_FALSE(std::filesystem::exists(tmp / "s/tsv"));
}

TEST_F(CliStore, BuildWritesBothExports) {
  EXPECT_TRUE(std::filesystem::exists(tmp_ / "store/wikidb.sql"));
  EXPECT_TRUE(std::filesystem::exists(tmp_ / "store/tsv/tbl_Wiki_Page.tsv"));
  EXPECT_TRUE(std::filesystem::exists(tmp_ / "store/texts/010/10.txt"));
}

TEST_F(CliStore, StatsMatchTsvLineCounts) {
  const auto r = invoke({"stats", "--store", store()});
  ASSERT_EQ(r.code, kOk) << r.err;
  for (const char* table : {"tbl_Wiki_Page", "tbl_Wiki_Page_Redirect", "tbl_Wiki_Page_Categories",
                            "tbl_Wiki_Page_Links", "tbl_Wiki_Page_Paragraphs"}) {
    const auto rows = count_lines(read_file(tmp_ / "store/tsv" / (std::string(table) + ".tsv"))) - 1;
    EXPECT_NE(r.out.find(std::string(table) + "\t" + std::to_string(rows) + "\n"), std::string::npos)
        << table << "\n" << r.out;
  }
  EXPECT_NE(r.out.find("pages_read\t4\n"), std::string::npos);
}

TEST_F(CliStore, SharedCategory) {
  const auto r = invoke({"query", "shared-category", "--store", store(), "--category", "40"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "10\tA\n");
}

TEST_F(CliStore, CrossLinksWithIdFiles) {
  write_file(tmp_ / "g1", "# sources\n10\n\n30  # redirect\n");
  write_file(tmp_ / "g2", "20\n");
  const auto r = invoke({"query", "cross-links", "--store", store(), "--group1", (tmp_ / "g1").string(),
                         "--group2", (tmp_ / "g2").string()});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "10\t20\n");
}

TEST_F(CliStore, EmptyGroupsGiveEmptyOutput) {
  write_file(tmp_ / "empty", "");
  const auto r = invoke({"query", "cross-links", "--store", store(), "--group1",
                         (tmp_ / "empty").string(), "--group2", (tmp_ / "empty").string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "");
}

TEST_F(CliStore, BadIdFileIsUsage) {
  write_file(tmp_ / "bad", "10\nten\n");
  const auto r = invoke({"query", "redirect-counts", "--store", store(), "--pages", (tmp_ / "bad").string()});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find(":2:"), std::string::npos);
}

TEST_F(CliStore, RedirectCounts) {
  write_file(tmp_ / "p", "30\n10\n");
  const auto r = invoke({"query", "redirect-counts", "--store", store(), "--pages", (tmp_ / "p").string()});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "10\t1\n");
}

TEST_F(CliStore, ParagraphLinks) {
  const auto r = invoke({"query", "paragraph-links", "--store", store(), "--page", "10", "--paragraph", "0"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "20\n");
}

TEST_F(CliStore, ParagraphLinksNotFound) {
  EXPECT_EQ(invoke({"query", "paragraph-links", "--store", store(), "--page", "10", "--paragraph", "7"}).code,
            kNotFound);
  EXPECT_EQ(invoke({"query", "paragraph-links", "--store", store(), "--page", "99", "--paragraph", "0"}).code,
            kNotFound);
}

TEST_F(CliStore, QueryMissingFlagIsUsage) {
  EXPECT_EQ(invoke({"query", "paragraph-links", "--store", store(), "--page", "10"}).code, kUsage);
  EXPECT_EQ(invoke({"query", "shared-category", "--store", store()}).code, kUsage);
}

TEST(CliProcess, RebuildIsByteIdentical) {
  TempDir tmp;
  testing::write_dump(tmp / "dump.xml", testing::generate_fixture({.seed = 3, .entities = 80}));
  for (const char* out : {"a", "b"}) {
    const auto r = testing::run_process({WIKIDB_CLI_PATH, "build", "--dump", (tmp / "dump.xml").string(),
                                         "--out", (tmp / out).string()});
    ASSERT_EQ(r.exit_code, 0) << r.err;
  }
  for (const auto& entry : std::filesystem::recursive_directory_iterator(tmp / "a")) {
    if (!entry.is_regular_file()) continue;
    const auto rel = std::filesystem::relative(entry.path(), tmp / "a");
    ASSERT_EQ(read_file(entry.path()), read_file(tmp / "b" / rel)) << rel;
  }
}

TEST(CliProcess, ReadsDumpFromStandardInputAndHonoursBudgetEnv) {
  TempDir tmp;
  const auto r = testing::run_process(
      {"/bin/sh", "-c",
       "WIKIDB_MEMORY_BUDGET=1 \"$0\" build --dump - --out \"$1\" < \"$2\"", WIKIDB_CLI_PATH,
       (tmp / "s").string(), (kFixtures / "three_pages.xml").string()});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("pages_read\t3\n"), std::string::npos) << r.out;
}

TEST(CliProcess, InvalidBudgetEnvIsUsage) {
  TempDir tmp;
  const auto r = testing::run_process(
      {"/usr/bin/env", "WIKIDB_MEMORY_BUDGET=lots", WIKIDB_CLI_PATH, "build", "--dump",
       (kFixtures / "three_pages.xml").string(), "--out", (tmp / "s").string()});
  EXPECT_EQ(r.exit_code, 1);
}

}  // namespace
}  // namespace wikidb::cli
