#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "wikidb/dump_reader.hpp"
#include "wikidb/stemmer.hpp"
#include "wikidb/store.hpp"

namespace wikidb {

struct BuildOptions {
  /// Pass-1 reference buffer size before it is spilled to a sorted run.
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
  const StopWordList* stop_words = nullptr;  ///< builtin list when null
};

/// Normalized title -> page, filled during pass 1.
class TitleIndex {
 public:
  struct Entry {
    PageId page_id;
    PageType page_type;
  };

  /// False when the title is already taken (the first page keeps it).
  bool insert(std::string title, PageId id, PageType type);
  const Entry* find(std::string_view normalized_title) const;
  std::size_t size() const noexcept { return map_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, Entry, Hash, std::equal_to<>> map_;
};

/// Single-hop lookup: a redirect pointing at another redirect resolves to
/// that redirect's id, not to the end of the chain.
std::optional<PageId> resolve_redirect(const TitleIndex& index, std::string_view target_title);

/// `texts/<id mod 1000, 3 digits>/<id>.txt`
std::string assign_file_path(PageId page_id);

/// Receives table rows as a build produces them: all page rows and then
/// all paragraph rows, ascending by page id, followed by redirect, category
/// and link rows interleaved by ascending page id, each in source order.
class RowSink {
 public:
  virtual ~RowSink() = default;
  virtual void page(const WikiPage& row) = 0;
  virtual void paragraph(const ParagraphEntry& row) = 0;
  virtual void redirect(const RedirectEntry& row) = 0;
  virtual void category(const CategoryAssignment& row) = 0;
  virtual void link(const LinkEntry& row) = 0;
};

/// Two-pass build. Pass 1 renders every page, writes its text file and
/// buffers title references; pass 2 resolves titles to ids and streams the
/// rows to `sink`. Only namespaces 0 and 14 are ingested. Memory is bounded
/// by the largest page plus `memory_budget_bytes` plus one row per page.
BuildStats build_tables(PageSource& pages, const std::filesystem::path& out_dir, RowSink& sink,
                        const BuildOptions& options = {});

/// build_tables() collected into an in-memory store.
WikiStore build_store(PageSource& pages, const std::filesystem::path& out_dir,
                      const BuildOptions& options = {});

/// RowSink that writes the SQL script and/or the TSV tables as rows arrive.
/// SQL INSERTs are spooled per table next to the script and assembled by
/// finish(), so the script lists each table's rows together.
class ExportWriter final : public RowSink {
 public:
  /// Either destination may be empty to skip that format.
  ExportWriter(const std::filesystem::path& sql_path, const std::filesystem::path& tsv_dir);
  ~ExportWriter() override;
  ExportWriter(const ExportWriter&) = delete;
  ExportWriter& operator=(const ExportWriter&) = delete;

  void page(const WikiPage& row) override;
  void paragraph(const ParagraphEntry& row) override;
  void redirect(const RedirectEntry& row) override;
  void category(const CategoryAssignment& row) override;
  void link(const LinkEntry& row) override;

  /// Flushes every file and writes the SQL script. Throws on I/O errors.
  void finish();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Single SQL script: five CREATE TABLE statements followed by INSERTs.
void export_sql(const WikiStore& store, const std::filesystem::path& path);

/// One `tbl_*.tsv` per table with a header row.
void export_tsv(const WikiStore& store, const std::filesystem::path& dir);

/// key=value lines.
void write_stats(const BuildStats& stats, const std::filesystem::path& path);
BuildStats read_stats(const std::filesystem::path& path);

/// Reloads a store from `<root>/tsv` and `<root>/build_stats.txt`.
WikiStore load_store(const std::filesystem::path& root);

/// Table and column names as exported.
namespace schema {
inline constexpr std::string_view kPageTable = "tbl_Wiki_Page";
inline constexpr std::string_view kRedirectTable = "tbl_Wiki_Page_Redirect";
inline constexpr std::string_view kCategoryTable = "tbl_Wiki_Page_Categories";
inline constexpr std::string_view kLinkTable = "tbl_Wiki_Page_Links";
inline constexpr std::string_view kParagraphTable = "tbl_Wiki_Page_Paragraphs";
inline constexpr std::string_view kStatsFile = "build_stats.txt";
inline constexpr std::string_view kSqlFile = "wikidb.sql";
inline constexpr std::string_view kTsvDir = "tsv";
}  // namespace schema

/// Escapes `\`, tab, newline and carriage return for a TSV field.
std::string tsv_escape(std::string_view field);
std::string tsv_unescape(std::string_view field);

/// Single-quoted SQL literal with quote doubling.
std::string sql_quote(std::string_view value);

}  // namespace wikidb
