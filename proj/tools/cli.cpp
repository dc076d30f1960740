#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wikidb/dump_reader.hpp"
#include "wikidb/error.hpp"
#include "wikidb/query.hpp"
#include "wikidb/schema_builder.hpp"

namespace wikidb::cli {

namespace {

constexpr std::size_t kDefaultBudgetMiB = 1024;

struct UsageError : Error {
  using Error::Error;
};

std::optional<std::int64_t> parse_id(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// One decimal id per line; `#` starts a comment.
PageIdSet read_id_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open id file " + path);
  PageIdSet ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = line;
    if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    if (v.empty()) continue;
    const auto id = parse_id(v);
    if (!id) throw UsageError(path + ":" + std::to_string(line_no) + ": not a page id: " + std::string(v));
    ids.insert(*id);
  }
  return ids;
}

std::size_t memory_budget_mib(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("WIKIDB_MEMORY_BUDGET"); env != nullptr && *env != '\0') {
    const auto v = parse_id(env);
    if (!v || *v <= 0) throw UsageError("WIKIDB_MEMORY_BUDGET must be a positive number of MiB");
    return static_cast<std::size_t>(*v);
  }
  return kDefaultBudgetMiB;
}

WikiStore open_store(const std::string& dir) {
  if (!std::filesystem::is_directory(dir)) throw UsageError("store directory not found: " + dir);
  try {
    return load_store(dir);
  } catch (const Error& e) {
    throw UsageError(std::string("cannot load store: ") + e.what());
  }
}

void print_stats(const BuildStats& s, std::ostream& out) {
  out << "pages_read\t" << s.pages_read << '\n'
      << "skipped_namespaces\t" << s.skipped_namespaces << '\n'
      << "duplicate_titles\t" << s.duplicate_titles << '\n'
      << "invalid_titles\t" << s.invalid_titles << '\n'
      << "dropped_red_links\t" << s.dropped_red_links << '\n'
      << "dropped_categories\t" << s.dropped_categories << '\n'
      << "unresolved_redirects\t" << s.unresolved_redirects << '\n'
      << "render_warnings\t" << s.render_warnings << '\n'
      << "spill_runs\t" << s.spill_runs << '\n';
}

struct BuildArgs {
  std::string dump;
  std::string out;
  std::string stop_words;
  std::optional<std::size_t> budget_mib;
  std::string format = "both";
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  std::optional<StopWordList> stop_words;
  if (!a.stop_words.empty()) {
    try {
      stop_words = StopWordList::load(a.stop_words);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  BuildOptions options;
  options.memory_budget_bytes = memory_budget_mib(a.budget_mib) << 20;
  if (stop_words) options.stop_words = &*stop_words;

  // Rows go straight to the export files; the tables are never held in memory.
  const std::filesystem::path root = a.out;
  const bool sql = a.format == "sql" || a.format == "both";
  const bool tsv = a.format == "tsv" || a.format == "both";
  std::filesystem::create_directories(root);
  ExportWriter writer(sql ? root / schema::kSqlFile : std::filesystem::path(),
                      tsv ? root / schema::kTsvDir : std::filesystem::path());
  auto reader = open_dump(a.dump);
  const BuildStats stats = build_tables(*reader, root, writer, options);
  writer.finish();
  print_stats(stats, out);
  return kOk;
}

struct QueryArgs {
  std::string kind;
  std::string store;
  std::optional<PageId> category;
  std::string group1;
  std::string group2;
  std::string pages;
  std::optional<PageId> page;
  std::optional<std::int64_t> paragraph;
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
  auto need = [](bool present, const char* flag) {
    if (!present) throw UsageError(std::string("missing required flag ") + flag);
  };
  if (a.kind == "shared-category") {
    need(a.category.has_value(), "--category");
  } else if (a.kind == "cross-links") {
    need(!a.group1.empty(), "--group1");
    need(!a.group2.empty(), "--group2");
  } else if (a.kind == "redirect-counts") {
    need(!a.pages.empty(), "--pages");
  } else {
    need(a.page.has_value(), "--page");
    need(a.paragraph.has_value(), "--paragraph");
  }

  if (a.kind == "shared-category") {
    const WikiStore store = open_store(a.store);
    for (const auto& ref : pages_sharing_category(store, *a.category)) {
      out << ref.page_id << '\t' << tsv_escape(ref.page_name) << '\n';
    }
  } else if (a.kind == "cross-links") {
    const PageIdSet g1 = read_id_file(a.group1);
    const PageIdSet g2 = read_id_file(a.group2);
    const WikiStore store = open_store(a.store);
    for (const auto& [from, to] : cross_group_links(store, g1, g2)) out << from << '\t' << to << '\n';
  } else if (a.kind == "redirect-counts") {
    const PageIdSet pages = read_id_file(a.pages);
    const WikiStore store = open_store(a.store);
    for (const auto& group : redirect_counts(store, pages)) {
      if (group.target) out << *group.target;
      out << '\t' << group.count << '\n';
    }
  } else {
    const WikiStore store = open_store(a.store);
    for (const PageId id : links_in_paragraph(store, *a.page, *a.paragraph)) out << id << '\n';
  }
  return kOk;
}

int cmd_stats(const std::string& dir, std::ostream& out) {
  const WikiStore store = open_store(dir);
  out << schema::kPageTable << '\t' << store.pages().size() << '\n'
      << schema::kRedirectTable << '\t' << store.redirects().size() << '\n'
      << schema::kCategoryTable << '\t' << store.categories().size() << '\n'
      << schema::kLinkTable << '\t' << store.links().size() << '\n'
      << schema::kParagraphTable << '\t' << store.paragraphs().size() << '\n';
  print_stats(store.stats(), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds and queries Wiki-DB stores from MediaWiki XML dumps.", "wikidb"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Parse a dump into a store directory");
  b->add_option("--dump", build.dump, "Dump XML path, or - for standard input")->required();
  b->add_option("--out", build.out, "Output directory")->required();
  b->add_option("--stop-words", build.stop_words, "Stop-word list (one token per line)");
  b->add_option("--memory-budget", build.budget_mib,
                "Reference buffer size in MiB before spilling to disk "
                "(default: $WIKIDB_MEMORY_BUDGET or 1024)")
      ->check(CLI::PositiveNumber);
  b->add_option("--format", build.format, "Export format")
      ->check(CLI::IsMember({"sql", "tsv", "both"}));

  QueryArgs query;
  auto* q = app.add_subcommand("query", "Run one of the use-case queries");
  q->add_option("kind", query.kind, "shared-category | cross-links | redirect-counts | paragraph-links")
      ->required()
      ->check(CLI::IsMember({"shared-category", "cross-links", "redirect-counts", "paragraph-links"}));
  q->add_option("--store", query.store, "Store directory")->required();
  q->add_option("--category", query.category, "Category page id");
  q->add_option("--group1", query.group1, "File of source page ids");
  q->add_option("--group2", query.group2, "File of target page ids");
  q->add_option("--pages", query.pages, "File of redirect page ids");
  q->add_option("--page", query.page, "Page id");
  q->add_option("--paragraph", query.paragraph, "Paragraph id (0 = lead)");

  std::string stats_store;
  auto* s = app.add_subcommand("stats", "Print table sizes and build counters");
  s->add_option("--store", stats_store, "Store directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (b->parsed()) return cmd_build(build, out);
    if (q->parsed()) return cmd_query(query, out);
    return cmd_stats(stats_store, out);
  } catch (const UsageError& e) {
    err << "wikidb: " << e.what() << '\n';
    return kUsage;
  } catch (const NotFoundError& e) {
    err << "wikidb: " << e.what() << '\n';
    return kNotFound;
  } catch (const DumpError& e) {
    err << "wikidb: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "wikidb: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace wikidb::cli
