#include <charconv>
#include <fstream>
#include <map>

#include "wikidb/error.hpp"
#include "wikidb/schema_builder.hpp"

namespace wikidb {

namespace {

std::int64_t parse_int(std::string_view field, const std::string& where) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw Error(where + ": expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = line.find(sep);
    out.push_back(line.substr(0, at));
    if (at == std::string_view::npos) return out;
    line.remove_prefix(at + 1);
  }
}

/// Calls `row(fields, where)` for every data line of a TSV after checking
/// the header.
template <typename Fn>
void read_tsv(const std::filesystem::path& path, std::string_view header, Fn&& row) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("missing table file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw Error(path.string() + ":1: unexpected header");
  }
  const std::size_t columns = split(header, '\t').size();
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    const auto fields = split(line, '\t');
    if (fields.size() != columns) {
      throw Error(where + ": expected " + std::to_string(columns) + " fields");
    }
    row(fields, where);
  }
}

}  // namespace

BuildStats read_stats(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("missing stats file " + path.string());
  BuildStats s;
  const std::map<std::string_view, std::uint64_t*> fields = {
      {"pages_read", &s.pages_read},
      {"skipped_namespaces", &s.skipped_namespaces},
      {"duplicate_titles", &s.duplicate_titles},
      {"invalid_titles", &s.invalid_titles},
      {"dropped_red_links", &s.dropped_red_links},
      {"dropped_categories", &s.dropped_categories},
      {"unresolved_redirects", &s.unresolved_redirects},
      {"render_warnings", &s.render_warnings},
      {"spill_runs", &s.spill_runs},
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (eq == std::string::npos) throw Error(where + ": expected key=value");
    auto it = fields.find(std::string_view(line).substr(0, eq));
    if (it == fields.end()) continue;  // written by a newer version
    *it->second = static_cast<std::uint64_t>(parse_int(std::string_view(line).substr(eq + 1), where));
  }
  return s;
}

WikiStore load_store(const std::filesystem::path& root) {
  const auto tsv = root / schema::kTsvDir;
  auto file = [&](std::string_view table) { return tsv / (std::string(table) + ".tsv"); };

  std::vector<WikiPage> pages;
  read_tsv(file(schema::kPageTable), "Page_id\tPage_name\tFile_path\tPage_type\tStemmed_name",
           [&](const auto& f, const std::string& where) {
             const auto type = parse_int(f[3], where);
             if (type < 1 || type > 3) throw Error(where + ": Page_type out of range");
             pages.push_back({parse_int(f[0], where), tsv_unescape(f[1]), tsv_unescape(f[2]),
                              static_cast<PageType>(type), tsv_unescape(f[4])});
           });

  std::vector<RedirectEntry> redirects;
  read_tsv(file(schema::kRedirectTable), "Page_id\tRedirected_page_title\tRedirected_page_id",
           [&](const auto& f, const std::string& where) {
             std::optional<PageId> target;
             if (!f[2].empty()) target = parse_int(f[2], where);
             redirects.push_back({parse_int(f[0], where), tsv_unescape(f[1]), target});
           });

  std::vector<CategoryAssignment> categories;
  read_tsv(file(schema::kCategoryTable), "Page_id\tCategory_page_id",
           [&](const auto& f, const std::string& where) {
             categories.push_back({parse_int(f[0], where), parse_int(f[1], where)});
           });

  std::vector<LinkEntry> links;
  read_tsv(file(schema::kLinkTable),
           "Page_id\tLink_page_id\tPos_in_page\tLink_description\tStemmed_link_description",
           [&](const auto& f, const std::string& where) {
             links.push_back({parse_int(f[0], where), parse_int(f[1], where), parse_int(f[2], where),
                              tsv_unescape(f[3]), tsv_unescape(f[4])});
           });

  std::vector<ParagraphEntry> paragraphs;
  read_tsv(file(schema::kParagraphTable),
           "Page_id\tParagraph_id\tParagraph_start_pos\tParagraph_end_pos\tParagraph_level",
           [&](const auto& f, const std::string& where) {
             paragraphs.push_back({parse_int(f[0], where), parse_int(f[1], where), parse_int(f[2], where),
                                   parse_int(f[3], where), parse_int(f[4], where)});
           });

  return WikiStore(root, std::move(pages), std::move(redirects), std::move(categories),
                   std::move(links), std::move(paragraphs), read_stats(root / schema::kStatsFile));
}

}  // namespace wikidb
