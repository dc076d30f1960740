#include <array>
#include <fstream>

#include "wikidb/error.hpp"
#include "wikidb/schema_builder.hpp"

namespace wikidb {

namespace {

constexpr std::string_view kDdl = R"(CREATE TABLE tbl_Wiki_Page (
  Page_id INTEGER NOT NULL PRIMARY KEY,
  Page_name TEXT NOT NULL,
  File_path TEXT NOT NULL,
  Page_type INTEGER NOT NULL CHECK (Page_type IN (1, 2, 3)),
  Stemmed_name TEXT NOT NULL
);
CREATE TABLE tbl_Wiki_Page_Redirect (
  Page_id INTEGER NOT NULL PRIMARY KEY REFERENCES tbl_Wiki_Page (Page_id),
  Redirected_page_title TEXT NOT NULL,
  Redirected_page_id INTEGER REFERENCES tbl_Wiki_Page (Page_id)
);
CREATE TABLE tbl_Wiki_Page_Categories (
  Page_id INTEGER NOT NULL REFERENCES tbl_Wiki_Page (Page_id),
  Category_page_id INTEGER NOT NULL REFERENCES tbl_Wiki_Page (Page_id),
  PRIMARY KEY (Page_id, Category_page_id)
);
CREATE TABLE tbl_Wiki_Page_Links (
  Page_id INTEGER NOT NULL REFERENCES tbl_Wiki_Page (Page_id),
  Link_page_id INTEGER NOT NULL REFERENCES tbl_Wiki_Page (Page_id),
  Pos_in_page INTEGER NOT NULL,
  Link_description TEXT NOT NULL,
  Stemmed_link_description TEXT NOT NULL,
  PRIMARY KEY (Page_id, Pos_in_page)
);
CREATE TABLE tbl_Wiki_Page_Paragraphs (
  Page_id INTEGER NOT NULL REFERENCES tbl_Wiki_Page (Page_id),
  Paragraph_id INTEGER NOT NULL,
  Paragraph_start_pos INTEGER NOT NULL,
  Paragraph_end_pos INTEGER NOT NULL,
  Paragraph_level INTEGER NOT NULL CHECK (Paragraph_level >= 1),
  PRIMARY KEY (Page_id, Paragraph_id)
);
)";

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw Error("write failed: " + path.string());
}

std::string id_or_empty(const std::optional<PageId>& id) {
  return id ? std::to_string(*id) : std::string();
}

}  // namespace

std::string sql_quote(std::string_view value) {
  std::string out;
  out.reserve(value.size() + 2);
  out.push_back('\'');
  for (const char c : value) {
    out.push_back(c);
    if (c == '\'') out.push_back('\'');
  }
  out.push_back('\'');
  return out;
}

std::string tsv_escape(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (const char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string tsv_unescape(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\' || i + 1 == field.size()) {
      out.push_back(field[i]);
      continue;
    }
    switch (field[++i]) {
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case '\\': out.push_back('\\'); break;
      default:
        out.push_back('\\');
        out.push_back(field[i]);
    }
  }
  return out;
}

namespace {

enum Table : std::size_t { kPage, kRedirect, kCategory, kLink, kParagraph, kTableCount };

constexpr std::array<std::string_view, kTableCount> kTableNames = {
    schema::kPageTable, schema::kRedirectTable, schema::kCategoryTable, schema::kLinkTable,
    schema::kParagraphTable};

constexpr std::array<std::string_view, kTableCount> kTsvHeaders = {
    "Page_id\tPage_name\tFile_path\tPage_type\tStemmed_name",
    "Page_id\tRedirected_page_title\tRedirected_page_id",
    "Page_id\tCategory_page_id",
    "Page_id\tLink_page_id\tPos_in_page\tLink_description\tStemmed_link_description",
    "Page_id\tParagraph_id\tParagraph_start_pos\tParagraph_end_pos\tParagraph_level"};

void sql_insert(std::ostream& out, Table t) { out << "INSERT INTO " << kTableNames[t] << " VALUES ("; }

}  // namespace

struct ExportWriter::Impl {
  std::filesystem::path sql_path;
  std::array<std::filesystem::path, kTableCount> part_paths;
  std::array<std::ofstream, kTableCount> sql_parts;
  std::array<std::filesystem::path, kTableCount> tsv_paths;
  std::array<std::ofstream, kTableCount> tsv;
  bool finished = false;

  bool sql() const { return !sql_path.empty(); }
  bool has_tsv() const { return !tsv_paths[0].empty(); }

  void remove_parts() {
    std::error_code ec;
    for (std::size_t t = 0; t < kTableCount; ++t) {
      if (sql_parts[t].is_open()) sql_parts[t].close();
      if (!part_paths[t].empty()) std::filesystem::remove(part_paths[t], ec);
    }
  }
};

ExportWriter::ExportWriter(const std::filesystem::path& sql_path, const std::filesystem::path& tsv_dir)
    : impl_(std::make_unique<Impl>()) {
  if (!sql_path.empty()) {
    impl_->sql_path = sql_path;
    if (sql_path.has_parent_path()) std::filesystem::create_directories(sql_path.parent_path());
    for (std::size_t t = 0; t < kTableCount; ++t) {
      impl_->part_paths[t] = sql_path.string() + ".part" + std::to_string(t);
      impl_->sql_parts[t] = open_out(impl_->part_paths[t]);
    }
  }
  if (!tsv_dir.empty()) {
    std::filesystem::create_directories(tsv_dir);
    for (std::size_t t = 0; t < kTableCount; ++t) {
      impl_->tsv_paths[t] = tsv_dir / (std::string(kTableNames[t]) + ".tsv");
      impl_->tsv[t] = open_out(impl_->tsv_paths[t]);
      impl_->tsv[t] << kTsvHeaders[t] << '\n';
    }
  }
}

ExportWriter::~ExportWriter() {
  if (!impl_->finished) impl_->remove_parts();
}

void ExportWriter::page(const WikiPage& p) {
  if (impl_->sql()) {
    auto& out = impl_->sql_parts[kPage];
    sql_insert(out, kPage);
    out << p.page_id << ", " << sql_quote(p.page_name) << ", " << sql_quote(p.file_path) << ", "
        << static_cast<int>(p.page_type) << ", " << sql_quote(p.stemmed_name) << ");\n";
  }
  if (impl_->has_tsv()) {
    impl_->tsv[kPage] << p.page_id << '\t' << tsv_escape(p.page_name) << '\t' << tsv_escape(p.file_path)
                      << '\t' << static_cast<int>(p.page_type) << '\t' << tsv_escape(p.stemmed_name)
                      << '\n';
  }
}

void ExportWriter::redirect(const RedirectEntry& r) {
  if (impl_->sql()) {
    auto& out = impl_->sql_parts[kRedirect];
    sql_insert(out, kRedirect);
    out << r.page_id << ", " << sql_quote(r.redirected_page_title) << ", "
        << (r.redirected_page_id ? std::to_string(*r.redirected_page_id) : "NULL") << ");\n";
  }
  if (impl_->has_tsv()) {
    impl_->tsv[kRedirect] << r.page_id << '\t' << tsv_escape(r.redirected_page_title) << '\t'
                          << id_or_empty(r.redirected_page_id) << '\n';
  }
}

void ExportWriter::category(const CategoryAssignment& c) {
  if (impl_->sql()) {
    auto& out = impl_->sql_parts[kCategory];
    sql_insert(out, kCategory);
    out << c.page_id << ", " << c.category_page_id << ");\n";
  }
  if (impl_->has_tsv()) impl_->tsv[kCategory] << c.page_id << '\t' << c.category_page_id << '\n';
}

void ExportWriter::link(const LinkEntry& l) {
  if (impl_->sql()) {
    auto& out = impl_->sql_parts[kLink];
    sql_insert(out, kLink);
    out << l.page_id << ", " << l.link_page_id << ", " << l.pos_in_page << ", "
        << sql_quote(l.link_description) << ", " << sql_quote(l.stemmed_link_description) << ");\n";
  }
  if (impl_->has_tsv()) {
    impl_->tsv[kLink] << l.page_id << '\t' << l.link_page_id << '\t' << l.pos_in_page << '\t'
                      << tsv_escape(l.link_description) << '\t' << tsv_escape(l.stemmed_link_description)
                      << '\n';
  }
}

void ExportWriter::paragraph(const ParagraphEntry& p) {
  if (impl_->sql()) {
    auto& out = impl_->sql_parts[kParagraph];
    sql_insert(out, kParagraph);
    out << p.page_id << ", " << p.paragraph_id << ", " << p.paragraph_start_pos << ", "
        << p.paragraph_end_pos << ", " << p.paragraph_level << ");\n";
  }
  if (impl_->has_tsv()) {
    impl_->tsv[kParagraph] << p.page_id << '\t' << p.paragraph_id << '\t' << p.paragraph_start_pos << '\t'
                           << p.paragraph_end_pos << '\t' << p.paragraph_level << '\n';
  }
}

void ExportWriter::finish() {
  if (impl_->finished) return;
  for (std::size_t t = 0; t < kTableCount; ++t) {
    if (impl_->tsv[t].is_open()) close_checked(impl_->tsv[t], impl_->tsv_paths[t]);
  }
  if (impl_->sql()) {
    for (std::size_t t = 0; t < kTableCount; ++t) close_checked(impl_->sql_parts[t], impl_->part_paths[t]);
    auto out = open_out(impl_->sql_path);
    out << kDdl << "BEGIN;\n";
    for (std::size_t t = 0; t < kTableCount; ++t) {
      std::ifstream part(impl_->part_paths[t], std::ios::binary);
      if (part.peek() != std::ifstream::traits_type::eof()) out << part.rdbuf();
    }
    out << "COMMIT;\n";
    close_checked(out, impl_->sql_path);
    impl_->remove_parts();
  }
  impl_->finished = true;
}

namespace {

void replay(const WikiStore& store, RowSink& sink) {
  for (const auto& p : store.pages()) sink.page(p);
  for (const auto& p : store.paragraphs()) sink.paragraph(p);
  for (const auto& r : store.redirects()) sink.redirect(r);
  for (const auto& c : store.categories()) sink.category(c);
  for (const auto& l : store.links()) sink.link(l);
}

}  // namespace

void export_sql(const WikiStore& store, const std::filesystem::path& path) {
  ExportWriter writer(path, {});
  replay(store, writer);
  writer.finish();
}

void export_tsv(const WikiStore& store, const std::filesystem::path& dir) {
  ExportWriter writer({}, dir);
  replay(store, writer);
  writer.finish();
}

void write_stats(const BuildStats& s, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "pages_read=" << s.pages_read << '\n'
      << "skipped_namespaces=" << s.skipped_namespaces << '\n'
      << "duplicate_titles=" << s.duplicate_titles << '\n'
      << "invalid_titles=" << s.invalid_titles << '\n'
      << "dropped_red_links=" << s.dropped_red_links << '\n'
      << "dropped_categories=" << s.dropped_categories << '\n'
      << "unresolved_redirects=" << s.unresolved_redirects << '\n'
      << "render_warnings=" << s.render_warnings << '\n'
      << "spill_runs=" << s.spill_runs << '\n';
  close_checked(out, path);
}

}  // namespace wikidb
