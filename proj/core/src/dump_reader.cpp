#include "wikidb/dump_reader.hpp"

#include <expat.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "wikidb/error.hpp"
#include "wikidb/wikitext.hpp"

namespace wikidb {

namespace {

constexpr int kChunkSize = 64 * 1024;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::string_view> compression_name(std::string_view head) {
  if (head.starts_with("BZh")) return "bzip2";
  if (head.starts_with("\x1f\x8b")) return "gzip";
  if (head.starts_with("7z\xBC\xAF\x27\x1C")) return "7z";
  if (head.starts_with("\xFD" "7zXZ")) return "xz";
  return std::nullopt;
}

}  // namespace

class DumpReader::Impl {
 public:
  Impl(std::FILE* file, bool owns, std::string name)
      : file_(file), owns_(owns), name_(std::move(name)), parser_(XML_ParserCreate("UTF-8")) {
    if (parser_ == nullptr) throw Error("out of memory creating XML parser");
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &Impl::on_start, &Impl::on_end);
    XML_SetCharacterDataHandler(parser_, &Impl::on_text);
  }

  ~Impl() {
    XML_ParserFree(parser_);
    if (owns_ && file_ != nullptr) std::fclose(file_);
  }

  std::optional<PageRecord> next() {
    while (ready_.empty() && !finished_) feed();
    if (ready_.empty()) return std::nullopt;
    PageRecord rec = std::move(ready_.front());
    ready_.pop_front();
    return rec;
  }

  std::uint64_t bytes_read() const noexcept { return bytes_read_; }

 private:
  enum class Field { None, Title, Ns, Id, Text };

  void feed() {
    void* buf = XML_GetBuffer(parser_, kChunkSize);
    if (buf == nullptr) throw DumpError(name_, bytes_read_, "out of memory in XML parser");
    const std::size_t n = std::fread(buf, 1, kChunkSize, file_);
    if (n < static_cast<std::size_t>(kChunkSize) && std::ferror(file_)) {
      throw DumpError(name_, bytes_read_, std::string("read error: ") + std::strerror(errno));
    }
    if (bytes_read_ == 0 && n > 0) {
      if (auto kind = compression_name(std::string_view(static_cast<const char*>(buf), n))) {
        throw DumpError(name_, 0,
                        "unsupported compression (" + std::string(*kind) +
                            "); decompress first or pipe the XML through '-'");
      }
    }
    bytes_read_ += n;
    const bool final = n == 0;
    if (XML_ParseBuffer(parser_, static_cast<int>(n), final) == XML_STATUS_ERROR) {
      if (pending_error_) throw *pending_error_;
      throw DumpError(name_, error_offset(),
                      std::string("malformed XML: ") + XML_ErrorString(XML_GetErrorCode(parser_)));
    }
    if (final) finished_ = true;
  }

  // Expat points a tag mismatch at the element name; report the start of
  // the end tag instead.
  std::uint64_t error_offset() const {
    auto at = static_cast<std::uint64_t>(XML_GetCurrentByteIndex(parser_));
    if (XML_GetErrorCode(parser_) != XML_ERROR_TAG_MISMATCH || at < 2) return at;
    int offset = 0;
    int size = 0;
    const char* ctx = XML_GetInputContext(parser_, &offset, &size);
    if (ctx != nullptr && offset >= 2 && ctx[offset - 2] == '<' && ctx[offset - 1] == '/') at -= 2;
    return at;
  }

  void fail(const std::string& message) {
    if (!pending_error_) {
      pending_error_.emplace(name_, static_cast<std::uint64_t>(XML_GetCurrentByteIndex(parser_)),
                             message);
    }
    XML_StopParser(parser_, XML_FALSE);
  }

  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    static_cast<Impl*>(self)->start(name, attrs);
  }
  static void on_end(void* self, const XML_Char* name) { static_cast<Impl*>(self)->end(name); }
  static void on_text(void* self, const XML_Char* s, int len) {
    auto* impl = static_cast<Impl*>(self);
    if (impl->capture_ != nullptr) impl->capture_->append(s, static_cast<std::size_t>(len));
  }

  void start(std::string_view name, const XML_Char** attrs) {
    ++depth_;
    if (depth_ == 1) {
      if (name != "mediawiki") fail("root element is <" + std::string(name) + ">, expected <mediawiki>");
      return;
    }
    if (depth_ == 2) {
      if (name == "page") {
        in_page_ = true;
        page_ = PageRecord{};
        id_text_.clear();
        ns_text_.clear();
        seen_id_ = false;
      }
      return;
    }
    if (!in_page_) return;
    if (depth_ == 3) {
      if (name == "title") {
        page_.title.clear();
        capture_ = &page_.title;
      } else if (name == "ns") {
        ns_text_.clear();
        capture_ = &ns_text_;
      } else if (name == "id" && !seen_id_) {
        capture_ = &id_text_;
      } else if (name == "redirect") {
        page_.is_redirect = true;
        for (const XML_Char** a = attrs; a != nullptr && *a != nullptr; a += 2) {
          if (std::string_view(a[0]) == "title") page_.redirect_title = std::string(a[1]);
        }
      } else if (name == "revision") {
        in_revision_ = true;
      }
      return;
    }
    if (depth_ == 4 && in_revision_ && name == "text") {
      // Revisions are in chronological order; the last one wins.
      page_.wikitext.clear();
      capture_ = &page_.wikitext;
    }
  }

  void end(std::string_view name) {
    capture_ = nullptr;
    if (depth_ == 3 && in_page_) {
      if (name == "id") seen_id_ = true;
      if (name == "revision") in_revision_ = false;
    } else if (depth_ == 2 && in_page_ && name == "page") {
      finish_page();
      in_page_ = false;
    }
    --depth_;
  }

  void finish_page() {
    const std::string_view id = trim(id_text_);
    PageId parsed = 0;
    auto [ptr, ec] = std::from_chars(id.data(), id.data() + id.size(), parsed);
    if (id.empty() || ec != std::errc{} || ptr != id.data() + id.size() || parsed <= 0) {
      fail("page has a missing or non-positive <id>");
      return;
    }
    page_.page_id = parsed;

    const std::string_view ns = trim(ns_text_);
    if (!ns.empty()) {
      auto [nptr, nec] = std::from_chars(ns.data(), ns.data() + ns.size(), page_.ns);
      if (nec != std::errc{} || nptr != ns.data() + ns.size()) {
        fail("page " + std::to_string(parsed) + " has an invalid <ns>");
        return;
      }
    }
    if (trim(page_.title).empty()) {
      fail("page " + std::to_string(parsed) + " has an empty <title>");
      return;
    }
    if (!page_.is_redirect) page_.is_redirect = has_redirect_directive(page_.wikitext);
    ready_.push_back(std::move(page_));
    page_ = PageRecord{};
  }

  std::FILE* file_;
  bool owns_;
  std::string name_;
  XML_Parser parser_;
  std::deque<PageRecord> ready_;
  std::optional<DumpError> pending_error_;
  std::uint64_t bytes_read_ = 0;
  bool finished_ = false;

  int depth_ = 0;
  bool in_page_ = false;
  bool in_revision_ = false;
  bool seen_id_ = false;
  PageRecord page_;
  std::string id_text_;
  std::string ns_text_;
  std::string* capture_ = nullptr;
};

DumpReader::DumpReader(std::FILE* file, bool owns_file, std::string name)
    : impl_(std::make_unique<Impl>(file, owns_file, std::move(name))) {}

DumpReader::~DumpReader() = default;

std::optional<PageRecord> DumpReader::next() { return impl_->next(); }

std::uint64_t DumpReader::bytes_read() const noexcept { return impl_->bytes_read(); }

std::unique_ptr<DumpReader> open_dump(const std::filesystem::path& path) {
  if (path == "-") return std::make_unique<DumpReader>(stdin, false, "<stdin>");
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw DumpError(path.string(), 0, "is a directory");
  }
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (f == nullptr) throw DumpError(path.string(), 0, std::string("cannot open: ") + std::strerror(errno));
  return std::make_unique<DumpReader>(f, true, path.string());
}

std::optional<PageRecord> NamespaceFilter::next() {
  while (auto rec = upstream_.next()) {
    if (accepts(rec->ns)) return rec;
    ++dropped_;
  }
  return std::nullopt;
}

}  // namespace wikidb
