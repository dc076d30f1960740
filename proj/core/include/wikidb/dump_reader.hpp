#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "wikidb/types.hpp"

namespace wikidb {

/// One page as it appears in a `pages-articles` export.
struct PageRecord {
  PageId page_id = 0;
  int ns = 0;
  std::string title;
  std::string wikitext;
  bool is_redirect = false;
  /// Target from the dump's `<redirect title="..."/>` element, when present.
  std::optional<std::string> redirect_title;
};

/// Pull interface shared by the dump reader and the stream adaptors.
class PageSource {
 public:
  virtual ~PageSource() = default;
  /// Next record in document order, or nullopt at end of stream.
  virtual std::optional<PageRecord> next() = 0;
};

/// Streaming reader over a MediaWiki XML export. Memory stays proportional
/// to the largest single page plus one read chunk.
class DumpReader final : public PageSource {
 public:
  /// Takes ownership of `file` when `owns_file` is true. `name` is used in
  /// error messages.
  DumpReader(std::FILE* file, bool owns_file, std::string name);
  ~DumpReader() override;

  DumpReader(const DumpReader&) = delete;
  DumpReader& operator=(const DumpReader&) = delete;

  std::optional<PageRecord> next() override;

  /// Bytes handed to the XML parser so far.
  std::uint64_t bytes_read() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

/// Opens `path` for streaming; "-" reads standard input. Throws DumpError
/// for unreadable files and unsupported compression.
std::unique_ptr<DumpReader> open_dump(const std::filesystem::path& path);

/// Passes namespace 0 (articles, redirects) and 14 (categories); everything
/// else is dropped and counted.
class NamespaceFilter final : public PageSource {
 public:
  explicit NamespaceFilter(PageSource& upstream) : upstream_(upstream) {}

  std::optional<PageRecord> next() override;

  std::uint64_t dropped() const noexcept { return dropped_; }

  static bool accepts(int ns) noexcept { return ns == ns::kMain || ns == ns::kCategory; }

 private:
  PageSource& upstream_;
  std::uint64_t dropped_ = 0;
};

}  // namespace wikidb
