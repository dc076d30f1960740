#pragma once

// Pass-1 reference buffer. References are kept in memory until the budget
// is exceeded, then sorted and written out as a run file. merge() streams
// everything back in (source, kind, seq) order.

#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wikidb/types.hpp"

namespace wikidb::detail {

enum class RefKind : std::uint8_t { Redirect = 0, Category = 1, Link = 2 };

struct PendingRef {
  PageId source = 0;
  RefKind kind = RefKind::Link;
  std::uint32_t seq = 0;
  std::int64_t pos = 0;
  std::string target;
  std::string anchor;
  std::string stemmed_anchor;

  bool operator<(const PendingRef& o) const {
    if (source != o.source) return source < o.source;
    if (kind != o.kind) return kind < o.kind;
    return seq < o.seq;
  }
  /// Approximate heap use, counting each out-of-line string at its
  /// allocator chunk size.
  std::size_t footprint() const {
    return sizeof(PendingRef) + heap_bytes(target) + heap_bytes(anchor) + heap_bytes(stemmed_anchor);
  }

 private:
  static std::size_t heap_bytes(const std::string& s) {
    if (s.capacity() <= std::string().capacity()) return 0;  // inline buffer
    return (s.capacity() + 1 + 8 + 15) & ~std::size_t{15};
  }
};

class RefMerger;

class SpillBuffer {
 public:
  SpillBuffer(std::filesystem::path dir, std::size_t budget_bytes);
  ~SpillBuffer();
  SpillBuffer(const SpillBuffer&) = delete;
  SpillBuffer& operator=(const SpillBuffer&) = delete;

  void add(PendingRef ref);
  std::size_t runs() const noexcept { return runs_.size(); }

  /// Consumes the buffer. The merger must not outlive this object.
  std::unique_ptr<RefMerger> merge();

 private:
  void spill();

  std::filesystem::path dir_;
  std::size_t budget_;
  std::size_t bytes_ = 0;
  std::deque<PendingRef> pending_;  // grows without reallocating
  std::vector<std::filesystem::path> runs_;
};

class RefMerger {
 public:
  RefMerger(std::vector<std::filesystem::path> runs, std::deque<PendingRef> memory);
  ~RefMerger();
  std::optional<PendingRef> next();

 private:
  struct Source;
  std::vector<std::unique_ptr<Source>> sources_;
  std::vector<std::size_t> heap_;  // indexes into sources_, min-heap by head
  void sift_down(std::size_t i);
  bool less(std::size_t a, std::size_t b) const;
};

}  // namespace wikidb::detail
