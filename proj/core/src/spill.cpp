#include "spill.hpp"

#include <algorithm>
#include <cstring>

#include "wikidb/error.hpp"

namespace wikidb::detail {

namespace {

template <typename T>
void put_raw(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof value);
}

void put_string(std::ostream& out, const std::string& s) {
  put_raw(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

template <typename T>
bool get_raw(std::istream& in, T& value) {
  return static_cast<bool>(in.read(reinterpret_cast<char*>(&value), sizeof value));
}

bool get_string(std::istream& in, std::string& s) {
  std::uint32_t n = 0;
  if (!get_raw(in, n)) return false;
  s.resize(n);
  return static_cast<bool>(in.read(s.data(), n));
}

void write_ref(std::ostream& out, const PendingRef& r) {
  put_raw(out, r.source);
  put_raw(out, static_cast<std::uint8_t>(r.kind));
  put_raw(out, r.seq);
  put_raw(out, r.pos);
  put_string(out, r.target);
  put_string(out, r.anchor);
  put_string(out, r.stemmed_anchor);
}

bool read_ref(std::istream& in, PendingRef& r) {
  std::uint8_t kind = 0;
  if (!get_raw(in, r.source)) return false;
  if (!get_raw(in, kind) || !get_raw(in, r.seq) || !get_raw(in, r.pos) || !get_string(in, r.target) ||
      !get_string(in, r.anchor) || !get_string(in, r.stemmed_anchor)) {
    throw BuildError("truncated spill run");
  }
  r.kind = static_cast<RefKind>(kind);
  return true;
}

}  // namespace

SpillBuffer::SpillBuffer(std::filesystem::path dir, std::size_t budget_bytes)
    : dir_(std::move(dir)), budget_(budget_bytes) {}

SpillBuffer::~SpillBuffer() {
  std::error_code ec;
  std::filesystem::remove_all(dir_, ec);
}

void SpillBuffer::add(PendingRef ref) {
  bytes_ += ref.footprint();
  pending_.push_back(std::move(ref));
  if (bytes_ > budget_) spill();
}

void SpillBuffer::spill() {
  if (pending_.empty()) return;
  std::sort(pending_.begin(), pending_.end());
  std::filesystem::create_directories(dir_);
  auto path = dir_ / ("run-" + std::to_string(runs_.size()) + ".bin");
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw BuildError("cannot create spill run " + path.string());
    for (const auto& r : pending_) write_ref(out, r);
    out.flush();
    if (!out) throw BuildError("write failed for spill run " + path.string());
  }
  runs_.push_back(std::move(path));
  pending_.clear();
  bytes_ = 0;
}

std::unique_ptr<RefMerger> SpillBuffer::merge() {
  std::sort(pending_.begin(), pending_.end());
  auto merger = std::make_unique<RefMerger>(runs_, std::move(pending_));
  pending_.clear();
  bytes_ = 0;
  return merger;
}

struct RefMerger::Source {
  std::ifstream file;
  std::deque<PendingRef> memory;
  bool from_file = false;
  std::optional<PendingRef> head;

  void advance() {
    if (from_file) {
      PendingRef r;
      if (read_ref(file, r)) {
        head = std::move(r);
      } else {
        head.reset();
      }
    } else if (!memory.empty()) {
      head = std::move(memory.front());
      memory.pop_front();
    } else {
      head.reset();
    }
  }
};

RefMerger::RefMerger(std::vector<std::filesystem::path> runs, std::deque<PendingRef> memory) {
  for (const auto& path : runs) {
    auto src = std::make_unique<Source>();
    src->file.open(path, std::ios::binary);
    if (!src->file) throw BuildError("cannot reopen spill run " + path.string());
    src->from_file = true;
    src->advance();
    sources_.push_back(std::move(src));
  }
  auto mem = std::make_unique<Source>();
  mem->memory = std::move(memory);
  mem->advance();
  sources_.push_back(std::move(mem));

  for (std::size_t i = 0; i < sources_.size(); ++i) {
    if (sources_[i]->head) heap_.push_back(i);
  }
  for (std::size_t i = heap_.size(); i-- > 0;) sift_down(i);
}

RefMerger::~RefMerger() = default;

bool RefMerger::less(std::size_t a, std::size_t b) const {
  const auto& ha = *sources_[heap_[a]]->head;
  const auto& hb = *sources_[heap_[b]]->head;
  if (ha < hb) return true;
  if (hb < ha) return false;
  return heap_[a] < heap_[b];
}

void RefMerger::sift_down(std::size_t i) {
  while (true) {
    std::size_t smallest = i;
    const std::size_t l = 2 * i + 1;
    const std::size_t r = l + 1;
    if (l < heap_.size() && less(l, smallest)) smallest = l;
    if (r < heap_.size() && less(r, smallest)) smallest = r;
    if (smallest == i) return;
    std::swap(heap_[i], heap_[smallest]);
    i = smallest;
  }
}

std::optional<PendingRef> RefMerger::next() {
  if (heap_.empty()) return std::nullopt;
  Source& top = *sources_[heap_.front()];
  PendingRef out = std::move(*top.head);
  top.advance();
  if (!top.head) {
    heap_.front() = heap_.back();
    heap_.pop_back();
  }
  if (!heap_.empty()) sift_down(0);
  return out;
}

}  // namespace wikidb::detail
