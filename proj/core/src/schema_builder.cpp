#include "wikidb/schema_builder.hpp"

#include <algorithm>
#include <bitset>
#include <cstdio>
#include <fstream>
#include <tuple>
#include <unordered_set>

#include <unistd.h>

#include "spill.hpp"
#include "wikidb/error.hpp"
#include "wikidb/wikitext.hpp"

namespace wikidb {

// ---------------------------------------------------------------------------
// WikiStore

namespace {

template <typename T, typename Key>
std::span<const T> equal_span(const std::vector<T>& rows, PageId page, Key key) {
  auto lo = std::lower_bound(rows.begin(), rows.end(), page,
                             [&](const T& row, PageId id) { return key(row) < id; });
  auto hi = std::upper_bound(lo, rows.end(), page,
                             [&](PageId id, const T& row) { return id < key(row); });
  return {lo, hi};
}

}  // namespace

WikiStore::WikiStore(std::filesystem::path root, std::vector<WikiPage> pages,
                     std::vector<RedirectEntry> redirects, std::vector<CategoryAssignment> categories,
                     std::vector<LinkEntry> links, std::vector<ParagraphEntry> paragraphs,
                     BuildStats stats)
    : root_(std::move(root)),
      pages_(std::move(pages)),
      redirects_(std::move(redirects)),
      categories_(std::move(categories)),
      links_(std::move(links)),
      paragraphs_(std::move(paragraphs)),
      stats_(stats) {
  std::stable_sort(pages_.begin(), pages_.end(),
                   [](const auto& a, const auto& b) { return a.page_id < b.page_id; });
  std::stable_sort(redirects_.begin(), redirects_.end(),
                   [](const auto& a, const auto& b) { return a.page_id < b.page_id; });
  std::stable_sort(categories_.begin(), categories_.end(),
                   [](const auto& a, const auto& b) { return a.page_id < b.page_id; });
  std::stable_sort(links_.begin(), links_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.page_id, a.pos_in_page) < std::tie(b.page_id, b.pos_in_page);
  });
  std::stable_sort(paragraphs_.begin(), paragraphs_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.page_id, a.paragraph_id) < std::tie(b.page_id, b.paragraph_id);
  });

  std::vector<std::pair<PageId, PageId>> members;
  members.reserve(categories_.size());
  for (const auto& c : categories_) members.emplace_back(c.category_page_id, c.page_id);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == 0 || members[i].first != members[i - 1].first) {
      member_ranges_.emplace_back(members[i].first, i);
    }
    member_ids_.push_back(members[i].second);
  }
}

const WikiPage* WikiStore::find_page(PageId id) const {
  const auto rows = equal_span(pages_, id, [](const WikiPage& p) { return p.page_id; });
  return rows.empty() ? nullptr : &rows.front();
}

const RedirectEntry* WikiStore::find_redirect(PageId id) const {
  const auto rows = equal_span(redirects_, id, [](const RedirectEntry& r) { return r.page_id; });
  return rows.empty() ? nullptr : &rows.front();
}

const ParagraphEntry* WikiStore::find_paragraph(PageId page, std::int64_t paragraph_id) const {
  for (const auto& p : paragraphs_of(page)) {
    if (p.paragraph_id == paragraph_id) return &p;
  }
  return nullptr;
}

std::span<const LinkEntry> WikiStore::links_of(PageId page) const {
  return equal_span(links_, page, [](const LinkEntry& l) { return l.page_id; });
}

std::span<const ParagraphEntry> WikiStore::paragraphs_of(PageId page) const {
  return equal_span(paragraphs_, page, [](const ParagraphEntry& p) { return p.page_id; });
}

std::span<const PageId> WikiStore::members_of(PageId category) const {
  auto it = std::lower_bound(member_ranges_.begin(), member_ranges_.end(), category,
                             [](const auto& range, PageId id) { return range.first < id; });
  if (it == member_ranges_.end() || it->first != category) return {};
  const std::size_t begin = it->second;
  const std::size_t end = std::next(it) == member_ranges_.end() ? member_ids_.size() : std::next(it)->second;
  return std::span<const PageId>(member_ids_).subspan(begin, end - begin);
}

// ---------------------------------------------------------------------------
// Title index and helpers

bool TitleIndex::insert(std::string title, PageId id, PageType type) {
  return map_.try_emplace(std::move(title), Entry{id, type}).second;
}

const TitleIndex::Entry* TitleIndex::find(std::string_view normalized_title) const {
  auto it = map_.find(normalized_title);
  return it == map_.end() ? nullptr : &it->second;
}

std::optional<PageId> resolve_redirect(const TitleIndex& index, std::string_view target_title) {
  const auto normalized = normalize_title(target_title);
  if (!normalized) return std::nullopt;
  const auto* entry = index.find(*normalized);
  if (entry == nullptr) return std::nullopt;
  return entry->page_id;
}

std::string assign_file_path(PageId page_id) {
  char shard[8];
  std::snprintf(shard, sizeof shard, "%03d", static_cast<int>(page_id % 1000));
  return std::string("texts/") + shard + "/" + std::to_string(page_id) + ".txt";
}

// ---------------------------------------------------------------------------
// Build

namespace {

class TextWriter {
 public:
  explicit TextWriter(std::filesystem::path root) : root_(std::move(root)) {}

  void write(const std::string& relative, PageId id, std::string_view text) {
    const auto shard = static_cast<std::size_t>(id % 1000);
    const auto path = root_ / relative;
    if (!made_[shard]) {
      std::filesystem::create_directories(path.parent_path());
      made_[shard] = true;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw BuildError("cannot write " + path.string());
  }

 private:
  std::filesystem::path root_;
  std::bitset<1000> made_;
};

}  // namespace

BuildStats build_tables(PageSource& source, const std::filesystem::path& out_dir, RowSink& sink,
                        const BuildOptions& options) {
  const StopWordList& stop_words =
      options.stop_words != nullptr ? *options.stop_words : StopWordList::builtin();

  std::filesystem::create_directories(out_dir);
  TextWriter texts(out_dir);
  detail::SpillBuffer refs(out_dir / (".spill-" + std::to_string(::getpid())),
                           options.memory_budget_bytes);

  NamespaceFilter pages_in(source);
  TitleIndex index;
  std::unordered_set<PageId> seen_ids;
  std::vector<WikiPage> pages;
  std::vector<ParagraphEntry> paragraphs;
  BuildStats stats;

  // Pass 1: render, write texts, buffer title references.
  while (auto rec = pages_in.next()) {
    ++stats.pages_read;
    if (!seen_ids.insert(rec->page_id).second) {
      throw BuildError("duplicate page id " + std::to_string(rec->page_id) + " (title \"" +
                       rec->title + "\")");
    }
    auto title = canonical_page_title(rec->ns, rec->title);
    if (!title) {
      ++stats.invalid_titles;
      continue;
    }

    if (index.find(*title) != nullptr) {
      ++stats.duplicate_titles;
      continue;
    }

    // Links stream into the reference buffer while the page renders, so a
    // link-dense page never holds its whole link list. A page flagged as a
    // redirect keeps them aside until it is known to have a target.
    const PageId id = rec->page_id;
    std::uint32_t link_seq = 0;
    auto add_link = [&](RawLink&& link) {
      std::string stemmed = stem_phrase(link.anchor, stop_words);
      refs.add({id, detail::RefKind::Link, link_seq++, static_cast<std::int64_t>(link.offset),
                std::move(link.target_title), std::move(link.anchor), std::move(stemmed)});
    };
    std::vector<RawLink> held;
    const LinkSink sink = [&](RawLink&& link) {
      if (rec->is_redirect) {
        held.push_back(std::move(link));
      } else {
        add_link(std::move(link));
      }
    };
    RenderedPage rendered = parse_page(std::move(rec->wikitext), sink);
    stats.render_warnings += rendered.warnings;

    std::optional<std::string> redirect_target = std::move(rendered.redirect_target);
    if (!redirect_target && rec->redirect_title) redirect_target = normalize_title(*rec->redirect_title);

    PageType type = PageType::Entity;
    if (rec->ns == ns::kCategory) {
      type = PageType::Category;
    } else if (rec->is_redirect && redirect_target) {
      type = PageType::Redirect;
    } else if (rec->is_redirect) {
      ++stats.render_warnings;  // directive without a usable target
    }
    index.insert(*title, id, type);

    WikiPage page;
    page.page_id = id;
    page.page_name = *title;
    page.file_path = assign_file_path(id);
    page.page_type = type;
    page.stemmed_name = stem_phrase(strip_namespace(*title), stop_words);

    if (type == PageType::Redirect) {
      texts.write(page.file_path, id, {});
      refs.add({id, detail::RefKind::Redirect, 0, 0, std::move(*redirect_target), {}, {}});
    } else {
      texts.write(page.file_path, id, rendered.text);
      std::string().swap(rendered.text);
      for (auto& link : held) add_link(std::move(link));
      std::int64_t paragraph_id = 0;
      for (const auto& p : rendered.paragraphs) {
        paragraphs.push_back({id, paragraph_id++, static_cast<std::int64_t>(p.start),
                              static_cast<std::int64_t>(p.end), p.level});
      }
    }
    std::uint32_t seq = 0;
    for (auto& category : rendered.categories) {
      refs.add({id, detail::RefKind::Category, seq++, 0, std::move(category), {}, {}});
    }
    pages.push_back(std::move(page));
  }
  stats.skipped_namespaces = pages_in.dropped();
  stats.spill_runs = refs.runs();

  // Page and paragraph rows are complete after pass 1.
  std::sort(pages.begin(), pages.end(),
            [](const auto& a, const auto& b) { return a.page_id < b.page_id; });
  for (const auto& p : pages) sink.page(p);
  std::vector<WikiPage>().swap(pages);
  std::sort(paragraphs.begin(), paragraphs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.page_id, a.paragraph_id) < std::tie(b.page_id, b.paragraph_id);
  });
  for (const auto& p : paragraphs) sink.paragraph(p);
  std::vector<ParagraphEntry>().swap(paragraphs);

  // Pass 2: resolve titles in (source, kind, seq) order.
  auto merged = refs.merge();
  while (auto ref = merged->next()) {
    switch (ref->kind) {
      case detail::RefKind::Redirect: {
        auto target = resolve_redirect(index, ref->target);
        if (!target) ++stats.unresolved_redirects;
        sink.redirect({ref->source, std::move(ref->target), target});
        break;
      }
      case detail::RefKind::Category: {
        const auto* entry = index.find(ref->target);
        if (entry == nullptr || entry->page_type != PageType::Category) {
          ++stats.dropped_categories;
          break;
        }
        sink.category({ref->source, entry->page_id});
        break;
      }
      case detail::RefKind::Link: {
        const auto* entry = index.find(ref->target);
        if (entry == nullptr) {
          ++stats.dropped_red_links;
          break;
        }
        sink.link({ref->source, entry->page_id, ref->pos, std::move(ref->anchor),
                   std::move(ref->stemmed_anchor)});
        break;
      }
    }
  }
  merged.reset();

  write_stats(stats, out_dir / schema::kStatsFile);
  return stats;
}

namespace {

class CollectingSink final : public RowSink {
 public:
  void page(const WikiPage& row) override { pages.push_back(row); }
  void paragraph(const ParagraphEntry& row) override { paragraphs.push_back(row); }
  void redirect(const RedirectEntry& row) override { redirects.push_back(row); }
  void category(const CategoryAssignment& row) override { categories.push_back(row); }
  void link(const LinkEntry& row) override { links.push_back(row); }

  std::vector<WikiPage> pages;
  std::vector<ParagraphEntry> paragraphs;
  std::vector<RedirectEntry> redirects;
  std::vector<CategoryAssignment> categories;
  std::vector<LinkEntry> links;
};

}  // namespace

WikiStore build_store(PageSource& source, const std::filesystem::path& out_dir,
                      const BuildOptions& options) {
  CollectingSink rows;
  const BuildStats stats = build_tables(source, out_dir, rows, options);
  return WikiStore(out_dir, std::move(rows.pages), std::move(rows.redirects),
                   std::move(rows.categories), std::move(rows.links), std::move(rows.paragraphs),
                   stats);
}

}  // namespace wikidb
