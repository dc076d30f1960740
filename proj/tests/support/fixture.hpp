#pragma once

// Synthetic MediaWiki dumps for build and query tests.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wikidb/types.hpp"

namespace wikidb::testing {

struct FixturePage {
  PageId id = 0;
  int ns = 0;
  std::string title;
  std::string text;
  std::optional<std::string> redirect_attr;  ///< <redirect title="..."/>
};

struct FixtureOptions {
  std::uint64_t seed = 1;
  std::size_t entities = 220;
  std::size_t categories = 16;
  std::size_t redirects = 60;
  std::size_t other_namespaces = 12;
};

/// Random pages with links, categories, redirects (including chains and
/// dangling targets) and headings. Always contains category page 691014
/// with members and an entity page 12 that has several sections.
std::vector<FixturePage> generate_fixture(const FixtureOptions& options = {});

std::string xml_escape(std::string_view s);
std::string to_dump_xml(const std::vector<FixturePage>& pages);
void write_dump(const std::filesystem::path& path, const std::vector<FixturePage>& pages);

}  // namespace wikidb::testing
