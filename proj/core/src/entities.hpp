#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace wikidb::detail {

struct EntityMatch {
  std::size_t length;  ///< bytes consumed, including '&' and ';'
  char32_t code_point;
};

/// Recognizes `&name;`, `&#123;` and `&#x1F;` at the start of `s`.
std::optional<EntityMatch> match_entity(std::string_view s);

}  // namespace wikidb::detail
