#pragma once

#include <cstdint>

namespace wikidb {

using PageId = std::int64_t;

namespace ns {
inline constexpr int kMain = 0;
inline constexpr int kCategory = 14;
}  // namespace ns

}  // namespace wikidb
