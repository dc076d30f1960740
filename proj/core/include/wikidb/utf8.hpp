#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace wikidb::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes the code point starting at `pos` and advances `pos` past it.
/// Invalid or truncated sequences decode as U+FFFD and consume one byte.
char32_t decode(std::string_view s, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Byte length of the encoding of `cp` (1-4).
std::size_t encoded_length(char32_t cp);

bool is_valid(std::string_view s);

/// Returns `s` with every invalid sequence replaced by U+FFFD.
std::string sanitize(std::string_view s);

/// Number of code points; continuation bytes are not counted.
std::size_t length(std::string_view s);

/// Slice by code-point offsets. Out-of-range requests are clamped.
std::string_view substr(std::string_view s, std::size_t cp_offset, std::size_t cp_count);

bool is_space(char32_t cp);
bool is_alnum(char32_t cp);
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

std::string to_lower(std::string_view s);

}  // namespace wikidb::utf8
