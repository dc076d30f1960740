#include <fstream>
#include <sstream>

#include "wikidb/error.hpp"
#include "wikidb/stemmer.hpp"
#include "wikidb/utf8.hpp"

namespace wikidb {

namespace data {
extern const std::string_view kStopWordsEn;
}  // namespace data

const StopWordList& StopWordList::builtin() {
  static const StopWordList list = parse(data::kStopWordsEn);
  return list;
}

StopWordList StopWordList::parse(std::string_view text) {
  StopWordList list;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    bool ok = utf8::is_valid(line) && utf8::to_lower(line) == line;
    std::size_t pos = 0;
    while (ok && pos < line.size()) ok = !utf8::is_space(utf8::decode(line, pos));
    if (!ok) {
      throw Error("stop-word list line " + std::to_string(line_no) +
                  ": entries must be single lowercase tokens");
    }
    list.words_.emplace(line);
  }
  if (list.words_.empty()) throw Error("stop-word list is empty");
  return list;
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open stop-word list " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

bool StopWordList::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

std::string stem_phrase(std::string_view text, const StopWordList& stop_words) {
  std::string out;
  std::string token;
  bool ascii_alpha = true;

  auto flush = [&] {
    if (token.empty()) return;
    if (!stop_words.contains(token)) {
      if (!out.empty()) out.push_back(' ');
      out += ascii_alpha ? lovins_stem(token) : token;
    }
    token.clear();
    ascii_alpha = true;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::to_lower(utf8::decode(text, pos));
    if (!utf8::is_alnum(cp)) {
      flush();
      continue;
    }
    if (cp < U'a' || cp > U'z') ascii_alpha = false;
    utf8::append(token, cp);
  }
  flush();
  return out;
}

}  // namespace wikidb
