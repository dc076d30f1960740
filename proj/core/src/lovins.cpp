#include <algorithm>
#include <array>
#include <string>

#include "wikidb/error.hpp"
#include "wikidb/stemmer.hpp"

namespace wikidb {

namespace data {
extern const std::string_view kLovinsEndings;
extern const std::string_view kLovinsRecoding;
}  // namespace data

namespace {

constexpr std::size_t kMinStem = 2;

constexpr std::array<std::string_view, kLovinsConditionCount> kConditionNames = {
    "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "L", "M", "N", "O",
    "P", "Q", "R", "S", "T", "U", "V", "W", "X", "Y", "Z", "AA", "BB", "CC"};

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    fn(line, line_no);
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

bool lowercase_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool ending_word(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return (c >= 'a' && c <= 'z') || c == '\''; });
}

bool ends_with_any(std::string_view stem, std::initializer_list<std::string_view> tails) {
  return std::any_of(tails.begin(), tails.end(), [&](std::string_view t) { return stem.ends_with(t); });
}

}  // namespace

std::string_view condition_name(LovinsCondition c) {
  return kConditionNames[static_cast<std::size_t>(c)];
}

bool lovins_condition_holds(LovinsCondition c, std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < kMinStem) return false;
  const char last = stem.back();
  switch (c) {
    case LovinsCondition::A:
      return true;
    case LovinsCondition::B:
      return n >= 3;
    case LovinsCondition::C:
      return n >= 4;
    case LovinsCondition::D:
      return n >= 5;
    case LovinsCondition::E:
      return last != 'e';
    case LovinsCondition::F:
      return n >= 3 && last != 'e';
    case LovinsCondition::G:
      return n >= 3 && last == 'f';
    case LovinsCondition::H:
      return last == 't' || stem.ends_with("ll");
    case LovinsCondition::I:
      return last != 'o' && last != 'e';
    case LovinsCondition::J:
      return last != 'a' && last != 'e';
    case LovinsCondition::K:
      return n >= 3 && (last == 'l' || last == 'i' || (last == 'e' && stem[n - 3] == 'u'));
    case LovinsCondition::L:
      return last != 'u' && last != 'x' && (last != 's' || stem.ends_with("os"));
    case LovinsCondition::M:
      return last != 'a' && last != 'c' && last != 'e' && last != 'm';
    case LovinsCondition::N:
      return n >= 3 && (stem[n - 3] != 's' || n >= 4);
    case LovinsCondition::O:
      return last == 'l' || last == 'i';
    case LovinsCondition::P:
      return last != 'c';
    case LovinsCondition::Q:
      return n >= 3 && last != 'l' && last != 'n';
    case LovinsCondition::R:
      return last == 'n' || last == 'r';
    case LovinsCondition::S:
      return stem.ends_with("dr") || (last == 't' && !stem.ends_with("tt"));
    case LovinsCondition::T:
      return last == 's' || (last == 't' && !stem.ends_with("ot"));
    case LovinsCondition::U:
      return last == 'l' || last == 'm' || last == 'n' || last == 'r';
    case LovinsCondition::V:
      return last == 'c';
    case LovinsCondition::W:
      return last != 's' && last != 'u';
    case LovinsCondition::X:
      return last == 'l' || last == 'i' || (n >= 3 && last == 'e' && stem[n - 3] == 'u');
    case LovinsCondition::Y:
      return stem.ends_with("in");
    case LovinsCondition::Z:
      return last != 'f';
    case LovinsCondition::AA:
      return ends_with_any(stem, {"d", "f", "ph", "th", "l", "er", "or", "es", "t"});
    case LovinsCondition::BB:
      return n >= 3 && !stem.ends_with("met") && !stem.ends_with("ryst");
    case LovinsCondition::CC:
      return last == 'l';
  }
  return false;
}

const LovinsTables& LovinsTables::builtin() {
  static const LovinsTables tables = parse(data::kLovinsEndings, data::kLovinsRecoding);
  return tables;
}

LovinsTables LovinsTables::parse(std::string_view endings, std::string_view recoding) {
  LovinsTables t;
  t.endings_source_ = endings;
  t.recoding_source_ = recoding;

  for_each_line(endings, [&](std::string_view line, std::size_t no) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || !ending_word(fields[0])) {
      throw Error("lovins endings line " + std::to_string(no) + ": expected <ending>\\t<condition>");
    }
    const auto it = std::find(kConditionNames.begin(), kConditionNames.end(), fields[1]);
    if (it == kConditionNames.end()) {
      throw Error("lovins endings line " + std::to_string(no) + ": unknown condition '" +
                  std::string(fields[1]) + "'");
    }
    t.endings_.push_back(
        {std::string(fields[0]), static_cast<LovinsCondition>(it - kConditionNames.begin())});
  });
  std::stable_sort(t.endings_.begin(), t.endings_.end(),
                   [](const LovinsEnding& a, const LovinsEnding& b) { return a.suffix.size() > b.suffix.size(); });
  {
    std::vector<std::string_view> seen;
    for (const auto& e : t.endings_) seen.push_back(e.suffix);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw Error("lovins endings: duplicate ending '" +
                  std::string(*std::adjacent_find(seen.begin(), seen.end())) + "'");
    }
  }
  t.longest_ = t.endings_.empty() ? 0 : t.endings_.front().suffix.size();

  for_each_line(recoding, [&](std::string_view line, std::size_t no) {
    const auto fields = split_tabs(line);
    const bool shape_ok = (fields.size() == 2 || fields.size() == 3) && lowercase_word(fields[0]) &&
                          lowercase_word(fields[1]) &&
                          (fields.size() == 2 || lowercase_word(fields[2]));
    if (!shape_ok) {
      throw Error("lovins recoding line " + std::to_string(no) + ": expected <from>\\t<to>[\\t<except>]");
    }
    if (t.recodings_.empty() && fields[0] != "undouble") {
      throw Error("lovins recoding: first rule must be 'undouble'");
    }
    if (t.recodings_.empty()) t.undouble_letters_ = std::string(fields[1]);
    t.recodings_.push_back({std::string(fields[0]), std::string(fields[1]),
                            fields.size() == 3 ? std::string(fields[2]) : std::string()});
  });
  if (t.recodings_.empty()) throw Error("lovins recoding: no rules");
  return t;
}

const LovinsCondition* LovinsTables::find(std::string_view suffix) const noexcept {
  for (const auto& e : endings_) {
    if (e.suffix == suffix) return &e.condition;
  }
  return nullptr;
}

std::string LovinsStemmer::stem(std::string_view token) const {
  const std::size_t max_len = std::min(tables_->longest_, token.size() > kMinStem ? token.size() - kMinStem : 0);
  const auto& endings = tables_->endings_;
  // Endings are sorted longest first, so the first hit is the longest
  // removable one.
  for (const auto& e : endings) {
    if (e.suffix.size() > max_len || !token.ends_with(e.suffix)) continue;
    const std::string_view base = token.substr(0, token.size() - e.suffix.size());
    if (!lovins_condition_holds(e.condition, base)) continue;
    std::string out(base);
    recode(out);
    return out;
  }
  return std::string(token);
}

void LovinsStemmer::recode(std::string& stem) const {
  const std::size_t n = stem.size();
  if (n >= 2 && n - 1 >= kMinStem && stem[n - 1] == stem[n - 2] &&
      tables_->undouble_letters_.find(stem[n - 1]) != std::string::npos) {
    stem.pop_back();
  }

  const LovinsRecoding* best = nullptr;
  for (std::size_t i = 1; i < tables_->recodings_.size(); ++i) {
    const auto& rule = tables_->recodings_[i];
    if (!stem.ends_with(rule.from)) continue;
    if (best == nullptr || rule.from.size() > best->from.size()) best = &rule;
  }
  if (best == nullptr) return;
  const std::size_t at = stem.size() - best->from.size();
  if (at > 0 && best->except_after.find(stem[at - 1]) != std::string::npos) return;
  if (at + best->to.size() < kMinStem) return;
  stem.replace(at, best->from.size(), best->to);
}

std::string lovins_stem(std::string_view token) {
  static const LovinsStemmer stemmer;
  return stemmer.stem(token);
}

}  // namespace wikidb
