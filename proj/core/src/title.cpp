#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "entities.hpp"
#include "wikidb/utf8.hpp"
#include "wikidb/wikitext.hpp"

namespace wikidb {

namespace detail {

namespace {

struct NamedEntity {
  std::string_view name;
  char32_t cp;
};

// U+00A0..U+00FF in code-point order.
constexpr std::array<std::string_view, 96> kLatin1 = {
    "nbsp",   "iexcl",  "cent",   "pound",  "curren", "yen",    "brvbar", "sect",
    "uml",    "copy",   "ordf",   "laquo",  "not",    "shy",    "reg",    "macr",
    "deg",    "plusmn", "sup2",   "sup3",   "acute",  "micro",  "para",   "middot",
    "cedil",  "sup1",   "ordm",   "raquo",  "frac14", "frac12", "frac34", "iquest",
    "Agrave", "Aacute", "Acirc",  "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil",
    "Egrave", "Eacute", "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",
    "ETH",    "Ntilde", "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",
    "Oslash", "Ugrave", "Uacute", "Ucirc",  "Uuml",   "Yacute", "THORN",  "szlig",
    "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",  "aelig",  "ccedil",
    "egrave", "eacute", "ecirc",  "euml",   "igrave", "iacute", "icirc",  "iuml",
    "eth",    "ntilde", "ograve", "oacute", "ocirc",  "otilde", "ouml",   "divide",
    "oslash", "ugrave", "uacute", "ucirc",  "uuml",   "yacute", "thorn",  "yuml"};

// Greek capitals start at U+0391 (U+03A2 unassigned), lowercase at U+03B1.
constexpr std::array<std::string_view, 25> kGreek = {
    "Alpha", "Beta", "Gamma", "Delta", "Epsilon", "Zeta",    "Eta", "Theta", "Iota",
    "Kappa", "Lambda", "Mu",  "Nu",    "Xi",      "Omicron", "Pi",  "Rho",   "",
    "Sigma", "Tau",  "Upsilon", "Phi", "Chi",     "Psi",     "Omega"};

constexpr std::array<NamedEntity, 38> kOther = {{
    {"amp", U'&'},        {"lt", U'<'},         {"gt", U'>'},         {"quot", U'"'},
    {"apos", U'\''},      {"ndash", 0x2013},    {"mdash", 0x2014},    {"hellip", 0x2026},
    {"lsquo", 0x2018},    {"rsquo", 0x2019},    {"sbquo", 0x201A},    {"ldquo", 0x201C},
    {"rdquo", 0x201D},    {"bdquo", 0x201E},    {"dagger", 0x2020},   {"Dagger", 0x2021},
    {"bull", 0x2022},     {"prime", 0x2032},    {"Prime", 0x2033},    {"permil", 0x2030},
    {"euro", 0x20AC},     {"trade", 0x2122},    {"larr", 0x2190},     {"uarr", 0x2191},
    {"rarr", 0x2192},     {"darr", 0x2193},     {"harr", 0x2194},     {"minus", 0x2212},
    {"infin", 0x221E},    {"ne", 0x2260},       {"le", 0x2264},       {"ge", 0x2265},
    {"thinsp", 0x2009},   {"ensp", 0x2002},     {"emsp", 0x2003},     {"zwnj", 0x200C},
    {"zwj", 0x200D},      {"sigmaf", 0x3C2},
}};

std::optional<char32_t> lookup_named(std::string_view name) {
  for (std::size_t i = 0; i < kLatin1.size(); ++i) {
    if (kLatin1[i] == name) return static_cast<char32_t>(0xA0 + i);
  }
  for (std::size_t i = 0; i < kGreek.size(); ++i) {
    if (kGreek[i].empty()) continue;
    if (kGreek[i] == name) return static_cast<char32_t>(0x391 + i);
    std::string lower(kGreek[i]);
    lower[0] = static_cast<char>(lower[0] + 32);
    if (lower == name) return static_cast<char32_t>(0x3B1 + i);
  }
  for (const auto& e : kOther) {
    if (e.name == name) return e.cp;
  }
  return std::nullopt;
}

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

}  // namespace

std::optional<EntityMatch> match_entity(std::string_view s) {
  if (s.size() < 3 || s[0] != '&') return std::nullopt;
  if (s[1] == '#') {
    const bool hex = s.size() > 2 && (s[2] == 'x' || s[2] == 'X');
    const std::size_t digits_at = hex ? 3 : 2;
    const std::size_t max_digits = hex ? 6 : 7;
    std::size_t i = digits_at;
    while (i < s.size() && i - digits_at < max_digits &&
           (hex ? std::isxdigit(static_cast<unsigned char>(s[i])) != 0
                : (s[i] >= '0' && s[i] <= '9'))) {
      ++i;
    }
    if (i == digits_at || i >= s.size() || s[i] != ';') return std::nullopt;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + digits_at, s.data() + i, value, hex ? 16 : 10);
    if (ec != std::errc{} || value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
      return std::nullopt;
    }
    return EntityMatch{i + 1, static_cast<char32_t>(value)};
  }
  std::size_t i = 1;
  while (i < s.size() && i <= 32 && is_ascii_alnum(s[i])) ++i;
  if (i == 1 || i >= s.size() || s[i] != ';') return std::nullopt;
  if (auto cp = lookup_named(s.substr(1, i - 1))) return EntityMatch{i + 1, *cp};
  return std::nullopt;
}

}  // namespace detail

namespace {

struct Namespace {
  std::string_view canonical;
  std::string_view alias;  // matched case-insensitively as well
};

constexpr std::array<Namespace, 21> kNamespaces = {{
    {"Talk", ""},           {"User", ""},           {"User talk", ""},
    {"Wikipedia", "Project"}, {"Wikipedia talk", "Project talk"},
    {"File", "Image"},      {"File talk", "Image talk"},
    {"MediaWiki", ""},      {"MediaWiki talk", ""}, {"Template", ""},
    {"Template talk", ""},  {"Help", ""},           {"Help talk", ""},
    {"Category", ""},       {"Category talk", ""},  {"Portal", ""},
    {"Portal talk", ""},    {"Draft", ""},          {"Module", ""},
    {"Special", ""},        {"Media", ""},
}};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

const Namespace* find_namespace(std::string_view prefix) {
  for (const auto& n : kNamespaces) {
    if (iequals(prefix, n.canonical) || (!n.alias.empty() && iequals(prefix, n.alias))) return &n;
  }
  return nullptr;
}

void upper_first(std::string& s, std::size_t at) {
  if (at >= s.size()) return;
  std::size_t pos = at;
  const char32_t cp = utf8::decode(s, pos);
  const char32_t up = utf8::to_upper(cp);
  if (up == cp) return;
  std::string enc;
  utf8::append(enc, up);
  s.replace(at, pos - at, enc);
}

std::string_view trim_spaces(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<std::string> normalize_title(std::string_view raw) {
  // Entities first so an encoded '#' or '_' is treated like the literal.
  std::string decoded;
  decoded.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    if (raw[i] == '&') {
      if (auto m = detail::match_entity(raw.substr(i))) {
        utf8::append(decoded, m->code_point);
        i += m->length;
        continue;
      }
    }
    decoded.push_back(raw[i++]);
  }

  std::string_view body = decoded;
  if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);

  std::string folded;
  folded.reserve(body.size());
  bool pending_space = false;
  for (std::size_t pos = 0; pos < body.size();) {
    const char32_t cp = utf8::decode(body, pos);
    if (cp == U'_' || utf8::is_space(cp)) {
      pending_space = !folded.empty();
      continue;
    }
    if (cp < 0x20 || cp == 0x7F || cp == U'[' || cp == U']' || cp == U'{' || cp == U'}' ||
        cp == U'|' || cp == U'<' || cp == U'>' || cp == utf8::kReplacement) {
      return std::nullopt;
    }
    if (pending_space) folded.push_back(' ');
    pending_space = false;
    utf8::append(folded, cp);
  }
  if (folded.empty()) return std::nullopt;

  if (const auto colon = folded.find(':'); colon != std::string::npos) {
    if (const Namespace* n = find_namespace(trim_spaces(std::string_view(folded).substr(0, colon)))) {
      const std::string rest(trim_spaces(std::string_view(folded).substr(colon + 1)));
      if (rest.empty()) return std::nullopt;
      std::string out(n->canonical);
      out.push_back(':');
      const std::size_t at = out.size();
      out += rest;
      upper_first(out, at);
      return out;
    }
  }
  upper_first(folded, 0);
  return folded;
}

std::optional<std::string> canonical_page_title(int ns, std::string_view title) {
  auto norm = normalize_title(title);
  if (!norm) return norm;
  if (ns == 14 && !norm->starts_with("Category:")) return normalize_title("Category:" + *norm);
  return norm;
}

std::string_view strip_namespace(std::string_view title) {
  const auto colon = title.find(':');
  if (colon == std::string_view::npos) return title;
  if (find_namespace(title.substr(0, colon)) == nullptr) return title;
  return trim_spaces(title.substr(colon + 1));
}

}  // namespace wikidb
