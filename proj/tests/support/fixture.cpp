#include "fixture.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "temp_dir.hpp"

namespace wikidb::testing {

namespace {

const std::vector<std::string> kWords = {
    "history", "national", "river", "running", "the", "of", "ancient", "generalization",
    "city", "music", "relational", "café", "naïve", "stations", "happiness", "kingdom",
    "and", "théâtre", "electric", "sitting", "mountains", "Zürich", "42", "1999"};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  const std::string& word() { return kWords[below(kWords.size())]; }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  std::string sentence(std::size_t words) {
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
      if (i) s += ' ';
      s += word();
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<FixturePage> generate_fixture(const FixtureOptions& o) {
  Gen g(o.seed);

  // Unique ids; 12 and 691014 are reserved for the verbatim queries.
  std::set<PageId> used = {12, 691014};
  auto fresh_id = [&] {
    while (true) {
      const auto id = static_cast<PageId>(1 + g.below(4000));
      if (used.insert(id).second) return id;
    }
  };

  std::vector<FixturePage> entities;
  for (std::size_t i = 0; i < o.entities; ++i) {
    FixturePage p;
    p.id = i == 0 ? 12 : fresh_id();
    p.title = "Entity " + std::to_string(i) + " " + g.word();
    entities.push_back(std::move(p));
  }
  std::vector<FixturePage> categories;
  for (std::size_t i = 0; i < o.categories; ++i) {
    FixturePage p;
    p.id = i == 0 ? 691014 : fresh_id();
    p.ns = 14;
    p.title = "Category:Topic " + std::to_string(i);
    categories.push_back(std::move(p));
  }
  std::vector<FixturePage> redirects;
  for (std::size_t i = 0; i < o.redirects; ++i) {
    FixturePage p;
    p.id = fresh_id();
    p.title = "Alias " + std::to_string(i);
    redirects.push_back(std::move(p));
  }

  // Redirect targets: mostly entities, some chains, some dangling.
  for (std::size_t i = 0; i < redirects.size(); ++i) {
    auto& r = redirects[i];
    std::string target;
    const auto roll = g.below(10);
    if (roll < 6) {
      target = g.pick(entities).title;
    } else if (roll < 8 && i > 0) {
      target = redirects[g.below(i)].title;
    } else {
      target = "Nowhere " + std::to_string(i);
    }
    if (g.chance(0.3)) {
      // Lowercase first letter and underscores exercise normalization.
      std::string raw = target;
      raw[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(raw[0])));
      std::replace(raw.begin(), raw.end(), ' ', '_');
      target = raw;
    }
    r.text = (g.chance(0.5) ? "#REDIRECT [[" : "#redirect [[") + target + "]]";
    if (g.chance(0.3)) r.text += "\n[[Category:" + categories[g.below(categories.size())].title.substr(9) + "]]";
    if (g.chance(0.5)) r.redirect_attr = target;
  }

  auto link_to = [&](std::string& out) {
    const auto roll = g.below(20);
    std::string target;
    if (roll < 12) {
      target = g.pick(entities).title;
    } else if (roll < 15) {
      target = g.pick(redirects).title;
    } else if (roll < 16) {
      target = g.pick(categories).title;
      out += "[[:" + target + "]]";
      return;
    } else {
      target = "Red link " + std::to_string(g.below(50));
    }
    switch (g.below(4)) {
      case 0: out += "[[" + target + "]]"; break;
      case 1: out += "[[" + target + "|" + g.sentence(1 + g.below(3)) + "]]"; break;
      case 2: out += "[[" + target + "]]s"; break;
      default: out += "''[[" + target + "|" + g.word() + "]]''"; break;
    }
  };

  auto prose = [&](std::string& out, std::size_t sentences) {
    for (std::size_t s = 0; s < sentences; ++s) {
      out += g.sentence(2 + g.below(5));
      if (g.chance(0.6)) {
        out += ' ';
        link_to(out);
      }
      if (g.chance(0.2)) out += " {{cite|url=[[Ignored]]|x={{nested}}}}";
      if (g.chance(0.1)) out += " '''" + g.word() + "'''";
      if (g.chance(0.1)) out += " [https://example.org/" + std::to_string(s) + " source]";
      if (g.chance(0.05)) out += " &amp; <ref>note</ref>";
      out += ". ";
    }
  };

  for (std::size_t i = 0; i < entities.size(); ++i) {
    auto& e = entities[i];
    std::string t;
    prose(t, 1 + g.below(3));
    const std::size_t sections = i == 0 ? 3 : g.below(4);
    for (std::size_t s = 0; s < sections; ++s) {
      const int fence = 2 + static_cast<int>(g.below(2));
      const std::string bar(static_cast<std::size_t>(fence), '=');
      t += "\n" + bar + " " + g.sentence(1 + g.below(2)) + " " + bar + "\n";
      prose(t, (i == 0 ? 2 : 1) + g.below(3));
      if (i == 0) {
        t += ' ';
        link_to(t);
      }
    }
    const std::size_t cats = g.below(4);
    for (std::size_t c = 0; c < cats; ++c) {
      t += "\n[[" + categories[g.below(categories.size())].title + "]]";
    }
    if (i < 12) t += "\n[[Category:Topic 0]]";  // guaranteed members of 691014
    if (g.chance(0.05)) t += "\n[[Category:Ghost topic]]";
    e.text = std::move(t);
  }
  for (auto& c : categories) {
    c.text = "Pages about " + c.title.substr(9) + ".";
    if (c.id != 691014) c.text += "\n[[Category:Topic 0]]";
  }

  std::vector<FixturePage> others;
  for (std::size_t i = 0; i < o.other_namespaces; ++i) {
    FixturePage p;
    p.id = fresh_id();
    p.ns = i % 2 == 0 ? 10 : 6;
    p.title = (p.ns == 10 ? "Template:Box " : "File:Image ") + std::to_string(i);
    p.text = "[[Entity 1 x]] skipped";
    others.push_back(std::move(p));
  }

  // Interleave the groups deterministically.
  std::vector<FixturePage> all;
  for (auto* group : {&entities, &categories, &redirects, &others}) {
    for (auto& p : *group) all.push_back(std::move(p));
  }
  std::mt19937_64 shuffle_rng(o.seed ^ 0x5eed);
  std::shuffle(all.begin(), all.end(), shuffle_rng);
  return all;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string to_dump_xml(const std::vector<FixturePage>& pages) {
  std::string xml =
      "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\" version=\"0.10\" xml:lang=\"en\">\n"
      "  <siteinfo>\n    <sitename>Fixture</sitename>\n  </siteinfo>\n";
  std::int64_t revision = 1000;
  for (const auto& p : pages) {
    xml += "  <page>\n    <title>" + xml_escape(p.title) + "</title>\n";
    xml += "    <ns>" + std::to_string(p.ns) + "</ns>\n";
    xml += "    <id>" + std::to_string(p.id) + "</id>\n";
    if (p.redirect_attr) xml += "    <redirect title=\"" + xml_escape(*p.redirect_attr) + "\" />\n";
    xml += "    <revision>\n      <id>" + std::to_string(revision++) + "</id>\n";
    xml += "      <text xml:space=\"preserve\">" + xml_escape(p.text) + "</text>\n";
    xml += "    </revision>\n  </page>\n";
  }
  xml += "</mediawiki>\n";
  return xml;
}

void write_dump(const std::filesystem::path& path, const std::vector<FixturePage>& pages) {
  write_file(path, to_dump_xml(pages));
}

}  // namespace wikidb::testing
