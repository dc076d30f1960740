#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wikidb {

/// Context conditions from the Lovins ending table, keyed A..Z, AA, BB, CC.
enum class LovinsCondition : std::uint8_t {
  A, B, C, D, E, F, G, H, I, J, K, L, M, N, O, P, Q, R, S, T, U, V, W, X, Y, Z,
  AA, BB, CC
};

inline constexpr std::size_t kLovinsConditionCount = 29;

struct LovinsEnding {
  std::string suffix;
  LovinsCondition condition;
};

struct LovinsRecoding {
  std::string from;
  std::string to;
  std::string except_after;  ///< letters that block the rule when they precede `from`
};

/// The ending list and recoding rules, parsed from the embedded data files.
class LovinsTables {
 public:
  static const LovinsTables& builtin();

  /// Parses the two data files. Throws wikidb::Error on malformed input.
  static LovinsTables parse(std::string_view endings, std::string_view recoding);

  /// Longest first, in table order within a length.
  const std::vector<LovinsEnding>& endings() const noexcept { return endings_; }

  /// Rule 1 (undoubling) is stored as from="undouble", to=<letters>.
  const std::vector<LovinsRecoding>& recodings() const noexcept { return recodings_; }

  std::size_t longest_ending() const noexcept { return longest_; }

  /// Condition for `suffix`, or nullptr when it is not an ending.
  const LovinsCondition* find(std::string_view suffix) const noexcept;

  /// Raw text the tables were parsed from (for auditing).
  std::string_view endings_source() const noexcept { return endings_source_; }
  std::string_view recoding_source() const noexcept { return recoding_source_; }

 private:
  std::vector<LovinsEnding> endings_;
  std::vector<LovinsRecoding> recodings_;
  std::string undouble_letters_;
  std::size_t longest_ = 0;
  std::string_view endings_source_;
  std::string_view recoding_source_;

  friend class LovinsStemmer;
};

/// Name of a condition code ("A", "BB", ...).
std::string_view condition_name(LovinsCondition c);

/// Whether `stem` may lose an ending guarded by `c`.
bool lovins_condition_holds(LovinsCondition c, std::string_view stem);

class LovinsStemmer {
 public:
  explicit LovinsStemmer(const LovinsTables& tables = LovinsTables::builtin())
      : tables_(&tables) {}

  /// `token` must be lowercase ASCII letters. Removes the longest ending
  /// whose condition holds on a stem of at least two letters, then applies
  /// the recoding rules. A token with no removable ending is returned as is.
  std::string stem(std::string_view token) const;

 private:
  void recode(std::string& stem) const;

  const LovinsTables* tables_;
};

/// Convenience wrapper over the builtin tables.
std::string lovins_stem(std::string_view token);

class StopWordList {
 public:
  /// The shipped English list.
  static const StopWordList& builtin();

  /// One lowercase token per line, `#` starts a comment line.
  static StopWordList parse(std::string_view text);
  static StopWordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

/// Lowercases, splits on non-alphanumeric code points, drops stop words,
/// stems purely alphabetic ASCII tokens and joins with single spaces.
std::string stem_phrase(std::string_view text,
                        const StopWordList& stop_words = StopWordList::builtin());

}  // namespace wikidb
