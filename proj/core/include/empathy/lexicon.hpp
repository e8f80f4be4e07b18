#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "empathy/text.hpp"

namespace empathy {

// Text with its tokens and their case-folded forms, computed once.
struct TokenizedText {
  std::u32string code_points;
  std::vector<Span> tokens;
  std::vector<std::u32string> folded;

  static TokenizedText from(std::string_view utf8);
};

struct LexiconMatch {
  std::size_t entry = 0;   // index into Lexicon::entries()
  std::size_t first = 0;   // first token index
  std::size_t count = 0;   // tokens covered
};

// Case-insensitive phrase list. Entries are tokenized with the corpus
// tokenizer, so "z.B." matches the token run z . B . regardless of spacing.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::initializer_list<std::string_view> entries);
  explicit Lexicon(const std::vector<std::string>& entries);

  // Leftmost-longest, non-overlapping matches.
  std::vector<LexiconMatch> find_all(const TokenizedText& text) const;
  std::size_t count(const TokenizedText& text) const { return find_all(text).size(); }

  const std::vector<std::string>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  void add(std::string_view entry);

  std::vector<std::string> entries_;
  std::vector<std::vector<std::u32string>> patterns_;
};

}  // namespace empathy
