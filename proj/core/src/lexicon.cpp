#include "empathy/lexicon.hpp"

namespace empathy {

TokenizedText TokenizedText::from(std::string_view utf8) {
  TokenizedText t;
  t.code_points = text::decode(utf8);
  t.tokens = text::tokenize(t.code_points);
  t.folded.reserve(t.tokens.size());
  for (const auto& span : t.tokens)
    t.folded.push_back(
        text::fold_case(std::u32string_view(t.code_points).substr(span.begin, span.length())));
  return t;
}

Lexicon::Lexicon(std::initializer_list<std::string_view> entries) {
  for (auto e : entries) add(e);
}

Lexicon::Lexicon(const std::vector<std::string>& entries) {
  for (const auto& e : entries) add(e);
}

void Lexicon::add(std::string_view entry) {
  const auto t = TokenizedText::from(entry);
  if (t.folded.empty()) return;
  entries_.emplace_back(entry);
  patterns_.push_back(t.folded);
}

std::vector<LexiconMatch> Lexicon::find_all(const TokenizedText& text) const {
  std::vector<LexiconMatch> matches;
  const auto& tokens = text.folded;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = patterns_.size();
    std::size_t best_len = 0;
    for (std::size_t e = 0; e < patterns_.size(); ++e) {
      const auto& p = patterns_[e];
      if (p.size() <= best_len || i + p.size() > tokens.size()) continue;
      bool equal = true;
      for (std::size_t k = 0; k < p.size() && equal; ++k) equal = tokens[i + k] == p[k];
      if (equal) {
        best = e;
        best_len = p.size();
      }
    }
    if (best_len > 0) {
      matches.push_back({best, i, best_len});
      i += best_len;
    } else {
      ++i;
    }
  }
  return matches;
}

}  // namespace empathy
