#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace empathy {

// Half-open range [begin, end) of Unicode code point offsets.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const noexcept { return end - begin; }
  bool contains(std::size_t pos) const noexcept { return pos >= begin && pos < end; }
  friend bool operator==(const Span&, const Span&) = default;
};

namespace text {

// Decodes UTF-8; invalid sequences become U+FFFD so offsets stay defined.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view code_points);

std::size_t code_point_length(std::string_view utf8);

// Substring of `utf8` covering the code points in `span`.
std::string slice(std::string_view utf8, Span span);

bool is_word_char(char32_t c);
bool is_space(char32_t c);

// Simple per-code-point case folding.
std::u32string fold_case(std::u32string_view s);
std::string fold_case(std::string_view utf8);

// A token is a maximal run of letters/digits (combining marks extend a run)
// or a single non-whitespace character of any other class.
std::vector<Span> tokenize(std::u32string_view text);
std::vector<Span> tokenize(std::string_view utf8);

// Sentences end after '.', '!', '?' or ':' followed by whitespace or end of
// text. Closing quotes and brackets directly after the terminator stay with
// the sentence. Spans are trimmed of surrounding whitespace.
std::vector<Span> split_sentences(std::u32string_view text);
std::vector<Span> split_sentences(std::string_view utf8);

// Number of non-whitespace code points of `text` inside `span`.
std::size_t count_non_space(std::u32string_view text, Span span);

}  // namespace text
}  // namespace empathy
