#include "empathy/text.hpp"

#include <algorithm>
#include <optional>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace empathy::text {

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

std::string encode(std::u32string_view code_points) {
  std::string out;
  out.reserve(code_points.size());
  for (char32_t c : code_points) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
    if (error) {
      n = 0;
      U8_APPEND_UNSAFE(buf, n, 0xFFFD);
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

std::size_t code_point_length(std::string_view utf8) {
  std::size_t n = 0;
  for (unsigned char b : utf8) {
    if ((b & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string slice(std::string_view utf8, Span span) {
  const auto cps = decode(utf8);
  const std::size_t end = std::min(span.end, cps.size());
  const std::size_t begin = std::min(span.begin, end);
  return encode(std::u32string_view(cps).substr(begin, end - begin));
}

bool is_word_char(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  const int8_t type = u_charType(cp);
  switch (type) {
    case U_UPPERCASE_LETTER:
    case U_LOWERCASE_LETTER:
    case U_TITLECASE_LETTER:
    case U_MODIFIER_LETTER:
    case U_OTHER_LETTER:
    case U_DECIMAL_DIGIT_NUMBER:
      return true;
    default:
      return false;
  }
}

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

namespace {

bool is_mark(char32_t c) {
  const int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_NON_SPACING_MARK || type == U_ENCLOSING_MARK ||
         type == U_COMBINING_SPACING_MARK;
}

bool is_terminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?' || c == U':'; }

bool is_closer(char32_t c) {
  if (c == U'"' || c == U'\'' || c == U')' || c == U']') return true;
  const int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_FINAL_PUNCTUATION || type == U_END_PUNCTUATION;
}

}  // namespace

std::u32string fold_case(std::u32string_view s) {
  std::u32string out(s);
  for (auto& c : out) c = static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  return out;
}

std::string fold_case(std::string_view utf8) { return encode(fold_case(decode(utf8))); }

std::vector<Span> tokenize(std::u32string_view text) {
  std::vector<Span> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char32_t c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n && (is_word_char(text[j]) || is_mark(text[j]))) ++j;
      tokens.push_back({i, j});
      i = j;
      continue;
    }
    tokens.push_back({i, i + 1});
    ++i;
  }
  return tokens;
}

std::vector<Span> tokenize(std::string_view utf8) { return tokenize(decode(utf8)); }

std::vector<Span> split_sentences(std::u32string_view text) {
  std::vector<Span> sentences;
  const std::size_t n = text.size();
  std::size_t i = 0;
  std::optional<std::size_t> start;
  std::size_t last_non_space = 0;

  auto close = [&](std::size_t end) {
    if (start) sentences.push_back({*start, end});
    start.reset();
  };

  while (i < n) {
    const char32_t c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (!start) start = i;
    last_non_space = i + 1;
    if (is_terminator(c)) {
      std::size_t j = i + 1;
      while (j < n && is_closer(text[j])) ++j;
      if (j == n || is_space(text[j])) {
        close(j);
        i = j;
        continue;
      }
    }
    ++i;
  }
  close(last_non_space);
  return sentences;
}

std::vector<Span> split_sentences(std::string_view utf8) { return split_sentences(decode(utf8)); }

std::size_t count_non_space(std::u32string_view text, Span span) {
  std::size_t count = 0;
  const std::size_t end = std::min(span.end, text.size());
  for (std::size_t i = span.begin; i < end; ++i) {
    if (!is_space(text[i])) ++count;
  }
  return count;
}

}  // namespace empathy::text
