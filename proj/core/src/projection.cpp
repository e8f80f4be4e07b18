#include "empathy/corpus.hpp"

#include <algorithm>

namespace empathy {

namespace {

std::vector<SentenceLabel> project(std::u32string_view text, const std::vector<Span>& sentences,
                                   const std::vector<SpanAnnotation>& spans) {
  std::vector<SentenceLabel> labels(sentences.size());
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const Span sentence = sentences[s];
    const std::size_t total = text::count_non_space(text, sentence);
    if (total == 0) continue;
    for (const auto& a : spans) {
      const Span overlap{std::max(sentence.begin, a.start), std::min(sentence.end, a.end)};
      if (overlap.begin >= overlap.end) continue;
      // Disjoint spans of one annotator: at most one can cover more than half.
      if (2 * text::count_non_space(text, overlap) > total) {
        labels[s] = {a.component, a.cognitive, a.emotional};
        break;
      }
    }
  }
  return labels;
}

}  // namespace

std::vector<SentenceLabel> project_to_sentences(const AnnotatedDocument& document,
                                                std::string_view annotator) {
  const auto cps = text::decode(document.text);
  return project(cps, text::split_sentences(cps), document.annotations_of(annotator));
}

SentenceView build_sentence_view(const AnnotatedDocument& document) {
  const auto cps = text::decode(document.text);
  SentenceView view;
  view.sentences = text::split_sentences(cps);
  for (const auto& annotator : document.annotators())
    view.rows[annotator] = project(cps, view.sentences, document.annotations_of(annotator));
  return view;
}

}  // namespace empathy
