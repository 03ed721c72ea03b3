// Copyright 2026 The Lingtag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINGTAG_CLASSIFIER_H_
#define LINGTAG_CLASSIFIER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "lingtag/lexicon.hpp"
#include "lingtag/tokenizer.hpp"

namespace lingtag {

// Per-language evidence counts, aligned with LexiconSet::languages().
// "Likelihood" here is a raw non-negative integer, not a probability.
struct LikelihoodVector {
  std::vector<uint32_t> scores;

  LikelihoodVector() = default;
  explicit LikelihoodVector(std::size_t n_languages) : scores(n_languages, 0) {}

  bool operator==(const LikelihoodVector&) const = default;
};

// Classification outcome of one unit. languages is the full argmax set,
// sorted by code: size 1 is a unique tag, size >= 2 a maintained ambiguity,
// empty (max_score == 0) means undetermined.
struct Tag {
  std::vector<LanguageId> languages;
  uint32_t max_score = 0;
  uint32_t word_count = 0;  // word tokens scored in this unit

  bool undetermined() const { return max_score == 0; }
  bool unique() const { return languages.size() == 1; }

  // "und", "fr", or a '+'-joined sorted code list ("en+fr").
  std::string label() const;
};

// Segment tree with a Tag and LikelihoodVector per node; isomorphic in shape
// to the input SegmentTree.
struct TaggedTree {
  SegmentKind kind = SegmentKind::Root;
  Span span;
  Tag tag;
  LikelihoodVector likelihood;
  std::vector<TaggedTree> children;

  // Word tokens in this node and all descendants.
  uint32_t total_word_count() const;
};

// One classified sentence of a document.
struct TaggedSentence {
  Sentence sentence;
  TaggedTree tree;
  std::vector<Diagnostic> diagnostics;
};

// Scores one token into a copy of acc: +1 per language whose lexicon
// contains the word, +1 per language owning an exclusive character of the
// word (at most one alphabet increment per token per language). Non-word
// tokens contribute nothing.
LikelihoodVector score_word(const LexiconSet& lex, const Token& token, const LikelihoodVector& acc);

// In-place variant used on the hot path.
void accumulate_word(const LexiconSet& lex, const Token& token, LikelihoodVector& acc);

// Computes the Tag for a finished LikelihoodVector.
Tag make_tag(const LexiconSet& lex, const LikelihoodVector& likelihood, uint32_t word_count);

// Scores own_tokens only, then recurses into children with fresh context;
// child evidence never leaks into the parent.
TaggedTree classify_node(const LexiconSet& lex, const SegmentNode& node);

// Whole pipeline: split sentences, build segment trees, classify each.
std::vector<TaggedSentence> classify_document(const LexiconSet& lex, const Tokenizer& tokenizer,
                                              const RawDocument& doc);

// Convenience overload; the tokenizer is built from lex's abbreviations.
std::vector<TaggedSentence> classify_document(const LexiconSet& lex, const RawDocument& doc);

}  // namespace lingtag

#endif  // LINGTAG_CLASSIFIER_H_
