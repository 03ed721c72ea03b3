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

#include "lingtag/classifier.hpp"

#include <algorithm>
#include <array>

#include "lingtag/unicode.hpp"

namespace lingtag {

std::string Tag::label() const {
  if (languages.empty()) return "und";
  std::string out = languages.front().code();
  for (std::size_t i = 1; i < languages.size(); ++i) {
    out += '+';
    out += languages[i].code();
  }
  return out;
}

uint32_t TaggedTree::total_word_count() const {
  uint32_t total = tag.word_count;
  for (const auto& child : children) total += child.total_word_count();
  return total;
}

void accumulate_word(const LexiconSet& lex, const Token& token, LikelihoodVector& acc) {
  if (!token.is_word()) return;
  const std::size_t n = lex.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lex.contains_word(i, token.canonical)) ++acc.scores[i];
  }
  // Alphabet evidence: a language is credited at most once per token, no
  // matter how many of its exclusive characters the word contains.
  std::array<std::size_t, 8> inline_buf{};
  std::size_t n_credited = 0;
  std::vector<std::size_t> overflow;
  const auto already_credited = [&](std::size_t owner) {
    for (std::size_t k = 0; k < std::min(n_credited, inline_buf.size()); ++k) {
      if (inline_buf[k] == owner) return true;
    }
    return std::find(overflow.begin(), overflow.end(), owner) != overflow.end();
  };
  for (const auto& dc : decode_utf8(token.canonical)) {
    const auto owner = lex.exclusive_index_of(dc.cp);
    if (!owner || already_credited(*owner)) continue;
    ++acc.scores[*owner];
    if (n_credited < inline_buf.size()) {
      inline_buf[n_credited] = *owner;
    } else {
      overflow.push_back(*owner);
    }
    ++n_credited;
  }
}

LikelihoodVector score_word(const LexiconSet& lex, const Token& token, const LikelihoodVector& acc) {
  LikelihoodVector out = acc;
  accumulate_word(lex, token, out);
  return out;
}

Tag make_tag(const LexiconSet& lex, const LikelihoodVector& likelihood, uint32_t word_count) {
  Tag tag;
  tag.word_count = word_count;
  tag.max_score = 0;
  for (const uint32_t s : likelihood.scores) tag.max_score = std::max(tag.max_score, s);
  if (tag.max_score == 0) return tag;  // undetermined
  for (std::size_t i = 0; i < likelihood.scores.size(); ++i) {
    if (likelihood.scores[i] == tag.max_score) tag.languages.push_back(lex.languages()[i]);
  }
  std::sort(tag.languages.begin(), tag.languages.end());
  return tag;
}

TaggedTree classify_node(const LexiconSet& lex, const SegmentNode& node) {
  TaggedTree tree;
  tree.kind = node.kind;
  tree.span = node.span;
  tree.likelihood = LikelihoodVector(lex.size());
  uint32_t words = 0;
  for (const Token& token : node.own_tokens) {
    if (token.is_word()) ++words;
    accumulate_word(lex, token, tree.likelihood);
  }
  tree.tag = make_tag(lex, tree.likelihood, words);
  tree.children.reserve(node.children.size());
  for (const SegmentNode& child : node.children) {
    tree.children.push_back(classify_node(lex, child));  // fresh context
  }
  return tree;
}

std::vector<TaggedSentence> classify_document(const LexiconSet& lex, const Tokenizer& tokenizer,
                                              const RawDocument& doc) {
  std::vector<TaggedSentence> out;
  for (auto& sentence : tokenizer.split_sentences(doc)) {
    SegmentParse parse = tokenizer.build_segment_tree(sentence.text);
    TaggedSentence tagged;
    tagged.tree = classify_node(lex, parse.root);
    tagged.sentence = std::move(sentence);
    tagged.diagnostics = std::move(parse.diagnostics);
    out.push_back(std::move(tagged));
  }
  return out;
}

std::vector<TaggedSentence> classify_document(const LexiconSet& lex, const RawDocument& doc) {
  return classify_document(lex, Tokenizer(lex.abbreviations()), doc);
}

}  // namespace lingtag
