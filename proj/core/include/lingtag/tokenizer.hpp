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

#ifndef LINGTAG_TOKENIZER_H_
#define LINGTAG_TOKENIZER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lingtag/word_set.hpp"

namespace lingtag {

// Half-open byte range [begin, end).
// TODO: widen to 64-bit offsets so streamed documents beyond 4 GiB report
// exact positions; classification itself is unaffected.
struct Span {
  uint32_t begin = 0;
  uint32_t end = 0;

  uint32_t length() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// Raw input text plus a name for diagnostics. No format assumptions: emails,
// OCR output and novels all pass through the same path.
struct RawDocument {
  std::string text;
  std::string source_name = "<input>";
};

enum class TokenKind : uint8_t {
  Word,    // letters, possibly with interior hyphens
  Number,  // digit runs incl. decimal/grouping marks ("3.5", "1,000")
  Symbol,  // punctuation and anything else; retained for offset coverage
};

struct Token {
  std::string surface;    // original substring, never contains whitespace
  std::string canonical;  // canonicalize(surface)
  uint32_t offset = 0;    // byte offset within the sentence
  TokenKind kind = TokenKind::Symbol;

  bool is_word() const { return kind == TokenKind::Word; }
};

// How an embedded segment is introduced. Root is the sentence itself.
enum class SegmentKind : uint8_t { Root, Quote, Parenthesis, Dash, Colon };

std::string_view to_string(SegmentKind kind);

// A sentence decomposed into its own text and nested embedded segments.
// Children are ordered by position, their spans are disjoint and contained
// in the parent span, and own_tokens excludes everything inside children.
struct SegmentNode {
  SegmentKind kind = SegmentKind::Root;
  Span span;   // full extent including delimiters, relative to the sentence
  Span inner;  // content between the delimiters
  std::vector<Token> own_tokens;
  std::vector<SegmentNode> children;
};

// Non-fatal warnings, e.g. an opening quote that never closes. Emitted on
// the side; never on the primary output path.
struct Diagnostic {
  enum class Code : uint8_t { UnbalancedDelimiter };

  Code code = Code::UnbalancedDelimiter;
  SegmentKind kind = SegmentKind::Root;
  Span span;  // of the offending delimiter, relative to the sentence
  std::string message;
};

struct SegmentParse {
  SegmentNode root;
  std::vector<Diagnostic> diagnostics;
};

// One sentence extracted from a document. The span addresses the document;
// text is the exact substring.
struct Sentence {
  std::string text;
  Span span;
};

// Splits text into sentences and sentences into segment trees of tokens.
// All methods are pure functions of their inputs; a const Tokenizer is safe
// to share across threads.
//
// Sentence boundaries: '.', '!', '?', '…' followed by whitespace and then an
// uppercase letter or opening punctuation, a blank line, or end of input.
// A '.' does not end a sentence after a known abbreviation, after a single
// letter (initials, dotted acronyms) or between digits.
class Tokenizer {
 public:
  Tokenizer() = default;

  // Abbreviations must already be canonicalized (the lexicon loader does
  // this). The set is the union over languages: splitting runs before any
  // language is known.
  explicit Tokenizer(WordSet abbreviations) : abbreviations_(std::move(abbreviations)) {}

  std::vector<Sentence> split_sentences(const RawDocument& doc) const;

  // Never fails: unbalanced delimiters dissolve into the enclosing node and
  // surface as diagnostics.
  SegmentParse build_segment_tree(std::string_view sentence) const;

  // Splits one unit of text into tokens. Punctuation never attaches to word
  // tokens; apostrophes split clitics ("l'homme" -> "l", "homme") and are
  // themselves dropped; digit and symbol runs are kept as non-word tokens.
  static std::vector<Token> tokenize_words(std::string_view unit);

  const WordSet& abbreviations() const { return abbreviations_; }

 private:
  WordSet abbreviations_;
};

// Reads a stream paragraph by paragraph (blank-line separated), tracking the
// byte offset of each paragraph. Powers the CLI's bounded-memory streaming.
class ParagraphReader {
 public:
  explicit ParagraphReader(std::istream& in) : in_(in) {}

  // Returns false at end of stream. base_offset receives the byte position
  // of the paragraph's first character in the stream.
  bool next(std::string& paragraph, uint64_t& base_offset);

 private:
  std::istream& in_;
  uint64_t pos_ = 0;
};

}  // namespace lingtag

#endif  // LINGTAG_TOKENIZER_H_
