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

#ifndef LINGTAG_LEXICON_H_
#define LINGTAG_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lingtag/language.hpp"
#include "lingtag/word_set.hpp"

namespace lingtag {

// Closed-class word inventory of one language. Entries are canonical
// (composed, lowercased) and never change after load.
struct GrammaticalLexicon {
  LanguageId language;
  WordSet words;
};

// Letters (and discriminating signs) legal in one language's orthography,
// stored canonicalized.
struct AlphabetProfile {
  LanguageId language;
  std::unordered_set<char32_t> letters;
};

// Per-language word lists, alphabets and the derived exclusive-character
// index. Immutable after load; safe to share across threads.
//
// Expected layout under the data root:
//   <root>/<code>/words.txt     one word per line
//   <root>/<code>/alphabet.txt  one character per line
//   <root>/<code>/abbrev.txt    optional, one abbreviation per line
// All files are UTF-8; '#' starts a comment line; blank lines are ignored;
// a trailing CR is stripped; any other leading/trailing whitespace is a
// parse error.
class LexiconSet {
 public:
  static LexiconSet load(const std::filesystem::path& root, const std::vector<LanguageId>& languages);

  const std::vector<LanguageId>& languages() const { return languages_; }
  std::size_t size() const { return languages_.size(); }

  // Index of a language in languages(); throws UsageError when unknown.
  std::size_t index_of(const LanguageId& language) const;

  // Membership of an already-canonicalized word in one language's lexicon.
  bool contains_word(const LanguageId& language, std::string_view word) const;
  bool contains_word(std::size_t lang_index, std::string_view word) const;

  // The unique language whose alphabet contains c (canonicalized before the
  // lookup), or nothing when c is shared or unknown.
  std::optional<LanguageId> exclusive_language_of(char32_t c) const;
  std::optional<std::size_t> exclusive_index_of(char32_t c) const;

  const GrammaticalLexicon& lexicon(const LanguageId& language) const;
  const AlphabetProfile& alphabet(const LanguageId& language) const;
  const GrammaticalLexicon& lexicon_at(std::size_t i) const { return lexicons_[i]; }
  const AlphabetProfile& alphabet_at(std::size_t i) const { return alphabets_[i]; }

  // character -> language index, for characters present in exactly one
  // configured alphabet.
  const std::unordered_map<char32_t, std::size_t>& exclusive_index() const { return exclusive_; }

  // Union of all languages' abbreviation lists, canonicalized. Feeds the
  // sentence splitter, which runs before any language is known.
  const WordSet& abbreviations() const { return abbreviations_; }

 private:
  LexiconSet() = default;

  std::vector<LanguageId> languages_;
  std::vector<GrammaticalLexicon> lexicons_;
  std::vector<AlphabetProfile> alphabets_;
  std::unordered_map<char32_t, std::size_t> exclusive_;
  WordSet abbreviations_;
};

// Free-function veneers over the members.
LexiconSet load_lexicon_set(const std::filesystem::path& root, const std::vector<LanguageId>& languages);

inline bool contains_word(const LexiconSet& lex, const LanguageId& language, std::string_view word) {
  return lex.contains_word(language, word);
}

inline std::optional<LanguageId> exclusive_language_of(const LexiconSet& lex, char32_t c) {
  return lex.exclusive_language_of(c);
}

}  // namespace lingtag

#endif  // LINGTAG_LEXICON_H_
