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

#include "lingtag/lexicon.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lingtag/unicode.hpp"

namespace lingtag {

std::vector<LanguageId> parse_language_list(std::string_view csv) {
  std::vector<LanguageId> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string_view piece = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

bool has_whitespace(std::string_view s) {
  for (const auto& dc : decode_utf8(s)) {
    if (is_whitespace(dc.cp)) return true;
  }
  return false;
}

// Reads one entry-per-line UTF-8 file. Yields (line_number, raw_entry) for
// every non-blank, non-comment line; enforces the whitespace rules.
std::vector<std::pair<std::size_t, std::string>> read_entries(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::vector<std::pair<std::size_t, std::string>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') continue;
    if (has_whitespace(line)) {
      throw ParseError(file.string(), lineno, "embedded or surrounding whitespace in entry '" + line + "'");
    }
    entries.emplace_back(lineno, line);
  }
  if (in.bad()) throw IoError("read failure on " + file.string());
  return entries;
}

}  // namespace

LexiconSet LexiconSet::load(const std::filesystem::path& root, const std::vector<LanguageId>& languages) {
  if (languages.empty()) throw ConfigError("empty language set");
  {
    std::set<LanguageId> seen;
    for (const auto& lang : languages) {
      if (!seen.insert(lang).second) throw ConfigError("duplicate language code: " + lang.code());
    }
  }

  LexiconSet set;
  set.languages_ = languages;
  set.lexicons_.reserve(languages.size());
  set.alphabets_.reserve(languages.size());

  for (const auto& lang : languages) {
    const std::filesystem::path dir = root / lang.code();
    const std::filesystem::path words_file = dir / "words.txt";
    const std::filesystem::path alpha_file = dir / "alphabet.txt";
    if (!std::filesystem::exists(words_file)) {
      throw ConfigError("missing word list for language '" + lang.code() + "': " + words_file.string());
    }
    if (!std::filesystem::exists(alpha_file)) {
      throw ConfigError("missing alphabet for language '" + lang.code() + "': " + alpha_file.string());
    }

    GrammaticalLexicon lex{lang, {}};
    for (const auto& [lineno, raw] : read_entries(words_file)) {
      const std::string word = canonicalize(raw);
      if (word.empty()) throw ParseError(words_file.string(), lineno, "entry empty after fold");
      lex.words.insert(word);
    }

    AlphabetProfile alpha{lang, {}};
    for (const auto& [lineno, raw] : read_entries(alpha_file)) {
      const std::string folded = canonicalize(raw);
      const auto cps = decode_utf8(folded);
      if (cps.size() != 1) {
        throw ParseError(alpha_file.string(), lineno, "expected a single character, got '" + raw + "'");
      }
      alpha.letters.insert(cps.front().cp);
    }

    const std::filesystem::path abbrev_file = dir / "abbrev.txt";
    if (std::filesystem::exists(abbrev_file)) {
      for (const auto& [lineno, raw] : read_entries(abbrev_file)) {
        const std::string abbr = canonicalize(raw);
        if (abbr.empty()) throw ParseError(abbrev_file.string(), lineno, "entry empty after fold");
        set.abbreviations_.insert(abbr);
      }
    }

    set.lexicons_.push_back(std::move(lex));
    set.alphabets_.push_back(std::move(alpha));
  }

  // exclusive_index: c -> L iff c is in alphabet(L) and in no other alphabet.
  std::unordered_map<char32_t, std::size_t> count;
  for (std::size_t i = 0; i < set.alphabets_.size(); ++i) {
    for (const char32_t c : set.alphabets_[i].letters) {
      auto [it, fresh] = count.try_emplace(c, i);
      if (!fresh) it->second = set.alphabets_.size();  // shared marker
    }
  }
  for (const auto& [c, owner] : count) {
    if (owner < set.alphabets_.size()) set.exclusive_.emplace(c, owner);
  }
  return set;
}

std::size_t LexiconSet::index_of(const LanguageId& language) const {
  for (std::size_t i = 0; i < languages_.size(); ++i) {
    if (languages_[i] == language) return i;
  }
  throw UsageError("language '" + language.code() + "' is not configured");
}

bool LexiconSet::contains_word(const LanguageId& language, std::string_view word) const {
  return contains_word(index_of(language), word);
}

bool LexiconSet::contains_word(std::size_t lang_index, std::string_view word) const {
  const auto& words = lexicons_[lang_index].words;
  return words.find(word) != words.end();
}

std::optional<std::size_t> LexiconSet::exclusive_index_of(char32_t c) const {
  const auto it = exclusive_.find(canonicalize_char(c));
  if (it == exclusive_.end()) return std::nullopt;
  return it->second;
}

std::optional<LanguageId> LexiconSet::exclusive_language_of(char32_t c) const {
  const auto i = exclusive_index_of(c);
  if (!i) return std::nullopt;
  return languages_[*i];
}

const GrammaticalLexicon& LexiconSet::lexicon(const LanguageId& language) const {
  return lexicons_[index_of(language)];
}

const AlphabetProfile& LexiconSet::alphabet(const LanguageId& language) const {
  return alphabets_[index_of(language)];
}

LexiconSet load_lexicon_set(const std::filesystem::path& root, const std::vector<LanguageId>& languages) {
  return LexiconSet::load(root, languages);
}

}  // namespace lingtag
