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

#ifndef LINGTAG_EVALUATOR_H_
#define LINGTAG_EVALUATOR_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lingtag/classifier.hpp"
#include "lingtag/lexicon.hpp"

namespace lingtag {

// One labeled sentence. Each entry is classified as a single sentence (no
// re-splitting); the gold label applies to the whole entry.
struct CorpusEntry {
  std::string text;
  LanguageId gold;
};

struct EvalCounters {
  uint64_t sentences = 0;
  uint64_t unique_correct = 0;
  uint64_t unique_wrong = 0;
  uint64_t ambiguous = 0;
  uint64_t undetermined = 0;

  bool operator==(const EvalCounters&) const = default;
};

// A unique-wrong case, with the numbers error_inventory needs.
struct ErrorCase {
  CorpusEntry entry;
  Tag tag;
  uint32_t word_count = 0;     // word tokens in the whole entry
  uint32_t unknown_words = 0;  // word tokens unknown to every configured lexicon
};

enum class ErrorCategory : uint8_t {
  VeryShort,           // <= 3 words
  UnexpectedLanguage,  // majority of word tokens unknown to all lexicons
  Other,
};

std::string_view to_string(ErrorCategory category);

struct CategorizedError {
  ErrorCase error;
  ErrorCategory category = ErrorCategory::Other;
};

// Aggregated evaluation results. by_length buckets are exact word counts
// 0..20 plus a 21+ bucket (key 21). decisive_length is the empirical
// threshold above which every corpus sentence isolated a single language:
// (largest word count among non-unique tags) + 1, or 1 when none failed.
struct EvalReport {
  std::vector<LanguageId> languages;
  std::map<LanguageId, EvalCounters> per_language;
  std::map<uint32_t, EvalCounters> by_length;
  std::map<LanguageId, uint32_t> decisive_length;
  std::map<LanguageId, double> grammatical_density;  // mean gold-lexicon fraction of word tokens
  std::vector<ErrorCase> errors;                     // unique-wrong cases, corpus order
};

// Runs the classifier over the corpus and aggregates. The corpus may be
// sharded over `workers` threads; reduction runs in corpus order, so any
// worker count yields an identical report.
// Throws UsageError on an empty corpus or an unconfigured gold language.
EvalReport evaluate(const LexiconSet& lex, const std::vector<CorpusEntry>& corpus, unsigned workers = 1);

// Categorizes the report's unique-wrong cases. unexpected-language wins over
// very-short when both apply.
std::vector<CategorizedError> error_inventory(const EvalReport& report);

// TSV corpus: one "<lang-code>\t<sentence>" per line, '#' comments and blank
// lines ignored.
std::vector<CorpusEntry> load_corpus_tsv(const std::filesystem::path& file);
std::vector<CorpusEntry> load_corpus_tsv(std::istream& in, const std::string& name);

// Human-readable tables.
void print_report(std::ostream& out, const EvalReport& report);

// Machine-readable JSON document (stable schema, documented in the README).
std::string report_to_json(const EvalReport& report);

}  // namespace lingtag

#endif  // LINGTAG_EVALUATOR_H_
