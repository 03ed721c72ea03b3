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

#include "lingtag/evaluator.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace lingtag {

namespace {

constexpr uint32_t kTopBucket = 21;  // "21+"

uint32_t bucket_of(uint32_t words) { return std::min(words, kTopBucket); }

// Per-entry outcome; the map step produces these, the reduce step folds them
// sequentially so sharding cannot change the report.
struct EntryOutcome {
  Tag tag;
  uint32_t words = 0;
  uint32_t gram_words = 0;     // word tokens in the gold language's lexicon
  uint32_t unknown_words = 0;  // word tokens unknown to every lexicon
};

void collect_word_stats(const LexiconSet& lex, std::size_t gold_idx, const SegmentNode& node,
                        EntryOutcome& outcome) {
  for (const Token& token : node.own_tokens) {
    if (!token.is_word()) continue;
    ++outcome.words;
    bool known_anywhere = false;
    for (std::size_t i = 0; i < lex.size(); ++i) {
      if (lex.contains_word(i, token.canonical)) {
        known_anywhere = true;
        if (i == gold_idx) ++outcome.gram_words;
      }
    }
    if (!known_anywhere) ++outcome.unknown_words;
  }
  for (const SegmentNode& child : node.children) collect_word_stats(lex, gold_idx, child, outcome);
}

EntryOutcome classify_entry(const LexiconSet& lex, const Tokenizer& tokenizer, const CorpusEntry& entry,
                            std::size_t gold_idx) {
  const SegmentParse parse = tokenizer.build_segment_tree(entry.text);
  const TaggedTree tree = classify_node(lex, parse.root);
  EntryOutcome outcome;
  outcome.tag = tree.tag;
  collect_word_stats(lex, gold_idx, parse.root, outcome);
  return outcome;
}

}  // namespace

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::VeryShort: return "very-short";
    case ErrorCategory::UnexpectedLanguage: return "unexpected-language";
    case ErrorCategory::Other: return "other";
  }
  return "?";
}

EvalReport evaluate(const LexiconSet& lex, const std::vector<CorpusEntry>& corpus, unsigned workers) {
  if (corpus.empty()) throw UsageError("empty corpus");

  std::vector<std::size_t> gold_idx(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    bool found = false;
    for (std::size_t k = 0; k < lex.size(); ++k) {
      if (lex.languages()[k] == corpus[i].gold) {
        gold_idx[i] = k;
        found = true;
        break;
      }
    }
    if (!found) {
      throw UsageError("corpus entry " + std::to_string(i + 1) + ": gold language '" + corpus[i].gold.code() +
                       "' is not configured (\"" + corpus[i].text.substr(0, 40) + "\")");
    }
  }

  const Tokenizer tokenizer(lex.abbreviations());
  std::vector<EntryOutcome> outcomes(corpus.size());

  workers = std::max(1u, workers);
  if (workers == 1 || corpus.size() < 2 * workers) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      outcomes[i] = classify_entry(lex, tokenizer, corpus[i], gold_idx[i]);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < corpus.size(); i += workers) {
          outcomes[i] = classify_entry(lex, tokenizer, corpus[i], gold_idx[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  EvalReport report;
  report.languages = lex.languages();
  for (const auto& lang : lex.languages()) {
    report.per_language[lang];  // present even when empty
    report.decisive_length[lang] = 1;
    report.grammatical_density[lang] = 0.0;
  }

  std::map<LanguageId, uint32_t> failure_max;
  std::map<LanguageId, double> density_sum;
  std::map<LanguageId, uint64_t> density_n;

  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const CorpusEntry& entry = corpus[i];
    const EntryOutcome& o = outcomes[i];

    EvalCounters& lang_c = report.per_language[entry.gold];
    EvalCounters& len_c = report.by_length[bucket_of(o.words)];
    ++lang_c.sentences;
    ++len_c.sentences;

    if (o.tag.undetermined()) {
      ++lang_c.undetermined;
      ++len_c.undetermined;
    } else if (o.tag.languages.size() >= 2) {
      ++lang_c.ambiguous;
      ++len_c.ambiguous;
    } else if (o.tag.languages.front() == entry.gold) {
      ++lang_c.unique_correct;
      ++len_c.unique_correct;
    } else {
      ++lang_c.unique_wrong;
      ++len_c.unique_wrong;
      report.errors.push_back({entry, o.tag, o.words, o.unknown_words});
    }

    if (!o.tag.unique()) {
      auto [it, _] = failure_max.try_emplace(entry.gold, 0);
      it->second = std::max(it->second, o.words);
    }
    if (o.words > 0) {
      density_sum[entry.gold] += static_cast<double>(o.gram_words) / static_cast<double>(o.words);
      ++density_n[entry.gold];
    }
  }

  for (const auto& [lang, fmax] : failure_max) report.decisive_length[lang] = fmax + 1;
  for (const auto& [lang, n] : density_n) {
    if (n > 0) report.grammatical_density[lang] = density_sum[lang] / static_cast<double>(n);
  }
  return report;
}

std::vector<CategorizedError> error_inventory(const EvalReport& report) {
  std::vector<CategorizedError> out;
  out.reserve(report.errors.size());
  for (const ErrorCase& e : report.errors) {
    ErrorCategory cat = ErrorCategory::Other;
    if (2 * e.unknown_words > e.word_count) {
      cat = ErrorCategory::UnexpectedLanguage;
    } else if (e.word_count <= 3) {
      cat = ErrorCategory::VeryShort;
    }
    out.push_back({e, cat});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_tsv(std::istream& in, const std::string& name) {
  std::vector<CorpusEntry> corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(name, lineno, "expected '<lang-code>\\t<sentence>'");
    }
    std::string code = line.substr(0, tab);
    std::string text = line.substr(tab + 1);
    if (text.empty()) throw ParseError(name, lineno, "empty sentence");
    try {
      corpus.push_back({std::move(text), LanguageId(code)});
    } catch (const ConfigError& e) {
      throw ParseError(name, lineno, e.what());
    }
  }
  if (in.bad()) throw IoError("read failure on " + name);
  return corpus;
}

std::vector<CorpusEntry> load_corpus_tsv(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  return load_corpus_tsv(in, file.string());
}

void print_report(std::ostream& out, const EvalReport& report) {
  out << "per language:\n";
  out << "  lang  sentences  uniq-correct  uniq-wrong  ambiguous  undet  density  decisive\n";
  for (const auto& lang : report.languages) {
    const EvalCounters& c = report.per_language.at(lang);
    out << "  " << std::left << std::setw(6) << lang.code() << std::right << std::setw(9) << c.sentences
        << std::setw(14) << c.unique_correct << std::setw(12) << c.unique_wrong << std::setw(11) << c.ambiguous
        << std::setw(7) << c.undetermined << std::setw(9) << std::fixed << std::setprecision(3)
        << report.grammatical_density.at(lang) << std::setw(10) << report.decisive_length.at(lang) << "\n";
  }

  out << "\nby sentence length (words):\n";
  out << "  words  sentences  uniq-correct  uniq-wrong  ambiguous  undet\n";
  for (const auto& [bucket, c] : report.by_length) {
    std::string label = bucket >= kTopBucket ? "21+" : std::to_string(bucket);
    out << "  " << std::left << std::setw(7) << label << std::right << std::setw(8) << c.sentences << std::setw(14)
        << c.unique_correct << std::setw(12) << c.unique_wrong << std::setw(11) << c.ambiguous << std::setw(7)
        << c.undetermined << "\n";
  }

  const auto inventory = error_inventory(report);
  if (!inventory.empty()) {
    out << "\nunique-wrong cases:\n";
    for (const auto& [e, category] : inventory) {
      out << "  [" << to_string(category) << "] gold=" << e.entry.gold.code() << " tag=" << e.tag.label() << " words="
          << e.word_count << " \"" << e.entry.text << "\"\n";
    }
  }
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["languages"] = nlohmann::json::array();
  for (const auto& lang : report.languages) j["languages"].push_back(lang.code());

  const auto counters_json = [](const EvalCounters& c) {
    return nlohmann::json{{"sentences", c.sentences},
                          {"unique_correct", c.unique_correct},
                          {"unique_wrong", c.unique_wrong},
                          {"ambiguous", c.ambiguous},
                          {"undetermined", c.undetermined}};
  };

  j["per_language"] = nlohmann::json::object();
  for (const auto& [lang, c] : report.per_language) j["per_language"][lang.code()] = counters_json(c);

  j["by_length"] = nlohmann::json::object();
  for (const auto& [bucket, c] : report.by_length) {
    const std::string key = bucket >= kTopBucket ? "21+" : std::to_string(bucket);
    j["by_length"][key] = counters_json(c);
  }

  j["decisive_length"] = nlohmann::json::object();
  for (const auto& [lang, v] : report.decisive_length) j["decisive_length"][lang.code()] = v;

  j["grammatical_density"] = nlohmann::json::object();
  for (const auto& [lang, v] : report.grammatical_density) j["grammatical_density"][lang.code()] = v;

  j["errors"] = nlohmann::json::array();
  for (const auto& [e, category] : error_inventory(report)) {
    nlohmann::json tag = nlohmann::json::array();
    for (const auto& lang : e.tag.languages) tag.push_back(lang.code());
    j["errors"].push_back({{"text", e.entry.text},
                           {"gold", e.entry.gold.code()},
                           {"tag", tag},
                           {"label", e.tag.label()},
                           {"words", e.word_count},
                           {"unknown_words", e.unknown_words},
                           {"category", std::string(to_string(category))}});
  }
  return j.dump(2);
}

}  // namespace lingtag
