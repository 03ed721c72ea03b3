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

#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "support/generators.hpp"

using namespace lingtag;

namespace {

const std::filesystem::path kDataRoot = std::filesystem::path(LINGTAG_DATA_DIR) / "lexicons";

const LexiconSet& shipped() {
  static const LexiconSet lex = load_lexicon_set(
      kDataRoot, {LanguageId("fr"), LanguageId("en"), LanguageId("es"), LanguageId("de")});
  return lex;
}

CorpusEntry entry(const char* code, const char* text) { return {text, LanguageId(code)}; }

bool counters_sum(const EvalCounters& c) {
  return c.sentences == c.unique_correct + c.unique_wrong + c.ambiguous + c.undetermined;
}

}  // namespace

TEST_CASE("evaluate: basic outcomes") {
  const auto& lex = shipped();
  const std::vector<CorpusEntry> corpus = {
      // 12 words, rich in French grammatical words.
      entry("fr", "Il ne savait pas où elle avait mis les clefs de la maison."),
      // No evidence at all.
      entry("en", "ok"),
      // Unique but wrong: French function words labeled as English.
      entry("en", "le la et dans pour avec"),
  };
  const EvalReport report = evaluate(lex, corpus);

  const auto& fr = report.per_language.at(LanguageId("fr"));
  CHECK(fr.sentences == 1);
  CHECK(fr.unique_correct == 1);
  CHECK(report.decisive_length.at(LanguageId("fr")) <= 12);

  const auto& en = report.per_language.at(LanguageId("en"));
  CHECK(en.sentences == 2);
  CHECK(en.undetermined == 1);
  CHECK(en.unique_wrong == 1);
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].tag.label() == "fr");

  for (const auto& [lang, c] : report.per_language) CHECK(counters_sum(c));
  for (const auto& [bucket, c] : report.by_length) CHECK(counters_sum(c));
}

TEST_CASE("evaluate: usage errors") {
  const auto& lex = shipped();
  CHECK_THROWS_AS(evaluate(lex, {}), UsageError);
  try {
    evaluate(lex, {entry("it", "ciao a tutti")});
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("it") != std::string::npos);
  }
}

TEST_CASE("evaluate: grammatical density on a known sentence") {
  const auto& lex = shipped();
  // words: le chat dort -> only "le" is in the French lexicon.
  const EvalReport report = evaluate(lex, {entry("fr", "le chat dort")});
  CHECK(report.grammatical_density.at(LanguageId("fr")) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("evaluate: counter arithmetic on random corpora") {
  const auto& lex = shipped();
  const auto pool = lingtag::testing::word_pool(lex);
  lingtag::testing::Rng rng(555);
  for (int round = 0; round < 20; ++round) {
    std::vector<CorpusEntry> corpus;
    const std::size_t n = 1 + lingtag::testing::pick(rng, 60);
    for (std::size_t i = 0; i < n; ++i) {
      std::string text;
      const std::size_t words = lingtag::testing::pick(rng, 15);
      for (std::size_t w = 0; w < words; ++w) {
        if (!text.empty()) text += ' ';
        text += (lingtag::testing::pick(rng, 2) == 0) ? pool[lingtag::testing::pick(rng, pool.size())]
                                                      : lingtag::testing::random_letter_word(rng);
      }
      if (text.empty()) text = "...";
      const auto& lang = lex.languages()[lingtag::testing::pick(rng, lex.size())];
      corpus.push_back({text, lang});
    }
    const EvalReport report = evaluate(lex, corpus);

    uint64_t total = 0;
    for (const auto& [lang, c] : report.per_language) {
      CHECK(counters_sum(c));
      total += c.sentences;
    }
    CHECK(total == corpus.size());
    uint64_t by_len_total = 0;
    for (const auto& [bucket, c] : report.by_length) {
      CHECK(counters_sum(c));
      by_len_total += c.sentences;
    }
    CHECK(by_len_total == corpus.size());
    CHECK(report.errors.size() <= corpus.size());
  }
}

TEST_CASE("evaluate: sharding does not change the report") {
  const auto& lex = shipped();
  const auto pool = lingtag::testing::word_pool(lex);
  lingtag::testing::Rng rng(31415);
  std::vector<CorpusEntry> corpus;
  for (int i = 0; i < 120; ++i) {
    std::string text;
    for (int w = 0; w < 8; ++w) {
      if (!text.empty()) text += ' ';
      text += pool[lingtag::testing::pick(rng, pool.size())];
    }
    corpus.push_back({text, lex.languages()[i % lex.size()]});
  }
  const std::string a = report_to_json(evaluate(lex, corpus, 1));
  const std::string b = report_to_json(evaluate(lex, corpus, 4));
  const std::string c = report_to_json(evaluate(lex, corpus, 7));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("decisive length is monotone when gold evidence is added") {
  const auto& lex = shipped();
  lingtag::testing::Rng rng(777);

  // Gold-only corpora: words drawn from the gold lexicon plus unknown noise.
  std::map<std::string, std::vector<std::string>> gold_words;
  for (std::size_t i = 0; i < lex.size(); ++i) {
    const auto& lang = lex.languages()[i];
    for (const auto& w : lex.lexicon_at(i).words) {
      bool unique = true;
      for (std::size_t k = 0; k < lex.size(); ++k) {
        if (k != i && lex.contains_word(k, w)) unique = false;
      }
      if (unique && w.size() >= 2) gold_words[lang.code()].push_back(w);
    }
  }

  std::vector<CorpusEntry> corpus;
  std::vector<CorpusEntry> boosted;
  for (int i = 0; i < 200; ++i) {
    const auto& lang = lex.languages()[i % lex.size()];
    const auto& uniques = gold_words[lang.code()];
    std::string text;
    const std::size_t words = 1 + lingtag::testing::pick(rng, 10);
    for (std::size_t w = 0; w < words; ++w) {
      if (!text.empty()) text += ' ';
      if (lingtag::testing::pick(rng, 2) == 0) {
        text += uniques[lingtag::testing::pick(rng, uniques.size())];
      } else {
        // ASCII noise: unknown everywhere and free of exclusive characters,
        // so added gold words can only help.
        text += lingtag::testing::random_letter_word(rng, 6, 10, /*ascii_only=*/true);
      }
    }
    corpus.push_back({text, lang});
    std::string more = text;
    for (int k = 0; k < 3; ++k) more += ' ' + uniques[lingtag::testing::pick(rng, uniques.size())];
    boosted.push_back({more, lang});
  }

  const EvalReport before = evaluate(lex, corpus);
  const EvalReport after = evaluate(lex, boosted);
  for (const auto& lang : lex.languages()) {
    CHECK(after.decisive_length.at(lang) <= before.decisive_length.at(lang));
  }
}

TEST_CASE("error inventory categories") {
  const auto& lex = shipped();
  const std::vector<CorpusEntry> corpus = {
      entry("en", "e mail"),            // tagged es, 2 words -> very-short
      entry("en", "Orbi et Urbi"),      // tagged fr, majority unknown -> unexpected-language
      entry("en", "le la et dans pour avec le la"),  // long, all known -> other
  };
  const EvalReport report = evaluate(lex, corpus);
  REQUIRE(report.errors.size() == 3);
  const auto inventory = error_inventory(report);
  REQUIRE(inventory.size() == 3);

  auto category_for = [&](const std::string& text) {
    for (const auto& ce : inventory) {
      if (ce.error.entry.text == text) return ce.category;
    }
    FAIL("missing inventory entry for ", text);
    return ErrorCategory::Other;
  };
  CHECK(category_for("e mail") == ErrorCategory::VeryShort);
  CHECK(category_for("Orbi et Urbi") == ErrorCategory::UnexpectedLanguage);
  CHECK(category_for("le la et dans pour avec le la") == ErrorCategory::Other);

  // Empty error list, empty inventory.
  const EvalReport clean = evaluate(lex, {entry("fr", "le chat est sur le tapis et il dort")});
  CHECK(clean.errors.empty());
  CHECK(error_inventory(clean).empty());
}

TEST_CASE("corpus TSV parsing") {
  std::istringstream in("# comment\nfr\tLe chat dort.\n\nen\tThe cat sleeps.\r\n");
  const auto corpus = load_corpus_tsv(in, "<mem>");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].gold.code() == "fr");
  CHECK(corpus[0].text == "Le chat dort.");
  CHECK(corpus[1].text == "The cat sleeps.");

  std::istringstream bad("fr missing tab\n");
  try {
    load_corpus_tsv(bad, "<mem>");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("report JSON schema") {
  const auto& lex = shipped();
  const EvalReport report = evaluate(lex, {
    entry("fr", "Il ne savait pas où elle avait mis les clefs."),
    entry("en", "e mail"),
  });
  const auto j = nlohmann::json::parse(report_to_json(report));
  CHECK(j.at("languages").size() == 4);
  CHECK(j.at("per_language").contains("fr"));
  CHECK(j.at("per_language").at("fr").at("unique_correct") == 1);
  CHECK(j.at("by_length").is_object());
  CHECK(j.at("decisive_length").contains("fr"));
  CHECK(j.at("grammatical_density").contains("fr"));
  REQUIRE(j.at("errors").size() == 1);
  CHECK(j.at("errors")[0].at("category") == "very-short");
  CHECK(j.at("errors")[0].at("label") == "es");
}
