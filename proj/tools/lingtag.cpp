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

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lingtag/classifier.hpp"
#include "lingtag/evaluator.hpp"
#include "lingtag/lexicon.hpp"
#include "lingtag/tokenizer.hpp"
#include "lingtag/unicode.hpp"

namespace {

using namespace lingtag;

enum class Format { Plain, Tsv, Jsonl };

struct TagOptions {
  Format format = Format::Plain;
  bool emit_segments = false;
  bool emit_scores = false;
  std::vector<LanguageId> languages;
};

std::string scores_csv(const LikelihoodVector& v, const std::vector<LanguageId>& languages) {
  std::string out;
  for (std::size_t i = 0; i < languages.size(); ++i) {
    if (i > 0) out += ',';
    out += languages[i].code();
    out += ':';
    out += std::to_string(v.scores[i]);
  }
  return out;
}

void write_plain_node(std::ostream& out, const TaggedTree& node, uint32_t base, int depth,
                      const TagOptions& opt) {
  for (int i = 0; i < depth; ++i) out << "  ";
  if (depth > 0) out << to_string(node.kind) << ' ';
  out << (base + node.span.begin) << ".." << (base + node.span.end) << '\t' << node.tag.label() << "\twords="
      << node.total_word_count();
  if (opt.emit_scores) out << "\tscores=" << scores_csv(node.likelihood, opt.languages);
  out << '\n';
  if (opt.emit_segments) {
    for (const auto& child : node.children) write_plain_node(out, child, base, depth + 1, opt);
  }
}

void write_tsv_node(std::ostream& out, std::size_t index, const TaggedTree& node, uint32_t base, int depth,
                    const TagOptions& opt) {
  out << index << '\t' << depth << '\t' << to_string(node.kind) << '\t' << (base + node.span.begin) << '\t'
      << (base + node.span.end) << '\t' << node.tag.label() << '\t' << node.total_word_count();
  if (opt.emit_scores) out << '\t' << scores_csv(node.likelihood, opt.languages);
  out << '\n';
  if (opt.emit_segments) {
    for (const auto& child : node.children) write_tsv_node(out, index, child, base, depth + 1, opt);
  }
}

nlohmann::json node_to_json(const TaggedTree& node, uint32_t base, const TagOptions& opt) {
  nlohmann::json j;
  j["start"] = base + node.span.begin;
  j["end"] = base + node.span.end;
  j["kind"] = std::string(to_string(node.kind));
  j["tag"] = node.tag.label();
  nlohmann::json langs = nlohmann::json::array();
  for (const auto& lang : node.tag.languages) langs.push_back(lang.code());
  j["languages"] = langs;
  j["words"] = node.total_word_count();
  if (opt.emit_scores) {
    nlohmann::json scores = nlohmann::json::object();
    for (std::size_t i = 0; i < opt.languages.size(); ++i) {
      scores[opt.languages[i].code()] = node.likelihood.scores[i];
    }
    j["scores"] = scores;
  }
  if (opt.emit_segments) {
    nlohmann::json children = nlohmann::json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child, base, opt));
    j["segments"] = children;
  }
  return j;
}

void write_record(std::ostream& out, std::size_t index, const TaggedSentence& ts, const TagOptions& opt) {
  const uint32_t base = ts.sentence.span.begin;
  switch (opt.format) {
    case Format::Plain:
      write_plain_node(out, ts.tree, base, 0, opt);
      break;
    case Format::Tsv:
      write_tsv_node(out, index, ts.tree, base, 0, opt);
      break;
    case Format::Jsonl: {
      nlohmann::json j = node_to_json(ts.tree, base, opt);
      j["index"] = index;
      out << j.dump() << '\n';
      break;
    }
  }
}

void report_diagnostics(const std::string& source, const TaggedSentence& ts) {
  for (const auto& d : ts.diagnostics) {
    std::cerr << "lingtag: warning: " << source << ": sentence " << ts.sentence.span.begin << ".."
              << ts.sentence.span.end << ": " << d.message << " at " << d.span.begin << ".." << d.span.end
              << '\n';
  }
}

std::vector<TaggedSentence> process_paragraph(const LexiconSet& lex, const Tokenizer& tokenizer,
                                              std::string paragraph, uint64_t base,
                                              const std::string& source) {
  auto tagged = classify_document(lex, tokenizer, RawDocument{std::move(paragraph), source});
  for (auto& ts : tagged) {
    ts.sentence.span.begin += static_cast<uint32_t>(base);
    ts.sentence.span.end += static_cast<uint32_t>(base);
  }
  return tagged;
}

int run_tag(const LexiconSet& lex, std::istream& in, const std::string& source, const TagOptions& opt,
            unsigned workers) {
  const Tokenizer tokenizer(lex.abbreviations());
  ParagraphReader reader(in);
  std::size_t index = 0;

  const auto drain = [&](std::vector<TaggedSentence> tagged) {
    for (const auto& ts : tagged) {
      report_diagnostics(source, ts);
      write_record(std::cout, index++, ts, opt);
    }
  };

  std::string paragraph;
  uint64_t base = 0;
  if (workers <= 1) {
    while (reader.next(paragraph, base)) {
      drain(process_paragraph(lex, tokenizer, paragraph, base, source));
    }
  } else {
    // Sentence order is preserved: tasks are drained strictly in submission
    // order, with a bounded window for bounded memory.
    std::deque<std::future<std::vector<TaggedSentence>>> window;
    while (reader.next(paragraph, base)) {
      window.push_back(std::async(std::launch::async, process_paragraph, std::cref(lex), std::cref(tokenizer),
                                  paragraph, base, source));
      if (window.size() >= 2 * workers) {
        drain(window.front().get());
        window.pop_front();
      }
    }
    while (!window.empty()) {
      drain(window.front().get());
      window.pop_front();
    }
  }
  if (in.bad()) throw IoError("read failure on " + source);
  std::cout.flush();
  if (!std::cout) throw IoError("write failure on standard output");
  return 0;
}

int run_lexicon_check(const std::filesystem::path& root, const std::vector<LanguageId>& languages) {
  const LexiconSet lex = load_lexicon_set(root, languages);

  std::cout << "language  words  alphabet  exclusive characters\n";
  for (const auto& lang : lex.languages()) {
    const auto& words = lex.lexicon(lang).words;
    const auto& alphabet = lex.alphabet(lang).letters;
    std::set<char32_t> exclusive;
    for (const auto& [c, owner] : lex.exclusive_index()) {
      if (lex.languages()[owner] == lang) exclusive.insert(c);
    }
    std::string chars;
    for (const char32_t c : exclusive) {
      if (!chars.empty()) chars += ' ';
      append_utf8(chars, c);
    }
    std::printf("%-8s  %5zu  %8zu  %s\n", lang.code().c_str(), words.size(), alphabet.size(), chars.c_str());
    if (words.empty()) {
      std::cerr << "lingtag: warning: language '" << lang.code() << "' has an empty word list\n";
    }
  }

  // Words shared between lexicons never discriminate on their own; worth
  // eyeballing when tuning the lists.
  std::map<std::string, std::vector<std::string>> shared;
  for (const auto& lang : lex.languages()) {
    for (const auto& w : lex.lexicon(lang).words) shared[w].push_back(lang.code());
  }
  std::size_t n_shared = 0;
  for (const auto& [w, langs] : shared) {
    if (langs.size() >= 2) ++n_shared;
  }
  std::cout << "\ncross-language duplicate words: " << n_shared << "\n";
  for (const auto& [w, langs] : shared) {
    if (langs.size() < 2) continue;
    std::cout << "  " << w << ":";
    std::vector<std::string> sorted = langs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& code : sorted) std::cout << ' ' << code;
    std::cout << '\n';
  }
  return 0;
}

int run_evaluate(const LexiconSet& lex, const std::filesystem::path& corpus_path,
                 const std::string& report_json, unsigned workers) {
  const auto corpus = load_corpus_tsv(corpus_path);
  const EvalReport report = evaluate(lex, corpus, workers);
  print_report(std::cout, report);
  if (!report_json.empty()) {
    std::ofstream out(report_json, std::ios::binary);
    if (!out) throw IoError("cannot open " + report_json + " for writing");
    out << report_to_json(report) << '\n';
    if (!out) throw IoError("write failure on " + report_json);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tags each sentence (and embedded segment) of multilingual text with its likely languages"};
  app.require_subcommand(1);

  std::string lexicon_root;
  std::string languages_csv = "fr,en,es,de";
  std::string input_path = "-";
  std::string format_name = "plain";
  std::string corpus_path;
  std::string report_json;
  bool emit_segments = false;
  bool emit_scores = false;
  unsigned workers = 1;

  CLI::App* tag = app.add_subcommand("tag", "Tag sentences of a text file or standard input");
  tag->add_option("input", input_path, "Input file ('-' for standard input)");
  tag->add_option("--lexicon-root", lexicon_root, "Directory with per-language data files")->required();
  tag->add_option("--languages", languages_csv, "Comma-separated language codes")->capture_default_str();
  tag->add_option("--format", format_name, "Output format")->capture_default_str()
      ->check(CLI::IsMember({"plain", "tsv", "jsonl"}));
  tag->add_flag("--segments", emit_segments, "Also emit embedded segment records");
  tag->add_flag("--scores", emit_scores, "Emit the per-language likelihood scores");
  tag->add_option("--workers", workers, "Worker threads (order-preserving)")->capture_default_str();

  CLI::App* eval = app.add_subcommand("evaluate", "Run the classifier over a labeled corpus");
  eval->add_option("--corpus", corpus_path, "TSV corpus: <lang-code>\\t<sentence>")->required();
  eval->add_option("--lexicon-root", lexicon_root, "Directory with per-language data files")->required();
  eval->add_option("--languages", languages_csv, "Comma-separated language codes")->capture_default_str();
  eval->add_option("--report-json", report_json, "Write the machine-readable report here");
  eval->add_option("--workers", workers, "Worker threads")->capture_default_str();

  CLI::App* check = app.add_subcommand("lexicon-check", "Validate data files and print lexicon statistics");
  check->add_option("--lexicon-root", lexicon_root, "Directory with per-language data files")->required();
  check->add_option("--languages", languages_csv, "Comma-separated language codes")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::vector<LanguageId> languages = parse_language_list(languages_csv);

    if (check->parsed()) return run_lexicon_check(lexicon_root, languages);

    const LexiconSet lex = load_lexicon_set(lexicon_root, languages);

    if (eval->parsed()) return run_evaluate(lex, corpus_path, report_json, workers);

    TagOptions opt;
    opt.languages = lex.languages();
    opt.emit_segments = emit_segments;
    opt.emit_scores = emit_scores;
    if (format_name == "tsv") opt.format = Format::Tsv;
    if (format_name == "jsonl") opt.format = Format::Jsonl;

    if (input_path == "-") {
      return run_tag(lex, std::cin, "<stdin>", opt, workers);
    }
    std::ifstream in(input_path, std::ios::binary);
    if (!in) throw IoError("cannot open " + input_path);
    return run_tag(lex, in, input_path, opt, workers);
  } catch (const ParseError& e) {
    std::cerr << "lingtag: error: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "lingtag: error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "lingtag: error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "lingtag: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lingtag: error: " << e.what() << '\n';
    return 1;
  }
}
