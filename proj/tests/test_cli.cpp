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

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

const std::string kCli = LINGTAG_CLI_PATH;
const std::string kLexicons = (fs::path(LINGTAG_DATA_DIR) / "lexicons").string();

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

// Runs a shell command, capturing stdout/stderr and the exit status.
RunResult run(const std::string& args, const std::string& stdin_text = "", bool has_stdin = false) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const std::string id = std::to_string(::getpid()) + "-" + std::to_string(counter++);
  const fs::path err_file = dir / ("lingtag-cli-err-" + id);
  const fs::path in_file = dir / ("lingtag-cli-in-" + id);

  std::string cmd = kCli + " " + args + " 2>" + err_file.string();
  if (has_stdin) {
    std::ofstream in(in_file, std::ios::binary);
    in << stdin_text;
    in.close();
    cmd += " <" + in_file.string();
  } else {
    cmd += " </dev/null";
  }

  RunResult result;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
  const int rc = ::pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

  std::ifstream err(err_file, std::ios::binary);
  std::stringstream ss;
  ss << err.rdbuf();
  result.err = ss.str();
  fs::remove(err_file);
  fs::remove(in_file);
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string common() { return "--lexicon-root " + kLexicons + " "; }

const std::string kBilingual = "Le chat est sur le tapis et il dort.\n\nThe cat sat on the mat all day.\n";

}  // namespace

TEST_CASE("tag: tsv records for a bilingual input") {
  const auto r = run("tag " + common() + "--format tsv", kBilingual, true);
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("\tfr\t") != std::string::npos);
  CHECK(lines[1].find("\ten\t") != std::string::npos);
}

TEST_CASE("tag: empty input yields no records and exit 0") {
  const auto r = run("tag " + common(), "", true);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
}

TEST_CASE("tag: unknown language code exits 2 and names it") {
  const auto r = run("tag " + common() + "--languages fr,xx", "whatever", true);
  CHECK(r.status == 2);
  CHECK(r.err.find("xx") != std::string::npos);
}

TEST_CASE("tag: missing input file exits 1") {
  const auto r = run("tag " + common() + "/no/such/file.txt");
  CHECK(r.status == 1);
}

TEST_CASE("tag: jsonl lines parse and agree with the other formats") {
  const auto jsonl = run("tag " + common() + "--format jsonl", kBilingual, true);
  REQUIRE(jsonl.status == 0);
  const auto lines = lines_of(jsonl.out);
  REQUIRE(lines.size() == 2);

  std::vector<std::string> jsonl_tags;
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);  // every line parses alone
    jsonl_tags.push_back(j.at("tag"));
    CHECK(j.at("languages").is_array());
    CHECK(j.at("words").is_number());
  }

  const auto tsv = run("tag " + common() + "--format tsv", kBilingual, true);
  std::vector<std::string> tsv_tags;
  for (const auto& line : lines_of(tsv.out)) {
    std::istringstream ss(line);
    std::string field;
    for (int i = 0; i < 6; ++i) std::getline(ss, field, '\t');
    tsv_tags.push_back(field);
  }

  const auto plain = run("tag " + common() + "--format plain", kBilingual, true);
  std::vector<std::string> plain_tags;
  for (const auto& line : lines_of(plain.out)) {
    std::istringstream ss(line);
    std::string field;
    std::getline(ss, field, '\t');
    std::getline(ss, field, '\t');
    plain_tags.push_back(field);
  }

  CHECK(jsonl_tags == tsv_tags);
  CHECK(jsonl_tags == plain_tags);
}

TEST_CASE("tag: --segments and --scores") {
  const std::string text = "Il a dit que « the cat sat on the mat » était une bonne phrase.\n";
  const auto r = run("tag " + common() + "--format jsonl --segments --scores", text, true);
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  const auto j = nlohmann::json::parse(lines[0]);
  CHECK(j.at("tag") == "fr");
  REQUIRE(j.at("segments").size() == 1);
  CHECK(j.at("segments")[0].at("tag") == "en");
  CHECK(j.at("segments")[0].at("kind") == "quote");
  const auto& scores = j.at("scores");
  CHECK(scores.size() == 4);
  CHECK(scores.at("fr").get<int>() > scores.at("en").get<int>());
}

TEST_CASE("tag: spans address the original document bytes across paragraphs") {
  const std::string text = "Le chat dort ici. Il ne bouge pas.\n\n\nThe dog sat on the old mat.\n";
  const auto r = run("tag " + common() + "--format jsonl", text, true);
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    const std::size_t start = j.at("start");
    const std::size_t end = j.at("end");
    REQUIRE(end <= text.size());
    const std::string slice = text.substr(start, end - start);
    // The span reproduces exactly the sentence the record describes.
    CHECK(slice.find_first_of('\n') == std::string::npos);
    CHECK(!slice.empty());
    CHECK(slice.front() != ' ');
    CHECK(slice.back() != ' ');
  }
  const auto j0 = nlohmann::json::parse(lines[0]);
  const auto j2 = nlohmann::json::parse(lines[2]);
  CHECK(text.substr(j0.at("start"), int(j0.at("end")) - int(j0.at("start"))) == "Le chat dort ici.");
  CHECK(text.substr(j2.at("start"), int(j2.at("end")) - int(j2.at("start"))) == "The dog sat on the old mat.");
}

TEST_CASE("tag: worker sharding preserves output order") {
  std::string text;
  for (int i = 0; i < 40; ++i) {
    text += (i % 2 == 0) ? "Le chat dort sur le tapis de la maison.\n\n"
                         : "The dog sat on the mat near the door.\n\n";
  }
  const auto serial = run("tag " + common() + "--format tsv", text, true);
  const auto parallel = run("tag " + common() + "--format tsv --workers 4", text, true);
  REQUIRE(serial.status == 0);
  REQUIRE(parallel.status == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("lexicon-check: reports shipped counts") {
  const auto r = run("lexicon-check " + common());
  REQUIRE(r.status == 0);
  CHECK(r.out.find("301") != std::string::npos);
  CHECK(r.out.find("186") != std::string::npos);
  CHECK(r.out.find("204") != std::string::npos);
  CHECK(r.out.find("158") != std::string::npos);
  CHECK(r.out.find("cross-language duplicate words") != std::string::npos);
}

TEST_CASE("lexicon-check: parse failure exits 2 with file and line") {
  const fs::path root = fs::temp_directory_path() / ("lingtag-badlex-" + std::to_string(::getpid()));
  fs::create_directories(root / "fr");
  {
    std::ofstream words(root / "fr" / "words.txt");
    words << "le\ntwo words\n";
    std::ofstream alpha(root / "fr" / "alphabet.txt");
    alpha << "a\n";
  }
  const auto r = run("lexicon-check --lexicon-root " + root.string() + " --languages fr");
  CHECK(r.status == 2);
  CHECK(r.err.find("words.txt:2") != std::string::npos);
  fs::remove_all(root);
}

TEST_CASE("lexicon-check: empty word list warns but passes") {
  const fs::path root = fs::temp_directory_path() / ("lingtag-emptylex-" + std::to_string(::getpid()));
  fs::create_directories(root / "fr");
  {
    std::ofstream words(root / "fr" / "words.txt");
    words << "# nothing yet\n";
    std::ofstream alpha(root / "fr" / "alphabet.txt");
    alpha << "a\n";
  }
  const auto r = run("lexicon-check --lexicon-root " + root.string() + " --languages fr");
  CHECK(r.status == 0);
  CHECK(r.err.find("empty word list") != std::string::npos);
  fs::remove_all(root);
}

TEST_CASE("evaluate: report on a small corpus, JSON written") {
  const fs::path corpus = fs::temp_directory_path() / ("lingtag-corpus-" + std::to_string(::getpid()) + ".tsv");
  const fs::path report = fs::temp_directory_path() / ("lingtag-report-" + std::to_string(::getpid()) + ".json");
  {
    std::ofstream out(corpus);
    out << "fr\tIl ne savait pas où elle avait mis les clefs de la maison.\n";
    out << "en\tThe cat sat on the mat and would not move at all.\n";
    out << "es\tNo sé dónde están las llaves de la casa en este momento.\n";
    out << "de\tIch weiß nicht wo die Schlüssel für das alte Haus sind.\n";
  }
  const auto r = run("evaluate " + common() + "--corpus " + corpus.string() + " --report-json " + report.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.find("per language:") != std::string::npos);
  CHECK(r.out.find("decisive") != std::string::npos);

  std::ifstream in(report);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j.at("per_language").at("fr").at("unique_correct") == 1);
  CHECK(j.at("per_language").at("en").at("unique_correct") == 1);
  CHECK(j.at("per_language").at("es").at("unique_correct") == 1);
  CHECK(j.at("per_language").at("de").at("unique_correct") == 1);
  fs::remove(corpus);
  fs::remove(report);
}

TEST_CASE("evaluate: unconfigured gold language exits 2") {
  const fs::path corpus = fs::temp_directory_path() / ("lingtag-badcorpus-" + std::to_string(::getpid()) + ".tsv");
  {
    std::ofstream out(corpus);
    out << "it\tciao a tutti quanti\n";
  }
  const auto r = run("evaluate " + common() + "--corpus " + corpus.string());
  CHECK(r.status == 2);
  CHECK(r.err.find("it") != std::string::npos);
  fs::remove(corpus);
}

TEST_CASE("missing required flag exits 2") {
  const auto r = run("tag");
  CHECK(r.status == 2);
}
