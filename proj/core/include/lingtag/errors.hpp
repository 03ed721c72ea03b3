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

#ifndef LINGTAG_ERRORS_H_
#define LINGTAG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lingtag {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad setup: missing data files, unknown or duplicate language codes, an
// empty language set. Maps to exit status 2 in the CLI.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed content in an otherwise readable data file. Carries file and
// line in the message.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what), file_(file), line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// API misuse: querying an unconfigured language, evaluating an empty corpus.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Read or write failure on streams and files. Maps to exit status 1.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lingtag

#endif  // LINGTAG_ERRORS_H_
