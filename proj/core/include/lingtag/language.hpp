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

#ifndef LINGTAG_LANGUAGE_H_
#define LINGTAG_LANGUAGE_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lingtag/errors.hpp"

namespace lingtag {

// Identifier for one configured natural language. Codes are short lowercase
// ASCII strings, ISO-639-1 style ("fr", "en").
class LanguageId {
 public:
  LanguageId() = default;

  explicit LanguageId(std::string_view code) : code_(code) {
    if (code_.empty() || code_.size() > 8) {
      throw ConfigError("invalid language code: '" + code_ + "'");
    }
    for (const char c : code_) {
      if (c < 'a' || c > 'z') {
        throw ConfigError("invalid language code: '" + code_ + "' (lowercase ASCII letters only)");
      }
    }
  }

  const std::string& code() const { return code_; }

  auto operator<=>(const LanguageId&) const = default;

 private:
  std::string code_;
};

// Parses a comma-separated code list ("fr,en,es,de").
std::vector<LanguageId> parse_language_list(std::string_view csv);

}  // namespace lingtag

#endif  // LINGTAG_LANGUAGE_H_
