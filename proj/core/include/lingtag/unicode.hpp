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

#ifndef LINGTAG_UNICODE_H_
#define LINGTAG_UNICODE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal Unicode support for Latin-script text processing. The tables cover
// codepoints below U+2000 (Latin, Greek, Cyrillic and their extensions),
// which is all the classifier needs; everything else passes through
// untouched. No locale state, no ICU.
namespace lingtag {

// One decoded codepoint with its position in the UTF-8 source.
struct DecodedChar {
  char32_t cp;
  uint32_t offset;  // byte offset into the source string
  uint8_t length;   // encoded length in bytes
};

// Decodes UTF-8. Invalid bytes never throw: each offending byte becomes one
// U+FFFD of length 1, so offsets always add up to the input size.
std::vector<DecodedChar> decode_utf8(std::string_view text);

void append_utf8(std::string& out, char32_t cp);

// Simple (1:1) lowercase mapping; identity outside the tables.
char32_t simple_lowercase(char32_t cp);

// True iff simple_lowercase maps cp to a different codepoint.
bool is_uppercase(char32_t cp);

bool is_letter(char32_t cp);
bool is_combining_mark(char32_t cp);
bool is_whitespace(char32_t cp);

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Canonical composition of a base + combining mark pair, or 0 if none.
char32_t compose_pair(char32_t base, char32_t mark);

// The canonical fold used everywhere: compose combining sequences (NFC for
// the covered ranges), then lowercase. Idempotent and total.
std::string canonicalize(std::string_view text);

// Fold for a single codepoint (no composition partner available).
inline char32_t canonicalize_char(char32_t cp) { return simple_lowercase(cp); }

}  // namespace lingtag

#endif  // LINGTAG_UNICODE_H_
