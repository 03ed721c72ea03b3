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

#include "lingtag/unicode.hpp"

#include <algorithm>

namespace lingtag {

namespace {
#include "unicode_tables.inc"
}  // namespace

std::vector<DecodedChar> decode_utf8(std::string_view text) {
  std::vector<DecodedChar> out;
  out.reserve(text.size());
  uint32_t i = 0;
  const auto n = static_cast<uint32_t>(text.size());
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    uint32_t cp = 0;
    uint32_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      len = 0;  // stray continuation or invalid lead byte
    }
    bool ok = len > 0 && i + len <= n;
    if (ok) {
      for (uint32_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(text[i + k]);
        if ((b & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (ok) {
      // Reject overlong encodings, surrogates and out-of-range values.
      static constexpr uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
      if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
    }
    if (!ok) {
      out.push_back({0xFFFD, i, 1});
      ++i;
    } else {
      out.push_back({static_cast<char32_t>(cp), i, static_cast<uint8_t>(len)});
      i += len;
    }
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  const auto c = static_cast<uint32_t>(cp);
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

char32_t simple_lowercase(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
  }
  const auto* first = std::begin(kLowerPairs);
  const auto* last = std::end(kLowerPairs);
  const auto* it = std::lower_bound(first, last, cp, [](const CasePair& p, char32_t c) { return p.upper < c; });
  if (it != last && it->upper == cp) return it->lower;
  return cp;
}

bool is_uppercase(char32_t cp) { return simple_lowercase(cp) != cp; }

namespace {

bool in_ranges(const CpRange* first, const CpRange* last, char32_t cp) {
  const auto* it = std::upper_bound(first, last, cp, [](char32_t c, const CpRange& r) { return c < r.first; });
  return it != first && cp <= (it - 1)->last;
}

}  // namespace

bool is_letter(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
  }
  if (cp < 0x2000) {
    return in_ranges(std::begin(kLetterRanges), std::end(kLetterRanges), cp);
  }
  // Coarse classification above the table limit; enough to treat CJK,
  // kana and hangul runs as words rather than symbol soup.
  static constexpr CpRange kHigh[] = {
      {0x2C60, 0x2C7F}, {0x3041, 0x30FF}, {0x3400, 0x4DBF}, {0x4E00, 0x9FFF},
      {0xA720, 0xA7FF}, {0xAC00, 0xD7A3}, {0xF900, 0xFAD9}, {0xFB00, 0xFB17},
  };
  return in_ranges(std::begin(kHigh), std::end(kHigh), cp);
}

bool is_combining_mark(char32_t cp) {
  if (cp < 0x80) return false;
  if (cp < 0x2000) {
    return in_ranges(std::begin(kMarkRanges), std::end(kMarkRanges), cp);
  }
  return (cp >= 0x20D0 && cp <= 0x20FF) || (cp >= 0xFE20 && cp <= 0xFE2F);
}

bool is_whitespace(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x85:    // NEL
    case 0xA0:    // no-break space
    case 0x1680:  // ogham space mark
    case 0x2028:  // line separator
    case 0x2029:  // paragraph separator
    case 0x202F:  // narrow no-break space
    case 0x205F:  // medium mathematical space
    case 0x3000:  // ideographic space
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t compose_pair(char32_t base, char32_t mark) {
  const auto* first = std::begin(kComposePairs);
  const auto* last = std::end(kComposePairs);
  const auto* it = std::lower_bound(first, last, base, [](const ComposePair& p, char32_t c) { return p.base < c; });
  for (; it != last && it->base == base; ++it) {
    if (it->mark == mark) return it->composed;
  }
  return 0;
}

std::string canonicalize(std::string_view text) {
  const auto chars = decode_utf8(text);
  std::vector<char32_t> cps;
  cps.reserve(chars.size());
  for (const auto& dc : chars) {
    if (!cps.empty() && is_combining_mark(dc.cp)) {
      if (const char32_t composed = compose_pair(cps.back(), dc.cp)) {
        cps.back() = composed;
        continue;
      }
    }
    cps.push_back(dc.cp);
  }
  std::string out;
  out.reserve(text.size());
  for (const char32_t cp : cps) append_utf8(out, simple_lowercase(cp));
  return out;
}

}  // namespace lingtag
