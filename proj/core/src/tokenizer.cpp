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

#include "lingtag/tokenizer.hpp"

#include <algorithm>
#include <istream>
#include <optional>

#include "lingtag/unicode.hpp"

namespace lingtag {

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Root: return "root";
    case SegmentKind::Quote: return "quote";
    case SegmentKind::Parenthesis: return "parenthesis";
    case SegmentKind::Dash: return "dash";
    case SegmentKind::Colon: return "colon";
  }
  return "?";
}

namespace {

constexpr char32_t kEllipsis = 0x2026;
constexpr char32_t kLeftGuillemet = 0x00AB;   // «
constexpr char32_t kRightGuillemet = 0x00BB;  // »
constexpr char32_t kLeftDouble = 0x201C;      // “
constexpr char32_t kRightDouble = 0x201D;     // ”
constexpr char32_t kLowDouble = 0x201E;       // „
constexpr char32_t kLeftSingle = 0x2018;      // ‘
constexpr char32_t kRightSingle = 0x2019;     // ’ (also the curly apostrophe)
constexpr char32_t kLeftAngle = 0x2039;       // ‹
constexpr char32_t kRightAngle = 0x203A;      // ›
constexpr char32_t kEnDash = 0x2013;
constexpr char32_t kEmDash = 0x2014;

bool is_terminator(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?' || cp == kEllipsis; }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == kRightSingle; }

bool is_intra_word_hyphen(char32_t cp) { return cp == U'-' || cp == 0x2010 || cp == 0x2011; }

bool is_dash(char32_t cp) { return cp == kEnDash || cp == kEmDash; }

// Punctuation that can begin a sentence: opening quotes and brackets plus
// the Spanish inverted marks.
bool is_opening_punct(char32_t cp) {
  switch (cp) {
    case U'"':
    case U'\'':
    case U'(':
    case U'[':
    case U'{':
    case kLeftGuillemet:
    case kLeftDouble:
    case kLowDouble:
    case kLeftSingle:
    case kLeftAngle:
    case 0x00BF:  // ¿
    case 0x00A1:  // ¡
      return true;
    default:
      return false;
  }
}

// Punctuation that may trail a terminator and still belong to the sentence.
bool is_closing_wrap(char32_t cp) {
  switch (cp) {
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'}':
    case kRightGuillemet:
    case kRightDouble:
    case kRightSingle:
    case kRightAngle:
      return true;
    default:
      return false;
  }
}

bool is_inline_ws(char32_t cp) {
  return is_whitespace(cp) && cp != U'\n' && cp != U'\r' && cp != 0x2028 && cp != 0x2029;
}

}  // namespace

// --- sentence splitting ----------------------------------------------------

std::vector<Sentence> Tokenizer::split_sentences(const RawDocument& doc) const {
  const auto cps = decode_utf8(doc.text);
  const std::size_t n = cps.size();
  std::vector<Sentence> out;

  const auto byte_at = [&](std::size_t i) -> uint32_t {
    return i < n ? cps[i].offset : static_cast<uint32_t>(doc.text.size());
  };
  const auto skip_ws = [&](std::size_t j) {
    while (j < n && is_whitespace(cps[j].cp)) ++j;
    return j;
  };

  // True when the '.' at index j is an abbreviation dot, an initial, or a
  // decimal point rather than a full stop.
  const auto suppressed_period = [&](std::size_t j) {
    if (j == 0) return false;
    const char32_t prev = cps[j - 1].cp;
    if (is_ascii_digit(prev) && j + 1 < n && is_ascii_digit(cps[j + 1].cp)) return true;
    std::size_t b = j;
    while (b > 0 && (is_letter(cps[b - 1].cp) || is_combining_mark(cps[b - 1].cp))) --b;
    if (b == j) return false;
    if (j - b == 1) return true;  // single letter: initials, dotted acronyms
    const uint32_t from = cps[b].offset;
    const std::string word = canonicalize(std::string_view(doc.text).substr(from, cps[j].offset - from));
    return abbreviations_.contains(word);
  };

  std::size_t i = skip_ws(0);
  while (i < n) {
    const std::size_t start = i;
    std::size_t end = n;    // one past the last cp of the sentence
    std::size_t resume = n; // where to look for the next sentence

    std::size_t j = i;
    while (j < n) {
      const char32_t cp = cps[j].cp;

      if (cp == U'\n') {
        // Blank line: paragraph break, hard boundary.
        std::size_t k = j + 1;
        while (k < n && is_whitespace(cps[k].cp) && cps[k].cp != U'\n') ++k;
        if (k < n && cps[k].cp == U'\n') {
          end = j;
          resume = k + 1;
          break;
        }
        ++j;
        continue;
      }

      if (is_terminator(cp) && !(cp == U'.' && suppressed_period(j))) {
        std::size_t k = j + 1;
        while (k < n && is_terminator(cps[k].cp)) ++k;
        // Closing quotes/brackets stay with the sentence, French spacing
        // included ("mot. »"). An undirected quote glued to following text
        // opens the next sentence instead, so it is not absorbed.
        for (;;) {
          std::size_t t = k;
          while (t < n && is_inline_ws(cps[t].cp)) ++t;
          if (t >= n || !is_closing_wrap(cps[t].cp)) break;
          const bool closes = t + 1 >= n || is_whitespace(cps[t + 1].cp) ||
                              is_closing_wrap(cps[t + 1].cp) || is_terminator(cps[t + 1].cp);
          if (!closes) break;
          k = t + 1;
        }
        const std::size_t m = skip_ws(k);
        if (m == n) {
          end = k;
          resume = n;
          break;
        }
        if (m > k && (is_uppercase(cps[m].cp) || is_opening_punct(cps[m].cp))) {
          end = k;
          resume = m;
          break;
        }
        j = k;
        continue;
      }

      ++j;
    }

    std::size_t e = std::min(end, n);
    while (e > start && is_whitespace(cps[e - 1].cp)) --e;
    if (e > start) {
      const uint32_t b0 = cps[start].offset;
      const uint32_t b1 = byte_at(e);
      out.push_back({doc.text.substr(b0, b1 - b0), {b0, b1}});
    }
    i = skip_ws(std::min(resume, n));
  }
  return out;
}

// --- word tokenization -------------------------------------------------------

std::vector<Token> Tokenizer::tokenize_words(std::string_view unit) {
  const auto cps = decode_utf8(unit);
  const std::size_t n = cps.size();
  std::vector<Token> out;

  const auto byte_at = [&](std::size_t i) -> uint32_t {
    return i < n ? cps[i].offset : static_cast<uint32_t>(unit.size());
  };
  const auto emit = [&](std::size_t b, std::size_t e, TokenKind kind) {
    const uint32_t from = cps[b].offset;
    const std::string surface(unit.substr(from, byte_at(e) - from));
    out.push_back({surface, canonicalize(surface), from, kind});
  };

  std::size_t i = 0;
  while (i < n) {
    const char32_t cp = cps[i].cp;
    if (is_whitespace(cp)) {
      ++i;
      continue;
    }
    if (is_letter(cp)) {
      const std::size_t b = i++;
      while (i < n) {
        const char32_t c = cps[i].cp;
        if (is_letter(c) || is_combining_mark(c)) {
          ++i;
        } else if (is_intra_word_hyphen(c) && i + 1 < n && is_letter(cps[i + 1].cp)) {
          ++i;  // state-of-the-art
        } else {
          break;
        }
      }
      emit(b, i, TokenKind::Word);
      // Clitic apostrophe: split and drop ("l'homme" -> "l", "homme").
      if (i < n && is_apostrophe(cps[i].cp) && i + 1 < n && is_letter(cps[i + 1].cp)) ++i;
      continue;
    }
    if (is_ascii_digit(cp)) {
      const std::size_t b = i++;
      while (i < n) {
        const char32_t c = cps[i].cp;
        if (is_ascii_digit(c)) {
          ++i;
        } else if ((c == U'.' || c == U',' || c == U':') && i + 1 < n && is_ascii_digit(cps[i + 1].cp)) {
          ++i;  // 3.5, 1,000, 3:45
        } else {
          break;
        }
      }
      emit(b, i, TokenKind::Number);
      continue;
    }
    const std::size_t b = i++;
    while (i < n && !is_whitespace(cps[i].cp) && !is_letter(cps[i].cp) && !is_ascii_digit(cps[i].cp)) ++i;
    emit(b, i, TokenKind::Symbol);
  }
  return out;
}

// --- segment tree ------------------------------------------------------------

namespace {

struct OpenerInfo {
  SegmentKind kind;
  char32_t closer_a;
  char32_t closer_b;  // 0 if unused
};

// Scan-time node; converted to SegmentNode once its extent is known.
struct WorkNode {
  SegmentKind kind = SegmentKind::Root;
  char32_t closer_a = 0;
  char32_t closer_b = 0;
  uint32_t open_begin = 0;  // byte range of the opening delimiter
  uint32_t open_end = 0;
  uint32_t gap_start = 0;  // begin of the currently running text gap
  std::vector<Span> gaps;  // closed text gaps owned by this node
  std::vector<SegmentNode> children;
  Span span;
  Span inner;
};

class TreeBuilder {
 public:
  TreeBuilder(std::string_view sentence, std::vector<Diagnostic>& diagnostics)
      : text_(sentence), cps_(decode_utf8(sentence)), diagnostics_(diagnostics) {
    WorkNode root;
    root.kind = SegmentKind::Root;
    root.gap_start = 0;
    stack_.push_back(std::move(root));
  }

  SegmentNode run() {
    const std::size_t n = cps_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const char32_t cp = cps_[i].cp;

      // Apostrophes between letters never open or close anything.
      if ((is_apostrophe(cp) || cp == kLeftSingle) && letter_before(i) && letter_after(i)) continue;

      if (is_dash(cp) && spaced_dash_at(i)) {
        // Dash segments close only on another *spaced* dash, so they carry
        // no closer chars for the generic matcher.
        if (!try_close_dash(i)) open_node(SegmentKind::Dash, i, 0, 0);
        continue;
      }

      if (try_close(cp, i)) continue;

      if (const auto info = opener_at(i)) {
        open_node(info->kind, i, info->closer_a, info->closer_b);
        continue;
      }

      if (cp == U':' && colon_opens_at(i)) {
        open_node(SegmentKind::Colon, i, 0, 0);
        continue;
      }
    }

    // Implicit end of unit: colon segments close, everything else dissolves.
    const auto len = static_cast<uint32_t>(text_.size());
    while (stack_.size() > 1) {
      if (stack_.back().kind == SegmentKind::Colon) {
        close_top(len, len);
      } else {
        dissolve_top();
      }
    }

    WorkNode& root = stack_.back();
    push_gap(root, len);
    root.span = {0, len};
    root.inner = {0, len};
    return assemble(root);
  }

 private:
  bool letter_before(std::size_t i) const {
    return i > 0 && (is_letter(cps_[i - 1].cp) || is_combining_mark(cps_[i - 1].cp));
  }
  bool letter_after(std::size_t i) const { return i + 1 < cps_.size() && is_letter(cps_[i + 1].cp); }

  bool spaced_dash_at(std::size_t i) const {
    const bool before = i == 0 || is_whitespace(cps_[i - 1].cp);
    const bool after = i + 1 < cps_.size() && is_whitespace(cps_[i + 1].cp);
    return before && after;
  }

  // Opening-quote position: after start/whitespace/opening punctuation and
  // glued to following text.
  bool opener_position(std::size_t i) const {
    const bool before = i == 0 || is_whitespace(cps_[i - 1].cp) || is_opening_punct(cps_[i - 1].cp);
    const bool after = i + 1 < cps_.size() && !is_whitespace(cps_[i + 1].cp);
    return before && after;
  }

  std::optional<OpenerInfo> opener_at(std::size_t i) const {
    switch (cps_[i].cp) {
      case kLeftGuillemet: return OpenerInfo{SegmentKind::Quote, kRightGuillemet, 0};
      case kLeftAngle: return OpenerInfo{SegmentKind::Quote, kRightAngle, 0};
      case kLeftDouble: return OpenerInfo{SegmentKind::Quote, kRightDouble, 0};
      case kLowDouble: return OpenerInfo{SegmentKind::Quote, kLeftDouble, kRightDouble};  // „deutsch“
      case U'"': return OpenerInfo{SegmentKind::Quote, U'"', 0};
      case kLeftSingle:
        if (opener_position(i)) return OpenerInfo{SegmentKind::Quote, kRightSingle, 0};
        return std::nullopt;
      case U'\'':
        if (opener_position(i)) return OpenerInfo{SegmentKind::Quote, U'\'', 0};
        return std::nullopt;
      case U'(': return OpenerInfo{SegmentKind::Parenthesis, U')', 0};
      case U'[': return OpenerInfo{SegmentKind::Parenthesis, U']', 0};
      case U'{': return OpenerInfo{SegmentKind::Parenthesis, U'}', 0};
      default: return std::nullopt;
    }
  }

  // A colon opens a segment reaching to the end of the unit when followed by
  // whitespace and then text, unless that text is itself an embedded segment
  // ("dit : « ... »" keeps the quote as the segment) or a colon segment is
  // already open.
  bool colon_opens_at(std::size_t i) const {
    for (const auto& node : stack_) {
      if (node.kind == SegmentKind::Colon) return false;
    }
    if (i + 1 >= cps_.size() || !is_whitespace(cps_[i + 1].cp)) return false;
    std::size_t t = i + 1;
    while (t < cps_.size() && is_whitespace(cps_[t].cp)) ++t;
    if (t == cps_.size()) return false;
    if (opener_at(t) || (is_dash(cps_[t].cp) && spaced_dash_at(t))) return false;
    return true;
  }

  void push_gap(WorkNode& node, uint32_t upto) {
    if (upto > node.gap_start) node.gaps.push_back({node.gap_start, upto});
  }

  void open_node(SegmentKind kind, std::size_t i, char32_t closer_a, char32_t closer_b) {
    const uint32_t at = cps_[i].offset;
    const uint32_t after = at + cps_[i].length;
    push_gap(stack_.back(), at);
    WorkNode node;
    node.kind = kind;
    node.closer_a = closer_a;
    node.closer_b = closer_b;
    node.open_begin = at;
    node.open_end = after;
    node.gap_start = after;
    stack_.push_back(std::move(node));
  }

  // Closes the innermost matching node, dissolving anything opened inside it
  // that never closed. Returns false when cp closes nothing.
  bool try_close(char32_t cp, std::size_t i) {
    if (cp == 0) return false;
    std::size_t target = stack_.size();
    for (std::size_t d = stack_.size(); d-- > 1;) {
      if (stack_[d].closer_a == cp || (stack_[d].closer_b != 0 && stack_[d].closer_b == cp)) {
        target = d;
        break;
      }
    }
    if (target == stack_.size()) return false;
    while (stack_.size() - 1 > target) {
      if (stack_.back().kind == SegmentKind::Colon) {
        close_top(cps_[i].offset, cps_[i].offset);
      } else {
        dissolve_top();
      }
    }
    close_top(cps_[i].offset, cps_[i].offset + cps_[i].length);
    return true;
  }

  bool try_close_dash(std::size_t i) {
    std::size_t target = stack_.size();
    for (std::size_t d = stack_.size(); d-- > 1;) {
      if (stack_[d].kind == SegmentKind::Dash) {
        target = d;
        break;
      }
    }
    if (target == stack_.size()) return false;
    while (stack_.size() - 1 > target) {
      if (stack_.back().kind == SegmentKind::Colon) {
        close_top(cps_[i].offset, cps_[i].offset);
      } else {
        dissolve_top();
      }
    }
    close_top(cps_[i].offset, cps_[i].offset + cps_[i].length);
    return true;
  }

  // inner ends at `content_end`; the node's span ends at `delim_end` (equal
  // when the closer is implicit).
  void close_top(uint32_t content_end, uint32_t delim_end) {
    WorkNode node = std::move(stack_.back());
    stack_.pop_back();
    push_gap(node, content_end);
    node.inner = {node.open_end, content_end};
    node.span = {node.open_begin, delim_end};
    WorkNode& parent = stack_.back();
    parent.children.push_back(assemble(node));
    parent.gap_start = delim_end;
  }

  // Unbalanced opener: fold the node's text and children back into the
  // parent; the delimiter itself becomes parent text.
  void dissolve_top() {
    WorkNode node = std::move(stack_.back());
    stack_.pop_back();
    WorkNode& parent = stack_.back();
    parent.gaps.push_back({node.open_begin, node.open_end});
    for (const Span& g : node.gaps) parent.gaps.push_back(g);
    for (auto& c : node.children) parent.children.push_back(std::move(c));
    parent.gap_start = node.gap_start;
    diagnostics_.push_back({Diagnostic::Code::UnbalancedDelimiter,
                            node.kind,
                            {node.open_begin, node.open_end},
                            std::string("unbalanced ") + std::string(to_string(node.kind)) + " delimiter"});
  }

  SegmentNode assemble(WorkNode& work) {
    SegmentNode node;
    node.kind = work.kind;
    node.span = work.span;
    node.inner = work.inner;
    node.children = std::move(work.children);
    for (const Span& gap : work.gaps) {
      auto tokens = Tokenizer::tokenize_words(text_.substr(gap.begin, gap.length()));
      for (auto& t : tokens) {
        t.offset += gap.begin;
        node.own_tokens.push_back(std::move(t));
      }
    }
    std::sort(node.own_tokens.begin(), node.own_tokens.end(),
              [](const Token& a, const Token& b) { return a.offset < b.offset; });
    return node;
  }

  std::string_view text_;
  std::vector<DecodedChar> cps_;
  std::vector<Diagnostic>& diagnostics_;
  std::vector<WorkNode> stack_;
};

}  // namespace

SegmentParse Tokenizer::build_segment_tree(std::string_view sentence) const {
  SegmentParse parse;
  TreeBuilder builder(sentence, parse.diagnostics);
  parse.root = builder.run();
  return parse;
}

// --- paragraph streaming -----------------------------------------------------

bool ParagraphReader::next(std::string& paragraph, uint64_t& base_offset) {
  paragraph.clear();
  std::string line;
  bool in_paragraph = false;
  while (std::getline(in_, line)) {
    const uint64_t line_pos = pos_;
    pos_ += line.size() + 1;  // getline swallowed one '\n'
    std::string_view content = line;
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    const bool blank = content.find_first_not_of(" \t\f\v") == std::string_view::npos;
    if (blank) {
      if (in_paragraph) return true;
      continue;
    }
    if (!in_paragraph) {
      base_offset = line_pos;
      in_paragraph = true;
    }
    paragraph += line;
    paragraph += '\n';
  }
  return in_paragraph;
}

}  // namespace lingtag
