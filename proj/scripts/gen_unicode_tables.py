#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from the Python unicodedata database.

The runtime only needs Latin, Greek and Cyrillic coverage, so the tables are
cut off at U+2000. Run from the repository root:

    python3 scripts/gen_unicode_tables.py > core/src/unicode_tables.inc
"""

import sys
import unicodedata

LIMIT = 0x2000


def composition_pairs():
    """All canonical two-codepoint compositions with a composed char < LIMIT."""
    pairs = []
    for cp in range(0x80, LIMIT):
        ch = chr(cp)
        decomp = unicodedata.decomposition(ch)
        if not decomp or decomp.startswith("<"):
            continue
        parts = decomp.split()
        if len(parts) != 2:
            continue
        a, b = (int(p, 16) for p in parts)
        # Respect composition exclusions: only keep pairs NFC actually recomposes.
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == ch:
            pairs.append((a, b, cp))
    pairs.sort()
    return pairs


def lowercase_pairs():
    """Simple lowercase mappings for non-ASCII codepoints below LIMIT."""
    pairs = []
    for cp in range(0x80, LIMIT):
        low = unicodedata.lookup  # noqa: F841  (keep linters quiet)
        lowered = chr(cp).lower()
        if len(lowered) == 1 and lowered != chr(cp):
            pairs.append((cp, ord(lowered)))
    # U+1E9E LATIN CAPITAL LETTER SHARP S lives above LIMIT but matters for German.
    pairs.append((0x1E9E, 0x00DF))
    pairs.sort()
    return pairs


def letter_ranges():
    """Merged codepoint ranges whose category is a letter, below LIMIT."""
    ranges = []
    start = None
    for cp in range(0x80, LIMIT + 1):
        is_letter = cp < LIMIT and unicodedata.category(chr(cp)).startswith("L")
        if is_letter and start is None:
            start = cp
        elif not is_letter and start is not None:
            ranges.append((start, cp - 1))
            start = None
    return ranges


def mark_ranges():
    ranges = []
    start = None
    for cp in range(0x80, LIMIT + 1):
        is_mark = cp < LIMIT and unicodedata.category(chr(cp)).startswith("M")
        if is_mark and start is None:
            start = cp
        elif not is_mark and start is not None:
            ranges.append((start, cp - 1))
            start = None
    return ranges


def emit(out):
    out.write("// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.\n")
    out.write("// Coverage: codepoints below U+2000 plus U+1E9E.\n\n")

    comp = composition_pairs()
    out.write("struct ComposePair { char32_t base; char32_t mark; char32_t composed; };\n")
    out.write(f"inline constexpr ComposePair kComposePairs[{len(comp)}] = {{\n")
    for i in range(0, len(comp), 4):
        row = comp[i : i + 4]
        out.write("  " + " ".join(f"{{0x{a:04X},0x{b:04X},0x{c:04X}}}," for a, b, c in row) + "\n")
    out.write("};\n\n")

    low = lowercase_pairs()
    out.write("struct CasePair { char32_t upper; char32_t lower; };\n")
    out.write(f"inline constexpr CasePair kLowerPairs[{len(low)}] = {{\n")
    for i in range(0, len(low), 6):
        row = low[i : i + 6]
        out.write("  " + " ".join(f"{{0x{a:04X},0x{b:04X}}}," for a, b in row) + "\n")
    out.write("};\n\n")

    letters = letter_ranges()
    out.write("struct CpRange { char32_t first; char32_t last; };\n")
    out.write(f"inline constexpr CpRange kLetterRanges[{len(letters)}] = {{\n")
    for i in range(0, len(letters), 6):
        row = letters[i : i + 6]
        out.write("  " + " ".join(f"{{0x{a:04X},0x{b:04X}}}," for a, b in row) + "\n")
    out.write("};\n\n")

    marks = mark_ranges()
    out.write(f"inline constexpr CpRange kMarkRanges[{len(marks)}] = {{\n")
    for i in range(0, len(marks), 6):
        row = marks[i : i + 6]
        out.write("  " + " ".join(f"{{0x{a:04X},0x{b:04X}}}," for a, b in row) + "\n")
    out.write("};\n")


if __name__ == "__main__":
    emit(sys.stdout)
