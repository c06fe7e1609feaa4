#!/usr/bin/env python3
"""Regenerates include/curate/detail/unicode_tables.hpp from Python's unicodedata."""
import sys
import unicodedata

MAX = 0x110000


def is_word(cp):
    return unicodedata.category(chr(cp))[0] in "LN"


def ranges(pred):
    out, start = [], None
    for cp in range(MAX):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX - 1))
    return out


def main(path):
    word = ranges(is_word)
    lower = []
    for cp in range(0x80, MAX):
        if not is_word(cp):
            continue
        lo = chr(cp).lower()
        if lo != chr(cp):
            lower.append((cp, lo))
    with open(path, "w", encoding="utf-8") as f:
        f.write("// Generated by tools/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
                % unicodedata.unidata_version)
        f.write("#pragma once\n\n#include <array>\n#include <cstdint>\n#include <string_view>\n\n")
        f.write("namespace curate::detail {\n\n")
        f.write("struct CodepointRange {\n  char32_t first;\n  char32_t last;\n};\n\n")
        f.write("struct LowerMapping {\n  char32_t from;\n  std::string_view to;\n};\n\n")
        f.write("// Letter (L*) and number (N*) categories, non-ASCII part included.\n")
        f.write("inline constexpr std::array<CodepointRange, %d> kWordRanges{{\n" % len(word))
        for a, b in word:
            f.write("    {0x%X, 0x%X},\n" % (a, b))
        f.write("}};\n\n")
        f.write("// Full lowercase mapping for non-ASCII word characters, sorted by codepoint.\n")
        f.write("inline constexpr std::array<LowerMapping, %d> kLowerMappings{{\n" % len(lower))
        for cp, lo in lower:
            esc = "".join("\\x%02X" % b for b in lo.encode("utf-8"))
            f.write('    {0x%X, "%s"},\n' % (cp, esc))
        f.write("}};\n\n}  // namespace curate::detail\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/curate/detail/unicode_tables.hpp")
