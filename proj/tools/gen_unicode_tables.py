#!/usr/bin/env python3
"""Regenerates core/src/unicode_tables.inc from Python's unicodedata.

Usage: python3 tools/gen_unicode_tables.py > core/src/unicode_tables.inc
"""
import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if pred(cp):
            if start is None:
                start = cp
        elif start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def is_punct(cp):
    return unicodedata.category(chr(cp)).startswith("P")


def fold(cp):
    ch = chr(cp)
    if 0xD800 <= cp <= 0xDFFF:
        return None
    f = ch.casefold()
    if len(f) == 1 and f != ch:
        return ord(f)
    low = ch.lower()
    if len(low) == 1 and low != ch:
        return ord(low)
    return None


def main():
    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n" % unicodedata.unidata_version)
    w("// clang-format off\n")
    w("constexpr CodeRange kPunctuation[] = {\n")
    for lo, hi in ranges(is_punct):
        w("    {0x%04X, 0x%04X},\n" % (lo, hi))
    w("};\n\n")
    w("constexpr CaseMapping kCaseFold[] = {\n")
    for cp in range(MAX_CP):
        t = fold(cp)
        if t is not None:
            w("    {0x%04X, 0x%04X},\n" % (cp, t))
    w("};\n")
    w("// clang-format on\n")


if __name__ == "__main__":
    main()
