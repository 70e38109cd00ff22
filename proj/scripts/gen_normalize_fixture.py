#!/usr/bin/env python3
# Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/fixtures/normalize_cases.tsv.

Expected values for the text normalizer (per-codepoint lowercase, then NFC)
are produced with Python's unicodedata so the C++ implementation is checked
against an independent source. Every code point used here predates Unicode
13.0, and normalization of encoded characters is stable across versions, so
the fixture does not depend on the exact Unicode version of either side.

Fields are space-separated hex code points; an empty string is the literal
token "-". Run from the repository root:

    python3 scripts/gen_normalize_fixture.py
"""

import os
import unicodedata

CASES = [
    # Ukrainian / Russian text, composed and decomposed, mixed case.
    "ми тут працюєм",
    "Ми Тут Працюєм",
    "ми тебе устроїм",
    unicodedata.normalize("NFD", "ми тебе устроїм"),
    unicodedata.normalize("NFD", "МИ ТЕБЕ УСТРОЇМ"),
    "ї",              # і + combining diaeresis -> ї
    "Ї",              # uppercase base, same composition after lowering
    "й",              # и + combining breve -> й
    "Ёта",            # Ё decomposed, mid-word
    "подвів",
    "ВООБЩЕМ УЖЕ, ДА, ДВАДЦЯТЬ",
    "м'ясо — смачне",
    "самі сієм",
    # Combining-class reordering: dot below (220) must sort before acute (230).
    "ạ́",
    "ạ́",
    "ӧ̣",
    # Singleton decompositions.
    "Å",               # angstrom sign -> å
    "Ω",               # ohm sign -> ω
    # Hangul (algorithmic composition path).
    "각",
    # Latin with precomposed and decomposed accents.
    "Café", "Café",
    # Greek (per-codepoint lowering: no final-sigma context rule).
    "ΛΌΓΟΣ",
    # ASCII and degenerate inputs.
    "hello, world",
    "",
    " \t ",
    "123 456",
    # Lone combining mark and mark with no composite pairing.
    "̈",
    "x̨́",
]


def expected(s: str) -> str:
    return unicodedata.normalize("NFC", "".join(c.lower() for c in s))


def cps(s: str) -> str:
    return " ".join(f"{ord(c):04x}" for c in s) if s else "-"


def main() -> None:
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out_path = os.path.join(root, "tests", "fixtures", "normalize_cases.tsv")
    with open(out_path, "w", encoding="utf-8") as out:
        out.write("# input_cps\texpected_cps (hex code points; '-' = empty)\n")
        for case in CASES:
            out.write(f"{cps(case)}\t{cps(expected(case))}\n")
    print(f"wrote {out_path} ({len(CASES)} cases)")


if __name__ == "__main__":
    main()
