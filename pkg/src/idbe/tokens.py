"""Lexical front-end: split a byte stream into word and single-byte tokens.

A word is a maximal run of ASCII letters; every other byte stands alone.
Concatenating the token bytes always reproduces the input exactly, which is
what makes the dictionary transforms lossless.
"""

import re
from typing import Iterator, NamedTuple

WORD = "word"
SINGLE = "single"

# Maximal ASCII letter runs.  Digits, apostrophes, hyphens and bytes >= 128
# are deliberately excluded: dictionary entries are plain words.
_WORD_RE = re.compile(rb"[A-Za-z]+")


class Token(NamedTuple):
    kind: str
    data: bytes


def letter_runs(data: bytes) -> Iterator[tuple[int, int]]:
    """Yield (start, end) spans of maximal ASCII letter runs."""
    for m in _WORD_RE.finditer(data):
        yield m.span()


def tokenize(data: bytes) -> list[Token]:
    """Split ``data`` into Word and Single tokens.

    Total function: any byte sequence tokenizes, and
    ``b"".join(t.data for t in tokenize(data)) == data``.
    """
    tokens: list[Token] = []
    pos = 0
    for start, end in letter_runs(data):
        for i in range(pos, start):
            tokens.append(Token(SINGLE, data[i : i + 1]))
        tokens.append(Token(WORD, data[start:end]))
        pos = end
    for i in range(pos, len(data)):
        tokens.append(Token(SINGLE, data[i : i + 1]))
    return tokens
