"""Star-substitution baseline: same-length, star-heavy word patterns.

Each dictionary word maps to a pattern of equal length over letters and
``*``, assigned in rank order from a fixed enumeration that spends stars as
aggressively as possible: all stars first, then one literal letter, then
two, and so on.  The transform keeps the text length unchanged (bar escape
overhead for literal ``*`` and ESC bytes) but floods it with stars, which
the block-sorting backend squeezes well.
"""

import re
from itertools import combinations, islice, product
from typing import Iterable, Iterator

from .errors import CorruptStreamError
from .tokens import _WORD_RE

ESC = 27
STAR = 42  # b"*"

_LETTERS = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"

# Letter/star runs, or an escape byte plus whatever follows it (if anything).
_DECODE_RE = re.compile(rb"[A-Za-z*]+|\x1b[\x00-\xff]?")


def _patterns(length: int) -> Iterator[bytes]:
    """Enumerate length-``length`` patterns: fewest literal letters first.

    Within one letter count: letter positions advance lexicographically,
    and for fixed positions the letters run a..z then A..Z per slot.
    Every yielded pattern keeps at least one star.
    """
    for letter_count in range(length):
        for positions in combinations(range(length), letter_count):
            for letters in product(_LETTERS, repeat=letter_count):
                pattern = bytearray(b"*" * length)
                for p, ch in zip(positions, letters):
                    pattern[p] = ch
                yield bytes(pattern)


class StarDictionary:
    """Per-length word -> pattern tables plus the reverse lookup."""

    def __init__(self, ranked_words: Iterable[bytes]):
        groups: dict[int, list[bytes]] = {}
        for word in ranked_words:
            groups.setdefault(len(word), []).append(word)
        forward: dict[bytes, bytes] = {}
        reverse: dict[bytes, bytes] = {}
        for length, words in groups.items():
            for word, pattern in zip(words, islice(_patterns(length), len(words))):
                forward[word] = pattern
                reverse[pattern] = word
        self.forward = forward
        self.reverse = reverse

    def __len__(self) -> int:
        return len(self.forward)


def build_star_dictionary(lexicon: list[tuple[bytes, int]]) -> StarDictionary:
    """Assign patterns to a ranked lexicon (rank order within each length)."""
    return StarDictionary([word for word, _freq in lexicon])


def star_encode(data: bytes, sd: StarDictionary) -> bytes:
    """Swap known words for their patterns; escape literal ``*`` and ESC."""
    forward = sd.forward
    out = bytearray()
    pos = 0
    for m in _WORD_RE.finditer(data):
        start, end = m.span()
        if start > pos:
            out += _escape_gap(data[pos:start])
        out += forward.get(m.group(), m.group())
        pos = end
    if pos < len(data):
        out += _escape_gap(data[pos:])
    return bytes(out)


def _escape_gap(chunk: bytes) -> bytes:
    if ESC in chunk:
        chunk = chunk.replace(b"\x1b", b"\x1b\x1b")
    if STAR in chunk:
        chunk = chunk.replace(b"*", b"\x1b*")
    return chunk


def star_decode(data: bytes, sd: StarDictionary) -> bytes:
    """Exact inverse of :func:`star_encode` under the same dictionary."""
    reverse = sd.reverse
    out = bytearray()
    pos = 0
    for m in _DECODE_RE.finditer(data):
        start, end = m.span()
        out += data[pos:start]
        token = m.group()
        if token[0] == ESC:
            if len(token) != 2 or token[1] not in (ESC, STAR):
                raise CorruptStreamError("dangling escape byte", offset=start)
            out.append(token[1])
        elif STAR in token:
            word = reverse.get(token)
            if word is None:
                raise CorruptStreamError(
                    f"starred token {token!r} has no pattern match", offset=start
                )
            out += word
        else:
            out += token
        pos = end
    out += data[pos:]
    return bytes(out)
