"""Frequency-ranked word dictionary and its deterministic codeword scheme.

Words are counted across training text, ranked by descending frequency
(ties broken lexicographically), and each rank maps to a 1..4 byte codeword
over the 218-symbol alphabet 33..250.  Rank 0 gets byte 33, rank 217 gets
byte 250, rank 218 gets the first two-byte code [33, 33], and so on through
four-byte codes: positional base-218 counting, most significant digit first.
"""

from collections import Counter
from typing import Iterable, Sequence

from .errors import DictionaryFormatError, DictionaryOverflowError
from .tokens import letter_runs

CODE_BASE = 33
CODE_ALPHABET_SIZE = 218  # bytes 33..250
MAX_CODE_LENGTH = 4
MIN_WORD_LENGTH = 2

# First rank of each code-length band: 0, 218, 218+218^2, ...
_BAND_START = [0]
for _len in range(1, MAX_CODE_LENGTH + 1):
    _BAND_START.append(_BAND_START[-1] + CODE_ALPHABET_SIZE**_len)
CAPACITY = _BAND_START[-1]

RankedLexicon = list[tuple[bytes, int]]


def _is_word(token: bytes) -> bool:
    return len(token) >= MIN_WORD_LENGTH and all(
        65 <= b <= 90 or 97 <= b <= 122 for b in token
    )


def build_lexicon(training: Iterable[bytes]) -> RankedLexicon:
    """Count words of length >= 2 across ``training`` and rank them.

    Returns (word, frequency) pairs sorted by frequency descending, ties by
    byte-wise ascending word.  Case-sensitive: b"The" and b"the" are
    distinct entries.
    """
    counts: Counter[bytes] = Counter()
    for text in training:
        for start, end in letter_runs(text):
            if end - start >= MIN_WORD_LENGTH:
                counts[text[start:end]] += 1
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def code_for_rank(rank: int) -> bytes:
    """Codeword for a zero-based rank; deterministic and injective."""
    if rank < 0 or rank >= CAPACITY:
        raise DictionaryOverflowError(
            f"rank {rank} exceeds the {CAPACITY}-entry codeword space"
        )
    length = 1
    while rank >= _BAND_START[length]:
        length += 1
    q = rank - _BAND_START[length - 1]
    digits = bytearray(length)
    for i in range(length - 1, -1, -1):
        q, digit = divmod(q, CODE_ALPHABET_SIZE)
        digits[i] = CODE_BASE + digit
    return bytes(digits)


class Dictionary:
    """Bijective word <-> codeword table in rank order.

    Immutable once built; safe to share between concurrent encoders and
    decoders.
    """

    def __init__(self, words: Sequence[bytes]):
        if len(words) > CAPACITY:
            raise DictionaryOverflowError(
                f"{len(words)} words exceed the {CAPACITY}-entry capacity"
            )
        forward: dict[bytes, bytes] = {}
        reverse: dict[bytes, bytes] = {}
        for rank, word in enumerate(words):
            if not _is_word(word):
                raise DictionaryFormatError(
                    f"invalid dictionary word {word!r}: must be >= 2 ASCII letters"
                )
            if word in forward:
                raise DictionaryFormatError(f"duplicate dictionary word {word!r}")
            code = code_for_rank(rank)
            forward[word] = code
            reverse[code] = word
        self.word_list: tuple[bytes, ...] = tuple(words)
        self.forward = forward
        self.reverse = reverse

    def __len__(self) -> int:
        return len(self.word_list)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dictionary):
            return NotImplemented
        return self.word_list == other.word_list

    def __repr__(self) -> str:
        return f"Dictionary({len(self.word_list)} words)"


def build_dictionary(lexicon: RankedLexicon) -> Dictionary:
    """Assign codewords to a ranked lexicon, preserving its order."""
    return Dictionary([word for word, _freq in lexicon])


MAGIC_LINE = b"IDBEDICT"
FORMAT_VERSION = 1


def serialize(dictionary: Dictionary) -> bytes:
    """Dictionary file bytes: header line, count line, one word per line.

    Codes are a pure function of rank, so only the words are stored.
    """
    lines = [b"%s %d" % (MAGIC_LINE, FORMAT_VERSION), b"%d" % len(dictionary)]
    lines.extend(dictionary.word_list)
    return b"\n".join(lines) + b"\n"


def parse(data: bytes) -> Dictionary:
    """Inverse of :func:`serialize`; validates format and word legality."""
    lines = data.split(b"\n")
    if len(lines) < 2:
        raise DictionaryFormatError("truncated dictionary file")
    header = lines[0].split(b" ")
    if len(header) != 2 or header[0] != MAGIC_LINE:
        raise DictionaryFormatError(f"malformed dictionary header {lines[0]!r}")
    if header[1] != b"%d" % FORMAT_VERSION:
        raise DictionaryFormatError(
            f"unsupported dictionary version {header[1]!r}"
        )
    try:
        count = int(lines[1])
    except ValueError:
        raise DictionaryFormatError(f"malformed word count {lines[1]!r}") from None
    if count < 0:
        raise DictionaryFormatError(f"negative word count {count}")
    words = lines[2:]
    if len(words) < count or any(w != b"" for w in words[count:]) or (
        len(words) > count + 1
    ):
        raise DictionaryFormatError(
            f"word count {count} does not match file contents"
        )
    return Dictionary(words[:count])
