"""Marker-based dictionary transform over raw bytes, and its exact inverse.

Encoding replaces each dictionary word with a length marker (bytes 251..254
standing for code lengths 1..4) followed by the codeword.  A single space
after a replaced word is dropped; byte 255 marks the places where that
implied space must NOT be restored.  Literal occurrences of bytes 251..255
are escaped by doubling, so arbitrary binary input survives a round trip.

Decoding resolves the resulting ambiguities by run parity: doubled literals
contribute even run lengths, a live marker makes the run odd.
"""

import re

from .dictionary import Dictionary
from .errors import CorruptStreamError
from .tokens import _WORD_RE

LEN_MARKER_BASE = 250  # marker byte = 250 + len(code), so 251..254
NO_SPACE = 255
CODE_MIN = 33
CODE_MAX = 250
SPACE = 0x20

_SPECIAL_RE = re.compile(rb"[\xfb-\xff]")


def _escape(chunk: bytes) -> bytes:
    """Double every byte in 251..255 so it reads back as a literal."""
    if _SPECIAL_RE.search(chunk) is None:
        return chunk
    for b in (251, 252, 253, 254, 255):
        one = bytes([b])
        chunk = chunk.replace(one, one + one)
    return chunk


def encode(data: bytes, dictionary: Dictionary) -> bytes:
    """Replace known words with marker-prefixed codes; total for any input."""
    forward = dictionary.forward
    out = bytearray()
    n = len(data)
    pos = 0
    for m in _WORD_RE.finditer(data):
        start, end = m.span()
        if start > pos:
            out += _escape(data[pos:start])
        code = forward.get(m.group())
        if code is None:
            out += data[start:end]
            pos = end
            continue
        out.append(LEN_MARKER_BASE + len(code))
        out += code
        # A single following space is dropped; the decoder re-inserts it.
        # The space stays put when it ends the stream or starts a space run,
        # and NO_SPACE marks every other continuation.  Nothing is emitted
        # at end of stream: the decoder adds no space there.
        if end == n:
            pos = end
        elif data[end] == SPACE and end + 1 < n and data[end + 1] != SPACE:
            pos = end + 1
        else:
            out.append(NO_SPACE)
            pos = end
    if pos < n:
        out += _escape(data[pos:])
    return bytes(out)


def decode(data: bytes, dictionary: Dictionary) -> bytes:
    """Exact inverse of :func:`encode` under the same dictionary."""
    reverse = dictionary.reverse
    out = bytearray()
    n = len(data)
    i = 0
    while i < n:
        b = data[i]
        if b < 251:
            m = _SPECIAL_RE.search(data, i)
            j = m.start() if m else n
            out += data[i:j]
            i = j
            continue
        # Maximal run of one escape-class byte.
        j = i
        while j < n and data[j] == b:
            j += 1
        run = j - i
        if b == NO_SPACE:
            if run % 2:
                raise CorruptStreamError(
                    "odd run of byte 255 outside word context", offset=i
                )
            out += b"\xff" * (run // 2)
            i = j
            continue
        out += bytes([b]) * (run // 2)
        i = j
        if run % 2 == 0:
            continue
        # The unpaired final byte is a live length marker.
        code_len = b - LEN_MARKER_BASE
        if i + code_len > n:
            raise CorruptStreamError("stream truncated after length marker", offset=i)
        code = data[i : i + code_len]
        for k, cb in enumerate(code):
            if not CODE_MIN <= cb <= CODE_MAX:
                raise CorruptStreamError(
                    f"marker followed by non-code byte {cb}", offset=i + k
                )
        word = reverse.get(code)
        if word is None:
            raise CorruptStreamError(f"codeword {code.hex()} not in dictionary", offset=i)
        out += word
        i += code_len
        # Space restoration depends on the parity of the 255-run that
        # follows the word: odd means suppressed, even means restore.
        j = i
        while j < n and data[j] == NO_SPACE:
            j += 1
        run = j - i
        if run % 2:
            out += b"\xff" * (run // 2)
        elif run or j < n:
            out.append(SPACE)
            out += b"\xff" * (run // 2)
        i = j
    return bytes(out)
