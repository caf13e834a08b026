"""Adaptive order-0 arithmetic coder over the byte alphabet.

Classic 32-bit low/high interval coder with pending-bit underflow handling.
The model starts uniform (every byte count 1), bumps the coded symbol's
count by 32, and halves all counts (rounding up) whenever the total passes
2^16, so encoder and decoder stay in lockstep without any side channel.
Output is an 8-byte big-endian length of the original data followed by the
code bytes; the explicit length replaces an end-of-stream symbol.

Cumulative counts live in a Fenwick tree: prefix sums, point updates and
the decoder's symbol search all cost O(log 256).  The hot loops are kept
flat and local-variable bound on purpose; this is the slowest stage of the
pipeline.
"""

from .errors import CorruptStreamError

_MASK = 0xFFFFFFFF
_HALF = 0x80000000
_QUARTER = 0x40000000
_THREE_QUARTERS = 0xC0000000

INCREMENT = 32
RESCALE_LIMIT = 1 << 16
_SYMBOLS = 256


def _fenwick_build(counts: list[int]) -> list[int]:
    tree = [0] * (_SYMBOLS + 1)
    for i in range(1, _SYMBOLS + 1):
        tree[i] += counts[i - 1]
        j = i + (i & -i)
        if j <= _SYMBOLS:
            tree[j] += tree[i]
    return tree


def ari_encode(data: bytes) -> bytes:
    """Compress ``data``; deterministic byte-for-byte across platforms."""
    out = bytearray(len(data).to_bytes(8, "big"))
    if not data:
        return bytes(out)

    counts = [1] * _SYMBOLS
    total = _SYMBOLS
    tree = _fenwick_build(counts)

    low = 0
    high = _MASK
    pending = 0
    bitbuf = 0
    nbits = 0

    for sym in data:
        # Cumulative count below sym (Fenwick prefix sum).
        i = sym
        cum_low = 0
        while i:
            cum_low += tree[i]
            i &= i - 1
        cum_high = cum_low + counts[sym]

        span = high - low + 1
        high = low + span * cum_high // total - 1
        low = low + span * cum_low // total

        while True:
            if high < _HALF:
                bit = 0
            elif low >= _HALF:
                bit = 1
                low -= _HALF
                high -= _HALF
            elif low >= _QUARTER and high < _THREE_QUARTERS:
                pending += 1
                low -= _QUARTER
                high -= _QUARTER
                low <<= 1
                high = (high << 1) | 1
                continue
            else:
                break
            bitbuf = (bitbuf << 1) | bit
            nbits += 1
            if nbits == 8:
                out.append(bitbuf)
                bitbuf = 0
                nbits = 0
            if pending:
                inv = bit ^ 1
                while pending:
                    bitbuf = (bitbuf << 1) | inv
                    nbits += 1
                    if nbits == 8:
                        out.append(bitbuf)
                        bitbuf = 0
                        nbits = 0
                    pending -= 1
            low <<= 1
            high = (high << 1) | 1

        counts[sym] += INCREMENT
        total += INCREMENT
        j = sym + 1
        while j <= _SYMBOLS:
            tree[j] += INCREMENT
            j += j & -j
        if total > RESCALE_LIMIT:
            counts = [(c + 1) >> 1 for c in counts]
            total = sum(counts)
            tree = _fenwick_build(counts)

    # Flush: one disambiguating bit plus whatever underflow is pending.
    pending += 1
    bit = 0 if low < _QUARTER else 1
    inv = bit ^ 1
    bitbuf = (bitbuf << 1) | bit
    nbits += 1
    if nbits == 8:
        out.append(bitbuf)
        bitbuf = 0
        nbits = 0
    while pending:
        bitbuf = (bitbuf << 1) | inv
        nbits += 1
        if nbits == 8:
            out.append(bitbuf)
            bitbuf = 0
            nbits = 0
        pending -= 1
    if nbits:
        out.append(bitbuf << (8 - nbits))
    return bytes(out)


def ari_decode(data: bytes, max_length: int | None = None) -> bytes:
    """Exact inverse of :func:`ari_encode`.

    ``max_length`` rejects absurd length headers from corrupt streams
    before anything gets allocated.
    """
    if len(data) < 8:
        raise CorruptStreamError("length header incomplete", offset=len(data))
    n = int.from_bytes(data[:8], "big")
    if max_length is not None and n > max_length:
        raise CorruptStreamError(f"declared length {n} exceeds limit {max_length}")
    if n == 0:
        return b""
    code = data[8:]
    clen = len(code)

    counts = [1] * _SYMBOLS
    total = _SYMBOLS
    tree = _fenwick_build(counts)

    low = 0
    high = _MASK
    value = 0
    bitpos = 0
    for _ in range(32):
        byte_i = bitpos >> 3
        b = code[byte_i] if byte_i < clen else 0
        value = (value << 1) | ((b >> (7 - (bitpos & 7))) & 1)
        bitpos += 1

    out = bytearray(n)
    for pos in range(n):
        span = high - low + 1
        target = ((value - low + 1) * total - 1) // span

        # Fenwick search: largest sym with cum(sym) <= target.
        sym = 0
        rem = target
        bit = 128
        while bit:
            nxt = sym + bit
            if nxt <= _SYMBOLS and tree[nxt] <= rem:
                rem -= tree[nxt]
                sym = nxt
            bit >>= 1
        cum_low = target - rem
        cum_high = cum_low + counts[sym]
        out[pos] = sym

        high = low + span * cum_high // total - 1
        low = low + span * cum_low // total

        while True:
            if high < _HALF:
                pass
            elif low >= _HALF:
                value -= _HALF
                low -= _HALF
                high -= _HALF
            elif low >= _QUARTER and high < _THREE_QUARTERS:
                value -= _QUARTER
                low -= _QUARTER
                high -= _QUARTER
            else:
                break
            low <<= 1
            high = (high << 1) | 1
            byte_i = bitpos >> 3
            b = code[byte_i] if byte_i < clen else 0
            value = (value << 1) | ((b >> (7 - (bitpos & 7))) & 1)
            bitpos += 1

        counts[sym] += INCREMENT
        total += INCREMENT
        j = sym + 1
        while j <= _SYMBOLS:
            tree[j] += INCREMENT
            j += j & -j
        if total > RESCALE_LIMIT:
            counts = [(c + 1) >> 1 for c in counts]
            total = sum(counts)
            tree = _fenwick_build(counts)

    return bytes(out)
