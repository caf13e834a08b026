"""Reversible backend stages ahead of entropy coding: BWT, MTF and RLE.

The block-sorting transform sorts all cyclic rotations of a block (no
sentinel byte is appended; equal rotations of a periodic block are ordered
by start offset) and keeps the last column plus the sorted position of the
original rotation.  Rotation ranks come from prefix doubling over numpy
sorts, so large blocks stay O(n log n); the exact inverse walks the
counting-sort LF mapping.
"""

import re
from dataclasses import dataclass

import numpy as np

from .errors import CorruptStreamError


@dataclass(frozen=True)
class BwtBlock:
    last_column: bytes
    primary_index: int


def bwt_forward(block: bytes) -> BwtBlock:
    """Sort the cyclic rotations of ``block`` and return its last column."""
    n = len(block)
    if n == 0:
        raise ValueError("cannot transform an empty block")
    data = np.frombuffer(block, dtype=np.uint8)
    rank = data.astype(np.int64)
    step = 1
    while step < n:
        # Refine: order rotations by (rank, rank of the rotation step bytes
        # later).  Both keys are < n <= 16 MiB, so they pack into one int64
        # and a single unstable argsort groups equal pairs correctly.
        key = (rank << 32) | np.roll(rank, -step)
        order = np.argsort(key)
        sorted_key = key[order]
        changed = np.empty(n, dtype=np.int64)
        changed[0] = 0
        changed[1:] = sorted_key[1:] != sorted_key[:-1]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(changed)
        if new_rank[order[-1]] == n - 1:
            rank = new_rank
            break
        if np.array_equal(new_rank, rank):
            # Fixed point: the block is periodic and doubling further can
            # not split any remaining group.
            break
        rank = new_rank
        step <<= 1
    # Equal full rotations (periodic blocks) tie-break by start offset.
    order = np.lexsort((np.arange(n, dtype=np.int64), rank))
    # Last byte of rotation i is block[i - 1]; index -1 wraps as needed.
    last = data[order - 1]
    primary = int(np.nonzero(order == 0)[0][0])
    return BwtBlock(last.tobytes(), primary)


def bwt_inverse(block: BwtBlock) -> bytes:
    """Rebuild the original block from its last column and primary index."""
    last = block.last_column
    n = len(last)
    if not 0 <= block.primary_index < n:
        raise ValueError(
            f"primary index {block.primary_index} out of range for {n}-byte block"
        )
    data = np.frombuffer(last, dtype=np.uint8)
    order = np.argsort(data, kind="stable")
    lf = np.empty(n, dtype=np.int64)
    lf[order] = np.arange(n, dtype=np.int64)
    lf_list = lf.tolist()
    out = bytearray(n)
    p = block.primary_index
    for i in range(n - 1, -1, -1):
        out[i] = last[p]
        p = lf_list[p]
    return bytes(out)


def mtf_encode(data: bytes) -> bytes:
    """Replace each byte with its index in a move-to-front recency list."""
    table = bytearray(range(256))
    out = bytearray(len(data))
    index = table.index
    for i, b in enumerate(data):
        j = index(b)
        out[i] = j
        if j:
            del table[j]
            table.insert(0, b)
    return bytes(out)


def mtf_decode(data: bytes) -> bytes:
    """Exact inverse of :func:`mtf_encode`."""
    table = bytearray(range(256))
    out = bytearray(len(data))
    for i, j in enumerate(data):
        b = table[j]
        out[i] = b
        if j:
            del table[j]
            table.insert(0, b)
    return bytes(out)


_RUN_RE = re.compile(rb"(.)\1{3,}", re.DOTALL)


def rle_encode(data: bytes) -> bytes:
    """Runs of four or more equal bytes become byte*4 plus an extra count.

    The count byte holds 0..255 additional repeats, so one group covers a
    run of 4..259; longer runs split into consecutive groups.  Shorter runs
    pass through untouched, bounding expansion at 5/4 of the input.
    """
    out = bytearray()
    pos = 0
    for m in _RUN_RE.finditer(data):
        start, end = m.span()
        out += data[pos:start]
        b = data[start]
        four = data[start : start + 4]
        run = end - start
        while run >= 4:
            extra = min(run - 4, 255)
            out += four
            out.append(extra)
            run -= 4 + extra
        out += four[:run]
        pos = end
    out += data[pos:]
    return bytes(out)


def rle_decode(data: bytes) -> bytes:
    """Exact inverse of :func:`rle_encode`."""
    out = bytearray()
    n = len(data)
    i = 0
    while i < n:
        b = data[i]
        if i + 3 < n and b == data[i + 1] and b == data[i + 2] and b == data[i + 3]:
            if i + 4 >= n:
                raise CorruptStreamError("run group missing its count byte", offset=i + 4)
            out += bytes([b]) * (4 + data[i + 4])
            i += 5
        else:
            out.append(b)
            i += 1
    return bytes(out)
