"""Container format tying a front transform to the block-sorting backend.

Compression runs the chosen transform (none, star, or dictionary codes)
over the whole input first, then splits the result into blocks and sends
each through BWT, MTF, RLE and the arithmetic coder.  The container header
records the transform, block size and how the dictionary travels (external
file, embedded copy, or not needed); every integer is big-endian and fixed
width so outputs are byte-reproducible.

Layout::

    "BWT1" | version u8 | transform u8 | block_size u32 | dict_flag u8
    [dict_len u32 | dict_bytes]            # only when dict_flag = embedded
    block_count u32
    then per block:
    raw_len u32 | primary_index u32 | payload_len u32 | payload
"""

import struct
from dataclasses import dataclass

from . import idbe_codec, star_codec
from .ari import ari_decode, ari_encode
from .bwt import BwtBlock, bwt_forward, bwt_inverse, mtf_decode, mtf_encode, rle_decode, rle_encode
from .dictionary import Dictionary, parse as parse_dictionary, serialize as serialize_dictionary
from .errors import CorruptContainerError, CorruptStreamError, MissingDictionaryError

MAGIC = b"BWT1"
CONTAINER_VERSION = 1

TRANSFORM_NONE = "none"
TRANSFORM_STAR = "star"
TRANSFORM_IDBE = "idbe"
_TRANSFORM_CODES = {TRANSFORM_NONE: 0, TRANSFORM_STAR: 1, TRANSFORM_IDBE: 2}
_TRANSFORM_NAMES = {v: k for k, v in _TRANSFORM_CODES.items()}

DICT_EXTERNAL = "external"
DICT_EMBEDDED = "embedded"
DICT_NONE = "none"
_DICT_CODES = {DICT_EXTERNAL: 0, DICT_EMBEDDED: 1, DICT_NONE: 2}
_DICT_NAMES = {v: k for k, v in _DICT_CODES.items()}

DEFAULT_BLOCK_SIZE = 921600
MIN_BLOCK_SIZE = 1024
MAX_BLOCK_SIZE = 16 * 1024 * 1024


@dataclass
class PipelineConfig:
    transform: str = TRANSFORM_NONE
    block_size: int = DEFAULT_BLOCK_SIZE
    dictionary_source: str = DICT_NONE

    def __post_init__(self):
        if self.transform not in _TRANSFORM_CODES:
            raise ValueError(f"unknown transform {self.transform!r}")
        if not MIN_BLOCK_SIZE <= self.block_size <= MAX_BLOCK_SIZE:
            raise ValueError(
                f"block_size {self.block_size} outside "
                f"[{MIN_BLOCK_SIZE}, {MAX_BLOCK_SIZE}]"
            )
        if self.dictionary_source not in _DICT_CODES:
            raise ValueError(f"unknown dictionary source {self.dictionary_source!r}")
        if self.transform != TRANSFORM_NONE and self.dictionary_source == DICT_NONE:
            raise ValueError(f"transform {self.transform!r} needs a dictionary source")


def _apply_transform(data: bytes, transform: str, dictionary: Dictionary | None) -> bytes:
    if transform == TRANSFORM_IDBE:
        return idbe_codec.encode(data, dictionary)
    if transform == TRANSFORM_STAR:
        sd = star_codec.StarDictionary(dictionary.word_list)
        return star_codec.star_encode(data, sd)
    return data


def _invert_transform(data: bytes, transform: str, dictionary: Dictionary | None) -> bytes:
    if transform == TRANSFORM_IDBE:
        return idbe_codec.decode(data, dictionary)
    if transform == TRANSFORM_STAR:
        sd = star_codec.StarDictionary(dictionary.word_list)
        return star_codec.star_decode(data, sd)
    return data


def compress(
    data: bytes,
    config: PipelineConfig | None = None,
    dictionary: Dictionary | None = None,
) -> bytes:
    """Full pipeline: transform, block, BWT, MTF, RLE, arithmetic code."""
    cfg = config or PipelineConfig()
    if cfg.transform != TRANSFORM_NONE and dictionary is None:
        raise MissingDictionaryError(
            f"transform {cfg.transform!r} requires a dictionary"
        )
    transformed = _apply_transform(data, cfg.transform, dictionary)

    out = bytearray()
    out += MAGIC
    out.append(CONTAINER_VERSION)
    out.append(_TRANSFORM_CODES[cfg.transform])
    out += struct.pack(">I", cfg.block_size)
    dict_source = DICT_NONE if cfg.transform == TRANSFORM_NONE else cfg.dictionary_source
    out.append(_DICT_CODES[dict_source])
    if dict_source == DICT_EMBEDDED:
        blob = serialize_dictionary(dictionary)
        out += struct.pack(">I", len(blob))
        out += blob

    blocks = [
        transformed[i : i + cfg.block_size]
        for i in range(0, len(transformed), cfg.block_size)
    ]
    out += struct.pack(">I", len(blocks))
    for block in blocks:
        bb = bwt_forward(block)
        payload = ari_encode(rle_encode(mtf_encode(bb.last_column)))
        out += struct.pack(">III", len(block), bb.primary_index, len(payload))
        out += payload
    return bytes(out)


def decompress(container: bytes, dictionary: Dictionary | None = None) -> bytes:
    """Exact inverse of :func:`compress`."""
    view = memoryview(container)
    if len(view) < 11:
        raise CorruptContainerError("container shorter than its fixed header")
    if bytes(view[:4]) != MAGIC:
        raise CorruptContainerError(f"bad magic {bytes(view[:4])!r}")
    if view[4] != CONTAINER_VERSION:
        raise CorruptContainerError(f"unsupported container version {view[4]}")
    if view[5] not in _TRANSFORM_NAMES:
        raise CorruptContainerError(f"unknown transform code {view[5]}")
    transform = _TRANSFORM_NAMES[view[5]]
    block_size = struct.unpack(">I", view[6:10])[0]
    if not MIN_BLOCK_SIZE <= block_size <= MAX_BLOCK_SIZE:
        raise CorruptContainerError(f"block size {block_size} out of bounds")
    if view[10] not in _DICT_NAMES:
        raise CorruptContainerError(f"unknown dictionary flag {view[10]}")
    dict_source = _DICT_NAMES[view[10]]
    pos = 11
    if dict_source == DICT_EMBEDDED:
        if len(view) < pos + 4:
            raise CorruptContainerError("truncated embedded dictionary length")
        dict_len = struct.unpack(">I", view[pos : pos + 4])[0]
        pos += 4
        if len(view) < pos + dict_len:
            raise CorruptContainerError("truncated embedded dictionary")
        dictionary = parse_dictionary(bytes(view[pos : pos + dict_len]))
        pos += dict_len
    if transform != TRANSFORM_NONE and dictionary is None:
        raise MissingDictionaryError(
            f"container needs an external dictionary for transform {transform!r}"
        )
    if len(view) < pos + 4:
        raise CorruptContainerError("truncated block count")
    block_count = struct.unpack(">I", view[pos : pos + 4])[0]
    pos += 4

    pieces = []
    for block_i in range(block_count):
        if len(view) < pos + 12:
            raise CorruptContainerError("truncated block header", block=block_i)
        raw_len, primary, payload_len = struct.unpack(">III", view[pos : pos + 12])
        pos += 12
        if raw_len == 0 or raw_len > block_size:
            raise CorruptContainerError(
                f"raw length {raw_len} outside (0, {block_size}]", block=block_i
            )
        if len(view) < pos + payload_len:
            raise CorruptContainerError("truncated block payload", block=block_i)
        payload = bytes(view[pos : pos + payload_len])
        pos += payload_len
        try:
            # RLE can expand the MTF stream by at most 5/4.
            rle_limit = raw_len + raw_len // 4 + 4
            last_column = mtf_decode(rle_decode(ari_decode(payload, rle_limit)))
            if len(last_column) != raw_len:
                raise CorruptStreamError(
                    f"stage output {len(last_column)} bytes, expected {raw_len}"
                )
            if primary >= raw_len:
                raise CorruptStreamError(f"primary index {primary} out of range")
            piece = bwt_inverse(BwtBlock(last_column, primary))
        except CorruptStreamError as exc:
            raise CorruptContainerError(str(exc), block=block_i) from exc
        pieces.append(piece)
    if pos != len(view):
        raise CorruptContainerError(f"{len(view) - pos} trailing bytes after last block")

    transformed = b"".join(pieces)
    try:
        return _invert_transform(transformed, transform, dictionary)
    except CorruptStreamError as exc:
        raise CorruptContainerError(f"transform stage: {exc}") from exc


def bpc(original_size: int, compressed_size: int) -> float:
    """Bits per character: 8 * compressed bytes / original bytes."""
    if original_size <= 0:
        raise ValueError("original size must be positive")
    return 8.0 * compressed_size / original_size
