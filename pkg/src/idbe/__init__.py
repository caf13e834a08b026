"""Lossless text compression toolkit.

Dictionary-based front transforms (word-to-codeword substitution and a
star-pattern baseline) over a block-sorting backend (BWT, move-to-front,
run-length coding, adaptive arithmetic coding), plus an authenticated
record format for shipping dictionaries and a corpus benchmark harness.
"""

from . import bench
from .ari import ari_decode, ari_encode
from .bwt import BwtBlock, bwt_forward, bwt_inverse, mtf_decode, mtf_encode, rle_decode, rle_encode
from .dictionary import (
    Dictionary,
    build_dictionary,
    build_lexicon,
    code_for_rank,
    parse as parse_dictionary,
    serialize as serialize_dictionary,
)
from .errors import (
    AuthenticationFailure,
    CorruptContainerError,
    CorruptStreamError,
    DictionaryFormatError,
    DictionaryOverflowError,
    FrameFormatError,
    IdbeError,
    MissingDictionaryError,
    NotFittedError,
    SequenceGapError,
    SecureTransferError,
)
from .estimators import BlockCompressor, IdbeEncoder, StarEncoder
from .idbe_codec import decode as idbe_decode, encode as idbe_encode
from .pipeline import PipelineConfig, bpc, compress, decompress
from .star_codec import StarDictionary, build_star_dictionary, star_decode, star_encode
from .tokens import Token, tokenize
from .transfer import (
    RecordFrame,
    fragment,
    pack_dictionary,
    protect,
    unpack_dictionary,
    unprotect,
)

__version__ = "0.1.0"

__all__ = [
    "AuthenticationFailure",
    "BlockCompressor",
    "BwtBlock",
    "CorruptContainerError",
    "CorruptStreamError",
    "Dictionary",
    "DictionaryFormatError",
    "DictionaryOverflowError",
    "FrameFormatError",
    "IdbeEncoder",
    "IdbeError",
    "MissingDictionaryError",
    "NotFittedError",
    "PipelineConfig",
    "RecordFrame",
    "SecureTransferError",
    "SequenceGapError",
    "StarDictionary",
    "StarEncoder",
    "Token",
    "ari_decode",
    "ari_encode",
    "bpc",
    "build_dictionary",
    "build_lexicon",
    "build_star_dictionary",
    "bwt_forward",
    "bwt_inverse",
    "code_for_rank",
    "compress",
    "decompress",
    "fragment",
    "idbe_decode",
    "idbe_encode",
    "mtf_decode",
    "mtf_encode",
    "pack_dictionary",
    "parse_dictionary",
    "protect",
    "rle_decode",
    "rle_encode",
    "serialize_dictionary",
    "star_decode",
    "star_encode",
    "tokenize",
    "unpack_dictionary",
    "unprotect",
]
