"""Authenticated record framing for moving a dictionary between peers.

The serialized dictionary is cut into 16 KiB fragments.  Each fragment is
optionally compressed, authenticated with HMAC-SHA256 over the frame header
fields plus the fragment, and the fragment-plus-tag is encrypted under a
sequence-derived nonce.  Frames are fixed-layout and big-endian::

    content_type u8 | version u8 | sequence u32 | body_length u16 | body

content_type 1 carries a raw fragment, 2 a compressed one.  The default
cipher XORs an HMAC-derived keystream over the plaintext.  That is enough
for round-trip and tamper testing but it is NOT production cryptography;
swap in a real cipher via the ``cipher`` argument for anything that
matters.

Every validation failure on the receive path (bad MAC, truncated or
unparseable frames) is reported as an authentication failure so rejection
reasons stay indistinguishable; only whole intact frames arriving out of
order raise the distinct sequence-gap error.
"""

import hashlib
import hmac
import struct
from dataclasses import dataclass

from .dictionary import Dictionary, parse as parse_dictionary, serialize as serialize_dictionary
from .errors import AuthenticationFailure, FrameFormatError, SequenceGapError
from .pipeline import PipelineConfig, compress as _compress, decompress as _decompress

CONTENT_FRAGMENT = 1
CONTENT_FRAGMENT_COMPRESSED = 2
TRANSFER_VERSION = 1
FRAGMENT_SIZE = 16384
MAC_LENGTH = 32  # HMAC-SHA256
MIN_KEY_LENGTH = 16
_HEADER = struct.Struct(">BBIH")


@dataclass(frozen=True)
class RecordFrame:
    content_type: int
    version: int
    sequence: int
    body: bytes

    def to_bytes(self) -> bytes:
        return _HEADER.pack(self.content_type, self.version, self.sequence, len(self.body)) + self.body


class KeystreamCipher:
    """XOR keystream derived from HMAC(key, nonce, counter) blocks.

    Demonstration grade only: keeps frames confidential against casual
    inspection and lets the MAC do the real tamper-detection work.
    """

    def encrypt(self, key: bytes, nonce: bytes, data: bytes) -> bytes:
        if not data:
            return b""
        blocks = []
        for counter in range((len(data) + 31) // 32):
            blocks.append(
                hmac.new(key, b"ks\x00" + nonce + counter.to_bytes(8, "big"), hashlib.sha256).digest()
            )
        stream = b"".join(blocks)[: len(data)]
        return (int.from_bytes(data, "big") ^ int.from_bytes(stream, "big")).to_bytes(
            len(data), "big"
        )

    def decrypt(self, key: bytes, nonce: bytes, data: bytes) -> bytes:
        return self.encrypt(key, nonce, data)


_DEFAULT_CIPHER = KeystreamCipher()


def _check_key(key: bytes) -> bytes:
    if not isinstance(key, (bytes, bytearray)) or len(key) < MIN_KEY_LENGTH:
        raise ValueError(f"key must be at least {MIN_KEY_LENGTH} bytes")
    return bytes(key)


def _nonce(sequence: int) -> bytes:
    return sequence.to_bytes(4, "big")


def _mac(key: bytes, content_type: int, version: int, sequence: int, fragment: bytes) -> bytes:
    msg = bytes([content_type, version]) + sequence.to_bytes(4, "big") + fragment
    return hmac.new(key, b"mac\x00" + msg, hashlib.sha256).digest()


def fragment(dict_bytes: bytes, chunk_size: int = FRAGMENT_SIZE) -> list[bytes]:
    """Cut ``dict_bytes`` into consecutive chunks of ``chunk_size``."""
    if chunk_size <= 0:
        raise ValueError("chunk size must be positive")
    return [dict_bytes[i : i + chunk_size] for i in range(0, len(dict_bytes), chunk_size)]


def protect(
    chunk: bytes,
    key: bytes,
    sequence: int,
    compress: bool = False,
    cipher=_DEFAULT_CIPHER,
) -> RecordFrame:
    """Wrap one fragment: optional compression, MAC, then encryption."""
    key = _check_key(key)
    if not 0 <= sequence <= 0xFFFFFFFF:
        raise FrameFormatError(f"sequence {sequence} does not fit the u32 field")
    if len(chunk) > FRAGMENT_SIZE:
        raise FrameFormatError(
            f"chunk of {len(chunk)} bytes exceeds the {FRAGMENT_SIZE}-byte limit",
            sequence=sequence,
        )
    if compress:
        content_type = CONTENT_FRAGMENT_COMPRESSED
        carried = _compress(chunk, PipelineConfig())
    else:
        content_type = CONTENT_FRAGMENT
        carried = chunk
    tag = _mac(key, content_type, TRANSFER_VERSION, sequence, carried)
    body = cipher.encrypt(key, _nonce(sequence), carried + tag)
    if len(body) > 0xFFFF:
        raise FrameFormatError("frame body exceeds the u16 length field", sequence=sequence)
    return RecordFrame(content_type, TRANSFER_VERSION, sequence, body)


def unprotect(frame: RecordFrame, key: bytes, cipher=_DEFAULT_CIPHER) -> bytes:
    """Verify and unwrap one frame; MAC is checked before anything else."""
    key = _check_key(key)
    plain = cipher.decrypt(key, _nonce(frame.sequence), frame.body)
    if len(plain) < MAC_LENGTH:
        raise AuthenticationFailure("frame body shorter than its MAC", sequence=frame.sequence)
    carried, tag = plain[:-MAC_LENGTH], plain[-MAC_LENGTH:]
    expected = _mac(key, frame.content_type, frame.version, frame.sequence, carried)
    if not hmac.compare_digest(tag, expected):
        raise AuthenticationFailure("MAC mismatch", sequence=frame.sequence)
    if frame.version != TRANSFER_VERSION:
        raise FrameFormatError(f"unsupported version {frame.version}", sequence=frame.sequence)
    if frame.content_type == CONTENT_FRAGMENT_COMPRESSED:
        return _decompress(carried)
    if frame.content_type == CONTENT_FRAGMENT:
        return carried
    raise FrameFormatError(
        f"unknown content type {frame.content_type}", sequence=frame.sequence
    )


def pack_dictionary(
    dictionary: Dictionary,
    key: bytes,
    compress: bool = False,
    cipher=_DEFAULT_CIPHER,
) -> bytes:
    """Serialize, fragment and protect a dictionary into a frame stream."""
    chunks = fragment(serialize_dictionary(dictionary))
    return b"".join(
        protect(chunk, key, seq, compress=compress, cipher=cipher).to_bytes()
        for seq, chunk in enumerate(chunks)
    )


def iter_frames(data: bytes):
    """Parse a frame stream; structural damage reads as tampering."""
    pos = 0
    seq_guess = 0
    while pos < len(data):
        if pos + _HEADER.size > len(data):
            raise AuthenticationFailure(
                "truncated frame header", sequence=seq_guess
            )
        content_type, version, sequence, body_length = _HEADER.unpack_from(data, pos)
        pos += _HEADER.size
        if pos + body_length > len(data):
            raise AuthenticationFailure("truncated frame body", sequence=seq_guess)
        yield RecordFrame(content_type, version, sequence, data[pos : pos + body_length])
        pos += body_length
        seq_guess += 1


def unpack_dictionary(data: bytes, key: bytes, cipher=_DEFAULT_CIPHER) -> Dictionary:
    """Validate every frame and sequence continuity, then parse the result."""
    chunks = []
    expected_seq = 0
    for frame in iter_frames(data):
        chunk = unprotect(frame, key, cipher=cipher)
        if frame.sequence != expected_seq:
            raise SequenceGapError(
                f"got sequence {frame.sequence}, expected {expected_seq}",
                sequence=frame.sequence,
            )
        chunks.append(chunk)
        expected_seq += 1
    return parse_dictionary(b"".join(chunks))
