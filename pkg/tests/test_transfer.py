import random

import pytest

from idbe.dictionary import Dictionary
from idbe.errors import (
    AuthenticationFailure,
    FrameFormatError,
    SecureTransferError,
    SequenceGapError,
)
from idbe.transfer import (
    FRAGMENT_SIZE,
    RecordFrame,
    fragment,
    iter_frames,
    pack_dictionary,
    protect,
    unpack_dictionary,
    unprotect,
)

KEY = bytes(range(16))
OTHER_KEY = bytes(range(1, 17))


def test_fragment_arithmetic():
    assert [len(c) for c in fragment(b"x" * 40000)] == [16384, 16384, 7232]
    assert fragment(b"") == []
    assert [len(c) for c in fragment(b"x" * 16384)] == [16384]
    assert b"".join(fragment(bytes(range(256)) * 200)) == bytes(range(256)) * 200
    assert [len(c) for c in fragment(b"x" * 100, chunk_size=30)] == [30, 30, 30, 10]
    with pytest.raises(ValueError):
        fragment(b"abc", chunk_size=0)


def test_protect_unprotect_roundtrip():
    for chunk in (b"", b"hello", b"x" * FRAGMENT_SIZE):
        frame = protect(chunk, KEY, 0)
        assert unprotect(frame, KEY) == chunk


def test_nonce_separation():
    a = protect(b"same chunk", KEY, 0)
    b = protect(b"same chunk", KEY, 1)
    assert a.body != b.body


def test_compressed_fragment_smaller():
    chunk = b"a" * FRAGMENT_SIZE
    plain = protect(chunk, KEY, 0, compress=False)
    packed = protect(chunk, KEY, 0, compress=True)
    assert len(packed.body) < len(plain.body)
    assert unprotect(packed, KEY) == chunk


def test_chunk_oversize_rejected():
    with pytest.raises(FrameFormatError):
        protect(b"x" * (FRAGMENT_SIZE + 1), KEY, 0)


def test_short_key_rejected():
    with pytest.raises(ValueError):
        protect(b"x", b"short", 0)


def test_wrong_key_fails():
    frame = protect(b"payload", KEY, 0)
    with pytest.raises(AuthenticationFailure):
        unprotect(frame, OTHER_KEY)


def test_bit_flip_in_body_fails():
    frame = protect(b"payload", KEY, 0)
    body = bytearray(frame.body)
    body[3] ^= 0x10
    with pytest.raises(AuthenticationFailure):
        unprotect(RecordFrame(frame.content_type, frame.version, frame.sequence, bytes(body)), KEY)


def test_header_field_tamper_fails():
    frame = protect(b"payload", KEY, 5)
    with pytest.raises(AuthenticationFailure):
        unprotect(RecordFrame(2, frame.version, frame.sequence, frame.body), KEY)
    with pytest.raises(AuthenticationFailure):
        unprotect(RecordFrame(frame.content_type, 9, frame.sequence, frame.body), KEY)
    with pytest.raises(AuthenticationFailure):
        unprotect(RecordFrame(frame.content_type, frame.version, 6, frame.body), KEY)


def make_dictionary(n_words: int) -> Dictionary:
    letters = "abcdefghijklmnopqrstuvwxyz"
    words = []
    i = 0
    while len(words) < n_words:
        w = ""
        k = i
        for _ in range(4):
            w += letters[k % 26]
            k //= 26
        words.append(w.encode())
        i += 1
    return Dictionary(words)


def test_pack_unpack_roundtrip_sizes():
    for n in (0, 1, 300):
        d = make_dictionary(n)
        blob = pack_dictionary(d, KEY)
        assert unpack_dictionary(blob, KEY) == d


def test_pack_unpack_compressed():
    d = make_dictionary(5000)
    blob_plain = pack_dictionary(d, KEY, compress=False)
    blob_packed = pack_dictionary(d, KEY, compress=True)
    assert unpack_dictionary(blob_packed, KEY) == d
    assert len(blob_packed) < len(blob_plain)


def test_multi_frame_roundtrip(trained_dictionary):
    blob = pack_dictionary(trained_dictionary, KEY)
    frames = list(iter_frames(blob))
    assert len(frames) > 1
    assert [f.sequence for f in frames] == list(range(len(frames)))
    assert unpack_dictionary(blob, KEY) == trained_dictionary


def test_reordered_frames_sequence_gap(trained_dictionary):
    blob = pack_dictionary(trained_dictionary, KEY)
    frames = list(iter_frames(blob))
    assert len(frames) >= 2
    swapped = b"".join(f.to_bytes() for f in [frames[1], frames[0]] + frames[2:])
    with pytest.raises(SequenceGapError):
        unpack_dictionary(swapped, KEY)


def test_missing_frame_detected(trained_dictionary):
    blob = pack_dictionary(trained_dictionary, KEY)
    frames = list(iter_frames(blob))
    dropped = b"".join(f.to_bytes() for f in frames[1:])
    with pytest.raises(SequenceGapError):
        unpack_dictionary(dropped, KEY)


def test_truncated_stream_rejected(trained_dictionary):
    blob = pack_dictionary(trained_dictionary, KEY)
    with pytest.raises(SecureTransferError):
        unpack_dictionary(blob[: len(blob) - 3], KEY)
    with pytest.raises(SecureTransferError):
        unpack_dictionary(blob[:4], KEY)


def test_random_bit_flips_rejected():
    d = make_dictionary(400)
    blob = pack_dictionary(d, KEY)
    assert unpack_dictionary(blob, KEY) == d
    rnd = random.Random(30)
    for _ in range(150):
        pos = rnd.randrange(len(blob) * 8)
        tampered = bytearray(blob)
        tampered[pos // 8] ^= 1 << (pos % 8)
        with pytest.raises(SecureTransferError):
            unpack_dictionary(bytes(tampered), KEY)


def test_frame_wire_layout():
    frame = protect(b"abc", KEY, 7)
    wire = frame.to_bytes()
    assert wire[0] == 1  # content type: raw fragment
    assert wire[1] == 1  # version
    assert wire[2:6] == (7).to_bytes(4, "big")
    assert int.from_bytes(wire[6:8], "big") == len(frame.body)
    assert wire[8:] == frame.body
