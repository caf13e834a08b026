import random

import pytest

from idbe.dictionary import Dictionary
from idbe.errors import CorruptStreamError
from idbe.idbe_codec import decode, encode

from conftest import random_bytes


@pytest.fixture()
def two_word_dict():
    return Dictionary([b"the", b"and"])


def test_encode_two_known_words(two_word_dict):
    assert encode(b"the and", two_word_dict) == bytes([251, 33, 251, 34])


def test_encode_no_space_marker(two_word_dict):
    assert encode(b"the,and", two_word_dict) == bytes([251, 33, 255, 44, 251, 34])


def test_encode_unknown_word_passes_through(two_word_dict):
    assert encode(b"zq the", two_word_dict) == bytes([122, 113, 32, 251, 33])


def test_encode_escape_doubles_high_bytes(two_word_dict):
    assert encode(b"\xff", two_word_dict) == bytes([255, 255])
    assert encode(bytes([251]), two_word_dict) == bytes([251, 251])
    assert encode(bytes([253, 253]), two_word_dict) == bytes([253] * 4)


def test_decode_examples(two_word_dict):
    d = two_word_dict
    assert decode(bytes([251, 33, 251, 34]), d) == b"the and"
    assert decode(bytes([251, 33, 255, 255, 255]), d) == b"the\xff"
    assert decode(bytes([251, 33, 255, 255]), d) == b"the \xff"
    assert decode(bytes([251, 251]), d) == bytes([251])


def test_trailing_space_and_word_at_end(two_word_dict):
    d = two_word_dict
    for text in (b"the", b"the ", b"the  ", b"the the", b"the \xff", b"the\xff", b" the"):
        assert decode(encode(text, d), d) == text


def test_multiple_spaces_stay_verbatim(two_word_dict):
    d = two_word_dict
    enc = encode(b"the  and", d)
    # Elision only covers a lone space; a space run is kept as literals.
    assert enc == bytes([251, 33, 255, 32, 32, 251, 34])
    assert decode(enc, d) == b"the  and"


def test_one_letter_words_never_coded():
    d = Dictionary([b"aa"])
    assert encode(b"a a a", d) == b"a a a"


def test_decode_errors(two_word_dict):
    d = two_word_dict
    with pytest.raises(CorruptStreamError):
        decode(bytes([251]), d)  # truncated after marker
    with pytest.raises(CorruptStreamError):
        decode(bytes([252, 33]), d)  # marker wants 2 code bytes
    with pytest.raises(CorruptStreamError):
        decode(bytes([251, 10]), d)  # code byte outside 33..250
    with pytest.raises(CorruptStreamError):
        decode(bytes([251, 250]), d)  # codeword not in dictionary
    with pytest.raises(CorruptStreamError):
        decode(bytes([97, 255, 98]), d)  # odd 0xff run away from any word
    with pytest.raises(CorruptStreamError) as info:
        decode(bytes([97, 98, 251]), d)
    assert info.value.offset == 3 and "offset 3" in str(info.value)


def test_roundtrip_fuzz_random_dictionaries():
    rnd = random.Random(2)
    letters = "abcdefghijklmnopqrstuvwxyzABCDEF"
    for _ in range(400):
        words = set()
        for _ in range(rnd.randint(0, 30)):
            words.add(
                "".join(rnd.choices(letters, k=rnd.randint(2, 8))).encode()
            )
        d = Dictionary(sorted(words))
        for _ in range(3):
            data = random_bytes(rnd)
            assert decode(encode(data, d), d) == data


def test_roundtrip_binary_passthrough(two_word_dict):
    rnd = random.Random(3)
    for _ in range(200):
        # No letter runs at all: output differs only by escape doubling.
        data = bytes(rnd.choice([0, 9, 32, 48, 251, 252, 253, 254, 255]) for _ in range(rnd.randint(0, 300)))
        enc = encode(data, two_word_dict)
        expected_len = len(data) + sum(1 for b in data if b >= 251)
        assert len(enc) == expected_len
        assert decode(enc, two_word_dict) == data


def test_compresses_english(english_200k, trained_dictionary):
    enc = encode(english_200k, trained_dictionary)
    assert len(enc) < len(english_200k)
    assert decode(enc, trained_dictionary) == english_200k


def test_every_encode_output_decodes(two_word_dict):
    # Indirect check that marker contexts never become ambiguous.
    rnd = random.Random(4)
    words = [b"the", b"and", b"of", b"to"]
    d = Dictionary(words)
    for _ in range(500):
        bits = []
        for _ in range(rnd.randint(0, 20)):
            r = rnd.random()
            if r < 0.4:
                bits.append(rnd.choice(words))
            elif r < 0.6:
                bits.append(bytes([rnd.choice([32, 32, 255, 251, 44])]))
            else:
                bits.append(random_bytes(rnd, max_len=6))
        data = b"".join(bits)
        assert decode(encode(data, d), d) == data
