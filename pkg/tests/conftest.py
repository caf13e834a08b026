import random

import pytest

from idbe import build_dictionary, build_lexicon

from corpusgen import english_text


@pytest.fixture(scope="session")
def english_200k() -> bytes:
    return english_text(200_000, seed=0)


@pytest.fixture(scope="session")
def trained_dictionary(english_200k):
    return build_dictionary(build_lexicon([english_200k]))


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def random_bytes(rnd: random.Random, max_len: int = 512) -> bytes:
    """Mixed-shape fuzz inputs: text, binary, runs, periodic, marker-heavy."""
    kind = rnd.randrange(6)
    n = rnd.randint(0, max_len)
    if kind == 0:
        return bytes(rnd.randrange(256) for _ in range(n))
    if kind == 1:
        return bytes(rnd.choices(b"abcdefghij THEthe.,*\x1b", k=n))
    if kind == 2:
        return bytes([rnd.randrange(256)]) * n
    if kind == 3:
        unit = bytes(rnd.randrange(256) for _ in range(rnd.randint(1, 5)))
        return (unit * (n // max(1, len(unit)) + 1))[:n]
    if kind == 4:
        return bytes(rnd.choices(range(250, 256), k=n))
    return bytes(rnd.choices(b"the and of to a in star codes \xfb\xfc\xfd\xfe\xff", k=n))
