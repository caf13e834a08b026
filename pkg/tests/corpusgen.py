"""Deterministic English-like test corpora.

Two sources: real English prose harvested from stdlib pydoc pages, and a
seeded Markov word chain over common-English vocabulary.  The chain gives
phrase-level repetition (word bigrams recur), which is what the star and
dictionary transforms exploit on natural text; plain i.i.d. word salad does
not behave like English for these purposes.

A directory of real corpus files can be supplied through the IDBE_CORPUS
environment variable; tests use it when present.
"""

import os
import pydoc
import random
from functools import lru_cache
from pathlib import Path

COMMON_WORDS = (
    "the of and a to in is was he for it with as his on be at by i this had "
    "not are but from or have an they which one you were her all she there "
    "would their we him been has when who will more no if out so said what "
    "up its about into than them can only other new some could time these "
    "two may then do first any my now such like our over man me even most "
    "made after also did many before must through back years where much "
    "your way well down should because each just those people how too "
    "little state good very make world still own see men work long get "
    "here between both life being under never day same another know while "
    "last might great old year off come since against go came right used "
    "take three himself few house use during without again place around "
    "however home small found thought went say part once general high upon "
    "school every does got united left number course war until always away "
    "something fact though water less public put think almost hand enough "
    "far took head yet government system better set told nothing night end "
    "why called eyes find going look asked later knew point next city "
    "business"
).split()

_PREFIXES = ["", "", "", "re", "un", "over", "out", "pre", "dis"]
_SUFFIXES = ["", "", "", "s", "ed", "ing", "ly", "er", "est", "ness", "ment"]

_DOC_MODULES = (
    "json os re email http logging argparse difflib textwrap tarfile "
    "zipfile csv sqlite3 socket ssl asyncio unittest collections itertools "
    "functools subprocess threading pickle shutil pathlib tempfile datetime "
    "decimal fractions statistics string struct codecs locale configparser "
    "platform ctypes uuid hashlib hmac secrets random math array bisect "
    "heapq queue copy types inspect ast dis tokenize keyword zlib gzip bz2 "
    "lzma base64 binascii mimetypes glob fnmatch linecache fileinput stat "
    "filecmp time sched select signal errno io traceback warnings "
    "contextlib abc operator enum numbers typing dataclasses pprint reprlib "
    "weakref shelve calendar doctest pdb profile pstats timeit trace html "
    "urllib ftplib poplib imaplib smtplib socketserver xmlrpc ipaddress "
    "getpass cmd shlex wave colorsys getopt multiprocessing"
).split()


def _vocabulary(size: int, rnd: random.Random) -> list[str]:
    words = list(COMMON_WORDS)
    seen = set(words)
    while len(words) < size:
        w = rnd.choice(_PREFIXES) + rnd.choice(COMMON_WORDS) + rnd.choice(_SUFFIXES)
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words[:size]


def markov_text(nbytes: int, seed: int, vocab_size: int = 2500, branch: int = 10) -> bytes:
    """English-like prose from a sparse order-1 word chain."""
    rnd = random.Random(seed)
    words = _vocabulary(vocab_size, rnd)
    zipf = [1.0 / (i + 1) for i in range(len(words))]
    followers = {w: rnd.choices(words, weights=zipf, k=branch) for w in words}
    follow_weights = [1.0 / (i + 1) for i in range(branch)]

    parts: list[str] = []
    size = 0
    word = words[0]
    left = rnd.randint(5, 14)
    capitalize = True
    while size < nbytes + 16:
        token = word.capitalize() if capitalize else word
        capitalize = False
        parts.append(token)
        size += len(token)
        left -= 1
        if left <= 0:
            end = rnd.choice([". ", ". ", ". ", "? ", "! ", ", ", ".\n", ".\n\n"])
            parts.append(end)
            size += len(end)
            capitalize = end[0] in ".?!"
            left = rnd.randint(5, 14)
        else:
            parts.append(" ")
            size += 1
        word = rnd.choices(followers[word], weights=follow_weights, k=1)[0]
    return "".join(parts).encode("ascii")[:nbytes]


@lru_cache(maxsize=1)
def stdlib_prose() -> bytes:
    """Real English text: concatenated pydoc pages for stdlib modules."""
    pages = []
    for name in _DOC_MODULES:
        try:
            module = __import__(name)
            pages.append(pydoc.render_doc(module, renderer=pydoc.plaintext))
        except Exception:
            continue
    return "\n".join(pages).encode("ascii", "ignore")


def english_text(nbytes: int, seed: int = 0) -> bytes:
    """``nbytes`` of English text: a stdlib-docs slice, Markov fill beyond."""
    prose = stdlib_prose()
    offset = (seed * 977_731) % max(1, len(prose) // 2)
    piece = prose[offset : offset + nbytes]
    if len(piece) < nbytes:
        piece += markov_text(nbytes - len(piece), seed + 1)
    return piece


def write_substitute_corpus(directory, file_size: int = 120_000) -> list[Path]:
    """Write the mixed substitute corpus used when no real corpus exists."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    prose = stdlib_prose()
    paths = []
    entries = [
        (f"docs{i + 1}.txt", prose[i * file_size : (i + 1) * file_size])
        for i in range(6)
    ]
    entries.append(("novel1.txt", markov_text(file_size, seed=31)))
    for name, data in entries:
        path = directory / name
        path.write_bytes(data)
        paths.append(path)
    return paths


CANTERBURY_TEXT_FILES = (
    "alice29.txt",
    "asyoulik.txt",
    "cp.html",
    "fields.c",
    "grammar.lsp",
    "lcet10.txt",
    "plrabn12.txt",
)


def real_corpus_dir() -> Path | None:
    """Directory from IDBE_CORPUS if it holds the expected text files."""
    env = os.environ.get("IDBE_CORPUS")
    if not env:
        return None
    path = Path(env)
    if all((path / name).is_file() for name in CANTERBURY_TEXT_FILES):
        return path
    return None
