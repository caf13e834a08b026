"""Corpus benchmark harness: BPC and wall time per file and transform.

The dictionary for star/idbe runs is either trained on the corpus under
test (default) or loaded from an external file.  Every file is compressed,
decompressed and verified before its row counts; a round-trip mismatch is a
hard error because timing a broken codec is meaningless.  Dictionaries are
shipped separately (external flag), mirroring a setup where the dictionary
travels once over its own channel.
"""

import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .dictionary import build_dictionary, build_lexicon, parse as parse_dictionary
from .errors import IdbeError
from .pipeline import DEFAULT_BLOCK_SIZE, DICT_EXTERNAL, PipelineConfig, TRANSFORM_NONE, bpc, compress, decompress

ALL_TRANSFORMS = ("none", "star", "idbe")


@dataclass
class BenchRow:
    file_name: str
    transform: str
    input_bytes: int
    output_bytes: int
    bpc: float
    compress_seconds: float
    decompress_seconds: float
    roundtrip_ok: bool


class RoundTripError(IdbeError):
    """Compressed output failed to decode back to the input."""


def run_corpus(
    corpus_dir,
    transforms: Sequence[str] = ALL_TRANSFORMS,
    dictionary_path=None,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> list[BenchRow]:
    """Benchmark every readable, non-empty file under ``corpus_dir``.

    With ``dictionary_path`` unset the dictionary is self-trained on all
    corpus files before any encoding.  Rows come back sorted by file name,
    one per (file, transform) pair.
    """
    corpus_dir = Path(corpus_dir)
    contents: dict[str, bytes] = {}
    for path in sorted(corpus_dir.iterdir()):
        if not path.is_file():
            continue
        try:
            data = path.read_bytes()
        except OSError as exc:
            print(f"bench: skipping unreadable {path.name}: {exc}", file=sys.stderr)
            continue
        if data:
            contents[path.name] = data

    dictionary = None
    if any(t != TRANSFORM_NONE for t in transforms):
        if dictionary_path is not None:
            dictionary = parse_dictionary(Path(dictionary_path).read_bytes())
        else:
            dictionary = build_dictionary(build_lexicon(contents.values()))

    rows = []
    for name, data in contents.items():
        for transform in transforms:
            cfg = PipelineConfig(
                transform=transform,
                block_size=block_size,
                dictionary_source=DICT_EXTERNAL if transform != TRANSFORM_NONE else "none",
            )
            t0 = time.perf_counter()
            container = compress(data, cfg, dictionary)
            t1 = time.perf_counter()
            restored = decompress(container, dictionary)
            t2 = time.perf_counter()
            if restored != data:
                raise RoundTripError(f"{name} with transform {transform}")
            rows.append(
                BenchRow(
                    file_name=name,
                    transform=transform,
                    input_bytes=len(data),
                    output_bytes=len(container),
                    bpc=bpc(len(data), len(container)),
                    compress_seconds=t1 - t0,
                    decompress_seconds=t2 - t1,
                    roundtrip_ok=True,
                )
            )
    return rows


CSV_HEADER = "file,transform,input_bytes,output_bytes,bpc,compress_seconds,decompress_seconds"


def emit_csv(rows: Iterable[BenchRow]) -> bytes:
    """CSV rendering of benchmark rows, one line per row."""
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.file_name},{r.transform},{r.input_bytes},{r.output_bytes},"
            f"{r.bpc:.6f},{r.compress_seconds:.6f},{r.decompress_seconds:.6f}"
        )
    return ("\n".join(lines) + "\n").encode("ascii")


def emit_plot_data(rows: Iterable[BenchRow]) -> bytes:
    """Gnuplot-friendly data: one index block per transform.

    Plot with e.g. ``plot 'out.dat' index 0 using 3:xtic(1)`` for a BPC bar
    chart of the first transform.
    """
    by_transform: dict[str, list[BenchRow]] = {}
    for r in rows:
        by_transform.setdefault(r.transform, []).append(r)
    blocks = []
    for transform, group in by_transform.items():
        lines = [
            f"# transform: {transform}",
            "# file input_bytes bpc compress_seconds decompress_seconds",
        ]
        for r in group:
            lines.append(
                f"{r.file_name} {r.input_bytes} {r.bpc:.6f} "
                f"{r.compress_seconds:.6f} {r.decompress_seconds:.6f}"
            )
        blocks.append("\n".join(lines))
    return ("\n\n\n".join(blocks) + "\n").encode("ascii")
