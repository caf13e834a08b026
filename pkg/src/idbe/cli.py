"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 I/O, 3 format or corruption,
4 authentication.  Output files are written to a temporary sibling and
renamed into place, so a failing command never leaves a partial target.
"""

import argparse
import os
import sys
import tempfile
from pathlib import Path

from . import bench as bench_mod
from . import transfer
from .dictionary import build_dictionary, build_lexicon, parse as parse_dictionary, serialize as serialize_dictionary
from .errors import AuthenticationFailure, IdbeError, SequenceGapError
from .pipeline import (
    DEFAULT_BLOCK_SIZE,
    DICT_EMBEDDED,
    DICT_EXTERNAL,
    PipelineConfig,
    TRANSFORM_NONE,
    compress,
    decompress,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3
EXIT_AUTH = 4

KEY_ENV_VAR = "IDBE_KEY"


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this tool documents 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write_atomic(path: str, data: bytes) -> None:
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or Path("."), prefix=target.name + ".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _resolve_key(args) -> bytes:
    # The --key flag wins over the IDBE_KEY environment variable.
    hexkey = args.key if args.key is not None else os.environ.get(KEY_ENV_VAR)
    if hexkey is None:
        raise _UsageError("no key given: pass --key or set IDBE_KEY")
    try:
        key = bytes.fromhex(hexkey)
    except ValueError:
        raise _UsageError("key is not valid hex") from None
    if len(key) < transfer.MIN_KEY_LENGTH:
        raise _UsageError(f"key must be at least {transfer.MIN_KEY_LENGTH} bytes of hex")
    return key


class _UsageError(Exception):
    pass


def _cmd_makedict(args) -> int:
    texts = [Path(f).read_bytes() for f in args.files]
    dictionary = build_dictionary(build_lexicon(texts))
    _write_atomic(args.output, serialize_dictionary(dictionary))
    return EXIT_OK


def _cmd_compress(args) -> int:
    data = Path(args.input).read_bytes()
    dictionary = None
    source = "none"
    if args.transform != TRANSFORM_NONE:
        if args.dict is None and not args.embed_dict:
            raise _UsageError(
                f"transform {args.transform!r} needs --dict and/or --embed-dict"
            )
        if args.dict is not None:
            dictionary = parse_dictionary(Path(args.dict).read_bytes())
        else:
            # --embed-dict with no --dict trains on the input itself.
            dictionary = build_dictionary(build_lexicon([data]))
        source = DICT_EMBEDDED if args.embed_dict else DICT_EXTERNAL
    cfg = PipelineConfig(
        transform=args.transform, block_size=args.block_size, dictionary_source=source
    )
    _write_atomic(args.output, compress(data, cfg, dictionary))
    return EXIT_OK


def _cmd_decompress(args) -> int:
    container = Path(args.input).read_bytes()
    dictionary = None
    if args.dict is not None:
        dictionary = parse_dictionary(Path(args.dict).read_bytes())
    _write_atomic(args.output, decompress(container, dictionary))
    return EXIT_OK


def _cmd_pack_dict(args) -> int:
    key = _resolve_key(args)
    dictionary = parse_dictionary(Path(args.dictionary).read_bytes())
    _write_atomic(args.output, transfer.pack_dictionary(dictionary, key, compress=args.compress))
    return EXIT_OK


def _cmd_unpack_dict(args) -> int:
    key = _resolve_key(args)
    dictionary = transfer.unpack_dictionary(Path(args.input).read_bytes(), key)
    _write_atomic(args.output, serialize_dictionary(dictionary))
    return EXIT_OK


def _cmd_bench(args) -> int:
    transforms = [t.strip() for t in args.transforms.split(",") if t.strip()]
    for t in transforms:
        if t not in bench_mod.ALL_TRANSFORMS:
            raise _UsageError(f"unknown transform {t!r} in --transforms")
    if not transforms:
        raise _UsageError("--transforms lists no transforms")
    rows = bench_mod.run_corpus(
        args.corpus,
        transforms=transforms,
        dictionary_path=args.dict,
        block_size=args.block_size,
    )
    _write_atomic(args.csv, bench_mod.emit_csv(rows))
    if args.plot is not None:
        _write_atomic(args.plot, bench_mod.emit_plot_data(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="idbe", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("makedict", help="build a dictionary from training files")
    p.add_argument("-o", "--output", required=True, help="dictionary file to write")
    p.add_argument("files", nargs="+", metavar="FILE", help="training text files")
    p.set_defaults(func=_cmd_makedict)

    p = sub.add_parser("compress", help="compress a file")
    p.add_argument("--transform", choices=("none", "star", "idbe"), default="none")
    p.add_argument("--dict", help="dictionary file (referenced, not embedded)")
    p.add_argument(
        "--embed-dict",
        action="store_true",
        help="embed the dictionary in the container; without --dict it is "
        "trained on the input file",
    )
    p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("input", metavar="IN")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("decompress", help="decompress a container")
    p.add_argument("--dict", help="external dictionary file, if the container needs one")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("input", metavar="IN")
    p.set_defaults(func=_cmd_decompress)

    p = sub.add_parser("pack-dict", help="pack a dictionary into authenticated frames")
    p.add_argument("--key", help=f"hex key (fallback: ${KEY_ENV_VAR})")
    p.add_argument("--compress", action="store_true", help="compress each fragment")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("dictionary", metavar="DICT")
    p.set_defaults(func=_cmd_pack_dict)

    p = sub.add_parser("unpack-dict", help="verify frames and recover the dictionary")
    p.add_argument("--key", help=f"hex key (fallback: ${KEY_ENV_VAR})")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("input", metavar="IN")
    p.set_defaults(func=_cmd_unpack_dict)

    p = sub.add_parser("bench", help="benchmark a corpus directory")
    p.add_argument("--corpus", required=True, help="directory of corpus files")
    p.add_argument("--transforms", default="none,star,idbe", help="comma-separated list")
    p.add_argument("--dict", help="external dictionary (default: train on the corpus)")
    p.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)
    p.add_argument("--csv", required=True, help="CSV output path")
    p.add_argument("--plot", help="gnuplot data output path")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"idbe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AuthenticationFailure, SequenceGapError) as exc:
        print(f"idbe: authentication error: {exc}", file=sys.stderr)
        return EXIT_AUTH
    except IdbeError as exc:
        print(f"idbe: error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        # Config-level validation (block size bounds and the like).
        print(f"idbe: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"idbe: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
