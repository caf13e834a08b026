"""Scikit-learn style wrappers around the codecs and the full pipeline.

Each estimator learns its dictionary in ``fit`` from an iterable of byte
records and then maps records through ``transform`` / ``inverse_transform``.
They duck-type the sklearn contract (``fit``, ``transform``, ``get_params``,
``set_params``) without importing sklearn, so they drop into sklearn
pipelines and cross-validation tooling when that library is around but add
no dependency here.
"""

import inspect

from . import idbe_codec, star_codec
from .dictionary import Dictionary, build_dictionary, build_lexicon
from .errors import NotFittedError
from .pipeline import DEFAULT_BLOCK_SIZE, DICT_EXTERNAL, PipelineConfig, TRANSFORM_NONE, compress, decompress


def check_byte_records(X) -> list[bytes]:
    """Validate an iterable of byte records, returning a concrete list."""
    if isinstance(X, (bytes, bytearray, str)):
        raise TypeError(
            "expected an iterable of byte records, got a single "
            f"{type(X).__name__}; wrap it in a list"
        )
    records = []
    for i, record in enumerate(X):
        if isinstance(record, bytearray):
            record = bytes(record)
        if not isinstance(record, bytes):
            raise TypeError(f"record {i} is {type(record).__name__}, expected bytes")
        records.append(record)
    return records


def check_is_fitted(estimator, attribute: str):
    if getattr(estimator, attribute, None) is None:
        raise NotFittedError(
            f"{type(estimator).__name__} must be fitted before use"
        )


def _capped_lexicon(records: list[bytes], max_words: int | None):
    if max_words is not None and max_words < 0:
        raise ValueError(f"max_words must be >= 0, got {max_words}")
    lexicon = build_lexicon(records)
    return lexicon if max_words is None else lexicon[:max_words]


class BaseByteTransformer:
    """Minimal estimator base: parameter introspection plus fit_transform."""

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [name for name in sig.parameters if name != "self"]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ValueError(
                    f"invalid parameter {name!r} for {type(self).__name__}"
                )
            setattr(self, name, value)
        return self

    def fit(self, X, y=None):
        raise NotImplementedError

    def transform(self, X):
        raise NotImplementedError

    def fit_transform(self, X, y=None):
        return self.fit(X, y).transform(X)

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({params})"


class IdbeEncoder(BaseByteTransformer):
    """Learn a codeword dictionary from training records and apply it.

    Parameters
    ----------
    max_words:
        Optional cap on dictionary size; None keeps every counted word.
    """

    def __init__(self, max_words: int | None = None):
        self.max_words = max_words
        self.dictionary_: Dictionary | None = None

    def fit(self, X, y=None):
        records = check_byte_records(X)
        self.dictionary_ = build_dictionary(_capped_lexicon(records, self.max_words))
        return self

    def transform(self, X) -> list[bytes]:
        check_is_fitted(self, "dictionary_")
        return [idbe_codec.encode(r, self.dictionary_) for r in check_byte_records(X)]

    def inverse_transform(self, X) -> list[bytes]:
        check_is_fitted(self, "dictionary_")
        return [idbe_codec.decode(r, self.dictionary_) for r in check_byte_records(X)]


class StarEncoder(BaseByteTransformer):
    """Learn star patterns from training records and apply them."""

    def __init__(self, max_words: int | None = None):
        self.max_words = max_words
        self.star_dictionary_: star_codec.StarDictionary | None = None

    def fit(self, X, y=None):
        records = check_byte_records(X)
        self.star_dictionary_ = star_codec.build_star_dictionary(
            _capped_lexicon(records, self.max_words)
        )
        return self

    def transform(self, X) -> list[bytes]:
        check_is_fitted(self, "star_dictionary_")
        return [star_codec.star_encode(r, self.star_dictionary_) for r in check_byte_records(X)]

    def inverse_transform(self, X) -> list[bytes]:
        check_is_fitted(self, "star_dictionary_")
        return [star_codec.star_decode(r, self.star_dictionary_) for r in check_byte_records(X)]


class BlockCompressor(BaseByteTransformer):
    """Whole-pipeline compressor: record in, container bytes out.

    The parameter is called ``front_transform`` because ``transform`` is
    already the estimator method name.
    """

    def __init__(self, front_transform: str = "idbe", block_size: int = DEFAULT_BLOCK_SIZE,
                 max_words: int | None = None):
        self.front_transform = front_transform
        self.block_size = block_size
        self.max_words = max_words
        self.dictionary_: Dictionary | None = None
        self.fitted_ = None

    def _config(self) -> PipelineConfig:
        source = DICT_EXTERNAL if self.front_transform != TRANSFORM_NONE else "none"
        return PipelineConfig(
            transform=self.front_transform,
            block_size=self.block_size,
            dictionary_source=source,
        )

    def fit(self, X, y=None):
        records = check_byte_records(X)
        if self.front_transform != TRANSFORM_NONE:
            self.dictionary_ = build_dictionary(
                _capped_lexicon(records, self.max_words)
            )
        self.fitted_ = True
        return self

    def transform(self, X) -> list[bytes]:
        check_is_fitted(self, "fitted_")
        cfg = self._config()
        return [compress(r, cfg, self.dictionary_) for r in check_byte_records(X)]

    def inverse_transform(self, X) -> list[bytes]:
        check_is_fitted(self, "fitted_")
        return [decompress(r, self.dictionary_) for r in check_byte_records(X)]
