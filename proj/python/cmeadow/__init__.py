"""Common meadow arithmetic with totalized log2, information measures and identity checks."""

from ._core import (
    Error,
    InexactError,
    ParseError,
    bayes,
    check,
    crossentropy,
    entropy,
    eval,
    flatten,
    js,
    kl,
    normalize,
    suites,
)

__all__ = [
    "Error",
    "InexactError",
    "ParseError",
    "bayes",
    "check",
    "crossentropy",
    "entropy",
    "eval",
    "flatten",
    "js",
    "kl",
    "normalize",
    "suites",
]
