"""Invariants of essentially isolated determinantal singularities.

Every entry point takes a variety descriptor (a dict, a JSON string or a path
to a JSON file) and returns the same JSON objects the ``detsing`` CLI places
under ``result``.
"""

from __future__ import annotations

import json
import os
from typing import Any, Optional, Sequence, Union

from . import _core

__all__ = [
    "DESCRIPTOR_SCHEMA",
    "REPORT_SCHEMA",
    "DetsingError",
    "check",
    "genericity",
    "invariants",
    "milnor_number",
    "search",
    "swallowtail",
]

DESCRIPTOR_SCHEMA: str = _core.DESCRIPTOR_SCHEMA
REPORT_SCHEMA: str = _core.REPORT_SCHEMA

Descriptor = Union[dict, str, "os.PathLike[str]"]


class DetsingError(ValueError):
    """A library failure; ``kind`` names the error class (e.g. ``"ParseError"``)."""

    def __init__(self, message: str):
        super().__init__(message)
        head, sep, _ = message.partition(":")
        self.kind = head if sep and head.isidentifier() else "Unknown"


def _text(descriptor: Descriptor) -> str:
    if isinstance(descriptor, dict):
        return json.dumps(descriptor)
    if isinstance(descriptor, os.PathLike) or (
        isinstance(descriptor, str) and not descriptor.lstrip().startswith("{")
    ):
        with open(descriptor, encoding="utf-8") as f:
            return f.read()
    return descriptor


def _call(fn, *args, **kwargs) -> Any:
    try:
        return json.loads(fn(*args, **kwargs))
    except _core.Error as e:
        raise DetsingError(str(e)) from None


def check(descriptor: Descriptor, mode: str = "rational") -> dict:
    """Type, expected dimension, smoothability class and the EIDS test."""
    return _call(_core.check, _text(descriptor), mode)


def invariants(
    descriptor: Descriptor,
    seed: int = 1,
    hyperplane: Optional[str] = None,
    le_greuel: bool = False,
    mode: str = "rational",
) -> dict:
    """Polar multiplicities, Euler characteristic, vanishing Euler
    characteristic and (when defined) the Milnor number."""
    return _call(_core.invariants, _text(descriptor), seed, hyperplane, le_greuel, mode)


def genericity(
    descriptor: Descriptor, hyperplane: str, seed: int = 1, trials: int = 0, mode: str = "rational"
) -> dict:
    """Strong generality verdict for a named hyperplane or a literal form."""
    return _call(_core.genericity, _text(descriptor), hyperplane, seed, trials, mode)


def search(descriptor: Descriptor, seed: int = 1, trials: int = 0, mode: str = "rational") -> dict:
    """Minimal section invariants over seeded random hyperplanes."""
    return _call(_core.search, _text(descriptor), seed, trials, mode)


def swallowtail(mode: str = "rational") -> dict:
    """Tangent cone, strata and the two special sections of the swallowtail."""
    return _call(_core.swallowtail, mode)


def milnor_number(variables: Sequence[str], f: str) -> int:
    """Milnor number at the origin of an isolated hypersurface singularity."""
    try:
        return _core.milnor_number(list(variables), f)
    except _core.Error as e:
        raise DetsingError(str(e)) from None
