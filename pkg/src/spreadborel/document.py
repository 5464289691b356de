"""Versioned JSON document describing an ideal: ``n``, ``t`` and ``generators``."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import SpreadBorelError
from .ideals import MonomialIdeal, minimal_generators
from .monomials import SpreadVector, monomials_from, render_monomial

FORMAT_NAME = "spread-borel-ideal"
FORMAT_VERSION = 1


class DocumentError(SpreadBorelError):
    pass


def ideal_to_document(I: MonomialIdeal, t: SpreadVector | None = None) -> dict[str, Any]:
    t = t if t is not None else I.spread
    doc: dict[str, Any] = {"format": FORMAT_NAME, "version": FORMAT_VERSION, "n": I.n}
    if t is not None:
        doc["t"] = list(t.entries)
    doc["generators"] = [render_monomial(u) for u in I.gens]
    return doc


def ideal_from_document(doc: dict[str, Any]) -> tuple[MonomialIdeal, SpreadVector | None]:
    if not isinstance(doc, dict):
        raise DocumentError("ideal document must be a JSON object")
    version = doc.get("version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported document version {version!r}")
    fmt = doc.get("format", FORMAT_NAME)
    if fmt != FORMAT_NAME:
        raise DocumentError(f"unexpected document format {fmt!r}")
    try:
        n = int(doc["n"])
        raw = doc.get("generators", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed ideal document: {exc}") from None
    if not isinstance(raw, list):
        raise DocumentError("'generators' must be a list")
    t = SpreadVector(tuple(doc["t"])) if doc.get("t") is not None else None
    gens = monomials_from(raw, n)
    return minimal_generators(gens, n), t


def dumps(I: MonomialIdeal, t: SpreadVector | None = None) -> str:
    return json.dumps(ideal_to_document(I, t), indent=2)


def loads(text: str) -> tuple[MonomialIdeal, SpreadVector | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return ideal_from_document(doc)


def load(path: str | Path) -> tuple[MonomialIdeal, SpreadVector | None]:
    return loads(Path(path).read_text())
