"""JSON interchange for presentations and restricted Lie structures.

A presentation document is a plain dict shaped like::

    {"format_version": "1", "p": 2, "dim": 2,
     "basis": ["1", "x"], "unit": [1, 0],
     "mult": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1]],
     "counit": [1, 0],
     "comult": [[0, 0, 0, 1], [1, 0, 1, 1], [1, 1, 0, 1]],
     "antipode": [[1, 0], [0, 1]]}

Sparse tables list only the nonzero structure constants as quadruples
``[i, j, k, c]`` sorted by ``(i, j, k)``; vectors and the optional antipode
grid stay dense.  Serialization is canonical, so ``serialize(parse(doc))``
reproduces ``doc`` exactly and ``parse(serialize(h))`` reproduces ``h``.

A restricted Lie document uses the same envelope with ``bracket`` quadruples
and ``pmap`` triples ``[i, k, c]`` in place of the coalgebra fields.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import AlgebraData
from .errors import InputError
from .hopf import HopfPresentation
from .linalg import check_prime
from .rlie import RestrictedLie

FORMAT_VERSION = "1"

_PRESENTATION_KEYS = frozenset(
    ["format_version", "p", "dim", "basis", "unit", "mult", "counit", "comult", "antipode"]
)
_LIE_KEYS = frozenset(["format_version", "p", "dim", "bracket", "pmap"])


def _as_int(value, field: str) -> int:
    # bool is an int subclass; a document saying "true" is still malformed.
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{field} must be an integer, got {value!r}")
    return value


def _as_index(value, dim: int, field: str) -> int:
    i = _as_int(value, field)
    if not 0 <= i < dim:
        raise InputError(f"{field} index {i} out of range for dim {dim}")
    return i


def _as_coeff(value, p: int, field: str) -> int:
    c = _as_int(value, field)
    if not 0 <= c < p:
        raise InputError(f"{field} coefficient {c} not reduced mod {p}")
    return c


def _parse_vector(values, dim: int, p: int, field: str) -> np.ndarray:
    if not isinstance(values, list) or len(values) != dim:
        raise InputError(f"{field} must be a list of {dim} coefficients")
    return np.array([_as_coeff(v, p, field) for v in values], dtype=np.int64)


def _parse_rows(entries, width: int, dim: int, p: int, field: str) -> list[tuple]:
    """Shared shape/range pass for quadruple and triple tables."""
    if not isinstance(entries, list):
        raise InputError(f"{field} must be a list of entries")
    rows = []
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != width:
            raise InputError(f"each {field} entry must be a list of {width} integers")
        *indices, c = entry
        key = tuple(_as_index(ix, dim, field) for ix in indices)
        c = _as_coeff(c, p, field)
        if c == 0:
            raise InputError(f"{field} entry {entry} stores an explicit zero")
        rows.append(key + (c,))
    keys = [r[:-1] for r in rows]
    if len(set(keys)) != len(keys):
        raise InputError(f"{field} has duplicate index entries")
    return rows


def _parse_quads(entries, dim: int, p: int, field: str) -> np.ndarray:
    t = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, j, k, c in _parse_rows(entries, 4, dim, p, field):
        t[i, j, k] = c
    return t


def _quads(t: np.ndarray) -> list[list[int]]:
    return [[int(i), int(j), int(k), int(t[i, j, k])] for i, j, k in zip(*np.nonzero(t))]


def serialize(h: HopfPresentation) -> dict:
    """Canonical JSON-ready dict for a presentation.

    Missing labels are filled with "e0", "e1", ... so the document always
    names its basis; the antipode key is present only when one is attached.
    """
    alg = h.algebra
    labels = alg.labels or tuple(f"e{i}" for i in range(alg.dim))
    doc = {
        "format_version": FORMAT_VERSION,
        "p": int(alg.p),
        "dim": int(alg.dim),
        "basis": list(labels),
        "unit": [int(c) for c in alg.unit],
        "mult": _quads(alg.mult),
        "counit": [int(c) for c in h.counit],
        "comult": _quads(h.comult),
    }
    if h.antipode is not None:
        doc["antipode"] = [[int(c) for c in row] for row in h.antipode]
    return doc


def _check_envelope(doc, allowed: frozenset, required: frozenset) -> tuple[int, int]:
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise InputError(f"format_version must be {FORMAT_VERSION!r}")
    unknown = set(doc) - allowed
    if unknown:
        raise InputError(f"unknown document keys: {sorted(unknown)}")
    missing = required - set(doc)
    if missing:
        raise InputError(f"missing document keys: {sorted(missing)}")
    p = check_prime(_as_int(doc["p"], "p"))
    dim = _as_int(doc["dim"], "dim")
    if dim <= 0:
        raise InputError("dim must be positive")
    return p, dim


def parse(doc: dict) -> HopfPresentation:
    """Validate a presentation document and rebuild the structure tensors.

    Raises InputError on any structural defect (wrong types, indices out of
    range, unreduced coefficients, duplicate table entries).  Hopf axioms are
    deliberately not checked here; run check_hopf on the result for that.
    """
    p, dim = _check_envelope(doc, _PRESENTATION_KEYS, _PRESENTATION_KEYS - {"antipode"})
    basis = doc["basis"]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise InputError(f"basis must be a list of {dim} strings")
    alg = AlgebraData(
        p,
        _parse_quads(doc["mult"], dim, p, "mult"),
        _parse_vector(doc["unit"], dim, p, "unit"),
        labels=tuple(basis),
    )
    antipode = None
    if doc.get("antipode") is not None:
        grid = doc["antipode"]
        if not isinstance(grid, list) or len(grid) != dim:
            raise InputError(f"antipode must be a {dim}x{dim} grid")
        antipode = np.array([_parse_vector(row, dim, p, "antipode") for row in grid])
    return HopfPresentation(
        alg,
        _parse_quads(doc["comult"], dim, p, "comult"),
        _parse_vector(doc["counit"], dim, p, "counit"),
        antipode,
    )


def serialize_lie(g: RestrictedLie) -> dict:
    """Canonical dict for a restricted Lie structure: bracket quadruples plus pmap triples."""
    return {
        "format_version": FORMAT_VERSION,
        "p": int(g.p),
        "dim": int(g.dim),
        "bracket": _quads(g.bracket),
        "pmap": [[int(i), int(k), int(g.pmap[i, k])] for i, k in zip(*np.nonzero(g.pmap))],
    }


def parse_lie(doc: dict) -> RestrictedLie:
    """Validate a restricted Lie document; same strictness as parse."""
    p, dim = _check_envelope(doc, _LIE_KEYS, _LIE_KEYS)
    pmap = np.zeros((dim, dim), dtype=np.int64)
    for i, k, c in _parse_rows(doc["pmap"], 3, dim, p, "pmap"):
        pmap[i, k] = c
    return RestrictedLie(p, _parse_quads(doc["bracket"], dim, p, "bracket"), pmap)


def is_lie_document(doc) -> bool:
    """Cheap dispatch test used by file loaders; does not validate."""
    return isinstance(doc, dict) and "bracket" in doc and "mult" not in doc


def read_document(path: str) -> dict:
    """Load one JSON object from a file, mapping I/O and syntax errors to InputError."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path} must contain a JSON object")
    return doc
