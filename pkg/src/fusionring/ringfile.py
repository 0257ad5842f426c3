"""Canonical interchange formats.

A fusion ring is a single JSON document with integer-only payload:

    {"rank": R, "labels": [...], "dual": [...], "tensor": [[[c_ijk]]]}

tensor[i][j][k] is the coefficient of basis element k in the product of i
and j.  Serialization is canonical (sorted keys, fixed separators, trailing
newline), so identical rings produce identical bytes.

Character tables carry exact cyclotomic values as integer coefficient
vectors in the zeta_N power basis:

    {"group_order": n, "root_order": N, "class_sizes": [...],
     "values": [[[a0, a1, ...], ...], ...]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebraic import IsolatedRoot, Quadratic
from .construct import CharacterTable
from .cyclotomic import Cyc
from .errors import MalformedRingError
from .ring import FusionRing


def ring_to_dict(ring: FusionRing) -> dict:
    return {
        "rank": ring.rank,
        "labels": list(ring.labels),
        "dual": list(ring.dual),
        "tensor": ring.tensor.tolist(),
    }


def ring_from_dict(doc) -> FusionRing:
    if not isinstance(doc, dict):
        raise MalformedRingError("ring document must be a JSON object")
    missing = {"rank", "labels", "dual", "tensor"} - set(doc)
    if missing:
        raise MalformedRingError(f"missing fields: {sorted(missing)}")
    rank = doc["rank"]
    labels = doc["labels"]
    if not isinstance(rank, int) or not isinstance(labels, list) or len(labels) != rank:
        raise MalformedRingError("rank must be an integer matching len(labels)")
    return FusionRing(labels, doc["dual"], doc["tensor"])


def dumps_ring(ring: FusionRing) -> str:
    return json.dumps(ring_to_dict(ring), sort_keys=True, separators=(",", ":")) + "\n"


def loads_ring(text: str) -> FusionRing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRingError(f"invalid JSON: {exc}")
    return ring_from_dict(doc)


def save_ring(ring: FusionRing, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_ring(ring))


def load_ring(path: str) -> FusionRing:
    with open(path) as fh:
        return loads_ring(fh.read())


def load_character_table(path: str) -> CharacterTable:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MalformedRingError(f"invalid JSON: {exc}")
    for key in ("group_order", "root_order", "class_sizes", "values"):
        if key not in doc:
            raise MalformedRingError(f"character table missing field {key!r}")
    N = doc["root_order"]
    if not isinstance(N, int) or N < 1:
        raise MalformedRingError("root_order must be a positive integer")
    rows = []
    for row in doc["values"]:
        cells = []
        for vec in row:
            if not isinstance(vec, list) or not all(isinstance(a, int) for a in vec):
                raise MalformedRingError("character values must be integer coefficient vectors")
            cells.append(Cyc.from_vector(N, vec))
        rows.append(tuple(cells))
    table = CharacterTable(
        group_order=doc["group_order"],
        root_order=N,
        class_sizes=tuple(doc["class_sizes"]),
        values=tuple(rows),
    )
    table.validate()
    return table


def frac_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def alg_to_dict(x) -> dict:
    """Exact serialization: Quadratics as (a, b, D) triples with rationals as
    'p/q' strings, isolated roots as polynomial plus interval."""
    if isinstance(x, (int, Fraction)):
        x = Quadratic(x)
    if isinstance(x, Quadratic):
        return {"a": frac_str(x.a), "b": frac_str(x.b), "D": x.D}
    if isinstance(x, IsolatedRoot):
        lo, hi = x.interval()
        return {"poly": [int(c) for c in x.poly], "lo": frac_str(lo), "hi": frac_str(hi)}
    raise TypeError(f"cannot serialize {x!r}")


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
