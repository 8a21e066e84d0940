"""JSON lattice documents and Graphviz output."""

from __future__ import annotations

import json

from .errors import InputError
from .involution import InvolutionStructure, lattice_of, validate_involution
from .lattice import from_cover_relation

FIELDS = ("n", "covers", "labels", "involution", "brouwer")


def to_document(S) -> dict:
    """Document with fields in the fixed order n, covers, labels, involution, brouwer."""
    L = lattice_of(S)
    doc = {"n": L.n, "covers": [list(c) for c in L.covers()]}
    if L.labels:
        doc["labels"] = list(L.labels)
    if isinstance(S, InvolutionStructure):
        doc["involution"] = list(S.inv)
        if S.brouwer is not None:
            doc["brouwer"] = list(S.brouwer)
    return doc


def dumps(S) -> str:
    return json.dumps(to_document(S)) + "\n"


def from_document(doc: dict):
    if not isinstance(doc, dict):
        raise InputError("lattice document must be a JSON object")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise InputError(f"unknown fields in lattice document: {unknown}")
    if "n" not in doc or "covers" not in doc:
        raise InputError("lattice document needs 'n' and 'covers'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError("'n' must be an integer")
    covers = doc["covers"]
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) for v in c)
        for c in covers
    ):
        raise InputError("'covers' must be a list of [int, int] pairs")
    labels = doc.get("labels")
    if labels is not None and not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
        raise InputError("'labels' must be a list of strings")
    L = from_cover_relation(n, [tuple(c) for c in covers], labels)
    inv = doc.get("involution")
    br = doc.get("brouwer")
    if br is not None and inv is None:
        raise InputError("a Brouwer complement needs an involution")
    if inv is None:
        return L
    for name, f in (("involution", inv), ("brouwer", br)):
        if f is not None and not (isinstance(f, list) and all(isinstance(v, int) for v in f)):
            raise InputError(f"'{name}' must be a list of integers")
    return validate_involution(L, inv, br)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return from_document(doc)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(S, name: str = "lattice") -> str:
    """Hasse diagram, bottom to top; involution pairs as dashed undirected arcs."""
    L = lattice_of(S)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.n):
        out.append(f"  n{x} [label={_quote(L.label(x))}];")
    for x, y in L.covers():
        out.append(f"  n{x} -> n{y};")
    if isinstance(S, InvolutionStructure):
        for x in range(L.n):
            y = S.inv[x]
            if x <= y:
                out.append(f"  n{x} -> n{y} [style=dashed, dir=none, constraint=false];")
    out.append("}")
    return "\n".join(out) + "\n"
