"""Algebra JSON interchange.

Format: {"name"?: str, "size": int, "labels"?: [str], "join": [[int]],
"mult": [[int]], "imp"?: [[int]]} with 0-based row-major tables, t[x][y].
Index 0 must be the bottom element and index size-1 the top; a supplied
imp table is cross-checked against the canonical residuum.
"""
from __future__ import annotations

import json
import sys

from .algebra import FiniteResiduatedLattice, MalformedInput, validate_algebra


def algebra_from_dict(d) -> FiniteResiduatedLattice:
    if not isinstance(d, dict):
        raise MalformedInput("algebra JSON must be an object")
    unknown = set(d) - {"name", "size", "labels", "join", "mult", "imp"}
    if unknown:
        raise MalformedInput(f"unknown keys in algebra JSON: {sorted(unknown)}")
    for key in ("size", "join", "mult"):
        if key not in d:
            raise MalformedInput(f"algebra JSON missing required key {key!r}")
    name = d.get("name")
    if name is not None and not isinstance(name, str):
        raise MalformedInput("name must be a string")
    return validate_algebra(
        d["size"], d["join"], d["mult"],
        imp=d.get("imp"), name=name, labels=d.get("labels"),
    )


def algebra_to_dict(a: FiniteResiduatedLattice) -> dict:
    d: dict = {}
    if a.name is not None:
        d["name"] = a.name
    d["size"] = a.size
    if a.labels is not None:
        d["labels"] = list(a.labels)
    d["join"] = [list(row) for row in a.join]
    d["mult"] = [list(row) for row in a.mult]
    d["imp"] = [list(row) for row in a.imp]
    return d


def loads_algebra(text: str) -> FiniteResiduatedLattice:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not valid JSON: {exc}") from exc
    return algebra_from_dict(payload)


def dumps_algebra(a: FiniteResiduatedLattice) -> str:
    return json.dumps(algebra_to_dict(a), indent=2) + "\n"


def load_algebra(path: str) -> FiniteResiduatedLattice:
    """Read an algebra from a file path, with - meaning standard input."""
    if path == "-":
        return loads_algebra(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return loads_algebra(fh.read())


def dump_algebra(a: FiniteResiduatedLattice, path: str) -> None:
    if path == "-":
        sys.stdout.write(dumps_algebra(a))
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_algebra(a))
