"""Isomorphism testing and canonical forms.

Any isomorphism must fix the bottom and the top, so only permutations of
the interior elements are tried.  That keeps the search at (n-2)! which
is tiny for the sizes this package enumerates.  The canonical key is the
lexicographically least relabeling of the join and mult tables; two
algebras are isomorphic exactly when their keys match, and the key
doubles as a stable identity for dedup and for deterministic reports.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .algebra import FiniteResiduatedLattice


def _interior_perms(n):
    for mid in itertools.permutations(range(1, n - 1)):
        perm = (0,) + mid + (n - 1,)
        yield perm


def relabel_table(table, perm):
    n = len(perm)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            out[perm[x]][perm[y]] = perm[table[x][y]]
    return tuple(tuple(row) for row in out)


def _flat(table):
    return tuple(v for row in table for v in row)


@lru_cache(maxsize=None)
def canonical_key(a: FiniteResiduatedLattice) -> tuple[int, ...]:
    """Permutation-minimal flattening of (join, mult).

    The implication table is omitted on purpose: it is determined by the
    order and mult, so including it could only mask a relabeling bug.
    """
    n = a.size
    if n <= 2:
        return (n,) + _flat(a.join) + _flat(a.mult)
    best = None
    for perm in _interior_perms(n):
        cand = _flat(relabel_table(a.join, perm)) + _flat(relabel_table(a.mult, perm))
        if best is None or cand < best:
            best = cand
    return (n,) + best


def canonical_name(a: FiniteResiduatedLattice) -> str:
    key = canonical_key(a)
    return f"{key[0]}:" + "".join(str(v) for v in key[1:])


def find_isomorphism(a: FiniteResiduatedLattice, b: FiniteResiduatedLattice):
    """A structure-preserving bijection a -> b as a tuple, or None."""
    if a.size != b.size:
        return None
    n = a.size
    perms = [(0,)] if n == 1 else _interior_perms(n)
    for perm in perms:
        if relabel_table(a.join, perm) == b.join and relabel_table(a.mult, perm) == b.mult:
            return perm
    return None


def is_isomorphic(a: FiniteResiduatedLattice, b: FiniteResiduatedLattice) -> bool:
    return canonical_key(a) == canonical_key(b)
