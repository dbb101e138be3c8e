"""Exhaustive generation of small algebras up to isomorphism.

Two stages: first every bounded lattice on n elements (join tables,
backtracking over the unknown interior joins), then every residuated
mult table over each lattice (backtracking over interior products with
monotonicity pruning).  Results are deduplicated by canonical key, so
the output is one representative per isomorphism class, in a fixed
order with stable names.
"""
from __future__ import annotations

import dataclasses
import itertools
from functools import lru_cache

from .algebra import (
    AlgebraError,
    FiniteResiduatedLattice,
    MalformedInput,
    validate_algebra,
)
from .isomorphism import canonical_key, relabel_table

DEFAULT_MAX_SIZE = 6


class SizeTooLarge(AlgebraError):
    """The requested size is beyond the configured enumeration cap."""


def _check_size(n, max_size):
    if not isinstance(n, int) or n < 1:
        raise MalformedInput(f"size must be a positive integer, got {n!r}")
    if n > max_size:
        raise SizeTooLarge(f"size {n} exceeds the enumeration cap {max_size}")


def _canon_join(n, join):
    if n <= 2:
        return join
    best = None
    for midperm in itertools.permutations(range(1, n - 1)):
        perm = (0,) + midperm + (n - 1,)
        cand = relabel_table(join, perm)
        if best is None or cand < best:
            best = cand
    return best


@lru_cache(maxsize=None)
def enumerate_lattices(n: int, max_size: int = DEFAULT_MAX_SIZE):
    """Join tables of the n-element bounded lattices, one per iso class."""
    _check_size(n, max_size)
    if n == 1:
        return (((0,),),)
    top = n - 1
    join = [[None] * n for _ in range(n)]
    for x in range(n):
        join[x][x] = x
        join[0][x] = join[x][0] = x
        join[top][x] = join[x][top] = top
    free = [(x, y) for x in range(1, top) for y in range(x + 1, top)]
    found = {}

    def known(x, y):
        return join[x][y]

    def leaf_ok():
        for x in range(n):
            for y in range(x, n):
                for z in range(n):
                    if join[join[x][y]][z] != join[x][join[y][z]]:
                        return False
        le = [[join[x][y] == y for y in range(n)] for x in range(n)]
        for x in range(n):
            for y in range(x + 1, n):
                lower = [t for t in range(n) if le[t][x] and le[t][y]]
                if not any(all(le[s][m] for s in lower) for m in lower):
                    return False
        return True

    def assign(i):
        if i == len(free):
            if leaf_ok():
                table = tuple(tuple(row) for row in join)
                found.setdefault(_canon_join(n, table), table)
            return
        x, y = free[i]
        for v in range(1, n):
            # v must be an upper bound of both x and y wherever that is
            # already decided
            jv = known(x, v) if v != y else None
            if jv is not None and jv != v:
                continue
            jv = known(y, v) if v != x else None
            if jv is not None and jv != v:
                continue
            join[x][y] = join[y][x] = v
            assign(i + 1)
            join[x][y] = join[y][x] = None

    assign(0)
    return tuple(found[k] for k in sorted(found))


def enumerate_residuated(join) -> tuple[FiniteResiduatedLattice, ...]:
    """All residuated mult tables over one join table, as validated algebras.

    Backtracks over the interior products in a fixed pair order.  A
    candidate value must sit below the meet of its arguments and respect
    monotonicity against every product already placed; a full table must
    be associative and distribute over join, and then goes through the
    standard validator, which recomputes the residuum and checks the
    adjunction on every triple.
    """
    join = tuple(tuple(row) for row in join)
    n = len(join)
    if n == 1:
        return (validate_algebra(1, ((0,),), ((0,),)),)
    top = n - 1
    le = [[join[x][y] == y for y in range(n)] for x in range(n)]
    meet = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            lower = [t for t in range(n) if le[t][x] and le[t][y]]
            best = [m for m in lower if all(le[s][m] for s in lower)]
            if len(best) != 1:
                raise MalformedInput("join table is not a lattice")
            meet[x][y] = best[0]
    mult = [[None] * n for _ in range(n)]
    for x in range(n):
        mult[x][top] = mult[top][x] = x
        mult[x][0] = mult[0][x] = 0
    free = [(x, y) for x in range(1, top) for y in range(x, top)]
    out = []

    def consistent(x, y, v):
        for p in range(n):
            for q in range(p, n):
                w = mult[p][q]
                if w is None:
                    continue
                up = (le[p][x] and le[q][y]) or (le[p][y] and le[q][x])
                if up and not le[w][v]:
                    return False
                down = (le[x][p] and le[y][q]) or (le[x][q] and le[y][p])
                if down and not le[v][w]:
                    return False
        return True

    def leaf():
        for x in range(n):
            for y in range(x, n):
                for z in range(n):
                    if mult[mult[x][y]][z] != mult[x][mult[y][z]]:
                        return
        for x in range(n):
            for y in range(n):
                for z in range(y, n):
                    if mult[x][join[y][z]] != join[mult[x][y]][mult[x][z]]:
                        return
        out.append(
            validate_algebra(n, join, tuple(tuple(row) for row in mult))
        )

    def assign(i):
        if i == len(free):
            leaf()
            return
        x, y = free[i]
        for v in range(n):
            if not le[v][meet[x][y]]:
                continue
            if not consistent(x, y, v):
                continue
            mult[x][y] = mult[y][x] = v
            assign(i + 1)
            mult[x][y] = mult[y][x] = None

    assign(0)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_algebras(
    n: int, max_size: int = DEFAULT_MAX_SIZE
) -> tuple[FiniteResiduatedLattice, ...]:
    """Every n-element algebra up to isomorphism, deterministically named."""
    _check_size(n, max_size)
    reps = {}
    for join in enumerate_lattices(n, max_size):
        for alg in enumerate_residuated(join):
            reps.setdefault(canonical_key(alg), alg)
    ordered = [reps[k] for k in sorted(reps)]
    return tuple(
        dataclasses.replace(alg, name=f"n{n}-{i+1:02d}")
        for i, alg in enumerate(ordered)
    )


def corpus_up_to(max_n: int, max_size: int = DEFAULT_MAX_SIZE):
    """All algebras of size 1 through max_n, enumeration order."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_algebras(n, max_size))
    return tuple(out)
