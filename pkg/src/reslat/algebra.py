"""Finite commutative integral bounded residuated lattices, given by tables.

An algebra lives on the index set 0..size-1 with 0 the bottom and size-1
the top element.  The join and mult tables determine everything else: the
order is x <= y iff join(x,y) = y, the meet is the greatest lower bound in
that order, and the implication is the residuum a -> b = max{t | a*t <= b}.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache, reduce

Table = tuple[tuple[int, ...], ...]


class AlgebraError(Exception):
    """Base class for every structural error raised by this package."""


class MalformedInput(AlgebraError):
    """Input does not even have the right shape (bad sizes, bad entries)."""


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        args = ", ".join(str(w) for w in self.witness)
        return f"{self.axiom}({args})"


class ValidationFailed(AlgebraError):
    """Carries the full list of axiom violations found at one stage."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class NotALattice(ValidationFailed):
    pass


class NotAMonoid(ValidationFailed):
    pass


class NotResiduated(ValidationFailed):
    """The residuum max{t | a*t <= b} does not exist for some pair."""


class ResiduationFails(ValidationFailed):
    """The adjunction a <= b->c iff a*b <= c is broken for some triple."""


class ImpMismatch(ValidationFailed):
    """A supplied implication table differs from the canonical residuum."""


class InternalCheckFailed(AlgebraError):
    """A theorem used as a built-in cross-check failed: implementation bug."""


def _as_table(rows, size: int, what: str) -> Table:
    if not isinstance(rows, (list, tuple)) or len(rows) != size:
        raise MalformedInput(f"{what} table must have {size} rows")
    out = []
    for row in rows:
        if not isinstance(row, (list, tuple)) or len(row) != size:
            raise MalformedInput(f"{what} table rows must have length {size}")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise MalformedInput(f"{what} table entry {v!r} out of range 0..{size - 1}")
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class FiniteResiduatedLattice:
    """A validated algebra.  Instances are immutable; use validate_algebra."""

    size: int
    join: Table
    mult: Table
    meet: Table = field(compare=False)
    imp: Table = field(compare=False)
    le: tuple[tuple[bool, ...], ...] = field(compare=False)
    name: str | None = field(default=None, compare=False)
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.size - 1

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def trivial(self) -> bool:
        return self.size == 1

    def is_le(self, x: int, y: int) -> bool:
        return self.le[x][y]

    def neg(self, x: int) -> int:
        return self.imp[x][0]

    def biresiduum(self, x: int, y: int) -> int:
        return self.meet[self.imp[x][y]][self.imp[y][x]]

    def power(self, x: int, n: int) -> int:
        """x**n under mult; n=0 gives the top (empty product)."""
        acc = self.top
        for _ in range(n):
            acc = self.mult[acc][x]
        return acc

    def stable_power(self, x: int) -> int:
        # The sequence x, x^2, ... is weakly decreasing, so it freezes
        # within size steps; power(x, size) is the limit value.
        return self.power(x, self.size)

    def upset(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.elements if self.le[x][y])

    def downset(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.elements if self.le[y][x])

    def is_chain(self) -> bool:
        return all(
            self.le[x][y] or self.le[y][x]
            for x in self.elements
            for y in self.elements
        )

    def label(self, x: int) -> str:
        if self.labels is not None:
            return self.labels[x]
        return str(x)

    def label_set(self, xs) -> str:
        inner = ", ".join(self.label(x) for x in sorted(xs))
        return "{" + inner + "}"

    def __repr__(self) -> str:
        tag = self.name or f"size-{self.size}"
        return f"FiniteResiduatedLattice({tag})"


def _check_join(size: int, join: Table) -> list[Violation]:
    bad = []
    for x in range(size):
        if join[x][x] != x:
            bad.append(Violation("join-not-idempotent", (x,)))
        if join[0][x] != x:
            bad.append(Violation("bottom-not-least", (x,)))
        if join[x][size - 1] != size - 1:
            bad.append(Violation("top-not-greatest", (x,)))
        for y in range(x + 1, size):
            if join[x][y] != join[y][x]:
                bad.append(Violation("join-not-commutative", (x, y)))
    if bad:
        return bad
    for x, y, z in itertools.product(range(size), repeat=3):
        if join[join[x][y]][z] != join[x][join[y][z]]:
            bad.append(Violation("join-not-associative", (x, y, z)))
            if len(bad) >= 5:
                break
    return bad


def _le_from_join(size: int, join: Table) -> tuple[tuple[bool, ...], ...]:
    return tuple(
        tuple(join[x][y] == y for y in range(size)) for x in range(size)
    )


def _meet_from_le(size: int, le) -> tuple[Table | None, list[Violation]]:
    rows = []
    for x in range(size):
        row = []
        for y in range(size):
            lower = [t for t in range(size) if le[t][x] and le[t][y]]
            glb = [m for m in lower if all(le[t][m] for t in lower)]
            if not glb:
                return None, [Violation("meet-missing", (x, y))]
            row.append(glb[0])
        rows.append(tuple(row))
    return tuple(rows), []


def _check_mult(size: int, mult: Table) -> list[Violation]:
    bad = []
    top = size - 1
    for x in range(size):
        if mult[x][top] != x:
            bad.append(Violation("top-not-identity", (x,)))
        for y in range(x + 1, size):
            if mult[x][y] != mult[y][x]:
                bad.append(Violation("mult-not-commutative", (x, y)))
    if bad:
        return bad
    for x, y, z in itertools.product(range(size), repeat=3):
        if mult[mult[x][y]][z] != mult[x][mult[y][z]]:
            bad.append(Violation("mult-not-associative", (x, y, z)))
            if len(bad) >= 5:
                break
    return bad


def residuum_from_mult(le, mult: Table) -> Table:
    """Compute a -> b = max{t | a*t <= b}, or raise NotResiduated.

    The maximum exists for every pair exactly when mult preserves finite
    joins in each argument and annihilates the bottom; we detect failure
    directly by looking for the maximum.
    """
    size = len(mult)
    rows = []
    for a in range(size):
        row = []
        for b in range(size):
            sols = [t for t in range(size) if le[mult[a][t]][b]]
            best = [m for m in sols if all(le[t][m] for t in sols)]
            if not best:
                raise NotResiduated([Violation("residuum-missing", (a, b))])
            row.append(best[0])
        rows.append(tuple(row))
    return tuple(rows)


def _check_adjunction(size: int, le, mult: Table, imp: Table) -> list[Violation]:
    bad = []
    for a, b, c in itertools.product(range(size), repeat=3):
        if le[a][imp[b][c]] != le[mult[a][b]][c]:
            bad.append(Violation("residuation-law", (a, b, c)))
            if len(bad) >= 5:
                break
    return bad


def validate_algebra(
    size: int,
    join,
    mult,
    imp=None,
    name: str | None = None,
    labels=None,
) -> FiniteResiduatedLattice:
    """Validate raw tables and build the algebra, or raise with witnesses.

    Raises MalformedInput for shape problems, NotALattice / NotAMonoid /
    NotResiduated / ResiduationFails for axiom failures, and ImpMismatch
    when a supplied implication table disagrees with the canonical
    residuum computed from mult.
    """
    if not isinstance(size, int) or size < 1:
        raise MalformedInput(f"size must be a positive integer, got {size!r}")
    join_t = _as_table(join, size, "join")
    mult_t = _as_table(mult, size, "mult")
    imp_t = _as_table(imp, size, "imp") if imp is not None else None
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != size or len(set(labels)) != size:
            raise MalformedInput("labels must be distinct and match size")

    bad = _check_join(size, join_t)
    if bad:
        raise NotALattice(bad)
    le = _le_from_join(size, join_t)
    meet_t, bad = _meet_from_le(size, le)
    if bad:
        raise NotALattice(bad)

    bad = _check_mult(size, mult_t)
    if bad:
        raise NotAMonoid(bad)

    canon_imp = residuum_from_mult(le, mult_t)
    bad = _check_adjunction(size, le, mult_t, canon_imp)
    if bad:
        raise ResiduationFails(bad)

    if imp_t is not None and imp_t != canon_imp:
        diffs = [
            Violation("imp-mismatch", (x, y))
            for x in range(size)
            for y in range(size)
            if imp_t[x][y] != canon_imp[x][y]
        ]
        raise ImpMismatch(diffs[:5])

    return FiniteResiduatedLattice(
        size=size,
        join=join_t,
        mult=mult_t,
        meet=meet_t,
        imp=canon_imp,
        le=le,
        name=name,
        labels=labels,
    )


def check_tables(size: int, join, mult, imp=None) -> list[Violation]:
    """Collect all axiom violations without raising (used by the CLI)."""
    try:
        validate_algebra(size, join, mult, imp)
    except ValidationFailed as exc:
        return exc.violations
    return []


@dataclass(frozen=True)
class ElementClasses:
    booleans: frozenset[int]
    nilpotents: frozenset[int]
    dense: frozenset[int]
    regular: frozenset[int]
    idempotents: frozenset[int]
    archimedeans: frozenset[int]
    mult_is_meet: bool
    involutive: bool


@lru_cache(maxsize=None)
def element_classes(a: FiniteResiduatedLattice) -> ElementClasses:
    """Classify every element; the Boolean center is computed twice.

    The x | x v -x = top description and the complemented-element
    description must agree; a mismatch is an implementation bug.
    """
    by_join = frozenset(
        x for x in a.elements if a.join[x][a.neg(x)] == a.top
    )
    complemented = frozenset(
        x
        for x in a.elements
        if any(
            a.join[x][y] == a.top and a.meet[x][y] == a.bottom
            for y in a.elements
        )
    )
    if by_join != complemented:
        raise InternalCheckFailed(
            f"Boolean center routes disagree: {sorted(by_join)} vs {sorted(complemented)}"
        )
    nilpotents = frozenset(x for x in a.elements if a.stable_power(x) == a.bottom)
    dense = frozenset(x for x in a.elements if a.neg(x) == a.bottom)
    regular = frozenset(x for x in a.elements if a.neg(a.neg(x)) == x)
    idempotents = frozenset(x for x in a.elements if a.mult[x][x] == x)
    archimedeans = frozenset(
        x for x in a.elements if a.stable_power(x) in by_join
    )
    return ElementClasses(
        booleans=by_join,
        nilpotents=nilpotents,
        dense=dense,
        regular=regular,
        idempotents=idempotents,
        archimedeans=archimedeans,
        mult_is_meet=a.mult == a.meet,
        involutive=len(regular) == a.size,
    )


def booleans(a: FiniteResiduatedLattice) -> frozenset[int]:
    return element_classes(a).booleans


def nilpotents(a: FiniteResiduatedLattice) -> frozenset[int]:
    return element_classes(a).nilpotents


def mult_all(a: FiniteResiduatedLattice, xs) -> int:
    """Product of a collection of elements (empty product = top)."""
    return reduce(lambda p, x: a.mult[p][x], xs, a.top)
