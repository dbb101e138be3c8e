"""Builders for standard algebras and algebra surgery.

Covers the named chain families, Boolean algebras, direct products,
the interval algebra sitting above a complemented element, restriction
to a principal down-set, and stacking a chain on top of or underneath
an existing algebra.  Every constructor runs its output through full
validation; nothing here hand-waves a table into existence.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .algebra import (
    AlgebraError,
    FiniteResiduatedLattice,
    InternalCheckFailed,
    booleans,
    validate_algebra,
)


class EmptyList(AlgebraError):
    """A product of zero factors was requested."""


class NotBoolean(AlgebraError):
    """The chosen element is not complemented, so no interval algebra exists."""


class ShapeMismatch(AlgebraError):
    """The algebra does not have the split shape the restriction needs."""


def godel_chain(n: int, name: str | None = None) -> FiniteResiduatedLattice:
    """Chain 0 < a1 < ... < 1 with mult = min."""
    if n < 1:
        raise AlgebraError(f"chain size must be positive, got {n}")
    join = [[max(x, y) for y in range(n)] for x in range(n)]
    mult = [[min(x, y) for y in range(n)] for x in range(n)]
    return validate_algebra(
        n, join, mult, name=name or f"godel{n}", labels=_chain_labels(n)
    )


def lukasiewicz_chain(n: int, name: str | None = None) -> FiniteResiduatedLattice:
    """Chain with truncated addition: x*y = max(0, x+y-(n-1))."""
    if n < 1:
        raise AlgebraError(f"chain size must be positive, got {n}")
    top = n - 1
    join = [[max(x, y) for y in range(n)] for x in range(n)]
    mult = [[max(0, x + y - top) for y in range(n)] for x in range(n)]
    imp = [[min(top, top - x + y) for y in range(n)] for x in range(n)]
    return validate_algebra(
        n, join, mult, imp=imp, name=name or f"lukasiewicz{n}", labels=_chain_labels(n)
    )


def _chain_labels(n):
    if n == 1:
        return ("0",)
    return ("0",) + tuple(f"a{i}" for i in range(1, n - 1)) + ("1",)


def boolean_algebra(atoms: int, name: str | None = None) -> FiniteResiduatedLattice:
    """Powerset of `atoms` generators, elements encoded as bitmasks."""
    if atoms < 0:
        raise AlgebraError(f"atom count must be nonnegative, got {atoms}")
    if atoms > 6:
        raise AlgebraError(f"atom count {atoms} too large (max 6)")
    n = 1 << atoms
    full = n - 1
    join = [[x | y for y in range(n)] for x in range(n)]
    mult = [[x & y for y in range(n)] for x in range(n)]
    imp = [[(~x & full) | y for y in range(n)] for x in range(n)]
    labels = []
    for m in range(n):
        if m == 0:
            labels.append("0")
        elif m == full and atoms > 1:
            labels.append("1")
        else:
            labels.append("".join(f"a{i+1}" for i in range(atoms) if m >> i & 1))
    a = validate_algebra(
        n, join, mult, imp=imp, name=name or f"bool{n}", labels=tuple(labels)
    )
    if booleans(a) != frozenset(range(n)):
        raise InternalCheckFailed("boolean algebra has non-complemented elements")
    return a


@dataclass(frozen=True)
class ProductPresentation:
    """A product algebra together with its coordinate encoding.

    Index layout is row-major over the factor list: the last factor's
    coordinate varies fastest.
    """

    algebra: FiniteResiduatedLattice
    factor_sizes: tuple[int, ...]
    factors: tuple[FiniteResiduatedLattice, ...] = dataclasses.field(compare=False)

    def encode(self, coords) -> int:
        coords = tuple(coords)
        if len(coords) != len(self.factor_sizes):
            raise AlgebraError("coordinate arity does not match factor count")
        idx = 0
        for c, sz in zip(coords, self.factor_sizes):
            if not 0 <= c < sz:
                raise AlgebraError(f"coordinate {c} out of range for factor of size {sz}")
            idx = idx * sz + c
        return idx

    def decode(self, idx: int) -> tuple[int, ...]:
        coords = []
        for sz in reversed(self.factor_sizes):
            coords.append(idx % sz)
            idx //= sz
        return tuple(reversed(coords))


def direct_product(factors) -> ProductPresentation:
    factors = tuple(factors)
    if not factors:
        raise EmptyList("a product needs at least one factor")
    sizes = tuple(f.size for f in factors)
    n = 1
    for sz in sizes:
        n *= sz

    def enc(coords):
        idx = 0
        for c, sz in zip(coords, sizes):
            idx = idx * sz + c
        return idx

    def dec(idx):
        coords = []
        for sz in reversed(sizes):
            coords.append(idx % sz)
            idx //= sz
        return tuple(reversed(coords))

    def lift(opname):
        table = [[0] * n for _ in range(n)]
        for x in range(n):
            cx = dec(x)
            for y in range(n):
                cy = dec(y)
                table[x][y] = enc(
                    getattr(f, opname)[a][b] for f, a, b in zip(factors, cx, cy)
                )
        return table

    join = lift("join")
    mult = lift("mult")
    imp = lift("imp")
    labels = None
    if all(f.labels is not None for f in factors):
        labels = tuple(
            "(" + ",".join(f.label(c) for f, c in zip(factors, dec(x))) + ")"
            for x in range(n)
        )
    name = None
    if all(f.name for f in factors):
        name = "*".join(f.name for f in factors)
    algebra = validate_algebra(n, join, mult, imp=imp, name=name, labels=labels)
    expected_bools = frozenset(
        enc(coords)
        for coords in _cartesian([sorted(booleans(f)) for f in factors])
    )
    if booleans(algebra) != expected_bools:
        raise InternalCheckFailed("complemented elements of a product are not componentwise")
    return ProductPresentation(algebra=algebra, factor_sizes=sizes, factors=factors)


def _cartesian(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _cartesian(lists[1:]):
            yield (head,) + rest


@dataclass(frozen=True)
class IntervalPresentation:
    """The interval algebra above a complemented element.

    `parent_of[i]` is the element of the ambient algebra that child
    index i stands for.  Child 0 is the chosen element (the new bottom)
    and the last child is the ambient top.
    """

    algebra: FiniteResiduatedLattice
    parent_of: tuple[int, ...]

    def child_of(self, parent: int) -> int:
        try:
            return self.parent_of.index(parent)
        except ValueError:
            raise AlgebraError(f"element {parent} is not in the interval") from None


def interval_algebra(a: FiniteResiduatedLattice, e: int) -> IntervalPresentation:
    """The up-set of e as an algebra, with x -> y read as e v (x -> y)."""
    if e not in booleans(a):
        raise NotBoolean(f"element {e} has no complement")
    members = a.upset(e)
    if e == a.top:
        order = [e]
    else:
        order = [e] + sorted(members - {e, a.top}) + [a.top]
    child = {p: i for i, p in enumerate(order)}
    m = len(order)
    join = [[child[a.join[x][y]] for y in order] for x in order]
    mult = [[child[a.mult[x][y]] for y in order] for x in order]
    imp = [[child[a.join[e][a.imp[x][y]]] for y in order] for x in order]
    labels = None
    if a.labels is not None:
        labels = tuple(a.labels[p] for p in order)
    name = f"{a.name}^{e}" if a.name else None
    alg = validate_algebra(m, join, mult, imp=imp, name=name, labels=labels)
    return IntervalPresentation(algebra=alg, parent_of=tuple(order))


def _ordered_restriction(a: FiniteResiduatedLattice, junction: int):
    """Index order for the down-set of junction: bottom, middles, junction."""
    members = a.downset(junction)
    if junction == a.bottom:
        return [a.bottom]
    return [a.bottom] + sorted(members - {a.bottom, junction}) + [junction]


def _restrict_to_downset(a: FiniteResiduatedLattice, junction: int, name):
    order = _ordered_restriction(a, junction)
    memberset = set(order)
    child = {p: i for i, p in enumerate(order)}
    m = len(order)
    join = [[child[a.join[x][y]] for y in order] for x in order]
    mult = [[child[a.mult[x][y]] for y in order] for x in order]
    imp = [[0] * m for _ in range(m)]
    for i, x in enumerate(order):
        for j, y in enumerate(order):
            if a.is_le(x, y):
                imp[i][j] = child[junction]
            else:
                t = a.imp[x][y]
                if t not in memberset:
                    raise ShapeMismatch(
                        f"implication {x}->{y} leaves the interval (got {t})"
                    )
                imp[i][j] = child[t]
    labels = None
    if a.labels is not None:
        labels = tuple(a.labels[p] for p in order)
    alg = validate_algebra(m, join, mult, imp=imp, name=name, labels=labels)
    return alg, tuple(order)


@dataclass(frozen=True)
class RestrictionPresentation:
    algebra: FiniteResiduatedLattice
    parent_of: tuple[int, ...]


def restrict_lower(a: FiniteResiduatedLattice, junction: int) -> RestrictionPresentation:
    """The part below `junction` when everything above it is a chain.

    Precondition: the up-set of junction is a chain and together with the
    down-set covers the algebra.  The junction becomes the new top.
    """
    _check_split_shape(a, junction, chain_side="upper")
    name = f"{a.name}<={a.label(junction)}" if a.name else None
    alg, order = _restrict_to_downset(a, junction, name)
    return RestrictionPresentation(algebra=alg, parent_of=order)


def restrict_bottom_chain(a: FiniteResiduatedLattice, junction: int) -> RestrictionPresentation:
    """The part below `junction` when that part is itself a chain.

    Same construction as restrict_lower, but the shape hypothesis is on
    the other side: the down-set of junction must be the chain.
    """
    _check_split_shape(a, junction, chain_side="lower")
    name = f"{a.name}<={a.label(junction)}" if a.name else None
    alg, order = _restrict_to_downset(a, junction, name)
    return RestrictionPresentation(algebra=alg, parent_of=order)


def _check_split_shape(a, junction, chain_side):
    if not 0 <= junction < a.size:
        raise ShapeMismatch(f"junction {junction} out of range")
    up = a.upset(junction)
    down = a.downset(junction)
    if up | down != frozenset(a.elements):
        raise ShapeMismatch("junction is not comparable with every element")
    side = up if chain_side == "upper" else down
    for x in side:
        for y in side:
            if not (a.is_le(x, y) or a.is_le(y, x)):
                raise ShapeMismatch(
                    f"{chain_side} part is not a chain: {x} and {y} incomparable"
                )


def stack_chain(
    a: FiniteResiduatedLattice, k: int, position: str
) -> FiniteResiduatedLattice:
    """Glue a k-element chain above or below the whole algebra.

    position="top": the new elements sit strictly above the old top and
    multiply as meet against everything.  Old indices are unchanged.
    position="bottom": the new elements sit strictly below the old
    bottom, old indices shift up by k, and old*new = new.
    """
    if k < 1:
        raise AlgebraError(f"chain length must be positive, got {k}")
    if position not in ("top", "bottom"):
        raise AlgebraError(f"position must be 'top' or 'bottom', got {position!r}")
    n = a.size
    m = n + k
    join = [[0] * m for _ in range(m)]
    mult = [[0] * m for _ in range(m)]
    if position == "top":
        shift = 0
        new = range(n, m)
        for x in range(m):
            for y in range(m):
                if x < n and y < n:
                    join[x][y] = a.join[x][y]
                    mult[x][y] = a.mult[x][y]
                elif x < n <= y:
                    join[x][y] = y
                    mult[x][y] = x
                elif y < n <= x:
                    join[x][y] = x
                    mult[x][y] = y
                else:
                    join[x][y] = max(x, y)
                    mult[x][y] = min(x, y)
    else:
        shift = k
        for x in range(m):
            for y in range(m):
                ox, oy = x - k, y - k
                if ox >= 0 and oy >= 0:
                    join[x][y] = a.join[ox][oy] + k
                    mult[x][y] = a.mult[ox][oy] + k
                elif ox < 0 and oy < 0:
                    join[x][y] = max(x, y)
                    mult[x][y] = min(x, y)
                else:
                    lo = min(x, y)
                    join[x][y] = max(x, y)
                    mult[x][y] = lo
    labels = None
    if a.labels is not None:
        fresh = tuple(f"s{i}" for i in range(1, k + 1))
        if position == "top":
            cand = a.labels + fresh
        else:
            cand = fresh[::-1] + a.labels
        if len(set(cand)) == m:
            labels = cand
    name = f"{a.name}+{position}{k}" if a.name else None
    out = validate_algebra(m, join, mult, name=name, labels=labels)
    if position == "top":
        back = restrict_lower(out, a.size - 1 + shift)
        same = (
            back.algebra.join == a.join
            and back.algebra.mult == a.mult
            and back.algebra.imp == a.imp
        )
        if not same:
            raise InternalCheckFailed("stacking then restricting did not return the input")
    return out
