"""Filters, spectra, radical, quotients.

A filter is an upward-closed, mult-closed subset containing the top.  In a
finite algebra every filter is principal: it is the up-set of its minimum,
which equals the mult-product of all its members.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    AlgebraError,
    FiniteResiduatedLattice,
    InternalCheckFailed,
    mult_all,
    validate_algebra,
)


class MixedAlgebras(AlgebraError):
    """Filter operation applied to filters of different algebras."""


class NotAFilter(AlgebraError):
    pass


class NotNested(AlgebraError):
    pass


class RadicalMismatch(InternalCheckFailed):
    """The intersection-of-maximals and arithmetic routes disagree."""


@dataclass(frozen=True)
class Filter:
    algebra: FiniteResiduatedLattice
    members: frozenset[int]
    generator: int = field(compare=False)

    @property
    def proper(self) -> bool:
        return len(self.members) < self.algebra.size

    def sort_key(self) -> tuple:
        return (len(self.members), tuple(sorted(self.members)))

    def __repr__(self) -> str:
        return f"Filter({self.algebra.label_set(self.members)})"


def is_filter_set(a: FiniteResiduatedLattice, s: frozenset[int]) -> bool:
    if a.top not in s:
        return False
    for x in s:
        for y in a.elements:
            if a.le[x][y] and y not in s:
                return False
        for y in s:
            if a.mult[x][y] not in s:
                return False
    return True


def _filter_from_members(a: FiniteResiduatedLattice, members: frozenset[int]) -> Filter:
    g = mult_all(a, sorted(members))
    f = Filter(algebra=a, members=members, generator=g)
    # Finite principality: the filter is the up-set of its generator.
    if members != a.upset(g):
        raise InternalCheckFailed(f"filter {sorted(members)} is not the up-set of {g}")
    return f


def principal_filter(a: FiniteResiduatedLattice, x: int) -> Filter:
    """[x) = everything above some power of x."""
    return _filter_from_members(a, a.upset(a.stable_power(x)))


def generated_filter(a: FiniteResiduatedLattice, xs) -> Filter:
    """Smallest filter containing the given elements (empty set gives {top})."""
    current = set(xs)
    current.add(a.top)
    while True:
        grown = set(current)
        for x, y in itertools.product(current, repeat=2):
            grown.add(a.mult[x][y])
        for x in list(grown):
            grown.update(y for y in a.elements if a.le[x][y])
        if grown == current:
            break
        current = grown
    return _filter_from_members(a, frozenset(current))


@lru_cache(maxsize=None)
def all_filters(a: FiniteResiduatedLattice) -> tuple[Filter, ...]:
    """Every filter, ordered by cardinality then members lexicographically."""
    seen: dict[frozenset[int], Filter] = {}
    for x in a.elements:
        f = principal_filter(a, x)
        seen.setdefault(f.members, f)
    return tuple(sorted(seen.values(), key=Filter.sort_key))


def _same_algebra(f: Filter, g: Filter) -> FiniteResiduatedLattice:
    if f.algebra != g.algebra:
        raise MixedAlgebras("filters belong to different algebras")
    return f.algebra


def filter_join(f: Filter, g: Filter) -> Filter:
    a = _same_algebra(f, g)
    return principal_filter(a, a.mult[f.generator][g.generator])


def filter_meet(f: Filter, g: Filter) -> Filter:
    a = _same_algebra(f, g)
    return _filter_from_members(a, f.members & g.members)


@dataclass(frozen=True)
class Spectra:
    prime: tuple[Filter, ...]
    maximal: tuple[Filter, ...]


@lru_cache(maxsize=None)
def spectra(a: FiniteResiduatedLattice) -> Spectra:
    """Prime and maximal filters; maximal ones are checked to be prime."""
    proper = [f for f in all_filters(a) if f.proper]
    prime = tuple(
        f
        for f in proper
        if all(
            x in f.members or y in f.members
            for x in a.elements
            for y in a.elements
            if a.join[x][y] in f.members
        )
    )
    maximal = tuple(
        f
        for f in proper
        if not any(g.proper and f.members < g.members for g in proper)
    )
    if not set(maximal) <= set(prime):
        raise InternalCheckFailed("a maximal filter failed the primality test")
    return Spectra(prime=prime, maximal=maximal)


@lru_cache(maxsize=None)
def radical(a: FiniteResiduatedLattice) -> Filter:
    """Intersection of all maximal filters, cross-checked arithmetically.

    The second route characterizes membership as: for every n there is a k
    with (-(x^n))^k = 0.  Both exponents are capped at size, which is
    lossless because the power sequences stabilize by then.
    """
    maximal = spectra(a).maximal
    members = frozenset(a.elements)
    for f in maximal:
        members &= f.members
    arithmetic = frozenset(
        x
        for x in a.elements
        if all(
            any(
                a.power(a.neg(a.power(x, n)), k) == a.bottom
                for k in range(1, a.size + 1)
            )
            for n in range(1, a.size + 1)
        )
    )
    if members != arithmetic:
        raise RadicalMismatch(
            f"radical routes disagree: {sorted(members)} vs {sorted(arithmetic)}"
        )
    return _filter_from_members(a, members)


@dataclass(frozen=True)
class QuotientPresentation:
    algebra: FiniteResiduatedLattice
    filter: Filter
    class_of: tuple[int, ...]
    representatives: tuple[int, ...]
    classes: tuple[frozenset[int], ...]


def _quotient_labels(a: FiniteResiduatedLattice, reps) -> tuple[str, ...] | None:
    if a.labels is None:
        return None
    return tuple(a.labels[r] for r in reps)


@lru_cache(maxsize=None)
def quotient(a: FiniteResiduatedLattice, f: Filter) -> QuotientPresentation:
    """A/F with x ~ y iff x<->y in F.  Class indices keep 0 bottom, last top.

    Classes are ordered bottom's class first, top's class (= F itself) last,
    the rest by smallest member index; representatives are smallest members.
    """
    if f.algebra != a:
        raise MixedAlgebras("filter does not belong to this algebra")
    if not is_filter_set(a, f.members):
        raise NotAFilter(f"{sorted(f.members)} is not a filter")

    in_f = f.members
    class_sets: list[frozenset[int]] = []
    assigned = [-1] * a.size
    for x in a.elements:
        if assigned[x] >= 0:
            continue
        cls = frozenset(y for y in a.elements if a.biresiduum(x, y) in in_f)
        idx = len(class_sets)
        class_sets.append(cls)
        for y in cls:
            if assigned[y] >= 0 and class_sets[assigned[y]] != cls:
                raise InternalCheckFailed("congruence classes are not a partition")
            assigned[y] = idx

    order = sorted(range(len(class_sets)), key=lambda i: min(class_sets[i]))
    bottom_cls = assigned[a.bottom]
    top_cls = assigned[a.top]
    if bottom_cls != top_cls:
        order.remove(bottom_cls)
        order.remove(top_cls)
        order = [bottom_cls] + order + [top_cls]
    new_index = {old: new for new, old in enumerate(order)}
    class_of = tuple(new_index[assigned[x]] for x in a.elements)
    classes = tuple(class_sets[i] for i in order)
    reps = tuple(min(c) for c in classes)
    m = len(classes)

    def table(op):
        return [
            [class_of[op[reps[i]][reps[j]]] for j in range(m)] for i in range(m)
        ]

    qjoin, qmult = table(a.join), table(a.mult)
    q = validate_algebra(
        m, qjoin, qmult,
        name=None, labels=_quotient_labels(a, reps),
    )
    # The relation must be a congruence for every operation, and the
    # quotient's canonical residuum must be the induced implication.
    for x, y in itertools.product(a.elements, repeat=2):
        cx, cy = class_of[x], class_of[y]
        if class_of[a.join[x][y]] != q.join[cx][cy]:
            raise InternalCheckFailed(f"join not compatible at ({x}, {y})")
        if class_of[a.mult[x][y]] != q.mult[cx][cy]:
            raise InternalCheckFailed(f"mult not compatible at ({x}, {y})")
        if class_of[a.imp[x][y]] != q.imp[cx][cy]:
            raise InternalCheckFailed(f"imp not compatible at ({x}, {y})")
    if classes[class_of[a.top]] != in_f:
        raise InternalCheckFailed("class of top does not equal the filter")
    return QuotientPresentation(
        algebra=q,
        filter=f,
        class_of=class_of,
        representatives=reps,
        classes=classes,
    )


def filter_image(qp: QuotientPresentation, g: Filter) -> Filter:
    """G/F inside the quotient algebra, for G a filter above F."""
    members = frozenset(qp.class_of[x] for x in g.members)
    return _filter_from_members(qp.algebra, members)


def second_isomorphism_check(
    a: FiniteResiduatedLattice, f: Filter, g: Filter
) -> bool:
    """Check A/G is isomorphic to (A/F)/(G/F) via the canonical map."""
    if f.algebra != a or g.algebra != a:
        raise MixedAlgebras("filters belong to a different algebra")
    if not f.members <= g.members:
        raise NotNested("first filter must be contained in the second")
    by_g = quotient(a, g)
    by_f = quotient(a, f)
    g_over_f = filter_image(by_f, g)
    iterated = quotient(by_f.algebra, g_over_f)

    phi: dict[int, int] = {}
    for x in a.elements:
        src = by_g.class_of[x]
        dst = iterated.class_of[by_f.class_of[x]]
        if phi.setdefault(src, dst) != dst:
            return False
    if len(set(phi.values())) != by_g.algebra.size:
        return False
    if iterated.algebra.size != by_g.algebra.size:
        return False
    qa, qb = by_g.algebra, iterated.algebra
    for i, j in itertools.product(range(qa.size), repeat=2):
        if phi[qa.join[i][j]] != qb.join[phi[i]][phi[j]]:
            return False
        if phi[qa.mult[i][j]] != qb.mult[phi[i]][phi[j]]:
            return False
    return True
