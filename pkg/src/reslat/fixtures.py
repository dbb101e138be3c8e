"""Reference algebras with known structure.

Four small algebras exercised throughout the tests and available to the
verifier: the two 3-chains, the 4-element Boolean algebra, and the
5-element diamond with a new top glued on (mult is meet there).  The
last one is the standard example where Boolean lifting fails: its
radical filter gains complemented classes out of nowhere.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import FiniteResiduatedLattice, validate_algebra
from .construct import boolean_algebra, godel_chain, lukasiewicz_chain


@lru_cache(maxsize=None)
def godel3() -> FiniteResiduatedLattice:
    return godel_chain(3, name="godel3")


@lru_cache(maxsize=None)
def lukasiewicz3() -> FiniteResiduatedLattice:
    return lukasiewicz_chain(3, name="lukasiewicz3")


@lru_cache(maxsize=None)
def boolean4() -> FiniteResiduatedLattice:
    return boolean_algebra(2, name="bool4")


@lru_cache(maxsize=None)
def diamondtop5() -> FiniteResiduatedLattice:
    """Diamond 0 < a,b < c plus a top above it, with mult = meet.

    The implication table is passed in explicitly so the validator
    cross-checks it against the recomputed residuum.
    """
    join = (
        (0, 1, 2, 3, 4),
        (1, 1, 3, 3, 4),
        (2, 3, 2, 3, 4),
        (3, 3, 3, 3, 4),
        (4, 4, 4, 4, 4),
    )
    mult = (
        (0, 0, 0, 0, 0),
        (0, 1, 0, 1, 1),
        (0, 0, 2, 2, 2),
        (0, 1, 2, 3, 3),
        (0, 1, 2, 3, 4),
    )
    imp = (
        (4, 4, 4, 4, 4),
        (2, 4, 2, 4, 4),
        (1, 1, 4, 4, 4),
        (0, 1, 2, 4, 4),
        (0, 1, 2, 3, 4),
    )
    return validate_algebra(
        5,
        join,
        mult,
        imp=imp,
        name="diamondtop5",
        labels=("0", "a", "b", "c", "1"),
    )


FIXTURES = {
    "godel3": godel3,
    "lukasiewicz3": lukasiewicz3,
    "bool4": boolean4,
    "diamondtop5": diamondtop5,
}


def all_fixtures() -> tuple[FiniteResiduatedLattice, ...]:
    return tuple(make() for make in FIXTURES.values())
