"""Boolean lifting analysis.

The driving question for a filter F: does every complemented element of
the quotient A/F come from a complemented element of A?  This module
decides that per filter and for the whole algebra, computes the set of
elements whose complement-behaviour survives all quotients, checks the
equivalent normality and covering conditions, and searches for a
decomposition into local factors.

Several predicates here are computed along two genuinely different
routes on purpose.  When routes disagree the code raises instead of
picking one, because a disagreement means a bug, not a mathematical
fact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    AlgebraError,
    ElementClasses,
    FiniteResiduatedLattice,
    InternalCheckFailed,
    booleans,
    element_classes,
    nilpotents,
)
from .construct import IntervalPresentation, direct_product, interval_algebra
from .filters import (
    Filter,
    MixedAlgebras,
    all_filters,
    filter_join,
    filter_meet,
    principal_filter,
    quotient,
    radical,
    spectra,
)


class TrivialAlgebra(AlgebraError):
    """The one-element algebra was passed where it cannot be handled."""


class RouteDisagreement(InternalCheckFailed):
    """Two independent computations of the same set gave different answers."""


def s_witnesses(a: FiniteResiduatedLattice, x: int) -> frozenset[int]:
    """Complemented e with e in [x) and the complement of e in [neg x)."""
    up_x = a.upset(a.stable_power(x))
    up_nx = a.upset(a.stable_power(a.neg(x)))
    return frozenset(e for e in booleans(a) if e in up_x and a.neg(e) in up_nx)


@lru_cache(maxsize=None)
def s_set(a: FiniteResiduatedLattice) -> frozenset[int]:
    """Elements that keep a complemented shadow in every quotient.

    Route one uses the witness description above; route two asks for a
    complemented e whose biresiduum with x lies in the filter generated
    by x v neg x.  Both must agree.
    """
    bools = booleans(a)
    via_witness = frozenset(x for x in a.elements if s_witnesses(a, x))
    via_bires = set()
    for x in a.elements:
        gen = a.join[x][a.neg(x)]
        members = a.upset(a.stable_power(gen))
        if any(a.biresiduum(e, x) in members for e in bools):
            via_bires.add(x)
    if via_witness != frozenset(via_bires):
        raise RouteDisagreement(
            f"witness route {sorted(via_witness)} vs biresiduum route {sorted(via_bires)}"
        )
    return via_witness


@dataclass(frozen=True)
class FilterBlpVerdict:
    filter: Filter
    holds: bool
    witness: int | None
    quotient_boolean_classes: frozenset[int]
    lifted_boolean_classes: frozenset[int]


@lru_cache(maxsize=None)
def filter_has_blp(a: FiniteResiduatedLattice, f: Filter) -> FilterBlpVerdict:
    """Whether every complemented class of A/F lifts to a complemented element.

    The complemented classes of the quotient are computed directly on
    the quotient algebra and also via the description {x/F | x v neg x
    in F}; the two must match.  The witness, when lifting fails, is the
    least x whose class is complemented but not in the lifted image.
    """
    if f.algebra is not a and f.algebra != a:
        raise MixedAlgebras("filter belongs to a different algebra")
    qp = quotient(a, f)
    direct = booleans(qp.algebra)
    formula = frozenset(
        qp.class_of[x]
        for x in a.elements
        if a.join[x][a.neg(x)] in f.members
    )
    if direct != formula:
        raise RouteDisagreement(
            "quotient booleans "
            f"{sorted(direct)} vs join-complement description {sorted(formula)}"
        )
    lifted = frozenset(qp.class_of[e] for e in booleans(a))
    if not lifted <= direct:
        raise InternalCheckFailed("a projected complemented element lost its complement")
    holds = direct == lifted
    witness = None
    if not holds:
        for x in a.elements:
            if a.join[x][a.neg(x)] in f.members and qp.class_of[x] not in lifted:
                witness = x
                break
    return FilterBlpVerdict(
        filter=f,
        holds=holds,
        witness=witness,
        quotient_boolean_classes=direct,
        lifted_boolean_classes=lifted,
    )


@lru_cache(maxsize=None)
def projection_injective_on_booleans(a: FiniteResiduatedLattice, f: Filter) -> bool:
    """Whether distinct complemented elements stay distinct in A/F.

    Route one: the only complemented element inside F is the top.
    Route two: count the classes directly.
    """
    qp = quotient(a, f)
    bools = booleans(a)
    via_kernel = (bools & f.members) == frozenset({a.top})
    via_count = len({qp.class_of[e] for e in bools}) == len(bools)
    if via_kernel != via_count:
        raise RouteDisagreement("kernel route and counting route disagree")
    return via_kernel


@dataclass(frozen=True)
class AlgebraBlpVerdict:
    holds: bool
    via_s_set: bool
    via_filters: bool
    failing_filter: Filter | None


@lru_cache(maxsize=None)
def algebra_has_blp(a: FiniteResiduatedLattice) -> AlgebraBlpVerdict:
    """Lifting for every filter at once.

    Route one: the surviving set is everything.  Route two: ask each
    filter.  The first failing filter (smallest, then lexicographic) is
    kept as evidence.
    """
    via_s = s_set(a) == frozenset(a.elements)
    failing = None
    for f in all_filters(a):
        if not filter_has_blp(a, f).holds:
            failing = f
            break
    via_filters = failing is None
    if via_s != via_filters:
        raise RouteDisagreement(
            f"surviving-set route says {via_s}, per-filter route says {via_filters}"
        )
    return AlgebraBlpVerdict(
        holds=via_s, via_s_set=via_s, via_filters=via_filters, failing_filter=failing
    )


def is_quasi_local(a: FiniteResiduatedLattice) -> bool:
    """Every element has a complemented e killing its stable power.

    Demands mult(stable(x), e) = 0 and mult(stable(neg x), neg e) = 0
    for some complemented e.
    """
    bools = booleans(a)
    for x in a.elements:
        sx = a.stable_power(x)
        snx = a.stable_power(a.neg(x))
        if not any(
            a.mult[sx][e] == a.bottom and a.mult[snx][a.neg(e)] == a.bottom
            for e in bools
        ):
            return False
    return True


def b_normal_on_principal_filters(a: FiniteResiduatedLattice) -> bool:
    """Normality of the filter lattice with complemented separators.

    Whenever two filters join to the whole algebra, complemented
    members of the filter lattice must separate them: E meet F trivial,
    U v E and V v F both improper.  Checked verbatim on the filter
    lattice and again elementwise (x*y nilpotent forces complemented
    e, f with e v f = 1 and x*e, y*f nilpotent); the two must agree.
    """
    filters = all_filters(a)
    universe = frozenset(a.elements)
    unit = frozenset((a.top,))
    bools = booleans(a)
    complemented = [
        e
        for e in filters
        if any(
            filter_join(e, f).members == universe
            and filter_meet(e, f).members == unit
            for f in filters
        )
    ]
    expected = {principal_filter(a, e).members for e in bools}
    if {e.members for e in complemented} != expected:
        raise InternalCheckFailed(
            "complemented filters are not exactly the principal filters of complemented elements"
        )
    verbatim = True
    for u, v in itertools.product(filters, repeat=2):
        if filter_join(u, v).members != universe:
            continue
        ok = any(
            filter_meet(e, f).members == unit
            and filter_join(u, e).members == universe
            and filter_join(v, f).members == universe
            for e in complemented
            for f in complemented
        )
        if not ok:
            verbatim = False
            break
    nil = nilpotents(a)
    elementwise = True
    for x in a.elements:
        for y in a.elements:
            if a.mult[x][y] not in nil:
                continue
            ok = any(
                a.join[e][f] == a.top
                and a.mult[x][e] in nil
                and a.mult[y][f] in nil
                for e in bools
                for f in bools
            )
            if not ok:
                elementwise = False
                break
        if not elementwise:
            break
    if verbatim != elementwise:
        raise RouteDisagreement("filter-level and element-level normality disagree")
    return verbatim


@dataclass(frozen=True)
class StarVerdict:
    holds: bool
    witness: int | None


def _principal_members(a, x):
    return a.upset(a.stable_power(x))


def _star_over(a, pool):
    bools = sorted(booleans(a))
    for x in a.elements:
        target = _principal_members(a, x)
        ok = any(
            _principal_members(a, a.mult[u][e]) == target
            for u in pool
            for e in bools
        )
        if not ok:
            return StarVerdict(holds=False, witness=x)
    return StarVerdict(holds=True, witness=None)


@lru_cache(maxsize=None)
def star_condition(a: FiniteResiduatedLattice) -> StarVerdict:
    """Every principal filter is generated by a radical element times a
    complemented one."""
    return _star_over(a, sorted(radical(a).members))


@lru_cache(maxsize=None)
def star_star_condition(a: FiniteResiduatedLattice) -> StarVerdict:
    """Weaker form: the first generator only needs a nilpotent negation."""
    nil = nilpotents(a)
    pool = sorted(u for u in a.elements if a.neg(u) in nil)
    return _star_over(a, pool)


@dataclass(frozen=True)
class Decomposition:
    complete_set: tuple[int, ...]
    factors: tuple[IntervalPresentation, ...]

    @property
    def factor_algebras(self):
        return tuple(p.algebra for p in self.factors)


def _is_local_algebra(alg):
    return len(spectra(alg).maximal) == 1


def _complete_set(a, combo):
    m = combo[0]
    for e in combo[1:]:
        m = a.meet[m][e]
    if m != a.bottom:
        return False
    for e, f in itertools.combinations(combo, 2):
        if a.join[e][f] != a.top:
            return False
    return True


def _check_product_reconstruction(a, combo, factors):
    prod = direct_product(tuple(p.algebra for p in factors))
    code = {}
    for x in a.elements:
        coords = tuple(p.child_of(a.join[x][e]) for e, p in zip(combo, factors))
        code[x] = prod.encode(coords)
    if prod.algebra.size != a.size or len(set(code.values())) != a.size:
        raise InternalCheckFailed("decomposition map is not a bijection")
    for x in a.elements:
        for y in a.elements:
            if code[a.join[x][y]] != prod.algebra.join[code[x]][code[y]]:
                raise InternalCheckFailed("decomposition map breaks join")
            if code[a.mult[x][y]] != prod.algebra.mult[code[x]][code[y]]:
                raise InternalCheckFailed("decomposition map breaks mult")
            if code[a.imp[x][y]] != prod.algebra.imp[code[x]][code[y]]:
                raise InternalCheckFailed("decomposition map breaks implication")


@lru_cache(maxsize=None)
def semiperfect_decomposition(a: FiniteResiduatedLattice) -> Decomposition | None:
    """Smallest complete set of complemented elements with local intervals.

    A complete set meets to the bottom and pairwise joins to the top;
    its interval algebras must all be local, and the algebra must then
    be isomorphic to their product via x -> (x v e_i)_i, which is
    checked elementwise.  For a local algebra the degenerate set {0}
    is the answer.  Returns None exactly when the algebra fails the
    lifting property; that equivalence is asserted, not assumed.
    """
    if a.trivial:
        raise TrivialAlgebra("the one-element algebra does not decompose")
    bools = sorted(booleans(a))
    result = None
    for n in range(1, len(bools) + 1):
        for combo in itertools.combinations(bools, n):
            if not _complete_set(a, combo):
                continue
            factors = tuple(interval_algebra(a, e) for e in combo)
            if not all(_is_local_algebra(p.algebra) for p in factors):
                continue
            _check_product_reconstruction(a, combo, factors)
            result = Decomposition(complete_set=combo, factors=factors)
            break
        if result is not None:
            break
    if (result is not None) != algebra_has_blp(a).holds:
        raise InternalCheckFailed("decomposition existence disagrees with the lifting verdict")
    return result


@dataclass(frozen=True)
class PerFilterReport:
    members: tuple[int, ...]
    proper: bool
    prime: bool
    maximal: bool
    has_blp: bool
    blp_witness: int | None
    projection_injective: bool


@dataclass(frozen=True)
class AnalysisReport:
    algebra: FiniteResiduatedLattice
    classes: ElementClasses
    s_set: tuple[int, ...]
    s_witness_counts: tuple[int, ...]
    has_blp: bool
    quasi_local: bool
    b_normal: bool
    star: StarVerdict
    star_star: StarVerdict
    local: bool
    semilocal: int
    simple: bool
    hyperarchimedean: bool
    semiperfect: bool
    boolean_center_trivial: bool
    filters: tuple[PerFilterReport, ...]
    prime_filters: tuple[tuple[int, ...], ...]
    maximal_filters: tuple[tuple[int, ...], ...]
    radical_members: tuple[int, ...]
    decomposition: Decomposition | None
    blp_failing_filter: tuple[int, ...] | None
    blp_witness: int | None

    def to_json_dict(self) -> dict:
        a = self.algebra
        return {
            "schema_version": 1,
            "name": a.name,
            "size": a.size,
            "labels": list(a.labels) if a.labels is not None else None,
            "flags": {
                "b_normal": self.b_normal,
                "boolean_center_trivial": self.boolean_center_trivial,
                "has_blp": self.has_blp,
                "hyperarchimedean": self.hyperarchimedean,
                "involutive": self.classes.involutive,
                "local": self.local,
                "maximal": True,
                "mult_is_meet": self.classes.mult_is_meet,
                "quasi_local": self.quasi_local,
                "semilocal_degree": self.semilocal,
                "semiperfect": self.semiperfect,
                "simple": self.simple,
                "star": self.star.holds,
                "star_star": self.star_star.holds,
            },
            "element_classes": {
                "archimedeans": sorted(self.classes.archimedeans),
                "booleans": sorted(self.classes.booleans),
                "dense": sorted(self.classes.dense),
                "idempotents": sorted(self.classes.idempotents),
                "nilpotents": sorted(self.classes.nilpotents),
                "regular": sorted(self.classes.regular),
            },
            "s_set": list(self.s_set),
            "s_witness_counts": list(self.s_witness_counts),
            "filters": [
                {
                    "members": list(p.members),
                    "proper": p.proper,
                    "prime": p.prime,
                    "maximal": p.maximal,
                    "has_blp": p.has_blp,
                    "blp_witness": p.blp_witness,
                    "projection_injective": p.projection_injective,
                }
                for p in self.filters
            ],
            "spectrum": {
                "prime": [list(m) for m in self.prime_filters],
                "maximal": [list(m) for m in self.maximal_filters],
            },
            "radical": list(self.radical_members),
            "witnesses": {
                "blp_failing_filter": list(self.blp_failing_filter)
                if self.blp_failing_filter is not None
                else None,
                "blp_element": self.blp_witness,
                "star": self.star.witness,
                "star_star": self.star_star.witness,
            },
            "decomposition": {
                "complete_set": list(self.decomposition.complete_set),
                "factor_sizes": [
                    p.algebra.size for p in self.decomposition.factors
                ],
            }
            if self.decomposition is not None
            else None,
            "notes": {
                "maximal": "finite algebras always extend proper filters to maximal ones"
            },
        }


@lru_cache(maxsize=None)
def classify(a: FiniteResiduatedLattice) -> AnalysisReport:
    """Full structural report for one algebra."""
    cls = element_classes(a)
    s = s_set(a)
    sp = spectra(a)
    rad = radical(a)
    filters = all_filters(a)
    prime_sets = {f.members for f in sp.prime}
    maximal_sets = {f.members for f in sp.maximal}
    per = []
    for f in filters:
        v = filter_has_blp(a, f)
        per.append(
            PerFilterReport(
                members=tuple(sorted(f.members)),
                proper=f.proper,
                prime=f.members in prime_sets,
                maximal=f.members in maximal_sets,
                has_blp=v.holds,
                blp_witness=v.witness,
                projection_injective=projection_injective_on_booleans(a, f),
            )
        )
    blp = algebra_has_blp(a)
    decomposition = None if a.trivial else semiperfect_decomposition(a)
    blp_witness = None
    if blp.failing_filter is not None:
        blp_witness = filter_has_blp(a, blp.failing_filter).witness
    return AnalysisReport(
        algebra=a,
        classes=cls,
        s_set=tuple(sorted(s)),
        s_witness_counts=tuple(len(s_witnesses(a, x)) for x in a.elements),
        has_blp=blp.holds,
        quasi_local=is_quasi_local(a),
        b_normal=b_normal_on_principal_filters(a),
        star=star_condition(a),
        star_star=star_star_condition(a),
        local=len(sp.maximal) == 1,
        semilocal=len(sp.maximal),
        simple=len(filters) == 2,
        hyperarchimedean=cls.archimedeans == frozenset(a.elements),
        semiperfect=decomposition is not None,
        boolean_center_trivial=cls.booleans <= frozenset((a.bottom, a.top)),
        filters=tuple(per),
        prime_filters=tuple(tuple(sorted(f.members)) for f in sp.prime),
        maximal_filters=tuple(tuple(sorted(f.members)) for f in sp.maximal),
        radical_members=tuple(sorted(rad.members)),
        decomposition=decomposition,
        blp_failing_filter=tuple(sorted(blp.failing_filter.members))
        if blp.failing_filter is not None
        else None,
        blp_witness=blp_witness,
    )
