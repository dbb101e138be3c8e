"""Machine verification of the library's structural facts over a corpus.

Every registered check takes concrete finite algebras and hunts for
counterexamples by brute force.  Violations come back as plain data in
the report, never as exceptions, so a single bad instance cannot hide
the rest of the matrix.  Checks recompute their claims from first
principles wherever feasible instead of trusting the library's cached
classifications; when a claim has two published descriptions, both are
evaluated and compared.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    AlgebraError,
    FiniteResiduatedLattice,
    booleans,
    element_classes,
    mult_all,
)
from .blp import (
    algebra_has_blp,
    b_normal_on_principal_filters,
    classify,
    filter_has_blp,
    is_quasi_local,
    projection_injective_on_booleans,
    s_set,
    s_witnesses,
    semiperfect_decomposition,
    star_condition,
    star_star_condition,
)
from .construct import (
    direct_product,
    godel_chain,
    interval_algebra,
    restrict_bottom_chain,
    restrict_lower,
    stack_chain,
)
from .enumerator import DEFAULT_MAX_SIZE, corpus_up_to
from .filters import (
    all_filters,
    filter_image,
    filter_join,
    filter_meet,
    generated_filter,
    is_filter_set,
    principal_filter,
    quotient,
    radical,
    second_isomorphism_check,
    spectra,
)
from .fixtures import all_fixtures
from .isomorphism import canonical_name, is_isomorphic


class UnknownTheorem(AlgebraError):
    """A requested theorem id is not in the registry."""


# Witness lists are capped per corpus instance so a systematically wrong
# check cannot flood the report.
_UNIT_WITNESS_CAP = 25

_CANONICAL_NAME_LIMIT = 7


def _unit_name(a: FiniteResiduatedLattice) -> str:
    if a.name:
        return a.name
    if a.size <= _CANONICAL_NAME_LIMIT:
        return canonical_name(a)
    return f"unnamed-size-{a.size}"


def _universe(a):
    return frozenset(a.elements)


def _top_only(a):
    return frozenset({a.top})


def _is_simple(a):
    if a.trivial:
        return False
    sets = frozenset(f.members for f in all_filters(a))
    return sets == frozenset({_top_only(a), _universe(a)})


def _is_local(a):
    return len(spectra(a).maximal) == 1


def _all_comparable(a, members):
    return all(
        a.is_le(x, y) or a.is_le(y, x) for x in members for y in members
    )


# ---------------------------------------------------------------------------
# checks on a single algebra


def _chk_arithmetic(a):
    out = []
    els, j, me, mu, im = a.elements, a.join, a.meet, a.mult, a.imp
    neg, le, bot, top = a.neg, a.is_le, a.bottom, a.top

    def law(name, *xs):
        out.append({"law": name, "elements": list(xs)})

    if mu[bot][bot] != bot:
        law("0.0 = 0")
    if neg(top) != bot or neg(bot) != top:
        law("-1 = 0 and -0 = 1")
    for x in els:
        if (neg(x) == top) != (x == bot):
            law("-x = 1 only for x = 0", x)
        if mu[x][neg(x)] != bot:
            law("x.-x = 0", x)
        if not le(x, neg(neg(x))):
            law("x <= --x", x)
        if neg(neg(neg(x))) != neg(x):
            law("---x = -x", x)
    for x, y in itertools.product(els, repeat=2):
        if not le(mu[x][y], me[x][y]):
            law("x.y <= x^y", x, y)
        if not le(mu[x][y], im[x][y]):
            law("x.y <= x->y", x, y)
        if j[x][y] == top and mu[x][y] != me[x][y]:
            law("xvy = 1 makes the product the meet", x, y)
        zero = mu[x][y] == bot
        if zero != le(x, neg(y)) or zero != le(y, neg(x)):
            law("x.y = 0 iff x <= -y iff y <= -x", x, y)
        if not le(y, im[x][y]):
            law("y <= x->y", x, y)
        if not le(mu[x][im[x][y]], y):
            law("x.(x->y) <= y", x, y)
        if le(x, y) != (im[x][y] == top):
            law("x <= y iff x->y = 1", x, y)
        if (x == y) != (a.biresiduum(x, y) == top):
            law("x = y iff x<->y = 1", x, y)
        if not le(im[x][y], im[neg(y)][neg(x)]):
            law("x->y <= -y->-x", x, y)
        if le(x, y) and not le(neg(y), neg(x)):
            law("negation reverses order", x, y)
        val = neg(mu[x][y])
        if not (
            val
            == im[x][neg(y)]
            == im[y][neg(x)]
            == im[neg(neg(x))][neg(y)]
            == im[neg(neg(y))][neg(x)]
        ):
            law("-(x.y) equals its four arrow forms", x, y)
        if neg(j[x][y]) != me[neg(x)][neg(y)]:
            law("-(xvy) = -x ^ -y", x, y)
    for x, y, z in itertools.product(els, repeat=3):
        if le(x, y):
            if not le(im[y][z], im[x][z]):
                law("the arrow is antitone on the left", x, y, z)
            if not le(im[z][x], im[z][y]):
                law("the arrow is monotone on the right", x, y, z)
    for p, q, x, y in itertools.product(els, repeat=4):
        if le(p, q) and le(x, y) and not le(mu[p][x], mu[q][y]):
            law("the product is monotone in both slots", p, q, x, y)
        if not le(mu[im[p][q]][im[x][y]], im[me[p][x]][me[q][y]]):
            law("(p->q).(x->y) <= (p^x)->(q^y)", p, q, x, y)
    return out


def _chk_negation_power(a):
    """Powers of a negation stay below the negation of the power."""
    out = []
    for x in a.elements:
        for n in range(1, a.size + 1):
            if not a.is_le(a.power(a.neg(x), n), a.neg(a.power(x, n))):
                out.append({"element": x, "exponent": n})
    return out


def _chk_boolean_center(a):
    out = []
    els, j, me, mu, im = a.elements, a.join, a.meet, a.mult, a.imp
    neg, top, bot = a.neg, a.top, a.bottom
    bools = booleans(a)
    by_complement = frozenset(
        x for x in els if any(j[x][y] == top and me[x][y] == bot for y in els)
    )
    by_negation = frozenset(x for x in els if j[x][neg(x)] == top)
    if not (bools == by_complement == by_negation):
        out.append(
            {
                "fact": "the two descriptions of complemented elements agree",
                "by_complement": sorted(by_complement),
                "by_negation": sorted(by_negation),
            }
        )
    if bot not in bools or top not in bools:
        out.append({"fact": "0 and 1 are complemented"})
    for e in sorted(bools):
        comps = sorted(y for y in els if j[e][y] == top and me[e][y] == bot)
        if comps != [neg(e)]:
            out.append(
                {
                    "fact": "the only complement is the negation",
                    "element": e,
                    "complements": comps,
                }
            )
        if neg(neg(e)) != e:
            out.append({"fact": "--e = e on the center", "element": e})
        if (neg(e) == bot) != (e == top):
            out.append({"fact": "-e = 0 only for e = 1", "element": e})
        if mu[e][e] != e:
            out.append({"fact": "complemented elements are idempotent", "element": e})
        if neg(e) not in bools:
            out.append({"fact": "the center is closed under negation", "element": e})
        up = a.upset(e)
        if not is_filter_set(a, up):
            out.append(
                {"fact": "the up-set of a complemented element is a filter", "element": e}
            )
        if principal_filter(a, e).members != up:
            out.append({"fact": "[e) is the plain up-set", "element": e})
        for f in sorted(bools):
            if mu[e][f] != me[e][f]:
                out.append({"fact": "product is meet on the center", "elements": [e, f]})
            if j[e][f] not in bools or me[e][f] not in bools:
                out.append(
                    {"fact": "the center is closed under join and meet", "elements": [e, f]}
                )
        for x in els:
            if mu[x][e] != me[x][e]:
                out.append(
                    {"fact": "multiplying by a complemented element is meet", "elements": [x, e]}
                )
            if im[neg(e)][x] != j[e][x]:
                out.append({"fact": "-e -> x = e v x", "elements": [x, e]})
    for u, v in itertools.product(els, repeat=2):
        if j[u][v] == top and mu[u][v] == bot and u not in bools:
            out.append(
                {
                    "fact": "join 1 with product 0 puts both elements in the center",
                    "elements": [u, v],
                }
            )
    return out


def _chk_idempotent_nilpotent(a):
    out = []
    cls = element_classes(a)
    mu = a.mult
    universe = _universe(a)
    idem = frozenset(x for x in a.elements if mu[x][x] == x)
    if idem != cls.idempotents:
        out.append({"fact": "idempotent scan agrees with the classification"})
    meet_everywhere = all(
        mu[x][y] == a.meet[x][y] for x in a.elements for y in a.elements
    )
    if cls.mult_is_meet != meet_everywhere:
        out.append({"fact": "the product-is-meet flag matches the tables"})
    if meet_everywhere != (idem == universe):
        out.append({"fact": "product is meet exactly when every element is idempotent"})
    if cls.nilpotents & idem != frozenset({a.bottom}):
        out.append({"fact": "0 is the only idempotent nilpotent"})
    for x in a.elements:
        prev = x
        for n in range(2, a.size + 2):
            cur = a.power(x, n)
            if not a.is_le(cur, prev):
                out.append({"fact": "powers weakly decrease", "element": x, "exponent": n})
            prev = cur
        stable = a.stable_power(x)
        if a.power(x, a.size) != stable or a.power(x, a.size + 1) != stable:
            out.append({"fact": "powers stabilize within the size", "element": x})
        if mu[stable][stable] != stable:
            out.append({"fact": "the stable power is idempotent", "element": x})
        if (x in cls.nilpotents) != (stable == a.bottom):
            out.append({"fact": "nilpotent means the stable power is 0", "element": x})
        if (x in cls.archimedeans) != (stable in cls.booleans):
            out.append(
                {"fact": "archimedean means the stable power is complemented", "element": x}
            )
    return out


def _chk_filter_identities(a):
    out = []
    els, mu, me, j = a.elements, a.mult, a.meet, a.join
    universe = _universe(a)
    cls = element_classes(a)
    nil, idem = cls.nilpotents, cls.idempotents
    fl = all_filters(a)
    famsets = frozenset(f.members for f in fl)
    if famsets != frozenset(a.upset(e) for e in idem):
        out.append({"fact": "filters are exactly the up-sets of idempotents"})
    for f in fl:
        g = mult_all(a, sorted(f.members))
        if g not in f.members or mu[g][g] != g or f.members != a.upset(g):
            out.append(
                {
                    "fact": "a filter is the up-set of its idempotent minimum",
                    "filter": sorted(f.members),
                }
            )
    if a.size <= 5:
        by_scan = frozenset(
            frozenset(s)
            for r in range(1, a.size + 1)
            for s in itertools.combinations(els, r)
            if is_filter_set(a, frozenset(s))
        )
        if by_scan != famsets:
            out.append({"fact": "the filter family matches a full subset scan"})
    for x in els:
        px = principal_filter(a, x).members
        direct = frozenset(
            y
            for y in els
            if any(a.is_le(a.power(x, n), y) for n in range(1, a.size + 1))
        )
        if px != direct:
            out.append(
                {"fact": "[x) collects everything above a power of x", "element": x}
            )
        if (px == universe) != (x in nil):
            out.append({"fact": "[x) = A exactly for nilpotent x", "element": x})
        if (px == _top_only(a)) != (x == a.top):
            out.append({"fact": "[x) = {1} only for x = 1", "element": x})
        for n in range(1, a.size + 1):
            if principal_filter(a, a.power(x, n)).members != px:
                out.append({"fact": "[x^n) = [x)", "element": x, "exponent": n})
    for x, y in itertools.product(els, repeat=2):
        px = principal_filter(a, x)
        py = principal_filter(a, y)
        if px.members & py.members != principal_filter(a, j[x][y]).members:
            out.append({"fact": "[x) ^ [y) = [xvy)", "elements": [x, y]})
        joined = filter_join(px, py).members
        if (
            joined != principal_filter(a, mu[x][y]).members
            or joined != principal_filter(a, me[x][y]).members
        ):
            out.append({"fact": "[x) v [y) = [x.y) = [x^y)", "elements": [x, y]})
        if a.is_le(x, y) and not py.members <= px.members:
            out.append({"fact": "x <= y forces [y) inside [x)", "elements": [x, y]})
        if (
            x in idem
            and y in idem
            and a.is_le(x, y) != (py.members <= px.members)
        ):
            out.append(
                {
                    "fact": "on idempotents the order is reverse inclusion of filters",
                    "elements": [x, y],
                }
            )
    for f in fl:
        for x, y in itertools.product(els, repeat=2):
            inside = x in f.members and y in f.members
            if (mu[x][y] in f.members) != inside or (me[x][y] in f.members) != inside:
                out.append(
                    {
                        "fact": "x.y in F iff both in F iff x^y in F",
                        "filter": sorted(f.members),
                        "elements": [x, y],
                    }
                )
        if f.members & nil and f.members != universe:
            out.append(
                {
                    "fact": "a filter touching the nilpotents is everything",
                    "filter": sorted(f.members),
                }
            )
    for f, g, h in itertools.product(fl, repeat=3):
        lhs = filter_meet(f, filter_join(g, h)).members
        rhs = filter_join(filter_meet(f, g), filter_meet(f, h)).members
        if lhs != rhs:
            out.append(
                {
                    "fact": "the filter lattice is distributive",
                    "filters": [sorted(f.members), sorted(g.members), sorted(h.members)],
                }
            )
    return out


def _chk_spectrum(a):
    out = []
    universe = _universe(a)
    fl = all_filters(a)
    sp = spectra(a)
    proper = [f for f in fl if f.members != universe]
    prime_scan = frozenset(
        f.members
        for f in proper
        if all(
            x in f.members or y in f.members
            for x in a.elements
            for y in a.elements
            if a.join[x][y] in f.members
        )
    )
    prime_sets = frozenset(p.members for p in sp.prime)
    if prime_scan != prime_sets:
        out.append({"fact": "the prime scan agrees with the spectrum"})
    maximal_scan = frozenset(
        f.members
        for f in proper
        if not any(f.members < g.members for g in proper)
    )
    maximal_sets = frozenset(m.members for m in sp.maximal)
    if maximal_scan != maximal_sets:
        out.append({"fact": "the maximal scan agrees with the spectrum"})
    if not maximal_sets <= prime_sets:
        out.append({"fact": "maximal filters are prime"})
    if not a.trivial and not sp.maximal:
        out.append({"fact": "a nontrivial algebra has a maximal filter"})
    for f in proper:
        if not any(f.members <= m for m in maximal_sets):
            out.append(
                {
                    "fact": "every proper filter sits inside a maximal one",
                    "filter": sorted(f.members),
                }
            )
        above = [p for p in prime_sets if f.members <= p]
        if not above:
            out.append(
                {"fact": "a proper filter has a prime above it", "filter": sorted(f.members)}
            )
        else:
            inter = universe
            for p in above:
                inter &= p
            if inter != f.members:
                out.append(
                    {
                        "fact": "a proper filter is the intersection of the primes above it",
                        "filter": sorted(f.members),
                    }
                )
    for p in sp.prime:
        q = quotient(a, p).algebra
        if booleans(q) != frozenset({q.bottom, q.top}):
            out.append(
                {
                    "fact": "a prime quotient has no complemented elements beyond the bounds",
                    "filter": sorted(p.members),
                }
            )
    return out


def _chk_radical(a):
    out = []
    universe = _universe(a)
    rad = radical(a).members
    cls = element_classes(a)
    inter = universe
    for m in spectra(a).maximal:
        inter &= m.members
    if inter != rad:
        out.append({"fact": "the radical is the intersection of the maximal filters"})
    elementwise = frozenset(
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
    if elementwise != rad:
        out.append({"fact": "the arithmetic description of the radical agrees"})
    if not is_filter_set(a, rad):
        out.append({"fact": "the radical is a filter"})
    if cls.booleans & rad != _top_only(a):
        out.append({"fact": "the center meets the radical only at 1"})
    if not is_filter_set(a, cls.dense):
        out.append({"fact": "the dense elements form a filter"})
    if not cls.dense <= rad:
        out.append({"fact": "dense elements lie in the radical"})
    if cls.booleans & cls.dense != _top_only(a):
        out.append({"fact": "the center meets the dense part only at 1"})
    for x in sorted(rad):
        if a.neg(x) not in cls.nilpotents:
            out.append(
                {"fact": "negation sends the radical into the nilpotents", "element": x}
            )
    if a.trivial and rad != universe:
        out.append({"fact": "the one-point algebra is its own radical"})
    return out


def _chk_quotients(a):
    out = []
    universe = _universe(a)
    fl = all_filters(a)
    cls = element_classes(a)
    for f in fl:
        qp = quotient(a, f)
        q = qp.algebra
        fdesc = sorted(f.members)
        if qp.classes[qp.class_of[a.top]] != f.members:
            out.append({"fact": "the class of 1 is the filter", "filter": fdesc})
        for x in a.elements:
            if (qp.class_of[x] == qp.class_of[a.bottom]) != (a.neg(x) in f.members):
                out.append(
                    {
                        "fact": "x collapses to 0 exactly when -x is in the filter",
                        "filter": fdesc,
                        "element": x,
                    }
                )
        for x, y in itertools.product(a.elements, repeat=2):
            if (qp.class_of[x] == qp.class_of[y]) != (a.biresiduum(x, y) in f.members):
                out.append(
                    {
                        "fact": "classes follow the biresiduum congruence",
                        "filter": fdesc,
                        "elements": [x, y],
                    }
                )
            if q.le[qp.class_of[x]][qp.class_of[y]] != (a.imp[x][y] in f.members):
                out.append(
                    {
                        "fact": "the quotient order is arrow membership",
                        "filter": fdesc,
                        "elements": [x, y],
                    }
                )
        qnil = element_classes(q).nilpotents
        for x in sorted(cls.nilpotents):
            if qp.class_of[x] not in qnil:
                out.append(
                    {"fact": "nilpotents stay nilpotent in quotients", "filter": fdesc, "element": x}
                )
        if filter_image(qp, radical(a)).members != radical(q).members:
            out.append({"fact": "the radical passes to quotients", "filter": fdesc})
        above = [g for g in fl if f.members <= g.members]
        images = frozenset(filter_image(qp, g).members for g in above)
        qfam = frozenset(h.members for h in all_filters(q))
        if images != qfam or len(above) != len(qfam):
            out.append(
                {"fact": "filters above F match the quotient's filters one for one", "filter": fdesc}
            )
        for g in above:
            img = filter_image(qp, g).members
            back = frozenset(x for x in a.elements if qp.class_of[x] in img)
            if back != g.members:
                out.append(
                    {
                        "fact": "pulling an image back recovers the filter",
                        "filter": fdesc,
                        "larger": sorted(g.members),
                    }
                )
    trivial_f = next(f for f in fl if f.members == _top_only(a))
    if not is_isomorphic(quotient(a, trivial_f).algebra, a):
        out.append({"fact": "dividing by {1} changes nothing"})
    improper = next(f for f in fl if f.members == universe)
    if quotient(a, improper).algebra.size != 1:
        out.append({"fact": "dividing by everything leaves one point"})
    return out


def _chk_second_isomorphism(a):
    out = []
    fl = all_filters(a)
    for f in fl:
        for g in fl:
            if f.members <= g.members and not second_isomorphism_check(a, f, g):
                out.append(
                    {
                        "fact": "the iterated quotient matches the direct one",
                        "filters": [sorted(f.members), sorted(g.members)],
                    }
                )
    return out


def _chk_boolean_lift(a):
    out = []
    bools = booleans(a)
    for f in all_filters(a):
        qp = quotient(a, f)
        v = filter_has_blp(a, f)
        fdesc = sorted(f.members)
        direct = booleans(qp.algebra)
        formula = frozenset(
            qp.class_of[x]
            for x in a.elements
            if a.join[x][a.neg(x)] in f.members
        )
        if direct != v.quotient_boolean_classes or formula != direct:
            out.append(
                {"fact": "complemented classes are those with xv-x in the filter", "filter": fdesc}
            )
        lifted = frozenset(qp.class_of[e] for e in bools)
        if lifted != v.lifted_boolean_classes:
            out.append({"fact": "the lifted center matches the verdict", "filter": fdesc})
        if not lifted <= direct:
            out.append(
                {"fact": "the center lands inside the quotient's center", "filter": fdesc}
            )
        if v.holds != (lifted == direct):
            out.append({"fact": "the verdict says exactly when the lift is onto", "filter": fdesc})
        if not v.holds:
            w = v.witness
            genuine = (
                w is not None
                and a.join[w][a.neg(w)] in f.members
                and qp.class_of[w] not in lifted
            )
            if not genuine:
                out.append(
                    {"fact": "a failing filter names a genuinely unreached class", "filter": fdesc}
                )
    return out


def _chk_biresiduum_membership(a):
    out = []
    els = a.elements
    bools = booleans(a)
    for x in els:
        gen = a.join[x][a.neg(x)]
        fx = principal_filter(a, x).members
        fnx = principal_filter(a, a.neg(x)).members
        fgen = principal_filter(a, gen)
        for p in els:
            lhs = a.biresiduum(p, x) in fgen.members
            rhs = p in fx and a.neg(p) in fnx
            if lhs != rhs:
                out.append(
                    {
                        "fact": "biresiduum membership equals the two-sided description",
                        "elements": [p, x],
                    }
                )
        qp = quotient(a, fgen)
        if qp.class_of[x] not in booleans(qp.algebra):
            out.append(
                {"fact": "x becomes complemented after dividing by [xv-x)", "element": x}
            )
    via_witness = frozenset(x for x in els if s_witnesses(a, x))
    via_bires = frozenset(
        x
        for x in els
        if any(
            a.biresiduum(e, x)
            in principal_filter(a, a.join[x][a.neg(x)]).members
            for e in bools
        )
    )
    if via_witness != via_bires or via_witness != s_set(a):
        out.append(
            {
                "fact": "both global descriptions of the surviving set agree",
                "via_witness": sorted(via_witness),
                "via_biresiduum": sorted(via_bires),
            }
        )
    return out


def _chk_s_closure(a):
    out = []
    s = s_set(a)
    cls = element_classes(a)
    if not cls.booleans <= s:
        out.append({"fact": "the center survives"})
    if not cls.dense <= s:
        out.append({"fact": "dense elements survive"})
    if not radical(a).members <= s:
        out.append({"fact": "radical elements survive"})
    for x in a.elements:
        if a.neg(x) in s and x not in s:
            out.append({"fact": "survival pulls back along negation", "element": x})
        for n in range(2, a.size + 1):
            if a.power(x, n) in s and x not in s:
                out.append(
                    {"fact": "survival pulls back from powers", "element": x, "exponent": n}
                )
    return out


def _chk_s_quotient_image(a):
    out = []
    s = s_set(a)
    for f in all_filters(a):
        qp = quotient(a, f)
        image = frozenset(qp.class_of[x] for x in s)
        if not image <= s_set(qp.algebra):
            out.append(
                {
                    "fact": "surviving elements keep surviving in quotients",
                    "filter": sorted(f.members),
                }
            )
    return out


def _chk_blp_iff_s_full(a):
    out = []
    v = algebra_has_blp(a)
    if not (v.holds == v.via_s_set == v.via_filters):
        out.append({"fact": "the two global routes agree"})
    if v.holds != (s_set(a) == _universe(a)):
        out.append({"fact": "all filters lift exactly when every element survives"})
    if v.holds != all(filter_has_blp(a, f).holds for f in all_filters(a)):
        out.append({"fact": "the verdict matches the per-filter scan"})
    if not v.holds:
        ff = v.failing_filter
        if ff is None or filter_has_blp(a, ff).holds:
            out.append({"fact": "a failing algebra names a genuinely failing filter"})
    return out


def _chk_blp_iff_quotients(a):
    out = []
    fl = all_filters(a)
    q_blp = {f: algebra_has_blp(quotient(a, f).algebra).holds for f in fl}
    if algebra_has_blp(a).holds != all(q_blp.values()):
        out.append({"fact": "the algebra lifts exactly when every quotient lifts"})
    for f in fl:
        rhs = all(q_blp[g] for g in fl if f.members <= g.members)
        if q_blp[f] != rhs:
            out.append(
                {
                    "fact": "a quotient lifts exactly when all coarser quotients lift",
                    "filter": sorted(f.members),
                }
            )
    return out


def _chk_prime_blp(a):
    out = []
    sp = spectra(a)
    for p in sp.prime:
        if not filter_has_blp(a, p).holds:
            out.append({"fact": "prime filters lift", "filter": sorted(p.members)})
    for m in sp.maximal:
        if not filter_has_blp(a, m).holds:
            out.append({"fact": "maximal filters lift", "filter": sorted(m.members)})
    return out


def _chk_special_filters(a):
    out = []
    universe = _universe(a)
    fl = all_filters(a)
    cls = element_classes(a)
    trivial_f = next(f for f in fl if f.members == _top_only(a))
    improper = next(f for f in fl if f.members == universe)
    if not filter_has_blp(a, trivial_f).holds:
        out.append({"fact": "the filter {1} lifts"})
    if not projection_injective_on_booleans(a, trivial_f):
        out.append({"fact": "the lift along {1} is one to one"})
    if not filter_has_blp(a, improper).holds:
        out.append({"fact": "the improper filter lifts"})
    if projection_injective_on_booleans(a, improper) != (len(cls.booleans) == 1):
        out.append(
            {"fact": "collapsing everything is one to one only with a one-point center"}
        )
    for f in fl:
        q = quotient(a, f).algebra
        if booleans(q) == frozenset({q.bottom, q.top}):
            if not filter_has_blp(a, f).holds:
                out.append(
                    {
                        "fact": "a quotient center reduced to the bounds always lifts",
                        "filter": sorted(f.members),
                    }
                )
    if (a.trivial or _is_simple(a)) and not algebra_has_blp(a).holds:
        out.append({"fact": "one-point and simple algebras lift"})
    if cls.booleans == universe:
        if not algebra_has_blp(a).holds:
            out.append({"fact": "a fully complemented algebra lifts"})
        for f in fl:
            q = quotient(a, f).algebra
            if booleans(q) != frozenset(q.elements):
                out.append(
                    {
                        "fact": "quotients of a fully complemented algebra stay fully complemented",
                        "filter": sorted(f.members),
                    }
                )
    return out


def _chk_chain_facts(a):
    out = []
    if not a.is_chain():
        return out
    if not algebra_has_blp(a).holds:
        out.append({"fact": "chains lift"})
    if not star_condition(a).holds:
        out.append({"fact": "chains decompose over the radical"})
    if a.trivial:
        return out
    cls = element_classes(a)
    universe = _universe(a)
    if not _is_local(a):
        out.append({"fact": "a nontrivial chain is local"})
    if cls.booleans != frozenset({a.bottom, a.top}):
        out.append({"fact": "a nontrivial chain has only the bounds complemented"})
    for f in all_filters(a):
        inj = projection_injective_on_booleans(a, f)
        if f.members == universe:
            if inj:
                out.append({"fact": "collapsing a nontrivial chain loses the center"})
        elif not inj:
            out.append(
                {
                    "fact": "proper chain quotients keep the center intact",
                    "filter": sorted(f.members),
                }
            )
    if cls.mult_is_meet:
        expected = universe - {a.bottom}
        if cls.dense != expected or radical(a).members != expected:
            out.append(
                {"fact": "on an idempotent chain everything except 0 is dense and radical"}
            )
    return out


def _chk_local_characterizations(a):
    out = []
    if a.trivial:
        return out
    universe = _universe(a)
    nil = element_classes(a).nilpotents
    sp = spectra(a)
    rad = radical(a).members
    maximal_sets = [m.members for m in sp.maximal]
    complement = universe - nil
    local = len(sp.maximal) == 1
    forms = {
        "non-nilpotents form a filter": is_filter_set(a, complement),
        "non-nilpotents form a proper filter": is_filter_set(a, complement)
        and complement != universe,
        "non-nilpotents form a maximal filter": complement in maximal_sets,
        "exactly one maximal filter": len(sp.maximal) == 1,
        "radical equals the non-nilpotents": rad == complement,
        "nilpotents and radical cover everything": nil | rad == universe,
        "a nilpotent product has a nilpotent slot": all(
            x in nil or y in nil
            for x in a.elements
            for y in a.elements
            if a.mult[x][y] in nil
        ),
        "the radical is maximal": rad in maximal_sets,
        "the radical is the only maximal filter": maximal_sets == [rad],
    }
    for label, value in forms.items():
        if value != local:
            out.append(
                {
                    "fact": "the descriptions of a unique maximal filter are equivalent",
                    "form": label,
                    "form_value": value,
                    "local": local,
                }
            )
    if rad == universe - {a.bottom} and not local:
        out.append({"fact": "a radical missing only 0 forces locality"})
    return out


def _chk_local_consequences(a):
    out = []
    if a.trivial:
        return out
    universe = _universe(a)
    cls = element_classes(a)
    nil = cls.nilpotents
    sp = spectra(a)
    rad = radical(a).members
    local = len(sp.maximal) == 1
    two_point = cls.booleans == frozenset({a.bottom, a.top})
    blp = algebra_has_blp(a).holds
    star = star_condition(a).holds
    cover = nil | frozenset(x for x in a.elements if a.neg(x) in nil) == universe
    if local:
        if not two_point:
            out.append({"fact": "a local algebra has only the bounds complemented"})
        if not cover:
            out.append(
                {"fact": "in a local algebra each element or its negation is nilpotent"}
            )
        if not blp:
            out.append({"fact": "local algebras lift"})
        if not star:
            out.append({"fact": "local algebras decompose over the radical"})
        for f in all_filters(a):
            if f.members != universe and not projection_injective_on_booleans(a, f):
                out.append(
                    {
                        "fact": "proper local quotients keep the center intact",
                        "filter": sorted(f.members),
                    }
                )
    equivalents = {
        "quasi-local with bounds-only center": is_quasi_local(a) and two_point,
        "lifting with bounds-only center": blp and two_point,
        "radical decomposition with bounds-only center": star and two_point,
        "negation-nilpotent cover with bounds-only center": cover and two_point,
    }
    for label, value in equivalents.items():
        if value != local:
            out.append(
                {
                    "fact": "the descriptions of locality are equivalent",
                    "form": label,
                    "form_value": value,
                    "local": local,
                }
            )
    simple = _is_simple(a)
    maximal_sets = [m.members for m in sp.maximal]
    simple_forms = {
        "{1} is maximal": _top_only(a) in maximal_sets,
        "{1} is the only maximal filter": maximal_sets == [_top_only(a)],
        "local with radical {1}": local and rad == _top_only(a),
    }
    for label, value in simple_forms.items():
        if value != simple:
            out.append(
                {
                    "fact": "the descriptions of simplicity are equivalent",
                    "form": label,
                    "form_value": value,
                    "simple": simple,
                }
            )
    if two_point:
        if not (star == blp == local):
            out.append(
                {"fact": "with a bounds-only center decomposition, lifting and locality coincide"}
            )
        if cls.mult_is_meet and star_star_condition(a).holds != local:
            out.append(
                {"fact": "with idempotent product the weak decomposition joins the equivalence"}
            )
    return out


def _chk_quasi_local(a):
    out = []
    ql = is_quasi_local(a)
    if ql != algebra_has_blp(a).holds:
        out.append({"fact": "quasi-local and lifting coincide"})
    bools = booleans(a)
    raw = all(
        any(
            any(
                a.mult[a.power(x, n)][e] == a.bottom
                for n in range(1, a.size + 1)
            )
            and any(
                a.mult[a.power(a.neg(x), k)][a.neg(e)] == a.bottom
                for k in range(1, a.size + 1)
            )
            for e in bools
        )
        for x in a.elements
    )
    if raw != ql:
        out.append({"fact": "the stabilized test matches the raw exponent search"})
    return out


def _chk_normality(a):
    out = []
    if b_normal_on_principal_filters(a) != algebra_has_blp(a).holds:
        out.append({"fact": "splitting covers of principal filters matches lifting"})
    return out


def _chk_star_implications(a):
    out = []
    star = star_condition(a).holds
    starstar = star_star_condition(a).holds
    blp = algebra_has_blp(a).holds
    if star and not blp:
        out.append({"fact": "the strong decomposition forces lifting"})
    if blp and not star:
        out.append({"fact": "in the finite case lifting decomposes"})
    if blp and not starstar:
        out.append({"fact": "lifting gives the weak decomposition"})
    if star and not starstar:
        out.append({"fact": "the strong decomposition gives the weak one"})
    if element_classes(a).mult_is_meet and starstar != star:
        out.append({"fact": "with idempotent product the two decompositions coincide"})
    if blp != filter_has_blp(a, radical(a)).holds:
        out.append({"fact": "lifting is equivalent to lifting along the radical"})
    if a.trivial and not star:
        out.append({"fact": "the one-point algebra decomposes"})
    return out


def _chk_star_quotients(a):
    out = []
    star = star_condition(a).holds
    starstar = star_star_condition(a).holds
    fl = all_filters(a)
    q_star = all(star_condition(quotient(a, f).algebra).holds for f in fl)
    q_starstar = all(
        star_star_condition(quotient(a, f).algebra).holds for f in fl
    )
    if star != q_star:
        out.append(
            {
                "fact": "the strong decomposition passes to and from quotients",
                "algebra_value": star,
                "all_quotients": q_star,
            }
        )
    if starstar != q_starstar:
        out.append(
            {
                "fact": "the weak decomposition passes to and from quotients",
                "algebra_value": starstar,
                "all_quotients": q_starstar,
            }
        )
    return out


def _chk_star_radical_reduction(a):
    out = []
    rad = radical(a)
    lhs = star_condition(a).holds
    rhs = (
        star_condition(quotient(a, rad).algebra).holds
        and filter_has_blp(a, rad).holds
    )
    if lhs != rhs:
        out.append(
            {
                "fact": "decomposition splits into the radical quotient plus the radical lift",
                "whole": lhs,
                "split": rhs,
            }
        )
    return out


def _chk_star_covering(a):
    out = []
    cls = element_classes(a)
    universe = _universe(a)
    rad = radical(a).members
    star = star_condition(a).holds
    if cls.booleans | rad | cls.nilpotents == universe and not star:
        out.append(
            {"fact": "a cover by center, radical and nilpotents forces decomposition"}
        )
    if rad | cls.archimedeans == universe and not star:
        out.append({"fact": "a cover by radical and archimedeans forces decomposition"})
    if cls.archimedeans == universe and not star:
        out.append({"fact": "all-archimedean algebras decompose"})
    return out


def _chk_hyperarchimedean(a):
    out = []
    cls = element_classes(a)
    universe = _universe(a)
    hyper = cls.archimedeans == universe
    if hyper and not algebra_has_blp(a).holds:
        out.append({"fact": "all-archimedean algebras lift"})
    if cls.mult_is_meet and hyper != (cls.booleans == universe):
        out.append(
            {"fact": "with idempotent product archimedean everywhere means complemented everywhere"}
        )
    if classify(a).hyperarchimedean != hyper:
        out.append({"fact": "the report flag matches the scan"})
    return out


def _chk_boolean_injectivity(a):
    out = []
    universe = _universe(a)
    cls = element_classes(a)
    rad = radical(a).members
    fl = all_filters(a)
    for f in fl:
        inj = projection_injective_on_booleans(a, f)
        kernel = cls.booleans & f.members == _top_only(a)
        qp = quotient(a, f)
        count = len({qp.class_of[e] for e in cls.booleans}) == len(cls.booleans)
        if not (inj == kernel == count):
            out.append(
                {
                    "fact": "the three descriptions of an intact center agree",
                    "filter": sorted(f.members),
                }
            )
        if f.members <= rad and not inj:
            out.append(
                {
                    "fact": "filters inside the radical keep the center intact",
                    "filter": sorted(f.members),
                }
            )
    if cls.booleans == frozenset({a.bottom, a.top}) and not a.trivial:
        for f in fl:
            if f.members != universe and not projection_injective_on_booleans(a, f):
                out.append(
                    {
                        "fact": "a bounds-only center survives every proper quotient",
                        "filter": sorted(f.members),
                    }
                )
    dense_filter = generated_filter(a, tuple(sorted(cls.dense)))
    if dense_filter.members == cls.dense and not projection_injective_on_booleans(
        a, dense_filter
    ):
        out.append({"fact": "the dense filter keeps the center intact"})
    for f in fl:
        for g in fl:
            if projection_injective_on_booleans(a, f) and projection_injective_on_booleans(a, g):
                if not projection_injective_on_booleans(a, filter_meet(f, g)):
                    out.append(
                        {
                            "fact": "intersecting preserves an intact center",
                            "filters": [sorted(f.members), sorted(g.members)],
                        }
                    )
    return out


def _chk_idempotent_s(a):
    out = []
    cls = element_classes(a)
    if not cls.mult_is_meet:
        return out
    s = s_set(a)
    expected = frozenset(x for x in a.elements if a.neg(x) in cls.booleans)
    if s != expected:
        out.append(
            {
                "fact": "with idempotent product survival means the negation is complemented",
                "surviving": sorted(s),
                "expected": sorted(expected),
            }
        )
    if frozenset(a.neg(x) for x in s) != cls.booleans:
        out.append({"fact": "negating the surviving set gives exactly the center"})
    if cls.booleans == frozenset({a.bottom, a.top}):
        if s != cls.dense | {a.bottom}:
            out.append(
                {"fact": "with a bounds-only center the surviving set is 0 plus the dense part"}
            )
    return out


def _chk_involutive_idempotent(a):
    out = []
    cls = element_classes(a)
    if not (cls.mult_is_meet and cls.involutive):
        return out
    universe = _universe(a)
    if s_set(a) != cls.booleans:
        out.append({"fact": "surviving and complemented coincide"})
    blp = algebra_has_blp(a).holds
    if blp != (cls.booleans == universe) or blp != (cls.archimedeans == universe):
        out.append({"fact": "lifting, a full center and archimedean everywhere coincide"})
    if cls.dense != _top_only(a) or radical(a).members != _top_only(a):
        out.append({"fact": "the dense part and the radical collapse to 1"})
    return out


def _chk_trivial_center_s(a):
    out = []
    cls = element_classes(a)
    if cls.booleans != frozenset({a.bottom, a.top}):
        return out
    nil = cls.nilpotents
    expected = nil | frozenset(x for x in a.elements if a.neg(x) in nil)
    if s_set(a) != expected:
        out.append(
            {
                "fact": "with a bounds-only center survival means nilpotent on one side",
                "surviving": sorted(s_set(a)),
                "expected": sorted(expected),
            }
        )
    return out


def _chk_dense_collapse(a):
    out = []
    cls = element_classes(a)
    universe = _universe(a)
    dense = cls.dense
    top_only = _top_only(a)
    if dense <= cls.booleans and dense != top_only:
        out.append({"fact": "dense complemented elements reduce to 1"})
    lhs = (dense | {a.bottom}) == cls.booleans
    rhs = dense == top_only and cls.booleans == frozenset({a.bottom, a.top})
    if lhs != rhs:
        out.append({"fact": "the dense part plus 0 equals the center only in the bounds-only case"})
    if cls.booleans == s_set(a) and (
        dense != top_only or radical(a).members != top_only
    ):
        out.append(
            {"fact": "a surviving set equal to the center collapses the dense part and the radical"}
        )
    if not a.trivial:
        if dense == cls.booleans:
            out.append({"fact": "the dense part never equals the center when nontrivial"})
        if dense == s_set(a):
            out.append({"fact": "the dense part never equals the surviving set when nontrivial"})
        if a.bottom in dense:
            out.append({"fact": "0 is never dense when nontrivial"})
    elif not (dense == cls.booleans == s_set(a) == universe):
        out.append({"fact": "in the one-point algebra everything collapses"})
    if cls.booleans == universe and (
        dense != top_only or radical(a).members != top_only
    ):
        out.append(
            {"fact": "a fully complemented algebra has one-point dense part and radical"}
        )
    return out


def _chk_semiperfect(a):
    out = []
    if a.trivial:
        return out
    blp = algebra_has_blp(a).holds
    d = semiperfect_decomposition(a)
    if (d is not None) != blp:
        out.append({"fact": "a decomposition exists exactly when the algebra lifts"})
    if blp != filter_has_blp(a, radical(a)).holds:
        out.append({"fact": "lifting reduces to the radical filter"})
    if d is None:
        return out
    bools = booleans(a)
    combo = d.complete_set
    if any(e not in bools for e in combo):
        out.append({"fact": "the pieces are complemented", "pieces": list(combo)})
    total = combo[0]
    for e in combo[1:]:
        total = a.meet[total][e]
    if total != a.bottom:
        out.append({"fact": "the pieces meet down to 0", "pieces": list(combo)})
    for e, f in itertools.combinations(combo, 2):
        if a.join[e][f] != a.top:
            out.append({"fact": "distinct pieces join to 1", "elements": [e, f]})
    for i, piece in enumerate(d.factor_algebras):
        if not _is_local(piece):
            out.append({"fact": "every piece is local", "piece": i})
    if len(spectra(a).maximal) != len(combo):
        out.append({"fact": "maximal filters match the pieces one for one"})
    if not is_isomorphic(direct_product(d.factor_algebras).algebra, a):
        out.append({"fact": "the product of the interval pieces rebuilds the algebra"})
    if not star_condition(a).holds:
        out.append({"fact": "a decomposable algebra decomposes over the radical"})
    return out


def _chk_interval_split(a):
    out = []
    blp = algebra_has_blp(a).holds
    for e in sorted(booleans(a)):
        ne = a.neg(e)
        upper = interval_algebra(a, e)
        other = interval_algebra(a, ne)
        both = (
            algebra_has_blp(upper.algebra).holds
            and algebra_has_blp(other.algebra).holds
        )
        if both != blp:
            out.append({"fact": "lifting splits across a complemented cut", "element": e})
        pairs = {
            x: (upper.child_of(a.join[x][e]), other.child_of(a.join[x][ne]))
            for x in a.elements
        }
        if (
            len(set(pairs.values())) != a.size
            or a.size != upper.algebra.size * other.algebra.size
        ):
            out.append(
                {"fact": "the cut map is a bijection onto the pair of intervals", "element": e}
            )
            continue
        u, o = upper.algebra, other.algebra
        for x, y in itertools.product(a.elements, repeat=2):
            for opname in ("join", "mult", "imp"):
                z = getattr(a, opname)[x][y]
                componentwise = (
                    getattr(u, opname)[pairs[x][0]][pairs[y][0]],
                    getattr(o, opname)[pairs[x][1]][pairs[y][1]],
                )
                if pairs[z] != componentwise:
                    out.append(
                        {
                            "fact": "the cut map preserves the operations",
                            "element": e,
                            "operation": opname,
                            "elements": [x, y],
                        }
                    )
    return out


def _chk_restriction_shapes(a):
    out = []
    universe = _universe(a)
    for junction in a.elements:
        if junction in (a.bottom, a.top):
            continue
        up = a.upset(junction)
        down = a.downset(junction)
        if up | down != universe:
            continue
        upper_chain = _all_comparable(a, up)
        lower_chain = _all_comparable(a, down)
        if upper_chain or lower_chain:
            if booleans(a) != frozenset({a.bottom, a.top}):
                out.append(
                    {"fact": "a vertical split pins the center to the bounds", "junction": junction}
                )
        if upper_chain:
            a_local = _is_local(a)
            for label, value in (
                ("radical decomposition", star_condition(a).holds),
                ("lifting", algebra_has_blp(a).holds),
            ):
                if value != a_local:
                    out.append(
                        {
                            "fact": "under an upper chain the global conditions match locality",
                            "condition": label,
                            "junction": junction,
                        }
                    )
            if (
                element_classes(a).mult_is_meet
                and star_star_condition(a).holds != a_local
            ):
                out.append(
                    {
                        "fact": "with idempotent product the weak decomposition matches locality too",
                        "junction": junction,
                    }
                )
            try:
                rp = restrict_lower(a, junction)
            except AlgebraError:
                rp = None
            if rp is not None:
                low = rp.algebra
                a_max = frozenset(m.members for m in spectra(a).maximal)
                lifted = frozenset(
                    up | frozenset(rp.parent_of[i] for i in m.members)
                    for m in spectra(low).maximal
                )
                if a_max != lifted:
                    out.append(
                        {
                            "fact": "maximal filters extend the lower part's by the chain",
                            "junction": junction,
                        }
                    )
                if _is_local(a) != _is_local(low):
                    out.append(
                        {
                            "fact": "locality passes between the algebra and its lower part",
                            "junction": junction,
                        }
                    )
        if lower_chain:
            if not _is_local(a):
                out.append({"fact": "a lower chain forces locality", "junction": junction})
            for label, value in (
                ("radical decomposition", star_condition(a).holds),
                ("lifting", algebra_has_blp(a).holds),
                ("weak decomposition", star_star_condition(a).holds),
            ):
                if not value:
                    out.append(
                        {
                            "fact": "a lower chain gives the global conditions outright",
                            "condition": label,
                            "junction": junction,
                        }
                    )
            try:
                rp = restrict_bottom_chain(a, junction)
            except AlgebraError:
                rp = None
            if rp is not None:
                if not rp.algebra.is_chain():
                    out.append(
                        {"fact": "the bottom restriction is a chain", "junction": junction}
                    )
                m_low = spectra(rp.algebra).maximal
                if len(m_low) == 1:
                    expected = up | frozenset(
                        rp.parent_of[i] for i in m_low[0].members
                    )
                    if [m.members for m in spectra(a).maximal] != [expected]:
                        out.append(
                            {
                                "fact": "the unique maximal filter extends the chain's",
                                "junction": junction,
                            }
                        )
    return out


def _chk_stack_chain(a):
    out = []
    if a.size > 5:
        return out
    for k in (1, 2):
        for position in ("top", "bottom"):
            s = stack_chain(a, k, position)
            if s.size != a.size + k:
                out.append(
                    {"fact": "stacking adds exactly the chain", "k": k, "position": position}
                )
                continue
            if position == "top":
                if a.trivial:
                    if not is_isomorphic(s, godel_chain(k + 1)):
                        out.append(
                            {"fact": "stacking on a point gives the idempotent chain", "k": k}
                        )
                    continue
                if booleans(s) != frozenset({s.bottom, s.top}):
                    out.append({"fact": "an added top chain pins the center", "k": k})
                if _is_local(s) != _is_local(a):
                    out.append(
                        {"fact": "an added top chain keeps locality unchanged", "k": k}
                    )
                if algebra_has_blp(s).holds != _is_local(s):
                    out.append(
                        {"fact": "the stacked algebra lifts exactly when local", "k": k}
                    )
            else:
                if not _is_local(s):
                    out.append(
                        {"fact": "an added bottom chain makes the algebra local", "k": k}
                    )
                if not (algebra_has_blp(s).holds and star_condition(s).holds):
                    out.append(
                        {"fact": "an added bottom chain gives lifting and decomposition", "k": k}
                    )
                back = restrict_bottom_chain(s, k)
                if not is_isomorphic(back.algebra, godel_chain(k + 1)):
                    out.append(
                        {
                            "fact": "the added bottom chain restricts to the idempotent chain",
                            "k": k,
                        }
                    )
    return out


# ---------------------------------------------------------------------------
# checks on an ordered pair of algebras, through their direct product


def _chk_product_center(a, b):
    out = []
    pp = direct_product((a, b))
    ca, cb, cp = element_classes(a), element_classes(b), element_classes(pp.algebra)
    componentwise = {
        "complemented": (ca.booleans, cb.booleans, cp.booleans),
        "nilpotent": (ca.nilpotents, cb.nilpotents, cp.nilpotents),
        "dense": (ca.dense, cb.dense, cp.dense),
        "idempotent": (ca.idempotents, cb.idempotents, cp.idempotents),
        "regular": (ca.regular, cb.regular, cp.regular),
    }
    for label, (sa, sb, got) in componentwise.items():
        expected = frozenset(pp.encode((x, y)) for x in sa for y in sb)
        if expected != got:
            out.append({"fact": f"the {label} elements of a product are componentwise"})
    expected_rad = frozenset(
        pp.encode((x, y))
        for x in radical(a).members
        for y in radical(b).members
    )
    if radical(pp.algebra).members != expected_rad:
        out.append({"fact": "the radical of a product is the product of the radicals"})
    if len(spectra(pp.algebra).maximal) != len(spectra(a).maximal) + len(
        spectra(b).maximal
    ):
        out.append({"fact": "maximal filters of a product count additively"})
    for i, cls in enumerate((ca, cb)):
        image = frozenset(pp.decode(e)[i] for e in cp.booleans)
        if image != cls.booleans:
            out.append(
                {"fact": "each projection maps the center onto the factor's center", "factor": i}
            )
    return out


def _chk_product_s_set(a, b):
    out = []
    pp = direct_product((a, b))
    expected = frozenset(
        pp.encode((x, y)) for x in s_set(a) for y in s_set(b)
    )
    if s_set(pp.algebra) != expected:
        out.append({"fact": "the surviving set of a product is componentwise"})
    return out


def _chk_product_blp(a, b):
    out = []
    pp = direct_product((a, b))
    lhs = algebra_has_blp(pp.algebra).holds
    rhs = algebra_has_blp(a).holds and algebra_has_blp(b).holds
    if lhs != rhs:
        out.append(
            {
                "fact": "a product lifts exactly when both factors lift",
                "product": lhs,
                "factors": rhs,
            }
        )
    return out


def _chk_product_star(a, b):
    out = []
    pp = direct_product((a, b))
    for label, condition in (
        ("strong", star_condition),
        ("weak", star_star_condition),
    ):
        lhs = condition(pp.algebra).holds
        rhs = condition(a).holds and condition(b).holds
        if lhs != rhs:
            out.append(
                {
                    "fact": f"the {label} decomposition passes through finite products",
                    "product": lhs,
                    "factors": rhs,
                }
            )
    return out


def _chk_product_filter_transfer(a, b):
    out = []
    pp = direct_product((a, b))
    prod = pp.algebra
    for f in all_filters(prod):
        fdesc = sorted(f.members)
        parts = [
            frozenset(pp.decode(x)[i] for x in f.members) for i in (0, 1)
        ]
        fa = generated_filter(a, tuple(sorted(parts[0])))
        fb = generated_filter(b, tuple(sorted(parts[1])))
        if fa.members != parts[0] or fb.members != parts[1]:
            out.append({"fact": "projections of a filter are filters", "filter": fdesc})
            continue
        rebuilt = frozenset(
            pp.encode((x, y)) for x in parts[0] for y in parts[1]
        )
        if rebuilt != f.members:
            out.append(
                {"fact": "a product filter is the product of its projections", "filter": fdesc}
            )
            continue
        if filter_has_blp(prod, f).holds != (
            filter_has_blp(a, fa).holds and filter_has_blp(b, fb).holds
        ):
            out.append(
                {
                    "fact": "a product filter lifts exactly when both projections lift",
                    "filter": fdesc,
                }
            )
        if projection_injective_on_booleans(prod, f) != (
            projection_injective_on_booleans(a, fa)
            and projection_injective_on_booleans(b, fb)
        ):
            out.append(
                {"fact": "intactness of the center splits componentwise", "filter": fdesc}
            )
        qp = quotient(prod, f)
        qa, qb = quotient(a, fa), quotient(b, fb)
        qprod = direct_product((qa.algebra, qb.algebra))
        if qp.algebra.size != qprod.algebra.size:
            out.append(
                {"fact": "the quotient of a product has the product size", "filter": fdesc}
            )
            continue
        psi = {}
        well_defined = True
        for x in prod.elements:
            cx, cy = pp.decode(x)
            target = qprod.encode((qa.class_of[cx], qb.class_of[cy]))
            if psi.setdefault(qp.class_of[x], target) != target:
                out.append(
                    {
                        "fact": "the coordinate map is well defined on classes",
                        "filter": fdesc,
                    }
                )
                well_defined = False
                break
        if not well_defined:
            continue
        if len(set(psi.values())) != qprod.algebra.size:
            out.append({"fact": "the coordinate map is a bijection", "filter": fdesc})
            continue
        qalg, palg = qp.algebra, qprod.algebra
        preserved = True
        for i, jx in itertools.product(range(qalg.size), repeat=2):
            for opname in ("join", "mult", "imp"):
                if psi[getattr(qalg, opname)[i][jx]] != getattr(palg, opname)[psi[i]][psi[jx]]:
                    out.append(
                        {
                            "fact": "the coordinate map preserves the operations",
                            "filter": fdesc,
                            "operation": opname,
                        }
                    )
                    preserved = False
                    break
            if not preserved:
                break
    return out


# ---------------------------------------------------------------------------
# registry and runner


@dataclass(frozen=True)
class TheoremCheck:
    ident: str
    statement: str
    scope: str
    run: Callable = field(compare=False)


REGISTRY: tuple[TheoremCheck, ...] = (
    TheoremCheck(
        "basic-arithmetic-laws",
        "The residuated operations satisfy the standard pointwise laws relating"
        " product, meet, join, arrow and negation.",
        "algebra",
        _chk_arithmetic,
    ),
    TheoremCheck(
        "negation-power-bound",
        "Every power of a negation stays below the negation of the same power.",
        "algebra",
        _chk_negation_power,
    ),
    TheoremCheck(
        "boolean-center-behavior",
        "Complemented elements have unique complements, form a sublattice closed"
        " under negation, are idempotent, and multiply as meet against everything.",
        "algebra",
        _chk_boolean_center,
    ),
    TheoremCheck(
        "idempotent-nilpotent-structure",
        "Powers weakly decrease and stabilize to an idempotent; the product is the"
        " meet exactly when every element is idempotent; only 0 is both idempotent"
        " and nilpotent.",
        "algebra",
        _chk_idempotent_nilpotent,
    ),
    TheoremCheck(
        "filter-lattice-identities",
        "Filters are the up-sets of idempotents; principal filters obey the meet,"
        " join and power identities; membership in a filter respects product and"
        " meet; the filter lattice is distributive.",
        "algebra",
        _chk_filter_identities,
    ),
    TheoremCheck(
        "spectrum-structure",
        "Maximal filters are prime, every proper filter extends to a maximal one"
        " and is the intersection of the primes above it, and prime quotients have"
        " no complemented elements beyond the bounds.",
        "algebra",
        _chk_spectrum,
    ),
    TheoremCheck(
        "radical-facts",
        "The intersection of the maximal filters has an elementwise arithmetic"
        " description, is a filter containing the dense part, meets the center only"
        " at 1, and its members have nilpotent negations.",
        "algebra",
        _chk_radical,
    ),
    TheoremCheck(
        "quotient-facts",
        "Quotient classes follow the biresiduum congruence, the order becomes"
        " arrow membership, nilpotents and the radical pass down, and filters of"
        " the quotient correspond to filters above the kernel.",
        "algebra",
        _chk_quotients,
    ),
    TheoremCheck(
        "second-isomorphism",
        "Dividing by a larger filter equals dividing the quotient by the image of"
        " that filter.",
        "algebra",
        _chk_second_isomorphism,
    ),
    TheoremCheck(
        "boolean-lift-description",
        "The complemented classes of a quotient are exactly the classes of"
        " elements whose join with their negation lies in the filter, and the"
        " projected center always sits inside them.",
        "algebra",
        _chk_boolean_lift,
    ),
    TheoremCheck(
        "biresiduum-membership",
        "An element is matched by a complemented one after dividing by the filter"
        " of its join with its negation exactly when the match holds on both"
        " principal filters separately.",
        "algebra",
        _chk_biresiduum_membership,
    ),
    TheoremCheck(
        "s-set-closure",
        "The set of elements with complemented matches contains the center, the"
        " dense part and the radical, and pulls back along negation and powers.",
        "algebra",
        _chk_s_closure,
    ),
    TheoremCheck(
        "s-set-quotient-image",
        "Elements with complemented matches keep them in every quotient.",
        "algebra",
        _chk_s_quotient_image,
    ),
    TheoremCheck(
        "blp-iff-s-full",
        "Every filter lifts complemented classes exactly when every element has a"
        " complemented match.",
        "algebra",
        _chk_blp_iff_s_full,
    ),
    TheoremCheck(
        "blp-iff-quotients",
        "The algebra lifts exactly when every quotient lifts, and a quotient"
        " lifts exactly when every coarser quotient does.",
        "algebra",
        _chk_blp_iff_quotients,
    ),
    TheoremCheck(
        "prime-maximal-filters-blp",
        "Prime and maximal filters always lift complemented classes.",
        "algebra",
        _chk_prime_blp,
    ),
    TheoremCheck(
        "special-filters-blp",
        "The trivial and improper filters lift, quotient centers reduced to the"
        " bounds lift, and one-point, simple and fully complemented algebras lift"
        " everywhere.",
        "algebra",
        _chk_special_filters,
    ),
    TheoremCheck(
        "chain-facts",
        "Nontrivial chains are local with a bounds-only center, lift everywhere,"
        " decompose over the radical, and keep the center intact in proper"
        " quotients.",
        "algebra",
        _chk_chain_facts,
    ),
    TheoremCheck(
        "local-characterizations",
        "Having exactly one maximal filter is equivalent to the standard"
        " descriptions through non-nilpotents, the radical and nilpotent products.",
        "algebra",
        _chk_local_characterizations,
    ),
    TheoremCheck(
        "local-consequences",
        "Local algebras have a bounds-only center and a nilpotent-or-conilpotent"
        " cover; locality is equivalent to each global condition combined with a"
        " bounds-only center; simplicity has its matching descriptions.",
        "algebra",
        _chk_local_consequences,
    ),
    TheoremCheck(
        "quasi-local-iff-blp",
        "Killing stable powers with complemented elements is possible for every"
        " element exactly when every filter lifts.",
        "algebra",
        _chk_quasi_local,
    ),
    TheoremCheck(
        "normality-of-filter-lattice",
        "Covers among principal filters split through complemented elements"
        " exactly when every filter lifts.",
        "algebra",
        _chk_normality,
    ),
    TheoremCheck(
        "star-implications",
        "The strong decomposition forces lifting, lifting forces both"
        " decompositions in the finite case, and lifting reduces to the radical"
        " filter.",
        "algebra",
        _chk_star_implications,
    ),
    TheoremCheck(
        "star-quotient-invariance",
        "Each decomposition condition holds exactly when it holds in every"
        " quotient.",
        "algebra",
        _chk_star_quotients,
    ),
    TheoremCheck(
        "star-radical-reduction",
        "The strong decomposition holds exactly when it holds after dividing by"
        " the radical and the radical filter lifts.",
        "algebra",
        _chk_star_radical_reduction,
    ),
    TheoremCheck(
        "star-covering-sufficient",
        "Covers by center, radical, nilpotents or archimedeans force the strong"
        " decomposition.",
        "algebra",
        _chk_star_covering,
    ),
    TheoremCheck(
        "hyperarchimedean-blp",
        "All-archimedean algebras lift, and with idempotent product being"
        " all-archimedean means being fully complemented.",
        "algebra",
        _chk_hyperarchimedean,
    ),
    TheoremCheck(
        "boolean-injectivity",
        "An intact center in a quotient has three agreeing descriptions; filters"
        " inside the radical, the dense filter and intersections all preserve"
        " intactness.",
        "algebra",
        _chk_boolean_injectivity,
    ),
    TheoremCheck(
        "idempotent-s-description",
        "With idempotent product, an element has a complemented match exactly when"
        " its negation is complemented.",
        "algebra",
        _chk_idempotent_s,
    ),
    TheoremCheck(
        "involutive-idempotent-facts",
        "With idempotent product and involutive negation, matches coincide with"
        " the center, lifting means a full center, and the dense part and radical"
        " collapse.",
        "algebra",
        _chk_involutive_idempotent,
    ),
    TheoremCheck(
        "trivial-center-s-description",
        "With a bounds-only center, an element has a complemented match exactly"
        " when it or its negation is nilpotent.",
        "algebra",
        _chk_trivial_center_s,
    ),
    TheoremCheck(
        "dense-collapse",
        "The dense part coincides with the center or the matched set only in the"
        " one-point algebra, and collapses to 1 whenever the center fills the"
        " matched set or the whole algebra.",
        "algebra",
        _chk_dense_collapse,
    ),
    TheoremCheck(
        "semiperfect-decomposition",
        "A complete set of complemented pieces with local intervals exists exactly"
        " when the algebra lifts; the pieces count the maximal filters and the"
        " product of their intervals rebuilds the algebra.",
        "algebra",
        _chk_semiperfect,
    ),
    TheoremCheck(
        "interval-blp-split",
        "For every complemented cut the algebra is the product of the two"
        " intervals via an explicit map, and lifting holds exactly when it holds"
        " on both sides.",
        "algebra",
        _chk_interval_split,
    ),
    TheoremCheck(
        "restriction-shapes",
        "A vertical split pins the center to the bounds; an upper chain ties the"
        " global conditions to locality of the lower part; a lower chain forces"
        " locality and the global conditions outright.",
        "algebra",
        _chk_restriction_shapes,
    ),
    TheoremCheck(
        "stack-chain-round-trip",
        "Stacking a chain on top preserves locality and restricts back to the"
        " input; stacking below forces locality; stacking on a point gives the"
        " idempotent chain.",
        "algebra",
        _chk_stack_chain,
    ),
    TheoremCheck(
        "product-boolean-center",
        "Element classes of a direct product are componentwise, the radical is the"
        " product of the radicals, and maximal filters count additively.",
        "pair",
        _chk_product_center,
    ),
    TheoremCheck(
        "product-s-set",
        "The set of elements with complemented matches in a product is"
        " componentwise.",
        "pair",
        _chk_product_s_set,
    ),
    TheoremCheck(
        "product-blp",
        "A product lifts exactly when both factors lift.",
        "pair",
        _chk_product_blp,
    ),
    TheoremCheck(
        "product-star",
        "Each decomposition condition holds in a product exactly when it holds in"
        " both factors.",
        "pair",
        _chk_product_star,
    ),
    TheoremCheck(
        "product-filter-transfer",
        "Filters of a product are products of their projections, quotients split"
        " componentwise via an explicit coordinate map, and lifting and center"
        " intactness transfer factor by factor.",
        "pair",
        _chk_product_filter_transfer,
    ),
)


def registry() -> tuple[TheoremCheck, ...]:
    return REGISTRY


def theorem_ids() -> tuple[str, ...]:
    return tuple(t.ident for t in REGISTRY)


@dataclass(frozen=True)
class Corpus:
    algebras: tuple[FiniteResiduatedLattice, ...]
    label: str
    size_max: int | None
    pair_size_cap: int = 4

    def pairs(self):
        small = [x for x in self.algebras if x.size <= self.pair_size_cap]
        return [(x, y) for x in small for y in small]

    def describe(self) -> dict:
        return {
            "label": self.label,
            "size_max": self.size_max,
            "algebra_count": len(self.algebras),
            "algebras": [_unit_name(x) for x in self.algebras],
            "pair_size_cap": self.pair_size_cap,
            "pair_count": len(self.pairs()),
        }


def standard_corpus(size_max: int = 5, fixtures_only: bool = False) -> Corpus:
    """Named fixtures plus every algebra up to the size bound, to isomorphism."""
    fixtures = all_fixtures()
    if fixtures_only:
        return Corpus(algebras=fixtures, label="fixtures", size_max=None)
    if size_max < 1:
        raise AlgebraError(f"size bound must be at least 1, got {size_max}")
    members = [a for a in fixtures if a.size <= size_max]
    members.extend(corpus_up_to(size_max, max(size_max, DEFAULT_MAX_SIZE)))
    return Corpus(
        algebras=tuple(members),
        label=f"fixtures plus all algebras of size at most {size_max}",
        size_max=size_max,
    )


@dataclass(frozen=True)
class ViolationRecord:
    algebra: str
    witness: dict = field(compare=False)


@dataclass(frozen=True)
class TheoremResult:
    ident: str
    statement: str
    scope: str
    instances_checked: int
    violations: tuple[ViolationRecord, ...]
    seconds: float


def _run_theorem(check: TheoremCheck, corpus: Corpus) -> TheoremResult:
    start = time.perf_counter()
    if check.scope == "pair":
        units = corpus.pairs()
    else:
        units = [(x,) for x in corpus.algebras]
    records = []
    for unit in units:
        label = "*".join(_unit_name(x) for x in unit)
        try:
            found = check.run(*unit)
        except AlgebraError as exc:
            found = [{"kind": "internal-error", "error": f"{type(exc).__name__}: {exc}"}]
        if len(found) > _UNIT_WITNESS_CAP:
            dropped = len(found) - _UNIT_WITNESS_CAP
            found = found[:_UNIT_WITNESS_CAP] + [{"kind": "truncated", "dropped": dropped}]
        records.extend(ViolationRecord(algebra=label, witness=w) for w in found)
    records.sort(key=lambda r: (r.algebra, json.dumps(r.witness, sort_keys=True)))
    return TheoremResult(
        ident=check.ident,
        statement=check.statement,
        scope=check.scope,
        instances_checked=len(units),
        violations=tuple(records),
        seconds=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class HarnessReport:
    corpus: dict
    results: tuple[TheoremResult, ...]

    @property
    def violation_count(self) -> int:
        return sum(len(r.violations) for r in self.results)

    def to_json_dict(self) -> dict:
        # Timings are left out on purpose: the JSON form must be stable
        # across runs and thread counts.
        return {
            "schema_version": 1,
            "corpus": self.corpus,
            "theorem_count": len(self.results),
            "violation_count": self.violation_count,
            "theorems": [
                {
                    "id": r.ident,
                    "statement": r.statement,
                    "scope": r.scope,
                    "instances_checked": r.instances_checked,
                    "violations": [
                        {"algebra": v.algebra, "witness": v.witness}
                        for v in r.violations
                    ],
                }
                for r in self.results
            ],
        }


def verify_corpus(corpus: Corpus, theorems=None, jobs: int = 1) -> HarnessReport:
    """Run registered checks over the corpus and gather violations as data."""
    checks = list(REGISTRY)
    if theorems is not None:
        wanted = set(theorems)
        known = {c.ident for c in checks}
        missing = sorted(wanted - known)
        if missing:
            raise UnknownTheorem(f"unknown theorem ids: {', '.join(missing)}")
        checks = [c for c in checks if c.ident in wanted]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: _run_theorem(c, corpus), checks))
    else:
        results = [_run_theorem(c, corpus) for c in checks]
    results.sort(key=lambda r: r.ident)
    return HarnessReport(corpus=corpus.describe(), results=tuple(results))


def render_report(report: HarnessReport) -> str:
    lines = []
    c = report.corpus
    lines.append(
        f"corpus: {c['label']} "
        f"({c['algebra_count']} algebras, {c['pair_count']} ordered pairs)"
    )
    for r in report.results:
        status = "ok  " if not r.violations else "FAIL"
        lines.append(
            f"{status} {r.ident:35s} {r.instances_checked:5d} instances"
            f"  {r.seconds:7.2f}s"
        )
        for v in r.violations:
            lines.append(f"       {v.algebra}: {json.dumps(v.witness, sort_keys=True)}")
    lines.append(
        f"checked {len(report.results)} theorems, "
        f"{report.violation_count} violations"
    )
    return "\n".join(lines)


@dataclass(frozen=True)
class OpenProblemFindings:
    corpus: dict
    blp_without_star: tuple[str, ...]
    star_star_without_blp: tuple[str, ...]
    witness_count_histogram: dict

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "corpus": self.corpus,
            "blp_without_star": list(self.blp_without_star),
            "star_star_without_blp": list(self.star_star_without_blp),
            "witness_count_histogram": {
                str(k): v for k, v in sorted(self.witness_count_histogram.items())
            },
        }


def search_open_problems(corpus: Corpus) -> OpenProblemFindings:
    """Scan for the two unresolved separations and tally match counts.

    Looks for algebras that lift without the strong decomposition, and
    algebras with the weak decomposition that do not lift.  Also counts,
    over every element of every corpus member, how many complemented
    elements match it.
    """
    lift_no_star = []
    weak_no_lift = []
    histogram: dict[int, int] = {}
    for a in corpus.algebras:
        blp = algebra_has_blp(a).holds
        if blp and not star_condition(a).holds:
            lift_no_star.append(_unit_name(a))
        if star_star_condition(a).holds and not blp:
            weak_no_lift.append(_unit_name(a))
        for x in a.elements:
            count = len(s_witnesses(a, x))
            histogram[count] = histogram.get(count, 0) + 1
    return OpenProblemFindings(
        corpus=corpus.describe(),
        blp_without_star=tuple(lift_no_star),
        star_star_without_blp=tuple(weak_no_lift),
        witness_count_histogram=dict(sorted(histogram.items())),
    )


def render_findings(findings: OpenProblemFindings) -> str:
    lines = []
    c = findings.corpus
    lines.append(f"corpus: {c['label']} ({c['algebra_count']} algebras)")
    if findings.blp_without_star:
        lines.append("lifting without the strong decomposition:")
        lines.extend(f"  {name}" for name in findings.blp_without_star)
    else:
        lines.append("lifting without the strong decomposition: none found")
    if findings.star_star_without_blp:
        lines.append("weak decomposition without lifting:")
        lines.extend(f"  {name}" for name in findings.star_star_without_blp)
    else:
        lines.append("weak decomposition without lifting: none found")
    lines.append("match counts per element:")
    for count, times in sorted(findings.witness_count_histogram.items()):
        lines.append(f"  {count} matches: {times} elements")
    return "\n".join(lines)
