"""Independent brute-force oracles.

Everything in here works on raw tables and sets, with no imports from the
package under test, so the main implementation can be checked against
genuinely separate code paths.
"""
from __future__ import annotations

import itertools


def le_from_join(join):
    n = len(join)
    return [[join[x][y] == y for y in range(n)] for x in range(n)]


def filter_subsets(join, mult):
    """All filters of the algebra, found by scanning every subset.

    Only usable at tiny sizes; a filter contains the top, is upward closed
    for the join-derived order, and is closed under mult.
    """
    n = len(join)
    le = le_from_join(join)
    top = n - 1
    found = []
    for bits in range(1 << n):
        s = {x for x in range(n) if bits >> x & 1}
        if top not in s:
            continue
        if any(le[x][y] and y not in s for x in s for y in range(n)):
            continue
        if any(mult[x][y] not in s for x in s for y in s):
            continue
        found.append(frozenset(s))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def lattice_count_by_posets(n):
    """Number of n-element lattices up to isomorphism, via poset search.

    Enumerates all strict order relations on the n-2 middle elements
    (bottom below everything, top above everything), keeps the relations
    that are partial orders whose bounded extension has all binary joins
    and meets, and dedups by relation-matrix canonicalization over middle
    permutations.
    """
    if n == 1 or n == 2:
        return 1
    mid = list(range(1, n - 1))
    pairs = [(x, y) for x in mid for y in mid if x != y]
    canon_seen = set()
    for bits in range(1 << len(pairs)):
        rel = {p for i, p in enumerate(pairs) if bits >> i & 1}
        # antisymmetry and transitivity of the strict relation
        if any((y, x) in rel for (x, y) in rel):
            continue
        if any(
            (x, z) not in rel
            for (x, y) in rel
            for (y2, z) in rel
            if y == y2 and x != z
        ):
            continue
        if any((x, y) in rel and (y, x) in rel for x in mid for y in mid):
            continue

        def le(x, y):
            return x == y or x == 0 or y == n - 1 or (x, y) in rel

        ok = True
        for x in range(n):
            for y in range(n):
                ups = [t for t in range(n) if le(x, t) and le(y, t)]
                if not any(all(le(m, t) for t in ups) for m in ups):
                    ok = False
                downs = [t for t in range(n) if le(t, x) and le(t, y)]
                if not any(all(le(t, m) for t in downs) for m in downs):
                    ok = False
            if not ok:
                break
        if not ok:
            continue
        rel0 = {(a - 1, b - 1) for a, b in rel}
        m = len(mid)
        key = min(
            tuple(
                (pi[x], pi[y]) in rel0 for x in range(m) for y in range(m)
            )
            for pi in itertools.permutations(range(m))
        )
        canon_seen.add(key)
    return len(canon_seen)


def residuated_tables_on_3_chain():
    """Every commutative mult table making the 3-chain residuated.

    Scans all 3^6 symmetric tables and keeps those that form a commutative
    monoid with identity 2 for which max{t | x*t <= y} exists for every
    pair.  At n=3 the only permutation fixing bottom and top is the
    identity, so the table count is already an isomorphism-class count.
    """
    pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    ok_tables = []
    for values in itertools.product(range(3), repeat=6):
        t = [[0] * 3 for _ in range(3)]
        for (x, y), v in zip(pairs, values):
            t[x][y] = v
            t[y][x] = v
        if any(t[x][2] != x for x in range(3)):
            continue
        if any(
            t[t[x][y]][z] != t[x][t[y][z]]
            for x in range(3)
            for y in range(3)
            for z in range(3)
        ):
            continue
        # residuum existence on the chain order 0 < 1 < 2
        res_ok = True
        for x in range(3):
            for y in range(3):
                sols = [s for s in range(3) if t[x][s] <= y]
                if not sols or max(sols) not in sols:
                    res_ok = False
        if not res_ok:
            continue
        # law of residuation
        imp = [[max(s for s in range(3) if t[x][s] <= y) for y in range(3)] for x in range(3)]
        if any(
            (a <= imp[b][c]) != (t[a][b] <= c)
            for a in range(3)
            for b in range(3)
            for c in range(3)
        ):
            continue
        ok_tables.append(tuple(tuple(r) for r in t))
    return ok_tables


def lattice_join_tables(n):
    """Canonical join tables of all n-element lattices, via the poset scan.

    Same search as lattice_count_by_posets but returning one join table
    per isomorphism class instead of a count.
    """
    if n == 1:
        return [((0,),)]
    mid = list(range(1, n - 1))
    pairs = [(x, y) for x in mid for y in mid if x != y]
    reps = {}
    for bits in range(1 << len(pairs)):
        rel = {p for i, p in enumerate(pairs) if bits >> i & 1}
        if any((y, x) in rel for (x, y) in rel):
            continue
        if any(
            (x, z) not in rel
            for (x, y) in rel
            for (y2, z) in rel
            if y == y2 and x != z
        ):
            continue

        def le(x, y):
            return x == y or x == 0 or y == n - 1 or (x, y) in rel

        join = [[None] * n for _ in range(n)]
        ok = True
        for x in range(n):
            for y in range(n):
                ups = [t for t in range(n) if le(x, t) and le(y, t)]
                least = [m for m in ups if all(le(m, t) for t in ups)]
                downs = [t for t in range(n) if le(t, x) and le(t, y)]
                greatest = [m for m in downs if all(le(t, m) for t in downs)]
                if len(least) != 1 or len(greatest) != 1:
                    ok = False
                    break
                join[x][y] = least[0]
            if not ok:
                break
        if not ok:
            continue
        join = tuple(tuple(r) for r in join)
        key = _canon_tables(n, (join,))
        if key not in reps:
            reps[key] = join
    return [reps[k] for k in sorted(reps)]


def _canon_tables(n, tables):
    """Min over interior permutations of the concatenated relabeled tables."""
    best = None
    for midperm in itertools.permutations(range(1, n - 1)):
        perm = (0,) + midperm + (n - 1,)
        cand = []
        for t in tables:
            new = [[0] * n for _ in range(n)]
            for x in range(n):
                for y in range(n):
                    new[perm[x]][perm[y]] = perm[t[x][y]]
            cand.extend(v for row in new for v in row)
        cand = tuple(cand)
        if best is None or cand < best:
            best = cand
    return best


def residuated_mult_tables(join):
    """Full scan: every commutative monoid table residuated over `join`.

    No pruning and no join-distributivity shortcut; candidate tables are
    checked straight against the definition (max solution exists for
    every pair, adjunction law holds for every triple).
    """
    n = len(join)
    le = le_from_join(join)
    top = n - 1
    if n == 1:
        return [((0,),)]
    free = [(x, y) for x in range(1, top) for y in range(x, top)]
    out = []
    for values in itertools.product(range(n), repeat=len(free)):
        t = [[None] * n for _ in range(n)]
        for x in range(n):
            t[x][top] = t[top][x] = x
            t[x][0] = t[0][x] = 0
        for (x, y), v in zip(free, values):
            t[x][y] = t[y][x] = v
        if any(
            t[t[x][y]][z] != t[x][t[y][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        ):
            continue
        imp = [[None] * n for _ in range(n)]
        ok = True
        for x in range(n):
            for y in range(n):
                sols = [s for s in range(n) if le[t[x][s]][y]]
                best = [s for s in sols if all(le[o][s] for o in sols)]
                if len(best) != 1:
                    ok = False
                    break
                imp[x][y] = best[0]
            if not ok:
                break
        if not ok:
            continue
        if any(
            le[a][imp[b][c]] != le[t[a][b]][c]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        ):
            continue
        out.append(tuple(tuple(r) for r in t))
    return out


def algebra_count_full_scan(n):
    """Residuated algebras on n elements up to isomorphism, by pure scan."""
    keys = set()
    for join in lattice_join_tables(n):
        for mult in residuated_mult_tables(join):
            keys.add(_canon_tables(n, (join, mult)))
    return len(keys)


def powers_until_cycle(mult, top, x):
    """All distinct powers of x with no a-priori bound (cycle detection)."""
    seen = []
    cur = top
    while True:
        cur = mult[cur][x]
        if cur in seen:
            return seen
        seen.append(cur)


if __name__ == "__main__":
    for n in range(1, 6):
        print(f"lattices on {n} elements: {lattice_count_by_posets(n)}")
    tabs = residuated_tables_on_3_chain()
    print(f"residuated structures on the 3-chain: {len(tabs)}")
    for t in tabs:
        print("   ", t)
    for n in range(1, 6):
        print(f"algebras on {n} elements up to iso: {algebra_count_full_scan(n)}")
