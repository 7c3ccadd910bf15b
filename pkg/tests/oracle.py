"""Slow, definition-level group computations used to cross-check the library.

Everything here favors obviousness over speed: closures multiply whole
member sets, series use full-set commutators, and subgroup enumeration
tries every single-element extension.  Intended scope is order <= 24
(isomorphism: order <= 8).
"""

from __future__ import annotations

from itertools import permutations


def closure_set(G, seed) -> frozenset:
    """Subgroup generated by the seed ids, by repeated pairwise products."""
    cur = {0} | set(seed)
    changed = True
    while changed:
        changed = False
        for a in list(cur):
            for b in list(cur):
                c = G.mul(a, b)
                if c not in cur:
                    cur.add(c)
                    changed = True
    return frozenset(cur)


def all_subgroups_brute(G) -> list[frozenset]:
    """Every subgroup, found by extending known subgroups one element at
    a time until nothing new appears."""
    subs = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        fresh = []
        for S in frontier:
            for g in range(G.order):
                if g in S:
                    continue
                T = closure_set(G, S | {g})
                if T not in subs:
                    subs.add(T)
                    fresh.append(T)
        frontier = fresh
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def is_subgroup_set(G, S) -> bool:
    return 0 in S and all(G.mul(a, b) in S for a in S for b in S)


def is_normal_brute(G, S) -> bool:
    return all(G.conj(s, g) in S for s in S for g in range(G.order))


def commutator_subgroup_brute(G, A, B) -> frozenset:
    comms = {G.comm(a, b) for a in A for b in B}
    return closure_set(G, comms)


def derived_series_brute(G) -> list[frozenset]:
    full = frozenset(range(G.order))
    series = [full]
    while True:
        nxt = commutator_subgroup_brute(G, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series_brute(G) -> list[frozenset]:
    full = frozenset(range(G.order))
    series = [full]
    while True:
        nxt = commutator_subgroup_brute(G, series[-1], full)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_soluble_brute(G) -> bool:
    return len(derived_series_brute(G)[-1]) == 1


def is_nilpotent_brute(G) -> bool:
    return len(lower_central_series_brute(G)[-1]) == 1


def is_abelian_brute(G) -> bool:
    return all(G.mul(a, b) == G.mul(b, a)
               for a in range(G.order) for b in range(G.order))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def is_supersoluble_brute(G) -> bool:
    """Search for a tower of G-normal subgroups rising by one prime at a
    time; a prime-index step has a cyclic factor automatically."""
    normals = [S for S in all_subgroups_brute(G) if is_normal_brute(G, S)]
    full = frozenset(range(G.order))
    seen = set()

    def reach(N: frozenset) -> bool:
        if N == full:
            return True
        if N in seen:
            return False
        seen.add(N)
        for M in normals:
            if N < M and len(M) % len(N) == 0 \
                    and _is_prime(len(M) // len(N)):
                if reach(M):
                    return True
        return False

    return reach(frozenset([0]))


def center_brute(G) -> frozenset:
    return frozenset(g for g in range(G.order)
                     if all(G.mul(g, h) == G.mul(h, g)
                            for h in range(G.order)))


def centralizer_brute(G, S) -> frozenset:
    return frozenset(g for g in range(G.order)
                     if all(G.mul(g, s) == G.mul(s, g) for s in S))


def element_order_brute(G, g) -> int:
    k, x = 1, g
    while x != 0:
        x = G.mul(x, g)
        k += 1
    return k


def sylow_order_brute(G, p) -> int:
    part = 1
    n = G.order
    while n % p == 0:
        part *= p
        n //= p
    return part


def quotient_cosets_brute(G, N) -> tuple[list[frozenset], dict]:
    """Cosets of a normal subgroup and their multiplication table."""
    cosets = []
    of = {}
    for g in range(G.order):
        if g in of:
            continue
        cos = frozenset(G.mul(g, n) for n in N)
        idx = len(cosets)
        cosets.append(cos)
        for h in cos:
            of[h] = idx
    table = {}
    for i, A in enumerate(cosets):
        for j, B in enumerate(cosets):
            table[i, j] = of[G.mul(min(A), min(B))]
    return cosets, table


def isomorphic_brute(A, B) -> bool:
    """Try every identity-fixing bijection; usable up to order 8."""
    if A.order != B.order:
        return False
    if A.order > 8:
        raise ValueError("brute isomorphism is capped at order 8")
    oa = sorted(element_order_brute(A, g) for g in range(A.order))
    ob = sorted(element_order_brute(B, g) for g in range(B.order))
    if oa != ob:
        return False
    n = A.order
    rest = list(range(1, n))
    for perm in permutations(rest):
        f = (0,) + perm
        if all(f[A.mul(a, b)] == B.mul(f[a], f[b])
               for a in range(n) for b in range(n)):
            return True
    return False
