"""Subgroup lattice enumeration and quotient/series machinery.

The full lattice is built with the cyclic extension algorithm: starting from
the trivial group, all cyclic subgroups of prime-power order, and all perfect
subgroups, each known subgroup H is extended by the prime-order elements of
N_G(H)/H.  Every subgroup K either is perfect (seeded) or has a normal
subgroup of prime index (reached by extension), so the enumeration is
complete.  Budgeted by |G| <= budgets.lattice.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import ResourceLimitError
from .permcore import (
    PermGroup,
    QuotientGroup,
    Subgroup,
    _closure,
    _core_set,
    _normal_closure_set,
    _prime_factors,
    conjugacy_classes,
    quotient,
    structural_series,
)

__all__ = [
    "SubgroupLattice",
    "all_subgroups",
    "maximal_subgroups",
    "normal_subgroups",
    "minimal_normal_subgroups",
    "chief_series",
    "chief_factor_orders",
    "core_and_closure",
    "set_product",
    "hall_subgroup",
    "frattini_subgroup",
    "quotient",
]


class SubgroupLattice:
    """All subgroups of a group, with conjugacy classes and normality flags.

    Entries are sorted by (order, member tuple); entry 0 is the trivial
    subgroup and the last entry is the whole group.
    """

    def __init__(self, group: PermGroup, subgroups: list[Subgroup]):
        self.group = group
        self.subgroups = sorted(subgroups, key=lambda s: s.key())
        self._by_members = {s.members: i for i, s in enumerate(self.subgroups)}
        self.is_normal = [s.is_normal() for s in self.subgroups]
        self.classes: list[tuple[int, ...]] = []
        self.class_of = [-1] * len(self.subgroups)
        for i, s in enumerate(self.subgroups):
            if self.class_of[i] >= 0:
                continue
            orbit = {i}
            frontier = [s]
            while frontier:
                t = frontier.pop()
                for g in group.gens:
                    c = t.conjugate(g)
                    j = self._by_members[c.members]
                    if j not in orbit:
                        orbit.add(j)
                        frontier.append(c)
            ci = len(self.classes)
            self.classes.append(tuple(sorted(orbit)))
            for j in orbit:
                self.class_of[j] = ci

    def __len__(self) -> int:
        return len(self.subgroups)

    def index_of(self, members: frozenset) -> int:
        return self._by_members[members]

    def contains_members(self, members: frozenset) -> bool:
        return members in self._by_members


def all_subgroups(G: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> SubgroupLattice:
    """Enumerate every subgroup of G (cyclic extension algorithm)."""
    if G.order > budgets.lattice:
        raise ResourceLimitError("lattice", budgets.lattice, G.order)
    if G._lattice is not None:
        return G._lattice

    found: dict[frozenset, Subgroup] = {}

    def add(members: frozenset, gens: tuple[int, ...] | None = None) -> bool:
        if members in found:
            return False
        found[members] = Subgroup(G, members, gens)
        return True

    add(frozenset([0]), ())
    # seed: cyclic subgroups of prime-power order
    for x in range(1, G.order):
        o = G.element_order(x)
        for p in _prime_factors(o):
            q = o
            while q % p == 0:
                q //= p
            # x**q has order p^k, the p-part of o
            y = _power(G, x, q)
            add(_closure(G, [y]), (y,))
    # seed: perfect subgroups (all lie in the soluble residual; the perfect
    # groups at these orders are 2-generated)
    resid = structural_series(G, "derived")[-1]
    if resid.order > 1:
        sub_elems = sorted(resid.members)
        reps = _class_reps_within(G, resid.members)
        for a in reps:
            for b in sub_elems:
                mem = _closure(G, [a, b])
                if mem in found:
                    continue
                gens = tuple(g for g in (a, b) if g != 0)
                comms = {G.comm(u, v) for u in gens for v in gens}
                der = _normal_closure_set(G, comms, gens)
                if der == mem:
                    add(mem, gens)

    # cyclic extension loop
    queue = list(found.values())
    while queue:
        H = queue.pop()
        hm = H.members
        hgens = H.gens
        norm = [
            g for g in range(G.order)
            if all(G.conj(s, g) in hm for s in hgens)
        ]
        for g in norm:
            if g in hm:
                continue
            # order of gH in N/H
            k = 1
            y = g
            while y not in hm:
                y = G.mul(y, g)
                k += 1
            if not _is_prime(k):
                continue
            new = set(hm)
            cos = hm
            for _ in range(k - 1):
                cos = {G.mul(c, g) for c in cos}
                new.update(cos)
            newf = frozenset(new)
            if newf not in found:
                sub = Subgroup(G, newf, tuple(hgens) + (g,))
                found[newf] = sub
                queue.append(sub)

    lat = SubgroupLattice(G, list(found.values()))
    with G._lock:
        if G._lattice is None:
            G._lattice = lat
    return G._lattice


def _power(G: PermGroup, x: int, e: int) -> int:
    out = 0
    base = x
    while e:
        if e & 1:
            out = G.mul(out, base)
        base = G.mul(base, base)
        e >>= 1
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _class_reps_within(G: PermGroup, members: frozenset) -> list[int]:
    reps = []
    seen: set[int] = set()
    for x in sorted(members):
        if x in seen or x == 0:
            continue
        reps.append(x)
        orb = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in G.gens:
                z = G.conj(y, g)
                if z in members and z not in orb:
                    orb.add(z)
                    frontier.append(z)
        seen.update(orb)
    return reps


def maximal_subgroups(G: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> list[Subgroup]:
    """Maximal proper subgroups, from the full lattice."""
    lat = all_subgroups(G, budgets=budgets)
    subs = lat.subgroups
    out = []
    for i, H in enumerate(subs[:-1]):
        covered = False
        for K in subs:
            if K.order <= H.order or K.order == G.order:
                continue
            if K.order % H.order == 0 and H.members < K.members:
                covered = True
                break
        if not covered:
            out.append(H)
    return out


def normal_subgroups(G: PermGroup) -> list[Subgroup]:
    """All normal subgroups, by closing class closures under joins.

    Works without the full lattice, so it stays usable beyond the lattice
    budget (every normal subgroup is a join of conjugacy-class closures).
    """
    atoms: dict[frozenset, Subgroup] = {}
    for cls in conjugacy_classes(G):
        if cls == (0,):
            continue
        mem = _normal_closure_set(G, [cls[0]], G.gens)
        if mem not in atoms:
            atoms[mem] = Subgroup(G, mem)
    normals: dict[frozenset, Subgroup] = {frozenset([0]): G.trivial_subgroup()}
    normals.update(atoms)
    worklist = list(normals.values())
    while worklist:
        A = worklist.pop()
        for B in list(normals.values()):
            if A.members <= B.members or B.members <= A.members:
                continue
            join = _closure(G, tuple(A.gens) + tuple(B.gens))
            if join not in normals:
                sub = Subgroup(G, join)
                normals[join] = sub
                worklist.append(sub)
    return sorted(normals.values(), key=lambda s: s.key())


def minimal_normal_subgroups(G: PermGroup) -> list[Subgroup]:
    """Minimal nontrivial normal subgroups (normal closures of single classes
    that contain no smaller such closure)."""
    atoms: dict[frozenset, Subgroup] = {}
    for cls in conjugacy_classes(G):
        if cls == (0,):
            continue
        mem = _normal_closure_set(G, [cls[0]], G.gens)
        atoms.setdefault(mem, Subgroup(G, mem))
    out = []
    for mem, sub in atoms.items():
        if not any(other < mem for other in atoms if other != mem):
            out.append(sub)
    return sorted(out, key=lambda s: s.key())


def chief_series(G: PermGroup, *, reverse_ties: bool = False) -> list[Subgroup]:
    """One chief series, ascending from 1 to G.

    Each step picks a minimal normal subgroup of the current quotient; ties
    are broken by smallest (order, member tuple) of the pullback (largest if
    reverse_ties, used to property-test Jordan-Hoelder invariance).
    """
    if G._chief_cache is not None and not reverse_ties:
        return G._chief_cache
    series = [G.trivial_subgroup()]
    cur = series[0]
    while cur.order < G.order:
        if cur.order == 1:
            candidates = [m for m in minimal_normal_subgroups(G)]
            pulls = [(m.key(), m) for m in candidates]
        else:
            q = quotient(G, cur)
            pulls = []
            for m in minimal_normal_subgroups(q.group):
                mem = q.projection.preimage(m.members)
                sub = Subgroup(G, mem)
                pulls.append((sub.key(), sub))
        pulls.sort(key=lambda t: t[0], reverse=reverse_ties)
        cur = pulls[0][1]
        series.append(cur)
    if not reverse_ties and G._chief_cache is None:
        with G._lock:
            if G._chief_cache is None:
                G._chief_cache = series
    return series


def chief_factor_orders(G: PermGroup) -> list[int]:
    s = chief_series(G)
    return [s[i + 1].order // s[i].order for i in range(len(s) - 1)]


def core_and_closure(G: PermGroup, H: Subgroup) -> tuple[Subgroup, Subgroup]:
    """(normal core, normal closure) of H in G."""
    if H.parent is not G:
        raise ValueError("H is not a subgroup of G")
    core = Subgroup(G, _core_set(G, H.members, G.gens))
    clo = Subgroup(G, _normal_closure_set(G, H.gens if H.order > 1 else [], G.gens))
    return core, clo


def set_product(G: PermGroup, A: Subgroup | Iterable[int], B: Subgroup | Iterable[int]) -> frozenset:
    """The product set AB = {ab}; |AB| = |A||B|/|A n B| is asserted."""
    amem = A.members if isinstance(A, Subgroup) else frozenset(A)
    bmem = B.members if isinstance(B, Subgroup) else frozenset(B)
    out = frozenset(G.mul(a, b) for a in amem for b in bmem)
    inter = amem & bmem
    assert len(out) * len(inter) == len(amem) * len(bmem), "set product size identity failed"
    return out


def hall_subgroup(G: PermGroup, primes: Iterable[int], *,
                  budgets: Budgets = DEFAULT_BUDGETS) -> Subgroup | None:
    """A Hall subgroup for the given prime set, or None if no subgroup of the
    required order exists (scan over the enumerated lattice)."""
    pset = set(primes)
    target = 1
    n = G.order
    for p in _prime_factors(n):
        if p in pset:
            q = 1
            while n % (q * p) == 0:
                q *= p
            target *= q
    if target == 1:
        return G.trivial_subgroup()
    if target == n:
        return G.full_subgroup()
    lat = all_subgroups(G, budgets=budgets)
    for H in lat.subgroups:
        if H.order == target:
            return H
    return None


def frattini_subgroup(G: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> Subgroup:
    """Intersection of all maximal subgroups."""
    maxes = maximal_subgroups(G, budgets=budgets)
    if not maxes:
        return G.full_subgroup()  # trivial group
    mem = frozenset(range(G.order))
    for H in maxes:
        mem &= H.members
    return Subgroup(G, mem)
