"""Finite permutation groups with exhaustive element enumeration.

Conventions used throughout the package, stated once here:

* Permutations act on the points ``{0, ..., degree-1}`` and are stored as
  image tuples: ``p.images[x]`` is the image of ``x`` under ``p``.
* Multiplication is left-to-right function application on the left action,
  ``(a * b)(x) == a(b(x))``.
* Every group materialises its full element list, sorted lexicographically
  by image tuple.  The identity is the lexicographic minimum, so it always
  has element id 0.  Element ids are indices into that sorted list.
* ``Subgroup`` objects are views into a parent ``PermGroup``: a frozenset of
  parent element ids plus a generating subset.  They are immutable.

Groups are deliberately small (budgets cap materialisation); all algorithms
favour exhaustive, deterministic scans over clever asymptotics.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import ResourceLimitError

__all__ = [
    "Permutation",
    "PermGroup",
    "Subgroup",
    "GroupMap",
    "QuotientGroup",
    "group_from_generators",
    "subgroup_generated",
    "centralizer",
    "center",
    "normal_closure",
    "derived_subgroup",
    "structural_series",
    "sylow_subgroup",
    "fitting_subgroup",
    "quotient",
    "conjugacy_classes",
    "is_isomorphic",
    "automorphisms",
    "element_orders",
]


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """An element of Sym({0..n-1}) stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise ValueError("degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a bijection on 0..{n - 1}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build a permutation from disjoint cycles, e.g. from_cycles(4, (0,1,2))."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for pt in cyc:
                if pt in seen or not 0 <= pt < degree:
                    raise ValueError(f"bad cycle {cyc} for degree {degree}")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        return Permutation(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        a, b = self.images, other.images
        return Permutation(tuple(a[b[x]] for x in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "Permutation(id)"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) + ")"


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a*b)(x) = a(b(x))
    return tuple(a[v] for v in b)


def _invert(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


# ---------------------------------------------------------------------------
# groups


class PermGroup:
    """A fully materialised permutation group.

    Immutable after construction; lazy caches (inverses, element orders,
    conjugacy classes, quotients, ...) are write-once under a lock.
    """

    def __init__(self, degree: int, elements: list[tuple[int, ...]],
                 gen_tuples: Sequence[tuple[int, ...]], name: str | None = None):
        self.degree = degree
        self.name = name
        self._elems = sorted(elements)
        self._index = {t: i for i, t in enumerate(self._elems)}
        ident = tuple(range(degree))
        if self._elems[0] != ident:
            raise ValueError("element set does not contain the identity")
        gens = []
        for t in gen_tuples:
            i = self._index[t]
            if i != 0 and i not in gens:
                gens.append(i)
        self.gens: tuple[int, ...] = tuple(gens)
        self.order = len(self._elems)
        # reentrant: cache builders may trigger other lazy caches
        self._lock = threading.RLock()
        self._inv: list[int] | None = None
        self._orders: list[int] | None = None
        self._classes: list[tuple[int, ...]] | None = None
        self._class_of: list[int] | None = None
        self._fingerprint = None
        self._lattice = None
        self._quotients: dict[frozenset, "QuotientGroup"] = {}
        self._membership_cache: dict = {}
        self._chief_cache = None

    # -- basic element arithmetic ------------------------------------------

    def perm(self, i: int) -> Permutation:
        return Permutation(self._elems[i])

    def id_of(self, p: Permutation | Sequence[int]) -> int:
        t = tuple(p.images if isinstance(p, Permutation) else p)
        try:
            return self._index[t]
        except KeyError:
            raise ValueError(f"permutation {t} is not an element of this group")

    def mul(self, i: int, j: int) -> int:
        ea = self._elems[i]
        eb = self._elems[j]
        return self._index[tuple(ea[v] for v in eb)]

    def inv(self, i: int) -> int:
        if self._inv is None:
            with self._lock:
                if self._inv is None:
                    self._inv = [self._index[_invert(t)] for t in self._elems]
        return self._inv[i]

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 * x * g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def comm(self, x: int, y: int) -> int:
        """[x, y] = x^-1 * y^-1 * x * y."""
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def element_order(self, i: int) -> int:
        if self._orders is None:
            with self._lock:
                if self._orders is None:
                    self._orders = [Permutation(t).order() for t in self._elems]
        return self._orders[i]

    @property
    def generators(self) -> list[Permutation]:
        return [self.perm(i) for i in self.gens]

    # -- subgroup views ----------------------------------------------------

    def subgroup(self, members: Iterable[int], gens: Sequence[int] | None = None) -> "Subgroup":
        return Subgroup(self, frozenset(members), tuple(gens) if gens is not None else None)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([0]), ())

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)), self.gens)

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label}: order {self.order}, degree {self.degree}>"


class Subgroup:
    """An immutable subgroup view: parent group + member id set + generators."""

    __slots__ = ("parent", "members", "_gens", "_sorted", "_mat")

    def __init__(self, parent: PermGroup, members: frozenset, gens: tuple[int, ...] | None = None):
        self.parent = parent
        self.members = members
        self._gens = gens
        self._sorted: tuple[int, ...] | None = None
        self._mat = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _greedy_generators(self.parent, self.members)
        return self._gens

    @property
    def sorted_members(self) -> tuple[int, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self.members))
        return self._sorted

    def key(self) -> tuple:
        """Canonical sort key: (order, member ids)."""
        return (self.order, self.sorted_members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent \
            and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(s, g) in self.members for g in G.gens for s in self.gens)

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        ginv = G.inv(g)
        members = frozenset(G.mul(G.mul(ginv, x), g) for x in self.members)
        gens = tuple(G.mul(G.mul(ginv, x), g) for x in self.gens)
        return Subgroup(G, members, gens)

    def to_group(self) -> tuple[PermGroup, dict[int, int], list[int]]:
        """Materialise as a standalone PermGroup.

        Returns (group, to_sub, from_sub) where to_sub maps parent element
        ids to ids in the new group and from_sub is the inverse list.
        """
        if self._mat is None:
            G = self.parent
            if len(self.members) == G.order:
                ident = list(range(G.order))
                self._mat = (G, dict(enumerate(ident)), ident)
            else:
                elems = [G._elems[i] for i in self.members]
                sub = PermGroup(G.degree, elems, [G._elems[i] for i in self.gens])
                to_sub = {i: sub._index[G._elems[i]] for i in self.members}
                from_sub = [0] * sub.order
                for par_id, sub_id in to_sub.items():
                    from_sub[sub_id] = par_id
                self._mat = (sub, to_sub, from_sub)
        return self._mat

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in {self.parent!r}>"


# ---------------------------------------------------------------------------
# construction


def group_from_generators(degree: int, generators: Iterable, *, name: str | None = None,
                          budgets: Budgets = DEFAULT_BUDGETS) -> PermGroup:
    """Generate the group closure of the given permutations by BFS.

    Raises ResourceLimitError if the closure exceeds the element budget.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    gen_tuples = []
    for g in generators:
        t = tuple(g.images if isinstance(g, Permutation) else g)
        if len(t) != degree:
            raise ValueError(f"generator degree {len(t)} != group degree {degree}")
        if sorted(t) != list(range(degree)):
            raise ValueError(f"generator is not a bijection: {t}")
        gen_tuples.append(t)
    ident = tuple(range(degree))
    seen: set[tuple[int, ...]] = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_tuples:
                y = tuple(x[v] for v in g)
                if y not in seen:
                    # budget bounds stored image entries, order * degree, so
                    # high-degree groups cannot exhaust memory before tripping
                    if (len(seen) + 1) * degree > budgets.elements:
                        raise ResourceLimitError("elements", budgets.elements,
                                                 (len(seen) + 1) * degree)
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermGroup(degree, list(seen), gen_tuples, name=name)


def _closure(G: PermGroup, seed: Iterable[int]) -> frozenset:
    """Member ids of the subgroup generated by the seed ids.

    Large seeds (unions of subgroups) are first reduced to an irredundant
    generating subset so the breadth-first search stays narrow.
    """
    gens = [g for g in dict.fromkeys(seed) if g != 0]
    if not gens:
        return frozenset([0])
    if len(gens) > 12:
        kept: list[int] = []
        cur: frozenset = frozenset([0])
        for g in gens:
            if g not in cur:
                kept.append(g)
                cur = _bfs_closure(G, kept)
        return cur
    return _bfs_closure(G, gens)


def _bfs_closure(G: PermGroup, gens: list[int]) -> frozenset:
    elems = G._elems
    index = G._index
    gen_tuples = [elems[g] for g in gens]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            ex = elems[x]
            for gt in gen_tuples:
                y = index[tuple(ex[v] for v in gt)]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def _greedy_generators(G: PermGroup, members: frozenset) -> tuple[int, ...]:
    """A short deterministic generating subset for a known member set."""
    if len(members) == 1:
        return ()
    gens: list[int] = []
    cur: frozenset = frozenset([0])
    for x in sorted(members):
        if x not in cur:
            gens.append(x)
            cur = _closure(G, gens)
            if len(cur) == len(members):
                break
    return tuple(gens)


def subgroup_generated(G: PermGroup, ids: Iterable[int]) -> Subgroup:
    ids = list(ids)
    for i in ids:
        if not 0 <= i < G.order:
            raise ValueError(f"element id {i} out of range")
    members = _closure(G, ids)
    gens = tuple(g for g in dict.fromkeys(ids) if g != 0)
    return Subgroup(G, members, gens if gens else ())


def _ctx(x: PermGroup | Subgroup) -> tuple[PermGroup, frozenset, tuple[int, ...]]:
    """Normalise an argument to (parent, member set, generator ids)."""
    if isinstance(x, PermGroup):
        return x, frozenset(range(x.order)), x.gens
    return x.parent, x.members, x.gens


# ---------------------------------------------------------------------------
# classical subgroup computations


def centralizer(G: PermGroup, H: Subgroup | PermGroup) -> Subgroup:
    """C_G(H), computed by full element scan against H's generators."""
    _, _, hgens = _ctx(H)
    if isinstance(H, Subgroup) and H.parent is not G:
        raise ValueError("H is not a subgroup of G")
    members = frozenset(
        g for g in range(G.order)
        if all(G.mul(g, h) == G.mul(h, g) for h in hgens)
    )
    return Subgroup(G, members)


def center(x: PermGroup | Subgroup) -> Subgroup:
    G, members, gens = _ctx(x)
    out = frozenset(
        g for g in members
        if all(G.mul(g, h) == G.mul(h, g) for h in gens)
    )
    return Subgroup(G, out)


def _normal_closure_set(G: PermGroup, seed: Iterable[int], under: Sequence[int]) -> frozenset:
    """Members of the smallest subgroup containing seed and invariant under
    conjugation by the given generator ids."""
    gens = [g for g in dict.fromkeys(seed) if g != 0]
    members = _closure(G, gens)
    changed = True
    while changed:
        changed = False
        for k in list(gens):
            for g in under:
                c = G.conj(k, g)
                if c not in members:
                    gens.append(c)
                    members = _closure(G, gens)
                    changed = True
    return members


def normal_closure(G: PermGroup, seed: Subgroup | Iterable[int]) -> Subgroup:
    """Smallest normal subgroup of G containing the seed."""
    ids = seed.gens if isinstance(seed, Subgroup) else list(seed)
    if isinstance(seed, Subgroup) and seed.order > 1 and not ids:
        ids = seed.sorted_members
    return Subgroup(G, _normal_closure_set(G, ids, G.gens))


def derived_subgroup(x: PermGroup | Subgroup) -> Subgroup:
    """Commutator subgroup, as the normal closure of generator commutators."""
    G, _, gens = _ctx(x)
    comms = {G.comm(a, b) for a in gens for b in gens}
    return Subgroup(G, _normal_closure_set(G, comms, gens))


def _sylow_set(G: PermGroup, members: frozenset, p: int) -> frozenset:
    """A Sylow p-subgroup of the subgroup with the given members.

    Deterministic: starting from a maximal-order p-element (smallest id on
    ties), repeatedly extend by the first p-element of the normaliser not yet
    inside.  Each step multiplies the order by p, so termination is
    guaranteed by Sylow's theorem.
    """
    n = len(members)
    target = 1
    while n % (target * p) == 0:
        target *= p
    if target == 1:
        return frozenset([0])
    p_elems = [i for i in sorted(members) if _is_p_power(G.element_order(i), p) and i != 0]
    best = max(p_elems, key=lambda i: (G.element_order(i), -i))
    gens = [best]
    cur = _closure(G, gens)
    while len(cur) < target:
        for g in p_elems:
            if g in cur:
                continue
            if all(G.conj(s, g) in cur for s in gens):
                gens.append(g)
                cur = _closure(G, gens)
                break
        else:  # pragma: no cover - impossible by Sylow theory
            raise RuntimeError("sylow extension stalled")
    return cur


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(x: PermGroup | Subgroup, p: int) -> Subgroup:
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    G, members, _ = _ctx(x)
    return Subgroup(G, _sylow_set(G, members, p))


def _core_set(G: PermGroup, sub: frozenset, under: Sequence[int]) -> frozenset:
    """Largest subgroup of `sub` invariant under conjugation by `under`."""
    cur = sub
    stable = False
    while not stable:
        stable = True
        for g in under:
            ginv = G.inv(g)
            conj = frozenset(G.mul(G.mul(ginv, x), g) for x in cur)
            if conj != cur:
                cur = cur & conj
                stable = False
    return cur


def fitting_subgroup(x: PermGroup | Subgroup) -> Subgroup:
    """Largest nilpotent normal subgroup: the join of the p-cores."""
    G, members, gens = _ctx(x)
    n = len(members)
    seed: set[int] = {0}
    for p in _prime_factors(n):
        syl = _sylow_set(G, members, p)
        core = _core_set(G, syl, gens)
        seed.update(core)
    return Subgroup(G, _closure(G, sorted(seed)))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def structural_series(x: PermGroup | Subgroup, kind: str) -> list[Subgroup]:
    """Derived / lower_central (descending) or upper_central / fitting_tower
    (ascending) series, listed until stabilisation."""
    if kind not in ("derived", "lower_central", "upper_central", "fitting_tower"):
        raise ValueError(f"unknown series kind: {kind}")
    if isinstance(x, Subgroup) and x.order < x.parent.order:
        sub, _, from_sub = x.to_group()
        inner = structural_series(sub, kind)
        return [Subgroup(x.parent, frozenset(from_sub[i] for i in t.members)) for t in inner]
    G = x.parent if isinstance(x, Subgroup) else x
    full = frozenset(range(G.order))

    if kind in ("derived", "lower_central"):
        series = [Subgroup(G, full, G.gens)]
        cur = series[0]
        while True:
            if kind == "derived":
                nxt = derived_subgroup(cur)
            else:
                comms = {G.comm(a, b) for a in cur.gens for b in G.gens}
                nxt = Subgroup(G, _normal_closure_set(G, comms, G.gens))
            if nxt.members == cur.members:
                break
            series.append(nxt)
            cur = nxt
        return series

    if kind == "upper_central":
        series = [G.trivial_subgroup()]
        cur = series[0].members
        while True:
            nxt = frozenset(
                g for g in range(G.order)
                if all(G.comm(g, h) in cur for h in G.gens)
            )
            if nxt == cur:
                break
            series.append(Subgroup(G, nxt))
            cur = nxt
        return series

    # fitting_tower
    series = [G.trivial_subgroup()]
    cur = series[0]
    while cur.order < G.order:
        if cur.order == 1:
            fit = fitting_subgroup(G)
            lifted = fit.members
        else:
            q = quotient(G, cur)
            fit = fitting_subgroup(q.group)
            lifted = frozenset(
                i for i in range(G.order) if q.projection(i) in fit.members
            )
        if lifted == cur.members:
            break  # tower stalls (insoluble below)
        cur = Subgroup(G, lifted)
        series.append(cur)
    return series


def conjugacy_classes(G: PermGroup) -> list[tuple[int, ...]]:
    """Conjugacy classes as sorted id tuples, ordered by (size, first id)."""
    if G._classes is None:
        with G._lock:
            if G._classes is None:
                seen = [False] * G.order
                classes = []
                for i in range(G.order):
                    if seen[i]:
                        continue
                    orb = {i}
                    frontier = [i]
                    seen[i] = True
                    while frontier:
                        x = frontier.pop()
                        for g in G.gens:
                            y = G.conj(x, g)
                            if not seen[y]:
                                seen[y] = True
                                orb.add(y)
                                frontier.append(y)
                    classes.append(tuple(sorted(orb)))
                classes.sort(key=lambda c: (len(c), c))
                class_of = [0] * G.order
                for ci, c in enumerate(classes):
                    for x in c:
                        class_of[x] = ci
                G._class_of = class_of
                G._classes = classes
    return G._classes


def _class_sizes(G: PermGroup) -> list[int]:
    classes = conjugacy_classes(G)
    return [len(classes[G._class_of[i]]) for i in range(G.order)]


def element_orders(G: PermGroup) -> list[int]:
    return [G.element_order(i) for i in range(G.order)]


# ---------------------------------------------------------------------------
# homomorphisms and quotients


class GroupMap:
    """A homomorphism between two materialised groups.

    Defined by images of the domain's generators; the full element table is
    built once by parallel closure, which also verifies that the assignment
    really extends to a homomorphism.
    """

    def __init__(self, domain: PermGroup, codomain: PermGroup,
                 gen_images: dict[int, int] | None = None,
                 _table: list[int] | None = None):
        self.domain = domain
        self.codomain = codomain
        if _table is not None:
            self._table = _table
            self.gen_images = {g: _table[g] for g in domain.gens}
            return
        if gen_images is None:
            raise ValueError("gen_images required")
        missing = [g for g in domain.gens if g not in gen_images]
        if missing:
            raise ValueError(f"no image given for generator ids {missing}")
        self.gen_images = dict(gen_images)
        self._table = self._build_table()

    def _build_table(self) -> list[int]:
        A, B = self.domain, self.codomain
        table = {0: 0}
        frontier = [0]
        pairs = [(g, h) for g, h in self.gen_images.items()]
        while frontier:
            nxt = []
            for x in frontier:
                fx = table[x]
                for g, h in pairs:
                    y = A.mul(x, g)
                    z = B.mul(fx, h)
                    if y in table:
                        if table[y] != z:
                            raise ValueError("generator images do not extend to a homomorphism")
                    else:
                        table[y] = z
                        nxt.append(y)
            frontier = nxt
        if len(table) != A.order:
            raise ValueError("generator images given on a proper subgroup only")
        return [table[i] for i in range(A.order)]

    def __call__(self, i: int) -> int:
        return self._table[i]

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, frozenset(i for i, v in enumerate(self._table) if v == 0))

    def image(self) -> Subgroup:
        return Subgroup(self.codomain, frozenset(self._table))

    def preimage(self, sub_members: Iterable[int]) -> frozenset:
        target = set(sub_members)
        return frozenset(i for i, v in enumerate(self._table) if v in target)


@dataclass(frozen=True)
class QuotientGroup:
    """G/N realised faithfully on the left cosets of N."""

    source: PermGroup
    kernel: Subgroup
    group: PermGroup
    projection: GroupMap
    section: tuple[int, ...]  # quotient element id -> smallest source id in the coset


def quotient(G: PermGroup, N: Subgroup) -> QuotientGroup:
    """Quotient by a normal subgroup, as the coset action of G.

    Deterministic: coset representatives are the smallest member ids, and the
    quotient group's own element order is canonical.  Results are cached on G.
    """
    if N.parent is not G:
        raise ValueError("N is not a subgroup of G")
    cached = G._quotients.get(N.members)
    if cached is not None:
        return cached
    if not N.is_normal():
        raise ValueError("N is not normal in G")
    n = G.order
    cos_of = [-1] * n
    reps: list[int] = []
    for i in range(n):
        if cos_of[i] < 0:
            c = len(reps)
            reps.append(i)
            for k in N.members:
                cos_of[G.mul(i, k)] = c
    m = len(reps)
    gen_perms = []
    for g in G.gens:
        gen_perms.append(tuple(cos_of[G.mul(g, r)] for r in reps))
    Q = PermGroup(m, _tuple_closure(m, gen_perms), gen_perms)
    if Q.order != m:
        raise RuntimeError("coset action closure mismatch")  # pragma: no cover
    proj = GroupMap(G, Q, {g: Q._index[t] for g, t in zip(G.gens, gen_perms)})
    section = [-1] * m
    for i in range(n):
        q = proj(i)
        if section[q] < 0:
            section[q] = i
    out = QuotientGroup(G, N, Q, proj, tuple(section))
    with G._lock:
        G._quotients.setdefault(N.members, out)
    return G._quotients[N.members]


def _tuple_closure(degree: int, gen_tuples: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_tuples:
                y = tuple(x[v] for v in g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return list(seen)


# ---------------------------------------------------------------------------
# isomorphism


def _fingerprint(G: PermGroup) -> tuple:
    """Cheap isomorphism invariants used to reject before backtracking."""
    if G._fingerprint is None:
        orders = sorted((G.element_order(i) for i in range(G.order)))
        csizes = sorted(len(c) for c in conjugacy_classes(G))
        z = len(center(G).members)
        d = len(derived_subgroup(G).members)
        G._fingerprint = (G.order, tuple(orders), tuple(csizes), z, d)
    return G._fingerprint


def _generating_sequence(G: PermGroup) -> list[int]:
    seq: list[int] = []
    cur: frozenset = frozenset([0])
    for x in range(G.order):
        if x not in cur:
            seq.append(x)
            cur = _closure(G, seq)
            if len(cur) == G.order:
                break
    return seq


def _extend_partial(A: PermGroup, B: PermGroup, pairs: list[tuple[int, int]]) -> dict | None:
    """Parallel closure of a partial generator assignment.

    Returns the induced map on <gens> or None if it is inconsistent or
    non-injective.
    """
    table = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            fx = table[x]
            for g, h in pairs:
                y = A.mul(x, g)
                z = B.mul(fx, h)
                got = table.get(y)
                if got is None:
                    table[y] = z
                    nxt.append(y)
                elif got != z:
                    return None
        frontier = nxt
    if len(set(table.values())) != len(table):
        return None
    return table


def _iso_search(A: PermGroup, B: PermGroup, collect_all: bool):
    """Backtracking generator-image search; yields complete isomorphism tables."""
    seq = _generating_sequence(A)
    a_sizes = _class_sizes(A)
    b_sizes = _class_sizes(B)
    buckets: dict[tuple[int, int], list[int]] = {}
    for j in range(B.order):
        buckets.setdefault((B.element_order(j), b_sizes[j]), []).append(j)
    results = []

    def rec(k: int, pairs: list[tuple[int, int]]):
        if k == len(seq):
            table = _extend_partial(A, B, pairs)
            if table is not None and len(table) == A.order:
                results.append(tuple(table[i] for i in range(A.order)))
                return not collect_all
            return False
        a = seq[k]
        for b in buckets.get((A.element_order(a), a_sizes[a]), ()):
            pairs.append((a, b))
            if _extend_partial(A, B, pairs) is not None:
                if rec(k + 1, pairs):
                    pairs.pop()
                    return True
            pairs.pop()
        return False

    rec(0, [])
    return results


def is_isomorphic(A: PermGroup, B: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Exact isomorphism test by generator-image backtracking.

    Order-profile and class-size invariants prune first; the search is exact
    for groups within the isomorphism budget.
    """
    for X in (A, B):
        if X.order > budgets.isomorphism:
            raise ResourceLimitError("isomorphism", budgets.isomorphism, X.order)
    if A.order != B.order:
        return False
    if A is B:
        return True
    if _fingerprint(A) != _fingerprint(B):
        return False
    return bool(_iso_search(A, B, collect_all=False))


def automorphisms(G: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> list[tuple[int, ...]]:
    """All automorphisms as element-id image tuples (exhaustive backtracking)."""
    if G.order > budgets.isomorphism:
        raise ResourceLimitError("isomorphism", budgets.isomorphism, G.order)
    return _iso_search(G, G, collect_all=True)
