"""Group constructions: standard families, products, wreath products, chief
factors as standalone groups, and catalog file I/O.

Catalog file format: UTF-8 text, one JSON object per line, ``#`` starts a
comment line.  Required keys: name, order, degree, generators (lists of
images).  Optional: tags (list of strings).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import CatalogError, ResourceLimitError
from .permcore import (
    GroupMap,
    PermGroup,
    Permutation,
    Subgroup,
    _closure,
    _normal_closure_set,
    _tuple_closure,
    group_from_generators,
    quotient,
)

__all__ = [
    "standard",
    "direct_product",
    "ActionSpec",
    "semidirect_product",
    "WreathProduct",
    "wreath_regular",
    "chief_factor_as_group",
    "CatalogEntry",
    "load_catalog",
    "save_catalog",
    "bundled_catalog_path",
    "load_bundled_catalog",
]


# ---------------------------------------------------------------------------
# standard families


def standard(family: str, n: int | None = None, *,
             budgets: Budgets = DEFAULT_BUDGETS) -> PermGroup:
    """Standard families: C n, D n (order 2n), S n, A n, Q8."""
    fam = family.upper()
    if fam == "Q8":
        # left translation on the units ordered (1, i, -1, -i, j, -j, k, -k)
        i_perm = (1, 2, 3, 0, 6, 7, 5, 4)
        j_perm = (4, 7, 5, 6, 2, 0, 1, 3)
        return group_from_generators(8, [i_perm, j_perm], name="Q8", budgets=budgets)
    if n is None or n < 1:
        raise ValueError(f"family {family} needs a positive parameter")
    if fam == "C":
        images = tuple((x + 1) % n for x in range(n))
        return group_from_generators(n, [images], name=f"C{n}", budgets=budgets)
    if fam == "D":
        if n == 1:
            return group_from_generators(2, [(1, 0)], name="D1", budgets=budgets)
        if n == 2:
            g = direct_product(standard("C", 2), standard("C", 2))
            return PermGroup(g.degree, g._elems, [g._elems[i] for i in g.gens], name="D2")
        rot = tuple((x + 1) % n for x in range(n))
        refl = tuple((n - x) % n for x in range(n))
        return group_from_generators(n, [rot, refl], name=f"D{n}", budgets=budgets)
    if fam == "S":
        if n == 1:
            return group_from_generators(1, [(0,)], name="S1", budgets=budgets)
        cycle = tuple((x + 1) % n for x in range(n))
        swap = tuple([1, 0] + list(range(2, n)))
        return group_from_generators(n, [cycle, swap], name=f"S{n}", budgets=budgets)
    if fam == "A":
        if n <= 2:
            return group_from_generators(max(n, 1), [tuple(range(max(n, 1)))],
                                         name=f"A{n}", budgets=budgets)
        three = Permutation.from_cycles(n, (0, 1, 2)).images
        if n % 2 == 1:
            big = tuple((x + 1) % n for x in range(n))
        else:
            big = Permutation.from_cycles(n, tuple(range(1, n))).images
        return group_from_generators(n, [three, big], name=f"A{n}", budgets=budgets)
    raise ValueError(f"unknown family: {family}")


# ---------------------------------------------------------------------------
# products


def direct_product(A: PermGroup, B: PermGroup, *, budgets: Budgets = DEFAULT_BUDGETS) -> PermGroup:
    """A x B acting on disjoint points."""
    if A.order * B.order > budgets.elements:
        raise ResourceLimitError("elements", budgets.elements, A.order * B.order)
    d = A.degree + B.degree
    gens = []
    for g in A.gens:
        t = A._elems[g]
        gens.append(tuple(t) + tuple(range(A.degree, d)))
    for g in B.gens:
        t = B._elems[g]
        gens.append(tuple(range(A.degree)) + tuple(x + A.degree for x in t))
    name = None
    if A.name and B.name:
        name = f"{A.name}x{B.name}"
    return group_from_generators(d, gens or [tuple(range(d))], name=name, budgets=budgets)


@dataclass(frozen=True)
class ActionSpec:
    """An action of `actor` on `target` by automorphisms.

    ``auto_of_gen[k]`` gives, for the k-th generator of the actor, the induced
    permutation of the target's element ids.  Validation checks each is an
    automorphism and that the assignment extends to a homomorphism
    actor -> Aut(target) (by parallel closure).
    """

    actor: PermGroup
    target: PermGroup
    auto_of_gen: tuple[tuple[int, ...], ...]

    def validate(self) -> "GroupMap":
        T = self.target
        if len(self.auto_of_gen) != len(self.actor.gens):
            raise ValueError("need one automorphism per actor generator")
        for a in self.auto_of_gen:
            if sorted(a) != list(range(T.order)):
                raise ValueError("automorphism image is not a bijection on element ids")
            if a[0] != 0:
                raise ValueError("automorphism must fix the identity")
            for x in T.gens:
                for y in range(T.order):
                    if a[T.mul(x, y)] != T.mul(a[x], a[y]):
                        raise ValueError("permutation of element ids is not an automorphism")
        if not self.auto_of_gen:
            aut_group = group_from_generators(max(T.order, 1), [tuple(range(max(T.order, 1)))])
            return GroupMap(self.actor, aut_group,
                            {g: 0 for g in self.actor.gens})
        closure = _tuple_closure(T.order, list(self.auto_of_gen))
        aut_group = PermGroup(T.order, closure, list(self.auto_of_gen))
        gen_images = {g: aut_group._index[a] for g, a in zip(self.actor.gens, self.auto_of_gen)}
        # raises ValueError if the assignment is inconsistent
        return GroupMap(self.actor, aut_group, gen_images)


def trivial_action(actor: PermGroup, target: PermGroup) -> ActionSpec:
    ident = tuple(range(target.order))
    return ActionSpec(actor, target, tuple(ident for _ in actor.gens))


def inversion_action(actor: PermGroup, target: PermGroup) -> ActionSpec:
    """Every actor generator acts by inversion (target must be abelian)."""
    inv = tuple(target.inv(i) for i in range(target.order))
    return ActionSpec(actor, target, tuple(inv for _ in actor.gens))


@dataclass(frozen=True)
class SemidirectProduct:
    group: PermGroup
    normal_embedding: GroupMap   # target N -> group
    actor_embedding: GroupMap    # actor H -> group


def semidirect_product(N: PermGroup, H: PermGroup, action: ActionSpec, *,
                       budgets: Budgets = DEFAULT_BUDGETS) -> SemidirectProduct:
    """N x| H realised on (N's element set) disjoint-union (H's points).

    N acts on its own elements by left translation; an H generator acts on
    N's elements through its automorphism and on H's points naturally.
    """
    if action.target is not N or action.actor is not H:
        raise ValueError("action must map H (actor) into Aut(N) (target)")
    action.validate()
    if N.order * H.order > budgets.elements:
        raise ResourceLimitError("elements", budgets.elements, N.order * H.order)
    d = N.order + H.degree
    gens = []
    n_gen_perms = []
    for g in N.gens:
        t = tuple(N.mul(g, x) for x in range(N.order)) + tuple(range(N.order, d))
        n_gen_perms.append(t)
        gens.append(t)
    h_gen_perms = []
    for g, auto in zip(H.gens, action.auto_of_gen):
        t = tuple(auto) + tuple(N.order + v for v in H._elems[g])
        h_gen_perms.append(t)
        gens.append(t)
    G = group_from_generators(d, gens or [tuple(range(d))], budgets=budgets)
    if G.order != N.order * H.order:
        raise RuntimeError("semidirect closure has wrong order")  # pragma: no cover
    n_embed = GroupMap(N, G, {g: G._index[t] for g, t in zip(N.gens, n_gen_perms)})
    h_embed = GroupMap(H, G, {g: G._index[t] for g, t in zip(H.gens, h_gen_perms)})
    return SemidirectProduct(G, n_embed, h_embed)


@dataclass(frozen=True)
class WreathProduct:
    group: PermGroup
    base: Subgroup                      # A^|B|, the normal base
    top: Subgroup                       # the permuting copy of B
    coordinate_embeddings: tuple[GroupMap, ...]  # A -> group, one per B element
    diagonal_embedding: GroupMap        # A -> group, same element in every block


def wreath_regular(A: PermGroup, B: PermGroup, *,
                   budgets: Budgets = DEFAULT_BUDGETS) -> WreathProduct:
    """Regular wreath product A wr B: base A^|B| indexed by B's elements, with
    B permuting the blocks by left translation."""
    m = B.order
    order = A.order ** m * m
    if order > budgets.elements:
        raise ResourceLimitError("elements", budgets.elements, order)
    dA = A.degree
    d = dA * m

    def block_perm(block: int, t: Sequence[int]) -> tuple[int, ...]:
        out = list(range(d))
        off = block * dA
        for x in range(dA):
            out[off + x] = off + t[x]
        return tuple(out)

    coord_gen_perms: list[list[tuple[int, ...]]] = []
    for blk in range(m):
        coord_gen_perms.append([block_perm(blk, A._elems[g]) for g in A.gens])
    top_gen_perms = []
    for g in B.gens:
        out = list(range(d))
        for blk in range(m):
            dest = B.mul(g, blk)
            for x in range(dA):
                out[blk * dA + x] = dest * dA + x
        top_gen_perms.append(tuple(out))
    gens = coord_gen_perms[0] + top_gen_perms if m > 0 else []
    G = group_from_generators(d, gens or [tuple(range(d))], budgets=budgets)
    if G.order != order:
        raise RuntimeError("wreath closure has wrong order")  # pragma: no cover
    base_gen_ids = [G._index[t] for perms in coord_gen_perms for t in perms]
    base = Subgroup(G, _closure(G, base_gen_ids), tuple(base_gen_ids))
    top_ids = [G._index[t] for t in top_gen_perms]
    top = Subgroup(G, _closure(G, top_ids), tuple(top_ids))
    coord_embeds = tuple(
        GroupMap(A, G, {g: G._index[t] for g, t in zip(A.gens, perms)})
        for perms in coord_gen_perms
    )
    diag_perms = []
    for gi, g in enumerate(A.gens):
        t = list(range(d))
        for blk in range(m):
            bp = coord_gen_perms[blk][gi]
            for x in range(dA):
                t[blk * dA + x] = bp[blk * dA + x]
        diag_perms.append(tuple(t))
    diag = GroupMap(A, G, {g: G._index[t] for g, t in zip(A.gens, diag_perms)})
    return WreathProduct(G, base, top, coord_embeds, diag)


# ---------------------------------------------------------------------------
# chief factors as groups


def chief_factor_as_group(G: PermGroup, K: Subgroup, H: Subgroup
                          ) -> tuple[PermGroup, GroupMap, Subgroup]:
    """Materialise a chief factor H/K of G.

    Returns (factor group F, action map G -> <induced automorphisms of F>,
    centraliser C_G(H/K) = kernel of the action).  Raises ValueError unless
    K < H are both normal in G and H/K is a chief factor (no normal subgroup
    of G lies strictly between).
    """
    if K.parent is not G or H.parent is not G:
        raise ValueError("K, H must be subgroups of G")
    if not K.members < H.members:
        raise ValueError("need K < H")
    if not (K.is_normal() and H.is_normal()):
        raise ValueError("K and H must both be normal in G")
    # chief iff for every x in H \ K the normal closure of K u {x} is H
    for x in H.members - K.members:
        clo = _normal_closure_set(G, list(K.gens) + [x], G.gens)
        if clo != H.members:
            raise ValueError("H/K is not a chief factor of G")
    Hgrp, to_sub, from_sub = H.to_group()
    Kin = Subgroup(Hgrp, frozenset(to_sub[i] for i in K.members))
    q = quotient(Hgrp, Kin)
    F = q.group
    # induced automorphism of F for each generator of G
    autos = []
    for g in G.gens:
        images = [0] * F.order
        for fid in range(F.order):
            rep_parent = from_sub[q.section[fid]]
            conj = G.conj(rep_parent, g)
            images[fid] = q.projection(to_sub[conj])
        autos.append(tuple(images))
    closure = _tuple_closure(F.order, autos)
    aut_group = PermGroup(F.order, closure, autos)
    act = GroupMap(G, aut_group, {g: aut_group._index[t] for g, t in zip(G.gens, autos)})
    return F, act, act.kernel()


# ---------------------------------------------------------------------------
# catalogs


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    degree: int
    generators: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...] = field(default_factory=tuple)

    def group(self, *, budgets: Budgets = DEFAULT_BUDGETS) -> PermGroup:
        G = group_from_generators(self.degree, self.generators, name=self.name,
                                  budgets=budgets)
        if G.order != self.order:
            raise CatalogError(
                f"entry {self.name}: declared order {self.order} but closure has {G.order}")
        return G

    def to_json(self) -> str:
        obj = {"name": self.name, "order": self.order, "degree": self.degree,
               "generators": [list(g) for g in self.generators]}
        if self.tags:
            obj["tags"] = list(self.tags)
        return json.dumps(obj, separators=(",", ":"))


def load_catalog(path) -> list[CatalogEntry]:
    """Parse a catalog file; raises CatalogError with a line number on bad input."""
    entries = []
    names = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise CatalogError(f"bad JSON ({e.msg})", lineno)
            entries.append(_entry_from_obj(obj, lineno))
            if entries[-1].name in names:
                raise CatalogError(f"duplicate name {entries[-1].name}", lineno)
            names.add(entries[-1].name)
    return entries


def _entry_from_obj(obj, lineno: int) -> CatalogEntry:
    if not isinstance(obj, dict):
        raise CatalogError("each line must be a JSON object", lineno)
    for key in ("name", "order", "degree", "generators"):
        if key not in obj:
            raise CatalogError(f"missing key {key!r}", lineno)
    name, order, degree = obj["name"], obj["order"], obj["degree"]
    if not isinstance(name, str) or not name:
        raise CatalogError("name must be a nonempty string", lineno)
    if not isinstance(order, int) or order < 1:
        raise CatalogError("order must be a positive integer", lineno)
    if not isinstance(degree, int) or degree < 1:
        raise CatalogError("degree must be a positive integer", lineno)
    gens = []
    for g in obj["generators"]:
        if (not isinstance(g, list) or len(g) != degree
                or sorted(g) != list(range(degree))):
            raise CatalogError(f"generator {g!r} is not a degree-{degree} permutation", lineno)
        gens.append(tuple(g))
    tags = tuple(obj.get("tags", ()))
    if not all(isinstance(t, str) for t in tags):
        raise CatalogError("tags must be strings", lineno)
    return CatalogEntry(name, order, degree, tuple(gens), tags)


def save_catalog(path, entries: Iterable[CatalogEntry], *, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        for e in entries:
            fh.write(e.to_json() + "\n")


def bundled_catalog_path():
    """Path to the catalog of all groups of order <= 63 shipped with the package."""
    return resources.files("formlab").joinpath("data/groups_le63.jsonl")


def load_bundled_catalog() -> list[CatalogEntry]:
    res = bundled_catalog_path()
    with resources.as_file(res) as p:
        return load_catalog(p)
