"""Formation registry and formation-theoretic subgroup operators.

A formation here is one of a fixed registry of group classes (nilpotent,
soluble, supersoluble, ...), each with a membership predicate and, when
the class is saturated, a canonical local definition F(p).  On top of the
registry this module computes residuals, F-maximal subgroups and their
intersection, F-central chief factors, the F-hypercentre, F-critical
groups, a boundary-condition scan, the subgroup generated by elements of
prime order and order four, the soluble radical, S-quasinormal cyclic
subgroups, and the hyper-generalized centre.
"""

from __future__ import annotations

import re
from typing import Iterable

from .config import DEFAULT_BUDGETS, Budgets
from .constructions import ActionSpec, chief_factor_as_group, semidirect_product
from .errors import ResourceLimitError
from .lattice import (_is_prime, all_subgroups, chief_factor_orders,
                      maximal_subgroups, minimal_normal_subgroups,
                      normal_subgroups)
from .permcore import (PermGroup, Subgroup, _closure, _core_set,
                       _normal_closure_set, _prime_factors, derived_subgroup,
                       quotient, structural_series, sylow_subgroup)
from .reports import VerificationReport

__all__ = [
    "Formation", "NILPOTENT", "SOLUBLE", "SUPERSOLUBLE", "ABELIAN",
    "DERIVED_NILPOTENT", "TWO_PRIME_SUPERSOLUBLE", "TRIVIAL",
    "nilpotent_length_formation", "p_decomposable", "p_nilpotent",
    "p_supersoluble", "hall_partition", "base_registry",
    "formation_from_spec", "membership", "fp_membership", "residual",
    "f_maximal_subgroups", "int_f", "is_f_central", "z_f", "is_f_critical",
    "boundary_scan", "psi_e", "radical", "s_quasinormal_cyclics",
    "genz_star",
]


class Formation:
    """One member of the fixed registry of group classes.

    `tag` selects the defining predicate; `param` carries the numeric or
    partition parameter where the tag needs one.  `key` is the canonical
    printable identifier used in reports and caches.
    """

    __slots__ = ("tag", "param", "key", "description", "is_hereditary",
                 "is_saturated")

    def __init__(self, tag, param, key, description, *, hereditary, saturated):
        self.tag = tag
        self.param = param
        self.key = key
        self.description = description
        self.is_hereditary = hereditary
        self.is_saturated = saturated

    def __repr__(self):
        return f"<Formation {self.key}>"

    def __eq__(self, other):
        return isinstance(other, Formation) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


NILPOTENT = Formation("N", None, "N", "nilpotent groups",
                      hereditary=True, saturated=True)
SOLUBLE = Formation("S", None, "S", "soluble groups",
                    hereditary=True, saturated=True)
SUPERSOLUBLE = Formation("U", None, "U", "supersoluble groups",
                         hereditary=True, saturated=True)
ABELIAN = Formation("A", None, "A", "abelian groups",
                    hereditary=True, saturated=False)
DERIVED_NILPOTENT = Formation("NA", None, "NA",
                              "groups whose derived subgroup is nilpotent",
                              hereditary=True, saturated=True)
TWO_PRIME_SUPERSOLUBLE = Formation(
    "W2", None, "TwoPrimeSuper",
    "groups whose chief factors are 2-groups or of odd prime order",
    hereditary=True, saturated=True)
TRIVIAL = Formation("TRIVIAL", None, "Trivial",
                    "the class containing only the trivial group",
                    hereditary=True, saturated=True)


def nilpotent_length_formation(r: int) -> Formation:
    """Soluble groups whose Fitting tower has length at most r."""
    if r < 1:
        raise ValueError("nilpotent length bound must be >= 1")
    return Formation("NR", r, f"Nr({r})",
                     f"soluble groups of nilpotent length <= {r}",
                     hereditary=True, saturated=True)


def p_decomposable(p: int) -> Formation:
    """Direct products of a p-group with a p'-group."""
    _require_prime(p)
    return Formation("PDECOMP", p, f"PDecomp({p})",
                     f"{p}-decomposable groups",
                     hereditary=True, saturated=True)


def p_nilpotent(p: int) -> Formation:
    """Groups with a normal p-complement."""
    _require_prime(p)
    return Formation("PNILP", p, f"PNilp({p})",
                     f"{p}-nilpotent groups",
                     hereditary=True, saturated=True)


def p_supersoluble(p: int) -> Formation:
    """Groups whose chief factors of order divisible by p have order p."""
    _require_prime(p)
    return Formation("PSUPER", p, f"PSuper({p})",
                     f"{p}-supersoluble groups",
                     hereditary=True, saturated=True)


def hall_partition(cells: Iterable[Iterable[int]]) -> Formation:
    """Direct products of Hall subgroups over a partition of the primes.

    `cells` lists the explicit cells; any prime not mentioned forms its own
    singleton cell.
    """
    canon = []
    seen: set[int] = set()
    for cell in cells:
        c = frozenset(cell)
        for p in c:
            _require_prime(p)
            if p in seen:
                raise ValueError(f"prime {p} appears in two cells")
        seen |= c
        if c:
            canon.append(c)
    canon.sort(key=min)
    parts = "|".join(",".join(str(p) for p in sorted(c)) for c in canon)
    return Formation("PIPART", tuple(canon), f"PiPart({parts})",
                     "products of Hall subgroups over a prime partition",
                     hereditary=True, saturated=True)


def base_registry() -> dict[str, Formation]:
    """The unparameterized registry entries, keyed canonically."""
    out = {}
    for F in (NILPOTENT, SOLUBLE, SUPERSOLUBLE, ABELIAN, DERIVED_NILPOTENT,
              TWO_PRIME_SUPERSOLUBLE, TRIVIAL):
        out[F.key] = F
    return out


_NR_RE = re.compile(r"^nr?\(?(\d+)\)?$")
_PARAM_RE = re.compile(r"^(pdecomp|pnilp|psuper)\(?(\d+)\)?$")
_PIPART_RE = re.compile(r"^pipart[:(]([0-9,|]+)\)?$")


def formation_from_spec(text: str) -> Formation:
    """Parse a formation spec string.

    Accepted forms (case-insensitive): N, S, U, A, NA, Nr(2) or N2,
    PDecomp(2) or pdecomp2, PNilp(3), PSuper(5), TwoPrimeSuper or 2super,
    PiPart:2,3|5, Trivial or 1.
    """
    s = text.strip().lower()
    fixed = {"n": NILPOTENT, "s": SOLUBLE, "u": SUPERSOLUBLE, "a": ABELIAN,
             "na": DERIVED_NILPOTENT, "twoprimesuper": TWO_PRIME_SUPERSOLUBLE,
             "2super": TWO_PRIME_SUPERSOLUBLE, "trivial": TRIVIAL,
             "1": TRIVIAL}
    if s in fixed:
        return fixed[s]
    m = _NR_RE.match(s)
    if m:
        return nilpotent_length_formation(int(m.group(1)))
    m = _PARAM_RE.match(s)
    if m:
        maker = {"pdecomp": p_decomposable, "pnilp": p_nilpotent,
                 "psuper": p_supersoluble}[m.group(1)]
        return maker(int(m.group(2)))
    m = _PIPART_RE.match(s)
    if m:
        cells = [[int(p) for p in cell.split(",") if p]
                 for cell in m.group(1).split("|")]
        return hall_partition(cells)
    raise ValueError(f"unknown formation spec: {text!r}")


# ---------------------------------------------------------------------------
# arithmetic and structural helpers


def _require_prime(p: int) -> None:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")


def _part_for(n: int, cell: frozenset) -> int:
    """Largest divisor of n supported on the primes in `cell`."""
    part = 1
    for p in cell:
        while n % p == 0:
            part *= p
            n //= p
    return part


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _as_group(x: PermGroup | Subgroup) -> PermGroup:
    if isinstance(x, Subgroup):
        return x.to_group()[0]
    return x


def _is_abelian(G: PermGroup) -> bool:
    gens = G.gens
    return all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)


def _is_nilpotent(G: PermGroup) -> bool:
    return structural_series(G, "lower_central")[-1].order == 1


def _is_soluble(G: PermGroup) -> bool:
    return structural_series(G, "derived")[-1].order == 1


def _nilpotent_length(G: PermGroup) -> int | None:
    """Length of the Fitting tower, or None when the tower stalls below G."""
    tower = structural_series(G, "fitting_tower")
    if tower[-1].order != G.order:
        return None
    return len(tower) - 1


def _hall_cell_is_normal(G: PermGroup, cell: frozenset) -> bool:
    """Whether the elements with order supported on `cell` form a normal
    Hall subgroup.  Any normal Hall subgroup for the cell must equal this
    element set, so existence reduces to a size and closure check."""
    target = _part_for(G.order, cell)
    mem = [i for i in range(G.order)
           if all(q in cell for q in _prime_factors(G.element_order(i)))]
    if len(mem) != target:
        return False
    return len(_closure(G, mem)) == target


def _p_quotient(G: PermGroup, p: int) -> PermGroup:
    """G / O_p(G), where O_p is the core of a Sylow p-subgroup."""
    syl = sylow_subgroup(G, p)
    core = _core_set(G, syl.members, G.gens)
    if len(core) == G.order:
        return quotient(G, G.full_subgroup()).group
    return quotient(G, Subgroup(G, core)).group


def _abelian_of_exponent(G: PermGroup, m: int) -> bool:
    if not _is_abelian(G):
        return False
    return all(m % G.element_order(g) == 0 for g in G.gens)


def _cell_of(F: Formation, p: int) -> frozenset:
    """The partition cell containing p (singleton for unlisted primes)."""
    for cell in F.param:
        if p in cell:
            return cell
    return frozenset([p])


# ---------------------------------------------------------------------------
# membership


def membership(F: Formation, x: PermGroup | Subgroup) -> bool:
    """Decide whether x lies in the formation F."""
    if isinstance(x, Subgroup):
        cache = x.parent._membership_cache
        key = (F.key, x.key())
        if key not in cache:
            cache[key] = _member(F, _as_group(x))
        return cache[key]
    cache = x._membership_cache
    key = (F.key, "self")
    if key not in cache:
        cache[key] = _member(F, x)
    return cache[key]


def _member(F: Formation, G: PermGroup) -> bool:
    tag = F.tag
    if tag == "TRIVIAL":
        return G.order == 1
    if tag == "A":
        return _is_abelian(G)
    if tag == "N":
        return _is_nilpotent(G)
    if tag == "S":
        return _is_soluble(G)
    if tag == "U":
        return all(_is_prime(f) for f in chief_factor_orders(G))
    if tag == "NA":
        D = derived_subgroup(G.full_subgroup())
        if D.order == G.order:
            return G.order == 1  # perfect: derived subgroup nilpotent iff trivial
        return _is_nilpotent(_as_group(D))
    if tag == "NR":
        length = _nilpotent_length(G)
        return length is not None and length <= F.param
    if tag == "W2":
        return all(_is_p_power(f, 2) or _is_prime(f)
                   for f in chief_factor_orders(G))
    if tag == "PSUPER":
        p = F.param
        return all(f == p for f in chief_factor_orders(G) if f % p == 0)
    if tag == "PNILP":
        p = F.param
        rest = frozenset(q for q in _prime_factors(G.order) if q != p)
        return _hall_cell_is_normal(G, rest)
    if tag == "PDECOMP":
        p = F.param
        if G.order % p:
            return True
        rest = frozenset(q for q in _prime_factors(G.order) if q != p)
        return (_hall_cell_is_normal(G, frozenset([p]))
                and _hall_cell_is_normal(G, rest))
    if tag == "PIPART":
        cells = {}
        for q in _prime_factors(G.order):
            cells.setdefault(_cell_of(F, q), None)
        return all(_hall_cell_is_normal(G, cell) for cell in cells)
    raise ValueError(f"unknown formation tag {tag}")  # pragma: no cover


# ---------------------------------------------------------------------------
# canonical local definition F(p)


def fp_membership(F: Formation, p: int, x: PermGroup | Subgroup) -> bool:
    """Decide membership in the canonical local definition F(p).

    Only saturated registry entries carry a local definition, and only on
    their prime support.
    """
    _require_prime(p)
    if F.tag == "TRIVIAL":
        raise ValueError("the trivial formation has empty prime support")
    if not F.is_saturated:
        raise ValueError(f"formation {F.key} is not saturated: "
                         "no canonical local definition")
    if isinstance(x, Subgroup):
        cache = x.parent._membership_cache
        key = (F.key, "fp", p, x.key())
        if key not in cache:
            cache[key] = _fp(F, p, _as_group(x))
        return cache[key]
    cache = x._membership_cache
    key = (F.key, "fp", p, "self")
    if key not in cache:
        cache[key] = _fp(F, p, x)
    return cache[key]


def _fp(F: Formation, p: int, G: PermGroup) -> bool:
    tag = F.tag
    if tag == "N":
        return _is_p_power(G.order, p)
    if tag == "S":
        return _is_soluble(G)
    if tag == "U":
        return _abelian_of_exponent(_p_quotient(G, p), p - 1)
    if tag == "NA":
        return _is_abelian(_p_quotient(G, p))
    if tag == "NR":
        if F.param == 1:
            return _is_p_power(G.order, p)
        q = _p_quotient(G, p)
        length = _nilpotent_length(q)
        return length is not None and length <= F.param - 1
    if tag == "PNILP":
        if p == F.param:
            return _is_p_power(G.order, p)
        return _member(F, G)
    if tag == "PSUPER":
        if p == F.param:
            return _abelian_of_exponent(_p_quotient(G, p), p - 1)
        return _member(F, G)
    if tag == "PDECOMP":
        if p == F.param:
            return _is_p_power(G.order, p)
        return G.order % F.param != 0
    if tag == "PIPART":
        cell = _cell_of(F, p)
        return all(q in cell for q in _prime_factors(G.order))
    if tag == "W2":
        if p == 2:
            return _member(F, G)
        return _abelian_of_exponent(_p_quotient(G, p), p - 1)
    raise ValueError(f"no local definition for formation tag {tag}")


# ---------------------------------------------------------------------------
# residual, F-maximal subgroups, Int_F


def residual(F: Formation, G: PermGroup) -> Subgroup:
    """Smallest normal subgroup with quotient in F.

    Computed as the intersection of all normal subgroups whose quotient
    lies in F; the intersection's own quotient is then verified to lie in
    F (the formation property of the registry entries).
    """
    inter: frozenset | None = None
    for N in normal_subgroups(G):
        if membership(F, quotient(G, N).group):
            inter = N.members if inter is None else inter & N.members
    if inter is None:
        raise RuntimeError(f"no normal subgroup of {G!r} has quotient in "
                           f"{F.key}")  # pragma: no cover (G/G always works)
    R = Subgroup(G, inter)
    if not membership(F, quotient(G, R).group):
        raise AssertionError(
            f"intersection of kernels leaves {F.key}: not a formation")
    return R


def f_maximal_subgroups(F: Formation, G: PermGroup, *,
                        budgets: Budgets = DEFAULT_BUDGETS) -> list[Subgroup]:
    """All subgroups in F that are maximal among subgroups in F."""
    if membership(F, G):
        return [G.full_subgroup()]
    lat = all_subgroups(G, budgets=budgets)
    members = [e for e in lat.subgroups if membership(F, e)]
    out = [e for e in members
           if not any(e.members < f.members for f in members)]
    out.sort(key=lambda e: e.key())
    return out


def int_f(F: Formation, G: PermGroup, *,
          budgets: Budgets = DEFAULT_BUDGETS) -> Subgroup:
    """Intersection of all F-maximal subgroups of G; always normal."""
    cache = G._membership_cache
    key = (F.key, "int")
    if key in cache:
        return cache[key]
    maxima = f_maximal_subgroups(F, G, budgets=budgets)
    inter = frozenset(range(G.order))
    for sub in maxima:
        inter &= sub.members
    I = Subgroup(G, inter)
    if not I.is_normal():
        raise AssertionError("intersection of F-maximal subgroups must be "
                             "normal: conjugation permutes them")
    cache[key] = I
    return I


# ---------------------------------------------------------------------------
# F-central chief factors and the F-hypercentre


def _validate_chief(G: PermGroup, K: Subgroup, H: Subgroup) -> None:
    if K.parent is not G or H.parent is not G:
        raise ValueError("K, H must be subgroups of G")
    if not K.members < H.members:
        raise ValueError("need K < H")
    if not (K.is_normal() and H.is_normal()):
        raise ValueError("K and H must both be normal in G")
    q = quotient(G, K)
    img = frozenset(q.projection(i) for i in H.members)
    Q = q.group
    for x in img - {0}:
        if _normal_closure_set(Q, [x], Q.gens) != img:
            raise ValueError("H/K is not a chief factor of G")


def _factor_centralizer(G: PermGroup, K: Subgroup, H: Subgroup) -> Subgroup:
    """Elements acting trivially on H/K: [g, H] inside K."""
    hgens = H.gens if H.gens else ()
    mem = frozenset(g for g in range(G.order)
                    if all(G.comm(g, h) in K.members for h in hgens))
    return Subgroup(G, mem)


def _central_local(F: Formation, G: PermGroup, K: Subgroup,
                   H: Subgroup) -> bool:
    """Local centrality test: G/C in F(p) for every prime of |H/K|."""
    C = _factor_centralizer(G, K, H)
    factor_order = H.order // K.order
    Q = quotient(G, C).group
    for p in _prime_factors(factor_order):
        if F.tag == "TRIVIAL":
            return False  # empty prime support: local class is empty
        if not fp_membership(F, p, Q):
            return False
    return True


def _central_semidirect(F: Formation, G: PermGroup, K: Subgroup, H: Subgroup,
                        *, budgets: Budgets) -> bool:
    """Build (H/K) x| (G/C) explicitly and test it for membership."""
    factor, act, C = chief_factor_as_group(G, K, H)
    if not _is_abelian(factor):
        raise ValueError("semidirect centrality test needs an abelian factor")
    if factor.order * (G.order // C.order) > budgets.elements:
        raise ResourceLimitError("elements", budgets.elements,
                                 factor.order * (G.order // C.order))
    q = quotient(G, C)
    autos = tuple(act.codomain._elems[act(q.section[g])]
                  for g in q.group.gens)
    spec = ActionSpec(actor=q.group, target=factor, auto_of_gen=autos)
    prod = semidirect_product(factor, q.group, spec, budgets=budgets)
    return membership(F, prod.group)


def is_f_central(F: Formation, G: PermGroup, K: Subgroup, H: Subgroup,
                 method: str = "local", *,
                 budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Whether the chief factor H/K of G is F-central.

    method="local" tests G/C_G(H/K) against the local definition F(p) for
    every prime of the factor (saturated formations only).  The
    "semidirect" method builds (H/K) x| (G/C_G(H/K)) and tests membership
    directly; it is restricted to abelian factors, where the induced
    action is cheap to realise.
    """
    _validate_chief(G, K, H)
    if method == "local":
        if F.tag != "TRIVIAL" and not F.is_saturated:
            raise ValueError("local centrality test needs a saturated "
                             "formation")
        return _central_local(F, G, K, H)
    if method == "semidirect":
        return _central_semidirect(F, G, K, H, budgets=budgets)
    raise ValueError(f"unknown method {method!r}")


def _central_auto(F: Formation, G: PermGroup, K: Subgroup, H: Subgroup,
                  *, budgets: Budgets) -> bool:
    """Total centrality test used by the hypercentre lifting."""
    if F.is_saturated:
        return _central_local(F, G, K, H)
    # unsaturated registry entries contain only abelian groups, so a
    # non-abelian factor is never central for them
    if not all(G.comm(a, b) in K.members for a in H.gens for b in H.gens):
        return False
    return _central_semidirect(F, G, K, H, budgets=budgets)


def z_f(F: Formation, G: PermGroup, *,
        budgets: Budgets = DEFAULT_BUDGETS) -> Subgroup:
    """The F-hypercentre: top of the maximal chain of F-central lifts.

    Computed by ascending lifting: pull back an F-central minimal normal
    subgroup of G/Z and repeat until none qualifies.  The result is
    independent of which central factor is lifted first; this is asserted
    by recomputing with the reversed candidate order.
    """
    first = _z_f_run(F, G, reverse=False, budgets=budgets)
    second = _z_f_run(F, G, reverse=True, budgets=budgets)
    if first != second:
        raise AssertionError("hypercentre depends on lifting order")
    return Subgroup(G, first)


def _z_f_run(F: Formation, G: PermGroup, *, reverse: bool,
             budgets: Budgets) -> frozenset:
    zmem = frozenset([0])
    while len(zmem) < G.order:
        if len(zmem) == 1:
            q = None  # avoid materialising the quotient by the trivial subgroup
            Q = G
        else:
            q = quotient(G, Subgroup(G, zmem))
            Q = q.group
        candidates = sorted(minimal_normal_subgroups(Q),
                            key=lambda s: s.key(), reverse=reverse)
        lifted = None
        for M in candidates:
            if _central_auto(F, Q, Q.trivial_subgroup(), M, budgets=budgets):
                lifted = M
                break
        if lifted is None:
            break
        target = lifted.members
        if q is None:
            zmem = target
        else:
            zmem = frozenset(i for i in range(G.order)
                             if q.projection(i) in target)
    return zmem


# ---------------------------------------------------------------------------
# critical groups and the boundary condition


def is_f_critical(F: Formation, G: PermGroup, *,
                  budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """G outside F with every proper subgroup inside F.

    For hereditary F it suffices to test maximal subgroups.
    """
    if membership(F, G):
        return False
    if F.is_hereditary:
        return all(membership(F, M)
                   for M in maximal_subgroups(G, budgets=budgets))
    lat = all_subgroups(G, budgets=budgets)
    return all(membership(F, e) for e in lat.subgroups
               if e.order < G.order)


def _fp_critical(F: Formation, p: int, G: PermGroup, *,
                 budgets: Budgets, skip_maximal_check: bool = False) -> bool:
    """Critical with respect to the local class F(p)."""
    if fp_membership(F, p, G):
        return False
    if skip_maximal_check:
        return True
    return all(fp_membership(F, p, M)
               for M in maximal_subgroups(G, budgets=budgets))


def boundary_scan(F: Formation, catalog, max_order: int, *,
                  budgets: Budgets = DEFAULT_BUDGETS,
                  _mutation: str | None = None) -> VerificationReport:
    """Scan a catalog for F(p)-critical groups outside F.

    The boundary condition asks that every F(p)-critical group lie in F,
    for every prime p in the support of F; each critical non-member is
    reported as a witness.  The optional mutation id "skip-maximal-check"
    deliberately weakens the criticality test (for suite sensitivity
    tests) and must produce spurious witnesses.
    """
    if not (F.is_hereditary and F.is_saturated):
        raise ValueError("boundary scan needs a hereditary saturated "
                         "formation")
    if _mutation is not None and _mutation != "skip-maximal-check":
        raise ValueError(f"suite boundary knows no mutation {_mutation!r}")
    failures = []
    notes = []
    cases = 0
    groups = [(e, e.group()) for e in catalog if e.order <= max_order]
    if F.tag == "TRIVIAL":
        notes.append("empty prime support: nothing to scan")
        primes = []
    else:
        primes = [p for p in range(2, max_order + 1) if _is_prime(p)]
    skip = _mutation == "skip-maximal-check"
    for p in primes:
        for entry, G in groups:
            cases += 1
            if _fp_critical(F, p, G, budgets=budgets,
                            skip_maximal_check=skip):
                if not membership(F, G):
                    failures.append(
                        (entry.name, f"p={p}",
                         f"member of {F.key}", "F(p)-critical non-member"))
    return VerificationReport("boundary", F.key,
                              f"max_order={max_order} groups={len(groups)}",
                              cases, failures, notes=notes)


# ---------------------------------------------------------------------------
# psi_e, radical, S-quasinormal cyclics, genz*


def psi_e(G: PermGroup, N: Subgroup) -> Subgroup:
    """Subgroup of N generated by its elements of prime order and order 4."""
    if N.parent is not G:
        raise ValueError("N is not a subgroup of G")
    seed = [i for i in N.sorted_members
            if _is_prime(G.element_order(i)) or G.element_order(i) == 4]
    return Subgroup(G, _closure(G, seed))


def radical(x: PermGroup | Subgroup, *,
            budgets: Budgets = DEFAULT_BUDGETS) -> Subgroup:
    """Largest soluble normal subgroup (the soluble radical).

    Computed as the join of all soluble normal subgroups; cross-checked
    against the intersection of soluble-maximal subgroups whenever the
    lattice budget allows enumerating the lattice.
    """
    if isinstance(x, Subgroup) and x.order < x.parent.order:
        sub, _, from_sub = x.to_group()
        inner = radical(sub, budgets=budgets)
        return Subgroup(x.parent, frozenset(from_sub[i] for i in inner.members))
    G = x.parent if isinstance(x, Subgroup) else x
    union: set[int] = {0}
    for N in normal_subgroups(G):
        if _is_soluble(_as_group(N)):
            union |= N.members
    R = Subgroup(G, _closure(G, sorted(union)))
    if G.order <= budgets.lattice:
        I = int_f(SOLUBLE, G, budgets=budgets)
        if I.members != R.members:
            raise AssertionError("soluble radical differs from the "
                                 "intersection of soluble-maximal subgroups")
    return R


def _cyclic_subgroups(G: PermGroup) -> list[Subgroup]:
    seen: dict[frozenset, int] = {}
    for g in range(G.order):
        mem = set()
        x = 0
        while True:
            mem.add(x)
            x = G.mul(x, g)
            if x == 0:
                break
        fs = frozenset(mem)
        seen.setdefault(fs, g)
    subs = [Subgroup(G, mem, (g,) if g else ()) for mem, g in seen.items()]
    subs.sort(key=lambda s: s.key())
    return subs


def _sylow_conjugates(G: PermGroup, p: int) -> list[frozenset]:
    P = sylow_subgroup(G, p)
    seen = {P.members}
    frontier = [P.members]
    while frontier:
        nxt = []
        for mem in frontier:
            for g in G.gens:
                ginv = G.inv(g)
                conj = frozenset(G.mul(G.mul(ginv, x), g) for x in mem)
                if conj not in seen:
                    seen.add(conj)
                    nxt.append(conj)
        frontier = nxt
    return sorted(seen, key=sorted)


def _permutes(G: PermGroup, A: frozenset, B: frozenset) -> bool:
    """Whether the set products AB and BA coincide.

    |AB| = |BA| for subgroups, so one-sided containment suffices.
    """
    if A <= B or B <= A:
        return True
    prod = set()
    for a in A:
        for b in B:
            prod.add(G.mul(a, b))
    for b in B:
        for a in A:
            if G.mul(b, a) not in prod:
                return False
    return True


def s_quasinormal_cyclics(G: PermGroup) -> list[Subgroup]:
    """Cyclic subgroups permuting with every Sylow subgroup of G.

    One Sylow subgroup per prime is enumerated together with all its
    conjugates, which covers every Sylow subgroup.  One representative of
    each prime is tested first so non-permuting subgroups fail early.
    """
    families = [_sylow_conjugates(G, p) for p in _prime_factors(G.order)]
    ordered = [fam[0] for fam in families]
    ordered.extend(Q for fam in families for Q in fam[1:])
    out = []
    for H in _cyclic_subgroups(G):
        if all(_permutes(G, H.members, Q) for Q in ordered):
            out.append(H)
    return out


def genz_star(G: PermGroup, *, _mutation: str | None = None) -> Subgroup:
    """Hyper-generalized centre: limit of the ascending chain generated by
    cyclic S-quasinormal subgroups of successive quotients.

    Mutation id "all-cyclics" deliberately treats every cyclic subgroup as
    S-quasinormal (for suite sensitivity tests).
    """
    zmem = frozenset([0])
    while len(zmem) < G.order:
        if len(zmem) == 1:
            q = None  # avoid materialising the quotient by the trivial subgroup
            Q = G
        else:
            q = quotient(G, Subgroup(G, zmem))
            Q = q.group
        if _mutation == "all-cyclics":
            qualifying = _cyclic_subgroups(Q)
        else:
            qualifying = s_quasinormal_cyclics(Q)
        seeds = [g for H in qualifying for g in H.gens]
        gen = _closure(Q, seeds)
        if len(gen) == 1:
            break
        if q is None:
            zmem = gen
        else:
            zmem = frozenset(i for i in range(G.order)
                             if q.projection(i) in gen)
    return Subgroup(G, zmem)
