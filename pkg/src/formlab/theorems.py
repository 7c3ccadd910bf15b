"""Catalog-wide verification suites for formation-theoretic identities.

Each suite checks one proved statement over every catalog group within an
order bound and returns a VerificationReport.  A suite passes only when no
group violates the statement; skips record groups left out for budget
reasons.  Every suite also accepts a private mutation id that deliberately
weakens one hypothesis, used to confirm the suite actually discriminates.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from .config import DEFAULT_BUDGETS, DEFAULT_SAMPLE, DEFAULT_SEED, Budgets
from .constructions import CatalogEntry, standard, wreath_regular
from .errors import ResourceLimitError
from .formations import (NILPOTENT, SOLUBLE, SUPERSOLUBLE,
                         TWO_PRIME_SUPERSOLUBLE, Formation, _central_auto,
                         boundary_scan, f_maximal_subgroups,
                         formation_from_spec, genz_star, membership,
                         nilpotent_length_formation, psi_e, radical, z_f)
from .lattice import (_is_prime, all_subgroups, maximal_subgroups,
                      minimal_normal_subgroups, normal_subgroups, set_product)
from .permcore import (PermGroup, Subgroup, _closure, _core_set,
                       _prime_factors, centralizer, quotient,
                       structural_series, sylow_subgroup)
from .reports import VerificationReport

__all__ = [
    "verify_baer", "verify_theorem_a", "verify_theorem_b", "verify_theorem_c",
    "verify_t51", "verify_t54", "verify_t59", "verify_t510",
    "verify_example_513", "search_int_vs_z", "run_suite", "MutationCase",
    "MUTATION_CASES", "SUITE_DEFAULT_MAX_ORDER",
]

PAIR_CAP = 10_000


# ---------------------------------------------------------------------------
# shared plumbing


def _scope(catalog, max_order: int) -> list[CatalogEntry]:
    return [e for e in catalog if e.order <= max_order]


def _map_entries(worker, payloads, jobs: int):
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, payloads))
    return [worker(p) for p in payloads]


def _merge(suite, formation_key, scope_text, results, t0) -> VerificationReport:
    cases = sum(r[0] for r in results)
    failures = [f for r in results for f in r[1]]
    skips = [s for r in results for s in r[2]]
    notes = [n for r in results for n in r[3]]
    return VerificationReport(suite, formation_key, scope_text, cases,
                              failures, skips, notes,
                              elapsed=time.time() - t0)


def _check_mutation(suite: str, mutation: str | None, allowed: str) -> None:
    if mutation is not None and mutation != allowed:
        raise ValueError(f"suite {suite} knows no mutation {mutation!r}")


def _int_members_of_group(F: Formation, X: PermGroup, budgets: Budgets,
                          mutation: str | None) -> frozenset:
    """Member ids of Int_F(X); the mutation keeps only the first F-maximal
    subgroup instead of intersecting them all."""
    maxima = f_maximal_subgroups(F, X, budgets=budgets)
    if mutation == "int-first-maximal":
        return maxima[0].members
    inter = frozenset(range(X.order))
    for sub in maxima:
        inter &= sub.members
    return inter


def _int_members_of_subgroup(F: Formation, H: Subgroup, budgets: Budgets,
                             mutation: str | None) -> frozenset:
    if H.order == H.parent.order:
        return _int_members_of_group(F, H.parent, budgets, mutation)
    if membership(F, H):
        return H.members  # a member is its own unique F-maximal subgroup
    X, _, from_sub = H.to_group()
    inner = _int_members_of_group(F, X, budgets, mutation)
    return frozenset(from_sub[i] for i in inner)


def _z_members(F: Formation, G: PermGroup, budgets: Budgets,
               mutation: str | None) -> frozenset:
    """F-hypercentre member ids; the mutation stops after the first lift."""
    if mutation == "first-lift-only":
        for M in sorted(minimal_normal_subgroups(G), key=lambda s: s.key()):
            if _central_auto(F, G, G.trivial_subgroup(), M, budgets=budgets):
                return M.members
        return frozenset([0])
    return z_f(F, G, budgets=budgets).members


# ---------------------------------------------------------------------------
# Baer's identity: for the nilpotent class, the intersection of the maximal
# nilpotent subgroups is exactly the hypercentre (= top upper central term)


def _baer_worker(payload):
    entry, budgets, mutation = payload
    G = entry.group()
    try:
        imem = _int_members_of_group(NILPOTENT, G, budgets, None)
    except ResourceLimitError as exc:
        return (0, [], [(entry.name, "baer", f"budget: {exc}")], [])
    upper = structural_series(G, "upper_central")
    top = upper[-1].members
    if mutation == "z1-only":
        zmem = upper[1].members if len(upper) > 1 else upper[0].members
    else:
        zmem = _z_members(NILPOTENT, G, budgets, None)
    failures = []
    if zmem != top:
        failures.append((entry.name, "hypercentre-vs-upper-central", "equal",
                         f"|Z_N|={len(zmem)} |Z_inf|={len(top)}"))
    if imem != top:
        failures.append((entry.name, "int-vs-upper-central", "equal",
                         f"|Int_N|={len(imem)} |Z_inf|={len(top)}"))
    return (2, failures, [], [])


def verify_baer(catalog, max_order: int = 48, *,
                budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
                _mutation: str | None = None) -> VerificationReport:
    """Intersection of maximal nilpotent subgroups == hypercentre == top
    term of the upper central series, for every group in scope."""
    _check_mutation("baer", _mutation, "z1-only")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(_baer_worker,
                           [(e, budgets, _mutation) for e in entries], jobs)
    return _merge("baer", "N", f"max_order={max_order} groups={len(entries)}",
                  results, t0)


# ---------------------------------------------------------------------------
# hypercentre vs intersection of F-maximal subgroups

# classes whose local definition keeps every critical group inside the
# class, so the intersection equals the hypercentre everywhere
_EQUAL_TAGS = {"N", "NA", "PDECOMP", "PIPART", "TRIVIAL"}


def _ta_worker(payload):
    entry, fkey, budgets, mutation = payload
    F = formation_from_spec(fkey)
    G = entry.group()
    try:
        imem = _int_members_of_group(F, G, budgets, None)
    except ResourceLimitError as exc:
        return (0, [], [(entry.name, "int-vs-z", f"budget: {exc}")], [])
    zmem = _z_members(F, G, budgets, mutation)
    if zmem != imem:
        return (1, [], [],
                [(entry.name, f"|Int|={len(imem)} |Z|={len(zmem)}")])
    return (1, [], [], [])


def verify_theorem_a(F: Formation, catalog, max_order: int = 48, *,
                     budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
                     _mutation: str | None = None) -> VerificationReport:
    """Compare Int_F with the F-hypercentre over the catalog.

    For classes where every locally-critical group stays in the class the
    two must agree on every group; any mismatch is a failure.  For the
    remaining classes mismatches are legitimate, so the suite reports the
    witnesses it finds (or their absence) and passes either way.
    """
    if not (F.is_hereditary and F.is_saturated):
        raise ValueError("Int/Z comparison needs a hereditary saturated "
                         "formation")
    _check_mutation("theorem-a", _mutation, "first-lift-only")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(
        _ta_worker, [(e, F.key, budgets, _mutation) for e in entries], jobs)
    cases = sum(r[0] for r in results)
    skips = [s for r in results for s in r[2]]
    mismatches = [n for r in results for n in r[3]]
    expect_equal = F.tag in _EQUAL_TAGS
    failures = []
    notes = []
    if expect_equal:
        failures = [(name, "int-vs-z", "equal", detail)
                    for name, detail in mismatches]
    else:
        if mismatches:
            for name, detail in mismatches:
                notes.append(f"witness: {name} {detail}")
        else:
            notes.append("no Int/Z separation witness within this bound")
    return VerificationReport(
        "theorem-a", F.key, f"max_order={max_order} groups={len(entries)}",
        cases, failures, skips, notes, elapsed=time.time() - t0)


def _tb_worker(payload):
    entry, r, budgets, mutation = payload
    F = nilpotent_length_formation(r)
    G = entry.group()
    try:
        imem = _int_members_of_group(F, G, budgets, None)
    except ResourceLimitError as exc:
        return (0, [], [(entry.name, f"r={r}", f"budget: {exc}")], [])
    zmem = _z_members(F, G, budgets, mutation)
    if zmem != imem:
        return (1, [(entry.name, f"r={r}", "equal",
                     f"|Int|={len(imem)} |Z|={len(zmem)}")], [], [])
    return (1, [], [], [])


def verify_theorem_b(catalog, max_order: int = 48, *, rs=(1, 2, 3),
                     budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
                     _mutation: str | None = None) -> VerificationReport:
    """On soluble groups, Int and the hypercentre agree for the bounded
    nilpotent length classes."""
    _check_mutation("theorem-b", _mutation, "first-lift-only")
    t0 = time.time()
    entries = [e for e in _scope(catalog, max_order) if "soluble" in e.tags]
    payloads = [(e, r, budgets, _mutation) for r in rs for e in entries]
    results = _map_entries(_tb_worker, payloads, jobs)
    key = ",".join(f"Nr({r})" for r in rs)
    return _merge("theorem-b", key,
                  f"max_order={max_order} soluble groups={len(entries)} "
                  f"rs={tuple(rs)}", results, t0)


# ---------------------------------------------------------------------------
# the eight inheritance properties of Int_F


def _sampled_pairs(total_a: int, total_b: int, cap: int, sample: int,
                   rng: random.Random):
    """Index pairs (i, j); exhaustive below the cap, else a seeded sample."""
    total = total_a * total_b
    if total <= cap:
        return [(i, j) for i in range(total_a) for j in range(total_b)], False
    picks = rng.sample(range(total), min(sample, total))
    return [divmod(ix, total_b) for ix in sorted(picks)], True


def _tc_worker(payload):
    entry, fkey, seed, sample, cap, budgets, mutation = payload
    F = formation_from_spec(fkey)
    G = entry.group()
    try:
        return _theorem_c_cases(F, G, entry.name, seed, sample, cap,
                                budgets, mutation)
    except ResourceLimitError as exc:
        return (0, [], [(entry.name, "all", f"budget: {exc}")], [])


def _theorem_c_cases(F, G, name, seed, sample, cap, budgets, mutation):
    failures = []
    notes = []
    cases = 0
    lat = all_subgroups(G, budgets=budgets)
    subs = lat.subgroups
    normals = normal_subgroups(G)
    imem = _int_members_of_group(F, G, budgets, mutation)
    int_cache: dict = {}

    def int_of(H: Subgroup) -> frozenset:
        k = H.key()
        if k not in int_cache:
            int_cache[k] = _int_members_of_subgroup(F, H, budgets, mutation)
        return int_cache[k]

    def fail(case, expected, observed):
        failures.append((name, case, expected, observed))

    # (normality) conjugation permutes the F-maximal subgroups, so their
    # intersection must be normal
    cases += 1
    isub = Subgroup(G, imem)
    int_normal = isub.is_normal()
    if not int_normal:
        fail("int-normality", "normal subgroup", f"|Int|={len(imem)} not normal")

    # (a) image of Int under a quotient lands inside Int of the image
    quotient_int_cache: dict = {}

    def quotient_int_preimage(xmem: frozenset, N: Subgroup) -> frozenset:
        k = (xmem, N.members)
        if k not in quotient_int_cache:
            q = quotient(G, N)
            img = Subgroup(q.group,
                           frozenset(q.projection(i) for i in xmem))
            inner = _int_members_of_subgroup(F, img, budgets, mutation)
            quotient_int_cache[k] = frozenset(
                i for i in range(G.order) if q.projection(i) in inner)
        return quotient_int_cache[k]

    rng = random.Random(f"{seed}:{name}:a")
    pairs, sampled = _sampled_pairs(len(subs), len(normals), cap, sample, rng)
    if sampled:
        notes.append(f"{name} (a): sampled {len(pairs)} of "
                     f"{len(subs) * len(normals)} pairs")
    join_cache: dict = {}
    for i, j in pairs:
        H, N = subs[i], normals[j]
        cases += 1
        jk = (H.members, N.members)
        if jk not in join_cache:
            join_cache[jk] = _closure(G, tuple(H.gens) + tuple(N.gens))
        xmem = join_cache[jk]
        if not int_of(H) <= quotient_int_preimage(xmem, N):
            fail(f"a[H#{i},N#{j}]", "Int(H)N/N <= Int(HN/N)", "violated")

    # (b) Int(H) meets E inside Int(H meet E)
    rng = random.Random(f"{seed}:{name}:b")
    pairs, sampled = _sampled_pairs(len(subs), len(subs), cap, sample, rng)
    if sampled:
        notes.append(f"{name} (b): sampled {len(pairs)} of "
                     f"{len(subs) ** 2} pairs")
    for i, j in pairs:
        H, E = subs[i], subs[j]
        cases += 1
        meet = subs[lat.index_of(H.members & E.members)]
        if not (int_of(H) & E.members) <= int_of(meet):
            fail(f"b[H#{i},E#{j}]", "Int(H)&E <= Int(H&E)", "violated")

    # (c) membership of H/(H meet Int) forces membership of H
    for i, H in enumerate(subs):
        cases += 1
        if membership(F, H):
            continue
        hin = H.members & imem
        X, to_sub, _ = H.to_group()
        K = Subgroup(X, frozenset(to_sub[m] for m in hin))
        if not K.is_normal():
            continue  # only possible with a mutated, non-normal Int
        if membership(F, quotient(X, K).group):
            fail(f"c[H#{i}]", "H/(H&Int) in F implies H in F",
                 "quotient in F but H outside")

    # (d) joining a member with Int stays in the class
    for i, H in enumerate(subs):
        if not membership(F, H):
            continue
        cases += 1
        join = _closure(G, tuple(isub.gens) + tuple(H.gens))
        if not membership(F, Subgroup(G, join)):
            fail(f"d[H#{i}]", "Int*H in F for H in F", "join left F")

    # (e) Int passes to quotients by normal subgroups inside it
    for j, N in enumerate(normals):
        if not N.members <= imem:
            continue
        cases += 1
        q = quotient(G, N)
        img = frozenset(q.projection(i) for i in imem)
        inner = _int_members_of_group(F, q.group, budgets, mutation)
        if img != inner:
            fail(f"e[N#{j}]", "Int(G)/N == Int(G/N)",
                 f"|image|={len(img)} |Int(G/N)|={len(inner)}")

    # (f) Int of the quotient by Int is trivial
    if int_normal:
        cases += 1
        q = quotient(G, isub)
        inner = _int_members_of_group(F, q.group, budgets, mutation)
        if len(inner) != 1:
            fail("f", "Int(G/Int(G)) == 1", f"order {len(inner)}")

    # (g) detection through prime-order and order-four elements; valid only
    # when every F-critical subgroup is soluble
    gate_ok = True
    if not membership(SOLUBLE, G):
        for H in subs:
            if membership(SOLUBLE, H):
                continue
            X = H.to_group()[0]
            if not membership(F, X) and all(
                    membership(F, M) for M in maximal_subgroups(
                        X, budgets=budgets)):
                gate_ok = False
                break
    if gate_ok:
        for j, N in enumerate(normals):
            cases += 1
            psi = psi_e(G, N)
            if psi.members <= imem and not N.members <= imem:
                fail(f"g[N#{j}]", "psi_e(N) <= Int implies N <= Int",
                     "violated")
    else:
        notes.append(f"{name} (g): skipped, insoluble F-critical subgroup")

    # (h) the hypercentre sits inside Int
    cases += 1
    if not _z_members(F, G, budgets, None) <= imem:
        fail("h", "Z_F(G) <= Int_F(G)", "violated")

    return (cases, failures, [], notes)


def verify_theorem_c(F: Formation, catalog, max_order: int = 32, *,
                     seed: int = DEFAULT_SEED, sample: int = DEFAULT_SAMPLE,
                     pair_cap: int = PAIR_CAP,
                     budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
                     _mutation: str | None = None) -> VerificationReport:
    """The eight inheritance properties of the intersection of F-maximal
    subgroups, checked per group: quotient image (a), intersection (b),
    membership detection (c), member join (d), quotient identity (e),
    triviality over Int (f), prime-order element detection (g), and the
    hypercentre bound (h)."""
    if not (F.is_hereditary and F.is_saturated):
        raise ValueError("the inheritance suite needs a hereditary "
                         "saturated formation")
    _check_mutation("theorem-c", _mutation, "int-first-maximal")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    payloads = [(e, F.key, seed, sample, pair_cap, budgets, _mutation)
                for e in entries]
    results = _map_entries(_tc_worker, payloads, jobs)
    return _merge("theorem-c", F.key,
                  f"max_order={max_order} groups={len(entries)} "
                  f"pair_cap={pair_cap} sample={sample}", results, t0)


# ---------------------------------------------------------------------------
# coprime-index triples


def _coprime_index_triples(G: PermGroup, subs: list[Subgroup]):
    """Candidate triples (A, B, C) with pairwise coprime indices, unordered.

    Repeats are allowed only for the whole group: a repeated proper
    subgroup would share its own index with itself.
    """
    full = subs[-1]
    proper = subs[:-1]
    n = G.order
    yield (full, full, full)
    for A in proper:
        yield (full, full, A)
    idx = [n // A.order for A in proper]
    for i, A in enumerate(proper):
        for j in range(i + 1, len(proper)):
            if gcd(idx[i], idx[j]) != 1:
                continue
            yield (full, A, proper[j])
            for k in range(j + 1, len(proper)):
                if gcd(idx[i], idx[k]) == 1 and gcd(idx[j], idx[k]) == 1:
                    yield (A, proper[j], proper[k])


def _t51_worker(payload):
    entry, budgets, mutation = payload
    G = entry.group()
    failures = []
    cases = 0
    if membership(SOLUBLE, G):
        # conclusion holds outright; sanity-check the trivial witness triple
        cases += 2
        if radical(G, budgets=budgets).order != G.order:
            failures.append((entry.name, "radical", "R(G)=G for soluble G",
                             "radical is proper"))
        return (cases, failures, [], [])
    lat = all_subgroups(G, budgets=budgets)
    subs = lat.subgroups
    rad_cache: dict = {}

    def rad_of(A: Subgroup) -> frozenset:
        k = A.key()
        if k not in rad_cache:
            rad_cache[k] = radical(A, budgets=budgets).members
        return rad_cache[k]

    cases += 1  # soluble-subgroup variant, one verdict per group
    for triple in _coprime_index_triples(G, subs):
        cases += 1
        ok = True
        if mutation != "no-radical-condition":
            for a in range(3):
                for b in range(a + 1, 3):
                    A, B = triple[a], triple[b]
                    inter = A.members & B.members
                    if not (inter <= rad_of(A) and inter <= rad_of(B)):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            failures.append(
                (entry.name,
                 "t51[" + ",".join(str(t.order) for t in triple) + "]",
                 "no qualifying triple in an insoluble group",
                 "hypothesis satisfied"))
        # three soluble subgroups with pairwise coprime indices already
        # force solubility
        if all(membership(SOLUBLE, t) for t in triple):
            failures.append(
                (entry.name,
                 "c52[" + ",".join(str(t.order) for t in triple) + "]",
                 "no soluble coprime-index triple in an insoluble group",
                 "triple found"))
    return (cases, failures, [], [])


def verify_t51(catalog, max_order: int = 60, *,
               budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
               _mutation: str | None = None) -> VerificationReport:
    """Three subgroups with pairwise coprime indices and pairwise
    intersections inside both soluble radicals force solubility."""
    _check_mutation("t51", _mutation, "no-radical-condition")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(_t51_worker,
                           [(e, budgets, _mutation) for e in entries], jobs)
    return _merge("t51", None, f"max_order={max_order} groups={len(entries)}",
                  results, t0)


# ---------------------------------------------------------------------------
# supersolubility via supplements of maximal subgroups of Sylow subgroups


def _t54_worker(payload):
    entry, budgets, mutation = payload
    G = entry.group()
    failures = []
    cases = 0
    lat = all_subgroups(G, budgets=budgets)
    subs = lat.subgroups
    is_super = membership(SUPERSOLUBLE, G)
    int_cache: dict = {}
    z_cache: dict = {}

    def int_u(T: Subgroup) -> frozenset:
        k = T.key()
        if k not in int_cache:
            int_cache[k] = _int_members_of_subgroup(SUPERSOLUBLE, T,
                                                    budgets, None)
        return int_cache[k]

    def z_u(T: Subgroup) -> frozenset:
        k = T.key()
        if k not in z_cache:
            if T.order == G.order:
                z_cache[k] = z_f(SUPERSOLUBLE, G, budgets=budgets).members
            else:
                X, _, from_sub = T.to_group()
                inner = z_f(SUPERSOLUBLE, X, budgets=budgets).members
                z_cache[k] = frozenset(from_sub[i] for i in inner)
        return z_cache[k]

    hyp54 = hyp55 = hyp56 = hyp57 = hyp58 = True
    for p in _prime_factors(G.order):
        P = sylow_subgroup(G, p)
        X, _, from_sub = P.to_group()
        for M in maximal_subgroups(X, budgets=budgets):
            V = Subgroup(G, frozenset(from_sub[i] for i in M.members))
            vg = _core_set(G, V.members, G.gens)
            v_normal = V.is_normal()
            hyp55 &= v_normal
            found54 = found56 = found57 = False
            found58 = v_normal  # the normal branch of the disjunction
            for T in subs:
                inter = V.members & T.members
                if V.order * T.order != G.order * len(inter):
                    continue  # T does not supplement V
                if mutation == "ignore-intersection-condition":
                    found54 = True
                if not found54:
                    prod = set_product(G, int_u(T), vg)
                    if inter <= prod:
                        found54 = True
                if not found56 and len(inter) == 1:
                    found56 = True
                if not found57 and membership(SUPERSOLUBLE, T):
                    found57 = True
                if not found58 and inter <= z_u(T):
                    found58 = True
                if found54 and found56 and found57 and found58:
                    break
            hyp54 &= found54
            hyp56 &= found56
            hyp57 &= found57
            hyp58 &= found58

    cases += 1
    if hyp54 != is_super:
        failures.append((entry.name, "supplement-int-condition",
                         f"hypothesis == supersoluble ({is_super})",
                         f"hypothesis {hyp54}"))
    cases += 1
    if hyp55 and not is_super:
        failures.append((entry.name, "all-normal",
                         "normal maximal Sylow subgroups force "
                         "supersolubility", "not supersoluble"))
    cases += 1
    if hyp56 and not is_super:
        failures.append((entry.name, "all-complemented",
                         "complemented maximal Sylow subgroups force "
                         "supersolubility", "not supersoluble"))
    cases += 1
    if hyp57 != is_super:
        failures.append((entry.name, "supersoluble-supplement",
                         f"hypothesis == supersoluble ({is_super})",
                         f"hypothesis {hyp57}"))
    cases += 1
    if hyp58 != is_super:
        failures.append((entry.name, "normal-or-hypercentral",
                         f"hypothesis == supersoluble ({is_super})",
                         f"hypothesis {hyp58}"))
    return (cases, failures, [], [])


def verify_t54(catalog, max_order: int = 24, *,
               budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
               _mutation: str | None = None) -> VerificationReport:
    """Supersolubility is equivalent to every maximal subgroup V of every
    Sylow subgroup having a supplement T with V meet T inside
    Int_U(T) * (core of V); the related normal / complemented /
    supersoluble-supplement / hypercentre variants are checked too."""
    _check_mutation("t54", _mutation, "ignore-intersection-condition")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(_t54_worker,
                           [(e, budgets, _mutation) for e in entries], jobs)
    return _merge("t54", "U", f"max_order={max_order} groups={len(entries)}",
                  results, t0)


# ---------------------------------------------------------------------------
# odd-order minimal subgroups and the two-prime supersoluble class


def _t59_worker(payload):
    entry, budgets, mutation = payload
    G = entry.group()
    F = SUPERSOLUBLE if mutation == "use-supersoluble-int" else \
        TWO_PRIME_SUPERSOLUBLE
    try:
        imem = _int_members_of_group(F, G, budgets, None)
    except ResourceLimitError as exc:
        return (0, [], [(entry.name, "t59", f"budget: {exc}")], [])
    hyp = all(g in imem for g in range(G.order)
              if G.element_order(g) % 2 == 1
              and _is_prime(G.element_order(g)))
    member = membership(TWO_PRIME_SUPERSOLUBLE, G)
    if hyp != member:
        return (1, [(entry.name, "odd-minimal-subgroups",
                     f"hypothesis == membership ({member})",
                     f"hypothesis {hyp}")], [], [])
    return (1, [], [], [])


def verify_t59(catalog, max_order: int = 48, *,
               budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
               _mutation: str | None = None) -> VerificationReport:
    """A group is in the two-prime supersoluble class exactly when all its
    odd prime order subgroups lie in the intersection of the maximal
    subgroups from that class."""
    _check_mutation("t59", _mutation, "use-supersoluble-int")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(_t59_worker,
                           [(e, budgets, _mutation) for e in entries], jobs)
    return _merge("t59", "TwoPrimeSuper",
                  f"max_order={max_order} groups={len(entries)}", results, t0)


# ---------------------------------------------------------------------------
# coprime-index triples with hypercentral intersections force nilpotency


def _t510_worker(payload):
    entry, n_max, budgets, mutation = payload
    G = entry.group()
    failures = []
    cases = 0
    lat = all_subgroups(G, budgets=budgets)
    subs = lat.subgroups
    is_nilp = membership(NILPOTENT, G)
    nclass = len(structural_series(G, "upper_central")) - 1 if is_nilp else None
    intn_cache: dict = {}
    zn_cache: dict = {}

    def zn_of(A: Subgroup, n: int) -> frozenset:
        k = (A.key(), n)
        if k in zn_cache:
            return zn_cache[k]
        ik = A.key()
        if ik not in intn_cache:
            intn_cache[ik] = Subgroup(
                G, _int_members_of_subgroup(NILPOTENT, A, budgets, None))
        series = structural_series(intn_cache[ik], "upper_central")
        zn_cache[k] = series[min(n, len(series) - 1)].members
        return zn_cache[k]

    for n in range(1, n_max + 1):
        if is_nilp and nclass <= n:
            cases += 1  # conclusion already true, any triple is harmless
            continue
        for triple in _coprime_index_triples(G, subs):
            cases += 1
            ok = True
            if mutation != "no-center-condition":
                for a in range(3):
                    for b in range(a + 1, 3):
                        A, B = triple[a], triple[b]
                        inter = A.members & B.members
                        if not (inter <= zn_of(A, n)
                                and inter <= zn_of(B, n)):
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                failures.append(
                    (entry.name,
                     f"t510[n={n};"
                     + ",".join(str(t.order) for t in triple) + "]",
                     "no qualifying triple when class > n",
                     "hypothesis satisfied"))

    # nilpotent-subgroup variant
    cases += 1
    if not is_nilp:
        for triple in _coprime_index_triples(G, subs):
            if all(membership(NILPOTENT, t) for t in triple):
                failures.append(
                    (entry.name,
                     "c511[" + ",".join(str(t.order) for t in triple) + "]",
                     "no nilpotent coprime-index triple in a non-nilpotent "
                     "group", "triple found"))
    # abelian-subgroup variant
    cases += 1
    gens = G.gens
    is_ab = all(G.mul(a, b) == G.mul(b, a) for a in gens for b in gens)
    if not is_ab:
        abelian_cache: dict = {}

        def is_abelian_sub(A: Subgroup) -> bool:
            k = A.key()
            if k not in abelian_cache:
                ag = A.gens
                abelian_cache[k] = all(
                    G.mul(x, y) == G.mul(y, x) for x in ag for y in ag)
            return abelian_cache[k]

        for triple in _coprime_index_triples(G, subs):
            if all(is_abelian_sub(t) for t in triple):
                failures.append(
                    (entry.name,
                     "c512[" + ",".join(str(t.order) for t in triple) + "]",
                     "no abelian coprime-index triple in a non-abelian "
                     "group", "triple found"))
    return (cases, failures, [], [])


def verify_t510(catalog, max_order: int = 48, *, n_max: int = 4,
                budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
                _mutation: str | None = None) -> VerificationReport:
    """Three subgroups with pairwise coprime indices whose pairwise
    intersections land in the n-th centre of each one's maximal-nilpotent
    intersection force nilpotency of class at most n."""
    _check_mutation("t510", _mutation, "no-center-condition")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(
        _t510_worker, [(e, n_max, budgets, _mutation) for e in entries], jobs)
    return _merge("t510", None,
                  f"max_order={max_order} groups={len(entries)} "
                  f"n_max={n_max}", results, t0)


# ---------------------------------------------------------------------------
# the separating example: D7 wr C3


def verify_example_513(*, seed: int = DEFAULT_SEED,
                       sample: int = DEFAULT_SAMPLE,
                       budgets: Budgets = DEFAULT_BUDGETS,
                       _mutation: str | None = None) -> VerificationReport:
    """The order 8232 wreath product of D7 by C3: its base 7-part P is the
    unique minimal normal subgroup and self-centralizing, the supersoluble
    hypercentre and hyper-generalized centre are both trivial, yet P joined
    with any supersoluble subgroup stays supersoluble (sampled)."""
    _check_mutation("example-513", _mutation, "all-cyclics")
    t0 = time.time()
    failures = []
    notes = []
    cases = 0

    def check(case, cond, expected, observed):
        nonlocal cases
        cases += 1
        if not cond:
            failures.append(("D7wrC3", case, expected, observed))

    W = wreath_regular(standard("D", 7), standard("C", 3), budgets=budgets)
    G = W.group
    check("order", G.order == 8232, "order 8232", f"order {G.order}")

    mns = minimal_normal_subgroups(G)
    check("unique-minimal-normal",
          len(mns) == 1 and mns[0].order == 343,
          "one minimal normal subgroup of order 343",
          f"orders {[m.order for m in mns]}")
    P = mns[0]
    check("self-centralizing", centralizer(G, P).members == P.members,
          "C_G(P) == P", "centralizer differs")

    z = z_f(SUPERSOLUBLE, G, budgets=budgets)
    check("trivial-hypercentre", z.order == 1, "Z_U == 1",
          f"order {z.order}")

    gz = genz_star(G, _mutation=_mutation)
    check("trivial-genz-star", gz.order == 1, "genz* == 1",
          f"order {gz.order}")

    try:
        all_subgroups(G, budgets=budgets)
        check("lattice-budget", False, "lattice enumeration must exceed the "
              "budget", "lattice was enumerated")
    except ResourceLimitError:
        check("lattice-budget", True, "", "")

    rng = random.Random(f"{seed}:example-513")
    found = 0
    for _ in range(sample):
        a = rng.randrange(G.order)
        b = rng.randrange(G.order)
        V = Subgroup(G, _closure(G, (a, b)))
        cases += 1
        if not membership(SUPERSOLUBLE, V):
            continue
        found += 1
        pv = Subgroup(G, _closure(G, tuple(P.gens) + (a, b)))
        if not membership(SUPERSOLUBLE, pv):
            failures.append(
                ("D7wrC3", f"product-with-P[a={a},b={b}]",
                 "P*V supersoluble for supersoluble V",
                 f"|V|={V.order} |PV|={pv.order} product left the class"))
    notes.append(f"supersoluble sampled subgroups: {found} of {sample}")
    return VerificationReport(
        "example-513", "U", f"seed={seed} sample={sample}", cases, failures,
        [], notes, elapsed=time.time() - t0)


# ---------------------------------------------------------------------------
# scan helper: where do Int and the hypercentre separate


def search_int_vs_z(F: Formation, catalog, max_order: int = 48, *,
                    budgets: Budgets = DEFAULT_BUDGETS,
                    jobs: int = 1) -> VerificationReport:
    """Scan the catalog for groups where the intersection of F-maximal
    subgroups differs from the F-hypercentre.  Witnesses are reported as
    notes; the scan itself always passes."""
    if not (F.is_hereditary and F.is_saturated):
        raise ValueError("Int/Z scan needs a hereditary saturated formation")
    t0 = time.time()
    entries = _scope(catalog, max_order)
    results = _map_entries(
        _ta_worker, [(e, F.key, budgets, None) for e in entries], jobs)
    cases = sum(r[0] for r in results)
    skips = [s for r in results for s in r[2]]
    notes = [f"witness: {name} {detail}"
             for r in results for name, detail in r[3]]
    if not notes:
        notes = ["no Int/Z separation witness within this bound"]
    return VerificationReport(
        "int-vs-z", F.key, f"max_order={max_order} groups={len(entries)}",
        cases, [], skips, notes, elapsed=time.time() - t0)


# ---------------------------------------------------------------------------
# suite dispatch and mutation registry


SUITE_DEFAULT_MAX_ORDER = {
    "baer": 48,
    "theorem-a": 48,
    "theorem-b": 48,
    "theorem-c": 32,
    "t51": 60,
    "t54": 24,
    "t59": 48,
    "t510": 48,
    "example-513": 0,
    "boundary": 60,
}

_FORMATION_SUITES = {"theorem-a", "theorem-c", "boundary"}


def run_suite(name: str, *, formation: Formation | None = None,
              catalog=None, max_order: int | None = None,
              seed: int = DEFAULT_SEED, sample: int = DEFAULT_SAMPLE,
              budgets: Budgets = DEFAULT_BUDGETS, jobs: int = 1,
              _mutation: str | None = None) -> VerificationReport:
    """Run one verification suite by name with uniform argument handling."""
    if name not in SUITE_DEFAULT_MAX_ORDER:
        raise ValueError(f"unknown suite {name!r}")
    if name in _FORMATION_SUITES and formation is None:
        raise ValueError(f"suite {name} needs a formation")
    bound = max_order if max_order is not None else SUITE_DEFAULT_MAX_ORDER[name]
    if name == "baer":
        return verify_baer(catalog, bound, budgets=budgets, jobs=jobs,
                           _mutation=_mutation)
    if name == "theorem-a":
        return verify_theorem_a(formation, catalog, bound, budgets=budgets,
                                jobs=jobs, _mutation=_mutation)
    if name == "theorem-b":
        rs = (formation.param,) if formation is not None \
            and formation.tag == "NR" else (1, 2, 3)
        return verify_theorem_b(catalog, bound, rs=rs, budgets=budgets,
                                jobs=jobs, _mutation=_mutation)
    if name == "theorem-c":
        return verify_theorem_c(formation, catalog, bound, seed=seed,
                                sample=sample, budgets=budgets, jobs=jobs,
                                _mutation=_mutation)
    if name == "t51":
        return verify_t51(catalog, bound, budgets=budgets, jobs=jobs,
                          _mutation=_mutation)
    if name == "t54":
        return verify_t54(catalog, bound, budgets=budgets, jobs=jobs,
                          _mutation=_mutation)
    if name == "t59":
        return verify_t59(catalog, bound, budgets=budgets, jobs=jobs,
                          _mutation=_mutation)
    if name == "t510":
        return verify_t510(catalog, bound, budgets=budgets, jobs=jobs,
                           _mutation=_mutation)
    if name == "example-513":
        return verify_example_513(seed=seed, sample=sample, budgets=budgets,
                                  _mutation=_mutation)
    return boundary_scan(formation, catalog, bound, budgets=budgets,
                         _mutation=_mutation)


class MutationCase:
    """One deliberate hypothesis weakening that must flip its suite."""

    __slots__ = ("suite", "mutation", "formation_key", "max_order")

    def __init__(self, suite, mutation, formation_key, max_order):
        self.suite = suite
        self.mutation = mutation
        self.formation_key = formation_key
        self.max_order = max_order

    def run(self, catalog, *, budgets: Budgets = DEFAULT_BUDGETS,
            sample: int = 60) -> VerificationReport:
        F = formation_from_spec(self.formation_key) \
            if self.formation_key else None
        return run_suite(self.suite, formation=F, catalog=catalog,
                         max_order=self.max_order, sample=sample,
                         budgets=budgets, _mutation=self.mutation)

    def __repr__(self):
        extra = f" {self.formation_key}" if self.formation_key else ""
        return f"<MutationCase {self.suite}/{self.mutation}{extra}>"


MUTATION_CASES = (
    MutationCase("baer", "z1-only", None, 16),
    MutationCase("theorem-a", "first-lift-only", "N", 16),
    MutationCase("theorem-b", "first-lift-only", None, 16),
    MutationCase("theorem-c", "int-first-maximal", "N", 24),
    MutationCase("theorem-c", "int-first-maximal", "U", 24),
    MutationCase("theorem-c", "int-first-maximal", "NA", 24),
    MutationCase("theorem-c", "int-first-maximal", "Nr(2)", 24),
    MutationCase("t51", "no-radical-condition", None, 60),
    MutationCase("t54", "ignore-intersection-condition", None, 24),
    MutationCase("t59", "use-supersoluble-int", None, 16),
    MutationCase("t510", "no-center-condition", None, 8),
    MutationCase("example-513", "all-cyclics", None, None),
    MutationCase("boundary", "skip-maximal-check", "N", 16),
)
