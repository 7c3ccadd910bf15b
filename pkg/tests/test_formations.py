"""Tests for the formation registry, membership predicates, local
definitions, and the subgroup operators built on them."""

from __future__ import annotations

import random

import pytest

import oracle
from formlab import (ABELIAN, DERIVED_NILPOTENT, NILPOTENT, SOLUBLE,
                     SUPERSOLUBLE, TRIVIAL, TWO_PRIME_SUPERSOLUBLE, Budgets,
                     Subgroup, base_registry, boundary_scan, f_maximal_subgroups,
                     formation_from_spec, fp_membership, genz_star,
                     hall_partition, int_f, is_f_central, is_f_critical,
                     membership, nilpotent_length_formation, p_decomposable,
                     p_nilpotent, p_supersoluble, psi_e, quotient, radical,
                     residual, s_quasinormal_cyclics, standard, z_f)
from formlab.constructions import direct_product
from formlab.lattice import chief_series, frattini_subgroup, normal_subgroups, set_product
from formlab.permcore import sylow_subgroup

W = TWO_PRIME_SUPERSOLUBLE
N2 = nilpotent_length_formation(2)
N3 = nilpotent_length_formation(3)


# ---------------------------------------------------------------------------
# registry and spec parsing


def test_base_registry_keys_and_flags():
    reg = base_registry()
    assert set(reg) == {"N", "S", "U", "A", "NA", "TwoPrimeSuper", "Trivial"}
    for F in reg.values():
        assert F.is_hereditary
    assert not ABELIAN.is_saturated
    for F in (NILPOTENT, SOLUBLE, SUPERSOLUBLE, DERIVED_NILPOTENT, W, TRIVIAL):
        assert F.is_saturated


def test_spec_round_trips_every_key():
    made = list(base_registry().values()) + [
        N2, N3, p_decomposable(2), p_nilpotent(3), p_supersoluble(5),
        hall_partition([[2, 3], [5]]),
    ]
    for F in made:
        back = formation_from_spec(F.key)
        assert back == F and back.param == F.param


def test_spec_accepts_compact_forms():
    assert formation_from_spec("n") == NILPOTENT
    assert formation_from_spec("N2") == N2
    assert formation_from_spec("nr(3)") == N3
    assert formation_from_spec("pdecomp2") == p_decomposable(2)
    assert formation_from_spec("PNilp(3)") == p_nilpotent(3)
    assert formation_from_spec("2super") == W
    assert formation_from_spec("1") == TRIVIAL
    pp = formation_from_spec("PiPart:2,3|5")
    assert pp == hall_partition([[5], [3, 2]])


def test_spec_and_factory_errors():
    for bad in ("NOPE", "", "pipart:", "nr()", "pdecomp"):
        with pytest.raises(ValueError):
            formation_from_spec(bad)
    with pytest.raises(ValueError):
        nilpotent_length_formation(0)
    with pytest.raises(ValueError):
        p_decomposable(4)
    with pytest.raises(ValueError):
        p_nilpotent(1)
    with pytest.raises(ValueError):
        hall_partition([[2], [2, 3]])
    with pytest.raises(ValueError):
        formation_from_spec("pipart:2,3|3")


# ---------------------------------------------------------------------------
# membership: pinned values and oracle sweep


def test_membership_pinned_values(by_name):
    S3, S4, A4 = standard("S", 3), standard("S", 4), standard("A", 4)
    A5, D4, Q8 = standard("A", 5), standard("D", 4), standard("Q8")
    C6, C12 = standard("C", 6), standard("C", 12)
    SL23 = by_name["SL23"].group()
    assert [membership(NILPOTENT, g) for g in (D4, Q8, C12, S3, A4, S4)] == \
        [True, True, True, False, False, False]
    assert [membership(SUPERSOLUBLE, g) for g in (S3, D4, C12, A4, S4, SL23, A5)] == \
        [True, True, True, False, False, False, False]
    assert [membership(SOLUBLE, g) for g in (S4, SL23, A5)] == [True, True, False]
    assert [membership(ABELIAN, g) for g in (C12, S3, Q8)] == [True, False, False]
    # derived subgroup nilpotent: S4' = A4 is not, SL23' = Q8 is
    assert [membership(DERIVED_NILPOTENT, g) for g in (S3, A4, SL23, S4, A5)] == \
        [True, True, True, False, False]
    assert [membership(W, g) for g in (S3, S4, A4, SL23, Q8)] == [True] * 5
    assert not membership(W, A5)
    assert membership(N2, S3) and membership(N2, A4)
    assert not membership(N2, S4) and membership(N3, S4)
    assert not membership(N3, A5)
    assert [membership(p_nilpotent(2), g) for g in (S3, Q8, S4, A4)] == \
        [True, True, False, False]
    assert [membership(p_nilpotent(3), g) for g in (A4, S3, S4)] == \
        [True, False, False]
    assert [membership(p_decomposable(2), g) for g in (C6, D4, S3, A4)] == \
        [True, True, False, False]
    assert [membership(p_decomposable(3), g) for g in (C6, D4, S3, A4)] == \
        [True, True, False, False]
    assert [membership(p_supersoluble(5), g) for g in (S4, standard("D", 5), A5)] == \
        [True, True, False]
    assert membership(TRIVIAL, standard("C", 1))
    assert not membership(TRIVIAL, standard("C", 2))


def test_hall_partition_membership():
    PP = hall_partition([[2, 3], [5]])
    assert membership(PP, standard("C", 30))
    assert membership(PP, direct_product(standard("S", 3), standard("C", 5)))
    # all primes of S4 share one cell, so the condition is vacuous
    assert membership(PP, standard("S", 4))
    assert not membership(PP, standard("A", 5))


def test_two_prime_supersoluble_has_soluble_non_members(catalog):
    # a chief factor of order 9 needs an irreducible action, first possible
    # inside order 36
    bad = [e.name for e in catalog if e.order == 36 and "soluble" in e.tags
           and not membership(W, e.group())]
    assert bad, "expected a soluble group of order 36 outside the class"


def test_membership_matches_oracles_small(catalog):
    for entry in catalog:
        if entry.order > 24:
            continue
        G = entry.group()
        assert membership(SOLUBLE, G) == oracle.is_soluble_brute(G)
        assert membership(NILPOTENT, G) == oracle.is_nilpotent_brute(G)
        assert membership(ABELIAN, G) == oracle.is_abelian_brute(G)
        assert membership(SUPERSOLUBLE, G) == oracle.is_supersoluble_brute(G)


def test_membership_accepts_subgroup_views():
    S4 = standard("S", 4)
    ser = chief_series(S4)
    assert membership(NILPOTENT, ser[1])
    assert not membership(NILPOTENT, ser[2])
    assert membership(DERIVED_NILPOTENT, ser[2])


# ---------------------------------------------------------------------------
# canonical local definitions


def test_fp_pinned_values():
    S3, S4, D4 = standard("S", 3), standard("S", 4), standard("D", 4)
    A5, C6 = standard("A", 5), standard("C", 6)
    assert not fp_membership(N2, 2, S3)
    assert fp_membership(N2, 3, S3)
    assert fp_membership(SUPERSOLUBLE, 3, S3)
    assert not fp_membership(SUPERSOLUBLE, 2, S3)
    assert fp_membership(SUPERSOLUBLE, 2, D4)
    assert fp_membership(W, 3, S3)
    assert not fp_membership(W, 3, S4)
    assert not fp_membership(W, 2, A5)
    assert fp_membership(W, 2, S4)
    assert not fp_membership(DERIVED_NILPOTENT, 2, S4)
    assert fp_membership(DERIVED_NILPOTENT, 2, D4)
    assert fp_membership(NILPOTENT, 2, D4)
    assert not fp_membership(NILPOTENT, 2, S3)
    assert fp_membership(SOLUBLE, 2, S4)
    assert not fp_membership(SOLUBLE, 2, A5)
    assert fp_membership(p_decomposable(2), 2, D4)
    assert not fp_membership(p_decomposable(2), 2, S3)
    assert fp_membership(p_decomposable(2), 3, standard("C", 3))
    assert not fp_membership(p_decomposable(2), 3, C6)
    assert fp_membership(p_nilpotent(3), 3, standard("C", 9))
    assert not fp_membership(p_nilpotent(3), 3, C6)
    assert not fp_membership(p_nilpotent(3), 2, S3)
    assert fp_membership(p_nilpotent(3), 2, standard("A", 4))
    assert fp_membership(p_supersoluble(5), 5, standard("C", 4))
    assert not fp_membership(p_supersoluble(5), 5, standard("C", 8))
    PP = hall_partition([[2, 3], [5]])
    assert fp_membership(PP, 2, C6)
    assert not fp_membership(PP, 2, standard("C", 10))
    assert fp_membership(PP, 5, standard("C", 5))
    # unlisted primes sit in singleton cells
    assert fp_membership(PP, 7, standard("C", 7))
    assert not fp_membership(PP, 7, standard("C", 14))


def test_fp_rejects_unsupported_formations():
    S3 = standard("S", 3)
    with pytest.raises(ValueError):
        fp_membership(ABELIAN, 2, S3)
    with pytest.raises(ValueError):
        fp_membership(TRIVIAL, 2, S3)


def _o_p(G, p):
    best = None
    for N in normal_subgroups(G):
        n = N.order
        while n % p == 0:
            n //= p
        if n == 1 and (best is None or N.order > best.order):
            best = N
    return best


def test_fp_is_full(catalog):
    # membership in F(p) only depends on the quotient by the p-core
    rng = random.Random(41)
    entries = [e for e in catalog if e.order <= 24]
    formations = (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2, W)
    for entry in rng.sample(entries, 16):
        G = entry.group()
        for p in (2, 3):
            Q = quotient(G, _o_p(G, p)).group
            for F in formations:
                assert fp_membership(F, p, G) == fp_membership(F, p, Q)


def test_fp_implies_membership(catalog):
    # every canonical local class sits inside its formation
    rng = random.Random(43)
    entries = [e for e in catalog if e.order <= 24]
    formations = (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2, W,
                  p_decomposable(2), p_nilpotent(3))
    for entry in rng.sample(entries, 20):
        G = entry.group()
        for p in (2, 3, 5):
            for F in formations:
                if fp_membership(F, p, G):
                    assert membership(F, G)


# ---------------------------------------------------------------------------
# residuals


def test_residual_pinned_values():
    S3, S4, A4 = standard("S", 3), standard("S", 4), standard("A", 4)
    assert residual(NILPOTENT, S3).order == 3
    assert residual(NILPOTENT, S4).order == 12
    assert residual(SUPERSOLUBLE, S4).order == 4
    assert residual(SUPERSOLUBLE, A4).order == 4
    assert residual(ABELIAN, S4).order == 12
    assert residual(ABELIAN, standard("Q8")).order == 2
    assert residual(SOLUBLE, standard("A", 5)).order == 60
    assert residual(TRIVIAL, S4).order == 24
    assert residual(NILPOTENT, standard("C", 12)).order == 1


def test_residual_is_minimal(catalog):
    rng = random.Random(47)
    entries = [e for e in catalog if e.order <= 24]
    for entry in rng.sample(entries, 12):
        G = entry.group()
        for F in (NILPOTENT, SUPERSOLUBLE, ABELIAN):
            R = residual(F, G)
            assert membership(F, quotient(G, R).group)
            for N in normal_subgroups(G):
                if membership(F, quotient(G, N).group):
                    assert R.members <= N.members


# ---------------------------------------------------------------------------
# F-maximal subgroups, Int_F, Z_F


def test_f_maximal_pinned_values():
    S3, S4 = standard("S", 3), standard("S", 4)
    assert sorted(h.order for h in f_maximal_subgroups(NILPOTENT, S3)) == [2, 2, 2, 3]
    assert sorted(h.order for h in f_maximal_subgroups(SUPERSOLUBLE, S4)) == \
        [6, 6, 6, 6, 8, 8, 8]
    assert sorted(h.order for h in f_maximal_subgroups(DERIVED_NILPOTENT, S4)) == \
        [6, 6, 6, 6, 8, 8, 8, 12]
    # a member group is its own unique F-maximal subgroup
    ms = f_maximal_subgroups(NILPOTENT, standard("D", 4))
    assert [h.order for h in ms] == [8]


def test_f_maximal_members_are_maximal_members():
    S4 = standard("S", 4)
    for F in (NILPOTENT, SUPERSOLUBLE):
        ms = f_maximal_subgroups(F, S4)
        keys = {h.members for h in ms}
        for h in ms:
            assert membership(F, h)
            for other in ms:
                if other.members != h.members:
                    assert not h.members < other.members
        assert len(keys) == len(ms)


def test_int_pinned_values():
    S4, D4, A4 = standard("S", 4), standard("D", 4), standard("A", 4)
    assert int_f(NILPOTENT, S4).order == 1
    assert int_f(SUPERSOLUBLE, S4).order == 1
    assert int_f(DERIVED_NILPOTENT, S4).order == 1
    assert int_f(NILPOTENT, D4).order == 8
    assert int_f(SUPERSOLUBLE, A4).order == 1
    assert int_f(W, A4).order == 12


def test_z_pinned_values():
    S3, S4, D4 = standard("S", 3), standard("S", 4), standard("D", 4)
    assert z_f(NILPOTENT, S3).order == 1
    assert z_f(NILPOTENT, S4).order == 1
    assert z_f(NILPOTENT, D4).order == 8
    assert z_f(SUPERSOLUBLE, S4).order == 1
    assert z_f(SUPERSOLUBLE, S3).order == 6
    assert z_f(SUPERSOLUBLE, standard("A", 4)).order == 1
    assert z_f(ABELIAN, S3).order == 1
    assert z_f(ABELIAN, standard("C", 6)).order == 6
    assert z_f(TRIVIAL, S4).order == 1


def test_int_is_normal_and_contains_z(catalog):
    rng = random.Random(53)
    entries = [e for e in catalog if e.order <= 24]
    for entry in rng.sample(entries, 10):
        G = entry.group()
        for F in (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2):
            I = int_f(F, G)
            assert I.is_normal()
            assert z_f(F, G).members <= I.members


# ---------------------------------------------------------------------------
# chief factor centrality


def test_central_prime_factor_of_s3():
    S3 = standard("S", 3)
    ser = chief_series(S3)
    K, H = ser[0], ser[1]
    assert is_f_central(SUPERSOLUBLE, S3, K, H, method="local")
    assert is_f_central(SUPERSOLUBLE, S3, K, H, method="semidirect")
    assert not is_f_central(NILPOTENT, S3, K, H, method="local")
    assert not is_f_central(NILPOTENT, S3, K, H, method="semidirect")
    assert not is_f_central(ABELIAN, S3, K, H, method="semidirect")


def test_central_local_needs_saturation():
    S3 = standard("S", 3)
    ser = chief_series(S3)
    with pytest.raises(ValueError):
        is_f_central(ABELIAN, S3, ser[0], ser[1], method="local")


def test_central_rejects_non_chief_pair():
    S4 = standard("S", 4)
    ser = chief_series(S4)
    # V4 sits strictly between the trivial group and A4
    with pytest.raises(ValueError):
        is_f_central(NILPOTENT, S4, ser[0], ser[2])


def test_central_methods_agree_on_abelian_factors(catalog):
    rng = random.Random(59)
    entries = [e for e in catalog if e.order <= 32]
    formations = (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2)
    for entry in rng.sample(entries, 12):
        G = entry.group()
        ser = chief_series(G)
        for K, H in zip(ser, ser[1:]):
            comm = oracle.commutator_subgroup_brute(G, H.members, H.members)
            if not comm <= K.members:
                continue
            for F in formations:
                local = is_f_central(F, G, K, H, method="local")
                semi = is_f_central(F, G, K, H, method="semidirect")
                assert local == semi, (entry.name, F.key, H.order, K.order)


def test_prime_order_factors_are_u_central(catalog):
    rng = random.Random(61)
    entries = [e for e in catalog if e.order <= 48]
    for entry in rng.sample(entries, 12):
        G = entry.group()
        ser = chief_series(G)
        for K, H in zip(ser, ser[1:]):
            if oracle._is_prime(H.order // K.order):
                assert is_f_central(SUPERSOLUBLE, G, K, H, method="semidirect")


# ---------------------------------------------------------------------------
# closure properties of the classes themselves


def test_hereditary_closure_spot(catalog):
    rng = random.Random(67)
    entries = [e for e in catalog if e.order <= 24]
    formations = (NILPOTENT, SUPERSOLUBLE, ABELIAN, DERIVED_NILPOTENT, W, N2)
    for entry in rng.sample(entries, 10):
        G = entry.group()
        members = [F for F in formations if membership(F, G)]
        if not members:
            continue
        from formlab.lattice import all_subgroups
        for H in all_subgroups(G).subgroups:
            for F in members:
                assert membership(F, H)


def test_quotient_closure_spot(catalog):
    rng = random.Random(71)
    entries = [e for e in catalog if e.order <= 24]
    formations = (NILPOTENT, SUPERSOLUBLE, ABELIAN, DERIVED_NILPOTENT, W, N2,
                  p_nilpotent(2), p_decomposable(2))
    for entry in rng.sample(entries, 10):
        G = entry.group()
        members = [F for F in formations if membership(F, G)]
        if not members:
            continue
        for N in normal_subgroups(G):
            Q = quotient(G, N).group
            for F in members:
                assert membership(F, Q)


def test_saturation_spot(catalog):
    # saturated classes contain G whenever they contain G modulo Frattini
    rng = random.Random(73)
    entries = [e for e in catalog if e.order <= 48]
    formations = (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2, W,
                  p_nilpotent(2), p_decomposable(2))
    for entry in rng.sample(entries, 14):
        G = entry.group()
        phi = frattini_subgroup(G)
        Q = quotient(G, phi).group
        for F in formations:
            if membership(F, Q):
                assert membership(F, G), (entry.name, F.key)


# ---------------------------------------------------------------------------
# F-critical groups and the boundary scan


def test_critical_pinned_values():
    assert is_f_critical(NILPOTENT, standard("S", 3))
    assert is_f_critical(NILPOTENT, standard("A", 4))
    assert not is_f_critical(NILPOTENT, standard("S", 4))
    assert not is_f_critical(NILPOTENT, standard("Q8"))
    assert is_f_critical(SUPERSOLUBLE, standard("A", 4))
    assert is_f_critical(SOLUBLE, standard("A", 5))


def test_boundary_scan_nilpotent_clean(catalog):
    rep = boundary_scan(NILPOTENT, catalog, 24)
    assert rep.passed and rep.cases_run > 0


def test_boundary_scan_soluble_flags_a5(catalog):
    rep = boundary_scan(SOLUBLE, catalog, 60)
    assert not rep.passed
    assert all(f[0] == "A5" for f in rep.failures)
    assert len(rep.failures) >= 1


def test_boundary_scan_trivial_notes_empty_support(catalog):
    rep = boundary_scan(TRIVIAL, catalog, 24)
    assert rep.passed and rep.cases_run == 0
    assert any("empty prime support" in n for n in rep.notes)


def test_boundary_scan_rejects_bad_input(catalog):
    with pytest.raises(ValueError):
        boundary_scan(ABELIAN, catalog, 24)
    with pytest.raises(ValueError):
        boundary_scan(NILPOTENT, catalog, 24, _mutation="bogus")


# ---------------------------------------------------------------------------
# psi_e, radical, S-quasinormal cyclics, genz*


def test_psi_e_pinned_values():
    for fam, n, want in (("S", 4, 24), ("S", 3, 6), ("C", 8, 4), ("C", 9, 3)):
        G = standard(fam, n)
        assert psi_e(G, G.full_subgroup()).order == want
    Q8 = standard("Q8")
    assert psi_e(Q8, Q8.full_subgroup()).order == 8


def test_psi_e_matches_closure_oracle(catalog):
    rng = random.Random(79)
    entries = [e for e in catalog if e.order <= 24]
    for entry in rng.sample(entries, 10):
        G = entry.group()
        for N in chief_series(G):
            seed = [g for g in N.sorted_members
                    if oracle._is_prime(G.element_order(g))
                    or G.element_order(g) == 4]
            assert psi_e(G, N).members == oracle.closure_set(G, seed)


def test_psi_e_rejects_foreign_subgroup():
    S4, S3 = standard("S", 4), standard("S", 3)
    with pytest.raises(ValueError):
        psi_e(S4, S3.full_subgroup())


def test_radical_pinned_values():
    assert radical(standard("S", 4)).order == 24
    assert radical(standard("S", 3)).order == 6
    assert radical(standard("A", 5)).order == 1


def test_radical_of_subgroup_view():
    S4 = standard("S", 4)
    A4 = chief_series(S4)[2]
    rad = radical(A4)
    assert rad.parent is S4 and rad.order == 12


def test_radical_contains_every_soluble_normal(catalog):
    rng = random.Random(83)
    entries = [e for e in catalog if e.order <= 24]
    picks = rng.sample(entries, 10) + [e for e in catalog if e.name == "A5"]
    for entry in picks:
        G = entry.group()
        rad = radical(G)
        for N in normal_subgroups(G):
            if membership(SOLUBLE, N):
                assert N.members <= rad.members


def test_s_quasinormal_cyclics_pinned_values():
    assert [h.order for h in s_quasinormal_cyclics(standard("S", 4))] == [1]
    assert sorted(h.order for h in s_quasinormal_cyclics(standard("Q8"))) == \
        [1, 2, 4, 4, 4]
    assert sorted(h.order for h in s_quasinormal_cyclics(standard("C", 6))) == \
        [1, 2, 3, 6]


def test_s_quasinormal_cyclics_permute_with_sylows(catalog):
    rng = random.Random(89)
    entries = [e for e in catalog if e.order <= 16]
    for entry in rng.sample(entries, 8):
        G = entry.group()
        for C in s_quasinormal_cyclics(G):
            for p in oracle_primes(G.order):
                P = sylow_subgroup(G, p)
                prod = set_product(G, C, P)
                inter = C.members & P.members
                assert len(prod) * len(inter) == C.order * P.order


def oracle_primes(n):
    return [p for p in range(2, n + 1) if oracle._is_prime(p) and n % p == 0]


def test_genz_star_pinned_values():
    assert genz_star(standard("S", 4)).order == 1
    assert genz_star(standard("A", 4)).order == 1
    assert genz_star(standard("A", 5)).order == 1
    assert genz_star(standard("D", 4)).order == 8
    assert genz_star(standard("C", 12)).order == 12
    assert genz_star(standard("S", 4), _mutation="all-cyclics").order == 24


def test_genz_star_is_whole_group_for_abelian(catalog):
    for entry in catalog:
        if entry.order <= 16 and "abelian" in entry.tags:
            G = entry.group()
            assert genz_star(G).order == G.order
