"""Acceptance suite: one test per shipped correctness criterion.

Each test prints a single PASS line on success (visible with -v or -s),
and runs the criterion at its full stated scope, so this module is the
slowest part of the test suite by design."""

from __future__ import annotations

import oracle
from formlab import (DERIVED_NILPOTENT, MUTATION_CASES, NILPOTENT, SOLUBLE,
                     SUPERSOLUBLE, boundary_scan, is_f_central,
                     nilpotent_length_formation, p_decomposable, verify_baer,
                     verify_example_513, verify_t51, verify_t54, verify_t59,
                     verify_t510, verify_theorem_a, verify_theorem_b,
                     verify_theorem_c)
from formlab.lattice import all_subgroups, chief_series

N2 = nilpotent_length_formation(2)


def _ok(n, text):
    print(f"ACCEPTANCE {n}: PASS  {text}")


def test_criterion_1_baer_hypercentre_equality(catalog):
    rep = verify_baer(catalog, 48)
    assert rep.passed and not rep.skips and rep.cases_run > 0
    _ok(1, f"Int_N = Z_N = hypercentre on {rep.cases_run} groups <= 48")


def test_criterion_2_theorem_c_parts_a_h(catalog):
    total = 0
    for F in (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2):
        rep = verify_theorem_c(F, catalog, 32)
        assert rep.passed and not rep.skips, F.key
        total += rep.cases_run
    _ok(2, f"theorem-c parts (a)-(h) clean for N,U,NA,Nr(2): {total} cases")


def test_criterion_3_theorem_a_and_b_equalities(catalog):
    for F in (NILPOTENT, DERIVED_NILPOTENT, p_decomposable(2),
              p_decomposable(3)):
        rep = verify_theorem_a(F, catalog, 48)
        assert rep.passed and rep.cases_run > 0, F.key
    rep = verify_theorem_b(catalog, 48, rs=(2, 3))
    assert rep.passed and rep.cases_run > 0
    _ok(3, "Int_F = Z_F for N,NA,PDecomp(2),PDecomp(3) <= 48; "
           "Nr(2),Nr(3) on soluble groups <= 48")


def test_criterion_4_boundary_scans(catalog):
    for F in (NILPOTENT, DERIVED_NILPOTENT, p_decomposable(2),
              p_decomposable(3), p_decomposable(5)):
        rep = boundary_scan(F, catalog, 60)
        assert rep.passed, F.key
    rep = boundary_scan(SOLUBLE, catalog, 60)
    assert rep.failures, "expected boundary witnesses for S"
    assert any(f[0] == "A5" for f in rep.failures)
    _ok(4, f"boundary clean for N,NA,PDecomp(p); S yields "
           f"{len(rep.failures)} witness lines, all A5")


def test_criterion_5_wreath_example():
    rep = verify_example_513(sample=500)
    assert rep.passed and rep.cases_run > 0 and not rep.skips
    assert any("sampled subgroups: 500 of 500" in n or
               "of 500" in n for n in rep.notes)
    _ok(5, "order 8232, genz* = 1 = Z_U, 500 sampled products supersoluble")


def test_criterion_6_section5_criteria_suites(catalog):
    t51 = verify_t51(catalog, 60)
    assert t51.passed and t51.cases_run > 0
    t54 = verify_t54(catalog, 24)
    assert t54.passed and t54.cases_run > 0
    t59 = verify_t59(catalog, 48)
    assert t59.passed and t59.cases_run > 0
    t510 = verify_t510(catalog, 48)
    assert t510.passed and t510.cases_run > 0
    _ok(6, "t51 <= 60 (A5 in scope), t54 <= 24, t59 <= 48, t510 <= 48")


def test_criterion_7_oracle_equivalence(catalog):
    lattice_checked = 0
    for entry in catalog:
        if entry.order > 24:
            continue
        G = entry.group()
        ours = sorted(h.members for h in all_subgroups(G).subgroups)
        brute = sorted(oracle.all_subgroups_brute(G))
        assert ours == brute, entry.name
        lattice_checked += 1
    central_checked = 0
    for entry in catalog:
        if entry.order > 48:
            continue
        G = entry.group()
        ser = chief_series(G)
        for K, H in zip(ser, ser[1:]):
            comm = oracle.commutator_subgroup_brute(G, H.members, H.members)
            if not comm <= K.members:
                continue
            for F in (NILPOTENT, SUPERSOLUBLE, DERIVED_NILPOTENT, N2):
                local = is_f_central(F, G, K, H, method="local")
                semi = is_f_central(F, G, K, H, method="semidirect")
                assert local == semi, (entry.name, F.key)
                central_checked += 1
    _ok(7, f"lattice matches brute force on {lattice_checked} groups <= 24; "
           f"{central_checked} centrality agreements <= 48")


def test_criterion_8_mutation_sensitivity(catalog):
    for mc in MUTATION_CASES:
        rep = mc.run(catalog)
        assert not rep.passed, repr(mc)
    _ok(8, f"all {len(MUTATION_CASES)} mutation cases flip their suite")
