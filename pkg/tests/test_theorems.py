"""Tests for the catalog-wide verification suites: honest passes on small
scopes, dispatch validation, determinism across worker counts, and
sensitivity to deliberate hypothesis weakenings."""

from __future__ import annotations

import pytest

from formlab import (MUTATION_CASES, NILPOTENT, SUPERSOLUBLE,
                     formation_from_spec, nilpotent_length_formation,
                     run_suite, search_int_vs_z, verify_baer,
                     verify_example_513, verify_t51, verify_t54, verify_t59,
                     verify_t510, verify_theorem_a, verify_theorem_b,
                     verify_theorem_c)
from formlab.theorems import SUITE_DEFAULT_MAX_ORDER


# ---------------------------------------------------------------------------
# honest passes on small scopes


def test_baer_small_pass(catalog):
    rep = verify_baer(catalog, 16)
    assert rep.passed and rep.cases_run > 0 and not rep.skips


def test_theorem_a_small_pass(catalog):
    rep = verify_theorem_a(NILPOTENT, catalog, 16)
    assert rep.passed and rep.cases_run > 0


def test_theorem_a_witness_mode_records_notes(catalog):
    # non-equality formations report witnesses as notes and still pass
    rep = verify_theorem_a(SUPERSOLUBLE, catalog, 24)
    assert rep.passed
    assert rep.notes


def test_theorem_a_rejects_unsuitable_formation(catalog):
    from formlab import ABELIAN
    with pytest.raises(ValueError):
        verify_theorem_a(ABELIAN, catalog, 16)


def test_theorem_b_small_pass(catalog):
    rep = verify_theorem_b(catalog, 16)
    assert rep.passed and rep.cases_run > 0


def test_theorem_c_small_pass(catalog):
    rep = verify_theorem_c(NILPOTENT, catalog, 16)
    assert rep.passed and rep.cases_run > 0 and not rep.skips


def test_t51_small_pass(catalog):
    rep = verify_t51(catalog, 24)
    assert rep.passed and rep.cases_run > 0


def test_t54_small_pass(catalog):
    rep = verify_t54(catalog, 16)
    assert rep.passed and rep.cases_run > 0


def test_t59_small_pass(catalog):
    rep = verify_t59(catalog, 16)
    assert rep.passed and rep.cases_run > 0


def test_t510_small_pass(catalog):
    rep = verify_t510(catalog, 8)
    assert rep.passed and rep.cases_run > 0


def test_example_513_small_sample():
    rep = verify_example_513(seed=7, sample=5)
    assert rep.passed and rep.cases_run > 0
    assert any("sampled subgroups" in n for n in rep.notes)


def test_int_vs_z_scan_reports_without_judging(catalog):
    rep = search_int_vs_z(SUPERSOLUBLE, catalog, 24)
    assert rep.passed


# ---------------------------------------------------------------------------
# dispatch and validation


def test_run_suite_dispatch_matches_direct_call(catalog):
    direct = verify_baer(catalog, 16)
    routed = run_suite("baer", catalog=catalog, max_order=16)
    assert routed.text_lines() == direct.text_lines()


def test_run_suite_default_bounds_cover_all_suites():
    assert set(SUITE_DEFAULT_MAX_ORDER) == {
        "baer", "theorem-a", "theorem-b", "theorem-c", "t51", "t54", "t59",
        "t510", "example-513", "boundary"}


def test_run_suite_rejects_unknown_suite(catalog):
    with pytest.raises(ValueError):
        run_suite("theorem-z", catalog=catalog)


def test_run_suite_requires_formation_where_needed(catalog):
    for name in ("theorem-a", "theorem-c", "boundary"):
        with pytest.raises(ValueError):
            run_suite(name, catalog=catalog, max_order=8)


def test_run_suite_rejects_foreign_mutations(catalog):
    with pytest.raises(ValueError):
        run_suite("baer", catalog=catalog, max_order=8, _mutation="no-such")
    with pytest.raises(ValueError):
        run_suite("t54", catalog=catalog, max_order=8,
                  _mutation="z1-only")


def test_theorem_b_narrows_to_requested_length(catalog):
    rep = run_suite("theorem-b", formation=nilpotent_length_formation(2),
                    catalog=catalog, max_order=16)
    assert rep.passed
    assert "r=(2,)" in rep.scope or "rs=(2,)" in rep.scope


# ---------------------------------------------------------------------------
# determinism


def test_reports_identical_across_job_counts(catalog):
    for name, F in (("baer", None), ("theorem-c", NILPOTENT)):
        seq = run_suite(name, formation=F, catalog=catalog, max_order=16,
                        jobs=1)
        par = run_suite(name, formation=F, catalog=catalog, max_order=16,
                        jobs=2)
        assert seq.text_lines() == par.text_lines()
        assert seq.records() == par.records()


def test_reports_identical_across_repeat_runs(catalog):
    a = verify_theorem_c(SUPERSOLUBLE, catalog, 16, seed=3, sample=20)
    b = verify_theorem_c(SUPERSOLUBLE, catalog, 16, seed=3, sample=20)
    assert a.text_lines() == b.text_lines()


# ---------------------------------------------------------------------------
# report shape


def test_report_rendering_shapes(catalog):
    rep = verify_baer(catalog, 12)
    lines = rep.text_lines()
    assert lines[0] == "suite=baer formation=N"
    assert lines[1].startswith("scope: ")
    assert lines[2] == "cases run: %d" % rep.cases_run
    assert lines[3] == "status: pass"
    recs = rep.records()
    assert recs[-1]["case"] == "summary" and recs[-1]["status"] == "pass"
    note_recs = [r for r in recs if r["case"] == "note"]
    assert len(note_recs) == len(rep.notes)


def test_mutated_report_carries_witnesses(catalog):
    rep = run_suite("baer", catalog=catalog, max_order=16,
                    _mutation="z1-only")
    assert not rep.passed
    for group, case, expected, observed in rep.failures:
        assert group and case and expected != observed
    recs = rep.records()
    assert any(r["status"] == "fail" for r in recs)
    assert recs[-1]["status"] == "fail"


# ---------------------------------------------------------------------------
# mutation registry shape (the full flip sweep runs in the acceptance tests)


def test_mutation_registry_shape():
    assert len(MUTATION_CASES) == 13
    seen = set()
    for mc in MUTATION_CASES:
        assert mc.suite in SUITE_DEFAULT_MAX_ORDER
        assert mc.mutation
        key = (mc.suite, mc.mutation, mc.formation_key)
        assert key not in seen
        seen.add(key)
        if mc.formation_key is not None:
            formation_from_spec(mc.formation_key)


def test_one_representative_mutation_flips(catalog):
    mc = [m for m in MUTATION_CASES if m.suite == "t59"][0]
    rep = mc.run(catalog)
    assert not rep.passed
