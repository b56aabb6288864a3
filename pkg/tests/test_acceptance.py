"""Acceptance criteria: each test prints one PASS/FAIL line and asserts it."""

import time

import pytest

import test_properties as props
from tadpole.catalog import FAMILIES
from tadpole.verify import check_identity_formal, check_tadpole_numeric, cross_check_modes


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        with capsys.disabled():
            print(f"\n[acceptance {n}] {'PASS' if ok else 'FAIL'}: {text}")
        assert ok, text
    return emit


def test_1_weierstrass_formal(report):
    t = time.perf_counter()
    verdicts = [check_identity_formal("weierstrass", d).passed for d in (1, 2, 3, 4)]
    elapsed = time.perf_counter() - t
    report(1, all(verdicts) and elapsed < 10,
           f"weierstrass formal d=1..4 exact zero difference {verdicts}, {elapsed:.2f}s (< 10s)")


def test_2_table_families_formal(report):
    t = time.perf_counter()
    verdicts = {(f, d): check_identity_formal(f, d).passed
                for f in ("e6", "e7", "e7prime", "d5", "q7") for d in (1, 2, 3)}
    elapsed = time.perf_counter() - t
    failed = [k for k, ok in verdicts.items() if not ok]
    report(2, not failed and elapsed < 60,
           f"e6/e7/e7prime/d5/q7 (q7 with independent L, S) formal d=1..3, failures {failed}, {elapsed:.2f}s (< 60s)")


def _ledger(n, L):
    r = check_tadpole_numeric("weierstrass", n, L=L)
    return r, r.ledger


def test_3_k3(report):
    r, led = _ledger(1, 2)
    ok = r.passed and led["chi_Y"] == 24 and (led["chi_O"], led["chi_D"], led["chi_S"]) == (4, 16, 0)
    report(3, ok, f"P1, L=O(2): chi(Y) = {led['chi_Y']}; {led['formula']}")


def test_4_cy3(report):
    r, led = _ledger(2, 3)
    ok = r.passed and led["chi_Y"] == -540 and (led["chi_O"], led["chi_D"], led["chi_S"]) == (-18, -504, 0)
    report(4, ok, f"P2, L=O(3): chi(Y) = {led['chi_Y']}; {led['formula']}")


def test_5_cy4(report):
    r, led = _ledger(3, 4)
    ok = r.passed and led["lhs_total"] == led["rhs_total"] == 23328 and led["chi_S"] != 0 and 23328 % 24 == 0
    report(5, ok, f"P3, L=O(4): lhs {led['lhs_total']} = rhs {led['rhs_total']}, S nonempty "
                  f"(chi(S) = {led['chi_S']}), chi/24 = {led['lhs_total'] // 24}")


def test_6_non_cy(report):
    results = {}
    for f in FAMILIES:
        S = 1 if f == "q7" else None
        results[f] = (check_tadpole_numeric(f, 2, L=1, S=S).passed, check_identity_formal(f, 2).passed)
    failed = [f for f, v in results.items() if not all(v)]
    report(6, not failed, f"every family over P2 with L=O(1) passes numeric and formal modes; failures {failed}")


PROPERTY_SUITES = [
    ("ring axioms", props.test_ring_axioms),
    ("inversion round-trip", props.test_inversion_round_trip),
    ("projection formula", props.test_projection_formula),
    ("push of zeta^(r-1) = 1", props.test_push_of_top_relative_power),
    ("fiberwise chi (cubic 0, conic 2, P2 3)", props.test_fiber_euler_characteristics),
    ("stratified pushforward additivity", props.test_stratified_pushforward_additivity),
    ("delta on single-component data", props.test_delta_on_single_component),
]


def test_7_property_suites(report):
    failed = []
    for label, suite in PROPERTY_SUITES:
        try:
            suite()
        except AssertionError:
            failed.append(label)
    for f in FAMILIES:
        try:
            props.test_mutation_sensitivity(f)
        except AssertionError:
            failed.append(f"mutation sensitivity ({f})")
    report(7, not failed, f"{len(PROPERTY_SUITES)} randomized suites x 1000 cases + mutation sensitivity; "
                          f"failures {failed}")


def test_8_cross_mode(report):
    failed = []
    for f in FAMILIES:
        for n in (1, 2, 3):
            c = cross_check_modes(f, n, L=n + 1, S=1 if f == "q7" else None)
            if not c.passed:
                failed.append((f, n))
    report(8, not failed, f"formal pipeline specialized to P1..P3 (L = O(n+1)) matches numeric ledgers on both "
                          f"sides for all families; failures {failed}")
