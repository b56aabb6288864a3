import json

import pytest

from tadpole.bundles import euler_char_ci
from tadpole.catalog import FAMILIES, instantiate_family
from tadpole.errors import UnsupportedGeometryError
from tadpole.ring import formal, projective_space
from tadpole.verify import (
    check_identity_formal,
    check_tadpole_numeric,
    cross_check_modes,
    euler_characteristic,
    solve_registry,
)


def test_formal_pass_report():
    r = check_identity_formal("weierstrass", 3)
    assert r.passed and r.mode == "formal"
    assert [row.k for row in r.degrees] == [0, 1, 2, 3]
    assert all(row.diff == "0" for row in r.degrees)
    data = json.loads(r.to_json())
    assert set(data) >= {"family", "base", "mode", "degrees", "verdict"}
    assert "| k | lhs | rhs | diff |" in r.to_markdown()


def test_e6_formal():
    assert check_identity_formal("e6", 2).passed


def test_mutation_dropping_intersection_fails():
    sc = instantiate_family("weierstrass", formal(3))
    r = check_identity_formal(sc, 3, resolution=sc.resolution.without("X"))
    assert r.verdict == "fail"
    assert r.details["difference"] != "0"
    assert any(row.diff != "0" for row in r.degrees)


def test_dimension_cap(monkeypatch):
    with pytest.raises(UnsupportedGeometryError):
        check_identity_formal("weierstrass", 5)
    monkeypatch.setenv("TADPOLE_MAX_DIM", "2")
    with pytest.raises(UnsupportedGeometryError):
        check_identity_formal("weierstrass", 3)


@pytest.mark.parametrize("n,l,chi,formula", [
    (1, 2, 24, "2*chi(O) + chi(D) - chi(S) = 2*4 + 16 - 0 = 24"),
    (2, 3, -540, "2*chi(O) + chi(D) - chi(S) = 2*(-18) + (-504) - 0 = -540"),
    (3, 4, 23328, "2*chi(O) + chi(D) - chi(S) = 2*304 + 25792 - 3072 = 23328"),
])
def test_weierstrass_ledgers(n, l, chi, formula):
    r = check_tadpole_numeric("weierstrass", n, L=l)
    assert r.passed
    assert r.ledger["chi_Y"] == r.ledger["lhs_total"] == r.ledger["rhs_total"] == chi
    assert r.ledger["formula"] == formula


def test_singular_strata_are_solved_not_assumed():
    sc = instantiate_family("weierstrass", projective_space(3, L=4))
    assert sc.registry["D"].is_unknown
    reg = solve_registry(sc)
    assert reg["D"].source == "registered" and reg["Delta"].source == "registered"
    assert reg.csm("S").integrate() == 3072  # S nonempty: D is genuinely singular


def test_published_row_fails_where_it_omits_double_locus():
    assert check_tadpole_numeric("e6", 2, L=3).passed
    r = check_tadpole_numeric("e6", 2, L=3, row="published")
    assert not r.passed and r.ledger["rhs_total"] == -270 and r.ledger["lhs_total"] == -216
    assert check_tadpole_numeric("q7", 2, L=3, S=1, row="published").passed


def test_custom_pushforward():
    r = check_tadpole_numeric("weierstrass", 1, L=2, pushforward={"O": 2, "D": 1})
    assert r.passed  # S is empty over P^1
    assert not check_tadpole_numeric("weierstrass", 2, L=3, pushforward={"D": 1}).passed


def test_cross_check():
    c = cross_check_modes("weierstrass", 1, L=2)
    assert c.passed and c.totals == {"lhs": [24, 24], "rhs": [24, 24]}
    assert cross_check_modes("e6", 2, L=3).passed
    with pytest.raises(UnsupportedGeometryError):
        cross_check_modes("weierstrass", formal(2))


@pytest.mark.parametrize("name", FAMILIES)
def test_non_cy_both_modes(name):
    S = 1 if name == "q7" else None
    assert check_tadpole_numeric(name, 2, L=1, S=S).passed
    assert check_identity_formal(name, 2).passed


def test_euler_characteristic_helper():
    assert euler_characteristic("weierstrass", 2, 3) == -540


def test_gauss_bonnet_rows():
    """Integral of the pushforward equals the alternating sum over table rows."""
    for name, n, l, s in [("weierstrass", 3, 4, None), ("d5", 2, 3, None), ("q7", 3, 2, 1)]:
        sc = instantiate_family(name, projective_space(n, L=l, **({"S": s} if s is not None else {})))
        reg = solve_registry(sc)
        chi = {k: reg.csm(k).integrate() for k in reg}
        for part in (*sc.components, *sc.intersections):
            rows = sum(r.fiber_euler * (chi[r.closed] - (chi[r.removed] if r.removed else 0)) for r in part.table)
            assert rows == euler_char_ci(part.model)
