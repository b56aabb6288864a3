"""Randomized property suites (1000 examples each)."""

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FORMAL, class_pairs, classes, small
from tadpole.bundles import CompleteIntersection, ProjBundle, csm_smooth_ci
from tadpole.catalog import FAMILIES, instantiate_family
from tadpole.constructible import StratificationTable, csm_of_function, push_stratified
from tadpole.ring import formal, projective_space, specialize_base
from tadpole.specialize import ResolutionDatum, delta_function, specialization_pushforward
from tadpole.verify import check_identity_formal, check_tadpole_numeric, solve_registry

PROPS = settings.get_profile("properties")


@PROPS
@given(class_pairs(3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


@PROPS
@given(classes(unit=True))
def test_inversion_round_trip(a):
    inv = a.invert()
    assert a * inv == a.base.one()
    assert inv.invert() == a


@PROPS
@given(class_pairs(2))
def test_grading(ab):
    a, b = ab
    d = a.base.dimension
    for k in range(d + 1):
        expected = sum((a.degree_component(i) * b.degree_component(k - i) for i in range(k + 1)), a.base.zero())
        assert (a * b).degree_component(k) == expected


P3 = projective_space(3, L=2, S=-1)


@PROPS
@given(classes(FORMAL[3]), classes(FORMAL[3]))
def test_specialize_is_homomorphism(a, b):
    assert specialize_base(a * b, P3) == specialize_base(a, P3) * specialize_base(b, P3)
    assert specialize_base(a + b, P3) == specialize_base(a, P3) + specialize_base(b, P3)


@st.composite
def towers(draw, base=None):
    base = base or draw(st.sampled_from(list(FORMAL.values())))
    rank = draw(st.integers(2, 4))
    summands = [draw(small) * base.gen("L") + draw(small) * base.gen("S") for _ in range(rank)]
    return ProjBundle(base, summands)


@PROPS
@given(st.data())
def test_projection_formula(data):
    P = data.draw(towers())
    alpha = data.draw(classes(P.base))
    beta = data.draw(classes(P.geometry, max_terms=8))
    assert P.push(P.pullback(alpha) * beta) == alpha * P.push(beta)


@PROPS
@given(towers())
def test_push_of_top_relative_power(P):
    assert P.push(P.zeta ** (P.rank - 1)) == P.base.one()
    for j in range(P.rank - 1):
        assert P.push(P.zeta**j) == P.base.zero()


@PROPS
@given(st.data())
def test_fiber_euler_characteristics(data):
    base = data.draw(st.sampled_from(list(FORMAL.values())))
    L = base.gen("L")
    twists = [0, data.draw(small) * L, data.draw(small) * L]
    P = ProjBundle(base, twists)
    shift = lambda k: P.pullback(data.draw(st.integers(0, 6)) * L)  # noqa: E731
    assert csm_smooth_ci(CompleteIntersection(P, [3 * P.zeta + shift(3)])).constant_term() == 0
    assert csm_smooth_ci(CompleteIntersection(P, [2 * P.zeta + shift(2)])).constant_term() == 2
    assert csm_smooth_ci(CompleteIntersection(P, [])).constant_term() == 3


NAMES = ["B", "O", "S"]


@st.composite
def tables(draw):
    rows = []
    for _ in range(draw(st.integers(0, 5))):
        rows.append((draw(st.sampled_from(NAMES)), draw(st.sampled_from(NAMES + [None])), draw(small)))
    return StratificationTable(rows)


W2 = instantiate_family("weierstrass", formal(2)).registry


@PROPS
@given(tables(), tables(), st.integers(-3, 3))
def test_stratified_pushforward_additivity(t1, t2, k):
    f1, f2 = push_stratified(t1), push_stratified(t2)
    assert push_stratified(StratificationTable(tuple(t1) + tuple(t2))) == f1 + f2
    assert csm_of_function(f1 + k * f2, W2) == csm_of_function(f1, W2) + k * csm_of_function(f2, W2)


DATA = {name: instantiate_family(name, formal(1)) for name in FAMILIES}


@PROPS
@given(st.sampled_from(FAMILIES), st.integers(0, 1), st.integers(1, 9))
def test_delta_on_single_component(name, index, m):
    comp = DATA[name].components[index]
    single = ResolutionDatum([comp]).with_multiplicity(comp.name, m)
    assert delta_function(single) == {comp.name: m}
    assert specialization_pushforward(single) == m * push_stratified(comp.table)


def _mutations(sc):
    r = sc.resolution
    for c in r.components:
        yield f"drop {c.name}", r.without(c.name)
        yield f"double {c.name}", r.with_multiplicity(c.name, 2 * c.multiplicity)
    for x in r.intersections:
        yield f"drop {x.name}", r.without(x.name)


@pytest.mark.parametrize("name", FAMILIES)
def test_mutation_sensitivity(name):
    for label, _ in _mutations(DATA[name]):
        verdicts = []
        for d in (1, 2, 3):
            sc = instantiate_family(name, formal(d))
            m = dict(_mutations(sc))[label]
            verdicts.append(check_identity_formal(sc, d, resolution=m).verdict)
        assert "fail" in verdicts, f"{name}: {label} went undetected"
    # and the unmutated data passes
    assert check_identity_formal(name, 3).passed


def test_mutating_pushforward_row_is_detected():
    """Dropping any nonempty stratum from the expected row breaks the numeric check."""
    for name in FAMILIES:
        sc = instantiate_family(name, projective_space(3, L=4, S=1))
        reg = solve_registry(sc)
        for stratum in sc.expected_pushforward:
            if reg.csm(stratum).is_zero():
                continue  # empty over this base
            mutated = {k: v for k, v in sc.expected_pushforward.items() if k != stratum}
            r = check_tadpole_numeric(sc, sc.base, pushforward=mutated)
            assert not r.passed, f"{name}: dropping {stratum} went undetected"
