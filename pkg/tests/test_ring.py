from fractions import Fraction

import pytest

from tadpole.errors import BaseMismatchError, IntegrationError, MissingAssignmentError, NonUnitError
from tadpole.ring import (
    arith_mul,
    degree_component,
    formal,
    integrate_top,
    projective_space,
    series_invert,
    specialize_base,
)


def test_product_and_truncation(f3):
    L = f3.gen("L")
    assert arith_mul(1 + 2 * L, 1 + 3 * L) == 1 + 5 * L + 6 * L**2
    f1 = formal(1)
    M = f1.gen("L")
    assert (1 + M) * (1 + M) == 1 + 2 * M
    assert (1 + L) * f3.zero() == f3.zero()


def test_mismatched_bases():
    with pytest.raises(BaseMismatchError):
        formal(2).gen("L") + formal(3).gen("L")


def test_series_invert(f3):
    L = f3.gen("L")
    assert series_invert(f3.one()) == f3.one()
    t = formal(2).gen("c1")
    assert series_invert(1 + t) == 1 - t + t * t
    assert series_invert(1 + 5 * L + 6 * L**2) == 1 - 5 * L + 19 * L**2 - 65 * L**3
    assert (1 + 5 * L + 6 * L**2) * series_invert(1 + 5 * L + 6 * L**2) == f3.one()


def test_non_unit(f3):
    with pytest.raises(NonUnitError):
        (2 + f3.gen("L")).invert()
    with pytest.raises(NonUnitError):
        f3.gen("L").invert()


def test_degree_component(f3):
    L = f3.gen("L")
    a = 1 + 5 * L + 6 * L**2
    assert degree_component(a, 1) == 5 * L
    assert degree_component(a, 3) == f3.zero()
    assert degree_component(f3.zero(), 0) == f3.zero()
    assert sum(a.components(), f3.zero()) == a


def test_integrate(p2):
    H = p2.gen("H")
    assert integrate_top(7 * H**2) == 7
    assert integrate_top(H) == 0
    with pytest.raises(IntegrationError):
        integrate_top(formal(2).gen("L"))


def test_exact_rationals(f3):
    a = f3.gen("L") * Fraction(1, 3)
    assert (3 * a).coefficient({"L": 1}) == 1
    assert isinstance(a.coefficient({"L": 1}), Fraction)


def test_specialize_base():
    f2 = formal(2)
    P = projective_space(2, L=3)
    H = P.gen("H")
    assert specialize_base(f2.gen("c1") * f2.gen("L"), P) == 9 * H**2
    assert specialize_base(1 + f2.gen("c1") + f2.gen("c2"), P) == (1 + H) ** 3
    with pytest.raises(MissingAssignmentError):
        specialize_base(f2.gen("S"), P)


def test_tangent_classes():
    assert projective_space(3).tangent_class().integrate() == 4
    f2 = formal(2)
    assert f2.tangent_class() == 1 + f2.gen("c1") + f2.gen("c2")


def test_line_class_on_projective_space():
    P = projective_space(2, L=3, S=-1)
    assert P.line_class("L") == 3 * P.gen("H")
    assert P.line_class("S") == -P.gen("H")
    with pytest.raises(MissingAssignmentError):
        projective_space(2).line_class("L")


def test_string_form(f3):
    L = f3.gen("L")
    assert str(1 - 5 * L + 19 * L**2) == "1 - 5*L + 19*L^2"
    assert str(f3.zero()) == "0"
