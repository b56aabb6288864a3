import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tadpole.ring import ChowClass, formal, projective_space

settings.register_profile(
    "properties", max_examples=1000, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)

# formal bases used by the property suites
FORMAL = {d: formal(d) for d in (1, 2, 3)}

small = st.integers(min_value=-5, max_value=5)


@st.composite
def classes(draw, base=None, unit=False, max_terms=6):
    """Random class on ``base`` built from admissible monomials."""
    base = base or draw(st.sampled_from(list(FORMAL.values())))
    n = len(base.symbols)
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(draw(st.integers(0, 2)) for _ in range(n))
        if base.admits(mono) and any(mono):
            terms[mono] = draw(small)
    if unit:
        terms[(0,) * n] = 1
    elif draw(st.booleans()):
        terms[(0,) * n] = draw(small)
    return ChowClass(base, terms)


@st.composite
def class_pairs(draw, k=2, unit=False):
    base = draw(st.sampled_from(list(FORMAL.values())))
    return tuple(draw(classes(base, unit=unit)) for _ in range(k))


@pytest.fixture
def f3():
    return formal(3)


@pytest.fixture
def p2():
    return projective_space(2)
