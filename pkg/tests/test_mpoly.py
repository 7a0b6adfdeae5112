import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcoha.mpoly import MPoly, embed
from qcoha.qlaurent import ONE, Q, ZERO, QLaurent


def x(arity, i):
    return MPoly.variable(arity, i)


def test_zero_prunes():
    p = MPoly(2, {(1, 0): ZERO, (0, 1): ONE})
    assert p.terms == {(0, 1): ONE}


def test_arity_validation():
    with pytest.raises(ValueError):
        MPoly(2, {(1,): ONE})
    with pytest.raises(ValueError):
        MPoly(1, {(-1,): ONE})
    with pytest.raises(ValueError):
        x(2, 0) * x(3, 0)


def test_hand_expansion():
    # (x3 - q x1)(x3 - q x2) over three variables
    f = x(3, 2) - x(3, 0).scale(Q)
    g = x(3, 2) - x(3, 1).scale(Q)
    p = f * g
    assert p.terms == {
        (0, 0, 2): ONE,
        (1, 0, 1): -Q,
        (0, 1, 1): -Q,
        (1, 1, 0): Q * Q,
    }


def test_coefficient_and_sorted_terms():
    p = x(2, 1) + x(2, 0)
    assert p.coefficient((1, 0)) == ONE
    assert p.coefficient((2, 0)) == ZERO
    assert [e for e, _ in p.sorted_terms()] == [(0, 1), (1, 0)]


def test_embed_places_variables():
    p = x(2, 0) * x(2, 1)  # x1 x2
    q = embed(p, 4, (2, 0))
    assert q.terms == {(1, 0, 1, 0): ONE}
    with pytest.raises(ValueError):
        embed(p, 4, (1, 1))
    with pytest.raises(ValueError):
        embed(p, 4, (0, 4))


def test_constant_and_homogeneous():
    c = MPoly.constant(3, QLaurent.const(5))
    assert c.total_degree() == 0
    p = x(3, 0) + x(3, 1) * x(3, 2)
    assert not p.is_homogeneous()
    assert (x(3, 0) * x(3, 1)).is_homogeneous()


exponents = st.tuples(
    st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3)
)
coeffs = st.builds(
    QLaurent,
    st.integers(min_value=-2, max_value=2),
    st.lists(st.integers(min_value=-4, max_value=4), max_size=3),
)
mpolys = st.dictionaries(exponents, coeffs, max_size=8).map(lambda t: MPoly(2, t))


def naive_mul(a, b):
    # independent oracle: accumulate single-term products via repeated add
    out = MPoly.zero(a.arity)
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            key = tuple(u + v for u, v in zip(e1, e2))
            out = out + MPoly(a.arity, {key: c1 * c2})
    return out


@given(mpolys, mpolys)
def test_mul_matches_naive_expansion(a, b):
    assert a * b == naive_mul(a, b)


@given(mpolys, mpolys, mpolys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
