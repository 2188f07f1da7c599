from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from superhopf.combinatorics import SuperPartition, dc, sp
from superhopf.kernel import (
    LinComb,
    PoleError,
    RationalFunction,
    SingularMatrixError,
    TensorComb,
    fmt_coeff,
    invert_matrix,
    paired,
    parse_coeff,
    rf_limit_infinity,
    rf_limit_zero,
    solve_linear,
    tensor_mul,
    twist,
)
from superhopf.slambda import _mul_multiplicative

ONE = SuperPartition((), ())
PT0 = sp("0;")
P1 = sp(";1")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def T(d):
    return TensorComb(d)


def test_lincomb_drops_zeros_and_compares():
    a = LinComb({dc("1"): 1, dc("2"): 0})
    assert len(a) == 1
    assert a - a == LinComb()
    assert a.scale(0) == LinComb()
    assert a + LinComb({dc("1"): -1}) == LinComb()


def test_homogeneous_parts():
    f = LinComb({dc("1"): 1, dc("0.,1"): 2, dc("1."): 3})
    parts = f.homogeneous_parts()
    assert set(parts) == {(1, 0), (1, 1)}
    assert len(parts[(1, 1)]) == 2


def test_coeff_format():
    assert fmt_coeff(Fraction(-3, 4)) == "-3/4"
    assert fmt_coeff(2) == "2"
    assert parse_coeff("5/10") == Fraction(1, 2)


def test_twisted_product_examples():
    left = T({(ONE, PT0): 1})
    right = T({(PT0, ONE): 1})
    assert tensor_mul(left, right, _mul_multiplicative) == T({(PT0, PT0): -1})
    assert tensor_mul(T({(ONE, P1): 1}), T({(P1, ONE): 1}), _mul_multiplicative) == T({(P1, P1): 1})
    prim = T({(PT0, ONE): 1, (ONE, PT0): 1})
    assert tensor_mul(prim, prim, _mul_multiplicative) == TensorComb()


def test_twist_is_involution():
    t = T({(PT0, sp("1;")): 2, (P1, PT0): -1, (ONE, P1): 3})
    assert twist(twist(t)) == t
    assert twist(T({(PT0, sp("1;")): 1})) == T({(sp("1;"), PT0): -1})


def _delta(a, b):
    return 1 if a == b else 0


def test_paired_conventions():
    s = T({(dc("0."), dc("1")): 1})
    assert paired(_delta, s, s) == 1
    assert paired(_delta, s, s, "twist") == 1  # deg g = 0
    assert paired(_delta, s, s, "diagonal") == -1  # deg f = deg a = 1
    odd = T({(dc("0."), dc("0.")): 1})
    assert paired(_delta, odd, odd) == 1
    assert paired(_delta, odd, odd, "twist") == -1
    even = T({(dc("1"), dc("2")): 1})
    assert paired(_delta, even, even, "twist") == 1
    assert paired(_delta, even, even, "diagonal") == 1
    with pytest.raises(ValueError):
        paired(_delta, s, s, "other")


def test_solve_examples():
    A = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(2)]]
    assert solve_linear(A, [Fraction(1), Fraction(4)]) == [Fraction(-1), Fraction(2)]
    eye = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    assert solve_linear(eye, [Fraction(5), Fraction(-1), Fraction(2)]) == [5, -1, 2]
    with pytest.raises(SingularMatrixError):
        solve_linear([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], [Fraction(1), Fraction(1)])


@settings(max_examples=40, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(rationals, min_size=36, max_size=36), st.lists(rationals, min_size=6, max_size=6))
def test_solve_random(entries, b):
    A = [entries[6 * i:6 * i + 6] for i in range(6)]
    try:
        x = solve_linear(A, b)
    except SingularMatrixError:
        return
    assert [sum(A[i][j] * x[j] for j in range(6)) for i in range(6)] == b


def test_invert_matrix():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = invert_matrix(A)
    assert inv == [[1, -1], [-1, 2]]


def rf(num, den=(1,)):
    return RationalFunction(tuple(Fraction(c) for c in num), tuple(Fraction(c) for c in den))


def test_rational_function_limits():
    r = rf((2, 1), (1, 0, 1))  # (u+2)/(u^2+1)
    assert rf_limit_zero(r) == 2
    assert rf_limit_infinity(r) == 0
    assert rf_limit_infinity(rf((0, 1, 3), (0, -1, 1))) == 3  # (3u^2+u)/(u^2-u)
    with pytest.raises(PoleError):
        rf_limit_zero(rf((1,), (0, 1)))
    with pytest.raises(PoleError):
        rf_limit_infinity(rf((0, 0, 1)))


def test_rational_function_reduces():
    u = RationalFunction.u()
    r = (u * u - 1) / (u - 1)
    assert r == u + 1
    assert r(2) == 3
    assert (u / u).is_constant()


polys = st.lists(st.integers(-5, 5), min_size=1, max_size=4)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_rational_function_field_axioms(a, b, c):
    x, y, z = rf(a), rf(b), rf(c)
    assert (x + y) * z == x * z + y * z
    if y:
        assert (x / y) * y == x
