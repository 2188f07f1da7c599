from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superhopf import squsym
from superhopf.combinatorics import dc, dotted_compositions, sp
from superhopf.kernel import LinComb
from superhopf.oracle import (
    NotQuasisymmetricError,
    SuperPolynomial,
    TooFewVariablesError,
    act_d,
    expand_M,
    expand_m,
    extract_M,
    extract_M_tensor,
    mul,
    power_sum,
    theta_normalize,
)

N = 4
COMPS = [a for s in range(1, 5) for m in range(s + 1) for a in dotted_compositions(s - m, m) if len(a) <= N]
composition = st.sampled_from(COMPS)


def mono(thetas, exps, c=1, n=N):
    return SuperPolynomial.monomial(n, thetas, exps, c)


def test_theta_normalize():
    assert theta_normalize((2, 0, 1)) == (1, (0, 1, 2))
    assert theta_normalize((1, 0)) == (-1, (0, 1))
    assert theta_normalize((1, 1)) is None


def test_thetas_anticommute():
    t0, t1 = mono([0], [0] * N), mono([1], [0] * N)
    assert t0 * t1 == (t1 * t0).scale(-1)
    assert t0 * t0 == SuperPolynomial(N)
    x = mono([], [1, 0, 0, 0])
    assert x * t0 == t0 * x


def test_expand_small():
    assert expand_M(dc("0."), 2) == mono([0], [0, 0], n=2) + mono([1], [0, 0], n=2)
    assert expand_M(dc("1,1"), 2) == mono([], [1, 1], n=2)
    with pytest.raises(TooFewVariablesError):
        expand_M(dc("1,1,1"), 2)
    with pytest.raises(TooFewVariablesError):
        expand_m(sp("1;1,1"), 2)


def test_power_sums_are_monomials():
    assert power_sum(2, 3) == expand_m(sp(";2"), 3)
    assert power_sum(2, 3, fermionic=True) == expand_m(sp("2;"), 3)


def test_d_examples():
    # d(x1^2) = 2 theta1 x1
    assert act_d(mono([], [2, 0, 0, 0])) == mono([0], [1, 0, 0, 0], 2)
    # theta1 x1 is killed: the only derivative lands on a used theta
    assert not act_d(mono([0], [1, 0, 0, 0]))
    # d squares to zero
    p = expand_M(dc("2,1.,1"), N)
    assert not act_d(act_d(p))


@given(composition, composition)
@settings(max_examples=50)
def test_d_is_odd_derivation(a, b):
    pa, pb = expand_M(a, N), expand_M(b, N)
    sign = -1 if a.m % 2 else 1
    assert act_d(mul(pa, pb)) == act_d(pa) * pb + (pa * act_d(pb)).scale(sign)


@given(composition)
def test_extract_roundtrip(alpha):
    assert extract_M(expand_M(alpha, N)) == LinComb({alpha: 1})


def test_extract_linear_combination():
    f = LinComb({dc("2.,1"): 3, dc("1,1"): Fraction(-1, 2), dc("0."): 1})
    p = SuperPolynomial(N)
    for alpha, c in f.items():
        p = p + expand_M(alpha, N).scale(c)
    assert extract_M(p) == f


def test_not_quasisymmetric():
    with pytest.raises(NotQuasisymmetricError):
        extract_M(mono([], [1, 0, 0, 0]))
    with pytest.raises(NotQuasisymmetricError):
        extract_M_tensor(mono([], [1, 0, 0, 0]), 2)


@given(composition, composition)
@settings(max_examples=50)
def test_product_matches_rule(a, b):
    if a.n + a.m + b.n + b.m > 5:
        return
    n = 6
    got = extract_M(mul(expand_M(a, n), expand_M(b, n)))
    want = {k: v for k, v in squsym.mul_M(a, b).items() if len(k) <= n}
    assert got == LinComb(want)


@given(composition)
@settings(max_examples=40)
def test_coproduct_matches_rule(alpha):
    # f(x, y): substitute an ordered pair of alphabets
    nx = ny = len(alpha)
    p = expand_M(alpha, nx + ny)
    assert extract_M_tensor(p, nx) == squsym.comul_M(alpha)
