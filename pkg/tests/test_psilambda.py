from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from inertialk.errors import FieldTooSmall, NotLineElement
from inertialk.psilambda import (canonical_rep, enumerate_line_reps, euler_class_k, gamma_series,
                                 is_line_element, lambda_op, lambda_series, psi_apply, psi_ring_check,
                                 same_orbit, translation_check)
from inertialk.scalg import alg_inv
from inertialk.wps import build_virtual_k
from inertialk.wps.lines import named_line

K2 = build_virtual_k(2)
K3 = build_virtual_k(3)
K33 = build_virtual_k(3, 3)
R2, R3 = K2.psi_ring, K3.psi_ring


def elems(K):
    frac = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    return st.lists(frac, min_size=K.alg.rank, max_size=K.alg.rank).map(K.alg.elem)


def test_psi2_twisted_generator():
    y = K2.y
    assert psi_apply(R2, 2, y(1, 0)) == y(1, 0) + y(1, 1)


def test_psi_zero_is_augmentation():
    y = K2.y
    assert psi_apply(R2, 0, y(0, 2)) == K2.alg.unit
    assert psi_apply(R2, 0, y(1, 1)).is_zero()


def test_bott_class_p13():
    y = K3.y
    assert K3.bott_class(2, 3) == y(2, 0) + y(2, 1) + y(2, 2) == K3.delta(2)
    assert K3.bott_class(0, 5) == K3.alg.unit


def test_dual_of_twisted_generator():
    assert R2.dual(K2.y(1, 0)) == -K2.y(1, 1)


@pytest.mark.parametrize("R", [R2, R3], ids=["n=2", "n=3"])
def test_dual_involution_on_basis(R):
    for b in R.alg.basis_elems():
        assert R.dual(R.dual(b)) == b


@pytest.mark.parametrize("R", [R2, R3], ids=["n=2", "n=3"])
def test_psi_ring_check(R):
    rep = psi_ring_check(R, 6)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("R", [R2, R3], ids=["n=2", "n=3"])
def test_translation_group(R):
    rep = translation_check(R, k_max=6)
    assert rep.ok, rep.failures()


def test_lambda_of_unit_and_line():
    s = lambda_series(R2, K2.alg.unit, 5)
    assert s[1] == K2.alg.unit and all(s[i].is_zero() for i in range(2, 6))
    L = K2.y(0, 1)
    s = lambda_series(R2, L, 5)
    assert s[1] == L and all(s[i].is_zero() for i in range(2, 6))
    assert lambda_op(R2, 0, L) == K2.alg.unit


def test_lambda2_of_twice_line():
    # lambda^2(2L) = L^2 for a line element L
    L = K2.y(0, 1)
    assert lambda_op(R2, 2, L * 2) == L * L


def test_gamma_of_line_minus_one():
    # gamma_t(L - 1) = 1 + (L - 1) t for a line element
    L = K2.y(0, 1)
    g = gamma_series(R2, L - K2.alg.unit, 4)
    assert g[1] == L - K2.alg.unit and all(g[i].is_zero() for i in range(2, 5))


def test_named_lines_are_lines():
    h = Fraction(1, 2)
    for fam in ("rho0", "rho1", "rho+", "rho-"):
        for params in [(0, 0), (1, -2), (h, -h)]:
            assert is_line_element(R2, named_line(K2, fam, params))
    assert not is_line_element(R2, K2.y(1, 0))
    assert not is_line_element(R2, K2.y(0, 1) * 2)


def test_canonical_rep_rho_plus():
    q = Fraction(1, 4)
    for params in [(0, 0), (1, -2)]:
        c = canonical_rep(R2, named_line(K2, "rho+", params))
        assert c == named_line(K2, "rho+", (-q, -q))
        assert c ** 2 == K2.alg.unit
    y = K2.y
    assert named_line(K2, "rho+", (-q, -q)) == y(0, 0) * Fraction(3, 4) + y(0, 1) / 2 - y(0, 2) / 4 \
        + y(1, 0) / 4 - y(1, 1) / 4
    with pytest.raises(NotLineElement):
        canonical_rep(R2, K2.y(1, 0))


def test_enumeration_p12():
    reps = enumerate_line_reps(R2)
    assert len(reps) == 4
    assert all(L ** 2 == K2.alg.unit for L in reps)
    for fam in ("rho0", "rho1", "rho+", "rho-"):
        assert sum(same_orbit(R2, L, named_line(K2, fam)) for L in reps) == 1


def test_enumeration_p13_needs_conductor_3():
    with pytest.raises(FieldTooSmall) as exc:
        enumerate_line_reps(R3)
    assert exc.value.required == 3


def test_enumeration_bound_below_n_is_not_enough_to_lose_orbits():
    # with psi^l checked only for l <= n-1 the count can only grow
    assert len(enumerate_line_reps(R2, 2, bound=1)) >= 4


def test_euler_class_of_rho1():
    L = named_line(K2, "rho1")
    assert euler_class_k(R2, L, 1) == K2.alg.unit - R2.dual(L)
    assert R2.dual(L) == alg_inv(L)


def test_euler_class_multiplicative():
    a, b = named_line(K2, "rho1"), named_line(K2, "rho+")
    assert euler_class_k(R2, a + b, 2) == euler_class_k(R2, a, 1) * euler_class_k(R2, b, 1)


# randomized psi-ring and lambda-ring laws ------------------------------------

@given(elems(K2), elems(K2), st.integers(1, 8))
def test_psi_multiplicative_random(x, y, k):
    assert psi_apply(R2, k, x * y) == psi_apply(R2, k, x) * psi_apply(R2, k, y)
    assert psi_apply(R2, k, x + y) == psi_apply(R2, k, x) + psi_apply(R2, k, y)


@given(elems(K3), st.integers(1, 4), st.integers(1, 4))
def test_psi_composition_random(x, k, l):
    assert psi_apply(R3, k, psi_apply(R3, l, x)) == psi_apply(R3, k * l, x)


@given(elems(K2), elems(K2))
def test_dual_is_ring_involution(x, y):
    d = R2.dual
    assert d(x * y) == d(x) * d(y)
    assert d(d(x)) == x


@given(elems(K2), elems(K2))
def test_lambda_additive(x, y):
    T = 4
    sx, sy, sxy = lambda_series(R2, x, T), lambda_series(R2, y, T), lambda_series(R2, x + y, T)
    assert sx * sy == sxy


@given(elems(K2), st.fractions(min_value=-2, max_value=2, max_denominator=3),
       st.fractions(min_value=-2, max_value=2, max_denominator=3))
def test_translation_preserves_lines(x, a, b):
    L = named_line(K2, "rho-")
    j = K2.delta(0) * a + K2.delta(1) * b
    assert is_line_element(R2, L + j)
    assert L * j == j
