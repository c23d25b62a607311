from fractions import Fraction as F

import pytest

from inertialk.bgfinite import bmu2_closed_forms, bmu2_report, build_bg
from inertialk.psilambda import lambda_series, psi_apply, psi_ring_check
from inertialk.scalg import axiom_report

B = build_bg([2])
V = B.V


def test_basis():
    assert B.alg.rank == 4
    assert [b.display() for b in B.alg.basis] == ["V1^1", "V1^-1", "V-1^1", "V-1^-1"]


def test_convolution():
    assert V(1, 0) * V(1, 0) == V(0, 0)
    assert V(1, 1) * V(0, 1) == V(1, 0)


def test_psi_on_twisted_trivial_character():
    assert psi_apply(B.psi_ring, 2, V(1, 0)) == V(1, 0)


def test_lambda_closed_forms_by_hand():
    one = B.alg.unit
    s = lambda_series(B.psi_ring, V(0, 0), 6)
    assert s.coeffs[:2] == [one, one] and all(c.is_zero() for c in s.coeffs[2:])
    s = lambda_series(B.psi_ring, V(0, 1), 6)
    assert s[1] == V(0, 1) and all(c.is_zero() for c in s.coeffs[2:])
    # t^2/(2(1+t)) (1 - V): coefficients of t^2, t^3 are (1-V)/2 and -(1-V)/2
    s = lambda_series(B.psi_ring, V(1, 0), 6)
    assert s[2] == (one - V(1, 0)) / 2 and s[3] == -(one - V(1, 0)) / 2


def test_closed_forms_through_t6():
    closed = bmu2_closed_forms(B, 6)
    names = {"V1^1": V(0, 0), "V1^-1": V(0, 1), "V-1^1": V(1, 0), "V-1^-1": V(1, 1)}
    for name, x in names.items():
        assert lambda_series(B.psi_ring, x, 6).coeffs == closed[name]


def test_sigma_product():
    sp = (V(0, 0) + V(0, 1) + V(1, 0) - V(1, 1)) / 2
    sm = (V(0, 0) + V(0, 1) - V(1, 0) + V(1, 1)) / 2
    assert sp * sm == V(0, 1)


def test_bmu2_report():
    rep = bmu2_report()
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("orders", [[3], [2, 2], [2, 3]])
def test_other_groups(orders):
    G = build_bg(orders)
    assert axiom_report(G.alg).ok
    assert psi_ring_check(G.psi_ring, 4).ok


def test_bad_orders():
    with pytest.raises(ValueError):
        build_bg([1])
