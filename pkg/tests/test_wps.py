from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from inertialk.cyclofield import CycNum
from inertialk.errors import FieldTooSmall, UnknownFamily, UnsupportedWeight
from inertialk.psilambda import psi_apply, same_orbit
from inertialk.scalg import alg_inv
from inertialk.wps import build_virtual_k, periodicity_check, untwisted_power
from inertialk.wps.chow import (build_chern_data, chern_character, chern_class, chern_report, chern_series,
                                gamma_consistency)
from inertialk.wps.lines import named_line, p13_named_lines, rho_table_report
from inertialk.wps.presentation import exotic_lattice_check, presentation_check

from oracles import untwisted_reduce, chi

K2, K3 = build_virtual_k(2), build_virtual_k(3)
K33 = build_virtual_k(3, 3)
CD2, CD3 = build_chern_data(K2), build_chern_data(K3)


def test_ranks():
    assert K2.alg.rank == 5 and K3.alg.rank == 10
    assert build_virtual_k(5).alg.rank == 26


def test_bad_weight():
    with pytest.raises(UnsupportedWeight):
        build_virtual_k(1)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("e", [-3, -1, 0, 4, 7])
def test_untwisted_power_matches_oracle(n, e):
    assert list(untwisted_power(n, e)) == untwisted_reduce(chi ** e, n)


# periodicity -----------------------------------------------------------------

@pytest.mark.parametrize("K", [K2, K3], ids=["n=2", "n=3"])
def test_periodicity_all_a_k_le_3(K):
    for k in range(4):
        for a in range(K.n):
            rep = periodicity_check(K, k, a)
            assert rep.ok, rep.failures()


def test_periodicity_small_case_by_hand():
    y = K2.y
    # psi^2(y0^1) = y0^2 and the closed form gives aug + Delta_0 * phi0 with the corrected sign
    assert psi_apply(K2.psi_ring, 2, y(0, 1)) == y(0, 2)
    assert K2.psi_periodic(2, y(0, 1)) == y(0, 0) - (y(0, 0) - y(0, 2))


@pytest.mark.parametrize("K", [K2, K3], ids=["n=2", "n=3"])
def test_periodicity_with_plus_delta0_fails(K):
    # the variant with +phi0*Delta_0 disagrees with the definition once k >= 1
    assert periodicity_check(K, 0, 1, delta0_sign=+1).ok
    assert not periodicity_check(K, 1, 0, delta0_sign=+1).ok
    assert not periodicity_check(K, 2, 1, delta0_sign=+1).ok


# Chern layer -------------------------------------------------------------------

@pytest.mark.parametrize("cd", [CD2, CD3], ids=["n=2", "n=3"])
def test_chern_report(cd):
    rep = chern_report(cd)
    assert rep.ok, rep.failures()


def test_ch_examples():
    C = CD2.chow
    assert chern_character(CD2, K2.y(0, 3)) == C.unit + C.gen(0, 1) * 3
    x = K2.y(1, 0)
    assert chern_character(CD2, x * x) == chern_character(CD2, x) * chern_character(CD2, x)
    assert chern_character(CD2, x * x).is_zero()


def test_chern_of_unit():
    s = chern_series(CD2, K2.alg.unit, 6)
    assert s[0] == CD2.chow.unit and all(c.is_zero() for c in s[1:])


@pytest.mark.parametrize("a,b", [(0, 0), (1, -2), (F(1, 3), F(-1, 4))])
def test_c1_rho_formulas(a, b):
    C = CD2.chow
    mu, nu = C.gen(0, 1), C.gen(1, 0)
    assert chern_class(CD2, named_line(K2, "rho0", (a, b)), 1) == mu * (2 * a) + nu * (2 * b)
    h = F(1, 2)
    assert chern_class(CD2, named_line(K2, "rho+", (a, b)), 1) == mu * (2 * a + h) + nu * (2 * b + h)
    assert chern_class(CD2, named_line(K2, "rho-", (a, b)), 1) == mu * (2 * a + h) + nu * (2 * b - h)


def test_exotic_lattice_examples():
    C = CD2.chow
    sig, tau = named_line(K2, "rho1"), named_line(K2, "rho+")
    assert chern_class(CD2, sig, 1) == C.gen(0, 1)
    assert chern_class(CD2, tau, 1) == (C.gen(0, 1) + C.gen(1, 0)) / 2
    rep = exotic_lattice_check(2)
    assert rep.ok, rep.failures()


def elems(K):
    frac = st.fractions(min_value=-3, max_value=3, max_denominator=2)
    return st.lists(frac, min_size=K.alg.rank, max_size=K.alg.rank).map(K.alg.elem)


@given(elems(K2), elems(K2))
def test_chern_series_multiplicative_random(x, y):
    T = 4
    C = CD2.chow
    cx, cy, cxy = chern_series(CD2, x, T), chern_series(CD2, y, T), chern_series(CD2, x + y, T)
    assert cxy == [sum((cx[a] * cy[k - a] for a in range(k + 1)), C.zero()) for k in range(T + 1)]


@given(elems(K3), elems(K3))
def test_ch_homomorphism_random(x, y):
    assert chern_character(CD3, x * y) == chern_character(CD3, x) * chern_character(CD3, y)
    assert chern_character(CD3, x + y) == chern_character(CD3, x) + chern_character(CD3, y)


@given(elems(K2))
def test_gamma_consistency_random(x):
    assert all(gamma_consistency(CD2, x, 6))


# line families -----------------------------------------------------------------

def test_rho1_base_point():
    assert named_line(K2, "rho1") == K2.y(0, 1)


def test_T11_closed_form():
    y = K33.y
    z = lambda k: K33.alg.scalar(CycNum.zeta(3, k))
    want = y(0, 0) / 3 + y(0, 2) * F(2, 3) + y(1, 0) * z(1) / 3 + y(2, 0) * z(2) / 3
    assert named_line(K33, "T", (1, 1)) == want


def test_p13_named_lines_are_27_distinct_orbits():
    lines = p13_named_lines(K33)
    assert len(lines) == 27
    vals = list(lines.values())
    R = K33.psi_ring
    assert not any(same_orbit(R, vals[i], vals[j]) for i in range(27) for j in range(i))


def test_p13_families_need_zeta3():
    with pytest.raises(FieldTooSmall):
        named_line(K3, "T", (1, 1))
    with pytest.raises(UnknownFamily):
        named_line(K2, "nope")


def test_rho_product_law():
    h = F(1, 2)
    for (a, b), (c, d) in [((0, 0), (0, 0)), ((1, 2), (F(-1, 3), 5))]:
        for s, t in [("rho+", "rho-"), ("rho-", "rho+")]:
            sign = 1 if s == "rho+" else -1
            lhs = named_line(K2, "rho1", (a, b)) * named_line(K2, s, (c, d))
            assert lhs == named_line(K2, t, (a + c + h, b + d + sign * h))


def test_rho_tables():
    rep = rho_table_report(K2, CD2)
    assert rep.ok, rep.failures()


# presentations -----------------------------------------------------------------

@pytest.mark.parametrize("sign", ["+", "-"])
def test_p12_presentation(sign):
    rep = presentation_check(2, sign)
    assert rep.ok, rep.failures()


def test_p13_presentation():
    rep = presentation_check(3)
    assert rep.ok, rep.failures()
    assert rep.find("standard_monomials")[0]["witness"]["count"] == 10


def test_p13_presentation_with_sigma_as_unit_fails():
    # sending sigma to the unit class kills none of the relations correctly
    rep = presentation_check(3, sigma_image="Sigma1")
    assert not rep.ok
    assert all(not r["pass"] for r in rep.find("relation_vanishes"))
