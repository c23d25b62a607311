from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from inertialk.errors import DimensionMismatch, NotInvertible, ParentMismatch, UnitAxiomFailure
from inertialk.scalg import (BasisLabel, IdealSpan, LinearMap, alg_inv, algebra_new, axiom_report,
                             ideal_power_contained, is_invertible, is_local, local_factors, subalgebra_rank)
from inertialk.wps import build_virtual_k

from oracles import span_rank, star_product_oracle

K2 = build_virtual_k(2)
K3 = build_virtual_k(3)


def dual_numbers():
    labels = [BasisLabel(0, 0, name="1"), BasisLabel(0, 1, name="e")]
    sc = [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]
    return algebra_new(labels, sc, [1, 0])


def test_build_rejects_bad_tables():
    labels = [BasisLabel(0, 0), BasisLabel(0, 1)]
    with pytest.raises(DimensionMismatch):
        algebra_new(labels, [[[1, 0]]], [1, 0])
    with pytest.raises(UnitAxiomFailure):
        algebra_new(labels, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [0, 1])


def test_dual_numbers_inverse():
    A = dual_numbers()
    one, e = A.basis_elems()
    assert alg_inv(one + e * 3) == one - e * 3
    with pytest.raises(NotInvertible):
        alg_inv(e)


@pytest.mark.parametrize("K", [K2, K3], ids=["n=2", "n=3"])
def test_star_products_match_laurent_oracle(K):
    n = K.n
    A = K.alg
    for i, bi in enumerate(A.basis):
        for j, bj in enumerate(A.basis):
            m, coeffs = star_product_oracle(n, bi.sector, bi.exp, bj.sector, bj.exp)
            want = A.zero()
            for a, c in enumerate(coeffs):
                want = want + K.y(m, a) * c
            assert A.product_of_basis(i, j) == want, (bi.display(), bj.display())


def test_p12_twisted_products():
    y = K2.y
    assert y(1, 0) * y(1, 0) == y(0, 0) - y(0, 1) * 2 + y(0, 2)
    # the fully reduced y1^0 * y1^1: chi - 2 + chi^-1 with chi^-1 = 1 + chi - chi^2
    assert y(1, 0) * y(1, 1) == -y(0, 0) + y(0, 1) * 2 - y(0, 2)
    for m in range(2):
        for a in range(3 if m == 0 else 2):
            assert y(0, 1) * y(m, a) == y(m, a + 1)


def test_rho_plus_square():
    y = K2.y
    rp = (y(0, 0) + y(0, 1) + y(1, 0)) / 2
    assert rp * rp == ((y(0, 0) + y(0, 2)) + (y(1, 0) + y(1, 1))) / 2


def test_p13_tau_inverse():
    K = build_virtual_k(3, 3)
    from inertialk.wps.lines import named_line
    sig, tau = K.y(0, 1), named_line(K, "T", (1, 1))
    assert alg_inv(tau) == -sig * tau + sig + K.alg.unit


def test_delta0_not_invertible():
    d0 = K2.delta(0)
    with pytest.raises(NotInvertible):
        alg_inv(d0)
    # oracle: the multiplication matrix of Delta_0 is singular
    assert span_rank([[c.to_rational() for c in row] for row in K2.alg.mult_matrix(d0)]) < K2.alg.rank


@pytest.mark.parametrize("K", [K2, K3], ids=["n=2", "n=3"])
def test_axiom_report_passes(K):
    rep = axiom_report(K.alg)
    assert rep.ok, rep.to_text()


def test_parent_mismatch():
    with pytest.raises(ParentMismatch):
        K2.alg.unit * K3.alg.unit


def test_extend_scalars():
    A = K2.alg.extend(3)
    assert A.N == 3 and A.rank == 5
    x = K2.y(1, 0).transport(A)
    assert x * x == (K2.y(1, 0) * K2.y(1, 0)).transport(A)


def test_linear_map_compose_and_rank():
    A = K2.alg
    f = LinearMap.from_function(A, A, lambda b: b * K2.y(0, 1))
    g = f.compose(f)
    assert g(A.unit) == K2.y(0, 2)
    assert LinearMap.identity(A).rank() == 5
    assert LinearMap.from_function(A, A, lambda b: b * K2.delta(0)).rank() < 5


def test_ideal_span_closes_under_products():
    A = K2.alg
    I = IdealSpan(A, [K2.y(1, 0)])
    assert I.contains(K2.y(1, 0) * K2.y(1, 0))
    assert I.contains(K2.y(1, 1))
    J = IdealSpan(A, [K2.delta(0), K2.delta(1)])
    assert J.dim == 2
    assert ideal_power_contained(J, IdealSpan(A, [A.zero()]), 2)
    assert not ideal_power_contained(J, IdealSpan(A, [A.zero()]), 1)


def test_local_factors_p12():
    fs = local_factors(K2.alg)
    assert sum(f.rank for f in fs) == 5
    assert sum((f.idempotent for f in fs), K2.alg.zero()) == K2.alg.unit
    assert sorted(f.rank for f in fs) == [1, 1, 3]
    assert is_local(fs[-1].factor)
    assert not is_local(K2.alg)


def test_local_factors_need_third_roots_for_p13():
    from inertialk.errors import FieldTooSmall
    with pytest.raises(FieldTooSmall) as exc:
        local_factors(K3.alg)
    assert exc.value.required == 3
    fs = local_factors(build_virtual_k(3, 3).alg)
    assert sum(f.rank for f in fs) == 10


def test_subalgebra_rank_of_sigma():
    assert subalgebra_rank([K2.y(0, 1)]) == 3


# randomized ring axioms ------------------------------------------------------

def elems(K):
    frac = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.lists(frac, min_size=K.alg.rank, max_size=K.alg.rank).map(K.alg.elem)


@given(elems(K2), elems(K2), elems(K2))
def test_random_ring_axioms_p12(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * K2.alg.unit == x


@given(elems(K3), elems(K3), elems(K3))
def test_random_ring_axioms_p13(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(elems(K2))
def test_random_inverse(x):
    if is_invertible(x):
        assert x * alg_inv(x) == K2.alg.unit
        assert x ** -2 * x ** 2 == K2.alg.unit
    else:
        with pytest.raises(NotInvertible):
            alg_inv(x)


@given(elems(K2), elems(K2))
def test_local_factor_projection_is_ring_map(x, y):
    for f in local_factors(K2.alg):
        assert f.project(x * y) == f.project(x) * f.project(y)
        assert f.include(f.project(x)) == x * f.idempotent
