import pytest

from inertialk.errors import BoundExceeded
from inertialk.hkrc import (build_resolution_chow, build_resolution_k, completion, completion_report,
                            hkrc_verify, resolution_ch, resolution_ring_report, topology_equivalence_check,
                            trivial_topology_check)
from inertialk.psilambda import psi_apply
from inertialk.scalg import alg_inv
from inertialk.wps import build_virtual_k
from inertialk.wps.lines import named_line

from oracles import span_rank


def test_resolution_rings():
    KZ, AZ = build_resolution_k(2), build_resolution_chow(2)
    assert KZ.alg.rank == 3 and AZ.alg.rank == 3
    # e(chi0^2) = 1 - chi0^-2 = 2 e(chi0) in the square-zero quotient
    x2 = KZ.chi(0) ** 2
    assert psi_apply(KZ.psi_ring, 2, KZ.chi(0)) == x2
    assert KZ.alg.unit - alg_inv(x2) == KZ.u(0) * 2
    ch = resolution_ch(KZ, AZ)
    assert ch(KZ.u(1)) == AZ.t(1)


@pytest.mark.parametrize("n", [2, 3])
def test_resolution_report(n):
    assert resolution_ring_report(n).ok


def test_completion_p12_rank_3():
    K = build_virtual_k(2)
    C = completion(K.psi_ring)
    assert C.rank == 3
    # oracle: 1, e(sigma), e(tau) span the factor and products of the e's vanish
    sig, tau = named_line(K, "rho1"), named_line(K, "rho+")
    es = [C.project(K.alg.unit - alg_inv(g)) for g in (sig, tau)]
    vecs = [[c.to_rational() for c in x.coeffs] for x in [C.alg.unit] + es]
    assert span_rank(vecs) == 3
    assert all((a * b).is_zero() for a in es for b in es)


def test_completion_p13_matches_resolution():
    C = completion(build_virtual_k(3, 3).psi_ring)
    assert C.rank == build_resolution_k(3).alg.rank == 4


@pytest.mark.parametrize("n", [2, 3])
def test_completion_report(n):
    rep = completion_report(n)
    assert rep.ok, rep.failures()


@pytest.mark.parametrize("n", [2, 3])
def test_topology_exponents(n):
    rep = topology_equivalence_check(n)
    assert rep.ok
    for row in rep.find("aS_power_in_aIX") + rep.find("aIX_power_in_aS"):
        assert 1 <= row["witness"]["r"] <= 8


def test_topology_exponent_is_minimal():
    rep = topology_equivalence_check(2, levels=1)
    assert rep.find("aS_power_in_aIX")[0]["witness"]["r"] == 2
    with pytest.raises(BoundExceeded):
        topology_equivalence_check(2, bound=1, levels=1)


def test_trivial_topology():
    assert trivial_topology_check().ok


@pytest.mark.parametrize("n,solutions", [(2, 8), (3, 48)])
def test_hkrc(n, solutions):
    rep = hkrc_verify(n)
    assert rep.ok, rep.failures()
    row = rep.find("isomorphism_found")[0]
    assert row["witness"]["solutions"] == solutions
    assert len(row["witness"]["assignment"]) == n
