"""Virtual Chow ring of P(1,n), the inertial Chern character and Chern series."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..errors import ParentMismatch
from ..psilambda import gamma_series
from ..report import Report
from ..scalg import Algebra, BasisLabel, Elem, LinearMap, algebra_new
from .ring import VirtualKRing


def build_virtual_chow(n: int, field: int = 1) -> Algebra:
    """Basis c0^0, c0^1, c_m^0; c0^0 is the unit and every other product vanishes."""
    labels = [BasisLabel(0, 0, Fraction(0), Fraction(0), "c0^0"),
              BasisLabel(0, 1, Fraction(0), Fraction(1), "c0^1")]
    labels += [BasisLabel(m, 0, Fraction(1), Fraction(1), f"c{m}^0") for m in range(1, n)]
    r = len(labels)
    sc = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i in range(r):
        sc[0][i][i] = 1
        sc[i][0][i] = 1
    unit = [1] + [0] * (r - 1)
    return algebra_new(labels, sc, unit, field, name=f"A(IP(1,{n}))")


class ChernData:
    def __init__(self, kring: VirtualKRing):
        self.kring = kring
        self.n = kring.n
        self.chow = build_virtual_chow(kring.n, kring.field)
        C = self.chow
        K = kring.alg

        def ch_basis(b):
            lab = K.basis[b.support()[0]]
            if lab.sector == 0:
                return C.gen(0, 0) + C.gen(0, 1) * lab.exp
            return C.gen(lab.sector, 0)

        self.ch_map = LinearMap.from_function(K, C, ch_basis)

    def degree_part(self, z: Elem, d: int) -> Elem:
        C = self.chow
        return C.elem([c if b.degree == d else 0 for b, c in zip(C.basis, z.coeffs)])


def build_chern_data(kring: VirtualKRing) -> ChernData:
    return ChernData(kring)


def chern_character(cd: ChernData, x: Elem) -> Elem:
    if x.parent is not cd.kring.alg:
        raise ParentMismatch("element is not in the K-ring of this Chern data")
    return cd.ch_map(x)


def _exp_coeffs(C: Algebra, a):
    e = [C.unit]
    for n in range(1, len(a)):
        acc = C.zero()
        for k in range(1, n + 1):
            if not a[k].is_zero() and not e[n - k].is_zero():
                acc = acc + a[k] * e[n - k] * k
        e.append(acc / n)
    return e


def chern_series(cd: ChernData, x: Elem, T: int):
    """Coefficients c^0..c^T of the exponential of sum (-1)^(k-1) (k-1)! Ch^k(x) t^k."""
    ch = chern_character(cd, x)
    a = [cd.chow.zero()]
    for k in range(1, T + 1):
        a.append(cd.degree_part(ch, k) * ((-1) ** (k - 1) * factorial(k - 1)))
    return _exp_coeffs(cd.chow, a)


def chern_class(cd: ChernData, x: Elem, i: int) -> Elem:
    return chern_series(cd, x, max(i, 1))[i]


def gamma_consistency(cd: ChernData, x: Elem, T: int) -> list[bool]:
    """c^k(x) == Ch^k(gamma^k(x - aug x)) for k = 1..T."""
    R = cd.kring.psi_ring
    c = chern_series(cd, x, T)
    g = gamma_series(R, x - R.aug(x), T)
    return [c[k] == cd.degree_part(chern_character(cd, g[k]), k) for k in range(1, T + 1)]


def chern_report(cd: ChernData, T: int | None = None) -> Report:
    n = cd.n
    T = T if T is not None else 2 * n + 2
    subject = f"n={n}"
    rep = Report(f"chern {subject}")
    K = cd.kring.alg
    C = cd.chow
    bs = K.basis_elems()
    bad = [(i, j) for i in range(K.rank) for j in range(i, K.rank)
           if cd.ch_map(bs[i] * bs[j]) != cd.ch_map(bs[i]) * cd.ch_map(bs[j])]
    rep.add("ch_homomorphism", subject, not bad, {"failures": bad[:3]})
    rep.add("ch_unit", subject, cd.ch_map(K.unit) == C.unit)
    bad = []
    for b, lab in zip(bs, K.basis):
        if lab.age == 1:
            img = cd.ch_map(b)
            if img != cd.degree_part(img, 1):
                bad.append(lab.display())
    rep.add("ch_preserves_age_degree", subject, not bad, {"failures": bad})
    c_unit = chern_series(cd, K.unit, T)
    rep.add("chern_of_unit", subject, c_unit[0] == C.unit and all(z.is_zero() for z in c_unit[1:]))
    bad = [lab.display() for b, lab in zip(bs, K.basis) if not all(gamma_consistency(cd, b, T))]
    rep.add("gamma_consistency", f"{subject} T={T}", not bad, {"failures": bad})
    # untwisted classes are the ordinary Chern polynomial of chi^a
    ok = all(chern_series(cd, cd.kring.y(0, a), 2)[1] == C.gen(0, 1) * a for a in range(n + 1))
    rep.add("untwisted_chern", subject, ok)
    # multiplicativity on a deterministic family of pairs
    ok = True
    for i in range(K.rank):
        x = bs[i] * 2 + bs[(i + 1) % K.rank]
        y = bs[(i * 3) % K.rank] - bs[(i + 2) % K.rank] * 3
        cx, cy, cxy = chern_series(cd, x, 3), chern_series(cd, y, 3), chern_series(cd, x + y, 3)
        prod = [sum((cx[a] * cy[k - a] for a in range(k + 1)), C.zero()) for k in range(4)]
        ok = ok and prod == cxy
    rep.add("chern_multiplicative", subject, ok)
    return rep
