"""Closed-form line elements of the virtual K-theory of P(1,2) and P(1,3)."""
from __future__ import annotations

from fractions import Fraction as F

from ..cyclofield import CycNum
from ..errors import FieldTooSmall, UnknownFamily
from ..psilambda import is_line_element
from ..scalg import alg_inv
from ..report import Report
from ..scalg import Elem
from .chow import ChernData, chern_class
from .ring import VirtualKRing

P12_FAMILIES = ("rho0", "rho1", "rho+", "rho-")
P13_FAMILIES = ("Sigma", "D", "T")


def translation_f(K: VirtualKRing, alpha, beta) -> Elem:
    """-alpha*Delta_0 + beta*Delta_1."""
    return K.delta(0) * (-K.alg.scalar(alpha)) + K.delta(1) * K.alg.scalar(beta)


def named_line(K: VirtualKRing, family: str, params=()) -> Elem:
    y = K.y
    if K.n == 2 and family in P12_FAMILIES:
        alpha, beta = params if params else (0, 0)
        base = {
            "rho0": y(0, 0),
            "rho1": y(0, 1),
            "rho+": (y(0, 0) + y(0, 1) + y(1, 0)) / 2,
            "rho-": (y(0, 0) + y(0, 1) - y(1, 0)) / 2,
        }[family]
        return base + translation_f(K, alpha, beta)
    if K.n == 3 and family in P13_FAMILIES:
        return _p13_line(K, family, params)
    raise UnknownFamily(f"no family {family!r} for n={K.n}")


def _p13_line(K, family, params):
    y = K.y
    if family == "Sigma":
        (i,) = params
        if i not in (1, 2, 3):
            raise UnknownFamily(f"Sigma index {i}")
        return y(0, i - 1)
    if K.alg.N % 3:
        raise FieldTooSmall(3, "third roots of unity needed for the D and T families")
    z = lambda k: K.alg.scalar(CycNum.zeta(3, k))
    third = F(1, 3)
    if family == "D":
        i, j = params
        if i not in (1, 2, 3) or j not in (1, 2):
            raise UnknownFamily(f"D index {params}")
        c10, c11, c20, c21 = {
            1: (-z(j), 1, -z(2 * j), 1),
            2: (-1, z(j), -1, z(2 * j)),
            3: (-z(2 * j), z(j), -z(j), z(2 * j)),
        }[i]
        return (y(0, 0) + y(0, 1) + y(0, 2) + y(1, 0) * c10 + y(1, 1) * c11
                + y(2, 0) * c20 + y(2, 1) * c21) * third
    if family == "T":
        i, k = params
        if i not in range(1, 7) or k not in (0, 1, 2):
            raise UnknownFamily(f"T index {params}")
        a, b = z(k), z(2 * k)
        terms = {
            1: [(0, 0, 1), (0, 2, 2), (1, 0, a), (2, 0, b)],
            2: [(0, 0, 2), (0, 2, 1), (1, 0, -a), (2, 0, -b)],
            3: [(0, 0, 2), (0, 1, 1), (1, 1, a), (2, 1, b)],
            4: [(0, 0, 1), (0, 1, 2), (1, 1, -a), (2, 1, -b)],
            5: [(0, 1, 1), (0, 2, 2), (1, 0, a), (1, 1, a), (2, 0, b), (2, 1, b)],
            6: [(0, 1, 2), (0, 2, 1), (1, 0, -a), (1, 1, -a), (2, 0, -b), (2, 1, -b)],
        }[i]
        acc = K.alg.zero()
        for m, e, c in terms:
            acc = acc + y(m, e) * c
        return acc * third
    raise UnknownFamily(family)


def p13_named_lines(K: VirtualKRing):
    """The 27 listed representatives, keyed by name."""
    out = {}
    for i in (1, 2, 3):
        out[f"Sigma{i}"] = named_line(K, "Sigma", (i,))
    for i in (1, 2, 3):
        for j in (1, 2):
            out[f"D{i},{j}"] = named_line(K, "D", (i, j))
    for i in range(1, 7):
        for k in (0, 1, 2):
            out[f"T{i},{k}"] = named_line(K, "T", (i, k))
    return out


def p12_named_lines(K: VirtualKRing):
    return {fam: named_line(K, fam, (0, 0)) for fam in P12_FAMILIES}


# product and inverse laws of the rho families -------------------------------

def _rho_product_rule(f1, p1, f2, p2):
    """Family and parameters of rho_f1(p1) * rho_f2(p2)."""
    (a1, b1), (a2, b2) = p1, p2
    a, b = a1 + a2, b1 + b2
    h = F(1, 2)
    key = {f1, f2}
    if f1 == "rho0":
        return f2, (a, b)
    if f2 == "rho0":
        return f1, (a, b)
    if f1 == f2 == "rho1":
        return "rho0", (a + 1, b)
    if key == {"rho1", "rho+"}:
        return "rho-", (a + h, b + h)
    if key == {"rho1", "rho-"}:
        return "rho+", (a + h, b - h)
    if f1 == f2 == "rho+":
        return "rho0", (a + h, b + h)
    if f1 == f2 == "rho-":
        return "rho0", (a + h, b - h)
    if key == {"rho+", "rho-"}:
        return "rho1", (a, b)
    raise UnknownFamily(f"{f1}, {f2}")


def _rho_inverse_rule(f, p):
    a, b = p
    h = F(1, 2)
    return {
        "rho0": ("rho0", (-a, -b)),
        "rho1": ("rho1", (-(1 + a), -b)),
        "rho+": ("rho+", (-(a + h), -b - h)),
        "rho-": ("rho-", (-(a + h), -b + h)),
    }[f]


def _rho_c1_rule(cd: ChernData, f, p):
    C = cd.chow
    a, b = p
    h = F(1, 2)
    c01, c10 = C.gen(0, 1), C.gen(1, 0)
    shift = {"rho0": (0, 0), "rho1": (1, 0), "rho+": (h, h), "rho-": (h, -h)}[f]
    return c01 * (2 * a + shift[0]) + c10 * (2 * b + shift[1])


SAMPLE_PARAMS = [(0, 0), (1, -2), (F(-1, 4), F(1, 3)), (F(5, 2), 0)]


def rho_table_report(K: VirtualKRing, cd: ChernData | None = None) -> Report:
    rep = Report("rho families")
    R = K.psi_ring
    for f in P12_FAMILIES:
        ok = all(is_line_element(R, named_line(K, f, p)) for p in SAMPLE_PARAMS)
        rep.add("rho_is_line", f, ok)
    for f1 in P12_FAMILIES:
        for f2 in P12_FAMILIES:
            ok = True
            for p1 in SAMPLE_PARAMS[:3]:
                for p2 in SAMPLE_PARAMS[1:]:
                    g, q = _rho_product_rule(f1, p1, f2, p2)
                    ok = ok and named_line(K, f1, p1) * named_line(K, f2, p2) == named_line(K, g, q)
            rep.add("rho_product", f"{f1}*{f2}", ok)
    for f in P12_FAMILIES:
        ok = True
        for p in SAMPLE_PARAMS:
            g, q = _rho_inverse_rule(f, p)
            L = named_line(K, f, p)
            ok = ok and alg_inv(L) == named_line(K, g, q) and R.dual(L) == named_line(K, g, q)
        rep.add("rho_inverse", f, ok)
    if cd is not None:
        for f in P12_FAMILIES:
            ok = all(chern_class(cd, named_line(K, f, p), 1) == _rho_c1_rule(cd, f, p) for p in SAMPLE_PARAMS)
            rep.add("rho_c1", f, ok)
    return rep
