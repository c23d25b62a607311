"""Generator-and-relation presentations of the virtual K-theory of P(1,2), P(1,3).

A presentation Q[gens]/I -> K is certified by: every relation maps to 0,
the images of the standard monomials of a Groebner basis of I span K, and
their number equals the rank of K.
"""
from __future__ import annotations

from fractions import Fraction as F

import sympy as sp

from .. import linalg
from ..report import Report
from ..scalg import Elem, alg_inv
from .chow import ChernData, build_chern_data, chern_character, chern_class
from .lines import named_line
from .ring import VirtualKRing, build_virtual_k

s, t, tb = sp.symbols("sigma tau taubar")

P12_RELATIONS = {
    "(tau-1)(tau^2-1)": (t - 1) * (t**2 - 1),
    "(sigma-1)(sigma^2-1)": (s - 1) * (s**2 - 1),
    "(sigma-tau)(tau-1)": (s - t) * (t - 1),
}

P13_RELATIONS = {
    "r1": s**3 - 2 * s**2 + s - t**2 + t * tb + t - tb**2 + tb - 1,
    "r2": (t - 1) * (t**2 - s),
    "r2bar": (tb - 1) * (tb**2 - s),
    "r3": (t - 1) * (s**2 - t),
    "r3bar": (tb - 1) * (s**2 - tb),
    "r4": s**2 - s * t - s * tb + t**2 * tb - t * tb + tb**2 - tb + 1,
    "r4bar": s**2 - s * t - s * tb + t**2 + t * tb**2 - t * tb - t + 1,
    "r5": (t - 1) * (s * t - 1),
    "r5bar": (tb - 1) * (s * tb - 1),
    "r6": -s**2 + s * t * tb + s - t**2 + t * tb - tb**2,
}

P13_INVERSES = {
    "sigma": -s**2 + s - t**2 + t * tb + t - tb**2 + tb,
    "tau": -s * t + s + 1,
    "taubar": -s * tb + s + 1,
}


def evaluate(expr, values: dict) -> Elem:
    """Evaluate a polynomial with rational coefficients at algebra elements."""
    gens = list(values)
    A = next(iter(values.values())).parent
    poly = sp.Poly(sp.expand(expr), *gens)
    cache = {}

    def power(g, k):
        if (g, k) not in cache:
            cache[(g, k)] = values[g] ** k
        return cache[(g, k)]

    acc = A.zero()
    for monom, coeff in poly.terms():
        term = A.unit * F(int(sp.numer(coeff)), int(sp.denom(coeff)))
        for g, k in zip(gens, monom):
            if k:
                term = term * power(g, k)
        acc = acc + term
    return acc


def standard_monomials(relations, gens, order="grevlex"):
    """Monomials not divisible by any leading monomial of a Groebner basis of the relations."""
    G = sp.groebner(list(relations), *gens, order=order, domain=sp.QQ)
    leads = [sp.Poly(g, *gens).monoms(order=order)[0] for g in G.exprs]
    bound = max(max(l) for l in leads) + 1
    out = []

    def rec(prefix):
        if len(prefix) == len(gens):
            if not any(all(p >= q for p, q in zip(prefix, l)) for l in leads):
                out.append(tuple(prefix))
            return
        for k in range(bound + 1):
            rec(prefix + [k])

    rec([])
    return G, sorted(out, key=lambda m: (sum(m), m))


def monomial_expr(m, gens):
    e = sp.Integer(1)
    for g, k in zip(gens, m):
        e *= g**k
    return e


def presentation_check(n: int, sign: str = "+", sigma_image: str = "y0^1") -> Report:
    if n == 2:
        return _p12_presentation(sign)
    if n == 3:
        return _p13_presentation(sigma_image)
    raise ValueError("presentations are recorded for n = 2 and n = 3")


def _certify(rep, K, subject, relations, values, gens):
    A = K.alg
    for name, rel in relations.items():
        rep.add("relation_vanishes", f"{subject} {name}", evaluate(rel, values).is_zero())
    G, std = standard_monomials(relations.values(), gens)
    images = [evaluate(monomial_expr(m, gens), values) for m in std]
    r = linalg.rank([x.coeffs for x in images])
    rep.add("standard_monomials", subject, len(std) == A.rank,
            {"count": len(std), "rank": A.rank, "monomials": [str(monomial_expr(m, gens)) for m in std]})
    rep.add("images_span", subject, r == A.rank, {"rank": r})
    return G


def _p12_presentation(sign="+") -> Report:
    K = build_virtual_k(2)
    cd = build_chern_data(K)
    A = K.alg
    tau_fam = "rho+" if sign == "+" else "rho-"
    subject = f"n=2 tau={tau_fam}"
    rep = Report(f"presentation {subject}")
    sig = named_line(K, "rho1", (0, 0))
    tau = named_line(K, tau_fam, (0, 0))
    values = {s: sig, t: tau}
    _certify(rep, K, subject, P12_RELATIONS, values, [s, t])
    basis = [A.unit, sig, sig * sig, tau, tau * tau]
    rep.add("basis_1_s_s2_t_t2", subject, linalg.rank([x.coeffs for x in basis]) == 5)
    rep.add("sigma_squared", subject, sig * sig == K.y(0, 2))
    h = F(1, 2)
    rep.add("sigma_inverse", subject, alg_inv(sig) == named_line(K, "rho1", (-1, 0)))
    tau_inv_params = (-h, -h) if sign == "+" else (-h, h)
    rep.add("tau_inverse", subject, alg_inv(tau) == named_line(K, tau_fam, tau_inv_params))
    # Chow side: mu -> c0^1, nu -> (c0^1 +- c1^0)/2, and Ch(sigma) = 1 + mu, Ch(tau) = 1 + nu
    C = cd.chow
    mu = C.gen(0, 1)
    nu = (C.gen(0, 1) + C.gen(1, 0) * (1 if sign == "+" else -1)) / 2
    rep.add("chow_generators", subject,
            chern_class(cd, sig, 1) == mu and chern_class(cd, tau, 1) == nu)
    rep.add("chow_square_zero", subject, all((a * b).is_zero() for a in (mu, nu) for b in (mu, nu)))
    rep.add("chow_basis", subject, linalg.rank([C.unit.coeffs, mu.coeffs, nu.coeffs]) == C.rank)
    rep.add("ch_exponential", subject,
            chern_character(cd, sig) == C.unit + mu and chern_character(cd, tau) == C.unit + nu)
    return rep


def p13_generators(K: VirtualKRing, sigma_image: str = "y0^1"):
    sig = K.y(0, 1) if sigma_image == "y0^1" else named_line(K, "Sigma", (1,))
    return {s: sig, t: named_line(K, "T", (1, 1)), tb: named_line(K, "T", (1, 2))}


def _p13_presentation(sigma_image="y0^1") -> Report:
    K = build_virtual_k(3, 3)
    subject = f"n=3 sigma={sigma_image}"
    rep = Report(f"presentation {subject}")
    values = p13_generators(K, sigma_image)
    gens = [s, t, tb]
    G = _certify(rep, K, subject, P13_RELATIONS, values, gens)
    deg2 = [m for m in _monomials(3, 2)]
    imgs = [evaluate(monomial_expr(m, gens), values) for m in deg2]
    rep.add("degree_le_2_basis", subject,
            len(deg2) == 10 and linalg.rank([x.coeffs for x in imgs]) == 10)
    untw = sp.expand((s - 1) * (s**3 - 1))
    rep.add("untwisted_relation_in_ideal", subject, G.contains(untw))
    rep.add("untwisted_relation_vanishes", subject, evaluate(untw, values).is_zero())
    for name, expr in P13_INVERSES.items():
        g = {"sigma": s, "tau": t, "taubar": tb}[name]
        ok = (values[g] * evaluate(expr, values)) == K.alg.unit
        rep.add("inverse_formula", f"{subject} {name}", ok)
    return rep


def _monomials(k, d):
    out = []

    def rec(prefix, left):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], d)
    return out


def exotic_lattice_check(n: int = 2) -> Report:
    if n != 2:
        raise ValueError("the exotic lattice formula is recorded for n = 2")
    K = build_virtual_k(2)
    cd = build_chern_data(K)
    C = cd.chow
    rep = Report("exotic lattice n=2")
    sig = named_line(K, "rho1", (0, 0))
    tau = named_line(K, "rho+", (0, 0))
    bad = []
    for u in range(-2, 3):
        for v in range(-2, 3):
            x = sig ** u * tau ** v
            want = C.gen(0, 1) * (u + F(v, 2)) + C.gen(1, 0) * F(v, 2)
            if chern_class(cd, x, 1) != want:
                bad.append((u, v))
    rep.add("c1_lattice_formula", "u,v in [-2,2]", not bad, {"failures": bad})
    monos = [sig ** a * tau ** b for a in range(-2, 3) for b in range(-2, 3)]
    r = linalg.rank([m.coeffs for m in monos])
    rep.add("integral_subring_rank", "rho1, rho+", r == 5, {"rank": r})
    # the lattice is closed under the product it induces: mu*nu etc vanish
    return rep
