"""Inertial K-theory of BG for a finite abelian group G.

The basis is V_g^a: a character a of G supported on the sector of g.  The
inertial product is convolution, V_g^a * V_h^b = V_{gh}^{ab}; all ages are 0
so the Adams operations are the ordinary ones, psi^k(V_g^a) = V_g^{ka}.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import lcm

from .psilambda import PsiRing, enumerate_line_reps, is_line_element, lambda_series, psi_apply
from .report import Report
from .scalg import Algebra, BasisLabel, Elem, LinearMap, algebra_new, subalgebra_rank
from . import linalg


def _label(orders, g, a):
    if tuple(orders) == (2,):
        sign = lambda x: "1" if x == 0 else "-1"
        return f"V{sign(g[0])}^{sign(a[0])}"
    return f"V[{','.join(map(str, g))}]^[{','.join(map(str, a))}]"


class BGRing:
    def __init__(self, orders, field: int = 1):
        orders = tuple(int(o) for o in orders)
        if not orders or any(o < 2 for o in orders):
            raise ValueError("orders must be a nonempty list of integers >= 2")
        self.orders = orders
        self.exponent = lcm(*orders)
        elems = list(product(*[range(o) for o in orders]))
        self.group = elems
        keys = [(g, a) for g in elems for a in elems]
        labels = [BasisLabel(g, a, Fraction(0), None, _label(orders, g, a)) for g, a in keys]
        index = {k: i for i, k in enumerate(keys)}
        r = len(keys)
        add = lambda x, y: tuple((u + v) % o for u, v, o in zip(x, y, orders))
        sc = [[{index[(add(g, h), add(a, b))]: 1} for (h, b) in keys] for (g, a) in keys]
        zero = tuple(0 for _ in orders)
        unit = [0] * r
        unit[index[(zero, zero)]] = 1
        self.alg = algebra_new(labels, sc, unit, field, name=f"K(B{'x'.join('Z' + str(o) for o in orders)})")
        A = self.alg
        self._index = index
        self._zero = zero
        scale = lambda k, a: tuple((k * u) % o for u, o in zip(a, orders))

        def on_basis(f):
            def g(b):
                grp, ch = A.basis[b.support()[0]].sector, A.basis[b.support()[0]].exp
                return A.basis_elem(index[f(grp, ch)])
            return g

        aug = LinearMap.from_function(A, A, on_basis(lambda g, a: (g, zero)))
        dual = LinearMap.from_function(A, A, on_basis(lambda g, a: (g, scale(-1, a))))
        maps = {k: LinearMap.from_function(A, A, on_basis(lambda g, a, k=k: (g, scale(k, a))))
                for k in range(1, self.exponent + 1)}
        self.psi_ring = PsiRing(A, aug, maps, dual, extension=self._periodic, n=self.exponent, name=A.name)

    def _periodic(self, k, x):
        """psi^(j+r) = psi^j for j >= 1, r the exponent of G."""
        return psi_apply(self.psi_ring, (k - 1) % self.exponent + 1, x)

    def V(self, g, a) -> Elem:
        g = (g,) if isinstance(g, int) else tuple(g)
        a = (a,) if isinstance(a, int) else tuple(a)
        return self.alg.basis_elem(self._index[(g, a)])

    def chern_series(self, x: Elem, T: int):
        """Inertial Chern classes: every class lives in degree 0, so c_t = 1."""
        return [self.alg.unit] + [self.alg.zero()] * T


def build_bg(orders, field: int = 1) -> BGRing:
    return BGRing(orders, field)


def _bmu2_elements(B: BGRing):
    V = B.V
    # V_1^{+-1}: sector 0 (identity), V_{-1}^{+-1}: sector 1; character exponent 1 is the sign
    return {
        "V1^1": V(0, 0), "V1^-1": V(0, 1), "V-1^1": V(1, 0), "V-1^-1": V(1, 1),
    }


def _geometric(A, T, parity=None):
    """Coefficients of 1/(1+t) (parity None) or 1/(1-t^2) (parity 'even') up to t^T, as ints."""
    if parity == "even":
        return [1 if k % 2 == 0 else 0 for k in range(T + 1)]
    return [(-1) ** k for k in range(T + 1)]


def bmu2_closed_forms(B: BGRing, T: int = 6):
    """The four lambda series as explicit power series, expanded by hand."""
    A = B.alg
    e = _bmu2_elements(B)
    one = A.unit
    out = {}
    out["V1^1"] = [one, one] + [A.zero()] * (T - 1)
    out["V1^-1"] = [one, e["V1^-1"]] + [A.zero()] * (T - 1)
    # 1 + tV + t^2/(2(1+t)) (1 - V)
    g = _geometric(A, T)
    series = [one, e["V-1^1"]] + [A.zero()] * (T - 1)
    for k in range(2, T + 1):
        series[k] = series[k] + (one - e["V-1^1"]) * Fraction(g[k - 2], 2)
    out["V-1^1"] = series
    # 1 + tW + t^2/(2(1-t^2)) (1 - t V1^-1 - V-1^1 + t W), W = V-1^-1
    h = _geometric(A, T, "even")
    W = e["V-1^-1"]
    series = [one, W] + [A.zero()] * (T - 1)
    const = one - e["V-1^1"]
    lin = W - e["V1^-1"]
    for k in range(2, T + 1):
        # t^2/(2(1-t^2)) * (const + t*lin): coefficient of t^k
        series[k] = series[k] + const * Fraction(h[k - 2], 2)
        if k >= 3:
            series[k] = series[k] + lin * Fraction(h[k - 3], 2)
    out["V-1^-1"] = series
    return out


def bmu2_report(T: int = 6) -> Report:
    B = build_bg([2])
    R = B.psi_ring
    A = B.alg
    rep = Report("B mu_2")
    e = _bmu2_elements(B)
    closed = bmu2_closed_forms(B, T)
    for name, x in e.items():
        got = lambda_series(R, x, T).coeffs
        rep.add("lambda_closed_form", f"{name} T={T}", got == closed[name])
    sp = (e["V1^1"] + e["V1^-1"] + (e["V-1^1"] - e["V-1^-1"])) / 2
    sm = (e["V1^1"] + e["V1^-1"] - (e["V-1^1"] - e["V-1^-1"])) / 2
    one, inv = e["V1^1"], e["V1^-1"]
    rep.add("sigma_square", "sigma+*sigma+", sp * sp == one)
    rep.add("sigma_square", "sigma-*sigma-", sm * sm == one)
    rep.add("sigma_swap", "V1^-1*sigma+", inv * sp == sm)
    rep.add("sigma_swap", "V1^-1*sigma-", inv * sm == sp)
    rep.add("sigma_product", "sigma+*sigma-", sp * sm == inv)
    lines = {"V1^1": one, "V1^-1": inv, "sigma+": sp, "sigma-": sm}
    for name, L in lines.items():
        rep.add("line_element", f"{name} l<=4", is_line_element(R, L, 2, bound=4))
    found = enumerate_line_reps(R, 2, bound=4)
    same = sorted(x.sort_key() for x in found) == sorted(x.sort_key() for x in lines.values())
    rep.add("line_enumeration", "P1 has four elements", len(found) == 4 and same, {"count": len(found)})
    core = subalgebra_rank([inv, sp])
    rep.add("core_subring_rank", "generated by V1^-1, sigma+", core == 3, {"rank": core})
    span = linalg.rank([L.coeffs for L in lines.values()])
    rep.add("span_of_P1_proper", "rank of span < 4", span < A.rank and span == core, {"rank": span})
    rep.add("chern_trivial", "all basis", all(B.chern_series(b, 3)[1:] == [A.zero()] * 3 for b in A.basis_elems()))
    ok = all(psi_apply(R, j + B.exponent, b) == psi_apply(R, j, b) for j in range(1, 5) for b in A.basis_elems())
    rep.add("psi_periodic", "period = exponent", ok)
    rep.add("psi2_V-1^1", "psi^2 fixes V-1^1", psi_apply(R, 2, e["V-1^1"]) == e["V-1^1"])
    return rep
