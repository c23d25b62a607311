"""Virtual K-theory of the weighted projective line P(1,n).

Basis y_m^a: sector 0 carries a = 0..n (relation (x-1)(x^n-1) = 0), each
twisted sector m = 1..n-1 carries a = 0..n-1 (relation x^n = 1).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import UnsupportedWeight
from ..psilambda import PsiRing, TranslationGroup
from ..report import Report
from ..scalg import Algebra, BasisLabel, Elem, LinearMap, algebra_new


@lru_cache(maxsize=None)
def untwisted_power(n: int, e: int) -> tuple[int, ...]:
    """Coordinates of x^e in Z[x^{+-1}]/((x-1)(x^n-1)) on the window 1, x, ..., x^n."""
    if 0 <= e <= n:
        v = [0] * (n + 1)
        v[e] = 1
        return tuple(v)
    if e > n:
        prev = untwisted_power(n, e - 1)
        # multiply by x, then x^(n+1) = x^n + x - 1
        v = [0] + list(prev[:n])
        top = prev[n]
        v[n] += top
        v[1] += top
        v[0] -= top
        return tuple(v)
    nxt = untwisted_power(n, e + 1)
    # multiply by x^-1 = 1 + x^(n-1) - x^n
    v = list(nxt[1:]) + [0]
    low = nxt[0]
    v[0] += low
    v[n - 1] += low
    v[n] -= low
    return tuple(v)


def _sector_dim(n, m):
    return n + 1 if m == 0 else n


def wps_basis(n: int):
    labels = []
    for m in range(n):
        for a in range(_sector_dim(n, m)):
            labels.append(BasisLabel(sector=m, exp=a, age=Fraction(0 if m == 0 else 1), name=f"y{m}^{a}"))
    return labels


class VirtualKRing:
    """Virtual K-theory of P(1,n) with its psi-ring data and helpers."""

    def __init__(self, n: int, field: int = 1):
        if not isinstance(n, int) or n < 2:
            raise UnsupportedWeight(f"weight n must be an integer >= 2, got {n!r}")
        self.n = n
        self.field = field
        basis = wps_basis(n)
        self._offset = {}
        pos = 0
        for m in range(n):
            self._offset[m] = pos
            pos += _sector_dim(n, m)
        rank = len(basis)
        sc = [[None] * rank for _ in range(rank)]
        for i, bi in enumerate(basis):
            for j, bj in enumerate(basis):
                sc[i][j] = self._star_coords(bi.sector, bi.exp, bj.sector, bj.exp, rank)
        unit = [0] * rank
        unit[0] = 1
        self.alg = algebra_new(basis, sc, unit, field, name=f"K(IP(1,{n}))")
        A = self.alg
        self.s_class = {m: (A.zero() if m == 0 else self.y(m, 1)) for m in range(n)}
        self.euler_table = {(m1, m2): self.euler_factor(m1, m2) for m1 in range(n) for m2 in range(n)}
        aug = LinearMap.from_function(A, A, self._aug_basis)
        dual = LinearMap.from_function(A, A, self._dual_basis)
        psi_maps = {k: LinearMap.from_function(A, A, lambda b, k=k: self.psi_direct(k, b))
                    for k in range(1, 2 * n + 1)}
        deltas = [self.delta(m) for m in range(n)]
        self.translation = TranslationGroup(deltas, phi0=self.phi0,
                                            sector_aug={m: (lambda x, m=m: self.sector_aug(m, x)) for m in range(n)})
        self.psi_ring = PsiRing(A, aug, psi_maps, dual, self.translation,
                                extension=self.psi_periodic, n=n, name=f"K(IP(1,{n}))")

    # coordinates ---------------------------------------------------------
    def _sector_vec(self, m, terms, rank):
        """Reduce {exponent: coeff} inside sector m to global coordinates."""
        n = self.n
        out = [0] * rank
        off = self._offset[m]
        for e, c in terms.items():
            if not c:
                continue
            if m == 0:
                for a, v in enumerate(untwisted_power(n, e)):
                    out[off + a] += c * v
            else:
                out[off + e % n] += c
        return out

    def _star_coords(self, m1, a1, m2, a2, rank):
        n = self.n
        m = (m1 + m2) % n
        s = a1 + a2
        if m1 == 0 or m2 == 0:
            terms = {s: 1}
        elif m == 0:
            terms = {s: 1, s - 1: -2, s - 2: 1}
        else:
            terms = {s: 1, s - 1: -1}
        return self._sector_vec(m, _merge(terms), rank)

    def y(self, m: int, a: int) -> Elem:
        """Class of chi_m^a for any integer a, reduced to the basis."""
        m %= self.n
        return self.alg.elem(self._sector_vec(m, {a: 1}, self.alg.rank))

    def euler_factor(self, m1: int, m2: int) -> Elem:
        n = self.n
        m = (m1 + m2) % n
        if m1 % n == 0 or m2 % n == 0:
            return self.y(m, 0)
        if m == 0:
            return self.y(0, 0) - self.y(0, -1) * 2 + self.y(0, -2)
        return self.y(m, 0) - self.y(m, -1)

    def sector_of(self, i: int) -> int:
        return self.alg.basis[i].sector

    # operations on basis -------------------------------------------------
    def _aug_basis(self, b: Elem) -> Elem:
        i = b.support()[0]
        return self.alg.unit if self.sector_of(i) == 0 else self.alg.zero()

    def _dual_basis(self, b: Elem) -> Elem:
        i = b.support()[0]
        lab = self.alg.basis[i]
        if lab.sector == 0:
            return self.y(0, -lab.exp)
        return -self.y(lab.sector, 1 - lab.exp)

    def bott_class(self, m: int, l: int) -> Elem:
        return bott_class(self, m, l)

    def psi_direct(self, k: int, x: Elem) -> Elem:
        """psi^k from the definition: ordinary psi^k times the Bott class theta^k(S*)."""
        if k == 0:
            return self._aug_linear(x)
        acc = self.alg.zero()
        for i, c in enumerate(x.coeffs):
            if c.is_zero():
                continue
            lab = self.alg.basis[i]
            m, a = lab.sector, lab.exp
            if m == 0:
                img = self.y(0, k * a)
            else:
                img = self.alg.zero()
                for t in range(k):
                    img = img + self.y(m, k * a - t)
            acc = acc + img * c
        return acc

    def _aug_linear(self, x):
        return self.alg.unit * sum((c for i, c in enumerate(x.coeffs) if self.sector_of(i) == 0), self.alg.scalar(0))

    # translation data ------------------------------------------------------
    def delta(self, m: int) -> Elem:
        if m == 0:
            return self.y(0, 0) - self.y(0, self.n)
        acc = self.alg.zero()
        for i in range(self.n):
            acc = acc + self.y(m, i)
        return acc

    def phi0(self, x: Elem):
        off = self._offset[0]
        acc = self.alg.scalar(0)
        for s in range(self.n + 1):
            acc = acc + x.coeffs[off + s] * s
        return acc

    def sector_aug(self, m: int, x: Elem):
        """Ordinary rank of the sector-m summand."""
        off = self._offset[m]
        acc = self.alg.scalar(0)
        for a in range(_sector_dim(self.n, m)):
            acc = acc + x.coeffs[off + a]
        return acc

    def sector_part(self, m: int, x: Elem) -> Elem:
        off = self._offset[m]
        c = [self.alg.scalar(0)] * self.alg.rank
        for a in range(_sector_dim(self.n, m)):
            c[off + a] = x.coeffs[off + a]
        return Elem(self.alg, tuple(c))

    def j_of(self, x: Elem, delta0_sign: int = -1) -> Elem:
        """Translation part of psi^n(x) - psi^0(x).

        x^n - 1 = -Delta_0 on the untwisted sector, so the Delta_0 term carries
        a minus sign; ``delta0_sign=+1`` gives the variant with a plus sign.
        """
        acc = self.delta(0) * (self.phi0(x) * delta0_sign)
        for m in range(1, self.n):
            acc = acc + self.delta(m) * self.sector_aug(m, x)
        return acc

    def psi_periodic(self, k: int, x: Elem, delta0_sign: int = -1) -> Elem:
        """psi^(nq+a) = psi^a + q*j, the closed form used beyond the stored tables."""
        q, a = divmod(k, self.n)
        base = self.psi_ring.aug(x) if a == 0 else self.psi_direct(a, x)
        return base + self.j_of(x, delta0_sign) * q


def _merge(terms):
    out = {}
    for e, c in terms.items():
        out[e] = out.get(e, 0) + c
    return out


def build_virtual_k(n: int, field: int = 1) -> VirtualKRing:
    return VirtualKRing(n, field)


def bott_class(K: VirtualKRing, m: int, l: int) -> Elem:
    """theta^l(S_m*) = sum_{i<l} y_m^(-i); on the untwisted sector S = 0 and the class is 1."""
    if l < 1:
        raise ValueError("Bott class index must be >= 1")
    m %= K.n
    if m == 0:
        return K.alg.unit
    acc = K.alg.zero()
    for i in range(l):
        acc = acc + K.y(m, -i)
    return acc


def periodicity_check(K: VirtualKRing, k: int, a: int, delta0_sign: int = -1) -> Report:
    """Compare psi^(nk+a) from the definition with the periodic closed form on every basis element."""
    n = K.n
    rep = Report(f"periodicity n={n}")
    if not 0 <= a < n or k < 0:
        raise ValueError("need 0 <= a < n and k >= 0")
    bad = []
    for b, lab in zip(K.alg.basis_elems(), K.alg.basis):
        lhs = K.psi_direct(n * k + a, b) if n * k + a > 0 else K.psi_ring.aug(b)
        rhs = K.psi_periodic(n * k + a, b, delta0_sign)
        if lhs != rhs:
            bad.append(lab.display())
    rep.add("psi_periodicity", f"n={n} k={k} a={a}", not bad, {"failures": bad})
    return rep


def ordinary_algebra(K: VirtualKRing) -> Algebra:
    """The same K-group with the sector-wise (non-inertial) product."""
    n = K.n
    A = K.alg
    rank = A.rank
    sc = [[None] * rank for _ in range(rank)]
    for i, bi in enumerate(A.basis):
        for j, bj in enumerate(A.basis):
            if bi.sector != bj.sector:
                sc[i][j] = [0] * rank
            else:
                sc[i][j] = K._sector_vec(bi.sector, {bi.exp + bj.exp: 1}, rank)
    unit = [0] * rank
    for m in range(n):
        unit[K._offset[m]] = 1
    return algebra_new(A.basis, sc, unit, A.N, name=f"K_ord(IP(1,{n}))")


def classical_aug(K: VirtualKRing, B: Algebra) -> LinearMap:
    """Sector-wise rank: y_m^a -> y_m^0, as a map on the ordinary algebra B."""
    def f(b):
        i = b.support()[0]
        m = B.basis[i].sector
        return B.basis_elem(K._offset[m])
    return LinearMap.from_function(B, B, f)
