"""Exact arithmetic in Q and in the cyclotomic fields Q(zeta_N).

A :class:`CycNum` is stored in the power basis of Q[z]/Phi_N(z), so equal
numbers always have equal coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from .errors import ConductorMismatch, DivisionByZero, NonDivisibleConductor

_MPQ = type(mpq(0))
_SCALARS = (int, Fraction, _MPQ)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod_monic(num, den):
    """Remainder of integer polynomial division by a monic divisor (low-first lists)."""
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    return num[:d] if d else []


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    # z^n - 1 = prod_{d | n} Phi_d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _exact_quotient(poly, cyclotomic_poly(d))
    return tuple(poly)


def _exact_quotient(num, den):
    num = list(num)
    d = len(den) - 1
    out = [0] * (len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        out[i - d] = c
        if c:
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    assert not any(num), "non-exact cyclotomic division"
    return out


def _as_mpq(x) -> mpq:
    if isinstance(x, str):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        raise TypeError("floating-point values are not accepted")
    return mpq(x)


@lru_cache(maxsize=None)
def _reduction_table(n: int, length: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds z^k reduced modulo Phi_n, for k < length."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    for k in range(length):
        mono = [0] * (k + 1)
        mono[k] = 1
        red = _poly_divmod_monic(mono, phi) if k >= deg else mono + [0] * (deg - k - 1)
        rows.append(tuple(red[:deg]) + (0,) * (deg - len(red)))
    return tuple(rows)


class CycNum:
    """An element of Q(zeta_N) in the power basis modulo the N-th cyclotomic polynomial."""

    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, N: int, coeffs):
        # tuples of mpq of length phi(N) are taken as already reduced
        if type(coeffs) is not tuple or len(coeffs) != euler_phi(N) or not all(type(c) is _MPQ for c in coeffs):
            coeffs = cyc_canonicalize(N, coeffs).coeffs
        self.N = N
        self.coeffs = coeffs
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, x, N: int = 1) -> "CycNum":
        deg = euler_phi(N)
        return cls(N, (_as_mpq(x),) + (mpq(0),) * (deg - 1))

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycNum":
        """zeta_N ** k."""
        coeffs = [0] * N
        coeffs[k % N] = 1
        return cyc_canonicalize(N, coeffs)

    @classmethod
    def zero(cls, N: int = 1) -> "CycNum":
        return cls.rational(0, N)

    @classmethod
    def one(cls, N: int = 1) -> "CycNum":
        return cls.rational(1, N)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        c = self.coeffs[0]
        return Fraction(int(c.numerator), int(c.denominator))

    # coercion ---------------------------------------------------------------
    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.N == self.N:
                return other
            if other.is_rational() and (other.N <= 2 or self.N <= 2):
                return CycNum.rational(other.coeffs[0], self.N)
            raise ConductorMismatch(self.N, other.N)
        return CycNum.rational(other, self.N)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (CycNum,) + _SCALARS):
            return NotImplemented
        o = self._coerce(other)
        return CycNum(self.N, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.N, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (CycNum,) + _SCALARS):
            return NotImplemented
        o = self._coerce(other)
        return CycNum(self.N, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CycNum):
            o = self._coerce(other)
        elif isinstance(other, _SCALARS):
            s = _as_mpq(other)
            return CycNum(self.N, tuple(a * s for a in self.coeffs))
        else:
            return NotImplemented
        if o.is_rational():
            s = o.coeffs[0]
            return CycNum(self.N, tuple(a * s for a in self.coeffs))
        if self.is_rational():
            s = self.coeffs[0]
            return CycNum(self.N, tuple(s * b for b in o.coeffs))
        a, b = self.coeffs, o.coeffs
        deg = len(a)
        prod = [mpq(0)] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _reduction_table(self.N, 2 * deg - 1)
        out = [mpq(0)] * deg
        for k, c in enumerate(prod):
            if c:
                for j, r in enumerate(table[k]):
                    if r:
                        out[j] += c * r
        return CycNum(self.N, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CycNum):
            return self * cyc_inv(self._coerce(other))
        s = _as_mpq(other)
        if s == 0:
            raise DivisionByZero("division by zero in Q(zeta_N)")
        return CycNum(self.N, tuple(a / s for a in self.coeffs))

    def __rtruediv__(self, other):
        return cyc_inv(self) * other

    def __pow__(self, k: int):
        if k < 0:
            return cyc_inv(self) ** (-k)
        result = CycNum.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "CycNum":
        """Image under zeta -> zeta^(N-1)."""
        return _substitute_power(self, self.N - 1, self.N)

    # comparison ---------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.N != self.N:
                if self.is_rational() and other.is_rational():
                    return self.coeffs[0] == other.coeffs[0]
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.N, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self):
        return tuple(self.coeffs)

    def __repr__(self):
        return f"CycNum({self})"

    def __str__(self):
        if self.is_rational():
            return _fmt(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self.N}" if k == 1 else f"z{self.N}^{k}")
            if not mono:
                terms.append(_fmt(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_fmt(c)}*{mono}")
        return "(" + " + ".join(terms).replace("+ -", "- ") + ")"

    # serialization -----------------------------------------------------------
    def to_json(self) -> dict:
        return {"N": self.N, "c": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CycNum":
        return cyc_canonicalize(int(data["N"]), [mpq(c) for c in data["c"]])


def _fmt(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cyc_canonicalize(N: int, coeffs) -> CycNum:
    """Reduce sum c_k z^k modulo Phi_N.

    ``coeffs`` may be longer than phi(N); it is reduced with z^N = 1 first.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"conductor must be a positive integer, got {N!r}")
    folded = [mpq(0)] * N
    for k, c in enumerate(coeffs):
        folded[k % N] += _as_mpq(c)
    table = _reduction_table(N, N)
    deg = euler_phi(N)
    out = [mpq(0)] * deg
    for k, c in enumerate(folded):
        if c:
            for j, r in enumerate(table[k]):
                if r:
                    out[j] += c * r
    return CycNum(N, tuple(out))


def _substitute_power(x: CycNum, e: int, M: int) -> CycNum:
    """Evaluate x's polynomial at z^e inside Q(zeta_M)."""
    big = [mpq(0)] * M
    for k, c in enumerate(x.coeffs):
        if c:
            big[(k * e) % M] += c
    return cyc_canonicalize(M, big)


def cyc_inv(x: CycNum) -> CycNum:
    """Inverse via the extended Euclidean algorithm against Phi_N."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero in Q(zeta_N)")
    if x.is_rational():
        return CycNum(x.N, (1 / x.coeffs[0],) + x.coeffs[1:])
    phi = [mpq(c) for c in cyclotomic_poly(x.N)]
    a = _trim(list(x.coeffs))
    # invariant: r_i = s_i * a (mod phi)
    r0, r1 = phi, a
    s0, s1 = [mpq(0)], [mpq(1)]
    while len(r1) > 1 or r1[0] == 0:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        if len(r1) == 1 and r1[0] == 0:
            raise DivisionByZero("element is a zero divisor modulo Phi_N")
    c = r1[0]
    return cyc_canonicalize(x.N, [v / c for v in s1])


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_divmod(num, den):
    num = list(num)
    den = _trim(list(den))
    lead = den[-1]
    dq = len(num) - len(den)
    if dq < 0:
        return [mpq(0)], _trim(num)
    q = [mpq(0)] * (dq + 1)
    for i in range(dq, -1, -1):
        c = num[i + len(den) - 1] / lead
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return q, _trim(num[: len(den) - 1] or [mpq(0)])


def embed(x: CycNum, M: int) -> CycNum:
    """Canonical inclusion Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
    if M < 1 or M % x.N:
        raise NonDivisibleConductor(x.N, M)
    if M == x.N:
        return x
    return _substitute_power(x, M // x.N, M)


def common_conductor(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def roots_of_unity(N: int, order: int) -> list[CycNum]:
    """All x in Q(zeta_N) with x**order == 1, ordered by exponent of a generator."""
    full = N if N % 2 == 0 else 2 * N
    out = []
    for k in range(full):
        # (zeta_full^k)^order == 1
        if (k * order) % full == 0:
            out.append(CycNum.one(N) if k == 0 else _root(full, k, N))
    return out


def _root(full: int, k: int, N: int) -> CycNum:
    # zeta_full^k expressed in Q(zeta_N); full is N or 2N with N odd, zeta_2N = -zeta_N^((N+1)/2)
    if full == N:
        return CycNum.zeta(N, k)
    base = -CycNum.zeta(N, (N + 1) // 2)
    return base ** k


def has_primitive_root(N: int, order: int) -> bool:
    return len(roots_of_unity(N, order)) == order
