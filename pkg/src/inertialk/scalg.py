"""Finite-rank commutative algebras given by structure constants.

An :class:`Algebra` is a labelled basis together with the products of all
pairs of basis vectors.  Elements are coefficient tuples over Q(zeta_N).

>>> A = algebra_new([BasisLabel(0, 0), BasisLabel(0, 1)],
...                 [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [1, 0], 1)
>>> x = A.basis_elem(1)
>>> x * x == A.one()
True
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from gmpy2 import mpq

from . import linalg
from .cyclofield import CycNum, _SCALARS, embed, euler_phi
from .errors import (
    DimensionMismatch,
    FieldTooSmall,
    NonCommutative,
    NotInvertible,
    ParentMismatch,
    UnitAxiomFailure,
)
from .report import Report


@dataclass(frozen=True)
class BasisLabel:
    sector: object = 0
    exp: object = 0
    age: Fraction = Fraction(0)
    degree: Fraction | None = None
    name: str = ""

    def display(self) -> str:
        return self.name or f"b[{self.sector},{self.exp}]"

    def to_json(self) -> dict:
        return {
            "sector": _label_json(self.sector),
            "exp": _label_json(self.exp),
            "age": str(self.age),
            "degree": None if self.degree is None else str(self.degree),
            "name": self.display(),
        }


def _label_json(v):
    if isinstance(v, tuple):
        return [_label_json(x) for x in v]
    return v


def to_scalar(x, N: int) -> CycNum:
    """Coerce ints, fractions, strings or CycNums of a dividing conductor into Q(zeta_N)."""
    if isinstance(x, CycNum):
        if x.N == N:
            return x
        if x.is_rational():
            return CycNum.rational(x.coeffs[0], N)
        return embed(x, N)
    if isinstance(x, (str,) + _SCALARS):
        return CycNum.rational(x, N)
    raise TypeError(f"cannot use {type(x).__name__} as a scalar")


class Algebra:
    """A unital commutative algebra of finite rank over Q(zeta_N).

    Build one with :func:`algebra_new`; instances should be treated as immutable.
    """

    def __init__(self, basis, sparse_sc, unit, N, name=""):
        self.basis = tuple(basis)
        self.N = N
        self.name = name
        self._sc = sparse_sc  # _sc[i][j] -> tuple of (k, CycNum)
        self._zero = CycNum.zero(N)
        self._one = CycNum.one(N)
        self.unit = Elem(self, tuple(unit))
        self._index = {(b.sector, b.exp): i for i, b in enumerate(self.basis)}

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> int:
        return self.N

    def __repr__(self):
        return f"Algebra({self.name or 'unnamed'}, rank={self.rank}, N={self.N})"

    # element construction ------------------------------------------------
    def zero(self) -> "Elem":
        return Elem(self, (self._zero,) * self.rank)

    def one(self) -> "Elem":
        return self.unit

    def basis_elem(self, i: int) -> "Elem":
        c = [self._zero] * self.rank
        c[i] = self._one
        return Elem(self, tuple(c))

    def basis_elems(self):
        return [self.basis_elem(i) for i in range(self.rank)]

    def index(self, sector, exp) -> int:
        return self._index[(sector, exp)]

    def gen(self, sector, exp) -> "Elem":
        return self.basis_elem(self.index(sector, exp))

    def elem(self, coeffs) -> "Elem":
        if len(coeffs) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coefficients, got {len(coeffs)}")
        return Elem(self, tuple(to_scalar(c, self.N) for c in coeffs))

    def from_terms(self, terms) -> "Elem":
        """Element from {(sector, exp): coeff} or an iterable of such pairs."""
        c = [self._zero] * self.rank
        items = terms.items() if isinstance(terms, dict) else terms
        for key, v in items:
            i = self.index(*key)
            c[i] = c[i] + to_scalar(v, self.N)
        return Elem(self, tuple(c))

    def scalar(self, x) -> CycNum:
        return to_scalar(x, self.N)

    def product_of_basis(self, i: int, j: int) -> "Elem":
        c = [self._zero] * self.rank
        for k, v in self._sc[i][j]:
            c[k] = v
        return Elem(self, tuple(c))

    @property
    def sc(self):
        """Dense view: sc[i][j] is the Elem b_i * b_j."""
        return [[self.product_of_basis(i, j) for j in range(self.rank)] for i in range(self.rank)]

    # linear algebra helpers ---------------------------------------------
    def mult_matrix(self, x: "Elem"):
        """Matrix of y -> x*y; column j holds x*b_j."""
        cols = [(x * self.basis_elem(j)).coeffs for j in range(self.rank)]
        return linalg.transpose(cols)

    def extend(self, M: int) -> "Algebra":
        """Base change to Q(zeta_M)."""
        if M == self.N:
            return self
        sc = [[tuple((k, embed(v, M)) for k, v in row) for row in line] for line in self._sc]
        unit = tuple(embed(c, M) for c in self.unit.coeffs)
        return Algebra(self.basis, sc, unit, M, self.name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "field": self.N,
            "basis": [b.to_json() for b in self.basis],
            "unit": [c.to_json() for c in self.unit.coeffs],
            "sc": [[[c.to_json() for c in self.product_of_basis(i, j).coeffs] for j in range(self.rank)]
                   for i in range(self.rank)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class Elem:
    """An element of an :class:`Algebra`; ``*`` is the algebra product."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: Algebra, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def _check(self, other: "Elem"):
        if other.parent is not self.parent:
            raise ParentMismatch(f"{self.parent!r} vs {other.parent!r}")

    def _lift(self, other):
        if isinstance(other, Elem):
            self._check(other)
            return other
        return self.parent.unit * other

    def __add__(self, other):
        if not isinstance(other, (Elem, CycNum, str) + _SCALARS):
            return NotImplemented
        o = self._lift(other)
        return Elem(self.parent, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (Elem, CycNum) + _SCALARS):
            return NotImplemented
        o = self._lift(other)
        return Elem(self.parent, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Elem(self.parent, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Elem):
            return alg_mul(self, other)
        if isinstance(other, (CycNum,) + _SCALARS):
            s = to_scalar(other, self.parent.N)
            return Elem(self.parent, tuple(a * s for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Elem):
            return self * alg_inv(other)
        s = to_scalar(other, self.parent.N)
        return Elem(self.parent, tuple(a / s for a in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            return alg_inv(self) ** (-k)
        result = self.parent.unit
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Elem):
            return self.parent is other.parent and self.coeffs == other.coeffs
        if isinstance(other, (CycNum,) + _SCALARS):
            return self == self.parent.unit * other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def support(self):
        return [i for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coeffs)

    def __repr__(self):
        return f"Elem({self})"

    def __str__(self):
        terms = []
        for b, c in zip(self.parent.basis, self.coeffs):
            if c.is_zero():
                continue
            if c == 1:
                terms.append(b.display())
            elif c == -1:
                terms.append("-" + b.display())
            else:
                terms.append(f"{c}*{b.display()}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> list:
        return [
            {"sector": _label_json(b.sector), "exp": _label_json(b.exp), "coeff": c.to_json()}
            for b, c in zip(self.parent.basis, self.coeffs)
            if not c.is_zero()
        ]

    def transport(self, target: Algebra) -> "Elem":
        """Same coordinates in another algebra on the same basis (possibly a larger field)."""
        if target.rank != self.parent.rank:
            raise DimensionMismatch("ranks differ")
        return Elem(target, tuple(to_scalar(c, target.N) for c in self.coeffs))


def _sparse(entry, N):
    """Normalize one structure constant (Elem, list or dict) to a sparse tuple."""
    if isinstance(entry, Elem):
        entry = entry.coeffs
    if isinstance(entry, dict):
        return tuple(sorted((k, to_scalar(v, N)) for k, v in entry.items() if v != 0))
    out = []
    for k, v in enumerate(entry):
        s = to_scalar(v, N)
        if not s.is_zero():
            out.append((k, s))
    return tuple(out)


def algebra_new(basis, sc, unit, field: int = 1, name: str = "", check_assoc: bool = False) -> Algebra:
    """Validate and build an Algebra.

    ``sc[i][j]`` is the product b_i*b_j given as a coefficient list, a dict
    {k: coeff} or an Elem. Unit and commutativity are checked eagerly.
    """
    basis = list(basis)
    r = len(basis)
    if len(sc) != r or any(len(row) != r for row in sc):
        raise DimensionMismatch(f"structure constants must be {r}x{r}")
    if len(unit) != r:
        raise DimensionMismatch(f"unit must have {r} coefficients")
    keys = [(b.sector, b.exp) for b in basis]
    if len(set(keys)) != r:
        raise DimensionMismatch("basis labels (sector, exp) must be unique")
    sparse = [[_sparse(sc[i][j], field) for j in range(r)] for i in range(r)]
    for i in range(r):
        for k, _ in [kv for j in range(r) for kv in sparse[i][j]]:
            if k >= r:
                raise DimensionMismatch(f"structure constant index {k} out of range")
    for i in range(r):
        for j in range(i + 1, r):
            if sparse[i][j] != sparse[j][i]:
                raise NonCommutative(f"b{i}*b{j} != b{j}*b{i}")
    A = Algebra(basis, sparse, tuple(to_scalar(c, field) for c in unit), field, name)
    for i in range(r):
        b = A.basis_elem(i)
        if A.unit * b != b:
            raise UnitAxiomFailure(f"unit*{basis[i].display()} != {basis[i].display()}")
    if check_assoc:
        rep = axiom_report(A)
        if not rep.ok:
            raise ValueError(f"associativity fails: {rep.failures()[0]}")
    return A


def alg_mul(x: Elem, y: Elem) -> Elem:
    if x.parent is not y.parent:
        raise ParentMismatch(f"{x.parent!r} vs {y.parent!r}")
    A = x.parent
    acc = [A._zero] * A.rank
    xs = [(i, c) for i, c in enumerate(x.coeffs) if not c.is_zero()]
    ys = [(j, c) for j, c in enumerate(y.coeffs) if not c.is_zero()]
    sc = A._sc
    for i, a in xs:
        row = sc[i]
        for j, b in ys:
            entry = row[j]
            if entry:
                ab = a * b
                for k, v in entry:
                    acc[k] = acc[k] + ab * v
    return Elem(A, tuple(acc))


def alg_inv(x: Elem) -> Elem:
    A = x.parent
    sol = linalg.solve(A.mult_matrix(x), list(A.unit.coeffs))
    if sol is None:
        raise NotInvertible(f"{x} is not invertible")
    return Elem(A, tuple(sol))


def is_invertible(x: Elem) -> bool:
    return linalg.rank(x.parent.mult_matrix(x)) == x.parent.rank


def axiom_report(A: Algebra, subject: str | None = None) -> Report:
    """Exact commutativity, unit and associativity checks on all basis pairs/triples."""
    subject = subject or A.name or "algebra"
    rep = Report(f"axioms {subject}")
    bs = A.basis_elems()
    bad = [(i, j) for i in range(A.rank) for j in range(i + 1, A.rank) if bs[i] * bs[j] != bs[j] * bs[i]]
    rep.add("commutativity", subject, not bad, {"failures": len(bad), "first": bad[:1]})
    bad = [i for i in range(A.rank) if A.unit * bs[i] != bs[i]]
    rep.add("unit", subject, not bad, {"failures": len(bad), "first": bad[:1]})
    prods = [[bs[i] * bs[j] for j in range(A.rank)] for i in range(A.rank)]
    bad = []
    for i in range(A.rank):
        for j in range(A.rank):
            for k in range(A.rank):
                if prods[i][j] * bs[k] != bs[i] * prods[j][k]:
                    bad.append((i, j, k))
    witness = {"failures": len(bad), "triples": A.rank ** 3}
    if bad:
        i, j, k = bad[0]
        witness["first"] = [A.basis[i].display(), A.basis[j].display(), A.basis[k].display()]
    rep.add("associativity", subject, not bad, witness)
    return rep


# ---------------------------------------------------------------------------
# linear maps and subspaces


class LinearMap:
    """A linear map given by the images of the domain basis."""

    def __init__(self, domain: Algebra, codomain: Algebra, images):
        images = list(images)
        if len(images) != domain.rank:
            raise DimensionMismatch("one image per basis element required")
        for im in images:
            if im.parent is not codomain:
                raise ParentMismatch("image outside codomain")
        self.domain, self.codomain, self.images = domain, codomain, images

    @classmethod
    def from_function(cls, domain, codomain, f):
        return cls(domain, codomain, [f(b) for b in domain.basis_elems()])

    @classmethod
    def identity(cls, A):
        return cls(A, A, A.basis_elems())

    def __call__(self, x: Elem) -> Elem:
        if x.parent is not self.domain:
            raise ParentMismatch("argument outside domain")
        C = self.codomain
        acc = [C._zero] * C.rank
        for c, im in zip(x.coeffs, self.images):
            if c.is_zero():
                continue
            for k, v in enumerate(im.coeffs):
                if not v.is_zero():
                    acc[k] = acc[k] + c * v
        return Elem(C, tuple(acc))

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self o other."""
        return LinearMap(other.domain, self.codomain, [self(im) for im in other.images])

    def matrix(self):
        return linalg.transpose([im.coeffs for im in self.images])

    def rank(self) -> int:
        return linalg.rank([im.coeffs for im in self.images])

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.images == other.images

    def __hash__(self):
        return hash(tuple(self.images))


class IdealSpan:
    """A subspace of an algebra stored as a row-reduced basis.

    Built from generators it is the ideal they generate; ``from_subspace``
    keeps a plain subspace (no closure under multiplication).
    """

    def __init__(self, parent: Algebra, generators, close: bool = True):
        self.parent = parent
        self.generators = list(generators)
        for g in self.generators:
            if g.parent is not parent:
                raise ParentMismatch("generator outside algebra")
        if close:
            vecs = [g * b for g in self.generators for b in parent.basis_elems()]
        else:
            vecs = self.generators
        rows, piv = linalg.rref([v.coeffs for v in vecs], parent.rank) if vecs else ([], [])
        self._rows, self._piv = rows, piv
        self.basis_of_span = [Elem(parent, tuple(r)) for r in rows]

    @classmethod
    def from_subspace(cls, parent, vectors):
        return cls(parent, vectors, close=False)

    @property
    def dim(self) -> int:
        return len(self.basis_of_span)

    def contains(self, x: Elem) -> bool:
        if not self._rows:
            return x.is_zero()
        return linalg.in_span(x.coeffs, self._rows, self._piv)

    def contains_span(self, other: "IdealSpan") -> bool:
        return all(self.contains(v) for v in other.basis_of_span)

    def transport(self, target: Algebra) -> "IdealSpan":
        return IdealSpan.from_subspace(target, [v.transport(target) for v in self.basis_of_span])

    def power(self, r: int) -> "IdealSpan":
        """Span of all r-fold products of elements of this subspace."""
        if r < 1:
            raise ValueError("power must be >= 1")
        cur = self
        for _ in range(r - 1):
            prods = [a * b for a in cur.basis_of_span for b in self.basis_of_span]
            cur = IdealSpan.from_subspace(self.parent, prods)
        return cur


def ideal_power_contained(I: IdealSpan, J: IdealSpan, r: int) -> bool:
    if I.parent is not J.parent:
        raise ParentMismatch("ideals live in different algebras")
    return J.contains_span(I.power(r))


# ---------------------------------------------------------------------------
# local factor decomposition


class LocalFactor:
    def __init__(self, idempotent: Elem, factor: Algebra, span_rows, pivots):
        self.idempotent = idempotent
        self.factor = factor
        self._rows, self._piv = span_rows, pivots
        A = idempotent.parent
        self.projection = LinearMap.from_function(A, factor, self.project)

    def project(self, x: Elem) -> Elem:
        y = x * self.idempotent
        return Elem(self.factor, tuple(y.coeffs[c] for c in self._piv))

    def include(self, z: Elem) -> Elem:
        A = self.idempotent.parent
        acc = A.zero()
        for c, row in zip(z.coeffs, self._rows):
            acc = acc + Elem(A, tuple(row)) * c
        return acc

    @property
    def rank(self):
        return self.factor.rank

    def __repr__(self):
        return f"LocalFactor(rank={self.rank}, e={self.idempotent})"


def _min_poly_of_matrix(T):
    """Monic minimal polynomial of a square matrix, low-first coefficients."""
    d = len(T)
    one = CycNum.one(T[0][0].N) if d else CycNum.one()
    ident = [[one if i == j else one * 0 for j in range(d)] for i in range(d)]
    powers = [ident]
    while True:
        P = linalg.mat_mul(powers[-1], T)
        cols = [[x for row in M for x in row] for M in powers]
        target = [x for row in P for x in row]
        sol = linalg.solve(linalg.transpose(cols), target)
        if sol is not None:
            return [-c for c in sol] + [one]
        powers.append(P)


def _sympy_field(N):
    import sympy as sp

    if N <= 2:
        return sp.QQ
    return sp.QQ.algebraic_field(sp.exp(2 * sp.pi * sp.I / N))


def _to_sympy(c: CycNum, K):
    import sympy as sp

    if K == sp.QQ:
        q = c.coeffs[0]
        return sp.QQ(int(q.numerator), int(q.denominator))
    return K.new([sp.QQ(int(q.numerator), int(q.denominator)) for q in reversed(c.coeffs)])


def _from_sympy(v, K, N) -> CycNum:
    import sympy as sp

    if K == sp.QQ:
        return CycNum.rational(mpq(int(v.numerator), int(v.denominator)), N)
    lst = list(reversed(v.to_list()))
    from .cyclofield import cyc_canonicalize

    return cyc_canonicalize(N, [mpq(int(q.numerator), int(q.denominator)) for q in lst])


def _factor(poly, N):
    """Irreducible factors of a polynomial over Q(zeta_N): list of (low-first coeffs, multiplicity)."""
    import sympy as sp

    K = _sympy_field(N)
    t = sp.Symbol("t")
    P = sp.Poly([_to_sympy(c, K) for c in reversed(poly)], t, domain=K)
    _, facs = P.factor_list()
    out = []
    for f, m in facs:
        coeffs = [_from_sympy(K.convert(c), K, N) for c in reversed(f.all_coeffs())]
        out.append((coeffs, m))
    return out


def splitting_conductor(poly, N, limit: int = 120) -> int:
    """Smallest multiple M of N such that poly splits into linear factors over Q(zeta_M)."""
    M = N
    while M <= limit:
        if euler_phi(M) >= 1:
            lifted = [embed(c, M) for c in poly]
            if all(len(f) == 2 for f, _ in _factor(lifted, M)):
                return M
        M += N
    raise FieldTooSmall(-1, "no cyclotomic splitting field found below search limit")


def roots_of(poly, N):
    """Roots with multiplicity; raises FieldTooSmall when poly does not split over Q(zeta_N)."""
    roots = []
    for f, m in _factor(poly, N):
        if len(f) > 2:
            need = splitting_conductor(poly, N)
            raise FieldTooSmall(need)
        a0, a1 = f
        roots.append((-a0 / a1, m))
    return roots


def _restricted_operator(A, rows, piv, y):
    """Matrix of z -> y*z on the subspace with rref basis rows (columns = images)."""
    cols = []
    for r in rows:
        v = (y * Elem(A, tuple(r))).coeffs
        cols.append([v[c] for c in piv])
    return linalg.transpose(cols)


def _split_block(A, e, y):
    """Split idempotent e by the eigenvalues of multiplication by y on A*e."""
    vecs = [(e * b).coeffs for b in A.basis_elems()]
    rows, piv = linalg.rref(vecs, A.rank)
    d = len(rows)
    T = _restricted_operator(A, rows, piv, y)
    mp = _min_poly_of_matrix(T)
    roots = roots_of(mp, A.N)
    if len(roots) <= 1:
        return [e]
    # generalized eigenspaces inside the block, in subspace coordinates
    spaces = []
    one = A._one
    for lam, mult in roots:
        S = [[T[i][j] - (lam if i == j else one * 0) for j in range(d)] for i in range(d)]
        P = S
        for _ in range(mult - 1):
            P = linalg.mat_mul(P, S)
        spaces.append(linalg.nullspace(P, d))
    # write e (coordinates e[piv]) as sum of its components
    e_coords = [e.coeffs[c] for c in piv]
    allvecs = [v for sp_ in spaces for v in sp_]
    sol = linalg.solve(linalg.transpose(allvecs), e_coords)
    parts, pos = [], 0
    for sp_ in spaces:
        acc = [one * 0] * d
        for v in sp_:
            coef = sol[pos]
            pos += 1
            acc = [a + coef * b for a, b in zip(acc, v)]
        full = A.zero()
        for c, r in zip(acc, rows):
            full = full + Elem(A, tuple(r)) * c
        parts.append(full)
    return parts


def _weightings(A):
    r = A.rank
    yield A.elem([i + 1 for i in range(r)])
    yield A.elem([(i + 1) ** 2 for i in range(r)])


def local_factors(A: Algebra):
    """Primitive idempotents and local factor algebras, sorted by (rank, idempotent)."""
    idems = [A.unit]
    probes = list(_weightings(A)) + A.basis_elems()
    for y in probes:
        new = []
        for e in idems:
            new.extend(_split_block(A, e, y))
        idems = new
    factors = [_make_factor(A, e) for e in idems]
    factors.sort(key=lambda f: (f.rank, f.idempotent.sort_key()))
    return factors


def _make_factor(A, e):
    vecs = [(e * b).coeffs for b in A.basis_elems()]
    rows, piv = linalg.rref(vecs, A.rank)
    elems = [Elem(A, tuple(r)) for r in rows]
    d = len(rows)
    sc = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            p = elems[i] * elems[j]
            sc[i][j] = [p.coeffs[c] for c in piv]
    unit = [e.coeffs[c] for c in piv]
    labels = [BasisLabel(sector="loc", exp=k, name=f"f{k}") for k in range(d)]
    F = algebra_new(labels, sc, unit, A.N, name=f"{A.name}*e")
    return LocalFactor(e, F, rows, piv)


def is_local(A: Algebra) -> bool:
    """True when every basis element acts with a single eigenvalue."""
    try:
        return len(local_factors(A)) == 1
    except FieldTooSmall:
        return False


def subalgebra_rank(gens, max_degree: int = 12) -> int:
    """Dimension of the unital subalgebra generated by gens (with products up to max_degree)."""
    A = gens[0].parent
    span = IdealSpan.from_subspace(A, [A.unit] + list(gens))
    frontier = list(span.basis_of_span)
    for _ in range(max_degree):
        new = [a * g for a in frontier for g in gens]
        bigger = IdealSpan.from_subspace(A, span.basis_of_span + new)
        if bigger.dim == span.dim:
            break
        span = bigger
        frontier = span.basis_of_span
    return span.dim


def integral_monomials(gens, degree):
    """All monomials of total degree <= degree in gens (exponent tuples)."""
    k = len(gens)
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(k), d):
            exps = [0] * k
            for c in combo:
                exps[c] += 1
            out.append(tuple(exps))
    return out
