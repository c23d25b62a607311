"""Augmented psi-rings and the lambda/gamma operations derived from them.

The lambda series of x is the star-exponential of
sum_{r>=1} (-1)^(r-1) psi^r(x) t^r / r, evaluated with the ring product and
truncated at t^T.
"""
from __future__ import annotations

from itertools import product as iproduct
from math import comb

from . import linalg
from .cyclofield import roots_of_unity
from .errors import FieldTooSmall, NotLambdaPositive, NotLineElement, ParentMismatch, PsiOutOfRange
from .report import Report
from .scalg import Elem, IdealSpan, LinearMap, is_invertible, local_factors, alg_inv


class TranslationGroup:
    """Square-zero ideal J with psi^l(j) = l*j, acting on line elements by translation."""

    def __init__(self, generators, phi0=None, sector_aug=None):
        self.generators = list(generators)
        self.phi0 = phi0
        self.sector_aug = sector_aug or {}

    def span(self) -> IdealSpan:
        A = self.generators[0].parent
        return IdealSpan.from_subspace(A, self.generators)

    def contains(self, x: Elem) -> bool:
        return self.span().contains(x)


class PsiRing:
    """An algebra with augmentation, Adams operations and a dual.

    psi maps are stored for k = 1..k_max; ``extension(k, x)`` handles larger k
    when installed.
    """

    def __init__(self, alg, aug: LinearMap, psi_maps: dict, dual: LinearMap,
                 translation: TranslationGroup | None = None, extension=None, n=None, name=""):
        self.alg = alg
        self.aug = aug
        self.psi_maps = dict(psi_maps)
        self.dual = dual
        self.translation = translation
        self.extension = extension
        self.n = n
        self.name = name or alg.name
        if 1 not in self.psi_maps:
            self.psi_maps[1] = LinearMap.identity(alg)

    @property
    def k_max(self) -> int:
        return max(self.psi_maps)

    def psi_map(self, k: int) -> LinearMap:
        if k in self.psi_maps:
            return self.psi_maps[k]
        if k == 0:
            return self.aug
        if self.extension is None:
            raise PsiOutOfRange(f"psi^{k} beyond stored range 1..{self.k_max} and no extension installed")
        m = LinearMap.from_function(self.alg, self.alg, lambda b: self.extension(k, b))
        self.psi_maps[k] = m
        return m

    def __repr__(self):
        return f"PsiRing({self.name}, rank={self.alg.rank})"


def psi_apply(R: PsiRing, k: int, x: Elem) -> Elem:
    if k < 0:
        raise PsiOutOfRange("psi^k needs k >= 0")
    if x.parent is not R.alg:
        raise ParentMismatch("element not in this psi-ring")
    if k == 0:
        return R.aug(x)
    return R.psi_map(k)(x)


def aug_apply(R: PsiRing, x: Elem) -> Elem:
    return R.aug(x)


def dual_apply(R: PsiRing, x: Elem) -> Elem:
    return R.dual(x)


# ---------------------------------------------------------------------------
# truncated series with coefficients in a psi-ring


class SeriesElem:
    """sum_i coeffs[i] t^i, truncated after t^T."""

    def __init__(self, parent: PsiRing, coeffs):
        self.parent = parent
        self.coeffs = list(coeffs)

    @property
    def T(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if i < len(self.coeffs) else self.parent.alg.zero()

    def __mul__(self, other: "SeriesElem") -> "SeriesElem":
        T = min(self.T, other.T)
        out = []
        for n in range(T + 1):
            acc = self.parent.alg.zero()
            for i in range(n + 1):
                a, b = self.coeffs[i], other.coeffs[n - i]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return SeriesElem(self.parent, out)

    def __add__(self, other):
        T = min(self.T, other.T)
        return SeriesElem(self.parent, [self.coeffs[i] + other.coeffs[i] for i in range(T + 1)])

    def __eq__(self, other):
        if not isinstance(other, SeriesElem):
            return NotImplemented
        T = min(self.T, other.T)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(T + 1))

    def map(self, f) -> "SeriesElem":
        return SeriesElem(self.parent, [f(c) for c in self.coeffs])

    def __repr__(self):
        return "SeriesElem(" + " + ".join(f"({c})t^{i}" for i, c in enumerate(self.coeffs)) + ")"


def series_exp(R: PsiRing, a):
    """exp of sum_{r>=1} a[r] t^r using n e_n = sum_k k a_k e_{n-k}."""
    A = R.alg
    e = [A.unit]
    T = len(a) - 1
    for n in range(1, T + 1):
        acc = A.zero()
        for k in range(1, n + 1):
            if not a[k].is_zero() and not e[n - k].is_zero():
                acc = acc + (a[k] * e[n - k]) * k
        e.append(acc * A.scalar(1) / n)
    return SeriesElem(R, e)


def lambda_series(R: PsiRing, x: Elem, T: int) -> SeriesElem:
    if T < 1:
        raise ValueError("truncation order must be >= 1")
    a = [R.alg.zero()]
    for r in range(1, T + 1):
        sign = 1 if r % 2 else -1
        a.append(psi_apply(R, r, x) * sign / r)
    return series_exp(R, a)


def substitute_t_over_1_minus_t(s: SeriesElem) -> SeriesElem:
    """Formal substitution t -> t/(1-t)."""
    A = s.parent.alg
    out = [s.coeffs[0]]
    for n in range(1, s.T + 1):
        acc = A.zero()
        for i in range(1, n + 1):
            c = s.coeffs[i]
            if not c.is_zero():
                acc = acc + c * comb(n - 1, i - 1)
        out.append(acc)
    return SeriesElem(s.parent, out)


def gamma_series(R: PsiRing, x: Elem, T: int) -> SeriesElem:
    return substitute_t_over_1_minus_t(lambda_series(R, x, T))


def lambda_op(R: PsiRing, i: int, x: Elem) -> Elem:
    if i == 0:
        return R.alg.unit
    return lambda_series(R, x, i)[i]


# ---------------------------------------------------------------------------
# line elements


def line_defects(R: PsiRing, L: Elem, bound: int):
    """Exponents l <= bound where psi^l(L) != L^l."""
    bad = []
    power = R.alg.unit
    for l in range(1, bound + 1):
        power = power * L
        if psi_apply(R, l, L) != power:
            bad.append(l)
    return bad


def is_line_element(R: PsiRing, L: Elem, n: int | None = None, bound: int | None = None) -> bool:
    """Finite line-element criterion: augmentation 1, invertible, psi^l(L) = L^l for l <= n."""
    n = n if n is not None else R.n
    bound = n if bound is None else bound
    if R.aug(L) != R.alg.unit:
        return False
    if not is_invertible(L):
        return False
    return not line_defects(R, L, bound)


def canonical_rep(R: PsiRing, L: Elem, n: int | None = None) -> Elem:
    """The J-translate of L whose n-th power is the unit.

    L^n = 1 + j with j in J, and (L - j/n)^n = 1 because J*J = 0 and L*j = j.
    """
    n = n if n is not None else R.n
    if not is_line_element(R, L, n):
        raise NotLineElement(f"{L} is not a line element")
    j = L ** n - R.alg.unit
    if R.translation is not None and not R.translation.contains(j):
        raise NotLineElement(f"L^{n} - 1 = {j} is not a translation")
    rep = L - j / n
    assert rep ** n == R.alg.unit
    return rep


def index_maps(R: PsiRing, idems, ks):
    """For each k, the map j -> i with psi^k(e_i) * e_j = e_j (k = 0 is the augmentation)."""
    out = {}
    for k in ks:
        images = [psi_apply(R, k, e) for e in idems]
        pi = []
        for ej in idems:
            hits = [i for i, im in enumerate(images) if im * ej == ej]
            others = [i for i, im in enumerate(images) if not (im * ej).is_zero()]
            if len(hits) != 1 or others != hits:
                raise ValueError("psi does not permute primitive idempotents")
            pi.append(hits[0])
        out[k] = pi
    return out


def enumerate_line_reps(R: PsiRing, n: int | None = None, bound: int | None = None):
    """All line elements with L^n = 1, one per J-orbit, sorted lexicographically.

    Such an L is a combination sum c_i e_i of the primitive idempotents with
    each c_i an n-th root of unity, because an n-th root of 1 in a local
    Artin Q-algebra is a constant.  The psi conditions become congruences on
    the exponents of the c_i.
    """
    n = n if n is not None else R.n
    bound = n if bound is None else bound
    A = R.alg
    factors = local_factors(A)
    roots = roots_of_unity(A.N, n)
    if len(roots) < n:
        raise FieldTooSmall(n, f"need conductor {n} for {n}-th roots of unity")
    # roots[k] = w^k for a primitive root w
    w = next(r for r in roots if all(r ** d != 1 for d in range(1, n)))
    powers = [w ** k for k in range(n)]
    idems = [f.idempotent for f in factors]
    s = len(idems)
    maps = index_maps(R, idems, range(0, bound + 1))
    reps = []
    for exps in iproduct(range(n), repeat=s):
        if any(exps[maps[0][j]] != 0 for j in range(s)):
            continue
        if any(exps[maps[l][j]] != (l * exps[j]) % n for l in range(1, bound + 1) for j in range(s)):
            continue
        L = A.zero()
        for e, k in zip(idems, exps):
            L = L + e * powers[k]
        if not is_line_element(R, L, n, bound):
            raise AssertionError("congruence solution failed direct line check")
        reps.append(L)
    reps.sort(key=lambda x: x.sort_key())
    return reps


def same_orbit(R: PsiRing, L1: Elem, L2: Elem) -> bool:
    return R.translation.contains(L1 - L2)


# ---------------------------------------------------------------------------
# euler classes


def lambda_degree(R: PsiRing, V: Elem, bound: int):
    """Largest d <= bound with lambda^d(V) != 0, provided all higher ones up to bound vanish."""
    s = lambda_series(R, V, bound)
    d = max((i for i in range(bound + 1) if not s[i].is_zero()), default=0)
    return d, s


def euler_class_k(R: PsiRing, V: Elem, d: int, bound: int | None = None) -> Elem:
    """sum_{i<=d} (-1)^i lambda^i(V^dagger), after checking V has lambda-degree d."""
    bound = bound if bound is not None else 3 * (R.n or 2)
    bound = max(bound, d + 1)
    s = lambda_series(R, V, bound)
    if any(not s[i].is_zero() for i in range(d + 1, bound + 1)):
        raise NotLambdaPositive(f"lambda^i({V}) nonzero above degree {d}")
    if not is_invertible(s[d]):
        raise NotLambdaPositive(f"lambda^{d}({V}) is not invertible")
    sd = lambda_series(R, dual_apply(R, V), max(d, 1))
    acc = R.alg.zero()
    for i in range(d + 1):
        acc = acc + sd[i] * (1 if i % 2 == 0 else -1)
    return acc


# ---------------------------------------------------------------------------
# checks


def psi_ring_check(R: PsiRing, k_max: int = 6, lam_trunc: int = 4, lam_j: int = 3, subject: str | None = None) -> Report:
    subject = subject or R.name
    rep = Report(f"psi-ring {subject}")
    A = R.alg
    bs = A.basis_elems()
    r = A.rank
    prods = {(i, j): bs[i] * bs[j] for i in range(r) for j in range(i, r)}

    rep.add("psi1_identity", subject, all(psi_apply(R, 1, b) == b for b in bs))
    aug_imgs = [R.aug(b) for b in bs]
    rep.add("aug_idempotent", subject, all(R.aug(a) == a for a in aug_imgs))
    bad = [(i, j) for (i, j), p in prods.items() if R.aug(p) != aug_imgs[i] * aug_imgs[j]]
    rep.add("aug_multiplicative", subject, not bad, {"failures": bad[:3]})
    rep.add("aug_unit", subject, R.aug(A.unit) == A.unit)

    for k in range(1, k_max + 1):
        imgs = [psi_apply(R, k, b) for b in bs]
        bad = [(i, j) for (i, j), p in prods.items() if psi_apply(R, k, p) != imgs[i] * imgs[j]]
        rep.add("psi_multiplicative", f"{subject} k={k}", not bad, {"failures": bad[:3]})
        rep.add("psi_unit", f"{subject} k={k}", psi_apply(R, k, A.unit) == A.unit)
        x = A.elem([i + 1 for i in range(r)])
        y = A.elem([(-1) ** i * (i + 2) for i in range(r)])
        rep.add("psi_additive", f"{subject} k={k}",
                psi_apply(R, k, x * 3 + y) == psi_apply(R, k, x) * 3 + psi_apply(R, k, y))
        rep.add("aug_after_psi", f"{subject} k={k}", all(R.aug(im) == a for im, a in zip(imgs, aug_imgs)))
        rep.add("psi_after_aug", f"{subject} k={k}", all(psi_apply(R, k, a) == a for a in aug_imgs))
        for l in range(1, k_max + 1):
            ok = all(psi_apply(R, l, im) == psi_apply(R, k * l, b) for im, b in zip(imgs, bs))
            rep.add("psi_composition", f"{subject} k={k} l={l}", ok)

    duals = [R.dual(b) for b in bs]
    rep.add("dual_involution", subject, all(R.dual(d) == b for d, b in zip(duals, bs)))
    bad = [(i, j) for (i, j), p in prods.items() if R.dual(p) != duals[i] * duals[j]]
    rep.add("dual_multiplicative", subject, not bad, {"failures": bad[:3]})
    rep.add("dual_unit", subject, R.dual(A.unit) == A.unit)
    rep.add("dual_aug", subject, all(R.aug(d) == R.dual(a) for d, a in zip(duals, aug_imgs)))
    for k in range(1, k_max + 1):
        ok = all(psi_apply(R, k, d) == R.dual(psi_apply(R, k, b)) for d, b in zip(duals, bs))
        rep.add("dual_psi", f"{subject} k={k}", ok)

    # lambda^i o psi^j = psi^j o lambda^i
    for j in range(1, lam_j + 1):
        ok = True
        for b in bs:
            left = lambda_series(R, psi_apply(R, j, b), lam_trunc)
            right = lambda_series(R, b, lam_trunc).map(lambda c: psi_apply(R, j, c))
            ok = ok and left == right
        rep.add("lambda_psi_commute", f"{subject} j={j} T={lam_trunc}", ok)
    return rep


def translation_check(R: PsiRing, lines=(), k_max: int = 6, subject: str | None = None) -> Report:
    subject = subject or R.name
    rep = Report(f"translation {subject}")
    J = R.translation
    A = R.alg
    gens = J.generators
    rep.add("J_aug_zero", subject, all(R.aug(d).is_zero() for d in gens))
    rep.add("J_square_zero", subject, all((d1 * d2).is_zero() for d1 in gens for d2 in gens))
    ok = all(b * d == R.aug(b) * d for b in A.basis_elems() for d in gens)
    rep.add("J_absorbs", subject, ok, "F*j = aug(F)*j")
    for l in range(1, k_max + 1):
        rep.add("psi_on_J", f"{subject} l={l}", all(psi_apply(R, l, d) == d * l for d in gens))
    rep.add("J_rank", subject, linalg.rank([d.coeffs for d in gens]) == len(gens), len(gens))
    for idx, L in enumerate(lines):
        free = all(is_line_element(R, L + d) and L + d != L for d in gens)
        rep.add("J_free_action", f"{subject} line#{idx}", free)
    return rep


def line_report(R: PsiRing, lines, subject: str | None = None) -> Report:
    """Dual = inverse, binomial augmentation law and lambda-positivity extras for found lines."""
    subject = subject or R.name
    rep = Report(f"lines {subject}")
    n = R.n
    for idx, L in enumerate(lines):
        inv = alg_inv(L)
        rep.add("dual_is_inverse", f"{subject} line#{idx}", R.dual(L) == inv)
        s = lambda_series(R, L, 2 * n + 2)
        rep.add("lambda_degree_one", f"{subject} line#{idx}",
                all(s[i].is_zero() for i in range(2, 2 * n + 3)) and s[1] == L)
        lam_dual = lambda_series(R, R.dual(L), 1)[1]
        rep.add("lambda_top_inverse", f"{subject} line#{idx}", alg_inv(s[1]) == lam_dual)
    return rep
