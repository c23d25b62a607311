"""Named verification suites shared by the CLI and the test-suite."""
from __future__ import annotations

from .bgfinite import bmu2_report, build_bg
from .hkrc import (completion_report, hkrc_verify, resolution_ring_report,
                   topology_equivalence_check)
from .psilambda import enumerate_line_reps, line_report, psi_ring_check, same_orbit, translation_check
from .report import Report
from .scalg import axiom_report
from .wps import build_virtual_k, periodicity_check
from .wps.chow import build_chern_data, chern_report
from .wps.lines import P12_FAMILIES, named_line, p13_named_lines, rho_table_report
from .wps.presentation import exotic_lattice_check, presentation_check

SUITES = ("axioms", "lines", "chern", "periodicity", "completion", "hkrc", "bmu2", "all")


def natural_field(n: int, field: int = 1) -> int:
    """Smallest conductor that is a multiple of field and contains the n-th roots of unity."""
    need = 1 if n <= 2 else n
    M = field
    while M % need:
        M += field
    return M


def rank_suite(ns=(2, 3)) -> Report:
    rep = Report("ranks")
    for n in ns:
        K = build_virtual_k(n)
        rep.add("rank", f"K(IP(1,{n}))", K.alg.rank == n * n + 1, K.alg.rank)
    return rep


def axioms_suite(n: int, field: int = 1, k_max: int = 6) -> Report:
    K = build_virtual_k(n, field)
    rep = Report(f"axioms n={n}")
    rep.add("rank", f"K(IP(1,{n}))", K.alg.rank == n * n + 1, K.alg.rank)
    rep.extend(axiom_report(K.alg))
    rep.extend(psi_ring_check(K.psi_ring, k_max))
    rep.extend(translation_check(K.psi_ring, k_max=k_max))
    return rep


def bg_axioms_suite(orders=(2,), k_max: int = 4) -> Report:
    B = build_bg(list(orders))
    rep = Report(f"axioms {B.alg.name}")
    rep.add("rank", B.alg.name, B.alg.rank == len(B.group) ** 2, B.alg.rank)
    rep.extend(axiom_report(B.alg))
    rep.extend(psi_ring_check(B.psi_ring, k_max))
    return rep


def lines_suite(n: int, field: int | None = None) -> tuple[Report, list]:
    field = natural_field(n, field or 1)
    K = build_virtual_k(n, field)
    R = K.psi_ring
    rep = Report(f"lines n={n}")
    reps = enumerate_line_reps(R, n)
    expected = {2: 4, 3: 27}.get(n)
    rep.add("orbit_count", f"n={n} N={field}", expected is None or len(reps) == expected, {"count": len(reps)})
    rep.add("reps_nth_power_one", f"n={n}", all(L ** n == R.alg.unit for L in reps))
    # closure of the representatives under products modulo J
    closed = all(any(same_orbit(R, a * b, c) for c in reps) for a in reps for b in reps)
    rep.add("closed_under_product", f"n={n}", closed)
    if n == 2:
        named = {f: named_line(K, f, (0, 0)) for f in P12_FAMILIES}
    elif n == 3:
        named = p13_named_lines(K)
    else:
        named = {}
    if named:
        hits = {name: [i for i, r in enumerate(reps) if same_orbit(R, r, L)] for name, L in named.items()}
        ok = all(len(h) == 1 for h in hits.values()) and len({h[0] for h in hits.values()}) == len(reps)
        rep.add("named_families_match", f"n={n}", ok, {k: v for k, v in hits.items()})
    if n == 2:
        rep.extend(rho_table_report(K, build_chern_data(K)))
        # canonical representatives of rho_+- sit at (-1/4, -+1/4)
        from fractions import Fraction as F
        from .psilambda import canonical_rep
        q = F(1, 4)
        ok = (canonical_rep(R, named_line(K, "rho+", (1, -2))) == named_line(K, "rho+", (-q, -q))
              and canonical_rep(R, named_line(K, "rho-", (3, 5))) == named_line(K, "rho-", (-q, q)))
        rep.add("canonical_rep_rho_pm", "n=2", ok)
    rep.extend(line_report(R, reps))
    rep.extend(translation_check(R, reps))
    for pres in ([presentation_check(2, "+"), presentation_check(2, "-")] if n == 2
                 else [presentation_check(3)] if n == 3 else []):
        rep.extend(pres)
    return rep, reps


def chern_suite(n: int) -> Report:
    K = build_virtual_k(n, natural_field(n))
    cd = build_chern_data(K)
    rep = chern_report(cd, 2 * n + 2)
    if n == 2:
        rep.extend(rho_table_report(K, cd))
        rep.extend(exotic_lattice_check(2))
    return rep


def periodicity_suite(n: int, k_max: int = 3) -> Report:
    K = build_virtual_k(n)
    rep = Report(f"periodicity n={n}")
    for k in range(k_max + 1):
        for a in range(n):
            rep.extend(periodicity_check(K, k, a))
    # stored psi^(n+1) agrees with the closed form
    ok = all(K.psi_ring.psi_maps[n + 1](b) == K.psi_periodic(n + 1, b) for b in K.alg.basis_elems())
    rep.add("stored_matches_closed_form", f"n={n} k={n + 1}", ok)
    return rep


def completion_suite(n: int) -> Report:
    rep = completion_report(n)
    rep.extend(topology_equivalence_check(n))
    return rep


def hkrc_suite(n: int) -> Report:
    rep = resolution_ring_report(n)
    rep.extend(hkrc_verify(n))
    return rep


def run_suite(name: str, n: int) -> Report:
    if name == "axioms":
        rep = axioms_suite(n)
        if n == 2:
            rep.extend(bg_axioms_suite())
        return rep
    if name == "lines":
        return lines_suite(n)[0]
    if name == "chern":
        return chern_suite(n)
    if name == "periodicity":
        return periodicity_suite(n)
    if name == "completion":
        return completion_suite(n)
    if name == "hkrc":
        return hkrc_suite(n)
    if name == "bmu2":
        return bmu2_report()
    if name == "all":
        rep = Report(f"all n={n}")
        for s in SUITES[:-1]:
            rep.extend(run_suite(s, n))
        return rep
    raise ValueError(f"unknown suite {name!r}")
