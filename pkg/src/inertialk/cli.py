"""Command-line interface.

Exit status: 0 when every requested check passes, 1 on a failed check,
2 on bad flags.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import FieldTooSmall, InertialKError
from .report import Report
from .suites import SUITES, lines_suite, natural_field, run_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _common(p, n=True):
    if n:
        p.add_argument("--n", type=int, default=2, help="weight n of P(1,n) (default 2)")
    p.add_argument("--field", type=int, default=1, help="conductor N of the coefficient field Q(zeta_N)")
    p.add_argument("--emit", choices=("json", "text"), default="text")
    p.add_argument("--trunc", type=int, default=None, help="series truncation order (default 2n+2)")


def build_parser():
    ap = _Parser(prog="inertialk", description="Inertial K-theory and Chow rings of P(1,n) and BG.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in [("ring", "virtual K-theory structure constants"),
                        ("chow", "virtual Chow ring and Chern character"),
                        ("chern", "inertial Chern classes and their checks"),
                        ("psi", "inertial Adams operations and psi-ring checks"),
                        ("lines", "J-orbit representatives of line elements"),
                        ("hkrc", "isomorphism with the K-theory of the crepant resolution")]:
        _common(sub.add_parser(name, help=help_))
    p = sub.add_parser("bg", help="inertial K-theory of BG, G finite abelian")
    _common(p, n=False)
    p.add_argument("--orders", type=int, nargs="+", default=[2])
    p = sub.add_parser("verify", help="run a verification suite")
    _common(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    return ap


def _validate(args):
    if args.command != "bg" and args.n < 2:
        raise _FlagError("--n must be at least 2")
    if args.command == "hkrc" and args.n not in (2, 3):
        raise _FlagError("hkrc is available for n = 2 and n = 3")
    if args.field < 1:
        raise _FlagError("--field must be a positive conductor")
    if args.trunc is not None and args.trunc < 1:
        raise _FlagError("--trunc must be positive")
    if args.command == "bg" and any(o < 2 for o in args.orders):
        raise _FlagError("--orders entries must be at least 2")
    if args.command == "lines" and args.n > 2 and args.field % args.n:
        raise _FlagError(f"line enumeration for n={args.n} needs --field divisible by {args.n}")


class _FlagError(Exception):
    pass


def _emit(args, report: Report, data=None, text=None):
    if args.emit == "json":
        out = {"command": args.command, "report": report.rows}
        if data is not None:
            out["data"] = data
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        if text:
            print(text)
        print(report.to_text())
    return 0 if report.ok else 1


def _table_text(A, title):
    names = [b.display() for b in A.basis]
    w = max(len(x) for x in names)
    lines = [title]
    for i, a in enumerate(names):
        for j in range(i, len(names)):
            lines.append(f"{a:>{w}} * {names[j]:<{w}} = {A.product_of_basis(i, j)}")
    return "\n".join(lines)


def cmd_ring(args):
    from .scalg import axiom_report
    from .wps import build_virtual_k

    K = build_virtual_k(args.n, args.field)
    rep = axiom_report(K.alg)
    rep.add("rank", K.alg.name, K.alg.rank == args.n ** 2 + 1, K.alg.rank)
    return _emit(args, rep, K.alg.to_json(), _table_text(K.alg, f"{K.alg.name}, rank {K.alg.rank}"))


def cmd_chow(args):
    from .scalg import axiom_report
    from .wps import build_virtual_k
    from .wps.chow import build_chern_data

    K = build_virtual_k(args.n, args.field)
    cd = build_chern_data(K)
    rep = axiom_report(cd.chow)
    bs = K.alg.basis_elems()
    ok = all(cd.ch_map(a * b) == cd.ch_map(a) * cd.ch_map(b) for a in bs for b in bs)
    rep.add("ch_homomorphism", f"n={args.n}", ok)
    ch = {lab.display(): cd.ch_map(b).to_json() for lab, b in zip(K.alg.basis, bs)}
    text = _table_text(cd.chow, cd.chow.name) + "\nChern character:\n" + "\n".join(
        f"  {lab.display()} -> {cd.ch_map(b)}" for lab, b in zip(K.alg.basis, bs))
    return _emit(args, rep, {"chow": cd.chow.to_json(), "ch": ch}, text)


def cmd_chern(args):
    from .wps import build_virtual_k
    from .wps.chow import build_chern_data, chern_report, chern_series

    K = build_virtual_k(args.n, args.field)
    cd = build_chern_data(K)
    T = args.trunc or 2 * args.n + 2
    rep = chern_report(cd, T)
    data = {lab.display(): [c.to_json() for c in chern_series(cd, b, T)]
            for lab, b in zip(K.alg.basis, K.alg.basis_elems())}
    text = "\n".join(f"c_t({lab.display()}) = 1 + t*({chern_series(cd, b, 1)[1]})"
                     for lab, b in zip(K.alg.basis, K.alg.basis_elems()))
    return _emit(args, rep, data, text)


def cmd_psi(args):
    from .psilambda import psi_apply, psi_ring_check
    from .wps import build_virtual_k

    K = build_virtual_k(args.n, args.field)
    R = K.psi_ring
    kmax = args.trunc or 6
    rep = psi_ring_check(R, kmax)
    data, lines = {}, []
    for k in range(0, kmax + 1):
        row = {lab.display(): psi_apply(R, k, b).to_json() for lab, b in zip(K.alg.basis, K.alg.basis_elems())}
        data[str(k)] = row
        for lab, b in zip(K.alg.basis, K.alg.basis_elems()):
            lines.append(f"psi^{k}({lab.display()}) = {psi_apply(R, k, b)}")
    return _emit(args, rep, data, "\n".join(lines))


def cmd_lines(args):
    rep, reps = lines_suite(args.n, args.field)
    text = f"{len(reps)} orbit representatives:\n" + "\n".join(f"  {L}" for L in reps)
    return _emit(args, rep, [L.to_json() for L in reps], text)


def cmd_bg(args):
    from .bgfinite import bmu2_report
    from .suites import bg_axioms_suite

    rep = bg_axioms_suite(args.orders, 4)
    if args.orders == [2]:
        rep.extend(bmu2_report(args.trunc or 6))
    return _emit(args, rep)


def cmd_hkrc(args):
    from .suites import hkrc_suite

    rep = hkrc_suite(args.n)
    return _emit(args, rep)


def cmd_verify(args):
    rep = run_suite(args.suite, args.n)
    return _emit(args, rep)


COMMANDS = {"ring": cmd_ring, "chow": cmd_chow, "chern": cmd_chern, "psi": cmd_psi, "lines": cmd_lines,
            "bg": cmd_bg, "hkrc": cmd_hkrc, "verify": cmd_verify}


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(args)
    except _FlagError as exc:
        print(f"inertialk: error: {exc}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except FieldTooSmall as exc:
        print(f"inertialk: error: {exc} (try --field {exc.required})", file=sys.stderr)
        return 2
    except InertialKError as exc:
        print(f"inertialk: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
