"""Command-line front end: ``pslab <subcommand> ...``.

Exit status: 0 on success, 1 on a domain or hypothesis error, 2 on a usage
error (including a malformed alpha).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import asymptotics, counting, expsum, experiments, params, witness
from .errors import MalformedDecimal, PslabError
from .exactfloor import parse_alpha


def _int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _str_list(text: str) -> List[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _pair(text: str):
    try:
        from fractions import Fraction
        k, l = (float(Fraction(t)) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k,l such as 1/2,1/2; got {text!r}")
    return k, l


def _print_record(rec) -> None:
    print(f"count={rec.count}")
    print(f"leading={rec.leading:.12g}")
    print(f"ratio={rec.ratio:.12g}")


def cmd_count(args) -> int:
    a1 = parse_alpha(args.alpha1)
    a2 = parse_alpha(args.alpha2 or args.alpha1)
    _print_record(counting.count_R(args.N, a1, a2))
    return 0


def cmd_triples(args) -> int:
    alpha = parse_alpha(args.alpha)
    if args.cmd == "count3":
        rec = counting.count_N3(args.x, alpha, args.strict_upper)
    elif args.cmd == "count12":
        rec = counting.count_N12(args.x, alpha)
    else:
        rec = counting.count_NAP(args.x, alpha, args.strict_upper)
    _print_record(rec)
    return 0


def cmd_constants(args) -> int:
    a1 = parse_alpha(args.alpha)
    a2 = parse_alpha(args.alpha2) if args.alpha2 else a1
    print(f"leading_R={asymptotics.leading_constant_R(a1, a2):.15g}")
    if a2 == a1 and a1.value < 3:
        print(f"constant_N3={asymptotics.constant_N3(a1):.15g}")
        print(f"I={asymptotics.I_of_alpha(a1):.15g}")
    return 0


def cmd_conjecture(args) -> int:
    alpha = parse_alpha(args.alpha)
    print(f"{args.kind}={asymptotics.conjecture_rhs(args.kind, alpha):.15g}")
    return 0


def cmd_find_rep(args) -> int:
    a1 = parse_alpha(args.alpha1)
    a2 = parse_alpha(args.alpha2 or args.alpha1)
    if args.all:
        for r in witness.enumerate_representations(args.N, a1, a2):
            print(f"{r.n1} {r.n2}")
        return 0
    r = witness.find_representation(args.N, a1, a2, fallback=not args.no_fallback)
    print(f"n1={r.n1} n2={r.n2} verified={r.verified} via_lemma={r.via_lemma}")
    return 0


def _phase_from_args(args):
    if args.family == "model":
        return expsum.PhaseSpec.model(args.y, args.s)
    a1 = parse_alpha(args.alpha1)
    a2 = parse_alpha(args.alpha2 or args.alpha1)
    if args.family == "section3":
        return expsum.PhaseSpec.section_three(args.h1, args.h2, a1, a2, args.NX)
    return expsum.PhaseSpec.appendix(args.h1, args.h2, a1, a2, args.NX)


def cmd_expsum(args) -> int:
    if args.test == "grid":
        worst = 0.0
        for label, rep in expsum.run_acceptance_grid():
            print(f"{rep.ratio:.6g}\t{label}")
            worst = max(worst, rep.ratio)
        print(f"max_ratio={worst:.6g}")
        return 0 if worst <= args.ceiling else 1
    if args.a is None or args.b is None:
        print("pslab: usage error: --a and --b are required", file=sys.stderr)
        return 2
    if args.test == "pair":
        if args.N is None:
            print("pslab: usage error: --N is required for --test pair", file=sys.stderr)
            return 2
        rep = expsum.check_exponent_pair(args.pair, args.y, args.s, args.N, args.a, args.b)
    else:
        phase = _phase_from_args(args)
        fn = {"kl": expsum.check_kusmin_landau, "vdc": expsum.check_van_der_corput,
              "third": expsum.check_third_derivative, "sum": None}[args.test]
        if fn is None:
            s = expsum.exp_sum(phase, args.a, args.b)
            print(f"sum={s.real:.12g}{s.imag:+.12g}j abs={abs(s):.12g}")
            return 0
        rep = fn(phase, args.a, args.b)
    print(json.dumps({"test": rep.test, "sum_abs": rep.sum_abs, "bound": rep.bound,
                      "ratio": rep.ratio, "params": rep.params}))
    return 0 if rep.ratio <= args.ceiling else 1


def cmd_params(args) -> int:
    w = params.witness(args.x1, args.x2)
    print(f"X1={w.X1:.12g} X2={w.X2:.12g}")
    print(f"beta1={w.beta1:.12g} beta2={w.beta2:.12g}")
    print(f"gamma_hat0={w.gamma_hat0:.12g} gamma0={w.gamma0:.12g}")
    for name, v in w.slacks.items():
        print(f"{name}={v:.12g}")
    return 0


def _emit(rows, args, title) -> None:
    if args.out:
        experiments.emit_csv(rows, args.out)
    else:
        sys.stdout.write(experiments.csv_text(rows))
    if args.svg:
        experiments.emit_svg(rows, args.svg, title)


def cmd_figure1(args) -> int:
    rows = experiments.figure1(args.alphas, args.N, args.panel, experiments.resolve_jobs(args.jobs),
                               args.strict_upper)
    _emit(rows, args, f"figure1 panel {args.panel}")
    return 0


def cmd_figure2(args) -> int:
    if args.panel == "right":
        alphas = args.alphas or list(experiments.FIG2_RIGHT_ALPHAS)
        Ns = args.N or list(experiments.FIG2_RIGHT_N)
    else:
        alphas = args.alphas or list(experiments.FIG1_ALPHAS)
        Ns = args.N or list(experiments.FIG1_N)
    rows = experiments.figure2(alphas, Ns, experiments.resolve_jobs(args.jobs), args.strict_upper)
    _emit(rows, args, f"figure2 panel {args.panel}")
    return 0


def cmd_probe(args) -> int:
    rows = experiments.pythagoras_probe(args.x, args.kind, experiments.resolve_jobs(args.jobs),
                                        args.strict_upper)
    _emit(rows, args, f"alpha = 2 probe ({args.kind})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pslab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("count", help="representations of N as a sum of two PS elements")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--alpha1", required=True)
    s.add_argument("--alpha2")
    s.set_defaults(func=cmd_count)

    for name, helptext in (("count3", "triples with n <= x"), ("count12", "triples with l, m <= x"),
                           ("count-ap", "3-APs l < m < n <= x")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--x", type=int, required=True)
        s.add_argument("--alpha", required=True)
        s.add_argument("--strict-upper", action="store_true", help="use n < x instead of n <= x")
        s.set_defaults(func=cmd_triples)

    s = sub.add_parser("constants", help="main-term constants")
    s.add_argument("--alpha", required=True)
    s.add_argument("--alpha2")
    s.set_defaults(func=cmd_constants)

    s = sub.add_parser("conjecture", help="conjectured limit constants")
    s.add_argument("--kind", choices=["N12", "N3", "AP"], required=True)
    s.add_argument("--alpha", required=True)
    s.set_defaults(func=cmd_conjecture)

    s = sub.add_parser("find-rep", help="find a certified representation of N")
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--alpha1", required=True)
    s.add_argument("--alpha2")
    s.add_argument("--all", action="store_true", help="list every representation")
    s.add_argument("--no-fallback", action="store_true", help="skip the exhaustive phase")
    s.set_defaults(func=cmd_find_rep)

    s = sub.add_parser("expsum-check", help="exponential sums against derivative-test bounds")
    s.add_argument("--test", choices=["sum", "kl", "vdc", "third", "pair", "grid"], required=True)
    s.add_argument("--family", choices=["section3", "appendix", "model"], default="model")
    s.add_argument("--h1", type=int, default=1)
    s.add_argument("--h2", type=int, default=1)
    s.add_argument("--alpha1")
    s.add_argument("--alpha2")
    s.add_argument("--NX", type=float, default=0.0, help="N (section3) or X (appendix)")
    s.add_argument("--y", type=float, default=1.0)
    s.add_argument("--s", type=float, default=0.5)
    s.add_argument("--N", type=int, help="dyadic scale for --test pair")
    s.add_argument("--pair", type=_pair, default=(0.5, 0.5))
    s.add_argument("--a", type=float)
    s.add_argument("--b", type=float)
    s.add_argument("--ceiling", type=float, default=10.0)
    s.set_defaults(func=cmd_expsum)

    s = sub.add_parser("params-witness", help="feasible (beta1, beta2, gamma_hat0) for (x1, x2)")
    s.add_argument("--x1", type=float, required=True)
    s.add_argument("--x2", type=float, required=True)
    s.set_defaults(func=cmd_params)

    for name, func in (("figure1", cmd_figure1), ("figure2", cmd_figure2)):
        s = sub.add_parser(name, help="ratio grid against conjectured limits")
        if name == "figure1":
            s.add_argument("--alphas", type=_str_list, default=list(experiments.FIG1_ALPHAS))
            s.add_argument("--N", type=_int_list, default=list(experiments.FIG1_N))
            s.add_argument("--panel", choices=["n12", "n3"], default="n12")
        else:
            s.add_argument("--alphas", type=_str_list)
            s.add_argument("--N", type=_int_list)
            s.add_argument("--panel", choices=["left", "right"], default="left")
        s.add_argument("--jobs", type=int)
        s.add_argument("--strict-upper", action="store_true")
        s.add_argument("--out", help="CSV path (stdout when omitted)")
        s.add_argument("--svg", help="optional SVG scatter path")
        s.set_defaults(func=func)

    s = sub.add_parser("pythagoras-probe", help="alpha = 2 counts against their x log x main terms")
    s.add_argument("--x", type=_int_list, default=[1000, 2000, 5000, 10_000])
    s.add_argument("--kind", choices=["N3", "AP"], default="N3")
    s.add_argument("--jobs", type=int)
    s.add_argument("--strict-upper", action="store_true")
    s.add_argument("--out")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_probe)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedDecimal as exc:
        print(f"pslab: usage error: {exc}", file=sys.stderr)
        return 2
    except PslabError as exc:
        print(f"pslab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"pslab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
