"""Command-line interface.

Commands: analyze, compare, extremal, paper-check, sweep.  Exit codes:
0 ok, 1 check failure, 2 parse error, 3 invalid channel, 4 precondition
violation.  All output is deterministic; numbers print with 12 significant
digits.
"""

import argparse
import os
import sys

import numpy as np

from .applications import fi_curve_bounds
from .channels import (
    as_channel,
    canonicalize_biso,
    format_channel,
    is_biso,
    load_channel,
    make_bec,
    make_bsc,
)
from .checks import check_ids, run_checks
from .coefficients import coefficient_report, mutual_information_grid
from .errors import (
    ChannelFormatError,
    ClassMismatchError,
    DimensionTooLargeError,
    InvalidChannelError,
    NotBisoError,
)
from .extremal import bsc_degrading_map, general_binary_dominated, match_extremal
from .orders import (
    CriterionViolation,
    InfeasibilityCertificate,
    criterion_profile,
    is_degraded,
    is_less_noisy,
    is_more_capable,
)

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_INVALID_CHANNEL = 3
EXIT_PRECONDITION = 4


def _fmt(x):
    return format(float(x), ".12g")


def _print_matrix(mat, indent="  "):
    for row in np.asarray(mat):
        print(indent + " ".join(_fmt(v) for v in row))


def _load(path):
    try:
        return load_channel(path)
    except OSError as exc:
        raise ChannelFormatError(f"{path}: {exc}") from None


# ----------------------------------------------------------------------
# analyze
# ----------------------------------------------------------------------


def cmd_analyze(args):
    ch = _load(args.channel)
    report = coefficient_report(ch)
    biso = is_biso(ch)
    print(f"channel: {args.channel}")
    print(f"outputs: {ch.n_outputs}")
    print(f"biso: {'yes' if biso else 'no'}")
    print(f"eta_kl: {_fmt(report.eta_kl)}")
    print(f"eta_tv: {_fmt(report.eta_tv)}")
    print(f"doeblin_alpha: {_fmt(report.doeblin_alpha)}")
    print(f"alpha_max: {_fmt(report.alpha_max)}")
    print(f"maximal_leakage_nats: {_fmt(report.maximal_leakage)}")
    print(f"maximal_leakage_bits: {_fmt(report.maximal_leakage_bits)}")
    print(f"capacity_bits: {_fmt(report.capacity)}")
    for kind in ("eta_kl", "alpha", "capacity"):
        match = match_extremal(ch, kind)
        print(
            f"match[{kind}]: value={_fmt(match.channel_class.value)} "
            f"bsc_p={_fmt(match.bsc_p)} bec_eps={_fmt(match.bec_eps)}"
        )
    return EXIT_OK


# ----------------------------------------------------------------------
# compare
# ----------------------------------------------------------------------


def _describe_verdict(name, verdict):
    print(f"{name}: {verdict.relation}")
    w = verdict.witness
    if w is None:
        return
    if isinstance(w, CriterionViolation):
        print(f"  violation at parameter {_fmt(w.parameter)} with value {_fmt(w.value)}")
    elif isinstance(w, InfeasibilityCertificate):
        print(f"  phase-1 residual {_fmt(w.residual)}")
        if w.guessing_x is not None:
            print(
                f"  guessing-probability refutation at bias {_fmt(w.guessing_x)} "
                f"(gap {_fmt(w.guessing_gap)})"
            )
    else:  # degrading map
        print("  degrading map:")
        _print_matrix(w.entries)


def cmd_compare(args):
    a = _load(args.channel_a)
    b = _load(args.channel_b)
    orders = ("deg", "ln", "mc") if args.order == "all" else (args.order,)
    if args.order == "ln" and not (is_biso(a) and is_biso(b)):
        print("less-noisy comparison requires BISO channels", file=sys.stderr)
        return EXIT_PRECONDITION
    for order in orders:
        if order == "deg":
            _describe_verdict("degradable A->B", is_degraded(a, b))
            _describe_verdict("degradable B->A", is_degraded(b, a))
        elif order == "ln":
            if not (is_biso(a) and is_biso(b)):
                print("less-noisy: skipped (non-BISO pair)")
                continue
            ba, bb = canonicalize_biso(a), canonicalize_biso(b)
            _describe_verdict("less-noisy A>=B", is_less_noisy(ba, bb, args.grid))
            _describe_verdict("less-noisy B>=A", is_less_noisy(bb, ba, args.grid))
        else:
            _describe_verdict("more-capable A>=B", is_more_capable(a, b, args.grid))
            _describe_verdict("more-capable B>=A", is_more_capable(b, a, args.grid))
    return EXIT_OK


# ----------------------------------------------------------------------
# extremal
# ----------------------------------------------------------------------


def cmd_extremal(args):
    ch = _load(args.channel)
    kind = {"eta": "eta_kl", "alpha": "alpha", "capacity": "capacity"}[args.kind]
    biso = is_biso(ch)
    if kind in ("eta_kl", "capacity") and not biso:
        print(f"{args.kind} extremal construction requires a BISO channel", file=sys.stderr)
        return EXIT_PRECONDITION
    match = match_extremal(ch, kind)
    print(f"kind: {args.kind}")
    print(f"class_value: {_fmt(match.channel_class.value)}")
    print(f"bsc_p: {_fmt(match.bsc_p)}")
    print(f"bec_eps: {_fmt(match.bec_eps)}")
    map_entries = None
    if kind == "alpha":
        if biso:
            dmap = bsc_degrading_map(canonicalize_biso(ch))
            map_entries = dmap.entries
            print("indicator map (rows follow the flat output layout):")
            _print_matrix(map_entries)
        else:
            target, dmap = general_binary_dominated(ch)
            map_entries = dmap.entries
            print("dominated two-output channel:")
            _print_matrix(target.rows)
            print("collapsing map:")
            _print_matrix(map_entries)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "bsc.txt"), "w", encoding="utf-8") as fh:
            fh.write(format_channel(make_bsc(match.bsc_p)))
        with open(os.path.join(args.out, "bec.txt"), "w", encoding="utf-8") as fh:
            fh.write(format_channel(make_bec(match.bec_eps)))
        if map_entries is not None:
            with open(os.path.join(args.out, "map.txt"), "w", encoding="utf-8") as fh:
                for row in map_entries:
                    fh.write(" ".join(repr(float(v)) for v in row) + "\n")
        print(f"wrote matched channels to {args.out}")
    return EXIT_OK


# ----------------------------------------------------------------------
# paper-check
# ----------------------------------------------------------------------


def cmd_paper_check(args):
    if args.list:
        for cid, title in check_ids():
            print(f"{cid}: {title}")
        return EXIT_OK
    rows = run_checks(only=args.only)
    if not rows:
        print(f"no checks match id prefix {args.only!r}", file=sys.stderr)
        return EXIT_PRECONDITION
    width = max(len(r.check_id) for r in rows)
    failures = 0
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        if not r.passed:
            failures += 1
        print(
            f"[{status}] {r.check_id:<{width}}  {r.description}: "
            f"expected {_fmt(r.expected)} +- {_fmt(r.tolerance)}, computed {_fmt(r.computed)}"
        )
    print(f"{len(rows) - failures}/{len(rows)} checks passed")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILURE


# ----------------------------------------------------------------------
# sweep
# ----------------------------------------------------------------------


def _emit_csv(lines, out):
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(args):
    files = args.channels
    if args.quantity == "criterion":
        if len(files) != 2:
            print("criterion sweep needs exactly two channel files", file=sys.stderr)
            return EXIT_PRECONDITION
        a, b = (_load(f) for f in files)
        if not (is_biso(a) and is_biso(b)):
            print("criterion sweep requires BISO channels", file=sys.stderr)
            return EXIT_PRECONDITION
        ba, bb = canonicalize_biso(a), canonicalize_biso(b)
        fwd = criterion_profile(ba, bb, args.grid)
        rev = criterion_profile(bb, ba, args.grid)
        lines = ["q,forward,reverse"]
        for q, f, r in zip(fwd.parameters, fwd.values, rev.values):
            lines.append(f"{_fmt(q)},{_fmt(f)},{_fmt(r)}")
    elif args.quantity == "fi-bounds":
        if len(files) != 1:
            print("fi-bounds sweep needs exactly one channel file", file=sys.stderr)
            return EXIT_PRECONDITION
        ch = _load(files[0])
        if not is_biso(ch):
            print("fi-bounds sweep requires a BISO channel", file=sys.stderr)
            return EXIT_PRECONDITION
        biso = canonicalize_biso(ch)
        ts = np.linspace(0.0, args.tmax, args.grid)
        lines = ["t,lower,upper"]
        for t in ts:
            pt = fi_curve_bounds(biso, float(t))
            lines.append(f"{_fmt(t)},{_fmt(pt.lower)},{_fmt(pt.upper)}")
    else:  # mi-diff
        if len(files) != 2:
            print("mi-diff sweep needs exactly two channel files", file=sys.stderr)
            return EXIT_PRECONDITION
        a, b = (_load(f) for f in files)
        xs = np.arange(1, args.grid + 1) / (args.grid + 1.0)
        mi_a = mutual_information_grid(as_channel(a), xs)
        mi_b = mutual_information_grid(as_channel(b), xs)
        lines = ["x,mi_a,mi_b,difference"]
        for x, va, vb in zip(xs, mi_a, mi_b):
            lines.append(f"{_fmt(x)},{_fmt(va)},{_fmt(vb)},{_fmt(va - vb)}")
    _emit_csv(lines, args.out)
    return EXIT_OK


# ----------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bisochan",
        description="Coefficients, partial orders, and extremal constructions "
        "for binary-input channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="print every coefficient of a channel file")
    p.add_argument("channel")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="decide the partial orders between two channels")
    p.add_argument("channel_a")
    p.add_argument("channel_b")
    p.add_argument("--order", choices=("deg", "ln", "mc", "all"), default="all")
    p.add_argument("--grid", type=int, default=999)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("extremal", help="construct the matched BSC/BEC representatives")
    p.add_argument("channel")
    p.add_argument("--kind", choices=("eta", "alpha", "capacity"), required=True)
    p.add_argument("--out", default=None, help="directory for the matched channel files")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("paper-check", help="replay the reference-result regression suite")
    p.add_argument("--list", action="store_true", help="list check ids without running")
    p.add_argument("--only", default=None, help="run only checks whose id starts with this")
    p.set_defaults(func=cmd_paper_check)

    p = sub.add_parser("sweep", help="emit CSV sweeps of comparison quantities")
    p.add_argument("--quantity", choices=("criterion", "fi-bounds", "mi-diff"), required=True)
    p.add_argument("channels", nargs="+")
    p.add_argument("--grid", type=int, default=999)
    p.add_argument("--tmax", type=float, default=1.2)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ChannelFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except InvalidChannelError as exc:
        print(f"invalid channel: {exc}", file=sys.stderr)
        return EXIT_INVALID_CHANNEL
    except (NotBisoError, ClassMismatchError, DimensionTooLargeError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
