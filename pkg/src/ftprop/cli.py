"""Command-line front end.

Every number printed here comes from the library functions; the CLI only
formats. Exit codes: 0 success, 1 domain/validation error, 2 usage error.
"""

import argparse
import json
import sys

from . import oracle, pooling, transform
from .errors import FtpropError

HALF_PI = transform.HALF_PI


def _fmt(value, prec):
    return f"{value:.{prec}f}"


def _n_label(n):
    return str(int(n)) if float(n).is_integer() else format(n, "g")


def _parse_n_list(text):
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n list {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("n list must be nonempty")
    return values


def _add_precision(parser):
    def precision(text):
        k = int(text)
        if not 1 <= k <= 17:
            raise argparse.ArgumentTypeError("precision must be in [1, 17]")
        return k

    parser.add_argument("--precision", type=precision, default=6,
                        help="decimal places for numeric output (default 6)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ftprop",
        description="Freeman-Tukey double arcsine toolkit for proportions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tr = sub.add_parser("transform", help="forward double arcsine transform")
    p_tr.add_argument("--events", type=int)
    p_tr.add_argument("--size", type=int)
    p_tr.add_argument("--p", type=float)
    p_tr.add_argument("--n", type=float)
    _add_precision(p_tr)

    p_inv = sub.add_parser("inverse", help="inverse transform")
    p_inv.add_argument("--theta", type=float, required=True)
    p_inv.add_argument("--n", type=float, required=True)
    mode = p_inv.add_mutually_exclusive_group()
    mode.add_argument("--raw", action="store_true",
                      help="raw closed-form inverse, no domain clamping")
    mode.add_argument("--clamped", action="store_true",
                      help="clamped inverse (default)")
    _add_precision(p_inv)

    p_pool = sub.add_parser("pool", help="pool a CSV of studies")
    p_pool.add_argument("--input", default="-", help="CSV file or - for stdin")
    p_pool.add_argument("--method", choices=["fixed", "unweighted"],
                        default="fixed")
    p_pool.add_argument("--format", choices=["json", "csv"], default="json")
    _add_precision(p_pool)

    p_mpe = sub.add_parser("mpe", help="maximum percent error at a sample size")
    p_mpe.add_argument("--n", type=float, required=True)
    _add_precision(p_mpe)

    p_ss = sub.add_parser("samplesize",
                          help="sample size achieving a target accuracy")
    p_ss.add_argument("--epsilon", type=float, required=True)
    _add_precision(p_ss)

    p_dom = sub.add_parser("domain", help="attainable transform interval")
    p_dom.add_argument("--n", type=float, required=True)
    _add_precision(p_dom)

    p_cur = sub.add_parser("curves", help="emit figure data as CSV")
    p_cur.add_argument("--figure", choices=["forward", "inverse"],
                       required=True)
    p_cur.add_argument("--n", type=_parse_n_list, required=True,
                       metavar="LIST", help="comma-separated sample sizes")
    p_cur.add_argument("--points", type=int, default=101)
    p_cur.add_argument("--limit", action="store_true",
                       help="include the large-sample limiting curve")
    _add_precision(p_cur)

    return parser


def _cmd_transform(args, parser, out):
    by_counts = args.events is not None or args.size is not None
    by_prop = args.p is not None or args.n is not None
    if by_counts == by_prop:
        parser.error("give either --events/--size or --p/--n")
    if by_counts:
        if args.events is None or args.size is None:
            parser.error("--events and --size go together")
        record = transform.StudyRecord("cli", args.events, args.size)
        theta = transform.ft_transform_counts(record)
    else:
        if args.p is None or args.n is None:
            parser.error("--p and --n go together")
        theta = transform.ft_transform(args.p, args.n)
    print(f"theta={_fmt(theta, args.precision)}", file=out)


def _cmd_inverse(args, out):
    if args.raw:
        p = transform.ft_inverse_raw(args.theta, args.n)
    else:
        p = transform.ft_inverse_clamped(args.theta, args.n)
    print(f"p={_fmt(p, args.precision)}", file=out)


def _cmd_pool(args, out):
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    study_set = pooling.parse_studies(text)
    method = "fixed_effect" if args.method == "fixed" else "unweighted"
    result = pooling.pool(study_set, method)
    k = args.precision
    if args.format == "json":
        payload = {
            "pooled_theta": round(result.pooled_theta, k),
            "effective_n": round(result.effective_n, k),
            "pooled_proportion": round(result.pooled_proportion, k),
            "method": result.method,
            "per_study": [
                {"study_id": sid, "theta": round(t, k), "weight": round(w, k)}
                for sid, t, w in result.per_study
            ],
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        print("id,n,theta,weight,proportion", file=out)
        for study, (sid, theta, weight) in zip(study_set.studies,
                                               result.per_study):
            print(",".join([sid, str(study.size), _fmt(theta, k),
                            _fmt(weight, k), _fmt(study.proportion, k)]),
                  file=out)
        print(",".join(["POOLED", _fmt(result.effective_n, k),
                        _fmt(result.pooled_theta, k), _fmt(1.0, k),
                        _fmt(result.pooled_proportion, k)]), file=out)


def _cmd_mpe(args, out):
    value = transform.mpe(args.n)
    print(f"mpe={_fmt(value, args.precision)}", file=out)
    print(f"rounded={value:.4f}", file=out)
    print(f"percent={100.0 * value:.1f}%", file=out)


def _cmd_samplesize(args, out):
    n = transform.sample_size_for_mpe(args.epsilon)
    n_real = transform.sample_size_real(args.epsilon)
    print(f"n={n}", file=out)
    print(f"n_real={_fmt(n_real, args.precision)}", file=out)


def _cmd_domain(args, out):
    dom = transform.theta_domain(args.n)
    k = args.precision
    print(f"[{_fmt(dom.lower, k)}, {_fmt(dom.upper, k)}]", file=out)


def _forward_curves(n_values, points, include_limit, prec, out):
    if points < 2:
        raise FtpropError(f"points must be >= 2, got {points}")
    header = ["p"] + [f"theta_n{_n_label(n)}" for n in n_values]
    if include_limit:
        header.append("theta_limit")
    print(",".join(header), file=out)
    step = 1.0 / (points - 1)
    for i in range(points):
        p = 1.0 if i == points - 1 else i * step
        cells = [_fmt(p, prec)]
        cells += [_fmt(transform.ft_transform(p, n), prec) for n in n_values]
        if include_limit:
            cells.append(_fmt(transform.asin_sqrt_limit(p), prec))
        print(",".join(cells), file=out)


def _inverse_curves(n_values, points, include_limit, prec, out):
    if points < 2:
        raise FtpropError(f"points must be >= 2, got {points}")
    header = ["theta"]
    header += [f"pinv_raw_n{_n_label(n)}" for n in n_values]
    header += [f"pinv_clamped_n{_n_label(n)}" for n in n_values]
    if include_limit:
        header.append("p_limit")
    print(",".join(header), file=out)
    # inset half a step so the grid never touches the singular endpoints
    step = HALF_PI / points
    for i in range(points):
        theta = (i + 0.5) * step
        cells = [_fmt(theta, prec)]
        for n in n_values:
            try:
                cells.append(_fmt(transform.ft_inverse_raw(theta, n), prec))
            except FtpropError:
                cells.append("NA")
        for n in n_values:
            cells.append(_fmt(transform.ft_inverse_clamped(theta, n), prec))
        if include_limit:
            cells.append(_fmt(transform.limit_inverse(theta), prec))
        print(",".join(cells), file=out)


def _cmd_curves(args, out):
    if args.figure == "forward":
        _forward_curves(args.n, args.points, args.limit, args.precision, out)
    else:
        _inverse_curves(args.n, args.points, args.limit, args.precision, out)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "transform":
            _cmd_transform(args, parser, out)
        elif args.command == "inverse":
            _cmd_inverse(args, out)
        elif args.command == "pool":
            _cmd_pool(args, out)
        elif args.command == "mpe":
            _cmd_mpe(args, out)
        elif args.command == "samplesize":
            _cmd_samplesize(args, out)
        elif args.command == "domain":
            _cmd_domain(args, out)
        elif args.command == "curves":
            _cmd_curves(args, out)
    except FtpropError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
