"""Command-line front end: ``qbound <subcommand> [flags]``.

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import asymptotics, certificates, enum_lp, formats, kraw, mixed

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _floor(v: Fraction) -> int:
    return math.floor(v)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True)
    else:
        out = "\n".join(text_lines)
    print(out)


def _cert_output(args, cert: certificates.DualCertificate, extra: Sequence[str] = ()) -> None:
    if args.out:
        formats.emit_certificate(cert, args.out)
    lines = [
        f"{cert.bound_on} <= {_floor(cert.bound)}",
        f"bound = {formats.rational_str(cert.bound)} (argmax j = {cert.argmax_j})",
        *extra,
    ]
    _emit(args, lines, formats.certificate_to_dict(cert))


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required flag(s): {' '.join(missing)}")


def _check_nw(n: int, w: int) -> None:
    if n < 1:
        raise UsageError(f"--n must be >= 1, got {n}")
    if not 1 <= w <= n:
        raise UsageError(f"--w must lie in [1, n], got {w}")


def cmd_singleton(args) -> int:
    _need(args, "n", "w")
    _check_nw(args.n, args.w)
    if 2 * args.w > args.n + 2:
        raise UsageError("Singleton certificate needs w <= (n+2)/2")
    _cert_output(args, certificates.singleton_certificate(args.n, args.w))
    return EXIT_OK


def cmd_hamming(args) -> int:
    _need(args, "n", "w")
    _check_nw(args.n, args.w)
    if args.w < 3 or args.w % 2 == 0:
        raise UsageError("Hamming certificate needs odd w >= 3")
    _cert_output(args, certificates.hamming_certificate(args.n, args.w))
    return EXIT_OK


def cmd_lp1_binary(args) -> int:
    _need(args, "n", "w")
    _check_nw(args.n, args.w)
    cert = certificates.first_lp_binary_certificate(args.n, args.w)
    info = cert.info
    extra = [f"t = {info['t']} (prescribed {info['t_prescribed']}), a = {formats.rational_str(info['a'])}"]
    _cert_output(args, cert, extra)
    return EXIT_OK


def _vec(v) -> list[str]:
    return [formats.rational_str(x) for x in v]


def cmd_lp(args) -> int:
    _need(args, "n", "w")
    n, w = args.n, args.w
    if n < 1 or not 1 <= w <= n + 1:
        raise UsageError("need n >= 1 and 1 <= w <= n+1")
    if args.K is not None:
        if args.K < 1:
            raise UsageError("--K must be >= 1")
        res = enum_lp.lp_feasible(n, args.K, w)
        ok = res.verify()
        payload = {"n": n, "w": w, "K": args.K, "feasible": res.feasible, "verified": ok}
        if res.feasible:
            pair = res.enumerators()
            payload.update(B=_vec(pair.B), Bperp=_vec(pair.Bperp))
            lines = [f"feasible: K = {args.K}", "B = " + " ".join(_vec(pair.B)),
                     "Bperp = " + " ".join(_vec(pair.Bperp))]
        else:
            payload["farkas"] = _vec(res.farkas)
            lines = [f"infeasible: K = {args.K}"]
        lines.append("witness verified" if ok else "WITNESS CHECK FAILED")
        _emit(args, lines, payload)
        return EXIT_OK if ok else EXIT_FAIL
    kmax = enum_lp.lp_max_K(n, w)
    payload = {"n": n, "w": w, "K_max": kmax}
    lines = [f"K_max = {kmax}"]
    ok = True
    if kmax:
        res = enum_lp.lp_feasible(n, kmax, w)
        ok = res.verify()
        pair = res.enumerators()
        payload.update(B=_vec(pair.B), Bperp=_vec(pair.Bperp), verified=ok)
        lines += ["B = " + " ".join(_vec(pair.B)), "Bperp = " + " ".join(_vec(pair.Bperp)),
                  "witness verified" if ok else "WITNESS CHECK FAILED"]
    _emit(args, lines, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cert(args) -> int:
    bound = formats.verify_certificate(args.path)
    with open(args.path) as fh:
        bound_on = "K" if json.load(fh)["q"] == 4 else "S"
    _emit(args, [f"bound = {formats.rational_str(bound)}", f"{bound_on} <= {_floor(bound)}"],
          {"bound": formats.rational_str(bound), "bound_on": bound_on})
    return EXIT_OK


def cmd_mixed(args) -> int:
    _need(args, "l", "n", "k")
    if args.which == "plotkin":
        d = mixed.mixed_plotkin(args.l, args.n, args.k)
        _emit(args, [f"d <= {formats.rational_str(d)} (floor {_floor(d)})"],
              {"d_bound": formats.rational_str(d)})
    else:
        d = mixed.mixed_hamming_max_d(args.l, args.n, args.k)
        _emit(args, [f"d <= {d}"], {"d_max": d})
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    _need(args, "n", "k")
    k1 = args.k1 or 0
    if args.which == "plotkin":
        d = mixed.stabilizer_plotkin(args.n, args.k, k1)
        _emit(args, [f"d <= {formats.rational_str(d)} (floor {_floor(d)})"],
              {"d_bound": formats.rational_str(d)})
    else:
        res = mixed.stabilizer_hamming(args.n, args.k, k1)
        lines = [f"d <= {res.composed}"]
        if not res.agree:
            lines.append(f"looser right-hand side 2^(2k0+3k1) gives d <= {res.loose}")
        _emit(args, lines, {"d_max": res.composed, "d_max_loose": res.loose})
    return EXIT_OK


def cmd_curve(args) -> int:
    lo = 0.0 if args.delta_min is None else args.delta_min
    if args.delta_max is None or args.step is None:
        raise UsageError("curve needs --delta-max and --step")
    if args.step <= 0 or args.delta_max < lo:
        raise UsageError("empty delta range or non-positive step")
    try:
        points = asymptotics.tabulate_curve(args.name, lo, args.delta_max, args.step)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        print(json.dumps([{"delta": p.delta, "exponent": p.exponent, "valid": p.valid} for p in points]))
    elif args.out:
        formats.emit_curve_csv(points, args.out)
    else:
        sys.stdout.write(formats.curve_csv(points))
    return EXIT_OK


def cmd_kraw(args) -> int:
    _need(args, "n")
    q = args.q or 4
    if q not in (2, 4) or args.n < 0:
        raise UsageError("need --q in {2, 4} and --n >= 0")
    table = kraw.kraw_table(q, args.n)
    if args.format == "json":
        print(json.dumps({"q": q, "n": args.n, "values": [list(r) for r in table.values]}))
    else:
        for i, row in enumerate(table.values):
            print(f"P_{i}: " + " ".join(str(v) for v in row))
    return EXIT_OK


def _common(p: argparse.ArgumentParser, *flags: str) -> None:
    for f in flags:
        p.add_argument(f"--{f}", type=int, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write the certificate or CSV to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbound", description="LP bounds for quantum codes")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_ in (
        ("singleton", cmd_singleton, "Singleton-type certificate, K <= 2^(n-2w+2)"),
        ("hamming", cmd_hamming, "Hamming-type certificate (odd w)"),
        ("lp1-binary", cmd_lp1_binary, "binary first LP certificate (bound on S)"),
    ):
        p = sub.add_parser(name, help=help_)
        _common(p, "n", "w")
        p.set_defaults(func=func)

    p = sub.add_parser("lp", help="exact enumerator LP: largest feasible K, or feasibility of --K")
    _common(p, "n", "w", "K")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("cert", help="certificate files")
    csub = p.add_subparsers(dest="action", required=True)
    v = csub.add_parser("verify", help="re-verify a certificate JSON file")
    v.add_argument("path")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=cmd_cert)

    p = sub.add_parser("mixed", help="bounds for mixed GF(2)/GF(4) group codes")
    p.add_argument("which", choices=("plotkin", "hamming"))
    _common(p, "l", "n", "k")
    p.set_defaults(func=cmd_mixed)

    p = sub.add_parser("stabilizer", help="bounds for stabilizer codes of type 4^k0 2^k1")
    p.add_argument("which", choices=("plotkin", "hamming"))
    _common(p, "n", "k", "k0", "k1")
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("curve", help="tabulate an asymptotic curve as CSV")
    p.add_argument("name", help="hamming | gv | singleton | lp1_binary")
    p.add_argument("--delta-min", type=float, default=None)
    p.add_argument("--delta-max", type=float, default=None)
    p.add_argument("--step", type=float, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("kraw", help="print the Krawtchouk table P_i(x)")
    _common(p, "q", "n")
    p.set_defaults(func=cmd_kraw)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qbound: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except certificates.CertificateError as exc:
        print(f"qbound: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except formats.FormatError as exc:
        print(f"qbound: invalid certificate file: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"qbound: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"qbound: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
