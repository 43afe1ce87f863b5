"""Command-line front end.

Exit codes: 0 success / integral / all checks pass, 1 negative verdict or
mismatch, 2 usage or input error.  JSON output always carries
``command``, ``params`` and ``result``; big integers are decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import statistics
import sys
import time
from fractions import Fraction

from . import engines, registry
from .engines import Method
from .integrality import (
    DiffStatus,
    RationalPairZ,
    WitnessSearchExhausted,
    decide_diff,
    decide_sum,
    footnote_family,
    prime_witness,
)
from .quadfield import Kind, QuadElement, RadicandMismatchError, SequenceParams
from .surdio import BFileError, SurdSyntaxError, emit_bfile, format_surd, parse_bfile, parse_surd, unlimited_int_digits

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(payload: dict) -> str:
    with unlimited_int_digits():
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _method(name: str) -> Method:
    try:
        return Method(name.lower())
    except ValueError:
        raise UsageError(f"unknown method {name!r}; choose from {', '.join(m.value for m in Method)}") from None


def _params(args) -> SequenceParams:
    return SequenceParams(args.p, args.q, Kind(args.kind))


# -- seq ----------------------------------------------------------------------

def cmd_seq(args, out) -> int:
    if args.start < 0 or args.stop < args.start:
        raise UsageError("need 0 <= --from <= --to")
    params = _params(args)
    method = _method(args.method)
    if method not in engines.methods_for(params):
        raise UsageError(f"method {method.value} does not apply to kind {params.kind.value} with p={params.p}, q={params.q}")
    values = [(n, engines.compute(params, n, method)) for n in range(args.start, args.stop + 1)]
    with unlimited_int_digits():
        if args.format == "bfile":
            out.write(emit_bfile(values))
        elif args.format == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["n", "value"])
            w.writerows(values)
            out.write(buf.getvalue())
        else:
            out.write(_dump({
                "command": "seq",
                "params": {"p": str(params.p), "q": str(params.q), "kind": params.kind.value,
                           "from": str(args.start), "to": str(args.stop), "method": method.value},
                "result": [{"n": str(n), "value": str(v)} for n, v in values],
            }))
    return EXIT_OK


# -- decide -------------------------------------------------------------------

def cmd_decide(args, out) -> int:
    try:
        alpha, beta = parse_surd(args.alpha), parse_surd(args.beta)
    except SurdSyntaxError as exc:
        raise UsageError(str(exc)) from None
    params = {"alpha": format_surd(alpha), "beta": format_surd(beta), "mode": args.mode}
    try:
        if args.mode == "sum":
            v = decide_sum(alpha, beta)
            result = {
                "mode": "sum",
                "integral": v.integral,
                "p": str(v.recovered.p) if v.recovered else None,
                "q": str(v.recovered.q) if v.recovered else None,
            }
            ok = v.integral
        else:
            v = decide_diff(alpha, beta)
            result = {
                "mode": "diff",
                "status": v.status.value,
                "p": None,
                "q": None,
                "prime_bound": None if v.prime_bound is None else str(v.prime_bound),
            }
            ok = v.integral
    except RadicandMismatchError as exc:
        raise UsageError(str(exc)) from None
    payload = {"command": "decide", "params": params, "result": result}
    if v.witness is not None:
        payload["witness"] = str(v.witness)
    if args.format == "json":
        out.write(_dump(payload))
    else:
        if args.mode == "sum":
            line = f"sum: integral, p={result['p']} q={result['q']}" if ok else f"sum: NOT integral, witness n={v.witness}"
        else:
            line = f"diff: {v.status.value}"
            if v.witness is not None:
                line += f", witness n={v.witness}"
            if v.prime_bound is not None:
                line += f", prime bound {v.prime_bound}"
        out.write(line + "\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- refute-diff --------------------------------------------------------------

def cmd_refute(args, out) -> int:
    family = args.family_z is not None or args.family_m is not None
    direct = any(v is not None for v in (args.x, args.y, args.z))
    if family == direct:
        raise UsageError("give either --x/--y/--z or --family-z/--family-m")
    if family:
        if args.family_z is None or args.family_m is None:
            raise UsageError("--family-z and --family-m go together")
        if abs(args.family_z) < 2 or args.family_m < 1:
            raise UsageError("need |--family-z| >= 2 and --family-m >= 1")
        z, m = args.family_z, args.family_m
        ok_through, first_failure = footnote_family(z, m)
        bound, _ = prime_witness(RationalPairZ(z ** m + 1, 1, z))
        result = {"x": str(z ** m + 1), "y": "1", "z": str(z), "m": str(m),
                  "ok_through": str(ok_through), "first_failure": str(first_failure),
                  "prime_bound": str(bound)}
        if args.format == "json":
            out.write(_dump({"command": "refute-diff", "params": {"family_z": str(z), "family_m": str(m)},
                             "result": result}))
        else:
            out.write(f"x = {z}^{m} + 1 = {z ** m + 1}, y = 1: ok_through {ok_through}, "
                      f"first_failure {first_failure} (prime bound {bound})\n")
        return EXIT_OK

    if None in (args.x, args.y, args.z):
        raise UsageError("--x, --y and --z are all required")
    if abs(args.z) < 2:
        raise UsageError("need |--z| >= 2")
    x, y, z = args.x, args.y, args.z
    params = {"x": str(x), "y": str(y), "z": str(z)}
    alpha, beta = QuadElement(Fraction(x, z)), QuadElement(Fraction(y, z))
    try:
        v = decide_diff(alpha, beta, cap=args.max_n)
    except WitnessSearchExhausted as exc:
        raise UsageError(f"{exc}; raise --max-n") from None
    result = {"status": v.status.value,
              "prime_bound": None if v.prime_bound is None else str(v.prime_bound)}
    payload = {"command": "refute-diff", "params": params, "result": result}
    if v.witness is not None:
        payload["witness"] = str(v.witness)
    if args.format == "json":
        out.write(_dump(payload))
    elif v.status is DiffStatus.TRIVIAL_EQUAL:
        out.write("trivial: x = y, the difference is identically 0\n")
    elif v.status is DiffStatus.BOTH_INTEGERS:
        out.write("trivial: x/z and y/z are both integers\n")
    else:
        bound = "none needed (z does not divide x - y)" if v.prime_bound is None else v.prime_bound
        out.write(f"witness {v.witness}; prime bound {bound}\n")
    return EXIT_OK if v.integral else EXIT_NEGATIVE


# -- identity -----------------------------------------------------------------

def cmd_identity(args, out) -> int:
    if args.action == "list":
        cases = registry.catalog()
        if args.format == "json":
            out.write(_dump({"command": "identity", "params": {"action": "list"},
                             "result": [{"id": c.id, "citation": c.citation} for c in cases]}))
        else:
            width = max(len(c.id) for c in cases)
            for c in cases:
                out.write(f"{c.id:<{width}}  {c.citation}\n")
        return EXIT_OK
    if args.n_max is None or args.n_max < 0:
        raise UsageError("--n-max must be a nonnegative integer")
    if args.action == "check":
        if not args.id:
            raise UsageError("identity check needs --id")
        try:
            case = registry.get(args.id)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        reports = registry.check_all(args.n_max, [case])
    else:
        reports = registry.check_all(args.n_max)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = {"command": "identity",
                   "params": {"action": args.action, "n_max": str(args.n_max)},
                   "result": [r.to_json() for r in reports]}
        if args.action == "check":
            payload["citation"] = case.citation
        out.write(_dump(payload))
    else:
        for r in reports:
            tag = r.id + (f"[{r.parity}]" if r.parity else "")
            status = "pass" if r.passed else f"FAIL {r.counterexample}"
            out.write(f"{tag:<28} {r.checked:>6} checks  {status}\n")
        out.write(f"{sum(r.passed for r in reports)}/{len(reports)} passed\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


# -- oeis-check ---------------------------------------------------------------

def cmd_oeis(args, out) -> int:
    try:
        with open(args.bfile, encoding="utf-8") as fh:
            bfile = parse_bfile(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.bfile}: {exc.strerror}") from None
    except BFileError as exc:
        raise UsageError(f"{args.bfile}: {exc}") from None
    params = _params(args)
    result = {"checked": "0", "match": True}
    if bfile.entries:
        lo = bfile.entries[0][0] + args.offset
        hi = bfile.entries[-1][0] + args.offset
        if lo < 0:
            raise UsageError("b-file index + offset is negative")
        expected = engines.compute_slice(params, lo, hi)
        for checked, (i, value) in enumerate(bfile.entries, start=1):
            want = expected[i + args.offset]
            result["checked"] = str(checked)
            if want != value:
                result["match"] = False
                result["first_divergence"] = {"index": str(i), "expected": str(want), "found": str(value)}
                break
    payload = {"command": "oeis-check",
               "params": {"bfile": args.bfile, "p": str(args.p), "q": str(args.q),
                          "kind": args.kind, "offset": str(args.offset)},
               "result": result}
    if args.format == "json":
        out.write(_dump(payload))
    elif result["match"]:
        out.write(f"match: {result['checked']} terms\n")
    else:
        d = result["first_divergence"]
        out.write(f"MISMATCH at index {d['index']}: expected {d['expected']}, found {d['found']}\n")
    return EXIT_OK if result["match"] else EXIT_NEGATIVE


# -- bench --------------------------------------------------------------------

def digest(value: int) -> str:
    with unlimited_int_digits():
        return hashlib.sha256(str(value).encode()).hexdigest()


def run_bench(params: SequenceParams, n: int, methods: list[Method], repeat: int) -> dict:
    """Digest gate first, then median-of-``repeat`` timings per method."""
    values = {m: engines.compute(params, n, m) for m in methods}
    digests = {m: digest(v) for m, v in values.items()}
    report = {"n": n, "p": params.p, "q": params.q, "kind": params.kind.value,
              "digests_equal": len(set(digests.values())) == 1, "methods": {}}
    for m in methods:
        entry = {"digest": digests[m]}
        if report["digests_equal"]:
            times = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                engines.compute(params, n, m)
                times.append(time.perf_counter() - t0)
            entry["median_seconds"] = statistics.median(times)
        report["methods"][m.value] = entry
    return report


def cmd_bench(args, out) -> int:
    if args.n < 0 or args.repeat < 1:
        raise UsageError("need --n >= 0 and --repeat >= 1")
    params = _params(args)
    methods = [_method(s.strip()) for s in args.methods.split(",") if s.strip()]
    if not methods:
        raise UsageError("--methods is empty")
    bad = [m.value for m in methods if m not in engines.methods_for(params)]
    if bad:
        raise UsageError(f"methods not applicable: {', '.join(bad)}")
    report = run_bench(params, args.n, methods, args.repeat)
    payload = {
        "command": "bench",
        "params": {"p": str(args.p), "q": str(args.q), "kind": args.kind, "n": str(args.n),
                   "methods": [m.value for m in methods], "repeat": str(args.repeat)},
        "result": {
            "digests_equal": report["digests_equal"],
            "methods": {k: {kk: (vv if isinstance(vv, str) else f"{vv:.6f}") for kk, vv in v.items()}
                        for k, v in report["methods"].items()},
        },
    }
    if args.format == "json":
        out.write(_dump(payload))
    else:
        for name, entry in report["methods"].items():
            t = entry.get("median_seconds")
            timing = "not timed" if t is None else f"{t:.6f} s"
            out.write(f"{name:<12} {timing:>14}  {entry['digest'][:16]}\n")
        out.write("digests equal\n" if report["digests_equal"] else "DIGEST MISMATCH\n")
    return EXIT_OK if report["digests_equal"] else EXIT_NEGATIVE


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="Exact sequences r^n + s^n and (r^n - s^n)/(r - s) for roots of z^2 - pz - q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pq(sp, kind_required=True):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--kind", choices=["V", "U"], required=kind_required, default="V")

    sp = sub.add_parser("seq", help="emit sequence values")
    pq(sp)
    sp.add_argument("--from", dest="start", type=int, required=True)
    sp.add_argument("--to", dest="stop", type=int, required=True)
    sp.add_argument("--method", default="doubling", help="recurrence, doubling, exp1, exp2, exp3, idenf, trace, chebyshev")
    sp.add_argument("--format", choices=["bfile", "json", "csv"], default="bfile")
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("decide", help="decide integrality of alpha^n + beta^n or alpha^n - beta^n")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--mode", choices=["sum", "diff"], required=True)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("refute-diff", help="witness that (x^n - y^n)/z^n leaves Z")
    sp.add_argument("--x", type=int)
    sp.add_argument("--y", type=int)
    sp.add_argument("--z", type=int)
    sp.add_argument("--max-n", type=int, default=10_000)
    sp.add_argument("--family-z", type=int)
    sp.add_argument("--family-m", type=int)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_refute)

    sp = sub.add_parser("identity", help="list or check catalogued identities")
    sp.add_argument("action", choices=["list", "check", "check-all"])
    sp.add_argument("--id")
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_identity)

    sp = sub.add_parser("oeis-check", help="compare a local b-file with computed values")
    sp.add_argument("--bfile", required=True)
    pq(sp)
    sp.add_argument("--offset", type=int, default=0, help="added to each b-file index to get the sequence index")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_oeis)

    sp = sub.add_parser("bench", help="time engines after checking they agree")
    pq(sp, kind_required=False)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--methods", default="recurrence,doubling")
    sp.add_argument("--repeat", type=int, default=3)
    sp.add_argument("--format", choices=["text", "json"], default="json")
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
