"""Command-line front end.

Exit codes: 0 success, 1 computational failure (including theorem
violations and lemma failures), 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import verify as verify_mod
from .classify import classify_records, render_table
from .classify import table as build_table
from .factorize import DEFAULT_SEED, factor, sigma
from .gf2poly import Gf2ParseError, parse
from .mersenne import build, enumerate_primes
from .sigma_chain import FactorCache, analyze

FORMATS = ("text", "csv", "json", "markdown")


@dataclass
class Config:
    format: str = "text"
    seed: int = DEFAULT_SEED
    cache_path: str | None = None
    parallelism: int = field(default_factory=lambda: os.cpu_count() or 1)


def _int_maybe_hex(text: str) -> int:
    return int(text, 0)


def _prime_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--seed", type=_int_maybe_hex, default=DEFAULT_SEED)
    common.add_argument("--cache", dest="cache_path", default=None)
    common.add_argument(
        "--parallelism", type=int, default=os.cpu_count() or 1, metavar="N"
    )

    parser = argparse.ArgumentParser(
        prog="gf2sigma",
        description="Polynomials over GF(2): arithmetic, Mersenne primes, "
        "divisor-sum chains, exception tables, and theorem verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="single-polynomial operations")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    p_factor = poly_sub.add_parser("factor", parents=[common])
    p_factor.add_argument("poly")
    p_sigma = poly_sub.add_parser("sigma", parents=[common])
    p_sigma.add_argument("poly")

    mers = sub.add_parser("mersenne", help="Mersenne prime polynomials")
    mers_sub = mers.add_subparsers(dest="mersenne_command", required=True)
    m_list = mers_sub.add_parser("list", parents=[common])
    m_list.add_argument("--min", type=int, default=2)
    m_list.add_argument("--max", type=int, required=True)

    an = sub.add_parser("analyze", parents=[common], help="one (a, b, p) chain record")
    an.add_argument("--a", type=int, required=True)
    an.add_argument("--b", type=int, required=True)
    an.add_argument("--p", type=int, required=True)

    cl = sub.add_parser("classify", parents=[common], help="membership stream for one p")
    cl.add_argument("--p", type=int, required=True)
    cl.add_argument("--max-degree", type=int, required=True)

    tb = sub.add_parser("table", parents=[common], help="exception-set count table")
    tb.add_argument("--p", type=_prime_list, required=True, metavar="P1,P2,...")
    tb.add_argument("--max-degree", type=int, required=True)

    ver = sub.add_parser("verify", help="verification campaigns")
    ver_sub = ver.add_subparsers(dest="verify_command", required=True)
    for name in ("theorem", "lemmas"):
        v = ver_sub.add_parser(name, parents=[common])
        v.add_argument("--p", type=_prime_list, required=True, metavar="P1,P2,...")
        v.add_argument("--max-degree", type=int, required=True)
    return parser


def _config(args) -> Config:
    return Config(args.format, args.seed, args.cache_path, max(1, args.parallelism))


def _render_factorization(fact, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fact.to_json_dict())
    parts = []
    for poly, mult in fact:
        parts.append(f"({poly})" + (f"^{mult}" if mult > 1 else ""))
    return "·".join(parts) if parts else "1"


def _cmd_poly_factor(args) -> int:
    cfg = _config(args)
    fact = factor(parse(args.poly), seed=cfg.seed)
    print(_render_factorization(fact, cfg.format))
    return 0


def _cmd_poly_sigma(args) -> int:
    cfg = _config(args)
    value = parse(args.poly)
    result = sigma(value, seed=cfg.seed)
    if cfg.format == "json":
        print(json.dumps({"input": value.to_hex(), "sigma": result.to_hex()}))
    else:
        print(result)
    return 0


def _cmd_mersenne_list(args) -> int:
    cfg = _config(args)
    primes = enumerate_primes(args.min, args.max)
    if cfg.format == "json":
        print(
            json.dumps(
                [
                    {"deg": m.degree, "a": m.a, "b": m.b, "poly": m.poly.to_hex()}
                    for m in primes
                ]
            )
        )
    elif cfg.format == "csv":
        print("deg,a,b,poly_hex")
        for m in primes:
            print(f"{m.degree},{m.a},{m.b},{m.poly.to_hex()}")
    elif cfg.format == "markdown":
        print("| deg | a | b | poly |")
        print("|---|---|---|---|")
        for m in primes:
            print(f"| {m.degree} | {m.a} | {m.b} | {m.poly} |")
    else:
        for m in primes:
            print(f"deg={m.degree:3d}  a={m.a:3d}  b={m.b:3d}  {m.poly}")
        print(f"total: {len(primes)}")
    return 0


def _cmd_analyze(args) -> int:
    cfg = _config(args)
    cache = FactorCache(cfg.cache_path) if cfg.cache_path else None
    M = build(args.a, args.b)
    record = analyze(M, args.p, seed=cfg.seed, cache=cache)
    if cache:
        cache.save()
    data = record.to_json_dict()
    if cfg.format == "json":
        print(json.dumps(data))
    else:
        print(json.dumps(data, indent=2))
    return 0


def _cmd_classify(args) -> int:
    cfg = _config(args)
    records = classify_records(
        args.p,
        args.max_degree,
        seed=cfg.seed,
        parallelism=cfg.parallelism,
        cache_path=cfg.cache_path,
    )
    counts = [0, 0, 0, 0]
    for rec in records:
        for j, flag in enumerate(rec.flags):
            counts[j] += flag
    if cfg.format == "json":
        for rec in records:
            print(json.dumps(rec.to_json_dict()))
        summary = {
            "p": args.p,
            "d": args.max_degree,
            "lambda": counts,
            "m_count": len(records),
        }
        print(json.dumps({"summary": summary}))
    elif cfg.format == "csv":
        print("a,b,p,c,m,e,in_sigma1,in_sigma2,in_sigma3,in_sigma4,case_tag")
        for rec in records:
            d = rec.to_json_dict()
            row = [
                d["a"], d["b"], d["p"],
                "" if d["c"] is None else d["c"],
                "" if d["m"] is None else d["m"],
                "" if d["e"] is None else d["e"],
                int(rec.in_sigma1), int(rec.in_sigma2),
                int(rec.in_sigma3), int(rec.in_sigma4),
                rec.case_tag,
            ]
            print(",".join(str(v) for v in row))
        print(
            f"# lambda={','.join(map(str, counts))} m_count={len(records)}",
            file=sys.stderr,
        )
    else:
        for rec in records:
            d = rec.to_json_dict()
            mark = " ".join(
                name
                for name, flag in zip(
                    ("S1", "S2", "S3", "S4"), rec.flags
                )
                if flag
            )
            print(
                f"a={d['a']:3d} b={d['b']:3d} p={d['p']}  c={d['c']} m={d['m']} "
                f"e={d['e']}  case={rec.case_tag}" + (f"  [{mark}]" if mark else "")
            )
        print(
            f"lambda1..4 = {tuple(counts)}  over {len(records)} Mersenne primes "
            f"(5 <= deg <= {args.max_degree})"
        )
    return 0


def _cmd_table(args) -> int:
    cfg = _config(args)
    rows = build_table(
        args.p,
        args.max_degree,
        seed=cfg.seed,
        parallelism=cfg.parallelism,
        cache_path=cfg.cache_path,
    )
    print(render_table(rows, cfg.format))
    return 0


def _cmd_verify(args, which: str) -> int:
    cfg = _config(args)
    verdicts, report = verify_mod.run_campaign(
        args.p,
        args.max_degree,
        seed=cfg.seed,
        parallelism=cfg.parallelism,
        cache_path=cfg.cache_path,
        want_verdict=which == "theorem",
        want_lemmas=which == "lemmas",
    )
    failed = bool(report.errors)
    if which == "theorem":
        violated = [v for v in verdicts if v.status == verify_mod.VIOLATED]
        excluded = [v for v in verdicts if v.status == verify_mod.EXCLUDED]
        if cfg.format == "json":
            for v in verdicts:
                print(json.dumps(v.to_json_dict()))
        else:
            for v in verdicts:
                extra = f"  witness={v.witness}" if v.witness is not None else ""
                print(
                    f"a={v.mersenne.a:3d} b={v.mersenne.b:3d} p={v.p}  "
                    f"{v.status}{extra}"
                )
        print(
            f"theorem: {len(verdicts)} instances, {len(excluded)} excluded, "
            f"{len(violated)} VIOLATED"
        )
        failed = failed or bool(violated)
    else:
        if cfg.format == "json":
            print(json.dumps(report.to_json_dict()))
        else:
            for line in report.lines():
                print(line)
        n_fail = len(report.failures())
        print(f"lemmas: {len(report.entries)} checks, {n_fail} failing")
        failed = failed or n_fail > 0
    if report.errors:
        print(f"INCOMPLETE: {len(report.errors)} instance(s) raised errors")
    return 1 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "poly":
            if args.poly_command == "factor":
                return _cmd_poly_factor(args)
            return _cmd_poly_sigma(args)
        if args.command == "mersenne":
            return _cmd_mersenne_list(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "verify":
            return _cmd_verify(args, args.verify_command)
        parser.error(f"unknown command {args.command!r}")
    except Gf2ParseError as exc:
        parser.error(str(exc))  # malformed polynomial text is a usage error (exit 2)
    except (ValueError, ArithmeticError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
