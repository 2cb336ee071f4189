"""Command-line front end.

Subcommands: ``count`` (exact sequence values), ``poly`` (arc enumerator
coefficients), ``smallcover`` (small-cover class counts), ``constants``
(high-precision growth constants) and ``verify`` (self-check suites).

Output goes to stdout as text, canonical JSON or CSV; diagnostics go to
stderr.  All exact integers are serialized as decimal strings so that
values beyond 64 bits survive any JSON consumer.  Exit codes: 0 all ok,
1 internal error, 2 usage error, 3 verification failure, 4 enumeration
budget refusal.

If the environment variable ``ACYCLIC_CENSUS_CACHE`` names a JSON file,
``count`` serves repeat queries from it and extends it; the cache is
advisory only and ``verify`` revalidates every cached value by
recomputation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

from . import verify
from .asymptotics import (PrecisionContext, RootBracketError, find_least_root,
                          format_decimal, psi_at_negated_root)
from .counts import (SequenceTable, sequence_table, smallcover_cube_classes,
                     smallcover_simplexpower_classes, multi_arc_enumerator)
from .oracle import EnumerationBudgetError

CACHE_ENV = "ACYCLIC_CENSUS_CACHE"

_COUNT_STARTS = {"a": 0, "b": 0, "h": 1, "Ak": 0}


@dataclass
class OutputEnvelope:
    """Uniform result wrapper emitted by every subcommand."""

    command: str
    parameters: dict
    results: list[dict] = field(default_factory=list)
    status: str = "ok"
    timing_ms: int = 0
    reason: str = ""

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "status": self.status,
            "timing_ms": self.timing_ms,
            "reason": self.reason,
        }


def render_json(env: OutputEnvelope) -> str:
    return json.dumps(env.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"


def render_csv(env: OutputEnvelope) -> str:
    buf = io.StringIO()
    if env.results:
        fields = list(env.results[0].keys())
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for record in env.results:
            writer.writerow({k: _csv_cell(v) for k, v in record.items()})
    return buf.getvalue()


def _csv_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def render_text(env: OutputEnvelope) -> str:
    if env.status != "ok":
        return f"{env.status}: {env.reason}\n"
    cmd = env.command
    if cmd == "count":
        return ",".join(r["value"] for r in env.results) + "\n"
    if cmd == "poly":
        return "[" + ", ".join(r["coefficient"] for r in env.results) + "]\n"
    if cmd == "smallcover":
        return env.results[0]["value"] + "\n"
    if cmd == "constants":
        return "".join(f"{r['name']} = {r['value']}\n" for r in env.results)
    if cmd == "verify":
        lines = []
        failed = 0
        for r in env.results:
            if r["passed"]:
                lines.append(f"PASS {r['check']}")
            else:
                failed += 1
                lines.append(f"FAIL {r['check']}: {r['detail']}")
        lines.append(f"{len(env.results)} checks, {failed} failed")
        return "\n".join(lines) + "\n"
    raise ValueError(f"no text renderer for {cmd!r}")


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="acyclic-census",
        description="Exact and asymptotic enumeration of labelled acyclic digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("count", help="exact values of a count sequence")
    p.add_argument("sequence", choices=("a", "b", "h", "Ak"))
    p.add_argument("--n-max", type=_nonneg_int, required=True)
    p.add_argument("--r", type=_positive_int)
    p.add_argument("--k", type=_positive_int)
    add_format(p)

    p = sub.add_parser("poly", help="arc enumerator coefficients")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--k", type=_positive_int, default=1)
    add_format(p)

    p = sub.add_parser("smallcover", help="small-cover equivalence class counts")
    p.add_argument("kind", choices=("cube-diffeo", "simplexpower-dj"))
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=_positive_int)
    add_format(p)

    p = sub.add_parser("constants", help="growth constants for arc multiplicity k")
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--digits", type=_positive_int, default=25)
    add_format(p)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--order", type=_positive_int, default=12)
    p.add_argument("--digits", type=_positive_int, default=25)
    p.add_argument("--budget", type=_positive_int)
    add_format(p)

    return parser


def _cmd_count(args, parser) -> tuple[OutputEnvelope, int]:
    if args.sequence == "h":
        if args.r is None:
            parser.error("sequence h requires --r")
        if args.k is not None:
            parser.error("sequence h takes --r, not --k")
        parameter = args.r
    elif args.sequence == "Ak":
        if args.k is None:
            parser.error("sequence Ak requires --k")
        if args.r is not None:
            parser.error("sequence Ak takes --k, not --r")
        parameter = args.k
    else:
        if args.r is not None or args.k is not None:
            parser.error(f"sequence {args.sequence} takes neither --r nor --k")
        parameter = None

    parameters = {"sequence": args.sequence, "n_max": args.n_max}
    if args.sequence == "h":
        parameters["r"] = parameter
    elif args.sequence == "Ak":
        parameters["k"] = parameter

    start = _COUNT_STARTS[args.sequence]
    values = _cached_sequence(args.sequence, args.n_max, parameter, start)
    results = [{"n": n, "value": str(values[n])} for n in range(start, args.n_max + 1)]
    return OutputEnvelope("count", parameters, results), 0


def _cached_sequence(name: str, n_max: int, parameter: int | None,
                     start: int) -> dict[int, int]:
    path = os.environ.get(CACHE_ENV)
    if not path:
        return sequence_table(name, n_max, parameter).values
    tables = _load_cache(path)
    key = name if parameter is None else f"{name}:{parameter}"
    cached = tables.get(key)
    needed = range(start, n_max + 1)
    if cached is not None and all(n in cached.values for n in needed):
        return cached.values
    fresh = sequence_table(name, n_max, parameter)
    if cached is not None:
        cached.values.update(fresh.values)
    else:
        tables[key] = fresh
    _save_cache(path, tables)
    return fresh.values


def _load_cache(path: str) -> dict[str, SequenceTable]:
    if not os.path.exists(path):
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        return {t.key: t for t in map(SequenceTable.from_json_dict, raw["tables"])}
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return {}


def _save_cache(path: str, tables: dict[str, SequenceTable]) -> None:
    payload = {"tables": [tables[key].to_json_dict() for key in sorted(tables)]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")


def _cmd_poly(args) -> tuple[OutputEnvelope, int]:
    poly = multi_arc_enumerator(args.n, args.k)
    results = [{"m": m, "coefficient": str(c)} for m, c in enumerate(poly.coeffs)]
    return OutputEnvelope("poly", {"n": args.n, "k": args.k}, results), 0


def _cmd_smallcover(args, parser) -> tuple[OutputEnvelope, int]:
    if args.kind == "cube-diffeo":
        if args.r is not None:
            parser.error("cube-diffeo takes no --r")
        value = smallcover_cube_classes(args.n)
        parameters = {"kind": args.kind, "n": args.n}
        record = {"kind": args.kind, "n": args.n, "value": str(value)}
    else:
        if args.r is None:
            parser.error("simplexpower-dj requires --r")
        value = smallcover_simplexpower_classes(args.n, args.r)
        parameters = {"kind": args.kind, "n": args.n, "r": args.r}
        record = {"kind": args.kind, "n": args.n, "r": args.r, "value": str(value)}
    return OutputEnvelope("smallcover", parameters, [record]), 0


def _cmd_constants(args) -> tuple[OutputEnvelope, int]:
    ctx = PrecisionContext(target_digits=args.digits)
    root = find_least_root(args.k, ctx)
    results = [
        {"name": "omega", "value": format_decimal(root.omega, args.digits)},
        {"name": "lambda", "value": format_decimal(root.lam, args.digits)},
    ]
    if args.k == 1:
        flip = psi_at_negated_root(ctx)
        results.append({"name": "psi_at_minus_omega",
                        "value": format_decimal(flip, args.digits)})
    return OutputEnvelope("constants", {"k": args.k, "digits": args.digits}, results), 0


def _cmd_verify(args) -> tuple[OutputEnvelope, int]:
    rows = verify.run_suite(args.suite, order=args.order, digits=args.digits,
                            budget=args.budget)
    path = os.environ.get(CACHE_ENV)
    if path and os.path.exists(path):
        for key in sorted(tables := _load_cache(path)):
            stale = tables[key].recompute_mismatches()
            rows.append(verify.CheckResult(
                f"cache_revalidation_{key}", not stale,
                f"stale cached orders {stale}" if stale else ""))
    results = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in rows]
    parameters = {"suite": args.suite, "order": args.order, "digits": args.digits}
    if args.budget is not None:
        parameters["budget"] = args.budget
    failed = sum(not r.passed for r in rows)
    return OutputEnvelope("verify", parameters, results), 3 if failed else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "count":
            env, code = _cmd_count(args, parser)
        elif args.command == "poly":
            env, code = _cmd_poly(args)
        elif args.command == "smallcover":
            env, code = _cmd_smallcover(args, parser)
        elif args.command == "constants":
            env, code = _cmd_constants(args)
        else:
            env, code = _cmd_verify(args)
    except EnumerationBudgetError as exc:
        env = OutputEnvelope(args.command, {}, status="refused", reason=str(exc))
        code = 4
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except (RootBracketError, RuntimeError, ArithmeticError) as exc:
        env = OutputEnvelope(args.command, {}, status="error", reason=str(exc))
        code = 1
    env.timing_ms = int((time.perf_counter() - started) * 1000)
    sys.stdout.write(_RENDERERS[args.format](env))
    return code


if __name__ == "__main__":
    sys.exit(main())
