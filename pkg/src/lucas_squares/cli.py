"""Command-line entry point: ``lucas-squares <command> [options]``.

Data goes to stdout (or ``--out FILE``), diagnostics to stderr. Exit codes:
0 success, 1 a verification report contains failures, 2 usage or domain error.

Output formats:

text   human-readable
jsonl  one JSON object per line; U_n values are decimal strings
csv    header row then one row per record; list/dict fields are compact JSON
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from contextlib import contextmanager

from lucas_squares.arith import decimal_digits, to_decimal
from lucas_squares.criteria import CriterionId, classify, explain
from lucas_squares.lucas_core import LucasParams, u_closed, u_matrix, u_mod, u_rec
from lucas_squares.periods import period_mod
from lucas_squares.verify import (
    ALL,
    GridSpec,
    census,
    check_equivalence,
    check_rm_subset,
    verify_criterion,
)

EVALUATORS = {"rec": u_rec, "closed": u_closed, "matrix": u_matrix}
FORMATS = ("text", "jsonl", "csv")


class _UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _modulus(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {text}")
    return v


def _common(suppress: bool) -> argparse.ArgumentParser:
    # Same flags on the top-level parser and on every subcommand, so they may
    # appear either before or after the command name.
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=FORMATS, default=d("text"))
    p.add_argument("--jobs", type=_positive, default=d(1), help="worker processes for sweeps")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized runs")
    p.add_argument("--out", default=d(None), metavar="FILE", help="write output to FILE")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucas-squares",
        description="Lucas sequences U_n(P,Q): exact values, residues, periods, non-square criteria.",
        parents=[_common(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_common(suppress=True)]

    c = sub.add_parser("compute", parents=common, help="exact U_n")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--method", choices=sorted(EVALUATORS), default="matrix")
    c.add_argument("--digits-only", action="store_true", help="print only the digit count")

    c = sub.add_parser("mod", parents=common, help="U_n mod m")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=_nonneg, required=True)
    c.add_argument("--modulus", type=_modulus, required=True)

    c = sub.add_parser("period", parents=common, help="eventual period of U_n mod m")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--modulus", type=_modulus, required=True)

    c = sub.add_parser("classify", parents=common, help="applicable non-square criteria")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=_nonneg, required=True)

    c = sub.add_parser("verify", parents=common, help="sweep the criteria over a grid")
    c.add_argument("--criterion", choices=[ALL] + [x.value for x in CriterionId], default=ALL)
    c.add_argument("--p-bound", type=_nonneg, required=True)
    c.add_argument("--q-bound", type=_nonneg, required=True)
    c.add_argument("--n-min", type=_nonneg, default=0)
    c.add_argument("--n-max", type=_nonneg, required=True)
    c.add_argument("--direct-limit", type=_nonneg, required=True)

    c = sub.add_parser("equiv", parents=common, help="compare the three evaluators")
    c.add_argument("--p-bound", type=_positive, required=True)
    c.add_argument("--q-bound", type=_positive, required=True)
    c.add_argument("--n-max", type=_positive, required=True)

    c = sub.add_parser("census", parents=common, help="zero and square terms up to n-max")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n-max", type=_positive, required=True)

    c = sub.add_parser("rm-check", parents=common, help="squares only at n in {1,2,3,6,12}")
    c.add_argument("--p-max", type=_positive, required=True)
    c.add_argument("--q-bound", type=_positive, required=True)
    c.add_argument("--n-max", type=_positive, required=True)

    sub.add_parser("bench", parents=common, help="time the evaluators at preset sizes")
    return parser


# -- rendering -------------------------------------------------------------

def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"), ensure_ascii=False)
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def render(records: list[dict], fmt: str, text: str) -> str:
    if fmt == "text":
        return text if text.endswith("\n") else text + "\n"
    if fmt == "jsonl":
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)
    buf = io.StringIO()
    writer = csv.writer(buf)
    fields = list(records[0]) if records else []
    writer.writerow(fields)
    for r in records:
        writer.writerow([_csv_cell(r.get(k)) for k in fields])
    return buf.getvalue()


def _report_text(rep) -> str:
    lines = [
        f"{rep.criterion}: {rep.triples_checked} triples checked, "
        f"{len(rep.residue_mismatches)} residue mismatches, "
        f"{len(rep.square_violations)} square violations, "
        f"{len(rep.evaluator_mismatches)} evaluator mismatches"
    ]
    for m in rep.residue_mismatches:
        lines.append(f"  residue P={m.P} Q={m.Q} n={m.n} {m.criterion}: expected {m.expected}, got {m.actual}")
    for s in rep.square_violations:
        lines.append(f"  square P={s.P} Q={s.Q} n={s.n}: U_n = {to_decimal(s.value)}")
    for e in rep.evaluator_mismatches:
        lines.append(f"  evaluators P={e.P} Q={e.Q} n={e.n}: rec={e.rec} closed={e.closed} matrix={e.matrix}")
    lines.append("OK" if rep.ok else "FAILED")
    return "\n".join(lines)


def _report_record(rep) -> dict:
    d = rep.as_dict()
    for v in d["square_violations"]:
        v["value"] = to_decimal(v["value"])
    for v in d["evaluator_mismatches"]:
        for k in ("rec", "closed", "matrix"):
            v[k] = to_decimal(v[k])
    return d


# -- commands --------------------------------------------------------------

def _cmd_compute(a):
    params = LucasParams(a.p, a.q)
    value = EVALUATORS[a.method](params, a.n)
    digits = decimal_digits(value)
    rec = {"P": a.p, "Q": a.q, "n": a.n, "method": a.method, "digits": digits}
    if a.digits_only:
        return [rec], str(digits), 0
    rec["value"] = to_decimal(value)
    return [rec], rec["value"], 0


def _cmd_mod(a):
    r = u_mod(LucasParams(a.p, a.q), a.n, a.modulus)
    return [{"P": a.p, "Q": a.q, "n": a.n, "modulus": a.modulus, "residue": r}], str(r), 0


def _cmd_period(a):
    info = period_mod(LucasParams(a.p, a.q), a.modulus)
    rec = {"P": a.p, "Q": a.q, **info.as_dict()}
    text = (
        f"U_n({a.p}, {a.q}) mod {a.modulus}: preperiod {info.preperiod}, period {info.period}\n"
        f"prefix: {' '.join(map(str, info.prefix))}\n"
        f"cycle: {' '.join(map(str, info.cycle))}"
    )
    return [rec], text, 0


def _cmd_classify(a):
    verdict = classify(LucasParams(a.p, a.q), a.n)
    return [verdict.as_dict()], explain(verdict), 0


def _cmd_verify(a):
    if a.n_max < a.n_min:
        raise _UsageError(f"--n-max {a.n_max} is below --n-min {a.n_min}")
    grid = GridSpec.box(a.p_bound, a.q_bound, a.n_min, a.n_max, min(a.direct_limit, a.n_max))
    rep = verify_criterion(a.criterion, grid, jobs=a.jobs)
    return [_report_record(rep)], _report_text(rep), 0 if rep.ok else 1


def _cmd_equiv(a):
    rep = check_equivalence(a.p_bound, a.q_bound, a.n_max, jobs=a.jobs)
    return [_report_record(rep)], _report_text(rep), 0 if rep.ok else 1


def _cmd_census(a):
    rep = census(LucasParams(a.p, a.q), a.n_max)
    rec = rep.as_dict()
    rec["square_indices"] = [[n, to_decimal(root)] for n, root in rep.square_indices]
    text = (
        f"U_n({a.p}, {a.q}), 0 <= n <= {a.n_max}\n"
        f"zero at n: {' '.join(map(str, rep.zero_indices)) or '-'}\n"
        "nonzero squares (n, root): "
        + (", ".join(f"({n}, {to_decimal(r)})" for n, r in rep.square_indices) or "-")
    )
    return [rec], text, 0


def _cmd_rm_check(a):
    rep = check_rm_subset(a.p_max, a.q_bound, a.n_max, jobs=a.jobs)
    return [_report_record(rep)], _report_text(rep), 0 if rep.ok else 1


def _time(fn, *args) -> float:
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def _cmd_bench(a):
    rng = random.Random(a.seed)
    fib = LucasParams(1, -1)
    rand = LucasParams(rng.randrange(1, 100, 2), rng.randrange(-99, 100, 2))
    records = []
    for params in (fib, rand):
        for n in (100, 1_000, 10_000):
            for name, fn in EVALUATORS.items():
                # closed form is quadratic in n; keep it to the small sizes
                if name == "closed" and n > 1_000:
                    continue
                records.append(
                    {"P": params.P, "Q": params.Q, "method": name, "n": n, "seconds": _time(fn, params, n)}
                )
        for n in (10**6, 10**12, 10**18):
            records.append(
                {"P": params.P, "Q": params.Q, "method": "mod4", "n": n, "seconds": _time(u_mod, params, n, 4)}
            )
    width = max(len(str(r["n"])) for r in records)
    text = "\n".join(
        f"P={r['P']:>3} Q={r['Q']:>4} {r['method']:<7} n={r['n']:>{width}}  {r['seconds'] * 1e3:10.3f} ms"
        for r in records
    )
    return records, text, 0


COMMANDS = {
    "compute": _cmd_compute,
    "mod": _cmd_mod,
    "period": _cmd_period,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "equiv": _cmd_equiv,
    "census": _cmd_census,
    "rm-check": _cmd_rm_check,
    "bench": _cmd_bench,
}


@contextmanager
def _unlimited_int_str():
    setter = getattr(sys, "set_int_max_str_digits", None)
    if setter is None:
        yield
        return
    old = sys.get_int_max_str_digits()
    setter(0)
    try:
        yield
    finally:
        setter(old)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        with _unlimited_int_str():
            records, text, code = COMMANDS[args.command](args)
            out = render(records, args.format, text)
    except (ValueError, _UsageError) as exc:
        print(f"lucas-squares: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


def main() -> None:
    sys.exit(run())
