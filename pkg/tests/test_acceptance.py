"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest summary.
"""

import json
import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_RESULTS
from lucas_squares.arith import binomial, decimal_digits, isqrt, mod_norm
from lucas_squares.cli import run
from lucas_squares.criteria import classify
from lucas_squares.lucas_core import LucasParams, u_matrix, u_mod, u_rec
from lucas_squares.periods import period_mod
from lucas_squares.verify import census

SEED = 1729


@contextmanager
def criterion(name):
    detail = {"text": ""}
    try:
        yield detail
    except BaseException:
        ACCEPTANCE_RESULTS[name] = (False, detail["text"])
        raise
    ACCEPTANCE_RESULTS[name] = (True, detail["text"])


def cli_json(capsys, *argv):
    code = run([*argv, "--format", "jsonl"])
    out, _ = capsys.readouterr()
    return code, json.loads(out)


def test_1_evaluator_equivalence(capsys):
    with criterion("1 evaluator equivalence") as d:
        t0 = time.perf_counter()
        code, rep = cli_json(capsys, "equiv", "--p-bound", "8", "--q-bound", "8", "--n-max", "64")
        elapsed = time.perf_counter() - t0
        d["text"] = f"{rep['triples_checked']} triples, {len(rep['evaluator_mismatches'])} violations, {elapsed:.2f}s"
        assert code == 0
        assert rep["triples_checked"] == 289 * 64
        assert rep["evaluator_mismatches"] == []
        assert elapsed < 10.0


def test_2_paper_tables(capsys):
    with criterion("2 mod-4 period tables") as d:
        _, fib = cli_json(capsys, "period", "--p", "1", "--q", "-1", "--modulus", "4")
        _, one = cli_json(capsys, "period", "--p", "1", "--q", "1", "--modulus", "4")
        d["text"] = f"F: {fib['period']} {fib['cycle']}, U(1,1): {one['period']} {one['cycle']}"
        assert (fib["preperiod"], fib["period"], fib["cycle"]) == (0, 6, [0, 1, 1, 2, 3, 1])
        assert (one["preperiod"], one["period"], one["cycle"]) == (0, 6, [0, 1, 1, 0, 3, 3])
        # read from n = 1, as printed in the tables
        info = period_mod(LucasParams(1, -1), 4)
        assert [info.residue(k) for k in range(1, 7)] == [1, 1, 2, 3, 1, 0]
        info = period_mod(LucasParams(1, 1), 4)
        assert [info.residue(k) for k in range(1, 7)] == [1, 1, 0, 3, 3, 0]


# (n, required Q mod 4 or None for any odd Q, residue of U_n mod 4)
WORKED_EXAMPLES = [
    (3, 3, 2),
    (5, 1, 3),
    (7, None, 1),
    (9, 3, 2),
    (11, 1, 3),
    (13, None, 1),
    (15, 3, 2),
    (17, 1, 3),
]


def test_3_worked_examples():
    with criterion("3 worked examples n=3..17") as d:
        rng = random.Random(SEED)
        mismatches = 0
        checked = 0
        for n, q_res, expected in WORKED_EXAMPLES:
            for _ in range(1000):
                P = 2 * rng.randint(-(10**9), 10**9) + 1
                if q_res is None:
                    Q = 2 * rng.randint(-(10**9), 10**9) + 1
                else:
                    Q = 4 * rng.randint(-(10**9), 10**9) + q_res
                pq = LucasParams(P, Q)
                got = u_mod(pq, n, 4)
                checked += 1
                if got != expected or mod_norm(u_rec(pq, n), 4) != expected:
                    mismatches += 1
        d["text"] = f"{checked} draws, {mismatches} mismatches"
        assert mismatches == 0


def test_4_theorem_sweeps(capsys):
    with criterion("4 criterion sweeps ALL") as d:
        t0 = time.perf_counter()
        code, rep = cli_json(
            capsys, "verify", "--criterion", "ALL", "--p-bound", "21", "--q-bound", "21",
            "--n-max", "999", "--direct-limit", "201",
        )
        elapsed = time.perf_counter() - t0
        d["text"] = (
            f"{rep['triples_checked']} triples, {len(rep['residue_mismatches'])} residue, "
            f"{len(rep['square_violations'])} square failures, {elapsed:.1f}s"
        )
        assert code == 0
        assert rep["triples_checked"] > 0
        assert rep["residue_mismatches"] == [] and rep["square_violations"] == []
        assert elapsed < 60.0


def test_5_rm_cross_check(capsys):
    with criterion("5 Ribenboim-McDaniel desk check") as d:
        code, rep = cli_json(capsys, "rm-check", "--p-max", "15", "--q-bound", "15", "--n-max", "500")
        squares = census(LucasParams(1, -1), 500).square_set
        d["text"] = f"{len(rep['square_violations'])} violations, Fibonacci squares {sorted(squares)}"
        assert code == 0 and rep["square_violations"] == []
        assert squares == {1, 2, 12}


def test_6_modular_fast_path(capsys):
    with criterion("6 mod fast path at n=1e12") as d:
        n = 10**12
        argv = ["mod", "--p", "1", "--q", "-1", "--n", str(n), "--modulus", "4"]
        run(argv)  # warm imports
        capsys.readouterr()
        t0 = time.perf_counter()
        code = run(argv)
        elapsed = time.perf_counter() - t0
        out, _ = capsys.readouterr()
        info = period_mod(LucasParams(1, -1), 4)
        expected = info.cycle[n % 6]
        d["text"] = f"residue {out.strip()} (table {expected}), {elapsed * 1e3:.2f} ms"
        assert code == 0 and int(out) == expected
        assert elapsed < 0.010


def test_7_performance_sanity():
    with criterion("7 u_matrix n=1e5 and digit agreement") as d:
        fib = LucasParams(1, -1)
        t0 = time.perf_counter()
        big = u_matrix(fib, 10**5)
        elapsed = time.perf_counter() - t0
        spot_m, spot_r = u_matrix(fib, 10**4), u_rec(fib, 10**4)
        d["text"] = f"{decimal_digits(big)} digits in {elapsed:.3f}s"
        assert elapsed < 1.0
        assert decimal_digits(big) == decimal_digits(u_rec(fib, 10**5))
        assert spot_m == spot_r and decimal_digits(spot_m) == decimal_digits(spot_r)


def test_8_property_suites():
    with criterion("8 property suites (fixed seed)") as d:
        rng = random.Random(SEED)
        failures = 0
        # Pascal identity
        for k in range(41):
            for r in range(k + 1):
                lower = binomial(k, r - 1) if r else 0
                failures += binomial(k, r) + lower != binomial(k + 1, r)
        # isqrt contract
        for _ in range(100_000):
            x = rng.randrange(10**30 + 1)
            s = isqrt(x)
            failures += not (s * s <= x < (s + 1) * (s + 1))
        # pure periodicity when gcd(Q, m) = 1
        from math import gcd

        for m in range(2, 13):
            for P in range(-4, 5):
                for Q in range(-4, 5):
                    if gcd(Q, m) == 1:
                        failures += period_mod(LucasParams(P, Q), m).preperiod != 0
        # sign symmetry
        for _ in range(2000):
            P, Q, n = rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(1, 120)
            failures += u_rec(LucasParams(-P, Q), n) != (-1) ** (n - 1) * u_rec(LucasParams(P, Q), n)
        # classifier residue soundness
        for P in range(-20, 21):
            for Q in range(-20, 21):
                pq = LucasParams(P, Q)
                for n in range(0, 601):
                    v = classify(pq, n)
                    if v.applicable:
                        got = u_mod(pq, n, 4)
                        failures += any(got != r for r in v.predicted_residues_mod4.values())
        d["text"] = f"{failures} failures"
        assert failures == 0
