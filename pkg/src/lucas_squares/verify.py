"""Exhaustive grid checks over small parameter ranges.

Every check here is a finite sweep whose expected outcome is "no failures":

* ``check_equivalence`` -- the three exact evaluators agree;
* ``verify_criterion`` -- each mod-4 criterion predicts the right residue, and
  (up to ``direct_limit``) the exact value really is not a nonzero square;
* ``check_rm_subset`` -- for odd coprime P, Q with positive discriminant, the
  nonzero squares only occur at n in {1, 2, 3, 6, 12}.

Grid points are independent. Work is split by P value and may run in a
process pool (``jobs > 1``); all result lists are sorted by (P, Q, n), so a
report does not depend on the degree of parallelism.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, NamedTuple, Sequence

from lucas_squares.arith import is_nonzero_square, isqrt
from lucas_squares.criteria import CriterionId, classify
from lucas_squares.lucas_core import LucasParams, u_closed, u_matrix, u_mod, u_rec

ALL = "ALL"
EQUIV = "EQUIV"
RM = "RM"

# Indices where U_n may be a nonzero square under the Ribenboim-McDaniel
# hypotheses. n = 0 is omitted: U_0 = 0 is not a nonzero square.
RM_SQUARE_INDICES = frozenset({1, 2, 3, 6, 12})


class ResidueMismatch(NamedTuple):
    P: int
    Q: int
    n: int
    criterion: str
    expected: int
    actual: int


class SquareViolation(NamedTuple):
    P: int
    Q: int
    n: int
    value: int


class EvaluatorMismatch(NamedTuple):
    P: int
    Q: int
    n: int
    rec: int
    closed: int
    matrix: int


@dataclass(frozen=True)
class GridSpec:
    p_values: tuple[int, ...]
    q_values: tuple[int, ...]
    n_min: int
    n_max: int
    direct_limit: int

    def __post_init__(self):
        if self.n_min < 0:
            raise ValueError(f"n_range lower bound must be >= 0, got {self.n_min}")
        if self.n_max < self.n_min:
            raise ValueError(f"empty n_range [{self.n_min}, {self.n_max}]")
        if self.direct_limit < 0 or self.direct_limit > self.n_max:
            raise ValueError(
                f"direct_limit must lie in [0, {self.n_max}], got {self.direct_limit}"
            )
        object.__setattr__(self, "p_values", tuple(self.p_values))
        object.__setattr__(self, "q_values", tuple(self.q_values))

    @classmethod
    def box(cls, p_bound: int, q_bound: int, n_min: int, n_max: int, direct_limit: int) -> GridSpec:
        """Grid with P in [-p_bound, p_bound] and Q in [-q_bound, q_bound]."""
        return cls(
            p_values=tuple(range(-p_bound, p_bound + 1)),
            q_values=tuple(range(-q_bound, q_bound + 1)),
            n_min=n_min,
            n_max=n_max,
            direct_limit=direct_limit,
        )


@dataclass
class VerificationReport:
    criterion: str
    triples_checked: int = 0
    residue_mismatches: list[ResidueMismatch] = field(default_factory=list)
    square_violations: list[SquareViolation] = field(default_factory=list)
    evaluator_mismatches: list[EvaluatorMismatch] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return (
            len(self.residue_mismatches)
            + len(self.square_violations)
            + len(self.evaluator_mismatches)
        )

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def merge(self, other: VerificationReport) -> None:
        self.triples_checked += other.triples_checked
        self.residue_mismatches.extend(other.residue_mismatches)
        self.square_violations.extend(other.square_violations)
        self.evaluator_mismatches.extend(other.evaluator_mismatches)

    def canonicalize(self) -> VerificationReport:
        self.residue_mismatches.sort()
        self.square_violations.sort()
        self.evaluator_mismatches.sort()
        return self

    def as_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "triples_checked": self.triples_checked,
            "ok": self.ok,
            "residue_mismatches": [r._asdict() for r in self.residue_mismatches],
            "square_violations": [r._asdict() for r in self.square_violations],
            "evaluator_mismatches": [r._asdict() for r in self.evaluator_mismatches],
        }


@dataclass
class CensusReport:
    params: LucasParams
    n_max: int
    zero_indices: list[int] = field(default_factory=list)
    square_indices: list[tuple[int, int]] = field(default_factory=list)

    @property
    def square_set(self) -> set[int]:
        return {n for n, _ in self.square_indices}

    def as_dict(self) -> dict:
        return {
            "P": self.params.P,
            "Q": self.params.Q,
            "n_max": self.n_max,
            "zero_indices": list(self.zero_indices),
            "square_indices": [[n, root] for n, root in self.square_indices],
        }


def _run(worker: Callable, tasks: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _collect(label: str, parts: Iterable[VerificationReport]) -> VerificationReport:
    report = VerificationReport(criterion=label)
    for part in parts:
        report.merge(part)
    return report.canonicalize()


# -- evaluator equivalence -------------------------------------------------

def _equiv_for_p(task) -> VerificationReport:
    P, q_bound, n_max = task
    part = VerificationReport(criterion=EQUIV)
    for Q in range(-q_bound, q_bound + 1):
        params = LucasParams(P, Q)
        for n in range(1, n_max + 1):
            a, b, c = u_rec(params, n), u_closed(params, n), u_matrix(params, n)
            part.triples_checked += 1
            if not a == b == c:
                part.evaluator_mismatches.append(EvaluatorMismatch(P, Q, n, a, b, c))
    return part


def check_equivalence(p_bound: int, q_bound: int, n_max: int, *, jobs: int = 1) -> VerificationReport:
    """Compare u_rec, u_closed and u_matrix on every P, Q in the box and 1 <= n <= n_max."""
    if min(p_bound, q_bound, n_max) < 1:
        raise ValueError("bounds must be >= 1")
    tasks = [(P, q_bound, n_max) for P in range(-p_bound, p_bound + 1)]
    return _collect(EQUIV, _run(_equiv_for_p, tasks, jobs))


# -- criterion sweeps ------------------------------------------------------

def _criterion_for_p(task) -> VerificationReport:
    label, P, grid = task
    part = VerificationReport(criterion=label)
    wanted = None if label == ALL else CriterionId(label)
    exact_top = min(grid.direct_limit, grid.n_max)
    for Q in grid.q_values:
        params = LucasParams(P, Q)
        exact = None
        for n in range(grid.n_min, grid.n_max + 1):
            verdict = classify(params, n)
            hits = [
                (c, r)
                for c, r in verdict.predicted_residues_mod4.items()
                if wanted is None or c is wanted
            ]
            if not hits:
                continue
            part.triples_checked += 1
            actual = u_mod(params, n, 4)
            for c, r in hits:
                if actual != r:
                    part.residue_mismatches.append(ResidueMismatch(P, Q, n, c.value, r, actual))
            if n <= exact_top:
                if exact is None:
                    exact = _exact_prefix(params, exact_top)
                if is_nonzero_square(exact[n]):
                    part.square_violations.append(SquareViolation(P, Q, n, exact[n]))
    return part


def _exact_prefix(params: LucasParams, top: int) -> list[int]:
    vals = [0, 1]
    P, Q = params.P, params.Q
    while len(vals) <= top:
        vals.append(P * vals[-1] - Q * vals[-2])
    return vals[: top + 1]


def verify_criterion(criterion: CriterionId | str, grid: GridSpec, *, jobs: int = 1) -> VerificationReport:
    """Sweep ``grid`` for one criterion (or ``"ALL"``).

    For each triple meeting the hypotheses: the residue from ``u_mod(.., 4)``
    must equal the predicted one, and for n <= ``grid.direct_limit`` the exact
    U_n must not be a nonzero square.
    """
    label = ALL if str(criterion) == ALL else CriterionId(str(criterion)).value
    tasks = [(label, P, grid) for P in grid.p_values]
    return _collect(label, _run(_criterion_for_p, tasks, jobs))


# -- square census ---------------------------------------------------------

def census(params: LucasParams, n_max: int) -> CensusReport:
    """Zero terms and nonzero-square terms among U_0 .. U_{n_max}."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    report = CensusReport(params=params, n_max=n_max)
    P, Q = params.P, params.Q
    prev, cur = 0, 1
    report.zero_indices.append(0)
    for n in range(1, n_max + 1):
        if cur == 0:
            report.zero_indices.append(n)
        elif cur > 0:
            root = isqrt(cur)
            if root * root == cur:
                report.square_indices.append((n, root))
        prev, cur = cur, P * cur - Q * prev
    return report


def rm_pairs(p_max: int, q_bound: int) -> list[LucasParams]:
    """Odd, coprime (P, Q) with 1 <= P <= p_max, |Q| <= q_bound and P^2 - 4Q > 0."""
    return [
        LucasParams(P, Q)
        for P in range(1, p_max + 1, 2)
        for Q in range(-q_bound, q_bound + 1)
        if Q & 1 and math.gcd(P, Q) == 1 and P * P - 4 * Q > 0
    ]


def _rm_for_pair(task) -> VerificationReport:
    params, n_max = task
    part = VerificationReport(criterion=RM, triples_checked=n_max + 1)
    rep = census(params, n_max)
    for n, root in rep.square_indices:
        if n not in RM_SQUARE_INDICES:
            part.square_violations.append(SquareViolation(params.P, params.Q, n, root * root))
    return part


def check_rm_subset(p_max: int, q_bound: int, n_max: int, *, jobs: int = 1) -> VerificationReport:
    """Census every pair from :func:`rm_pairs` and flag squares at other indices."""
    tasks = [(params, n_max) for params in rm_pairs(p_max, q_bound)]
    return _collect(RM, _run(_rm_for_pair, tasks, jobs))
