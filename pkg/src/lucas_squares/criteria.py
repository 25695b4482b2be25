"""Mod-4 obstructions to U_n(P, Q) being a nonzero square.

A perfect square is 0 or 1 mod 4, so whenever the hypotheses below force
U_n into residue 2 or 3, U_n cannot be a square.

======  =======================================================  =========
id      hypotheses                                               U_n mod 4
======  =======================================================  =========
T31A    P, Q, n odd; n = 3 (mod 6); Q = 3 (mod 4)                2
T31B    P, Q, n odd; n = 5 (mod 6); Q = 1 (mod 4)                3
T32     P, n odd; n >= 3; Q = 2 (mod 4)                          3
T33     P = 3 (mod 4); n even, n >= 2; Q = 0 (mod 4)             3
T34     n = 2; P = 2 or 3 (mod 4)                                P mod 4
======  =======================================================  =========

All hypotheses are tested on least nonnegative residues, so negative P and Q
are handled (P = -1 satisfies P = 3 (mod 4)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from lucas_squares.lucas_core import LucasParams


class CriterionId(str, enum.Enum):
    T31A = "T31A"
    T31B = "T31B"
    T32 = "T32"
    T33 = "T33"
    T34 = "T34"

    def __str__(self) -> str:
        return self.value


class Conclusion(str, enum.Enum):
    PROVED_NON_SQUARE = "PROVED_NON_SQUARE"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CriterionVerdict:
    params: LucasParams
    n: int
    applicable: tuple[CriterionId, ...] = ()
    predicted_residues_mod4: dict[CriterionId, int] = field(default_factory=dict)

    @property
    def conclusion(self) -> Conclusion:
        if self.applicable:
            return Conclusion.PROVED_NON_SQUARE
        return Conclusion.INCONCLUSIVE

    def as_dict(self) -> dict:
        return {
            "P": self.params.P,
            "Q": self.params.Q,
            "n": self.n,
            "applicable": [c.value for c in self.applicable],
            "predicted_residues_mod4": {c.value: r for c, r in self.predicted_residues_mod4.items()},
            "conclusion": self.conclusion.value,
        }


def _applicable(p4: int, q4: int, n: int) -> list[tuple[CriterionId, int]]:
    out = []
    p_odd, q_odd, n_odd = p4 & 1, q4 & 1, n & 1
    if p_odd and q_odd and n_odd:
        if n % 6 == 3 and q4 == 3:
            out.append((CriterionId.T31A, 2))
        if n % 6 == 5 and q4 == 1:
            out.append((CriterionId.T31B, 3))
    if p_odd and n_odd and n >= 3 and q4 == 2:
        out.append((CriterionId.T32, 3))
    # n = 0 is left out: U_0 = 0 and the congruence argument needs n - 1 >= 1
    if p4 == 3 and not n_odd and n >= 2 and q4 == 0:
        out.append((CriterionId.T33, 3))
    if n == 2 and p4 in (2, 3):
        out.append((CriterionId.T34, p4))
    return out


def classify(params: LucasParams, n: int) -> CriterionVerdict:
    """Every criterion whose hypotheses hold for (P, Q, n).

    An empty result means INCONCLUSIVE, never that U_n is a square.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    hits = _applicable(params.P % 4, params.Q % 4, n)
    return CriterionVerdict(
        params=params,
        n=n,
        applicable=tuple(c for c, _ in hits),
        predicted_residues_mod4=dict(hits),
    )


_HYPOTHESES = {
    CriterionId.T31A: "P, Q, n odd; n ≡ 3 (mod 6); Q ≡ 3 (mod 4)",
    CriterionId.T31B: "P, Q, n odd; n ≡ 5 (mod 6); Q ≡ 1 (mod 4)",
    CriterionId.T32: "P, n odd; n ≥ 3; Q ≡ 2 (mod 4)",
    CriterionId.T33: "P ≡ 3 (mod 4); n even, n ≥ 2; Q ≡ 0 (mod 4)",
    CriterionId.T34: "n = 2; P ≡ 2 or 3 (mod 4)",
}


def explain(verdict: CriterionVerdict) -> str:
    P, Q, n = verdict.params.P, verdict.params.Q, verdict.n
    head = (
        f"U_{n}({P}, {Q}): P ≡ {P % 4} (mod 4), Q ≡ {Q % 4} (mod 4), "
        f"n ≡ {n % 6} (mod 6)"
    )
    if not verdict.applicable:
        return head + "\nno criterion applies: INCONCLUSIVE (this does not mean U_n is a square)"
    lines = [head]
    for cid in sorted(verdict.applicable, key=lambda c: c.value):
        r = verdict.predicted_residues_mod4[cid]
        lines.append(f"{cid.value}: {_HYPOTHESES[cid]} => U_n ≡ {r} (mod 4), not a square")
    lines.append(f"conclusion: {verdict.conclusion.value}")
    return "\n".join(lines)
