"""Eventual periods of U_n(P, Q) reduced modulo m.

The pair ``(U_k mod m, U_{k+1} mod m)`` determines everything after it, and at
most m*m such pairs exist, so the residue sequence is eventually periodic. A
nonzero preperiod only shows up when gcd(Q, m) > 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from lucas_squares.lucas_core import LucasParams, _check_modulus

# Up to this modulus a visited-state dict is used; above it, Brent's method
# (constant memory).
DICT_MODULUS_LIMIT = 4096


@dataclass(frozen=True)
class PeriodInfo:
    """Residues of U_n mod ``modulus``: ``prefix`` (U_0 .. U_{preperiod-1})
    followed by ``cycle`` repeated forever."""

    modulus: int
    preperiod: int
    period: int
    cycle: tuple[int, ...]
    prefix: tuple[int, ...]

    def residue(self, k: int) -> int:
        """Residue of U_k reconstructed from prefix and cycle."""
        if k < 0:
            raise ValueError(f"index must be nonnegative, got {k}")
        if k < self.preperiod:
            return self.prefix[k]
        return self.cycle[(k - self.preperiod) % self.period]

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "preperiod": self.preperiod,
            "period": self.period,
            "cycle": list(self.cycle),
            "prefix": list(self.prefix),
        }


def residues_mod(params: LucasParams, m: int, count: int) -> list[int]:
    """Residues of U_0 .. U_{count-1} mod m, by iterating the recurrence mod m."""
    _check_modulus(m)
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    p, q = params.P % m, params.Q % m
    out = []
    a, b = 0, 1 % m
    for _ in range(count):
        out.append(a)
        a, b = b, (p * b - q * a) % m
    return out


def _step(p: int, q: int, m: int):
    def f(state):
        a, b = state
        return b, (p * b - q * a) % m

    return f


def _find_cycle_dict(f, x0):
    seen = {}
    x, k = x0, 0
    while x not in seen:
        seen[x] = k
        x = f(x)
        k += 1
    mu = seen[x]
    return mu, k - mu


def _find_cycle_brent(f, x0):
    # period first, by doubling the search window
    power = lam = 1
    tortoise, hare = x0, f(x0)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = f(hare)
        lam += 1
    # then preperiod, with two pointers lam apart
    tortoise = hare = x0
    for _ in range(lam):
        hare = f(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = f(tortoise), f(hare)
        mu += 1
    return mu, lam


def period_mod(params: LucasParams, m: int, *, method: str | None = None) -> PeriodInfo:
    """Minimal preperiod and period of U_n mod m, plus the residues themselves.

    ``method`` forces ``"dict"`` or ``"brent"``; by default the dict is used for
    ``m <= DICT_MODULUS_LIMIT``.
    """
    _check_modulus(m)
    if method is None:
        method = "dict" if m <= DICT_MODULUS_LIMIT else "brent"
    if method not in ("dict", "brent"):
        raise ValueError(f"unknown cycle-finding method {method!r}")

    f = _step(params.P % m, params.Q % m, m)
    x0 = (0, 1 % m)
    finder = _find_cycle_dict if method == "dict" else _find_cycle_brent
    mu, lam = finder(f, x0)

    res = residues_mod(params, m, mu + lam)
    return PeriodInfo(
        modulus=m,
        preperiod=mu,
        period=lam,
        cycle=tuple(res[mu:]),
        prefix=tuple(res[:mu]),
    )
