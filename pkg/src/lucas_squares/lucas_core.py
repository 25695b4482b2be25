"""Evaluators for the Lucas sequence of the first kind.

``U_0 = 0``, ``U_1 = 1`` and ``U_n = P*U_{n-1} - Q*U_{n-2}``. Three exact
evaluators are kept deliberately independent of each other so they can be
cross-checked: linear iteration, the binomial closed form, and powering of
the companion matrix ``[[P, -Q], [1, 0]]``. ``u_mod`` is the fast residue path.
"""

from __future__ import annotations

from dataclasses import dataclass

from lucas_squares.arith import binomial

# Residue arithmetic is kept to word-size moduli.
MAX_MODULUS = (1 << 63) - 1


@dataclass(frozen=True)
class LucasParams:
    """The pair (P, Q). Any integers are accepted, including 0 and negatives."""

    P: int
    Q: int

    @property
    def discriminant(self) -> int:
        return self.P * self.P - 4 * self.Q


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")


def _check_modulus(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > MAX_MODULUS:
        raise ValueError(f"modulus {m} exceeds the word-size limit {MAX_MODULUS}")


def u_rec(params: LucasParams, n: int) -> int:
    """U_n by running the recurrence forward, O(n) big-integer steps."""
    _check_index(n)
    P, Q = params.P, params.Q
    prev, cur = 0, 1
    if n == 0:
        return 0
    for _ in range(n - 1):
        prev, cur = cur, P * cur - Q * prev
    return cur


def u_closed(params: LucasParams, n: int) -> int:
    r"""U_n from the alternating binomial sum.

    .. math:: U_n = \sum_{r=0}^{\lfloor (n-1)/2 \rfloor}
              (-1)^r P^{n-1-2r} Q^r \binom{n-1-r}{r}

    Valid for n >= 1 only; ``n = 0`` raises. Python's ``0 ** 0 == 1`` gives the
    convention needed when P = 0.
    """
    _check_index(n)
    if n == 0:
        raise ValueError("closed form is defined for n >= 1; use u_rec for n = 0")
    P, Q = params.P, params.Q
    total = 0
    for r in range((n - 1) // 2 + 1):
        term = P ** (n - 1 - 2 * r) * Q**r * binomial(n - 1 - r, r)
        total += -term if r & 1 else term
    return total


def _mat_mul(a, b):
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    return (
        (a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
        (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11),
    )


def _mat_mul_mod(a, b, m):
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    return (
        ((a00 * b00 + a01 * b10) % m, (a00 * b01 + a01 * b11) % m),
        ((a10 * b00 + a11 * b10) % m, (a10 * b01 + a11 * b11) % m),
    )


def u_matrix(params: LucasParams, n: int) -> int:
    """U_n via square-and-multiply on the companion matrix.

    ``M**n @ (U_1, U_0)^T = (U_{n+1}, U_n)^T``, so U_n is the lower-left entry
    of ``M**n`` (the seed column is (1, 0)).
    """
    _check_index(n)
    base = ((params.P, -params.Q), (1, 0))
    acc = ((1, 0), (0, 1))
    while n:
        if n & 1:
            acc = _mat_mul(acc, base)
        n >>= 1
        if n:
            base = _mat_mul(base, base)
    return acc[1][0]


def u_mod(params: LucasParams, n: int, m: int) -> int:
    """U_n mod m in O(log n) steps, with every entry kept reduced mod m."""
    _check_index(n)
    _check_modulus(m)
    base = ((params.P % m, (-params.Q) % m), (1, 0))
    acc = ((1, 0), (0, 1 % m))
    while n:
        if n & 1:
            acc = _mat_mul_mod(acc, base, m)
        n >>= 1
        if n:
            base = _mat_mul_mod(base, base, m)
    return acc[1][0] % m
