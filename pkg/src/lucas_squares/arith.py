"""Exact integer helpers: binomials, integer square roots, square tests, residues."""

from __future__ import annotations

import sys

# Squares mod 64 occupy only 12 of the 64 classes; anything else is rejected
# before the root is taken.
_SQUARES_MOD_64 = frozenset((i * i) % 64 for i in range(64))


def binomial(n: int, k: int) -> int:
    """Return C(n, k), or 0 when k > n.

    Uses the multiplicative formula; every intermediate quotient is itself a
    binomial coefficient so the floor division is exact.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for i in range(1, k + 1):
        acc = acc * (n - k + i) // i
    return acc


def isqrt(x: int) -> int:
    """Floor of the square root of a nonnegative integer, by Newton iteration.

    Starts from a power of two at or above the true root, so the iterates
    decrease strictly until they reach the floor root.
    """
    if x < 0:
        raise ValueError(f"isqrt of negative number {x}")
    if x < 2:
        return x
    s = 1 << ((x.bit_length() + 1) // 2)
    while True:
        t = (s + x // s) >> 1
        if t >= s:
            return s
        s = t


def is_perfect_square(x: int) -> bool:
    """True iff x = s*s for some integer s. Zero counts, negatives never do."""
    if x < 0:
        return False
    if (x & 63) not in _SQUARES_MOD_64:
        return False
    s = isqrt(x)
    return s * s == x


def is_nonzero_square(x: int) -> bool:
    return x > 0 and is_perfect_square(x)


def mod_norm(x: int, m: int) -> int:
    """Least nonnegative residue of x modulo m (m >= 2)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return x % m


def decimal_digits(x: int) -> int:
    """Number of decimal digits of |x| (0 has one digit)."""
    x = abs(x)
    if x < 10:
        return 1
    # first guess from the bit length, then correct by at most one
    d = int((x.bit_length() - 1) * 0.30102999566398119521) + 1
    p = 10 ** (d - 1)
    if x < p:
        return d - 1
    if x >= p * 10:
        return d + 1
    return d


def to_decimal(x: int) -> str:
    """Full decimal string of x, regardless of the interpreter's digit limit."""
    setter = getattr(sys, "set_int_max_str_digits", None)
    if setter is None:
        return str(x)
    old = sys.get_int_max_str_digits()
    if old == 0:
        return str(x)
    setter(0)
    try:
        return str(x)
    finally:
        setter(old)
