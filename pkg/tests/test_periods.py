import math

import pytest

from lucas_squares.lucas_core import LucasParams, u_mod
from lucas_squares.periods import period_mod, residues_mod


def brute_force_period(P, Q, m):
    # oracle: smallest (preperiod, period) found by direct scanning of a long
    # residue list; states repeat within m*m steps
    seq = [0, 1 % m]
    span = 3 * m * m + 4
    while len(seq) < span:
        seq.append((P * seq[-1] - Q * seq[-2]) % m)
    for mu in range(m * m + 1):
        for lam in range(1, m * m + 1):
            if all(seq[k] == seq[k + lam] for k in range(mu, mu + m * m + 2)):
                return mu, lam
    raise AssertionError("no period found")


def test_fibonacci_mod_4_table():
    info = period_mod(LucasParams(1, -1), 4)
    assert (info.preperiod, info.period, info.cycle) == (0, 6, (0, 1, 1, 2, 3, 1))
    # the same cycle read from n = 1
    assert [info.residue(k) for k in range(1, 7)] == [1, 1, 2, 3, 1, 0]


def test_u11_mod_4_table():
    info = period_mod(LucasParams(1, 1), 4)
    assert (info.preperiod, info.period, info.cycle) == (0, 6, (0, 1, 1, 0, 3, 3))
    assert [info.residue(k) for k in range(1, 7)] == [1, 1, 0, 3, 3, 0]


def test_preperiod_example():
    info = period_mod(LucasParams(3, 2), 4)
    assert (info.preperiod, info.period, info.prefix, info.cycle) == (2, 1, (0, 1), (3,))


def test_residues_mod_examples():
    assert residues_mod(LucasParams(1, -1), 4, 10) == [0, 1, 1, 2, 3, 1, 0, 1, 1, 2]
    assert residues_mod(LucasParams(1, 1), 4, 12) == [0, 1, 1, 0, 3, 3, 0, 1, 1, 0, 3, 3]
    assert residues_mod(LucasParams(17, 9), 2, 2) == [0, 1]


def test_bad_modulus():
    with pytest.raises(ValueError):
        period_mod(LucasParams(1, 1), 1)
    with pytest.raises(ValueError):
        residues_mod(LucasParams(1, 1), 0, 5)


def test_matches_brute_force_oracle():
    for m in range(2, 8):
        for P in range(m):
            for Q in range(m):
                info = period_mod(LucasParams(P, Q), m)
                assert (info.preperiod, info.period) == brute_force_period(P, Q, m), (P, Q, m)


def test_cycle_faithfulness_and_purity():
    for m in range(2, 13):
        for P in range(-4, 5):
            for Q in range(-4, 5):
                pq = LucasParams(P, Q)
                info = period_mod(pq, m)
                res = residues_mod(pq, m, 4 * m * m + 1)
                assert [info.residue(k) for k in range(len(res))] == res
                assert len(info.cycle) == info.period and len(info.prefix) == info.preperiod
                if math.gcd(Q, m) == 1:
                    assert info.preperiod == 0


def test_minimality():
    for m in range(2, 13):
        for P in range(-4, 5):
            for Q in range(-4, 5):
                info = period_mod(LucasParams(P, Q), m)
                p = info.period
                for d in range(1, p):
                    if p % d == 0:
                        assert any(info.cycle[i] != info.cycle[(i + d) % p] for i in range(p))
                if info.preperiod:
                    # shortening the prefix must break periodicity
                    k = info.preperiod - 1
                    assert info.prefix[k] != info.cycle[-1]


def test_u_mod_consistency():
    for m in (2, 3, 4, 6, 9, 10):
        for P, Q in [(1, -1), (1, 1), (3, 2), (-2, 4), (5, 6)]:
            pq = LucasParams(P, Q)
            info = period_mod(pq, m)
            for k in range(1001):
                assert u_mod(pq, k, m) == info.residue(k)


def test_brent_agrees_with_dict():
    for m in (2, 3, 4, 8, 12, 25):
        for P in range(-3, 4):
            for Q in range(-3, 4):
                pq = LucasParams(P, Q)
                assert period_mod(pq, m, method="dict") == period_mod(pq, m, method="brent")


def test_large_modulus_uses_brent():
    # F_n mod 5000: Pisano period of 5000 is 7500
    info = period_mod(LucasParams(1, -1), 5000)
    assert (info.preperiod, info.period) == (0, 7500)
    assert info == period_mod(LucasParams(1, -1), 5000, method="dict")


def test_unknown_method():
    with pytest.raises(ValueError):
        period_mod(LucasParams(1, 1), 4, method="floyd")
