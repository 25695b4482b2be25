"""Residues mod 4 repeat with period 6 for (1, -1) and (1, 1).

Run with ``python demos/02_mod4_tables.py``.
"""

from lucas_squares import LucasParams, period_mod, residues_mod, u_mod

for P, Q in [(1, -1), (1, 1)]:
    pq = LucasParams(P, Q)
    info = period_mod(pq, 4)
    print(f"U_n({P},{Q}) mod 4, n = 0..17:", residues_mod(pq, 4, 18))
    print(f"  preperiod {info.preperiod}, period {info.period}, cycle {list(info.cycle)}")

# When gcd(Q, m) > 1 the state map is not invertible and a tail can appear:
# U_n(3, 2) = 2^n - 1, which is 3 mod 4 from n = 2 on.
info = period_mod(LucasParams(3, 2), 4)
print("U_n(3,2) mod 4: prefix", list(info.prefix), "then", list(info.cycle), "forever")

# Larger moduli work the same way. F_n mod 10 has the well-known period 60.
print("F_n mod 10 period:", period_mod(LucasParams(1, -1), 10).period)

# With the cycle in hand, an astronomically large index is a table lookup,
# and the fast modular path agrees with it.
n = 10**30 + 7
fib4 = period_mod(LucasParams(1, -1), 4)
print(f"F_(10^30+7) mod 4: lookup {fib4.residue(n)}, u_mod {u_mod(LucasParams(1, -1), n, 4)}")
