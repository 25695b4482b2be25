"""Where do nonzero squares actually occur?

Run with ``python demos/04_square_census.py``.
"""

from math import gcd

from lucas_squares import LucasParams, census, check_rm_subset

# Fibonacci: the only nonzero squares are F_1 = F_2 = 1 and F_12 = 144.
print("Fibonacci:", census(LucasParams(1, -1), 500).square_indices)

# Without the parity hypotheses squares can be everywhere: U_n(2, 1) = n.
print("U_n(2,1):", census(LucasParams(2, 1), 50).square_indices)

# For odd, coprime P, Q with P^2 - 4Q > 0, squares only sit at n in
# {1, 2, 3, 6, 12}. A desk-scale sweep finds no exceptions.
rep = check_rm_subset(15, 15, 500, jobs=2)
print(f"odd coprime sweep: {rep.triples_checked} terms scanned, {len(rep.square_violations)} violations")

hits = {}
for P in range(1, 16, 2):
    for Q in range(-15, 16, 2):
        pq = LucasParams(P, Q)
        if gcd(P, Q) == 1 and P * P - 4 * Q > 0:
            for n, root in census(pq, 200).square_indices:
                if n > 2:
                    hits.setdefault(n, []).append((P, Q, root))
for n in sorted(hits):
    print(f"  squares at n={n}:", hits[n][:6], "..." if len(hits[n]) > 6 else "")
