"""Classifying (P, Q, n) triples by their mod-4 obstructions.

A square is 0 or 1 mod 4. Each criterion pins U_n to residue 2 or 3, which
rules out a square without ever computing U_n.

Run with ``python demos/03_nonsquare_criteria.py``.
"""

from lucas_squares import LucasParams, classify, explain, u_rec

for P, Q, n in [(1, 3, 9), (1, 1, 7), (5, 2, 5), (3, 4, 4), (7, 1, 2), (-1, 8, 2)]:
    v = classify(LucasParams(P, Q), n)
    print(explain(v))
    print(f"  exact U_{n} = {u_rec(LucasParams(P, Q), n)}\n")

# The odd-n examples n = 3, 5, ..., 17: which odd Q residues give a verdict?
print("n   Q=1 (mod 4)        Q=3 (mod 4)")
for n in range(3, 19, 2):
    row = []
    for q in (1, 3):
        v = classify(LucasParams(1, q), n)
        row.append(",".join(c.value for c in v.applicable) or "inconclusive")
    print(f"{n:<3} {row[0]:<18} {row[1]}")
