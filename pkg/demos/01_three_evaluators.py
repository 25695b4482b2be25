"""Three ways to compute U_n(P, Q), and why they agree.

Run with ``python demos/01_three_evaluators.py``.
"""

import time

from lucas_squares import LucasParams, u_closed, u_matrix, u_rec

# The recurrence: U_0 = 0, U_1 = 1, U_n = P*U_{n-1} - Q*U_{n-2}.
# (P, Q) = (1, -1) gives the Fibonacci numbers.
fib = LucasParams(1, -1)
print("F_0..F_12 :", [u_rec(fib, n) for n in range(13)])

# The closed form is a signed sum over one diagonal of Pascal's triangle.
# For n = 7 it expands to P^6 - 5 P^4 Q + 6 P^2 Q^2 - Q^3.
pq = LucasParams(3, -2)
P, Q = pq.P, pq.Q
print("U_7(3,-2) :", u_closed(pq, 7), "=", P**6 - 5 * P**4 * Q + 6 * P**2 * Q**2 - Q**3)

# Companion-matrix powering needs only O(log n) multiplications.
for n in (10, 1_000, 10_000):
    t0 = time.perf_counter()
    a = u_rec(fib, n)
    t1 = time.perf_counter()
    b = u_matrix(fib, n)
    t2 = time.perf_counter()
    print(f"n={n:>6}: equal={a == b}  rec {1e3 * (t1 - t0):7.2f} ms  matrix {1e3 * (t2 - t1):7.2f} ms")

# Exhaustive agreement over a small box is the executable version of the
# induction proof for the closed form.
bad = [
    (P, Q, n)
    for P in range(-4, 5)
    for Q in range(-4, 5)
    for n in range(1, 33)
    if not u_rec(LucasParams(P, Q), n) == u_closed(LucasParams(P, Q), n) == u_matrix(LucasParams(P, Q), n)
]
print("disagreements over P,Q in [-4,4], n in [1,32]:", len(bad))
