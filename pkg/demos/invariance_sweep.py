"""Sweep every system up to a bound and check the two invariants.

For a system with target N, the component sums obey

    sum_j (N / n_j) * sum(A_j) = N(N - 1) / 2

and the centred sums of squares obey

    sum_j (N / n_j) * sum(c^2 for c in C_j) = N(N^2 - 1) / 12

independent of which factorisation produced the system.

Run:  python demos/invariance_sweep.py
"""

from fractions import Fraction

from sumsystems import (
    big_omega,
    build_centred,
    build_sum_system,
    count_m_part,
    enumerate_jofs,
    ordered_factorisations,
    sigma_a,
    tau_c,
    verify_centred,
    verify_sum_system,
)

LIMIT = 60

systems = 0
largest = (0, None)
for n in range(2, LIMIT + 1):
    for m in range(1, big_omega(n) + 1):
        for parts in ordered_factorisations(n, m):
            for jof in enumerate_jofs(parts):
                plain = build_sum_system(jof)
                ok, reason = verify_sum_system(plain)
                assert ok, reason
                assert sigma_a(plain) == n * (n - 1) // 2

                centred = build_centred(jof)
                ok, reason = verify_centred(centred)
                assert ok, reason
                assert tau_c(centred) == Fraction(n * (n * n - 1), 12)

                systems += 1
                if len(jof) > largest[0]:
                    largest = (len(jof), jof)

print(f"checked {systems} systems with N <= {LIMIT}")
print("every one covers its target uniquely and hits both closed forms")
print(f"longest factorisation seen: {largest[1]}")
print()

# a taste of how the counts grow: the busiest targets in range
print(" N   total systems over all m")
for n in range(2, LIMIT + 1):
    total = sum(count_m_part(n, m).value for m in range(1, big_omega(n) + 1))
    if total >= 200:
        print(f"{n:>3}  {total}")
