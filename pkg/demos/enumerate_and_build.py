"""Enumerate joint ordered factorisations and build the systems they encode.

Run:  python demos/enumerate_and_build.py
"""

from sumsystems import (
    build_centred,
    build_sum_system,
    centre,
    enumerate_jofs,
    jof_to_text,
    parse_jof_text,
    sigma_a,
    tau_c,
    to_sum_and_distance,
    verify_centred,
    verify_sum_system,
)

# every joint ordered factorisation of (2, 2): interleave the two parts
print("target cardinalities (2, 2):")
for jof in enumerate_jofs((2, 2)):
    print("  " + jof_to_text(jof))
print()

# a richer tuple; adjacent entries must name different parts, which is
# why (2, 6) admits four factorisations rather than one
print("target cardinalities (2, 6):")
for jof in enumerate_jofs((2, 6)):
    print("  " + jof_to_text(jof), "->", build_sum_system(jof).components)
print()

# the worked three-part example for N = 270
text = "1:3,3:3,1:3,3:2,2:5"
jof = parse_jof_text(text)
print("factorisation", text)
system = build_sum_system(jof)
for idx, comp in enumerate(system.components, start=1):
    print(f"  A_{idx} = {comp}")
ok, reason = verify_sum_system(system)
print(f"  sums cover 0..{system.N - 1} uniquely: {ok}")
print(f"  sigma = {sigma_a(system)}  (closed form {system.N * (system.N - 1) // 2})")
print()

# centring subtracts each component's midpoint; values are stored doubled
# so half-integer components stay exact
centred = centre(system)
for idx, comp in enumerate(centred.components, start=1):
    tag = "half-integers" if centred.half_integer[idx - 1] else "integers"
    print(f"  2*C_{idx} = {comp}  ({tag})")
ok, reason = verify_centred(centred)
print(f"  centred sums cover the symmetric target: {ok}")
print(f"  sum of squares = {tau_c(centred)}  (closed form N(N^2-1)/12)")
assert centred == build_centred(jof)
print()

# keeping only the positive halves gives the sum-and-distance form
sd = to_sum_and_distance(centred)
for idx, comp in enumerate(sd.components, start=1):
    print(f"  2*B_{idx} = {comp}")
print(f"  even-cardinality parts {sd.even_parts}, odd-cardinality parts {sd.odd_parts}")
