#!/usr/bin/env python3
# Distribution polynomials over conjugacy classes, by exact enumeration.
# The class with cycle type (1,5,5) has 798,336 members and folds in a
# couple of seconds; nothing is ever stored in memory.

import time

from cyclestat import (
    ClassSpec,
    class_size,
    count_snki,
    dist_cval,
    dist_exc,
    dist_joint,
    partitions_of,
    z_lambda,
)
from cyclestat.permutations import CycleType

# Small classes first.
for text in ("3", "1,2", "2,2"):
    spec = ClassSpec.parse(text)
    print(f"lambda={text}:  exc: {dist_exc(spec)}   cval: {dist_cval(spec)}")

# Strata by fixed-point count work the same way ("n=4,k=0" means the
# derangements of 4).
print("derangements of 4:", dist_exc(ClassSpec.parse("n=4,k=0")))

# The showcase class.
ct = CycleType((1, 5, 5))
print()
print(f"lambda = {ct}: z = {z_lambda(ct)}, class size = {class_size(ct)}")
start = time.perf_counter()
joint = dist_joint(ClassSpec.of_cycle_type(ct))
print(f"joint distribution, enumerated in {time.perf_counter() - start:.2f}s:")
for i in range(joint.s_degree() + 1):
    row = joint.coefficient_of_s(i)
    if not row.is_zero():
        print(f"  [s^{i}] {row}")

# Counts by length, fixed points, and cyclic valleys.
print()
print("members of S_5 with k fixed points and i cyclic valleys:")
for k in range(5, -1, -1):
    row = [count_snki(5, k, i) for i in range(0, (5 - k) // 2 + 1)]
    print(f"  k={k}: {row}")

# Class sizes always add up to n!.
print()
print("sum over classes of S_6:", sum(class_size(ct) for ct in partitions_of(6)))
