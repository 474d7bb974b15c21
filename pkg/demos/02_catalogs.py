"""
Catalogs of small weakly labeled graphs
=======================================

The search fixes the set of non-leaves first and then walks the labels
upward, so each graph is produced once.  A brute-force sweep over all edge
sets serves as the independent check for small n.
"""

import time

from weak_harmonic import EnumOptions, brute_force_oracle, build, enumerate_catalog
from weak_harmonic.enumeration import disconnected_samples
from weak_harmonic.graphs import leaves

for n in range(3, 12):
    t0 = time.perf_counter()
    cat = enumerate_catalog(EnumOptions(n))
    up_to_flip = enumerate_catalog(EnumOptions(n, dedup_inversion=True)).count
    print(f"n={n:2d}: {cat.count:4d} graphs, {up_to_flip:4d} up to reversal  ({time.perf_counter() - t0:.2f}s)")

# the first few match an exhaustive sweep exactly
for n in range(3, 7):
    assert enumerate_catalog(EnumOptions(n)).serialized() == brute_force_oracle(n).serialized()
print("brute force agrees for n <= 6")

# a look at n = 7
for c in enumerate_catalog(EnumOptions(7)):
    g = build(c)
    print(f"  {str(c):30s} leaves {sorted(leaves(g))}")

# multigraphs with edge multiplicity up to 4
print("multigraph counts:", [enumerate_catalog(EnumOptions(n, max_multiplicity=4)).count for n in range(3, 7)])

# disconnected examples: n = 6 only splits trivially, n = 8 has interleaved ones
print("disconnected n=6:", disconnected_samples(6).serialized())
print("disconnected n=8:", disconnected_samples(8).count, "examples")
