"""The sparsening method: distinguish a separated family with a small
random window, then boil repeated flips down to clone classes.

A family of vertices that are pairwise far apart (neighbourhood symmetric
difference at least alpha*n) can be told apart by a random vertex subset
of size about 5 ln(c)/alpha: the expected number of colliding pairs is
below one.  Iterating find-flip-remove and pigeonholing the flipped cores
yields large classes of vertices that all look alike to a small core set.
"""

import math
import random
from fractions import Fraction

from hptools import (BipGraph, bits, distinguishing_set, extract_clone_classes,
                     mask_of, planted_clone_instance, shatters)
from hptools.errors import DomainError

print("=" * 64)
print("Distinguishing sets: one Monte-Carlo sweep")
print("=" * 64)
c, n, alpha = 8, 64, Fraction(1, 4)
size = math.ceil(5 * math.log(c) / float(alpha))
print(f"c = {c} separated rows over n = {n} columns, alpha = {alpha}: "
      f"window size ceil(5 ln c / alpha) = {size}")
rng = random.Random(0)
hits = trials = 0
while trials < 100:
    rows = tuple(rng.getrandbits(n) for _ in range(c))
    if any(((rows[i] ^ rows[j]).bit_count() < alpha * n)
           for i in range(c) for j in range(i)):
        continue
    trials += 1
    try:
        distinguishing_set(BipGraph(c, n, rows), (1 << c) - 1, alpha,
                           seed=rng.randrange(1 << 30), max_attempts=1)
        hits += 1
    except DomainError:
        pass
print(f"single-draw success rate: {hits}/{trials} "
      f"(first-moment bound: expected collisions c^2 e^(-5 ln c) = "
      f"{c ** 2 * math.exp(-5 * math.log(c)):.4f})")

print()
print("=" * 64)
print("Clone classes from a planted instance")
print("=" * 64)
G, parts, core = planted_clone_instance(r=1, t=1, copies=4)
print(f"planted: {G.n} vertices; core of {core.bit_count()} pairwise-separated "
      f"vertices;\none part holding 4 copies of each of the 2 trace patterns")
out = extract_clone_classes(G, parts, core, Fraction(4, G.n), t=1, seed=3)
print(f"recovered core B' = {sorted(bits(out.b_prime))}")
for j, cls in enumerate(out.classes[0]):
    print(f"  class {j}: vertices {sorted(bits(cls))} "
          f"(all share one neighbourhood pattern on B')")
W = mask_of((cls & -cls).bit_length() - 1 for cls in out.classes[0])
print(f"conditions: same-trace per class = {out.condition_a}; "
      f"a transversal {sorted(bits(W))} shatters B' = "
      f"{shatters(G, W, out.b_prime) is not None}")
print(f"declared class density delta = {out.params.delta:.3f}")

print()
print("=" * 64)
print("The flipped form: the core shatters every transversal")
print("=" * 64)
G2, parts2, core2 = planted_clone_instance(r=1, t=2, copies=3)
out2 = extract_clone_classes(G2, parts2, core2, Fraction(3, G2.n), t=1,
                             seed=2, direction="from-core")
W2 = mask_of((cls & -cls).bit_length() - 1 for cls in out2.classes[0])
print(f"B' = {sorted(bits(out2.b_prime))} (size 2^(r t) = 2), one class per "
      f"part;\nB' shatters the transversal {sorted(bits(W2))}: "
      f"{shatters(G2, out2.b_prime, W2) is not None}")
print("""
At desk scale the published constants are unreachable (they are towers in
t); the pipeline instead declares its thresholds, uses the exhaustive
shattered-set search, and raises a step-named error when an input is too
small to carry the construction.
""")
