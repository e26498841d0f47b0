#!/usr/bin/env python3
# Scan integer weight vectors with a fixed total and record where the
# weighted cohomology jumps out of the top degree.  Resonant weights are
# rare but structured; the sufficient nonresonance condition misses some
# of the nonresonant ones, which is the point of computing exactly.

from fractions import Fraction
from itertools import product
from pathlib import Path

from osgm.aomoto import Weights, os_cohomology, weights_nonresonant
from osgm.arrangement import Arrangement, CombinatorialType

DATA = Path(__file__).resolve().parents[1] / "data"

arr = Arrangement.from_file(DATA / "selberg.json")
t = CombinatorialType.from_arrangement(arr)

print("scanning weights (a1..a4, a5 = 3 - a1-a2-a3-a4), ai in -3..3")
print("columns: weights | dims | sufficient condition\n")

resonant = []
for head in product(range(-3, 4), repeat=4):
    tail = 3 - sum(head)
    lam = Weights([Fraction(a) for a in head] + [Fraction(tail)])
    h = os_cohomology(t, lam)
    if any(h.dims[:-1]):
        resonant.append((lam, h.dims))

print("found %d resonant weight vectors, e.g." % len(resonant))
for lam, dims in resonant[:10]:
    passed = weights_nonresonant(t, lam)
    print("  %-24s dims %s  condition %s"
          % (lam.to_json(), dims, "passed" if passed else "failed"))

# a nonresonant vector the sufficient condition cannot certify: it has a
# nonnegative-integer subset sum but no cohomology below the top
lam = Weights(["1", "1", "1", "1", "1"])
h = os_cohomology(t, lam)
print("\nweights", lam.to_json())
print("  dims", h.dims, "- nonresonant in fact,")
print("  sufficient condition:",
      "passed" if weights_nonresonant(t, lam) else "failed")
