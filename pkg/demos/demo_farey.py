"""Classifying genus-three Farey triples by their intersection form.

Run:  python3 demos/demo_farey.py
"""

from trisect import (
    FareyTriple,
    atlas_rows,
    classify,
    dmet,
    fraction_universe,
    mediants,
    parse_fraction,
    qx,
    sym_form_invariants,
)

one = parse_fraction("1/1")
half = parse_fraction("1/2")
two_thirds = parse_fraction("2/3")

# Pairwise Farey neighbors (|ad - bc| = 1) form a triple with a unimodular
# symmetric form; its signature picks out the manifold.
t = FareyTriple(one, half, two_thirds)
print("neighbors:", all(
    abs(dmet(a, b)) == 1
    for a, b in ((one, half), (half, two_thirds), (one, two_thirds))
))

m = qx(t)
inv = sym_form_invariants(m)
print("form:", m)
print("rank %d  signature %+d  parity %s" % (inv.rank, inv.signature, inv.parity))

c = classify(t)
print("manifold:", c.manifold)            # CP2#CP2bar#CP2bar
print("refined:", "#".join(c.refined))

# Two distinct values give a sphere bundle over the sphere; the product
# of denominators decides which one.
tw = FareyTriple(parse_fraction("0/1"), one, one)
print("two distinct ->", classify(tw).manifold)   # S2x~S2

# All equal is a spun lens space.
sp = FareyTriple(two_thirds, two_thirds, two_thirds)
print("all equal ->", classify(sp).manifold)      # SpunLens(3,2)

# Mediant completion: from one neighbor pair, the two fractions that
# complete it to a triple on either side.
lo, hi = mediants(one, half)
print("mediants of 1/1, 1/2: %s and %s" % (lo, hi))

# The atlas enumerates every triple with denominators up to a bound.
rows = list(atlas_rows(max_den=3))
kinds = {}
for row in rows:
    kinds[row["kind"]] = kinds.get(row["kind"], 0) + 1
print("atlas at max_den=3: %d rows" % len(rows))
for kind in sorted(kinds):
    print("  %-12s %d" % (kind, kinds[kind]))
print("universe size:", len(fraction_universe(3)))
