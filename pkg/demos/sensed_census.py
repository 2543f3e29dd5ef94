"""From rooted to sensed: quotient orbifolds, epimorphism counts, division.

Run:  python demos/sensed_census.py
"""

from hypermap_census import (
    OrbifoldSignature,
    RootedCensus,
    admissible_signatures,
    epi0,
    sensed_table,
)

# A sensed hypermap is an isomorphism class; rooting destroys all symmetry,
# so E times the sensed count at E darts equals a sum of rooted counts of
# quotient hypermaps, weighted by how many period-L automorphisms realize
# each quotient shape.

# Which automorphism classes can a genus-1 hypermap have?
print("signatures a genus-1 surface admits, by period:")
for L in (1, 2, 3, 4, 6):
    for sig in admissible_signatures(1, L):
        print(f"   period {L}: quotient genus {sig.quotient_genus}, "
              f"branch orbit lengths {list(sig.orbit_lengths)}, "
              f"automorphisms {epi0(sig)}")
print()

# The quarter-turn of the torus: period 4, spherical quotient, two branch
# points fixed (orbit length 1) and one pair swapped (orbit length 2).
sig = OrbifoldSignature(period=4, quotient_genus=0, orbit_lengths=(1, 1, 2))
print("quarter-turn signature covers genus", sig.covered_genus(),
      "with branch indices", sig.branch_indices, "and", epi0(sig),
      "automorphisms")
print()

# Build the sensed census itself.  The rooted census must cover the same
# bounds; quotients never need more genus or darts than the original.
rooted = RootedCensus(max_genus=1, max_darts=8)
sensed = sensed_table(1, 8, rooted)

print("genus-1 sensed counts by darts:",
      [sensed.total(1, d) for d in range(1, 9)])
print("genus-1 rooted counts by darts:",
      [rooted.total(1, d) for d in range(1, 9)])
print()

# Burnside sandwich: rooted/E <= sensed <= rooted, entry by entry.
E = 6
r, s = rooted.total(1, E), sensed.total(1, E)
print(f"at {E} darts: rooted {r}, sensed {s}, rooted/E {r / E:.1f}")
assert r <= E * s and s <= r
