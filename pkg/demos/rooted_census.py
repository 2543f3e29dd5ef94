"""Walk through the rooted census: fill the tables, read refined counts.

Run:  python demos/rooted_census.py
"""

from hypermap_census import RootedCensus

# Fill everything up to genus 3 and 12 darts.  The engine advances one dart
# count at a time, combining lower polynomials; each step divides exactly by
# d+1 and asserts nonnegative coefficients, so a filled census is already a
# self-checked one.
census = RootedCensus(max_genus=3, max_darts=12)

print("How many rooted hypermaps have 4 darts, 2 vertices, 2 hyperedges,")
print("2 faces on the sphere?  ->", census.count(0, 4, 2, 2, 2))
print()

print("Totals by dart count (genus 0):",
      [census.total(0, d) for d in range(1, 9)])
print("Totals by dart count (genus 1):",
      [census.total(1, d) for d in range(1, 9)])
print()

# The counts for one (genus, darts) cell live in a homogeneous polynomial:
# the coefficient at exponents (f, b, w) counts hypermaps with f faces,
# b hyperedges, w vertices.  Every exponent triple sums to d + 2 - 2g.
poly = census.poly(1, 5)
print("Genus 1, 5 darts, refined (faces, hyperedges, vertices) -> count:")
for (f, b, w), c in sorted(poly.terms()):
    print(f"   f={f} e={b} v={w}: {c}")
print("degree check: every triple sums to", poly.degree)
print()

# Counts are fully symmetric under permuting (vertices, hyperedges, faces).
print("symmetry:",
      census.count(1, 5, 1, 2, 2),
      census.count(1, 5, 2, 1, 2),
      census.count(1, 5, 2, 2, 1))

# A genus too high for the dart count gives an empty table, not an error.
print("genus 3 needs at least 7 darts:",
      [census.total(3, d) for d in range(1, 9)])
