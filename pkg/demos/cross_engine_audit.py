"""Two independent recurrences, one table: auditing the engines against
each other.

Run:  python demos/cross_engine_audit.py
"""

from hypermap_census import RootedCensus, SequencedCensus

# The sequenced engine counts rooted hypermaps a completely different way:
# it tracks the root-vertex degree plus a list of distinguished-vertex
# degrees, and recurses by deleting the root dart.  It is orders of
# magnitude slower than the polynomial engine, which is exactly what makes
# it a good oracle.
rooted = RootedCensus(2, 8)
seq = SequencedCensus()

print("genus 1, 6 darts, by (faces, hyperedges):")
for f in range(1, 5):
    for e in range(1, 5):
        v = 6 + 2 * (1 - 1) - e - f
        if v < 1:
            continue
        a = seq.rooted(1, 6, f, e)
        b = rooted.count(1, 6, v, e, f)
        marker = "==" if a == b else "MISMATCH"
        print(f"   f={f} e={e}: seq {a} {marker} poly {b}")
print()

# Sequenced counts refine further: root-vertex degree n and distinguished
# degrees D.  Summing out n with D empty recovers the rooted count.
parts = [seq.hypermap(1, 6, 2, 2, n) for n in range(1, 7)]
print("root-degree split of the (f=2, e=2) cell:", parts,
      "-> total", sum(parts))
print()

# Multirooted hypermaps distinguish one dart per distinguished vertex.  Each
# degree-d vertex offers d choices, so the multirooted count is the
# sequenced count times the product of the degrees - and it also satisfies
# its own recurrence.  Both routes must agree:
for D in ((2,), (3,), (2, 2)):
    direct = seq.multirooted_direct(0, 8, 2, 2, 2, D)
    product = seq.multirooted(0, 8, 2, 2, 2, D)
    print(f"multirooted, D={D}: direct recurrence {direct}, "
          f"product form {product}")
print()

# The same deletion idea counts ordinary maps (the corrected sequenced-map
# recurrence).  Planar rooted maps by edges: 1, 2, 9, 54, ...
for edges in range(0, 5):
    total = sum(seq.map_count(0, edges, f, n)
                for f in range(1, edges + 2) for n in range(0, 2 * edges + 1))
    print(f"rooted planar maps with {edges} edges: {total}")
