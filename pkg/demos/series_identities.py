"""The closed-form generating functions, verified coefficient by coefficient.

Run:  python demos/series_identities.py
"""

from hypermap_census import (
    RootedCensus,
    hg_trivariate,
    hg_univariate,
    hg_via_t,
    pqr_of_xyu,
    tau_of_z,
)

N = 14

# The dart-count series of each genus g <= 6 has a closed form in an
# auxiliary parameter tau, where z = tau*(1 - 2*tau).  Reverting that
# relation gives tau as an honest power series in z:
tau = tau_of_z(8)
print("tau(z) =", [tau.coefficient(k) for k in range(8)], "...")
print()

census = RootedCensus(6, N)
for g in (0, 1, 4):
    h = hg_univariate(g, N)
    print(f"genus {g}: series {[h.coefficient(d) for d in range(1, 11)]}")
    print(f"         engine {[census.total(g, d) for d in range(1, 11)]}")
print()

# A second parameterization (z = t/(1+2t)^2) produces the same series; the
# two routes share no coefficient data beyond the identity that links them.
for g in range(7):
    assert hg_via_t(g, N) == hg_univariate(g, N)
print("both parameterizations agree for genus 0..6 to order", N)
print()

# For genus <= 2 there are closed forms refined by vertices, hyperedges and
# faces, built on three parameter series p, q, r:
p, q, r = pqr_of_xyu(6)
print("p =", {k: v for k, v in sorted(p.d.items()) if sum(k) <= 2})

tri = hg_trivariate(1, 8)
print("genus 1, refined: coefficient at (v,e,f)=(1,2,1) is",
      tri.coefficient(1, 2, 1), "- and the engine says",
      census.count(1, 4, 1, 2, 1))
