"""Sensed (unrooted) hypermap engine: quotient-orbifold summation.

A sensed hypermap of genus G with E darts is an orbit of rooted ones under
re-rooting, so E times the sensed count equals the number of (hypermap, dart)
pairs, summed per automorphism class.  Every automorphism of an orientable
hypermap is periodic; one of period L > 1 presents the hypermap as L copies
of a quotient hypermap of some genus g, except at branch points, cells whose
orbit under the automorphism is shorter than L.  An automorphism class is
described by an :class:`OrbifoldSignature`: the period L, the quotient genus
g and the multiset of branch-point orbit lengths (each a proper divisor of
L).  The Riemann-Hurwitz relation

    2 - 2G = L * (2 - 2g)  -  sum over branch points of (L - orbit_length)

says which signatures can occur for genus G, and the number of period-L
automorphisms per signature is the number of epimorphisms from the orbifold's
fundamental group onto the cyclic group Z_L that map each branch generator to
an element of exact order L/orbit_length (:func:`epi0`).

The accumulation then runs over quotient data.  A quotient with w vertices,
b hyperedges, f faces and d darts lifts to E = L*d darts; choosing which
quotient cells carry the branch points of each orbit length contributes a
product of three multinomial coefficients, and the lifted cell counts are
W = sum(i * w_i) over orbit lengths i (with unbranched cells counting at
length L), likewise B and F.  Summing

    epi0(signature) * multinomials * rooted_count(g, d, w, b, f)

over everything and dividing by E - exactly, and by E rather than 2E because
a hypermap root is a dart, not a dart-or-reversal - gives the sensed census.
The period-1 signature contributes exactly the rooted count, so the sensed
count always lies between rooted/E and rooted.

Quotients of hypermaps never contain half-darts (in bipartite-map language a
dangling semi-edge would join two like-coloured vertices), so unlike the
ordinary-map analogue there is no semi-edge correction term anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd

from .core import CountTable, InexactDivisionError, NotFilledError
from .rooted import RootedCensus


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    m, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            m = -m
        p += 1
    return -m if n > 1 else m


@dataclass(frozen=True)
class OrbifoldSignature:
    """One automorphism class: period, quotient genus, branch orbit lengths.

    Orbit lengths are the stored representation; the branch index of a branch
    point is period // orbit_length (always >= 2).
    """

    period: int
    quotient_genus: int
    orbit_lengths: tuple[int, ...]

    def __post_init__(self):
        if any(self.period % l or l >= self.period for l in self.orbit_lengths):
            raise ValueError(f"orbit lengths must be proper divisors of {self.period}")

    @property
    def branch_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.period // l for l in self.orbit_lengths))

    def covered_genus(self) -> int:
        """The genus G this signature serves, from Riemann-Hurwitz."""
        deficiency = sum(self.period - l for l in self.orbit_lengths)
        val = self.period * (2 - 2 * self.quotient_genus) - deficiency
        if val % 2:
            raise ValueError(f"signature {self} has odd Euler value")
        return (2 - val) // 2


def admissible_signatures(G: int, L: int) -> list[OrbifoldSignature]:
    """All signatures of period L that an automorphism on genus G can have.

    For each quotient genus g the Riemann-Hurwitz relation prescribes the
    total orbit-length deficiency sum(L - l_i); the multisets of proper
    divisors of L meeting it are enumerated directly.  L = 1 admits exactly
    the trivial signature (g = G, no branch points).
    """
    sigs = []
    parts = sorted((L - l for l in _divisors(L) if l < L), reverse=True)
    for g in range(G + 1):
        need = L * (2 - 2 * g) - (2 - 2 * G)
        if need < 0:
            continue
        for lens in _deficiency_multisets(need, parts, L):
            sigs.append(OrbifoldSignature(L, g, lens))
    return sigs


def _deficiency_multisets(need, parts, L):
    if need == 0:
        yield ()
        return
    if not parts:
        return
    out = []

    def rec(rem, idx, acc):
        if rem == 0:
            out.append(tuple(sorted(acc)))
            return
        if idx == len(parts):
            return
        p = parts[idx]
        k = 0
        while k * p <= rem:
            rec(rem - k * p, idx + 1, acc + [L - p] * k)
            k += 1

    rec(need, 0, [])
    yield from out


def epi0(sig: OrbifoldSignature) -> int:
    """Epimorphisms from the orbifold fundamental group onto Z_period.

    The group abelianizes to 2g free generators plus one generator per branch
    point, constrained to have exact order equal to its branch index, with
    all branch generators summing to zero.  Counting homomorphisms into each
    subgroup of Z_L (one per divisor) and Moebius-inverting over the divisor
    lattice leaves the surjective ones:

        epi0 = sum over l | L of  mu(L/l) * l**(2g) * C_l

    where C_l counts tuples in Z_l with the exact prescribed orders and zero
    sum, computed by convolving the indicator vector of each order class.
    """
    L = sig.period
    orders = sig.branch_indices
    total = 0
    for l in _divisors(L):
        mu = _mobius(L // l)
        if mu == 0 or any(l % m for m in orders):
            continue
        total += mu * l ** (2 * sig.quotient_genus) * _zero_sum_tuples(l, orders)
    return total


def _zero_sum_tuples(l: int, orders: tuple[int, ...]) -> int:
    vec = [0] * l
    vec[0] = 1
    for m in orders:
        step = l // m
        nxt = [0] * l
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                x = step * k % l
                for i in range(l):
                    if vec[i]:
                        nxt[(i + x) % l] += vec[i]
        vec = nxt
    return vec[0]


def _multinomial(n: int, parts) -> int:
    """n choose (parts..., rest): ways to mark cells carrying each branch class."""
    r = 1
    left = n
    for p in parts:
        r *= comb(left, p)
        left -= p
    return r


def _branch_distributions(qs: dict[int, int]):
    """Split the q_i branch points of each orbit length i among vertex/
    hyperedge/face cells; yields {i: (w_i, b_i, f_i)}."""
    lengths = sorted(qs)

    def rec(idx):
        if idx == len(lengths):
            yield {}
            return
        i = lengths[idx]
        q = qs[i]
        for rest in rec(idx + 1):
            for wi in range(q + 1):
                for bi in range(q - wi + 1):
                    yield {i: (wi, bi, q - wi - bi), **rest}

    return rec(0)


def sensed_table(G: int, max_darts: int, rooted: RootedCensus) -> CountTable:
    """Sensed hypermap counts of genus G for all dart counts up to max_darts.

    ``rooted`` must cover genus up to G and darts up to max_darts (quotients
    never exceed either bound).
    """
    if G > rooted.max_genus or max_darts > rooted.max_darts:
        raise NotFilledError("rooted census does not cover the requested bounds")
    acc: dict[tuple[int, int, int, int], int] = {}
    for L in range(1, max_darts + 1):
        for sig in admissible_signatures(G, L):
            weight0 = epi0(sig)
            if weight0 == 0:
                continue
            g = sig.quotient_genus
            qs: dict[int, int] = {}
            for l in sig.orbit_lengths:
                qs[l] = qs.get(l, 0) + 1
            for dist in _branch_distributions(qs):
                ws = [x[0] for x in dist.values()]
                bs = [x[1] for x in dist.values()]
                fs = [x[2] for x in dist.values()]
                sw, sb, sf = sum(ws), sum(bs), sum(fs)
                Wb = sum(i * x[0] for i, x in dist.items())
                Bb = sum(i * x[1] for i, x in dist.items())
                Fb = sum(i * x[2] for i, x in dist.items())
                for d in range(1, max_darts // L + 1):
                    deg = d + 2 - 2 * g
                    for (f, b, w), n_quot in rooted.poly(g, d).terms():
                        if w < sw or b < sb or f < sf:
                            continue
                        weight = (_multinomial(w, ws) * _multinomial(b, bs)
                                  * _multinomial(f, fs))
                        if weight == 0:
                            continue
                        key = (L * d,
                               L * (w - sw) + Wb,
                               L * (b - sb) + Bb,
                               L * (f - sf) + Fb)
                        acc[key] = acc.get(key, 0) + weight0 * weight * n_quot
    out = CountTable(engine="sensed", max_genus=G, max_darts=max_darts)
    for (E, W, B, F), val in acc.items():
        q, r = divmod(val, E)
        if r:
            raise InexactDivisionError(
                f"accumulated total {val} at genus {G}, key {(E, W, B, F)} "
                f"not divisible by {E}")
        out.add(G, E, W, B, q)
    return out.freeze()
