"""Power-series verification of the closed parametric generating functions.

Two series domains are implemented with exact rational coefficients:

* :class:`USeries` - univariate, truncated at a fixed order N, for the
  dart-count series H_g(z) of genus g <= 6.  These are given in closed form
  through an auxiliary parameter: either tau with z = tau*(1 - 2*tau), or t
  with z = t/(1 + 2*t)**2.  Both parameters are developed as series in z by
  fixed-point iteration (each iteration gains one order; correctness of the
  defining relation is asserted), the printed rational expressions are
  composed on top, and the two routes must agree coefficientwise.

* :class:`TSeries` - trivariate by total degree, for the vertex/hyperedge/
  face-refined series H_g(x, y, u) of genus g <= 2.  The parameters p, q, r
  solve x = p*(1-q-r), u = q*(1-p-r), y = r*(1-p-q); the genus-0 series is
  p*q*r*(1-p-q-r) and the positive-genus ones are rational expressions in
  p, q, r with the square-bracket kernel (1-p-q-r)**2 - 4*p*q*r.

Every final series must have nonnegative integer coefficients even though
the arithmetic runs over rationals; this is asserted, not assumed, and a
failure points at a transcription slip in the embedded coefficient data
(:mod:`hypermap_census.series_data`).

Coefficients are exact rationals throughout; values that happen to be
integers are kept as ``int`` (Python's numeric tower makes the two
interoperable), so a ``Fraction`` can only appear through an inexact
division and the integrality assertions stay meaningful.
"""

from __future__ import annotations

from fractions import Fraction

from .core import CensusError
from .series_data import GENUS_NUMERATOR_T, GENUS_NUMERATOR_TAU, PLANAR_BRACKET_POLY

MAX_UNIVARIATE_GENUS = 6
MAX_TRIVARIATE_GENUS = 2


class SeriesError(CensusError):
    pass


class NonIntegerCoefficientError(SeriesError):
    """A coefficient that must be a nonnegative integer is not."""


class ValuationError(SeriesError):
    """A series does not vanish to the order required for an exact shift."""


class NoConvergenceError(SeriesError):
    """A fixed-point iteration failed to satisfy its defining relation."""


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return Fraction(a) / b


# ---------------------------------------------------------------------------
# univariate series
# ---------------------------------------------------------------------------

class USeries:
    """Truncated power series sum(c[k] * z**k, k = 0..order)."""

    __slots__ = ("order", "c")

    def __init__(self, coeffs, order: int):
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        self.order = order
        self.c = coeffs + [0] * (order + 1 - len(coeffs))

    @classmethod
    def constant(cls, value, order: int) -> "USeries":
        return cls([value], order)

    @classmethod
    def identity(cls, order: int) -> "USeries":
        """The series z."""
        return cls([0, 1], order)

    def coefficient(self, k: int):
        if k > self.order:
            raise IndexError(f"order {k} beyond truncation {self.order}")
        return self.c[k]

    def truncate(self, order: int) -> "USeries":
        if order > self.order:
            raise ValuationError(f"cannot extend truncation {self.order} to {order}")
        return USeries(self.c[: order + 1], order)

    def _coerce(self, other):
        if isinstance(other, USeries):
            if other.order != self.order:
                raise ValueError("mixed truncation orders")
            return other
        return USeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return USeries([a + b for a, b in zip(self.c, other.c)], self.order)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return USeries([a - b for a, b in zip(self.c, other.c)], self.order)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return USeries([-a for a in self.c], self.order)

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return USeries([a * other for a in self.c], self.order)
        if other.order != self.order:
            raise ValueError("mixed truncation orders")
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.c[j]
                if b != 0:
                    out[i + j] += a * b
        return USeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = USeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "USeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self.c[0]
        if c0 == 0:
            raise ValuationError("cannot invert a series with zero constant term")
        n = self.order
        out = [0] * (n + 1)
        out[0] = _exact_div(1, c0)
        for k in range(1, n + 1):
            acc = 0
            for i in range(1, k + 1):
                if self.c[i] != 0:
                    acc += self.c[i] * out[k - i]
            out[k] = _exact_div(-acc, c0)
        return USeries(out, n)

    def shift_down(self, k: int) -> "USeries":
        """Exact division by z**k; the first k coefficients must vanish."""
        if any(c != 0 for c in self.c[:k]):
            raise ValuationError(f"series has valuation < {k}")
        return USeries(self.c[k:], self.order - k)

    def valuation(self) -> int:
        for i, a in enumerate(self.c):
            if a != 0:
                return i
        return self.order + 1

    def integer_coefficients(self) -> list[int]:
        """Coefficients as nonnegative ints; error if any coefficient is not."""
        out = []
        for i, a in enumerate(self.c):
            if a < 0 or (isinstance(a, Fraction) and a.denominator != 1):
                raise NonIntegerCoefficientError(f"coefficient of z^{i} is {a}")
            out.append(int(a))
        return out

    def __eq__(self, other):
        return isinstance(other, USeries) and self.order == other.order \
            and all(a == b for a, b in zip(self.c, other.c))

    def __repr__(self):
        head = ", ".join(str(a) for a in self.c[:8])
        return f"USeries([{head}{', ...' if self.order > 7 else ''}], order={self.order})"


def _poly_of(series: USeries, coeffs) -> USeries:
    """Evaluate an integer polynomial (ascending coefficients) at a series."""
    out = USeries.constant(0, series.order)
    for c in reversed(coeffs):
        out = out * series + c
    return out


def tau_of_z(order: int) -> USeries:
    """The series tau(z) with tau(0) = 0 solving tau - 2*tau**2 = z."""
    if order < 1:
        raise ValueError("order must be >= 1")
    z = USeries.identity(order)
    tau = USeries.constant(0, order)
    for _ in range(order):
        tau = z + 2 * (tau * tau)
    if tau * (1 - 2 * tau) != z:
        raise NoConvergenceError("tau iteration did not close the defining relation")
    return tau


def t_of_z(order: int) -> USeries:
    """The series t(z) with t(0) = 0 solving t = z*(1 + 2*t)**2."""
    if order < 1:
        raise ValueError("order must be >= 1")
    z = USeries.identity(order)
    t = USeries.constant(0, order)
    for _ in range(order):
        w = 1 + 2 * t
        t = z * (w * w)
    if t != z * ((1 + 2 * t) ** 2):
        raise NoConvergenceError("t iteration did not close the defining relation")
    return t


def hg_univariate(g: int, order: int) -> USeries:
    """Dart-count series of genus g (coefficient of z^d = rooted total at d darts)."""
    if not 0 <= g <= MAX_UNIVARIATE_GENUS:
        raise ValueError(f"no closed univariate form for genus {g}")
    if g == 0:
        # tau**3 * (1 - 3*tau) / z**2: develop two orders deeper, then shift
        tau = tau_of_z(order + 2)
        out = ((tau ** 3) * (1 - 3 * tau)).shift_down(2)
    elif g == 1:
        tau = tau_of_z(order)
        out = (tau ** 3) * ((1 - tau) * (1 - 4 * tau) ** 2).inverse()
    else:
        tau = tau_of_z(order)
        z = USeries.identity(order)
        num = 4 * z ** (2 * g - 2) * tau ** 3 * _poly_of(tau, GENUS_NUMERATOR_TAU[g])
        den = (1 - tau) ** (4 * g - 3) * (1 - 4 * tau) ** (5 * g - 3)
        out = num * den.inverse()
    out.integer_coefficients()
    return out


def hg_via_t(g: int, order: int) -> USeries:
    """Same series as :func:`hg_univariate` through the alternate parameter."""
    if not 0 <= g <= MAX_UNIVARIATE_GENUS:
        raise ValueError(f"no closed univariate form for genus {g}")
    t = t_of_z(order)
    if g == 0:
        out = t * (1 - t)
    elif g == 1:
        out = (t ** 3) * ((1 + t) * (1 - 2 * t) ** 2).inverse()
    else:
        num = 4 * t ** (2 * g + 1) * (1 + 2 * t) * _poly_of(t, GENUS_NUMERATOR_T[g])
        den = (1 + t) ** (4 * g - 3) * (1 - 2 * t) ** (5 * g - 3)
        out = num * den.inverse()
    out.integer_coefficients()
    return out


# ---------------------------------------------------------------------------
# trivariate series
# ---------------------------------------------------------------------------

class TSeries:
    """Series in (x, y, u) truncated by total degree, sparse over exponent triples.

    Exponents of x, y, u count vertices, hyperedges and faces respectively.
    """

    __slots__ = ("order", "d")

    def __init__(self, terms: dict, order: int):
        self.order = order
        self.d = {k: v for k, v in terms.items() if v != 0 and sum(k) <= order}

    @classmethod
    def constant(cls, value, order: int) -> "TSeries":
        return cls({(0, 0, 0): value}, order)

    @classmethod
    def variable(cls, name: str, order: int) -> "TSeries":
        idx = {"x": 0, "y": 1, "u": 2}[name]
        key = tuple(1 if i == idx else 0 for i in range(3))
        return cls({key: 1}, order)

    def coefficient(self, vertices: int, hyperedges: int, faces: int):
        if vertices + hyperedges + faces > self.order:
            raise IndexError("total degree beyond truncation")
        return self.d.get((vertices, hyperedges, faces), 0)

    def _coerce(self, other):
        if isinstance(other, TSeries):
            if other.order != self.order:
                raise ValueError("mixed truncation orders")
            return other
        return TSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.d)
        for k, v in other.d.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return TSeries(out, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (self._coerce(other) * -1)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            if other == 0:
                return TSeries({}, self.order)
            return TSeries({k: v * other for k, v in self.d.items()}, self.order)
        if other.order != self.order:
            raise ValueError("mixed truncation orders")
        n = self.order
        out: dict = {}
        for (a1, b1, c1), v1 in self.d.items():
            room = n - a1 - b1 - c1
            for (a2, b2, c2), v2 in other.d.items():
                if a2 + b2 + c2 > room:
                    continue
                k = (a1 + a2, b1 + b2, c1 + c2)
                s = out.get(k, 0) + v1 * v2
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return TSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "TSeries":
        c0 = self.d.get((0, 0, 0), 0)
        if c0 == 0:
            raise ValuationError("cannot invert a series with zero constant term")
        # geometric series in the positive-valuation part; one round per degree
        m = TSeries({k: _exact_div(-v, c0) for k, v in self.d.items()
                     if k != (0, 0, 0)}, self.order)
        out = TSeries.constant(1, self.order)
        p = TSeries.constant(1, self.order)
        for _ in range(self.order):
            p = p * m
            if not p.d:
                break
            out = out + p
        return out * _exact_div(1, c0)

    def __eq__(self, other):
        return isinstance(other, TSeries) and self.order == other.order and self.d == other.d


def pqr_of_xyu(order: int) -> tuple[TSeries, TSeries, TSeries]:
    """Series p, q, r (zero constant term) solving the parametric system

        x = p*(1-q-r),   u = q*(1-p-r),   y = r*(1-p-q)

    to total degree ``order``, by the equivalent division-free fixed point
    p <- x + p*(q+r) etc., which gains one exact degree per round."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = TSeries.variable("x", order)
    y = TSeries.variable("y", order)
    u = TSeries.variable("u", order)
    p = q = r = TSeries({}, order)
    for _ in range(order):
        p, q, r = x + p * (q + r), u + q * (p + r), y + r * (p + q)
    if p * (1 - q - r) != x or q * (1 - p - r) != u or r * (1 - p - q) != y:
        raise NoConvergenceError("p,q,r iteration did not close the system")
    return p, q, r


def hg_trivariate(g: int, order: int) -> TSeries:
    """Series counting rooted genus-g hypermaps by vertices (x), hyperedges (y)
    and faces (u), to total degree ``order``; defined in closed form for g <= 2.

    The genus-0 series carries no constant term: the count starts at the
    one-dart hypermap, the empty hypermap is not included."""
    if not 0 <= g <= MAX_TRIVARIATE_GENUS:
        raise ValueError(f"no closed trivariate form for genus {g}")
    p, q, r = pqr_of_xyu(order)
    if g == 0:
        out = p * q * r * (1 - p - q - r)
    else:
        bracket = (1 - p - q - r) ** 2 - 4 * (p * q * r)
        num = p * q * r * (1 - p) * (1 - q) * (1 - r)
        if g == 1:
            out = num * (bracket ** 2).inverse()
        else:
            num = num * _substitute_bracket_poly(p, q, r)
            out = num * (bracket ** 7).inverse()
    for key, val in out.d.items():
        if val < 0 or (isinstance(val, Fraction) and val.denominator != 1):
            raise NonIntegerCoefficientError(f"coefficient at {key} is {val}")
    return out


def _substitute_bracket_poly(p: TSeries, q: TSeries, r: TSeries) -> TSeries:
    """Evaluate the genus-2 numerator polynomial at the parameter series.

    Terms are grouped as sum_a p**a * (sum over (b,c) of coef * q**b * r**c)
    with all powers cached, so each distinct monomial costs one series
    product."""
    order = p.order
    by_a: dict[int, dict] = {}
    for (a, b, c), coef in PLANAR_BRACKET_POLY:
        by_a.setdefault(a, {})[b, c] = coef
    qpow = _powers(q, max(b for (_, b, _), _ in PLANAR_BRACKET_POLY))
    rpow = _powers(r, max(c for (_, _, c), _ in PLANAR_BRACKET_POLY))
    ppow = _powers(p, max(a for (a, _, _), _ in PLANAR_BRACKET_POLY))
    qr_cache: dict[tuple[int, int], TSeries] = {}
    total = TSeries({}, order)
    for a, group in sorted(by_a.items()):
        inner = TSeries({}, order)
        for (b, c), coef in group.items():
            if (b, c) not in qr_cache:
                qr_cache[b, c] = qpow[b] * rpow[c]
            inner = inner + qr_cache[b, c] * coef
        total = total + ppow[a] * inner
    return total


def _powers(s: TSeries, top: int) -> list[TSeries]:
    out = [TSeries.constant(1, s.order)]
    for _ in range(top):
        out.append(out[-1] * s)
    return out
