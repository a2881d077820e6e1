"""Integer truncated power series and the numeric degree/complexity bounds.

All coefficients are exact Python ints; binomial coefficients grow past 64
bits quickly, so nothing here ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExhausted, InvalidDegree, OmegaOutOfRange, UndefinedBound

# ---------------------------------------------------------------------------
# dense integer polynomials (lists of coefficients, index = exponent)
# ---------------------------------------------------------------------------


def poly_trim(c) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mul(a, b) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly_trim(out)


def poly_sub(a, b) -> list:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return poly_trim(out)


def poly_eval(a, x: int) -> int:
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def degree_product(degrees) -> list:
    """Coefficients of prod_j (1 - z^(d_j)); the empty product is 1."""
    out = [1]
    for d in degrees:
        if d < 1:
            raise InvalidDegree(f"generator degree {d} < 1")
        factor = [0] * (d + 1)
        factor[0], factor[d] = 1, -1
        out = poly_mul(out, factor)
    return out


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TruncSeries:
    """Integer power series known up to (but excluding) degree ``cap``."""

    coeffs: tuple

    @property
    def cap(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def truncate(self, cap: int) -> "TruncSeries":
        if cap > len(self.coeffs):
            raise InvalidDegree(f"cannot extend cap {len(self.coeffs)} to {cap}")
        return TruncSeries(self.coeffs[:cap])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int) -> "TruncSeries":
        return TruncSeries(tuple(c * a for a in self.coeffs))

    def mul_poly(self, poly) -> "TruncSeries":
        out = [0] * self.cap
        for i, x in enumerate(poly):
            if x:
                for j in range(self.cap - i):
                    out[i + j] += x * self.coeffs[j]
        return TruncSeries(tuple(out))

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        cap = min(self.cap, other.cap)
        out = [0] * cap
        for i in range(cap):
            if self.coeffs[i]:
                for j in range(cap - i):
                    out[i + j] += self.coeffs[i] * other.coeffs[j]
        return TruncSeries(tuple(out))


def geometric_inverse_power(n: int, cap: int) -> TruncSeries:
    """Expansion of (1 - z)^(-n): coefficient at k is C(n - 1 + k, k)."""
    if n < 1 or cap < 1:
        raise InvalidDegree(f"need n >= 1 and cap >= 1, got n={n}, cap={cap}")
    return TruncSeries(tuple(math.comb(n - 1 + k, k) for k in range(cap)))


def froberg_series(n: int, degrees, cap: int) -> TruncSeries:
    """Coefficients of prod_j (1 - z^(d_j)) / (1 - z)^n mod z^cap."""
    numerator = degree_product(degrees)
    return geometric_inverse_power(n, cap).mul_poly(numerator)


def positive_truncate(s: TruncSeries) -> list:
    """Longest all-positive prefix of ``s``, returned as polynomial coefficients.

    The prefix must end inside the cap: if every known coefficient is positive
    the caller has to retry with a larger cap (CapExhausted).
    """
    if s.cap == 0 or s.coeffs[0] <= 0:
        raise InvalidDegree("series must start with a positive coefficient")
    for k, c in enumerate(s.coeffs):
        if c <= 0:
            return list(s.coeffs[:k])
    raise CapExhausted(f"all {s.cap} known coefficients are positive")


def truncated_froberg_polynomial(n: int, degrees) -> list:
    """The positive truncation of the full series, growing the cap as needed.

    Starts at sum(d_j - 1) + 2 and doubles on CapExhausted; for m >= n the
    truncation degree never exceeds the all-degrees Macaulay value, so this
    terminates.
    """
    cap = max(2, sum(d - 1 for d in degrees) + 2)
    while True:
        try:
            return positive_truncate(froberg_series(n, degrees, cap))
        except CapExhausted:
            cap *= 2


def lazard_bound(n: int, m: int, degrees) -> int:
    """Classical Macaulay-type bound: sum of (d_j - 1) + 1 over the min(m, n)
    largest degrees."""
    if m < 1 or len(degrees) != m:
        raise InvalidDegree("need m >= 1 degrees")
    if any(d < 1 for d in degrees):
        raise InvalidDegree("degrees must be >= 1")
    top = sorted(degrees, reverse=True)[: min(m, n)]
    return sum(d - 1 for d in top) + 1


def degree_bound_Dnm(n: int, m: int, degrees) -> int:
    """Solving-degree bound: truncation degree + 1 for m >= n, and the full
    degree sum bound for m = n - 1; undefined below that."""
    if len(degrees) != m:
        raise InvalidDegree(f"expected {m} degrees, got {len(degrees)}")
    if any(d < 1 for d in degrees):
        raise InvalidDegree("degrees must be >= 1")
    if m < n - 1:
        raise UndefinedBound(f"bound undefined for m={m} < n-1={n - 1}")
    if m == n - 1:
        return sum(d - 1 for d in degrees) + 1
    prefix = truncated_froberg_polynomial(n, degrees)
    return (len(prefix) - 1) + 1


def complexity_estimate(n: int, m: int, D: int, omega: float):
    """Cost estimates for reducing the degree-capped Macaulay matrix.

    Returns ``(cost_new, cost_classic)`` where ``cost_new`` is
    m * C(n+D-1, D)^omega and ``cost_classic`` carries the extra factor D.
    Integral omega is evaluated exactly.
    """
    if not 2 <= omega < 3:
        raise OmegaOutOfRange(f"omega {omega} outside [2, 3)")
    if D < 1:
        raise InvalidDegree(f"D must be >= 1, got {D}")
    binom = math.comb(n + D - 1, D)
    if float(omega).is_integer():
        base = m * binom ** int(omega)
        return base, base * D
    try:
        base = m * float(binom) ** omega
    except OverflowError:
        base = math.inf
    return base, base * D


@dataclass(frozen=True)
class BoundReport:
    """Degree and cost bounds for a system shape (n, m, degrees)."""

    n: int
    m: int
    degrees: tuple
    D_nm: int | None  # None when m < n - 1
    lazard: int
    omega: float
    cost_new: float
    cost_classic: float


def bound_report(n: int, m: int, degrees, omega: float = 2.807) -> BoundReport:
    """Assemble the full report; costs are evaluated at D_nm when defined,
    else at the Lazard bound."""
    degrees = tuple(degrees)
    lz = lazard_bound(n, m, degrees)
    try:
        dnm = degree_bound_Dnm(n, m, degrees)
    except UndefinedBound:
        dnm = None
    cost_new, cost_classic = complexity_estimate(n, m, dnm if dnm is not None else lz, omega)
    return BoundReport(n, m, degrees, dnm, lz, omega, cost_new, cost_classic)
