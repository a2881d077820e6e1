"""Exact arithmetic kernel: prime fields, monomials in graded reverse
lexicographic order, multivariate polynomials, and linear coordinate changes.

Monomials are plain tuples of non-negative exponents ``(e_1, ..., e_n)`` for
the variables ``x_1 > ... > x_n``.  Field elements are plain ints in
``[0, p)``; a :class:`PrimeField` supplies the arithmetic.  All values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as _dc_field

from .errors import (
    BadModulus,
    DimensionMismatch,
    ZeroInverse,
    ZeroPolynomial,
)

Monom = tuple  # tuple[int, ...], one exponent per variable

# ---------------------------------------------------------------------------
# prime field
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7)  # deterministic Miller-Rabin witnesses below 3.2e9


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for a prime 2 <= p < 2**31; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < 2**31 or not _is_prime(p):
            raise BadModulus(f"modulus {p!r} is not a prime in [2, 2^31)")
        self.p = p

    def normalize(self, a: int) -> int:
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroInverse(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def fp_inv(a: int, fld: PrimeField) -> int:
    """Inverse of ``a`` in F_p; raises ZeroInverse on ``a == 0``."""
    return fld.inv(a)


# ---------------------------------------------------------------------------
# monomials and the DRL order
# ---------------------------------------------------------------------------


def mono_deg(m: Monom) -> int:
    return sum(m)


def mono_mul(a: Monom, b: Monom) -> Monom:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monom, b: Monom) -> bool:
    """True if monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monom, b: Monom) -> Monom:
    """Quotient ``a / b``; caller must ensure ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monom, b: Monom) -> Monom:
    return tuple(max(x, y) for x, y in zip(a, b))


def drl_key(m: Monom):
    """Sort key realizing graded reverse lex with x_1 > ... > x_n.

    Larger key means larger monomial: total degree decides first; ties are
    broken so that of two monomials the one whose last nonzero entry of the
    exponent difference is negative wins.
    """
    return (sum(m), tuple(-e for e in reversed(m)))


def drl_compare(a: Monom, b: Monom) -> int:
    """Return 1, 0 or -1 as ``a`` is greater, equal or less than ``b`` in DRL."""
    if len(a) != len(b):
        raise DimensionMismatch(f"monomials in {len(a)} and {len(b)} variables")
    ka, kb = drl_key(a), drl_key(b)
    if ka > kb:
        return 1
    if ka < kb:
        return -1
    return 0


@functools.lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    """All degree-``d`` monomials in ``n`` variables, DRL-descending.

    The first element is x_1^d and the last is x_n^d.
    """
    if n < 1 or d < 0:
        raise DimensionMismatch(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    monoms = []
    for bars in itertools.combinations_with_replacement(range(n), d):
        m = [0] * n
        for i in bars:
            m[i] += 1
        monoms.append(tuple(m))
    monoms.sort(key=drl_key, reverse=True)
    return tuple(monoms)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable multivariate polynomial over a prime field.

    ``coeffs`` maps exponent tuples to nonzero ints in ``[1, p)``.  The zero
    polynomial has an empty map.  ``terms()`` iterates in strictly descending
    DRL order.
    """

    __slots__ = ("field", "n", "coeffs", "_terms")

    def __init__(self, fld: PrimeField, n: int, coeffs: dict):
        clean = {}
        for m, c in coeffs.items():
            if len(m) != n:
                raise DimensionMismatch(
                    f"monomial {m} has {len(m)} exponents, expected {n}"
                )
            c %= fld.p
            if c:
                clean[m] = c
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)
        object.__setattr__(self, "_terms", None)

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # construction helpers ---------------------------------------------------

    @staticmethod
    def zero(fld: PrimeField, n: int) -> "Polynomial":
        return Polynomial(fld, n, {})

    @staticmethod
    def constant(fld: PrimeField, n: int, c: int) -> "Polynomial":
        return Polynomial(fld, n, {(0,) * n: c})

    @staticmethod
    def variable(fld: PrimeField, n: int, i: int) -> "Polynomial":
        m = [0] * n
        m[i] = 1
        return Polynomial(fld, n, {tuple(m): 1})

    @staticmethod
    def linear_form(fld: PrimeField, coeffs) -> "Polynomial":
        """Linear form a_1 x_1 + ... + a_n x_n from a coefficient vector."""
        n = len(coeffs)
        terms = {}
        for i, a in enumerate(coeffs):
            m = [0] * n
            m[i] = 1
            terms[tuple(m)] = a
        return Polynomial(fld, n, terms)

    # basic queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """Terms ``(monomial, coefficient)`` in strictly descending DRL order."""
        if self._terms is None:
            pairs = tuple(
                sorted(self.coeffs.items(), key=lambda t: drl_key(t[0]), reverse=True)
            )
            object.__setattr__(self, "_terms", pairs)
        return self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(m) for m in self.coeffs)

    def leading_monomial(self) -> Monom:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    def leading_coeff(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms()[0][1]

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.coeffs}
        return len(degs) <= 1

    def is_linear_form(self) -> bool:
        return bool(self.coeffs) and all(sum(m) == 1 for m in self.coeffs)

    # arithmetic ---------------------------------------------------------------

    def _check_compatible(self, other: "Polynomial"):
        if self.field != other.field or self.n != other.n:
            raise DimensionMismatch("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        out = dict(self.coeffs)
        p = self.field.p
        for m, c in other.coeffs.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.field, self.n, out)

    def __neg__(self) -> "Polynomial":
        p = self.field.p
        return Polynomial(self.field, self.n, {m: p - c for m, c in self.coeffs.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        p = self.field.p
        out = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                m = mono_mul(ma, mb)
                v = (out.get(m, 0) + ca * cb) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.field, self.n, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        c %= self.field.p
        if c == 0:
            return Polynomial.zero(self.field, self.n)
        p = self.field.p
        return Polynomial(self.field, self.n, {m: v * c % p for m, v in self.coeffs.items()})

    def term_mul(self, m: Monom, c: int = 1) -> "Polynomial":
        """Multiply by the term ``c * x^m``."""
        c %= self.field.p
        if c == 0:
            return Polynomial.zero(self.field, self.n)
        p = self.field.p
        return Polynomial(
            self.field, self.n, {mono_mul(mm, m): v * c % p for mm, v in self.coeffs.items()}
        )

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.leading_coeff()))

    def evaluate(self, point) -> int:
        """Evaluate at a point given as a coefficient vector over F_p."""
        if len(point) != self.n:
            raise DimensionMismatch("point length does not match variable count")
        p = self.field.p
        total = 0
        for m, c in self.coeffs.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * pow(x, e, p) % p
            total = (total + v) % p
        return total

    # comparisons / presentation ------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"Polynomial({self.field.p}, {poly_to_string(self)!r})"

    def __str__(self):
        return poly_to_string(self)


def default_var_names(n: int) -> list:
    return [f"x{i + 1}" for i in range(n)]


def poly_to_string(f: Polynomial, names=None) -> str:
    """Canonical string form: DRL-descending terms joined by " + ".

    Coefficients print as residues in [1, p); a unit coefficient is omitted
    unless the monomial is 1.  Factors are joined with explicit "*".
    """
    if f.is_zero():
        return "0"
    names = names or default_var_names(f.n)
    parts = []
    for m, c in f.terms():
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# polynomial systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PolySystem:
    """An ordered sequence of polynomials in a common ring."""

    field: PrimeField
    n: int
    polys: tuple
    homogeneous: bool = _dc_field(init=False)

    def __post_init__(self):
        polys = tuple(self.polys)
        for f in polys:
            if f.field != self.field or f.n != self.n:
                raise DimensionMismatch("system members live in different rings")
        object.__setattr__(self, "polys", polys)
        object.__setattr__(
            self, "homogeneous", all(f.is_homogeneous() for f in polys)
        )

    @property
    def m(self) -> int:
        return len(self.polys)

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree() for f in self.polys)

    def extended(self, *extra) -> "PolySystem":
        return PolySystem(self.field, self.n, self.polys + tuple(extra))


# ---------------------------------------------------------------------------
# linear coordinate changes
# ---------------------------------------------------------------------------


def _mat_mul(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def _mat_inv(mat, p):
    """Inverse of a square matrix mod p, or None if singular."""
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if aug[r][col] % p), None)
        if piv is None:
            return None
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = pow(aug[row][col], -1, p)
        aug[row] = [v * inv % p for v in aug[row]]
        for r in range(n):
            if r != row and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(v - c * w) % p for v, w in zip(aug[r], aug[row])]
        row += 1
    return tuple(tuple(r[n:]) for r in aug)


class LinearChange:
    """Invertible change of variables given by an n x n matrix P over F_p.

    Acting on a polynomial substitutes x_i by the i-th column of P, i.e.
    ``f -> f(x . P)`` in row-vector convention.
    """

    __slots__ = ("field", "n", "matrix", "note", "_inverse_matrix")

    def __init__(self, fld: PrimeField, matrix, note: str = ""):
        p = fld.p
        mat = tuple(tuple(v % p for v in row) for row in matrix)
        n = len(mat)
        if any(len(row) != n for row in mat):
            raise DimensionMismatch("matrix is not square")
        inv = _mat_inv(mat, p)
        if inv is None:
            raise ZeroInverse("coordinate-change matrix is singular")
        self.field = fld
        self.n = n
        self.matrix = mat
        self.note = note
        self._inverse_matrix = inv

    @staticmethod
    def identity(fld: PrimeField, n: int, note: str = "identity") -> "LinearChange":
        return LinearChange(
            fld, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), note
        )

    def inverse(self) -> "LinearChange":
        return LinearChange(self.field, self._inverse_matrix, f"inverse of ({self.note})")

    def compose(self, inner: "LinearChange") -> "LinearChange":
        """The change acting as ``inner`` first, then ``self``."""
        if self.n != inner.n or self.field != inner.field:
            raise DimensionMismatch("cannot compose changes of different shape")
        return LinearChange(
            self.field,
            _mat_mul(self.matrix, inner.matrix, self.field.p),
            f"({self.note}) o ({inner.note})",
        )

    def is_identity(self) -> bool:
        return all(
            self.matrix[i][j] == int(i == j) for i in range(self.n) for j in range(self.n)
        )

    def __repr__(self):
        return f"LinearChange(p={self.field.p}, n={self.n}, note={self.note!r})"


def apply_linear_change(f: Polynomial, t: LinearChange) -> Polynomial:
    """Image of ``f`` under the substitution x_i -> i-th column of t.matrix."""
    if f.n != t.n or f.field != t.field:
        raise DimensionMismatch("polynomial and change act on different rings")
    fld, n = f.field, f.n
    substitutions = [
        Polynomial.linear_form(fld, [t.matrix[j][i] for j in range(n)]) for i in range(n)
    ]
    power_cache = [{} for _ in range(n)]

    def var_power(i, e):
        cache = power_cache[i]
        if e not in cache:
            if e == 0:
                cache[e] = Polynomial.constant(fld, n, 1)
            else:
                cache[e] = var_power(i, e - 1) * substitutions[i]
        return cache[e]

    out = Polynomial.zero(fld, n)
    for m, c in f.coeffs.items():
        term = Polynomial.constant(fld, n, c)
        for i, e in enumerate(m):
            if e:
                term = term * var_power(i, e)
        out = out + term
    return out


def apply_to_system(system: PolySystem, t: LinearChange) -> PolySystem:
    return PolySystem(system.field, system.n, tuple(apply_linear_change(f, t) for f in system.polys))


# ---------------------------------------------------------------------------
# homogenization
# ---------------------------------------------------------------------------


def homogenize(f: Polynomial) -> Polynomial:
    """Homogenize by one extra variable appended as the last (smallest) one."""
    if f.is_zero():
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    d = f.degree()
    out = {m + (d - sum(m),): c for m, c in f.coeffs.items()}
    return Polynomial(f.field, f.n + 1, out)


def top_part(f: Polynomial) -> Polynomial:
    """The sum of the maximal-degree terms of ``f`` (same ring)."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial has no top part")
    d = f.degree()
    return Polynomial(f.field, f.n, {m: c for m, c in f.coeffs.items() if sum(m) == d})


def dehomogenize(f: Polynomial, value: int = 1) -> Polynomial:
    """Substitute ``value`` for the last variable, dropping it from the ring."""
    if f.n < 1:
        raise DimensionMismatch("no variable to eliminate")
    fld = f.field
    out = {}
    for m, c in f.coeffs.items():
        scale = pow(value % fld.p, m[-1], fld.p) if m[-1] else 1
        v = (out.get(m[:-1], 0) + c * scale) % fld.p
        if v:
            out[m[:-1]] = v
        else:
            out.pop(m[:-1], None)
    return Polynomial(fld, f.n - 1, out)


def homogenize_system(system: PolySystem) -> PolySystem:
    return PolySystem(
        system.field, system.n + 1, tuple(homogenize(f) for f in system.polys)
    )
