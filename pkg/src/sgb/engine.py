"""Macaulay matrices, exact RREF over F_p (naive and block variants),
degree-capped Groebner extraction, and a Buchberger oracle.

Matrices are dense int64 numpy arrays with entries in [0, p); products of
two residues stay below 2^62, so one reduction per elimination step is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    PolySystem,
    Polynomial,
    drl_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)
from .errors import (
    BudgetExhausted,
    DegreeTooSmall,
    EmptyBasis,
    InvalidDegree,
    NotHomogeneous,
    ZeroPolynomial,
)

# ---------------------------------------------------------------------------
# Macaulay matrices
# ---------------------------------------------------------------------------


@dataclass
class MacaulayMatrix:
    """Degree-d coefficient matrix of all monomial multiples of the system.

    Row ``(m, j)`` holds the coefficients of ``m * f_j``; columns are the
    degree-d monomials in DRL-descending order.
    """

    degree: int
    field: object
    columns: tuple
    row_labels: tuple  # (multiplier monomial, generator index)
    matrix: np.ndarray

    def dump(self) -> str:
        """Debug format: header "d rows cols p", then one row per line."""
        head = f"{self.degree} {self.matrix.shape[0]} {self.matrix.shape[1]} {self.field.p}"
        lines = [head]
        for row in self.matrix:
            lines.append(" ".join(str(int(v)) for v in row))
        return "\n".join(lines) + "\n"


def build_macaulay(system: PolySystem, d: int) -> MacaulayMatrix:
    """Assemble M_d for a homogeneous system; one row per pair
    (degree d - d_j multiplier, generator j) with d_j <= d."""
    if not system.homogeneous:
        raise NotHomogeneous("Macaulay matrices need a homogeneous system")
    degrees = system.degrees
    if any(f.is_zero() for f in system.polys):
        raise ZeroPolynomial("system contains the zero polynomial")
    if any(dj < 1 for dj in degrees):
        raise InvalidDegree("generators must have degree >= 1")
    if d < min(degrees):
        raise DegreeTooSmall(f"degree {d} below the least generator degree {min(degrees)}")

    columns = monomials_of_degree(system.n, d)
    col_index = {m: i for i, m in enumerate(columns)}
    labels = []
    rows = []
    for j, f in enumerate(system.polys):
        if degrees[j] > d:
            continue
        for mult in monomials_of_degree(system.n, d - degrees[j]):
            row = np.zeros(len(columns), dtype=np.int64)
            for m, c in f.coeffs.items():
                row[col_index[mono_mul(mult, m)]] = c
            labels.append((mult, j))
            rows.append(row)
    matrix = np.vstack(rows) if rows else np.zeros((0, len(columns)), dtype=np.int64)
    return MacaulayMatrix(d, system.field, columns, tuple(labels), matrix)


# ---------------------------------------------------------------------------
# RREF over F_p
# ---------------------------------------------------------------------------


@dataclass
class RrefResult:
    matrix: np.ndarray  # same shape as the input, zero rows last
    pivots: tuple  # strictly increasing pivot column indices
    rank: int


def _rref_inplace(a: np.ndarray, p: int):
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref_naive(a: np.ndarray, p: int) -> RrefResult:
    """Canonical reduced row echelon form by plain Gaussian elimination."""
    work = np.asarray(a, dtype=np.int64) % p
    work = work.copy()
    pivots = _rref_inplace(work, p)
    return RrefResult(work, tuple(pivots), len(pivots))


def rref_block(a: np.ndarray, p: int) -> RrefResult:
    """RREF via repeated elimination of 2l-row batches (l = column count).

    Each pass removes 2l rows, squares them up with l zero columns, reduces,
    and feeds the surviving nonzero rows back; at most ceil(k/l) passes.
    The result is bitwise identical to :func:`rref_naive`.
    """
    work = np.asarray(a, dtype=np.int64) % p
    k, ell = work.shape
    if ell == 0 or k <= 2 * ell:
        return rref_naive(work, p)
    pool = work
    while pool.shape[0] > 2 * ell:
        batch, rest = pool[: 2 * ell], pool[2 * ell:]
        square = np.hstack([batch, np.zeros((2 * ell, ell), dtype=np.int64)])
        _rref_inplace(square, p)
        reduced = square[:, :ell]
        survivors = reduced[np.any(reduced != 0, axis=1)]
        pool = np.vstack([rest, survivors]) if survivors.size else rest
    final = rref_naive(pool, p)
    out = np.zeros((k, ell), dtype=np.int64)
    nonzero = final.rank
    out[:nonzero] = final.matrix[:nonzero]
    return RrefResult(out, final.pivots, final.rank)


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    """Monic basis sorted by (degree, descending DRL leading monomial).

    ``degree_cap`` is None for a complete basis, else the inspection cap; a
    capped basis may miss elements of higher degree.
    """

    elements: tuple
    order: str = "drl"
    reduced: bool = True
    degree_cap: int | None = None

    @property
    def complete(self) -> bool:
        return self.degree_cap is None

    def leading_monomials(self) -> tuple:
        return tuple(g.leading_monomial() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _sorted_basis(elements) -> tuple:
    return tuple(
        sorted(
            elements,
            key=lambda g: (g.degree(), tuple(-v for v in drl_key(g.leading_monomial())[1])),
        )
    )


def max_gb_deg(basis: GroebnerBasis) -> int:
    """Maximal total degree in the basis (a lower bound if degree-capped)."""
    if not basis.elements:
        raise EmptyBasis("empty basis has no maximal degree")
    return max(g.degree() for g in basis.elements)


def normal_form(f: Polynomial, reducers) -> Polynomial:
    """Remainder of ``f`` on division by ``reducers`` (full tail reduction)."""
    fld = f.field
    p = fld.p
    lead = [(g.leading_monomial(), fld.inv(g.leading_coeff()), g) for g in reducers]
    work = dict(f.coeffs)
    remainder = {}
    while work:
        m = max(work, key=drl_key)
        c = work.pop(m)
        for lm, lc_inv, g in lead:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                scale = c * lc_inv % p
                for gm, gc in g.coeffs.items():
                    key = mono_mul(gm, shift)
                    if key == m:
                        continue
                    v = (work.get(key, 0) - scale * gc) % p
                    if v:
                        work[key] = v
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[m] = c
    return Polynomial(fld, f.n, remainder)


def _interreduce(elements) -> list:
    """Reduce every element modulo the others; input leading monomials must
    already be pairwise non-dividing."""
    out = []
    for i, g in enumerate(elements):
        others = elements[:i] + elements[i + 1:]
        r = normal_form(g, others) if others else g
        out.append(r.monic())
    return out


def _minimalize_basis(elements) -> list:
    kept = []
    for g in sorted(elements, key=lambda h: drl_key(h.leading_monomial())):
        lm = g.leading_monomial()
        if not any(mono_divides(k.leading_monomial(), lm) for k in kept):
            kept.append(g)
    return kept


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lmf, lmg)
    return f.term_mul(mono_div(lcm, lmf)) - g.term_mul(mono_div(lcm, lmg))


def _update_pairs(lmG, pairs, t):
    """Gebauer-Moeller pruning when generator index t is appended."""
    lmf = lmG[t]
    kept = set()
    for i, j in pairs:
        lcm_ij = mono_lcm(lmG[i], lmG[j])
        if (
            not mono_divides(lmf, lcm_ij)
            or lcm_ij == mono_lcm(lmG[i], lmf)
            or lcm_ij == mono_lcm(lmG[j], lmf)
        ):
            kept.add((i, j))
    by_lcm = {}
    for i in range(t):
        by_lcm.setdefault(mono_lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for lcm in sorted(by_lcm, key=drl_key):
        if not any(mono_divides(seen, lcm) for seen in minimal):
            minimal.append(lcm)
    for lcm in minimal:
        # product criterion: coprime leading monomials reduce to zero
        if any(mono_lcm(lmG[i], lmf) == mono_mul(lmG[i], lmf) for i in by_lcm[lcm]):
            continue
        kept.add((min(by_lcm[lcm]), t))
    return kept


def buchberger(system: PolySystem, pair_budget: int | None = None) -> GroebnerBasis:
    """Complete reduced DRL Groebner basis (normal pair selection,
    Gebauer-Moeller pair pruning).

    ``pair_budget`` caps the number of processed S-pairs; exceeding it raises
    BudgetExhausted.  Counting pairs instead of wall time keeps seeded runs
    reproducible across machines.
    """
    if not system.polys:
        raise EmptyBasis("cannot compute a basis for an empty system")
    if any(f.is_zero() for f in system.polys):
        raise ZeroPolynomial("system contains the zero polynomial")

    G = []
    lmG = []
    pairs = set()
    for f in system.polys:
        G.append(f.monic())
        lmG.append(f.leading_monomial())
        pairs = _update_pairs(lmG, pairs, len(G) - 1)

    processed = 0
    while pairs:
        if pair_budget is not None and processed >= pair_budget:
            raise BudgetExhausted(
                f"basis incomplete after {processed} S-pair reductions"
            )
        processed += 1
        i, j = min(pairs, key=lambda ij: drl_key(mono_lcm(lmG[ij[0]], lmG[ij[1]])))
        pairs.discard((i, j))
        r = normal_form(_spoly(G[i], G[j]), G)
        if not r.is_zero():
            G.append(r.monic())
            lmG.append(r.leading_monomial())
            pairs = _update_pairs(lmG, pairs, len(G) - 1)

    reduced = _interreduce(_minimalize_basis(G))
    return GroebnerBasis(_sorted_basis(reduced), degree_cap=None)


def gb_up_to(system: PolySystem, cap: int) -> GroebnerBasis:
    """Reduced Groebner basis truncated at degree ``cap`` via degree-by-degree
    Macaulay RREFs; exact and complete whenever cap >= the true maximal
    basis degree."""
    if not system.homogeneous:
        raise NotHomogeneous("degree-capped extraction needs a homogeneous system")
    if any(f.is_zero() for f in system.polys):
        raise ZeroPolynomial("system contains the zero polynomial")
    degrees = system.degrees
    if cap < max(degrees):
        raise DegreeTooSmall(f"cap {cap} below the largest generator degree {max(degrees)}")

    fld = system.field
    collected = []
    collected_lms = []
    # TODO: inject already-found basis elements as extra rows at higher
    # degrees to shrink the matrices; rows are currently pure monomial
    # multiples of the input generators
    for d in range(min(degrees), cap + 1):
        mac = build_macaulay(system, d)
        res = rref_naive(mac.matrix, fld.p)
        for row_idx, piv in enumerate(res.pivots):
            lm = mac.columns[piv]
            if any(mono_divides(g, lm) for g in collected_lms):
                continue
            row = res.matrix[row_idx]
            coeffs = {
                mac.columns[i]: int(v) for i, v in enumerate(row) if v
            }
            collected.append(Polynomial(fld, system.n, coeffs))
            collected_lms.append(lm)
    # RREF rows are already tail-reduced; one inter-reduction pass keeps the
    # output canonical regardless
    reduced = _interreduce(_minimalize_basis(collected)) if collected else []
    return GroebnerBasis(_sorted_basis(reduced), degree_cap=cap)


def leading_monomial_ideal(basis: GroebnerBasis):
    """Minimal generators of <LM(G)> as a MonomialIdeal."""
    from .hilbert import minimalize

    if not basis.elements:
        raise EmptyBasis("empty basis has no leading-monomial ideal")
    n = basis.elements[0].n
    return minimalize(basis.leading_monomials(), n)
