"""Semi-regularity certification, structural position checks, the linear-form
coordinate change, the end-to-end degree-bound verifier, and random samplers.

The verifier realizes the inequality chain

    max.GB.deg(I^sigma)  <=  max{d_reg(<I, l>), gen_d_reg(I)}  <=  D(n, m)

for homogeneous ideals with Krull dimension <= 1, together with the equality
case for weakly reverse lexicographic leading-term ideals and the m = n - 1
regular-sequence law.  All Hilbert data is exact; nothing is sampled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    LinearChange,
    PolySystem,
    Polynomial,
    apply_to_system,
    monomials_of_degree,
    drl_key,
    mono_deg,
)
from .engine import GroebnerBasis, buchberger, gb_up_to, leading_monomial_ideal, max_gb_deg
from .errors import (
    BudgetExhausted,
    DegreeTooSmall,
    DimensionTooHigh,
    NotHomogeneous,
    NotLinear,
    SearchExhausted,
    UndefinedBound,
    UnitIdeal,
    ZeroForm,
)
from .hilbert import HilbertProfile, MonomialIdeal, regularity_profile
from .series import degree_bound_Dnm, degree_product, lazard_bound, poly_sub

# ---------------------------------------------------------------------------
# exact Hilbert data of a polynomial ideal
# ---------------------------------------------------------------------------


def groebner_basis(
    system: PolySystem,
    engine: str = "buchberger",
    cap: int | None = None,
    pair_budget: int | None = None,
) -> GroebnerBasis:
    """Oracle dispatch: complete Buchberger basis, or the Macaulay engine
    capped at ``cap`` (default: the Lazard bound)."""
    if engine == "buchberger":
        return buchberger(system, pair_budget=pair_budget)
    if engine in ("macaulay", "capped"):
        if cap is None:
            cap = lazard_bound(system.n, system.m, system.degrees)
        cap = max(cap, max(system.degrees))
        return gb_up_to(system, cap)
    raise ValueError(f"unknown engine {engine!r}")


def _hilbert_of_basis(basis: GroebnerBasis) -> tuple[MonomialIdeal, HilbertProfile]:
    if any(g.degree() == 0 for g in basis):
        raise UnitIdeal("ideal contains a nonzero constant")
    lm = leading_monomial_ideal(basis)
    return lm, regularity_profile(lm)


def exact_hilbert_of_ideal(
    system: PolySystem, engine: str = "buchberger", pair_budget: int | None = None
) -> tuple[MonomialIdeal, HilbertProfile]:
    """Leading-monomial ideal of the reduced basis plus its exact profile."""
    if not system.homogeneous:
        raise NotHomogeneous("exact Hilbert data needs a homogeneous system")
    return _hilbert_of_basis(groebner_basis(system, engine, pair_budget=pair_budget))


# ---------------------------------------------------------------------------
# semi-regularity certification through Hilbert series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of comparing the exact Hilbert series against the generic one.

    ``first_defect_degree`` is the least degree where the exact series and
    prod(1 - z^(d_j)) / (1 - z)^n differ (None if they agree identically).
    ``cryptographic``/``generalized`` are None where not applicable.
    """

    d_checked: int
    is_d_regular: bool
    cryptographic: bool | None
    generalized: bool | None
    first_defect_degree: int | None


def first_defect_degree(profile: HilbertProfile, degrees) -> int | None:
    """Least degree where HS_{R/I} deviates from the generic series.

    Both series share the denominator (1 - z)^n, so the deviation point is
    the lowest nonzero coefficient of the numerator difference.
    """
    diff = poly_sub(list(profile.numerator), degree_product(degrees))
    for k, c in enumerate(diff):
        if c:
            return k
    return None


def _certification(profile: HilbertProfile, degrees) -> CertificationReport:
    defect = first_defect_degree(profile, degrees)
    r = profile.krull_dim
    min_domain = max(degrees)

    def regular_to(d):
        return defect is None or defect >= d

    # r = 0: the series check at d_reg coincides with the closed-form
    # criterion (at the first defect the exact side is larger, so the series
    # coefficient there is negative and the truncation stops); degenerate
    # d_reg below the largest generator degree is harmless here.
    cryptographic = regular_to(profile.d_reg) if r == 0 else None
    if r == 0:
        generalized = cryptographic
        d_checked = profile.d_reg
    elif r == 1:
        # d-regularity is only defined from the largest generator degree on;
        # a stabilization degree below that must be certified at the floor,
        # otherwise dependent low-degree generators certify vacuously and
        # the degree bound they feed is unsound
        d_checked = max(profile.gen_d_reg, min_domain)
        generalized = regular_to(d_checked)
    else:
        generalized = None
        d_checked = min_domain
    return CertificationReport(
        d_checked=d_checked,
        is_d_regular=regular_to(d_checked),
        cryptographic=cryptographic,
        generalized=generalized,
        first_defect_degree=defect,
    )


def certify_d_regular(system: PolySystem, d: int) -> bool:
    """True iff the exact Hilbert function equals the generic series
    coefficients in every degree below ``d``."""
    if d < max(system.degrees):
        raise DegreeTooSmall(f"d-regularity needs d >= max degree {max(system.degrees)}")
    _, profile = exact_hilbert_of_ideal(system)
    defect = first_defect_degree(profile, system.degrees)
    return defect is None or defect >= d


def certify_semiregular(system: PolySystem) -> CertificationReport:
    """Certify both semi-regularity notions from the exact Hilbert series."""
    _, profile = exact_hilbert_of_ideal(system)
    return _certification(profile, system.degrees)


def is_regular_sequence(system: PolySystem) -> bool:
    """Exact check of the regular-sequence Hilbert identity
    HS_{R/I} = prod(1 - z^(d_j)) / (1 - z)^n."""
    _, profile = exact_hilbert_of_ideal(system)
    return first_defect_degree(profile, system.degrees) is None


# ---------------------------------------------------------------------------
# structural position checks
# ---------------------------------------------------------------------------


def check_noether_position(lm: MonomialIdeal, r: int) -> bool:
    """True iff each of x_1 .. x_{n-r} has a pure power among the generators."""
    for i in range(lm.n - r):
        if not any(g[i] and mono_deg(g) == g[i] for g in lm.gens):
            return False
    return True


def check_weakly_revlex(lm: MonomialIdeal) -> bool:
    """True iff every same-degree monomial preceding a minimal generator also
    lies in the ideal."""
    for g in lm.gens:
        kg = drl_key(g)
        for t in monomials_of_degree(lm.n, mono_deg(g)):
            if drl_key(t) <= kg:
                break
            if not lm.contains(t):
                return False
    return True


# ---------------------------------------------------------------------------
# linear form and coordinate change (sigma)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositionChange:
    """A linear form avoiding the projective zeros, with the variable change
    sending it to the last variable.

    ``pivot_index`` is the 0-based index of the form's chosen pivot variable;
    ``ell`` is normalized so the pivot coefficient is 1, which makes
    ``apply_linear_change(ell, sigma) == x_n`` exact.
    """

    ell: Polynomial
    pivot_index: int
    sigma: LinearChange
    attempts_used: int


def build_sigma(ell: Polynomial) -> LinearChange:
    """Change of variables sending the linear form to x_n: a pivot-to-last
    permutation followed by a shear in the last column."""
    if ell.is_zero():
        raise ZeroForm("cannot build a change from the zero form")
    if not ell.is_linear_form():
        raise NotLinear("expected a homogeneous linear form")
    fld, n = ell.field, ell.n
    coeffs = [0] * n
    for m, c in ell.coeffs.items():
        coeffs[m.index(1)] = c
    pivot = max(i for i, c in enumerate(coeffs) if c)
    inv = fld.inv(coeffs[pivot])
    coeffs = [c * inv % fld.p for c in coeffs]

    perm = [[int(i == j) for j in range(n)] for i in range(n)]
    if pivot != n - 1:
        perm[pivot][pivot] = perm[n - 1][n - 1] = 0
        perm[pivot][n - 1] = perm[n - 1][pivot] = 1
    sigma1 = LinearChange(fld, perm, f"swap x{pivot + 1} and x{n}")

    moved = list(coeffs)
    moved[pivot], moved[n - 1] = moved[n - 1], moved[pivot]
    shear = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        shear[i][n - 1] = (-moved[i]) % fld.p
    sigma2 = LinearChange(fld, shear, "shear last column")
    return sigma2.compose(sigma1)


def normalized_form(ell: Polynomial) -> tuple[Polynomial, int]:
    """Scale so the largest-index nonzero coefficient becomes 1."""
    if ell.is_zero():
        raise ZeroForm("zero form")
    if not ell.is_linear_form():
        raise NotLinear("expected a homogeneous linear form")
    coeffs = [0] * ell.n
    for m, c in ell.coeffs.items():
        coeffs[m.index(1)] = c
    pivot = max(i for i, c in enumerate(coeffs) if c)
    return ell.scale(ell.field.inv(coeffs[pivot])), pivot


def _search_linear_form(system, seed, max_attempts, engine, pair_budget=None):
    """Candidate loop; assumes the dimension precondition already holds.

    Returns the position change together with the basis and profile of the
    successful extension <F, l> so callers need not recompute them.
    """
    fld, n = system.field, system.n
    rng = random.Random(seed)

    def candidates():
        for i in reversed(range(n)):
            yield Polynomial.variable(fld, n, i)
        while True:
            vec = [rng.randrange(fld.p) for _ in range(n)]
            if any(vec):
                yield Polynomial.linear_form(fld, vec)

    attempts = 0
    for ell in candidates():
        if attempts >= max_attempts:
            break
        attempts += 1
        ext_basis = groebner_basis(system.extended(ell), engine, pair_budget=pair_budget)
        _, ext_profile = _hilbert_of_basis(ext_basis)
        if ext_profile.krull_dim == 0:
            ell, pivot = normalized_form(ell)
            pos = PositionChange(ell, pivot, build_sigma(ell), attempts)
            return pos, ext_basis, ext_profile
    raise SearchExhausted(
        f"no admissible linear form in {max_attempts} attempts; "
        "the field may have fewer elements than the ideal has projective zeros"
    )


def find_linear_form(
    system: PolySystem,
    seed: int = 0,
    max_attempts: int = 64,
    engine: str = "buchberger",
) -> PositionChange:
    """Search for a linear form l with R/<I, l> Artinian.

    Tries x_n, x_{n-1}, ..., x_1 first, then seeded random forms.  Raises
    SearchExhausted when the budget runs out (the field may be too small)
    and DimensionTooHigh when R/I itself has dimension >= 2.
    """
    _, profile = exact_hilbert_of_ideal(system, engine)
    if profile.krull_dim >= 2:
        raise DimensionTooHigh(
            f"Krull dimension {profile.krull_dim} >= 2: no single form can work"
        )
    pos, _, _ = _search_linear_form(system, seed, max_attempts, engine)
    return pos


# ---------------------------------------------------------------------------
# the end-to-end theorem verifier
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    """Per-system verification record for the full inequality chain.

    When the hypotheses hold (dimension <= 1, form found, generalized
    semi-regular, uncapped engine), ``ineq_max_gb`` and ``ineq_D_nm`` are
    theorems: a False value signals an implementation bug.
    """

    n: int
    m: int
    degrees: tuple
    q: int
    krull_dim: int
    ell_found: bool
    ell: Polynomial | None
    sigma: LinearChange | None
    attempts_used: int
    d_reg_ell: int | None
    gen_d_reg: int | None
    max_gb_deg_sigma: int | None
    D_nm: int | None
    lazard: int
    ineq_max_gb: bool | None
    ineq_D_nm: bool | None
    weakly_revlex: bool | None
    artinian_after_sigma: bool | None
    equality_attained: bool | None
    m_n_minus_1_law: bool | None
    semiregular: CertificationReport
    engine: str

    @property
    def hypotheses_verified(self) -> bool:
        return (
            self.krull_dim <= 1
            and self.ell_found
            and self.semiregular.generalized is True
            and self.engine != "capped"
        )


def verify_main_theorem(
    system: PolySystem,
    seed: int = 0,
    max_attempts: int = 64,
    engine: str = "buchberger",
    pair_budget: int | None = None,
) -> TheoremReport:
    """Run the whole pipeline on one homogeneous system and fill every flag.

    ``engine='capped'`` switches the basis computations to the Macaulay
    engine capped at the Lazard bound; such reports are marked and excluded
    from theorem assertions by callers.  When a ``pair_budget`` is given and
    the Buchberger oracle exhausts it, the run falls back to the capped
    engine automatically (deterministically, since the budget counts S-pair
    reductions rather than wall time).
    """
    try:
        return _verify(system, seed, max_attempts, engine, pair_budget)
    except BudgetExhausted:
        if engine != "buchberger":
            raise
        return _verify(system, seed, max_attempts, "capped", None)


def _verify(system, seed, max_attempts, engine, pair_budget) -> TheoremReport:
    if not system.homogeneous:
        raise NotHomogeneous("the degree bounds apply to homogeneous ideals")
    n, m = system.n, system.m
    degrees = system.degrees

    basis = groebner_basis(system, engine, pair_budget=pair_budget)
    lm, profile = _hilbert_of_basis(basis)
    if profile.krull_dim >= 2:
        raise DimensionTooHigh(f"Krull dimension {profile.krull_dim} >= 2")
    semireg = _certification(profile, degrees)
    gen_d_reg = profile.gen_d_reg

    pos, _, ext_profile = _search_linear_form(
        system, seed, max_attempts, engine, pair_budget
    )
    d_reg_ell = ext_profile.d_reg

    xn = Polynomial.variable(system.field, n, n - 1)
    if pos.sigma.is_identity():
        sigma_system = system
        basis_sigma = basis
    else:
        sigma_system = apply_to_system(system, pos.sigma)
        basis_sigma = groebner_basis(sigma_system, engine, pair_budget=pair_budget)
    lm_sigma = leading_monomial_ideal(basis_sigma)
    gb_deg_sigma = max_gb_deg(basis_sigma)

    if pos.sigma.is_identity() and pos.ell == xn:
        sigma_xn_profile = ext_profile
    else:
        _, sigma_xn_profile = exact_hilbert_of_ideal(
            sigma_system.extended(xn), engine, pair_budget
        )
    artinian_after_sigma = sigma_xn_profile.krull_dim == 0
    if artinian_after_sigma and sigma_xn_profile.d_reg != d_reg_ell:
        raise AssertionError(
            "d_reg(<I^sigma, x_n>) must match d_reg(<I, l>) "
            f"({sigma_xn_profile.d_reg} vs {d_reg_ell})"
        )

    try:
        D_nm = degree_bound_Dnm(n, m, degrees)
    except UndefinedBound:
        D_nm = None
    lz = lazard_bound(n, m, degrees)

    rhs = max(d_reg_ell, gen_d_reg)
    ineq_max_gb = gb_deg_sigma <= rhs
    ineq_D_nm = None if D_nm is None else rhs <= D_nm
    weakly = check_weakly_revlex(lm_sigma)
    equality = (gb_deg_sigma == rhs) if (weakly and artinian_after_sigma) else None

    m_n_minus_1_law = None
    if m == n - 1:
        ext_degrees = degrees + (1,)
        ext_regular = first_defect_degree(ext_profile, ext_degrees) is None
        if ext_regular:
            m_n_minus_1_law = (
                gen_d_reg == d_reg_ell - 1 == sum(d - 1 for d in degrees)
            )

    return TheoremReport(
        n=n,
        m=m,
        degrees=degrees,
        q=system.field.p,
        krull_dim=profile.krull_dim,
        ell_found=True,
        ell=pos.ell,
        sigma=pos.sigma,
        attempts_used=pos.attempts_used,
        d_reg_ell=d_reg_ell,
        gen_d_reg=gen_d_reg,
        max_gb_deg_sigma=gb_deg_sigma,
        D_nm=D_nm,
        lazard=lz,
        ineq_max_gb=ineq_max_gb,
        ineq_D_nm=ineq_D_nm,
        weakly_revlex=weakly,
        artinian_after_sigma=artinian_after_sigma,
        equality_attained=equality,
        m_n_minus_1_law=m_n_minus_1_law,
        semiregular=semireg,
        engine=engine,
    )


# ---------------------------------------------------------------------------
# random samplers
# ---------------------------------------------------------------------------


def child_seed(master_seed: int, index: int) -> int:
    """Stable per-trial seed derivation, independent of scheduling."""
    return (master_seed * 0x9E3779B97F4A7C15 + index + 1) % 2**63


def _random_homogeneous(rng, fld, n, d, skip=None):
    monoms = monomials_of_degree(n, d)
    while True:
        coeffs = {}
        for m in monoms:
            if skip is not None and m == skip:
                continue
            c = rng.randrange(fld.p)
            if c:
                coeffs[m] = c
        if coeffs:
            return Polynomial(fld, n, coeffs)


def sample_system(n: int, m: int, degrees, fld, seed: int) -> PolySystem:
    """Dense random homogeneous system: independently uniform coefficients on
    every degree-d_j monomial; deterministic for a fixed seed."""
    if len(degrees) != m:
        raise ValueError(f"expected {m} degrees, got {len(degrees)}")
    rng = random.Random(seed)
    return PolySystem(
        fld, n, tuple(_random_homogeneous(rng, fld, n, d) for d in degrees)
    )


def sample_Z_system(n: int, m: int, degrees, fld, seed: int) -> PolySystem:
    """Like :func:`sample_system` but with the x_n^(d_i) coefficient of each
    polynomial forced to zero, so (0 : ... : 0 : 1) is a projective zero and
    the quotient is never Artinian."""
    if n < 2:
        raise ValueError("the corner-vanishing construction needs n >= 2")
    if len(degrees) != m:
        raise ValueError(f"expected {m} degrees, got {len(degrees)}")
    rng = random.Random(seed)
    polys = []
    for d in degrees:
        skip = tuple([0] * (n - 1) + [d])
        polys.append(_random_homogeneous(rng, fld, n, d, skip=skip))
    return PolySystem(fld, n, tuple(polys))
