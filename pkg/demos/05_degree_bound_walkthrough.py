"""End-to-end walkthrough of the degree-bound verifier on a dimension-one
ideal: find a linear form avoiding the projective zeros, change coordinates
so it becomes x_n, and check the full inequality chain

    max.GB.deg(I^sigma) <= max{d_reg(<I, l>), gen_d_reg(I)} <= D(n, m).

Run:  python3 demos/05_degree_bound_walkthrough.py
"""

from sgb import (
    PolySystem,
    Polynomial,
    PrimeField,
    poly_to_string,
    sample_Z_system,
    verify_main_theorem,
)

F7 = PrimeField(7)

# The hand fixture <x1^2, x1*x2> = x1 * <x1, x2> has the single projective
# zero (0 : 1), so the quotient has Krull dimension 1.
fixture = PolySystem(
    F7, 2, (Polynomial(F7, 2, {(2, 0): 1}), Polynomial(F7, 2, {(1, 1): 1}))
)
report = verify_main_theorem(fixture, seed=1)
print("fixture <x1^2, x1*x2> over F_7")
print("  Krull dimension:", report.krull_dim)
print("  linear form l =", report.ell, "(found in", report.attempts_used, "attempt)")
print("  sigma matrix:", report.sigma.matrix)
print("  d_reg(<I, l>) =", report.d_reg_ell, "  gen_d_reg(I) =", report.gen_d_reg)
print("  max.GB.deg(I^sigma) =", report.max_gb_deg_sigma, " D bound =", report.D_nm)
print("  chain holds:", report.ineq_max_gb and report.ineq_D_nm)
print("  leading-term ideal weakly revlex:", report.weakly_revlex,
      "-> equality attained:", report.equality_attained)

# A random dimension-one system: forcing the x_n-pure coefficient of every
# generator to zero plants the projective zero (0 : ... : 0 : 1), so x_n
# itself never works as the linear form and a coordinate change is genuinely
# needed.
F31 = PrimeField(31)
system = sample_Z_system(3, 4, (2, 2, 2, 2), F31, seed=20)
print("\nrandom Z-construction system over F_31:")
for f in system.polys:
    print("  ", poly_to_string(f))
report = verify_main_theorem(system, seed=20)
print("  Krull dimension:", report.krull_dim)
print("  l =", report.ell, " attempts:", report.attempts_used)
print("  d_reg(<I, l>) =", report.d_reg_ell, "  gen_d_reg(I) =", report.gen_d_reg)
print("  max.GB.deg(I^sigma) =", report.max_gb_deg_sigma, " D bound =", report.D_nm,
      " Lazard =", report.lazard)
print("  generalized semi-regular:", report.semiregular.generalized)
print("  inequality chain holds:", report.ineq_max_gb and report.ineq_D_nm)
print("  equality attained:", report.equality_attained)
