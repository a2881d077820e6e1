"""Tour of the exact-arithmetic kernel: prime fields, the graded reverse
lexicographic order, polynomial arithmetic, coordinate changes, and
homogenization.

Run:  python3 demos/01_fields_polynomials_orders.py
"""

from sgb import (
    LinearChange,
    Polynomial,
    PrimeField,
    apply_linear_change,
    dehomogenize,
    drl_compare,
    homogenize,
    monomials_of_degree,
    poly_to_string,
    top_part,
)

# Everything is exact: elements of F_p are plain ints in [0, p), monomials
# are exponent tuples, and a PrimeField supplies the arithmetic.
F7 = PrimeField(7)
print("inverse of 3 mod 7:", F7.inv(3))

# The monomial order is graded reverse lex with x1 > x2 > ... > xn.
# Degree decides first; ties go to the monomial whose *last* differing
# exponent is smaller.
print("\ndegree-2 monomials in 3 variables, largest first:")
for m in monomials_of_degree(3, 2):
    print("  ", m)
print("x2^2 vs x1*x3:", drl_compare((0, 2, 0), (1, 0, 1)))  # 1 means greater

# Polynomials are immutable dictionaries of monomial -> coefficient.
f = Polynomial(F7, 2, {(2, 0): 1, (0, 2): 1})  # x1^2 + x2^2
g = Polynomial(F7, 2, {(1, 1): 1})             # x1*x2
print("\nf =", f)
print("g =", g)
print("f * g =", f * g)
print("leading monomial of f:", f.leading_monomial())

# A linear change of variables substitutes each x_i by a column of its
# matrix.  The shear below sends x2 to x2 - x1.
shear = LinearChange(F7, [[1, -1], [0, 1]], "x2 -> x2 - x1")
print("\ng under the shear:", apply_linear_change(g, shear))
ell = Polynomial.linear_form(F7, [1, 1])
print("x1 + x2 under the shear:", apply_linear_change(ell, shear))

# Homogenization appends one extra variable (printed y) as the smallest one.
inhom = Polynomial(F7, 1, {(2,): 1, (1,): 3, (0,): 5})  # x1^2 + 3x1 + 5
h = homogenize(inhom)
print("\ninhomogeneous:", inhom)
print("homogenized:  ", poly_to_string(h, ["x1", "y"]))
print("y := 1 recovers the input:", dehomogenize(h, 1) == inhom)
print("y := 0 is the top part:   ", dehomogenize(h, 0) == top_part(inhom))
