"""Macaulay matrices, the two RREF routines, degree-capped extraction against
the Buchberger oracle, and the rank identity."""

import math
import random

import numpy as np
import pytest

from sgb import (
    PolySystem,
    Polynomial,
    buchberger,
    build_macaulay,
    gb_up_to,
    hilbert_function,
    leading_monomial_ideal,
    max_gb_deg,
    mono_divides,
    mono_lcm,
    mono_div,
    monomials_of_degree,
    normal_form,
    rref_block,
    rref_naive,
    sample_system,
)
from sgb.errors import (
    DegreeTooSmall,
    EmptyBasis,
    NotHomogeneous,
    ZeroPolynomial,
)
from conftest import spec_fixture_system


def fixture_f1_f2(fld):
    return PolySystem(
        fld,
        2,
        (
            Polynomial(fld, 2, {(2, 0): 1, (0, 2): 1}),  # x1^2 + x2^2
            Polynomial(fld, 2, {(1, 1): 1}),  # x1*x2
        ),
    )


class TestBuildMacaulay:
    def test_hand_expansion(self, f7):
        mac = build_macaulay(fixture_f1_f2(f7), 3)
        assert mac.columns == ((3, 0), (2, 1), (1, 2), (0, 3))
        assert mac.row_labels == (
            ((1, 0), 0),
            ((0, 1), 0),
            ((1, 0), 1),
            ((0, 1), 1),
        )
        expected = np.array(
            [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]
        )
        assert np.array_equal(mac.matrix, expected)

    def test_one_by_one(self, f7):
        system = PolySystem(f7, 1, (Polynomial.variable(f7, 1, 0),))
        mac = build_macaulay(system, 1)
        assert mac.matrix.shape == (1, 1) and mac.matrix[0, 0] == 1

    def test_monomial_shifts(self, f7):
        system = PolySystem(f7, 2, (Polynomial(f7, 2, {(2, 0): 1}),))
        mac = build_macaulay(system, 3)
        assert mac.matrix.shape == (2, 4)
        assert mac.row_labels == (((1, 0), 0), ((0, 1), 0))

    def test_row_count_formula(self, f31):
        rng = random.Random(0)
        for _ in range(50):
            n = rng.randint(1, 4)
            m = rng.randint(1, 4)
            degrees = tuple(rng.randint(1, 3) for _ in range(m))
            system = sample_system(n, m, degrees, f31, seed=rng.randrange(10**6))
            d = rng.randint(min(degrees), 6)
            mac = build_macaulay(system, d)
            expected = sum(
                math.comb(n - 1 + d - dj, d - dj) for dj in degrees if dj <= d
            )
            assert mac.matrix.shape == (expected, math.comb(n + d - 1, d))

    def test_rows_encode_products(self, f31):
        rng = random.Random(1)
        for _ in range(30):
            system = sample_system(3, 2, (2, 3), f31, seed=rng.randrange(10**6))
            mac = build_macaulay(system, 4)
            for (mult, j), row in zip(mac.row_labels, mac.matrix):
                product = system.polys[j].term_mul(mult)
                rebuilt = {
                    mac.columns[i]: int(v) for i, v in enumerate(row) if v
                }
                assert rebuilt == product.coeffs

    def test_errors(self, f7):
        inhom = PolySystem(
            f7, 2, (Polynomial(f7, 2, {(1, 0): 1, (0, 0): 1}),)
        )
        with pytest.raises(NotHomogeneous):
            build_macaulay(inhom, 2)
        with pytest.raises(DegreeTooSmall):
            build_macaulay(fixture_f1_f2(f7), 1)

    def test_dump_golden(self, f7):
        mac = build_macaulay(fixture_f1_f2(f7), 3)
        assert mac.dump() == "3 4 4 7\n1 0 1 0\n0 1 0 1\n0 1 0 0\n0 0 1 0\n"


class TestRref:
    def test_spec_examples(self):
        res = rref_naive(np.array([[0, 1], [1, 0]]), 7)
        assert np.array_equal(res.matrix, np.eye(2, dtype=np.int64)) and res.rank == 2
        res = rref_naive(np.array([[2, 4], [1, 2]]), 7)
        assert np.array_equal(res.matrix, np.array([[1, 2], [0, 0]])) and res.rank == 1
        zero = np.zeros((3, 2), dtype=np.int64)
        res = rref_naive(zero, 7)
        assert np.array_equal(res.matrix, zero) and res.rank == 0

    def test_canonical_form_invariants(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            a = rng.integers(0, 31, size=(rng.integers(1, 8), rng.integers(1, 6)))
            res = rref_naive(a, 31)
            assert list(res.pivots) == sorted(res.pivots)
            for row_idx, col in enumerate(res.pivots):
                assert res.matrix[row_idx, col] == 1
                column = res.matrix[:, col].copy()
                column[row_idx] = 0
                assert not column.any()
            assert not res.matrix[res.rank:].any()

    def test_idempotent_and_permutation_stable(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            a = rng.integers(0, 31, size=(rng.integers(1, 10), rng.integers(1, 6)))
            res = rref_naive(a, 31)
            again = rref_naive(res.matrix, 31)
            assert np.array_equal(res.matrix, again.matrix)
            shuffled = a[rng.permutation(a.shape[0])]
            assert rref_naive(shuffled, 31).rank == res.rank
            assert np.array_equal(rref_naive(shuffled, 31).matrix, res.matrix)

    def test_block_equals_naive_small(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            ell = int(rng.integers(1, 8))
            k = int(rng.integers(1, 2 * ell + 1))
            a = rng.integers(0, 31, size=(k, ell))
            naive, block = rref_naive(a, 31), rref_block(a, 31)
            assert np.array_equal(naive.matrix, block.matrix)

    def test_block_equals_naive_tall(self):
        rng = np.random.default_rng(3)
        for ratio in (3, 10, 20):
            for _ in range(20):
                ell = int(rng.integers(1, 8))
                a = rng.integers(0, 31, size=(ratio * ell, ell))
                naive, block = rref_naive(a, 31), rref_block(a, 31)
                assert np.array_equal(naive.matrix, block.matrix)
                assert naive.pivots == block.pivots

    def test_stacked_copy(self):
        rng = np.random.default_rng(4)
        a = rng.integers(0, 7, size=(5, 3))
        single = rref_naive(a, 7)
        stacked = rref_block(np.vstack([a] * 5), 7)
        assert np.array_equal(
            single.matrix[: single.rank], stacked.matrix[: stacked.rank]
        )


class TestGroebner:
    def test_buchberger_spec_examples(self, f7):
        basis = buchberger(fixture_f1_f2(f7))
        assert [str(g) for g in basis] == ["x1^2 + x2^2", "x1*x2", "x2^3"]
        basis = buchberger(
            PolySystem(
                f7, 2, (Polynomial.variable(f7, 2, 0), Polynomial.variable(f7, 2, 1))
            )
        )
        assert [str(g) for g in basis] == ["x1", "x2"]
        basis = buchberger(spec_fixture_system(f7))
        assert [str(g) for g in basis] == ["x1^2", "x1*x2"]

    def test_buchberger_errors(self, f7):
        with pytest.raises(ZeroPolynomial):
            buchberger(PolySystem(f7, 2, (Polynomial.zero(f7, 2),)))
        with pytest.raises(EmptyBasis):
            buchberger(PolySystem(f7, 2, ()))

    def test_buchberger_criterion_on_random_systems(self, f31):
        # every S-polynomial of the output reduces to zero
        rng = random.Random(5)
        for k in range(25):
            n = rng.randint(2, 3)
            m = rng.randint(2, 4)
            degrees = tuple(rng.randint(1, 3) for _ in range(m))
            basis = buchberger(sample_system(n, m, degrees, f31, seed=k))
            elems = list(basis.elements)
            for i in range(len(elems)):
                for j in range(i + 1, len(elems)):
                    lcm = mono_lcm(
                        elems[i].leading_monomial(), elems[j].leading_monomial()
                    )
                    s = elems[i].term_mul(
                        mono_div(lcm, elems[i].leading_monomial())
                    ) - elems[j].term_mul(mono_div(lcm, elems[j].leading_monomial()))
                    assert normal_form(s, elems).is_zero()

    def test_reducedness(self, f31):
        rng = random.Random(6)
        for k in range(25):
            basis = buchberger(sample_system(3, 3, (2, 2, 3), f31, seed=100 + k))
            lms = basis.leading_monomials()
            for i, g in enumerate(basis):
                assert g.leading_coeff() == 1
                for j, lm in enumerate(lms):
                    if i == j:
                        continue
                    assert not any(mono_divides(lm, m) for m in g.coeffs)

    def test_gb_up_to_spec_examples(self, f7):
        basis = gb_up_to(fixture_f1_f2(f7), 3)
        assert [str(g) for g in basis] == ["x1^2 + x2^2", "x1*x2", "x2^3"]
        assert basis.degree_cap == 3 and not basis.complete

        single = gb_up_to(PolySystem(f7, 1, (Polynomial.variable(f7, 1, 0),)), 1)
        assert [str(g) for g in single] == ["x1"]

        capped = gb_up_to(spec_fixture_system(f7), 4)
        assert [str(g) for g in capped] == ["x1^2", "x1*x2"]

    def test_gb_up_to_requires_homogeneous(self, f7):
        inhom = PolySystem(f7, 1, (Polynomial(f7, 1, {(1,): 1, (0,): 1}),))
        with pytest.raises(NotHomogeneous):
            gb_up_to(inhom, 2)

    def test_engine_matches_oracle(self, f31):
        rng = random.Random(7)
        for k in range(40):
            n = rng.randint(2, 4)
            m = rng.randint(max(1, n - 1), 5)
            degrees = tuple(rng.randint(1, 3) for _ in range(m))
            system = sample_system(n, m, degrees, f31, seed=500 + k)
            oracle = buchberger(system)
            cap = max(max_gb_deg(oracle), max(degrees))
            engine = gb_up_to(system, cap)
            assert [str(g) for g in engine] == [str(g) for g in oracle]

    def test_max_gb_deg(self, f7):
        assert max_gb_deg(buchberger(fixture_f1_f2(f7))) == 3
        assert max_gb_deg(buchberger(PolySystem(f7, 2, (Polynomial.variable(f7, 2, 0),)))) == 1
        assert max_gb_deg(buchberger(spec_fixture_system(f7))) == 2
        from sgb import GroebnerBasis

        with pytest.raises(EmptyBasis):
            max_gb_deg(GroebnerBasis(()))

    def test_gb_up_to_cap_below_generators(self, f7):
        with pytest.raises(DegreeTooSmall):
            gb_up_to(fixture_f1_f2(f7), 1)

    def test_pair_budget(self, f31):
        from sgb.errors import BudgetExhausted

        system = sample_system(3, 4, (2, 2, 2, 2), f31, seed=3)
        with pytest.raises(BudgetExhausted):
            buchberger(system, pair_budget=1)
        generous = buchberger(system, pair_budget=10_000)
        assert [str(g) for g in generous] == [str(g) for g in buchberger(system)]

    def test_rank_identity_and_pivot_monomials(self, f31):
        # dim R_d - rank(M_d) = HF of the leading-monomial ideal, and the
        # pivot columns are exactly the degree-d part of <LM(G)>
        rng = random.Random(8)
        for k in range(20):
            n = rng.randint(2, 3)
            m = rng.randint(2, 4)
            degrees = tuple(rng.randint(1, 3) for _ in range(m))
            system = sample_system(n, m, degrees, f31, seed=900 + k)
            basis = buchberger(system)
            lm_ideal = leading_monomial_ideal(basis)
            for d in range(min(degrees), 7):
                mac = build_macaulay(system, d)
                res = rref_naive(mac.matrix, 31)
                monoms = monomials_of_degree(n, d)
                assert len(monoms) - res.rank == hilbert_function(lm_ideal, d)
                pivot_monoms = {mac.columns[c] for c in res.pivots}
                ideal_part = {t for t in monoms if lm_ideal.contains(t)}
                assert pivot_monoms == ideal_part
