import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spingeom.exact import ComplexMatrix, GaussianRational
from spingeom.geometry import are_isomorphic, design_params, dual, is_projective_plane
from spingeom.hypercomplex import (
    OCTONION_TABLE,
    QI,
    QJ,
    QK,
    Octonion,
    Quaternion,
    SignedTriad,
    UnitProduct,
    associator,
    fano_from_table,
    fano_triads,
    norm_composition_check,
    oct_mul,
    oct_table,
    quat_mul,
    quat_to_pauli,
    sign_counts,
    verify_index_rules,
    verify_sign_balance,
)

e = Octonion.unit
ints = st.integers(min_value=-50, max_value=50)
octonions = st.lists(ints, min_size=8, max_size=8).map(Octonion)
quaternions = st.tuples(ints, ints, ints, ints).map(lambda c: Quaternion(*c))


def cyclic_rule_table():
    """Unit products generated from the lines (i, i+1, i+3) mod 7, positively oriented."""
    table = {}
    for i in range(7):
        a, b, c = (i % 7) + 1, ((i + 1) % 7) + 1, ((i + 3) % 7) + 1
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            table[x, y] = (1, z)
            table[y, x] = (-1, z)
    for k in range(1, 8):
        table[k, k] = (-1, 0)
    return table


class TestTable:
    def test_stored_table_matches_cyclic_rule(self):
        rule = cyclic_rule_table()
        assert len(rule) == 49
        for i, j in itertools.product(range(1, 8), repeat=2):
            entry = OCTONION_TABLE[i - 1][j - 1]
            assert (entry.sign, entry.index) == rule[i, j], (i, j)

    @pytest.mark.parametrize(
        "i,j,expected",
        [
            (1, 2, UnitProduct(1, 4)),
            (2, 1, UnitProduct(-1, 4)),
            (1, 3, UnitProduct(1, 7)),
            (7, 4, UnitProduct(1, 5)),
            (3, 7, UnitProduct(1, 1)),
            (6, 5, UnitProduct(-1, 1)),
        ],
    )
    def test_table_entries(self, i, j, expected):
        assert oct_table()[i - 1][j - 1] == expected

    def test_diagonal_is_minus_one(self):
        for k in range(1, 8):
            assert oct_table()[k - 1][k - 1] == UnitProduct(-1, 0)
            assert e(k) * e(k) == Octonion.real(-1)

    def test_mul_agrees_with_table_everywhere(self):
        for i, j in itertools.product(range(1, 8), repeat=2):
            entry = OCTONION_TABLE[i - 1][j - 1]
            assert e(i) * e(j) == e(entry.index, entry.sign)

    def test_unit_examples(self):
        assert e(1) * e(2) == e(4)
        assert e(2) * e(1) == -e(4)
        assert e(3) * e(3) == Octonion.real(-1)

    def test_anticommuting_units(self):
        for i, j in itertools.combinations(range(1, 8), 2):
            assert e(i) * e(j) == -(e(j) * e(i))

    def test_sign_balance(self):
        assert verify_sign_balance()
        assert sign_counts(5) == (3, 3)

    def test_sign_balance_detects_flip(self):
        rows = [list(r) for r in OCTONION_TABLE]
        rows[0][1] = UnitProduct(-1, 4)
        assert not verify_sign_balance(rows)

    def test_index_rules(self):
        assert verify_index_rules()
        # e1 e2 = e4 shifted: e2 e3 = e5; doubled: e2 e4 = e8 -> e1
        assert e(2) * e(3) == e(5)
        assert e(2) * e(4) == e(1)

    def test_index_rules_detect_corruption(self):
        rows = [list(r) for r in OCTONION_TABLE]
        rows[0][1], rows[1][0] = UnitProduct(-1, 4), UnitProduct(1, 4)
        assert not verify_index_rules(rows)

    def test_custom_table_drives_mul(self):
        rows = [list(r) for r in OCTONION_TABLE]
        rows[0][1] = UnitProduct(-1, 4)
        assert oct_mul(e(1), e(2), rows) == -e(4)


class TestFano:
    def test_contains_line_124(self):
        f = fano_from_table()
        assert frozenset({"e1", "e2", "e4"}) in f.lines

    def test_parameters(self):
        d = design_params(fano_from_table())
        assert (d.v, d.b, d.r, d.k, d.lam) == (7, 7, 3, 3, 1)
        assert d.is_2_design and d.is_projective_plane

    def test_pairs_on_exactly_one_line(self):
        f = fano_from_table()
        pc = f.pair_counts()
        assert all(pc[frozenset(p)] == 1 for p in itertools.combinations(f.points, 2))

    def test_self_dual(self):
        f = fano_from_table()
        assert is_projective_plane(f)
        assert are_isomorphic(f, dual(f))

    def test_triad_orientation_matches_products(self):
        for tr in fano_triads():
            assert e(tr.i) * e(tr.j) == e(tr.k)
            assert e(tr.j) * e(tr.k) == e(tr.i)

    def test_signed_triad_validation(self):
        with pytest.raises(ValueError):
            SignedTriad(1, 1, 2, 1)
        with pytest.raises(ValueError):
            SignedTriad(1, 2, 4, 0)


class TestOctonionArithmetic:
    def test_associator_witness(self):
        assert (e(1) * e(2)) * e(3) == -e(6)
        assert e(1) * (e(2) * e(3)) == e(6)
        assert associator(e(1), e(2), e(3)) == e(6, -2)

    def test_norm_composition_example(self):
        x, y = e(1) + e(2), e(3) - e(5)
        assert (x * y).norm2() == 4 == x.norm2() * y.norm2()
        assert norm_composition_check(x, y)
        assert norm_composition_check(Octonion(), y)

    def test_seeded_random_alternativity_and_composition(self):
        rng = random.Random(7)
        for _ in range(10_000):
            x = Octonion([rng.randint(-9, 9) for _ in range(8)])
            y = Octonion([rng.randint(-9, 9) for _ in range(8)])
            assert associator(x, x, y).is_zero()
            assert associator(y, x, x).is_zero()
            assert norm_composition_check(x, y)

    @settings(max_examples=200)
    @given(octonions, octonions)
    def test_alternative(self, x, y):
        assert associator(x, x, y).is_zero()
        assert associator(y, x, x).is_zero()

    @settings(max_examples=200)
    @given(octonions, octonions)
    def test_composition(self, x, y):
        assert norm_composition_check(x, y)

    @given(octonions, octonions)
    def test_unit_associates(self, y, z):
        assert associator(Octonion.real(1), y, z).is_zero()

    @given(octonions)
    def test_conjugation(self, x):
        assert x.conj().conj() == x
        assert x * x.conj() == Octonion.real(x.norm2())
        assert x.norm2() >= 0
        assert (x.norm2() == 0) == x.is_zero()

    def test_rational_coefficients(self):
        from fractions import Fraction

        x = Octonion([Fraction(1, 2)] + [0] * 7) + e(3)
        assert (x * x.conj()) == Octonion.real(Fraction(5, 4))

    def test_rejects_float(self):
        with pytest.raises(TypeError):
            Octonion([0.5] + [0] * 7)


class TestQuaternion:
    def test_products(self):
        assert QI * QJ == QK
        assert QJ * QI == -QK
        assert QJ * QK == QI and QK * QI == QJ
        assert QI * QI == QJ * QJ == QK * QK == Quaternion(-1)

    @given(quaternions)
    def test_identity(self, q):
        assert Quaternion(1) * q == q == q * Quaternion(1)

    @given(quaternions)
    def test_conj_norm(self, q):
        assert q * q.conj() == Quaternion(q.norm2())

    def test_pauli_images(self):
        mi = GaussianRational(0, -1)
        assert quat_to_pauli(QI) == ComplexMatrix(((0, mi), (mi, 0)))
        assert quat_to_pauli(Quaternion(1)) == ComplexMatrix.identity(2)

    def test_homomorphism_on_basis(self):
        basis = (Quaternion(1), QI, QJ, QK)
        for a, b in itertools.product(basis, repeat=2):
            assert quat_to_pauli(quat_mul(a, b)) == quat_to_pauli(a) @ quat_to_pauli(b)

    def test_homomorphism_random(self):
        rng = random.Random(11)
        for _ in range(1000):
            a = Quaternion(*(rng.randint(-20, 20) for _ in range(4)))
            b = Quaternion(*(rng.randint(-20, 20) for _ in range(4)))
            assert quat_to_pauli(a * b) == quat_to_pauli(a) @ quat_to_pauli(b)

    def test_injective_on_basis(self):
        images = {quat_to_pauli(q) for q in (Quaternion(1), QI, QJ, QK)}
        assert len(images) == 4
