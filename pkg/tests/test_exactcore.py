from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetmetric.errors import FieldError
from jetmetric.exactcore import (
    ExactMatrix,
    ExtensionField,
    FieldDesc,
    PrimeField,
    canonical_minpoly,
    field_from_desc,
    rank_gf2,
    rationals,
)


def test_rationals_basic_ops():
    F = rationals()
    a, b = Fraction(3, 4), Fraction(-2, 5)
    assert F.add(a, b) == Fraction(7, 20)
    assert F.mul(a, b) == Fraction(-3, 10)
    assert F.div(a, b) == Fraction(-15, 8)
    assert F.sum([a, b, F.one()]) == Fraction(27, 20)
    assert F.to_str(Fraction(-1, 3)) == "-1/3"


def test_prime_field_arithmetic_mod_7():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F.neg(2) == 5
    assert sorted(F.elements()) == list(range(7))


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(FieldError):
        PrimeField(6)


def test_extension_field_f4():
    # F_4 = F_2[a]/(a^2 + a + 1); the generator satisfies a^2 = a + 1.
    F = ExtensionField(2, 2)
    a = F.generator()
    assert F.mul(a, a) == F.add(a, F.one())
    assert len(list(F.elements())) == 4
    assert F.order == 4


def test_extension_field_every_nonzero_element_invertible():
    F = ExtensionField(3, 2)
    for e in F.elements():
        if F.is_zero(e):
            continue
        assert F.mul(e, F.inv(e)) == F.one()


def test_canonical_minpoly_is_deterministic_and_irreducible():
    assert canonical_minpoly(2, 2) == canonical_minpoly(2, 2)
    # degree-m monic with no roots in the prime field for m = 2, 3
    for p, m in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        mp = canonical_minpoly(p, m)
        assert len(mp) == m + 1 and mp[-1] == 1
        for r in range(p):
            val = sum(c * pow(r, i, p) for i, c in enumerate(mp)) % p
            assert val != 0


def test_field_from_desc_roundtrip():
    F = field_from_desc(FieldDesc("prime-field", p=5))
    assert isinstance(F, PrimeField) and F.p == 5
    assert field_from_desc(FieldDesc("rationals")) == rationals()
    assert FieldDesc("extension-field", p=2, m=4).label() == "F_2^4"


def test_rref_known_matrix_over_q():
    F = rationals()
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(4), Fraction(6)],
            [Fraction(0), Fraction(1), Fraction(1)]]
    M = ExactMatrix(F, rows, 3)
    res = M.rref()
    assert res.rank == 2
    assert res.pivots == [0, 1]


def test_kernel_basis_members_are_killed_by_the_matrix():
    F = PrimeField(3)
    rows = [[1, 2, 0, 1], [0, 1, 1, 1]]
    M = ExactMatrix(F, rows, 4)
    ker = M.kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert all(F.is_zero(c) for c in M.mul_vec(v))


def test_rank_gf2_bitmask():
    # rows as integers: {0b011, 0b110, 0b101} has rank 2 over F_2
    assert rank_gf2([0b011, 0b110, 0b101]) == 2
    assert rank_gf2([]) == 0
    assert rank_gf2([0]) == 0


@st.composite
def _q_matrix(draw):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(1, 5))
    ent = st.fractions(min_value=-4, max_value=4, max_denominator=3)
    rows = [[draw(ent) for _ in range(n)] for _ in range(m)]
    return rows, n


@given(_q_matrix())
@settings(max_examples=60, deadline=None)
def test_rank_plus_nullity_over_q(mat):
    rows, n = mat
    M = ExactMatrix(rationals(), rows, n)
    assert M.rank() + len(M.kernel_basis()) == n


@given(_q_matrix())
@settings(max_examples=40, deadline=None)
def test_kernel_vectors_lie_in_kernel_over_q(mat):
    rows, n = mat
    F = rationals()
    M = ExactMatrix(F, rows, n)
    for v in M.kernel_basis():
        assert all(F.is_zero(c) for c in M.mul_vec(v))


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
@settings(max_examples=50, deadline=None)
def test_gf2_rank_matches_generic_path(a, b, c):
    ints = [a, b, c]
    F = PrimeField(2)
    rows = [[(r >> j) & 1 for j in range(8)] for r in ints]
    assert rank_gf2(ints) == ExactMatrix(F, rows, 8).rank()
