import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lmg.errors import DimensionError, NotConjugatorError, NotFullRankError, SingularMatrixError
from lmg.exactla import RatMatrix
from lmg.lattice import (
    Lattice,
    Relation,
    apply_matrix,
    index_in_standard,
    intersect,
    is_sublattice,
    lattice_canonical,
    lattice_compare,
    lattice_member,
    lattice_sum,
    union_condition,
    union_member,
)

import oracles

Z2 = Lattice.standard(2)


def lat(*rows):
    return lattice_canonical(rows, len(rows[0]))


def full_rank_int_rows(n, bound=4):
    return st.lists(
        st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=n, max_size=n + 1
    ).filter(lambda rows: RatMatrix(rows[:n]).det() != 0)


class TestCanonical:
    def test_standard(self):
        assert lat((1, 0), (0, 1)) == Z2
        assert Z2.is_standard()

    def test_redundant_generator(self):
        assert lat((2, 0), (0, 2), (2, 2)) == lattice_canonical([(2, 0), (0, 2)], 2)
        assert lat((2, 0), (0, 2), (2, 2)).H == ((2, 0), (0, 2))

    def test_denominator(self):
        L = lattice_canonical([(Fraction(1, 2), 0), (0, 1)], 2)
        assert L.den == 2 and L.H == ((1, 0), (0, 2))
        assert repr(L) == "Lattice<(1/2, 0), (0, 1)>"

    def test_rank_deficient(self):
        with pytest.raises(NotFullRankError, match="not full rank"):
            lat((1, 2), (2, 4))

    def test_dimension(self):
        with pytest.raises(DimensionError):
            lattice_canonical([(1, 2, 3)], 2)

    @settings(max_examples=100)
    @given(full_rank_int_rows(2), st.permutations(range(2)), st.integers(-3, 3))
    def test_invariant_under_recombination(self, rows, perm, k):
        base = lattice_canonical(rows, 2)
        shuffled = [rows[i] for i in perm] + rows[2:]
        shuffled[0] = [a + k * b for a, b in zip(shuffled[0], shuffled[1])]
        assert lattice_canonical(shuffled, 2) == base


class TestMembership:
    def test_examples(self):
        assert lattice_member(Z2, (1, 1))
        assert not lattice_member(lat((2, 0), (0, 2)), (1, 0))
        assert lattice_member(lat((1, 1), (0, 2)), (1, -1))
        assert not lattice_member(Z2, (Fraction(1, 2), 0))

    def test_dimension(self):
        with pytest.raises(DimensionError):
            lattice_member(Z2, (1, 2, 3))

    @settings(max_examples=80)
    @given(full_rank_int_rows(2), st.lists(st.integers(-6, 6), min_size=2, max_size=2))
    def test_against_linear_solve(self, rows, v):
        L = lattice_canonical(rows, 2)
        assert lattice_member(L, v) == oracles.in_row_lattice([list(r) for r in L.basis], v)

    def test_residue_and_transversal(self):
        L = lat((1, 1), (0, 2))
        assert L.transversal() == [(0, 0), (0, 1)]
        r, w = L.residue((3, 4))
        assert lattice_member(L, w) and r in L.transversal()


class TestCompare:
    def test_examples(self):
        assert lattice_compare(lat((2, 0), (0, 2)), Z2) == (Relation.SUB, 4)
        assert lattice_compare(Z2, Z2) == (Relation.EQUAL, 1)
        assert lattice_compare(lat((1, 1), (0, 2)), lat((2, 0), (0, 2))) == (Relation.SUP, 2)
        assert lattice_compare(lat((2, 0), (0, 1)), lat((1, 0), (0, 2))).relation is Relation.INCOMPARABLE

    @settings(max_examples=60)
    @given(full_rank_int_rows(2, 3), full_rank_int_rows(2, 3))
    def test_consistency(self, r1, r2):
        a, b = lattice_canonical(r1, 2), lattice_canonical(r2, 2)
        c = lattice_compare(a, b)
        if c.relation is Relation.SUB:
            assert all(lattice_member(b, v) for v in a.basis)
            assert c.index == a.covolume / b.covolume

    def test_index_by_box(self):
        for rows in ([[2, 0], [1, 3]], [[3, 1], [0, 2]], [[1, 1], [0, 2]]):
            L = lattice_canonical(rows, 2)
            assert index_in_standard(L) == oracles.lattice_index_by_box(rows, 2, 6)


class TestApply:
    def test_examples(self):
        assert apply_matrix(RatMatrix([["3/2"]]), lat((2,))) == lat((3,))
        L = lat((1, 1), (0, 2))
        assert apply_matrix(RatMatrix.identity(2), L) == L
        AL = apply_matrix(RatMatrix([[0, 1], [8, 0]]), Z2)
        # columns A e_1 = (0, 8), A e_2 = (1, 0)
        assert AL == lat((0, 8), (1, 0)) and index_in_standard(AL) == 8
        assert AL != lat((0, 1), (8, 0))

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            apply_matrix(RatMatrix([[1, 1], [1, 1]]), Z2)

    @settings(max_examples=60)
    @given(full_rank_int_rows(2, 3), full_rank_int_rows(2, 3))
    def test_inverse_roundtrip(self, rows, arows):
        A = RatMatrix(arows[:2])
        L = lattice_canonical(rows, 2)
        assert apply_matrix(A, apply_matrix(A.inverse(), L)) == L


class TestIntersect:
    def test_examples(self):
        assert intersect(lat((2, 0), (0, 2)), lat((3, 0), (0, 3))) == lat((6, 0), (0, 6))
        assert intersect(Z2, Z2) == Z2
        assert intersect(lat((1, 1), (0, 2)), lat((2, 0), (0, 2))) == lat((2, 0), (0, 2))

    @settings(max_examples=40)
    @given(full_rank_int_rows(2, 3), full_rank_int_rows(2, 3))
    def test_against_enumeration(self, r1, r2):
        a, b = lattice_canonical(r1, 2), lattice_canonical(r2, 2)
        c = intersect(a, b)
        assert is_sublattice(c, a) and is_sublattice(c, b)
        # the common multiple N = idx(a) idx(b) puts N Z^2 inside both
        N = index_in_standard(a) * index_in_standard(b)
        assume(N <= 40)
        common = [
            p for p in itertools.product(range(N), repeat=2) if lattice_member(a, p) and lattice_member(b, p)
        ]
        assert N * N // len(common) == index_in_standard(c)
        assert all(lattice_member(c, p) for p in common)

    def test_sum(self):
        assert lattice_sum(lat((2, 0), (0, 2)), lat((3, 0), (0, 3))) == Z2
        with pytest.raises(DimensionError):
            intersect(Z2, Lattice.standard(3))


class TestUnion:
    def test_examples(self):
        assert union_member(RatMatrix([[2]]), (Fraction(1, 2),))
        assert not union_member(RatMatrix([[2]]), (Fraction(1, 3),))
        assert union_member(RatMatrix([[0, 1], [8, 0]]), (Fraction(1, 2), Fraction(1, 2)))

    @settings(max_examples=100)
    @given(
        st.sampled_from([[[2]], [[3]], [[6]], [[-2]]]) | st.sampled_from([[[0, 1], [8, 0]], [[2, 1], [0, 3]], [[1, 1], [1, -1]], [[4, 0], [0, 1]]]),
        st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=12), min_size=2, max_size=2),
    )
    def test_against_power_search(self, rows, v):
        A = RatMatrix(rows)
        v = v[: A.nrows]
        # d <= 12 and n <= 2, so 145 powers cover the whole state space
        assert union_member(A, v) == oracles.union_member_by_powers(rows, v, limit=145)

    def test_condition_examples(self):
        A, Ab = RatMatrix([[0, 1], [8, 0]]), RatMatrix([[0, 2], [4, 0]])
        assert union_condition(A, Ab, RatMatrix.diag(2, 1))
        assert union_condition(A, A, RatMatrix.identity(2))
        assert not union_condition(RatMatrix([[2]]), RatMatrix([[2]]), RatMatrix([[3]]))

    def test_condition_requires_conjugator(self):
        with pytest.raises(NotConjugatorError, match="not a conjugator"):
            union_condition(RatMatrix([[2]]), RatMatrix([[3]]), RatMatrix([[1]]))

    @pytest.mark.parametrize(
        "A, Ab, B",
        [
            ([[0, 1], [8, 0]], [[0, 2], [4, 0]], [[2, 0], [0, 1]]),
            ([[2]], [[2]], [[3]]),
            ([[2]], [[2]], [["1/2"]]),
            ([[6]], [[6]], [["2/3"]]),
        ],
    )
    def test_condition_symmetry(self, A, Ab, B):
        A, Ab, B = RatMatrix(A), RatMatrix(Ab), RatMatrix(B)
        assert union_condition(A, Ab, B) == union_condition(Ab, A, B.inverse())
