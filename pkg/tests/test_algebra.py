"""
Unit tests for path algebras, truncations and subalgebras.
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

from msa.algebra import (
    PathAlgebra,
    Subalgebra,
    build_path_algebra,
    graded_hom_dim,
    radical_by_trace_form,
    subalgebra_from_spanning_set,
    truncate,
)
from msa.exceptions import AlgebraError
from msa.linalg import Subspace, linear_relations, rank
from msa.maxsub import SeparableSpec, SplitSpec, build_separable, build_split, enumerate_representatives
from msa.quiver import Arrow, Quiver, word_to_quiver
from msa.words import BinaryWord, all_words

SMALL_MATRICES = st.lists(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=4, max_size=4), min_size=1, max_size=5
)


def _sparse(rows):
    return [{k: v for k, v in enumerate(row) if v} for row in rows]


def _fraction(value):
    return Fraction(int(value.p), int(value.q))


class TestLinearAlgebra:
    """Test exact rational subspaces."""

    def test_rank_and_containment(self):
        """Test a dependent vector does not grow the span."""
        space = Subspace(3, [{0: 1, 1: 1}, {1: 1, 2: 1}])
        assert space.dim == 2
        assert space.contains({0: 1, 2: -1})
        assert not space.add({0: 2, 1: 1, 2: -1})

    def test_equality_is_basis_independent(self):
        """Test two spanning sets of the same plane give equal subspaces."""
        first = Subspace(3, [{0: 1}, {1: 1}])
        second = Subspace(3, [{0: 1, 1: 1}, {0: 1, 1: -1}])
        assert first == second

    def test_coordinates(self):
        """Test tracked coordinates reproduce the vector."""
        space = Subspace(2, [{0: 1, 1: 1}, {1: 2}], track=True)
        combo = space.coordinates({0: 1, 1: 3})
        assert combo == {0: 1, 1: 1}

    def test_coordinates_outside_span(self):
        """Test coordinates of a vector outside the span raise."""
        space = Subspace(2, [{0: 1}], track=True)
        with pytest.raises(ValueError):
            space.coordinates({1: 1})

    def test_linear_relations(self):
        """Test v0 + v1 - v2 = 0 is found."""
        relations = linear_relations([{0: 1}, {1: 1}, {0: 1, 1: 1}], 2)
        assert relations == [{0: -1, 1: -1, 2: 1}]

    def test_rows_match_sympy_rref(self):
        """Test the echelon basis is the reduced row-echelon form sympy computes."""
        rows = [[2, 4, -2, 0], [1, 2, 0, 3], [3, 6, -2, 3]]
        space = Subspace(4, _sparse(rows))
        reduced, pivots = Matrix(rows).rref()
        assert space.pivots == list(pivots)
        assert space.rows() == [
            {k: _fraction(x) for k, x in enumerate(reduced.row(i)) if x} for i in range(len(pivots))
        ]

    @given(SMALL_MATRICES)
    def test_rank_matches_sympy(self, rows):
        """Test rank and kernel dimension agree with sympy on small integer matrices."""
        matrix = Matrix(rows)
        assert rank(_sparse(rows), 4) == matrix.rank()
        assert Subspace(4, _sparse(rows)).dim == matrix.rank()
        relations = linear_relations(_sparse(rows), 4)
        assert len(relations) == len(matrix.T.nullspace())
        for relation in relations:
            assert relation[max(relation)] == 1
            for column in range(4):
                assert sum(c * rows[k][column] for k, c in relation.items()) == 0

    def test_zero_width_relations(self):
        """Test every vector is its own relation in a zero-dimensional space."""
        assert linear_relations([{}, {}], 0) == [{0: 1}, {1: 1}]


class TestPathAlgebra:
    """Test path bases and multiplication."""

    def test_dimension(self, equioriented_a4_algebra):
        """Test dim kQ = 10 for equioriented A4."""
        assert equioriented_a4_algebra.dim == 10

    def test_radical_power_dims(self, equioriented_a4_algebra):
        """Test the radical filtration has dims 10, 6, 3, 1, 0."""
        assert equioriented_a4_algebra.radical_power_dims() == [10, 6, 3, 1, 0]

    def test_composition_left_to_right(self, equioriented_a4_algebra):
        """Test a-2 * a-1 is the path -2 -> 1 and a-1 * a-2 is zero."""
        b = equioriented_a4_algebra
        assert b.arrow("a-2") * b.arrow("a-1") == b.path(["a-2", "a-1"])
        assert not b.arrow("a-1") * b.arrow("a-2")

    def test_idempotents_act_on_paths(self, equioriented_a4_algebra):
        """Test e_x p e_y = p for p from x to y."""
        b = equioriented_a4_algebra
        path = b.path(["a-1", "a1"])
        assert b.vertex(-1) * path * b.vertex(2) == path
        assert not b.vertex(1) * path

    def test_unit(self, equioriented_a4_algebra):
        """Test the unit fixes an arrow."""
        b = equioriented_a4_algebra
        assert b.unit() * b.arrow("a1") == b.arrow("a1")

    def test_not_composable(self, equioriented_a4_algebra):
        """Test path() rejects non-composable arrow sequences."""
        with pytest.raises(AlgebraError):
            equioriented_a4_algebra.path(["a1", "a-2"])

    def test_unknown_vertex(self, equioriented_a4_algebra):
        """Test vertex() rejects unknown labels."""
        with pytest.raises(AlgebraError):
            equioriented_a4_algebra.vertex(7)

    def test_cyclic_quiver_rejected(self):
        """Test a quiver with a cycle has no finite path algebra."""
        quiver = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 2, 1)))
        with pytest.raises(AlgebraError, match="not acyclic"):
            PathAlgebra(quiver)

    def test_hereditary(self, equioriented_a4_algebra):
        """Test kQ is hereditary and has no ideal generators."""
        assert equioriented_a4_algebra.is_hereditary
        assert equioriented_a4_algebra.ideal_generators() == []


class TestTruncation:
    """Test truncated path algebras."""

    def test_truncation_two(self, equioriented_a4):
        """Test T2 keeps vertices and arrows only."""
        t2 = truncate(equioriented_a4, 2)
        assert t2.dim == 7
        assert not t2.is_hereditary
        assert len(t2.ideal_generators()) == 2

    def test_truncation_three(self, equioriented_a4):
        """Test T3 drops only the path of length 3."""
        assert truncate(equioriented_a4, 3).dim == 9

    def test_truncation_beyond_longest_path(self, equioriented_a4):
        """Test truncating above the longest path changes nothing."""
        t5 = truncate(equioriented_a4, 5)
        assert t5.dim == 10
        assert t5.is_hereditary

    def test_truncated_product_vanishes(self, equioriented_a4):
        """Test a-2 * a-1 = 0 in T2."""
        t2 = truncate(equioriented_a4, 2)
        assert not t2.arrow("a-2") * t2.arrow("a-1")

    def test_truncation_below_two(self, equioriented_a4):
        """Test truncation degree 1 is not admissible."""
        with pytest.raises(AlgebraError):
            truncate(equioriented_a4, 1)


class TestSubalgebra:
    """Test subalgebras given by spanning sets."""

    def test_missing_unit(self, equioriented_a4_algebra):
        """Test a span without the unit is rejected."""
        b = equioriented_a4_algebra
        with pytest.raises(AlgebraError, match="unit"):
            Subalgebra(b, [b.vertex(-2), b.arrow("a-2")])

    def test_not_closed(self, equioriented_a4_algebra):
        """Test a span missing a product is rejected."""
        b = equioriented_a4_algebra
        basis = [b.vertex(v) for v in (-2, -1, 1, 2)] + [b.arrow("a-2"), b.arrow("a-1")]
        with pytest.raises(AlgebraError, match="closed"):
            Subalgebra(b, basis)

    def test_closure_from_generators(self, equioriented_a4_algebra):
        """Test the closure of a-2 and a-1 adds a-2*a-1."""
        b = equioriented_a4_algebra
        algebra = subalgebra_from_spanning_set(b, [b.vertex(-2), b.vertex(-1), b.vertex(1), b.arrow("a-2"), b.arrow("a-1")])
        assert algebra.dim == 7
        assert algebra.contains(b.path(["a-2", "a-1"]))

    def test_separable_radical_layers(self, equioriented_a4_algebra):
        """Test A(v1+v2) has radical dims 9, 6, 3, 1, 0."""
        algebra = build_separable(equioriented_a4_algebra, SeparableSpec(-2, -1))
        assert algebra.radical_power_dims() == [9, 6, 3, 1, 0]
        assert list(algebra.idempotents) == ["-2+-1", 1, 2]

    def test_split_radical_layers(self, equioriented_a4_algebra):
        """Test the middle split has radical dims 9, 5, 1, 0."""
        algebra = build_split(equioriented_a4_algebra, SplitSpec(-1, 1))
        assert algebra.radical_power_dims() == [9, 5, 1, 0]
        assert algebra.nilpotency_index == 3

    def test_outer_split_radical_layers(self, equioriented_a4_algebra):
        """Test the outer splits have radical dims 9, 5, 2, 0."""
        b = equioriented_a4_algebra
        assert build_split(b, SplitSpec(-2, -1)).radical_power_dims() == [9, 5, 2, 0]
        assert build_split(b, SplitSpec(1, 2)).radical_power_dims() == [9, 5, 2, 0]

    def test_trace_form_radical(self, equioriented_a4_algebra):
        """Test the trace-form radical agrees with A ∩ J(B)."""
        algebra = build_separable(equioriented_a4_algebra, SeparableSpec(-1, 2))
        assert radical_by_trace_form(algebra) == algebra.radical

    def test_graded_hom_dim(self, equioriented_a4_algebra):
        """Test the middle split has one arrow -2 -> 1 and none -1 -> 1."""
        algebra = build_split(equioriented_a4_algebra, SplitSpec(-1, 1))
        assert graded_hom_dim(algebra, -2, 1, 1) == 1
        assert graded_hom_dim(algebra, -1, 1, 1) == 0

    def test_graded_hom_dim_by_element(self, equioriented_a4_algebra):
        """Test idempotents may be passed as elements."""
        b = equioriented_a4_algebra
        algebra = build_separable(b, SeparableSpec(-2, -1))
        glued = b.vertex(-2) + b.vertex(-1)
        assert graded_hom_dim(algebra, glued, glued, 1) == 1

    def test_non_idempotent_input(self, equioriented_a4_algebra):
        """Test a non-idempotent element is rejected."""
        b = equioriented_a4_algebra
        algebra = build_separable(b, SeparableSpec(-2, -1))
        with pytest.raises(AlgebraError, match="non-idempotent"):
            graded_hom_dim(algebra, b.vertex(1) + b.vertex(1), b.vertex(2), 1)

    def test_truncated_ambient(self, equioriented_a4):
        """Test maximal subalgebras of T2 have codimension one."""
        t2 = truncate(equioriented_a4, 2)
        assert build_separable(t2, SeparableSpec(-2, 2)).dim == 6
        assert build_split(t2, SplitSpec(-1, 1)).dim == 6


def test_build_path_algebra_matches_constructor(equioriented_a4):
    """Test the helper builds the untruncated algebra."""
    assert build_path_algebra(equioriented_a4).dim == PathAlgebra(equioriented_a4).dim


def _words_up_to(length):
    return [str(word) for k in range(1, length + 1) for word in all_words(k)]


class TestAlgebraAxioms:
    """Test multiplication and graded pieces on every small type-A quiver."""

    @pytest.mark.parametrize("text", _words_up_to(5))
    def test_associative_on_basis(self, text):
        """Test (xy)z = x(yz) for every triple of basis paths."""
        algebra = build_path_algebra(word_to_quiver(BinaryWord.from_string(text)))
        assert algebra.dim <= 40
        basis = [algebra.element({i: 1}) for i in range(algebra.dim)]
        for x, y, z in product(basis, repeat=3):
            assert (x * y) * z == x * (y * z)

    def test_associative_with_parallel_arrows(self, doubled_arrow_algebra):
        """Test associativity when two arrows share endpoints."""
        basis = [doubled_arrow_algebra.element({i: 1}) for i in range(doubled_arrow_algebra.dim)]
        for x, y, z in product(basis, repeat=3):
            assert (x * y) * z == x * (y * z)

    @pytest.mark.parametrize("text", _words_up_to(4))
    def test_graded_pieces_fill_layers(self, text):
        """Test the Peirce pieces of J^r/J^(r+1) add up to its dimension."""
        for tag, algebra in enumerate_representatives(word_to_quiver(BinaryWord.from_string(text))):
            dims = algebra.radical_power_dims() + [0]
            labels = list(algebra.idempotents)
            for r in range(1, len(dims) - 1):
                total = sum(graded_hom_dim(algebra, u, v, r) for u in labels for v in labels)
                assert total == dims[r] - dims[r + 1], (text, str(tag), r)
