"""
Unit tests for separable and split maximal subalgebras, enumeration and Ext quivers.
"""

import pytest

from msa.algebra import build_path_algebra
from msa.exceptions import SpecError
from msa.maxsub import (
    SeparableSpec,
    SplitSpec,
    build_separable,
    build_split,
    enumerate_representatives,
    ext_quiver,
    is_connected_ext,
    representative_tags,
)
from msa.quiver import word_to_quiver
from msa.words import BinaryWord


class TestSpecs:
    """Test spec validation."""

    def test_separable_needs_distinct_vertices(self, equioriented_a4):
        """Test u = v is rejected."""
        with pytest.raises(SpecError):
            SeparableSpec(1, 1).validate(equioriented_a4)

    def test_separable_unknown_vertex(self, equioriented_a4):
        """Test vertices must belong to the quiver."""
        with pytest.raises(SpecError):
            SeparableSpec(1, 5).validate(equioriented_a4)

    def test_split_needs_arrow(self, equioriented_a4_algebra):
        """Test (u, v) must carry an arrow u -> v."""
        with pytest.raises(SpecError, match="no arrow"):
            SplitSpec(-1, -2).validate(equioriented_a4_algebra)

    def test_split_codimension(self, doubled_arrow_algebra):
        """Test U = {0} is not codimension one in a two-dimensional arrow space."""
        with pytest.raises(SpecError, match="codimension"):
            SplitSpec(2, 3).validate(doubled_arrow_algebra)

    def test_split_subspace_outside_arrow_span(self, doubled_arrow_algebra):
        """Test U must lie in the arrow span u -> v."""
        b = doubled_arrow_algebra
        with pytest.raises(SpecError):
            SplitSpec(2, 3, (b.arrow("alpha"),)).validate(b)


class TestConstructions:
    """Test build_separable and build_split."""

    def test_codimension_one(self, equioriented_a4_algebra):
        """Test every representative of '+++' has dimension 9."""
        reps = enumerate_representatives(equioriented_a4_algebra.quiver, equioriented_a4_algebra)
        assert [algebra.dim for _, algebra in reps] == [9] * 9

    def test_separable_contains_radical(self, equioriented_a4_algebra):
        """Test A(u+v) keeps all of J(B)."""
        b = equioriented_a4_algebra
        algebra = build_separable(b, SeparableSpec(-2, 2))
        assert algebra.radical.dim == 6
        assert not algebra.contains(b.vertex(-2))
        assert algebra.contains(b.vertex(-2) + b.vertex(2))

    def test_split_drops_arrow(self, equioriented_a4_algebra):
        """Test A(-1, 1, {0}) misses a-1 but keeps its compositions."""
        b = equioriented_a4_algebra
        algebra = build_split(b, SplitSpec(-1, 1))
        assert not algebra.contains(b.arrow("a-1"))
        assert algebra.contains(b.path(["a-2", "a-1"]))

    def test_doubled_arrow_split(self, doubled_arrow_algebra):
        """Test A(2, 3, span{beta1}) keeps beta1 and drops beta2."""
        b = doubled_arrow_algebra
        algebra = build_split(b, SplitSpec(2, 3, (b.arrow("beta1"),)))
        assert algebra.dim == b.dim - 1
        assert algebra.contains(b.arrow("beta1"))
        assert not algebra.contains(b.arrow("beta2"))


class TestEnumeration:
    """Test representative enumeration on type-A quivers."""

    def test_tags_for_equioriented(self, equioriented_a4):
        """Test six separable tags come before three split tags."""
        tags = [str(tag) for tag in representative_tags(equioriented_a4)]
        assert tags == [
            "sep(-2,-1)", "sep(-2,1)", "sep(-2,2)", "sep(-1,1)", "sep(-1,2)", "sep(1,2)",
            "split(-2)", "split(-1)", "split(1)",
        ]

    def test_split_spec_follows_orientation(self):
        """Test split(-1) on '+-+' uses the arrow 1 -> -1."""
        quiver = word_to_quiver(BinaryWord.from_string("+-+"))
        tags = {str(tag): tag for tag in representative_tags(quiver)}
        assert tags["split(-1)"].spec == SplitSpec(1, -1)

    def test_count(self):
        """Test n(n-1)/2 + n-1 representatives for n = 6."""
        quiver = word_to_quiver(BinaryWord.from_string("-+-+-"))
        assert len(representative_tags(quiver)) == 15 + 5

    def test_empty_word(self):
        """Test the one-vertex quiver has no representatives."""
        assert enumerate_representatives(word_to_quiver(BinaryWord.from_string(""))) == []

    def test_non_type_a_rejected(self, doubled_arrow_quiver):
        """Test enumeration refuses quivers that are not type-A paths."""
        with pytest.raises(SpecError):
            representative_tags(doubled_arrow_quiver)


class TestExtQuiver:
    """Test Ext quivers of maximal subalgebras."""

    def test_separable_loop(self, equioriented_a4_algebra):
        """Test A(v1+v2) has a loop at the glued vertex."""
        gamma = ext_quiver(build_separable(equioriented_a4_algebra, SeparableSpec(-2, -1)))
        assert gamma.vertices == ("-2+-1", 1, 2)
        assert len(gamma.arrows_between("-2+-1", "-2+-1")) == 1
        assert len(gamma.arrows) == 3

    def test_middle_split(self, equioriented_a4_algebra):
        """Test the middle split has four arrows forming a square."""
        gamma = ext_quiver(build_split(equioriented_a4_algebra, SplitSpec(-1, 1)))
        pairs = sorted((a.source, a.target) for a in gamma.arrows)
        assert pairs == [(-2, -1), (-2, 1), (-1, 2), (1, 2)]

    def test_doubled_arrow_count(self, doubled_arrow_algebra):
        """Test dim u kQ1 v - 1 arrows remain from 2 to 3."""
        b = doubled_arrow_algebra
        gamma = ext_quiver(build_split(b, SplitSpec(2, 3, (b.arrow("beta1"),))))
        assert len(gamma.arrows_between(2, 3)) == 1
        assert len(gamma.arrows) == 5

    def test_disconnected_splits(self):
        """Test every split of the zigzag '+-+' is disconnected."""
        reps = enumerate_representatives(word_to_quiver(BinaryWord.from_string("+-+")))
        flags = {str(tag): is_connected_ext(algebra) for tag, algebra in reps}
        assert [tag for tag, connected in flags.items() if not connected] == [
            "split(-2)", "split(-1)", "split(1)"
        ]

    def test_path_algebra_ext_quiver(self, equioriented_a4):
        """Test the Ext quiver of kQ inside itself is Q."""
        from msa.algebra import Subalgebra

        b = build_path_algebra(equioriented_a4)
        whole = Subalgebra(b, [b.element({k: 1}) for k in range(b.dim)])
        gamma = ext_quiver(whole)
        assert sorted((a.source, a.target) for a in gamma.arrows) == [(-2, -1), (-1, 1), (1, 2)]
