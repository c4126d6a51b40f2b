"""
Unit tests for split shapes and the word calculus.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from msa.exceptions import QuiverError
from msa.shapes import (
    DISCONNECTED,
    LINE_QUIVER,
    NON_HEREDITARY,
    TRIVALENT,
    audit_word_equations,
    decompose_word,
    predicted_lengths,
    split_shape,
    word_equation_solutions,
)
from msa.words import BinaryWord


def _word(text):
    return BinaryWord.from_string(text)


class TestSplitShape:
    """Test the classification of split representatives."""

    def test_middle_of_equioriented_run(self):
        """Test a position flanked by equal letters is non-hereditary."""
        assert split_shape(_word("+++"), -1).kind == NON_HEREDITARY

    def test_trivalent_right(self):
        """Test '+++' at -2 is trivalent R rooted at the source -1."""
        shape = split_shape(_word("+++"), -2)
        assert shape.kind == TRIVALENT
        assert shape.variant == "R"
        assert shape.root == -1
        assert shape.root_role == "source"
        assert shape.trivalent_vertex == 1
        assert (shape.left_length, shape.right_length) == (2, 2)
        assert (shape.predicted_left, shape.predicted_right) == (2, -2)
        assert shape.diverges

    def test_trivalent_left(self):
        """Test '+++' at 1 is trivalent L rooted at the sink 1, with no closed form."""
        shape = split_shape(_word("+++"), 1)
        assert shape.variant == "L"
        assert shape.root == 1
        assert shape.root_role == "sink"
        assert (shape.left_length, shape.right_length) == (2, 2)
        assert shape.predicted_left is None
        assert shape.to_dict()["diverges"] is False

    def test_line_quiver(self):
        """Test '++-' at -1 gives a line."""
        assert split_shape(_word("++-"), -1).kind == LINE_QUIVER

    def test_disconnected(self):
        """Test '+-+' at -2 disconnects the Ext quiver."""
        shape = split_shape(_word("+-+"), -2)
        assert shape.kind == DISCONNECTED
        assert shape.to_dict() == {"kind": DISCONNECTED}

    def test_not_a_position(self):
        """Test the last vertex has no edge to split."""
        with pytest.raises(QuiverError):
            split_shape(_word("+++"), 2)


class TestPredictedLengths:
    """Test the closed-form lengths."""

    def test_only_left_half(self):
        """Test positions right of -1 have no prediction."""
        assert predicted_lengths(_word("+++"), 1, "L") == (None, None)

    def test_odd_length(self):
        """Test the odd-n formulas at i = -1 on five vertices."""
        word = _word("++++")
        assert predicted_lengths(word, -1, "L") == (1, 4)
        assert predicted_lengths(word, -1, "R") == (3, 2)


class TestDecomposeWord:
    """Test cutting a word at -j, i, -i, j."""

    def test_five_vertices(self):
        """Test (i, j) = (-1, 2) on five vertices."""
        decomposition = decompose_word(_word("+-+-"), -1, 2)
        assert decomposition.as_strings() == ["", "+", "-+", "-", ""]

    def test_six_vertices(self):
        """Test (i, j) = (-1, 2) on six vertices, where w1 and w5 are non-empty."""
        decomposition = decompose_word(_word("+-+-+"), -1, 2)
        assert decomposition.as_strings() == ["+", "-", "+", "-", "+"]

    @pytest.mark.parametrize("i, j", [(1, 2), (-2, 2), (-3, 2), (-1, -2)])
    def test_invalid_indices(self, i, j):
        """Test the index conditions are enforced."""
        with pytest.raises(QuiverError):
            decompose_word(_word("+-+-"), i, j)

    def test_labels_out_of_range(self):
        """Test cut points must be vertices."""
        with pytest.raises(QuiverError, match="not vertex labels"):
            decompose_word(_word("+-+-"), -1, 3)

    @given(st.data())
    def test_factors_concatenate_to_word(self, data):
        """Test w1 w2 w3 w4 w5 is the word for every valid (i, j)."""
        text = data.draw(st.text(alphabet="+-", min_size=3, max_size=12))
        word = _word(text)
        j = data.draw(st.integers(min_value=2, max_value=word.m))
        i = data.draw(st.integers(min_value=-(j - 1), max_value=-1))
        decomposition = decompose_word(word, i, j)
        assert decomposition.concatenate() == word
        w2, w4 = decomposition.factors[1], decomposition.factors[3]
        assert len(w2) == len(w4)


class TestWordEquation:
    """Test w3 · w2* = w2 · w3."""

    def test_known_solution(self):
        """Test ('+-', '+-') solves the equation."""
        solutions = word_equation_solutions(4)
        assert ("+-", "+-") in solutions
        assert ("+", "") not in solutions

    def test_empty_w3(self):
        """Test w3 empty solves it exactly when w2 is symmetric."""
        solutions = word_equation_solutions(2)
        assert [s for s in solutions if s[1] == ""] == [("+-", ""), ("-+", "")]

    def test_audit(self):
        """Test every solution up to total length 6 has w3 even and symmetric."""
        audit = audit_word_equations(6)
        assert audit.passed
        assert audit.known_found
        assert all(len(w3) % 2 == 0 for _, w3 in audit.solutions)

    def test_vacuous_audit(self):
        """Test total length 0 has nothing to check."""
        audit = audit_word_equations(0)
        assert audit.solutions == []
        assert audit.passed
        assert audit.to_dict()["known_solution_found"] is False
