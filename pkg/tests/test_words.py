"""
Unit tests for orientation words.

Tests vertex labelling, neighbours, the star involution and word enumeration.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from msa.exceptions import QuiverError
from msa.words import BinaryWord, all_words, pred, star_string, succ, vertex_labels

words_text = st.text(alphabet="+-", max_size=16)


class TestVertexLabels:
    """Test signed vertex labels."""

    def test_even_labels_skip_zero(self):
        """Test n = 4 gives -2, -1, 1, 2."""
        assert vertex_labels(4) == [-2, -1, 1, 2]

    def test_odd_labels_include_zero(self):
        """Test n = 5 gives -2..2."""
        assert vertex_labels(5) == [-2, -1, 0, 1, 2]

    def test_single_vertex(self):
        """Test n = 1 is the lone vertex 0."""
        assert vertex_labels(1) == [0]

    def test_negative_count_rejected(self):
        """Test a negative vertex count raises."""
        with pytest.raises(QuiverError):
            vertex_labels(-1)


class TestNeighbours:
    """Test pred/succ and their iterates."""

    def test_succ_jumps_over_zero(self):
        """Test succ(-1) = 1 when n is even."""
        assert succ(-1, 4) == 1

    def test_succ_through_zero(self):
        """Test succ(-1) = 0 when n is odd."""
        assert succ(-1, 5) == 0

    def test_iterated_succ(self):
        """Test succ^2(-2) = 1 for n = 4."""
        assert succ(-2, 4, k=2) == 1

    def test_iterated_pred(self):
        """Test pred^3(2) = -2 for n = 4."""
        assert pred(2, 4, k=3) == -2

    def test_no_successor(self):
        """Test the last label has no successor."""
        with pytest.raises(QuiverError, match="no successor"):
            succ(2, 4)

    def test_no_predecessor(self):
        """Test the first label has no predecessor."""
        with pytest.raises(QuiverError, match="no predecessor"):
            pred(-2, 4)

    def test_invalid_label(self):
        """Test 0 is not a label when n is even."""
        with pytest.raises(QuiverError):
            succ(0, 4)


class TestBinaryWord:
    """Test word parsing and derived data."""

    def test_from_string(self):
        """Test '+-' parses to letters (1, -1)."""
        word = BinaryWord.from_string("+-")
        assert word.letters == (1, -1)
        assert str(word) == "+-"

    def test_invalid_character(self):
        """Test characters other than + and - are rejected."""
        with pytest.raises(QuiverError):
            BinaryWord.from_string("+x")

    def test_invalid_letter(self):
        """Test letters must be +1 or -1."""
        with pytest.raises(QuiverError):
            BinaryWord((1, 0))

    def test_vertex_count(self):
        """Test a word of length 3 encodes four vertices, m = 2."""
        word = BinaryWord.from_string("+++")
        assert word.n == 4
        assert word.m == 2
        assert word.positions() == [-2, -1, 1]

    def test_letter_at_position(self):
        """Test letters are read by position label."""
        word = BinaryWord.from_string("+-+")
        assert word.letter(-1) == -1
        assert word.letter(1) == 1

    def test_letter_outside_positions(self):
        """Test the last label is not a letter position."""
        with pytest.raises(QuiverError):
            BinaryWord.from_string("+++").letter(2)

    def test_empty_word(self):
        """Test the empty word is the one-vertex quiver."""
        word = BinaryWord.from_string("")
        assert word.n == 1
        assert word.positions() == []


class TestStar:
    """Test the star involution."""

    def test_equioriented(self):
        """Test star('+++') = '---'."""
        assert str(BinaryWord.from_string("+++").star()) == "---"

    def test_symmetric_word(self):
        """Test '+-' is fixed by star."""
        assert BinaryWord.from_string("+-").is_symmetric()

    def test_non_symmetric_word(self):
        """Test '+-+' is not fixed by star."""
        assert not BinaryWord.from_string("+-+").is_symmetric()

    def test_star_string_matches_word_star(self):
        """Test the string shortcut agrees with the word method."""
        assert star_string("++-+") == str(BinaryWord.from_string("++-+").star())

    @given(words_text)
    def test_star_is_involution(self, text):
        """Test star(star(w)) = w for every word."""
        word = BinaryWord.from_string(text)
        assert word.star().star() == word

    @given(words_text)
    def test_star_matches_defining_formula(self, text):
        """Test w*(i) = -w(pred(-i)) at every position."""
        word = BinaryWord.from_string(text)
        reflected = word.star()
        for position in word.positions():
            assert reflected.letter(position) == -word.letter(word.pred(-position))


class TestAllWords:
    """Test word enumeration."""

    def test_counts(self):
        """Test there are 2^L words of length L."""
        assert [len(list(all_words(length))) for length in range(5)] == [1, 2, 4, 8, 16]

    def test_order(self):
        """Test '+' comes before '-' in each position."""
        assert [str(w) for w in all_words(2)] == ["++", "+-", "-+", "--"]
