"""
Orientation Words

A type-A quiver on n vertices is encoded by a word of n-1 letters over {+1, -1}.
Vertices carry signed labels: -m..-1, 1..m for n = 2m (no 0) and -m..m for
n = 2m+1. The letter at position p (a label with a successor) is +1 when the
edge between p and succ(p) points away from p.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Tuple

from msa.exceptions import QuiverError

_SYMBOLS = {"+": 1, "-": -1}
_STAR_TABLE = str.maketrans("+-", "-+")


def vertex_labels(n: int) -> List[int]:
    """Signed vertex labels of an n-vertex type-A quiver, left to right."""
    if n < 0:
        raise QuiverError(f"vertex count must be non-negative, got {n}")
    m = n // 2
    if n % 2 == 0:
        return list(range(-m, 0)) + list(range(1, m + 1))
    return list(range(-m, m + 1))


def succ(label: int, n: int, k: int = 1) -> int:
    """
    k-th successor of a vertex label.

    Raises:
        QuiverError: If the label is invalid or the successor does not exist
    """
    labels = vertex_labels(n)
    index = _index_of(label, labels)
    if index + k >= len(labels) or index + k < 0:
        raise QuiverError(f"no successor: {label} has no {k}-th successor for n={n}")
    return labels[index + k]


def pred(label: int, n: int, k: int = 1) -> int:
    """
    k-th predecessor of a vertex label.

    Raises:
        QuiverError: If the label is invalid or the predecessor does not exist
    """
    labels = vertex_labels(n)
    index = _index_of(label, labels)
    if index - k < 0 or index - k >= len(labels):
        raise QuiverError(f"no predecessor: {label} has no {k}-th predecessor for n={n}")
    return labels[index - k]


def _index_of(label: int, labels: List[int]) -> int:
    try:
        return labels.index(label)
    except ValueError:
        raise QuiverError(f"invalid vertex label {label} for n={len(labels)}") from None


@dataclass(frozen=True)
class BinaryWord:
    """
    Orientation word of a type-A quiver.

    Attributes:
        letters: +1/-1 letters, leftmost letter first
    """

    letters: Tuple[int, ...]

    def __post_init__(self):
        for letter in self.letters:
            if letter not in (1, -1):
                raise QuiverError(f"word letters must be +1 or -1, got {letter!r}")

    @classmethod
    def from_string(cls, text: str) -> "BinaryWord":
        """Parse a '+'/'-' string (leftmost character is the leftmost letter)."""
        try:
            return cls(tuple(_SYMBOLS[ch] for ch in text))
        except KeyError as exc:
            raise QuiverError(f"invalid word {text!r}: only '+' and '-' allowed") from exc

    def __str__(self) -> str:
        return "".join("+" if letter == 1 else "-" for letter in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def n(self) -> int:
        """Number of vertices of the encoded quiver."""
        return len(self.letters) + 1

    @property
    def m(self) -> int:
        return self.n // 2

    def labels(self) -> List[int]:
        return vertex_labels(self.n)

    def positions(self) -> List[int]:
        """Letter positions: every vertex label that has a successor."""
        return self.labels()[:-1]

    def letter(self, position: int) -> int:
        positions = self.positions()
        if position not in positions:
            raise QuiverError(f"{position} is not a letter position of {self}")
        return self.letters[positions.index(position)]

    def pred(self, label: int, k: int = 1) -> int:
        return pred(label, self.n, k)

    def succ(self, label: int, k: int = 1) -> int:
        return succ(label, self.n, k)

    def star(self) -> "BinaryWord":
        """
        Orientation word of the reflected quiver: w*(i) = -w(pred(-i)).

        Reading the word right to left with every letter negated gives the same thing.
        """
        return BinaryWord(tuple(-letter for letter in reversed(self.letters)))

    def is_symmetric(self) -> bool:
        return self.star() == self


def star_string(text: str) -> str:
    """star() on the '+'/'-' string form, without building a BinaryWord."""
    return text[::-1].translate(_STAR_TABLE)


def all_words(length: int) -> Iterator[BinaryWord]:
    """Every word of the given length, '+' before '-' in each position."""
    for letters in product((1, -1), repeat=length):
        yield BinaryWord(letters)
