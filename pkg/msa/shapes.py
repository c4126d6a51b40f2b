"""
Shapes and Word Calculus

- split_shape: what the Ext quiver of a split representative A_i looks like
  (commutative square, line, disconnected, or trivalent L/R with its root)
- decompose_word: the five factors of a word around a separable pair (i, j)
- word_equation_solutions: brute force of w3 · w2* = w2 · w3
"""

from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from msa.algebra import build_path_algebra
from msa.exceptions import QuiverError, SoundnessError
from msa.maxsub import SplitSpec, build_split, ext_quiver
from msa.quiver import word_to_quiver
from msa.words import BinaryWord, star_string

NON_HEREDITARY = "NonHereditary"
LINE_QUIVER = "LineQuiver"
TRIVALENT = "Trivalent"
DISCONNECTED = "Disconnected"


@dataclass(frozen=True)
class SplitShape:
    """
    Shape of the Ext quiver of A_i.

    Trivalent shapes carry the variant ('L' when pred(i) - succ(i) is an edge,
    'R' when i - succ^2(i) is), the root and whether it is a source or a sink,
    and the undirected distances from the root to the end vertices -m and m.
    The predicted lengths are the closed forms available for i <= -1.
    """

    kind: str
    variant: Optional[str] = None
    root: Optional[int] = None
    root_role: Optional[str] = None
    trivalent_vertex: Optional[int] = None
    left_length: Optional[int] = None
    right_length: Optional[int] = None
    predicted_left: Optional[int] = None
    predicted_right: Optional[int] = None

    @property
    def diverges(self) -> bool:
        if self.predicted_left is None:
            return False
        return (self.left_length, self.right_length) != (self.predicted_left, self.predicted_right)

    def to_dict(self) -> Dict[str, Any]:
        data = {k: v for k, v in asdict(self).items() if v is not None}
        if self.kind == TRIVALENT:
            data["diverges"] = self.diverges
        return data


def _neighbour(word: BinaryWord, label: int, step: int) -> Optional[int]:
    try:
        if step >= 0:
            return word.succ(label, step)
        return word.pred(label, -step)
    except QuiverError:
        return None


def predicted_lengths(word: BinaryWord, position: int, variant: str) -> Tuple[Optional[int], Optional[int]]:
    """Closed-form left/right lengths for position <= -1, else (None, None)."""
    if position > -1:
        return None, None
    m, i = word.m, position
    if word.n % 2 == 0:
        if variant == "L":
            return i + m, m - i - 1
        return m + i + 2, m + i - 2
    if variant == "L":
        return i + m, m - i + 1
    return m + i + 2, m - i - 1


def split_shape(word: BinaryWord, position: int) -> SplitShape:
    """
    Classify A_i for the edge between `position` and its successor.

    Raises:
        QuiverError: If position is not a letter position of the word
        SoundnessError: If neither or both trivalent variants are present
    """
    letter = word.letter(position)
    before = _neighbour(word, position, -1)
    after = _neighbour(word, position, 1)
    if before is not None and after in word.positions():
        if word.letter(before) == letter == word.letter(after):
            return SplitShape(NON_HEREDITARY)

    quiver = word_to_quiver(word)
    arrow = quiver.arrows[word.positions().index(position)]
    algebra = build_split(build_path_algebra(quiver), SplitSpec(arrow.source, arrow.target))
    gamma = ext_quiver(algebra)
    if not gamma.is_connected():
        return SplitShape(DISCONNECTED)
    graph = gamma.underlying_graph()
    degrees = dict(graph.degree())
    if max(degrees.values(), default=0) <= 2:
        return SplitShape(LINE_QUIVER)

    beyond = _neighbour(word, position, 2)
    has_left = before is not None and graph.has_edge(before, after)
    has_right = beyond is not None and graph.has_edge(position, beyond)
    if has_left == has_right:
        raise SoundnessError(f"ambiguous trivalent shape for {word} at {position}")
    variant = "L" if has_left else "R"
    root = position if has_left else after
    hubs = [v for v, d in degrees.items() if d == 3]
    if gamma.out_arrows(root) and not gamma.in_arrows(root):
        role = "source"
    elif gamma.in_arrows(root) and not gamma.out_arrows(root):
        role = "sink"
    else:
        role = "mixed"
    labels = word.labels()
    predicted = predicted_lengths(word, position, variant)
    return SplitShape(
        kind=TRIVALENT,
        variant=variant,
        root=root,
        root_role=role,
        trivalent_vertex=hubs[0] if len(hubs) == 1 else None,
        left_length=nx.shortest_path_length(graph, root, labels[0]),
        right_length=nx.shortest_path_length(graph, root, labels[-1]),
        predicted_left=predicted[0],
        predicted_right=predicted[1],
    )


@dataclass(frozen=True)
class WordDecomposition:
    """
    Factors w1..w5 of a word cut at the vertices -j, i, -i, j.

    w1 runs from -m to -j, w2 from -j to i, w3 from i to -i, w4 from -i to j
    and w5 from j to m.
    """

    factors: Tuple[BinaryWord, BinaryWord, BinaryWord, BinaryWord, BinaryWord]

    def concatenate(self) -> BinaryWord:
        return BinaryWord(tuple(letter for factor in self.factors for letter in factor.letters))

    def as_strings(self) -> List[str]:
        return [str(factor) for factor in self.factors]


def decompose_word(word: BinaryWord, i: int, j: int) -> WordDecomposition:
    """
    Raises:
        QuiverError: Unless i < 0 <= j, |i| < |j| and all cut points are vertices
    """
    if not (i < 0 <= j and abs(i) < abs(j)):
        raise QuiverError(f"invalid index configuration (i, j) = ({i}, {j}): need i < 0 <= j, |i| < |j|")
    labels = word.labels()
    try:
        cuts = [0] + [labels.index(label) for label in (-j, i, -i, j)] + [len(word.letters)]
    except ValueError:
        raise QuiverError(f"({i}, {j}) are not vertex labels for n={word.n}") from None
    factors = tuple(
        BinaryWord(word.letters[start:end]) for start, end in zip(cuts, cuts[1:])
    )
    return WordDecomposition(factors)  # type: ignore[arg-type]


def _strings(length: int) -> List[str]:
    return ["".join(letters) for letters in product("+-", repeat=length)]


def word_equation_solutions(max_total_len: int) -> List[Tuple[str, str]]:
    """All (w2, w3) with len(w2) >= 1, len(w2) + len(w3) <= max_total_len and w3·w2* = w2·w3."""
    words = {length: _strings(length) for length in range(max_total_len + 1)}
    stars = {length: [star_string(w) for w in ws] for length, ws in words.items()}
    solutions = []
    for total in range(1, max_total_len + 1):
        for len2 in range(1, total + 1):
            len3 = total - len2
            for w2, w2_star in zip(words[len2], stars[len2]):
                for w3 in words[len3]:
                    if w3 + w2_star == w2 + w3:
                        solutions.append((w2, w3))
    return solutions


@dataclass
class WordEquationAudit:
    """Properties of the solution set of w3 · w2* = w2 · w3."""

    max_total_len: int
    solutions: List[Tuple[str, str]] = field(default_factory=list)
    odd_length: List[Tuple[str, str]] = field(default_factory=list)
    asymmetric: List[Tuple[str, str]] = field(default_factory=list)
    known_found: bool = False

    @property
    def passed(self) -> bool:
        return not self.odd_length and not self.asymmetric

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_total_len": self.max_total_len,
            "solutions": [list(s) for s in self.solutions],
            "odd_length_w3": [list(s) for s in self.odd_length],
            "asymmetric_w3": [list(s) for s in self.asymmetric],
            "known_solution_found": self.known_found,
            "passed": self.passed,
        }


def audit_word_equations(max_total_len: int) -> WordEquationAudit:
    solutions = word_equation_solutions(max_total_len)
    return WordEquationAudit(
        max_total_len=max_total_len,
        solutions=solutions,
        odd_length=[s for s in solutions if len(s[1]) % 2 == 1],
        asymmetric=[s for s in solutions if star_string(s[1]) != s[1]],
        known_found=("+-", "+-") in solutions,
    )
