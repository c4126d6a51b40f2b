"""
Shared fixtures: small quivers, their path algebras and golden files.
"""

import json
from pathlib import Path

import pytest

from msa.algebra import build_path_algebra
from msa.quiver import Arrow, Quiver, word_to_quiver
from msa.words import BinaryWord

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def equioriented_a4():
    """-2 -> -1 -> 1 -> 2 with arrows a-2, a-1, a1."""
    return word_to_quiver(BinaryWord.from_string("+++"))


@pytest.fixture
def equioriented_a4_algebra(equioriented_a4):
    return build_path_algebra(equioriented_a4)


@pytest.fixture
def doubled_arrow_quiver():
    """1 -alpha-> 2 =beta1, beta2=> 3 -gamma-> 4."""
    return Quiver(
        (1, 2, 3, 4),
        (
            Arrow("alpha", 1, 2),
            Arrow("beta1", 2, 3),
            Arrow("beta2", 2, 3),
            Arrow("gamma", 3, 4),
        ),
    )


@pytest.fixture
def doubled_arrow_algebra(doubled_arrow_quiver):
    return build_path_algebra(doubled_arrow_quiver)


@pytest.fixture
def load_fixture():
    def _load(name):
        with open(FIXTURES / name, "r", encoding="utf-8") as f:
            return json.load(f)

    return _load


def quiver_shape(data):
    """Quiver JSON as comparable sets: vertex labels and (id, src, tgt) triples."""
    return (
        {str(v) for v in data["vertices"]},
        {(a["id"], str(a["src"]), str(a["tgt"])) for a in data["arrows"]},
    )


def relation_shape(relations):
    """Relations JSON as a set of frozensets of (path, coeff) terms."""
    return {
        frozenset((tuple(term["path"]), term["coeff"]) for term in relation)
        for relation in relations
    }
