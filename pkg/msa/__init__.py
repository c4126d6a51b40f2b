"""
Maximal subalgebras of path algebras of type-A quivers.

Modules:
- words: orientation words, labels, star involution
- quiver: quivers, quiver isomorphisms, Aut(Q)
- linalg: exact rational subspaces
- algebra: path algebras, subalgebras, radical filtrations
- maxsub: separable and split maximal subalgebras, Ext quivers
- presentation: bound quiver presentations and their verification
- isomorphism: certified isomorphism testing
- orbits: Aut(Q)-orbits of representatives
- shapes: split-shape classification and word calculus
- audits: structural audits over the representative corpus
- harness: orbit/isoclass verification per word and sweeps
"""

from msa.algebra import PathAlgebra, Subalgebra, build_path_algebra, truncate
from msa.harness import VerificationReport, verify_theorem, verify_word
from msa.isomorphism import IsoCertificate, is_isomorphic, verify_certificate
from msa.maxsub import (
    SeparableSpec,
    SplitSpec,
    build_separable,
    build_split,
    enumerate_representatives,
    ext_quiver,
)
from msa.presentation import (
    Presentation,
    present_separable,
    present_split_hereditary,
    present_subalgebra,
    verify_presentation,
)
from msa.quiver import Quiver, aut_group, word_to_quiver
from msa.words import BinaryWord

__version__ = "0.1.0"

__all__ = [
    "BinaryWord",
    "IsoCertificate",
    "PathAlgebra",
    "Presentation",
    "Quiver",
    "SeparableSpec",
    "SplitSpec",
    "Subalgebra",
    "VerificationReport",
    "aut_group",
    "build_path_algebra",
    "build_separable",
    "build_split",
    "enumerate_representatives",
    "ext_quiver",
    "is_isomorphic",
    "present_separable",
    "present_split_hereditary",
    "present_subalgebra",
    "truncate",
    "verify_certificate",
    "verify_presentation",
    "verify_theorem",
    "verify_word",
    "word_to_quiver",
]
