"""
Automorphism Orbits of Representatives

Aut(Q) acts on separable tags by {u, v} -> {σu, σv} and on split tags by
(u, v) -> (σu, σv). transport() pushes a subalgebra through the algebra
automorphism of kQ induced by σ, which is how an orbit merge is checked to
produce equal subspaces.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from msa.algebra import Path, PathAlgebra, Subalgebra
from msa.exceptions import SoundnessError
from msa.linalg import Subspace
from msa.maxsub import RepresentativeTag, SeparableSpec
from msa.quiver import Quiver, VertexMap, aut_group


@dataclass(frozen=True)
class OrbitMerge:
    """σ maps the spec of `source` to the spec of `target`."""

    source: RepresentativeTag
    target: RepresentativeTag
    sigma: VertexMap


@dataclass
class OrbitPartition:
    """Orbits in enumeration order, with the group element behind each merge."""

    blocks: List[List[RepresentativeTag]] = field(default_factory=list)
    merges: List[OrbitMerge] = field(default_factory=list)

    def block_of(self, tag: RepresentativeTag) -> List[RepresentativeTag]:
        for block in self.blocks:
            if tag in block:
                return block
        raise KeyError(str(tag))

    def same_orbit(self, first: RepresentativeTag, second: RepresentativeTag) -> bool:
        return second in self.block_of(first)

    def as_strings(self) -> List[List[str]]:
        return [[str(tag) for tag in block] for block in self.blocks]


def _act(sigma: VertexMap, tag: RepresentativeTag) -> Tuple[str, frozenset]:
    spec = tag.spec
    if isinstance(spec, SeparableSpec):
        return ("separable", frozenset((sigma(spec.u), sigma(spec.v))))
    return ("split", frozenset([(sigma(spec.u), sigma(spec.v))]))


def _key(tag: RepresentativeTag) -> Tuple[str, frozenset]:
    spec = tag.spec
    if isinstance(spec, SeparableSpec):
        return ("separable", frozenset((spec.u, spec.v)))
    return ("split", frozenset([(spec.u, spec.v)]))


def orbits(quiver: Quiver, reps: Sequence[RepresentativeTag]) -> OrbitPartition:
    """Orbit partition of the tags under Aut(Q)."""
    by_key: Dict[Tuple[str, frozenset], RepresentativeTag] = {_key(tag): tag for tag in reps}
    group = aut_group(quiver)
    partition = OrbitPartition()
    placed = set()
    for tag in reps:
        if _key(tag) in placed:
            continue
        block = [tag]
        placed.add(_key(tag))
        for sigma in group:
            image = by_key.get(_act(sigma, tag))
            if image is None:
                raise SoundnessError(f"{tag} has no image under {sigma.to_dict()}")
            if _key(image) not in placed:
                block.append(image)
                placed.add(_key(image))
                partition.merges.append(OrbitMerge(tag, image, sigma))
        partition.blocks.append(block)
    return partition


def path_permutation(ambient: PathAlgebra, sigma: VertexMap) -> List[int]:
    """Index permutation of the path basis induced by an automorphism of the quiver."""
    images = []
    for path in ambient.paths:
        arrows = tuple(sigma.image_of_arrow(a) for a in path.arrows)
        mapped = Path(sigma(path.source), sigma(path.target), arrows)
        images.append(ambient.index[mapped])
    return images


def transport(algebra: Subalgebra, sigma: VertexMap) -> Subalgebra:
    """Image of a subalgebra under the automorphism of kQ induced by σ ∈ Aut(Q)."""
    permutation = path_permutation(algebra.ambient, sigma)
    space = Subspace(algebra.ambient.dim)
    for row in algebra.space.rows():
        space.add({permutation[k]: c for k, c in row.items()})
    return Subalgebra(algebra.ambient, space, check=False)


def check_transport(source: Subalgebra, target: Subalgebra, sigma: VertexMap) -> None:
    """
    Raises:
        SoundnessError: If σ does not carry source onto target
    """
    if transport(source, sigma).space != target.space:
        raise SoundnessError("transported subalgebra differs from the orbit representative")
