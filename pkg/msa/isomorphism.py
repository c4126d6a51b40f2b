"""
Certified Isomorphism Testing

Decision procedure for algebras given as a Subalgebra or a Presentation:

1. dimension and radical-layer dimensions
2. Ext quivers, through all quiver isomorphisms σ
3. hereditary inputs (dim A = number of paths of an acyclic Ext quiver) are
   isomorphic as soon as step 2 succeeds
4. per-vertex-pair dimensions of the degree-2 relation spaces
5. for each σ, a search over signed permutation matrices on the arrow spaces
   touched by relations, accepting when the induced degree-2 map carries the
   relation space into the target relation space

An isomorphism can be normalized to map primitive idempotents to primitive
idempotents, so it induces a quiver isomorphism of Ext quivers; that is why
only such σ are searched.

Why signed permutations are enough for maximal subalgebras in type A: separable
relations are monomials a*b with every arrow space one-dimensional except at the
glued vertex, and parallel arrows only occur there; a monomial relation space is
preserved by σ and any monomial-preserving rescaling, so a signed permutation
works whenever anything does. A split subalgebra that is not hereditary has a
single relation over_b*g - b*under_g, all of its arrow spaces are
one-dimensional, and the sign on one arrow absorbs the binomial's sign.
Blocks of more than two parallel arrows touched by relations are rejected as
unsupported.

Every Isomorphic verdict is re-verified by verify_certificate: the map induced
on a monomial basis must be bijective and multiplicative on all basis pairs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Dict, List, Optional, Tuple, Union

import networkx as nx

from msa.algebra import Element, Subalgebra
from msa.exceptions import SoundnessError, UnsupportedPresentationError
from msa.linalg import Subspace
from msa.maxsub import ext_quiver
from msa.presentation import GammaPath, Presentation, gamma_paths, present_subalgebra
from msa.quiver import Label, Quiver, VertexMap, quiver_isomorphisms, quiver_key, quiver_signature

ISOMORPHIC = "Isomorphic"
NOT_ISOMORPHIC = "NotIsomorphic"

DIMENSION = "dimension"
RADICAL_LAYERS = "radical-layer dims"
EXT_QUIVER_CLASS = "ext-quiver class"
EXT_QUIVER_MATCH = "ext-quiver match"
RELATION_LAYERS = "relation-layer dims"
EXHAUSTED = "exhausted-search"

AlgebraLike = Union[Subalgebra, Presentation]
Matrix = Tuple[Tuple[int, ...], ...]
Block = Tuple[Label, Label]


@dataclass
class IsoCertificate:
    """
    Verdict with evidence.

    Attributes:
        verdict: ISOMORPHIC or NOT_ISOMORPHIC
        sigma: Ext-quiver isomorphism (Isomorphic only)
        matrices: Arrow-space matrix per source block; column c is the image of
            the c-th arrow of the block in the target block's arrows
        witness: Name of the distinguishing invariant (NotIsomorphic only)
        values: The invariant on both inputs
        tried: Every σ examined by an exhausted search
    """

    verdict: str
    sigma: Optional[VertexMap] = None
    matrices: Dict[Block, Matrix] = field(default_factory=dict)
    witness: Optional[str] = None
    values: Optional[Tuple[Any, Any]] = None
    tried: Tuple[VertexMap, ...] = ()

    @property
    def is_isomorphic(self) -> bool:
        return self.verdict == ISOMORPHIC

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.verdict}
        if self.sigma is not None:
            data["sigma"] = self.sigma.to_dict()
            data["matrices"] = [
                {"block": [str(s), str(t)], "matrix": [list(row) for row in matrix]}
                for (s, t), matrix in self.matrices.items()
            ]
        if self.witness is not None:
            data["witness"] = self.witness
            data["values"] = [repr(v) for v in (self.values or ())]
            data["tried"] = len(self.tried)
        return data


def _subalgebra(item: AlgebraLike) -> Subalgebra:
    return item.subalgebra if isinstance(item, Presentation) else item


def skeleton_quiver(item: AlgebraLike) -> Quiver:
    """The quiver the search runs on: Γ of a presentation, else the Ext quiver."""
    return item.quiver if isinstance(item, Presentation) else ext_quiver(item)


def _presentation(item: AlgebraLike, verify: bool) -> Presentation:
    if isinstance(item, Presentation):
        if not item.is_quadratic():
            raise UnsupportedPresentationError("relations of degree other than 2")
        return item
    return present_subalgebra(item, verify=verify)


def path_count(quiver: Quiver) -> Optional[int]:
    """Number of paths (trivial ones included), or None when there is an oriented cycle."""
    graph = quiver.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        return None
    from_vertex: Dict[Label, int] = {}
    for vertex in reversed(list(nx.topological_sort(graph))):
        from_vertex[vertex] = 1 + sum(from_vertex[a.target] for a in quiver.out_arrows(vertex))
    return sum(from_vertex.values())


def is_hereditary(item: AlgebraLike) -> bool:
    return _subalgebra(item).dim == path_count(skeleton_quiver(item))


def _blocks(quiver: Quiver) -> Dict[Block, List[str]]:
    return {pair: [a.id for a in quiver.arrows_between(*pair)] for pair in quiver.arrow_pairs()}


def _relation_space(presentation: Presentation) -> Tuple[Subspace, List[GammaPath], Dict[GammaPath, int]]:
    paths = gamma_paths(presentation.quiver, 2)
    index = {path: k for k, path in enumerate(paths)}
    space = Subspace(len(paths))
    for relation in presentation.relations:
        space.add({index[path]: coeff for path, coeff in relation.items()})
    return space, paths, index


def relation_layer_dims(presentation: Presentation) -> Tuple[int, ...]:
    """Sorted nonzero dimensions of the degree-2 relation space per vertex pair."""
    space, paths, _ = _relation_space(presentation)
    quiver = presentation.quiver
    per_pair: Dict[Block, Subspace] = {}
    for row in space.rows():
        first = paths[min(row)]
        pair = (quiver.arrow(first[0]).source, quiver.arrow(first[-1]).target)
        per_pair.setdefault(pair, Subspace(len(paths))).add(row)
    return tuple(sorted(s.dim for s in per_pair.values()))


def signed_permutations(size: int) -> List[Matrix]:
    """All size x size signed permutation matrices, identity first."""
    matrices = []
    for perm in permutations(range(size)):
        for signs in product((1, -1), repeat=size):
            matrices.append(
                tuple(
                    tuple(signs[col] if perm[col] == row else 0 for col in range(size))
                    for row in range(size)
                )
            )
    return matrices


def _identity(size: int) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(size)) for r in range(size))


def _search_matrices(
    source: Presentation, target: Presentation, sigma: VertexMap
) -> Optional[Dict[Block, Matrix]]:
    """Backtracking over signed permutation matrices on relation-touched blocks."""
    relations, paths, _ = _relation_space(source)
    target_relations, _, target_index = _relation_space(target)
    blocks = _blocks(source.quiver)
    target_blocks = _blocks(target.quiver)
    position = {a: (pair, col) for pair, ids in blocks.items() for col, a in enumerate(ids)}

    rows = relations.rows()
    touched: List[Block] = []
    for row in rows:
        for k in sorted(row):
            for arrow_id in paths[k]:
                pair = position[arrow_id][0]
                if pair not in touched:
                    touched.append(pair)
    for pair in touched:
        if len(blocks[pair]) > 2:
            raise UnsupportedPresentationError(
                f"arrow space of dimension {len(blocks[pair])} touched by relations"
            )
    level_of = {pair: level for level, pair in enumerate(touched)}
    checks_at: Dict[int, List[Dict[int, Fraction]]] = {}
    for row in rows:
        last = max(level_of[position[a][0]] for k in row for a in paths[k])
        checks_at.setdefault(last, []).append(row)

    assignment: Dict[Block, Matrix] = {}

    def target_block(pair: Block) -> List[str]:
        return target_blocks[(sigma(pair[0]), sigma(pair[1]))]

    def image(arrow_id: str) -> Dict[str, int]:
        pair, col = position[arrow_id]
        if pair not in assignment:
            return {sigma.image_of_arrow(arrow_id): 1}
        matrix = assignment[pair]
        ids = target_block(pair)
        return {ids[r]: matrix[r][col] for r in range(len(ids)) if matrix[r][col]}

    def carried(row: Dict[int, Fraction]) -> bool:
        vector: Dict[int, Fraction] = {}
        for k, coeff in row.items():
            first, second = paths[k]
            for a, x in image(first).items():
                for b, y in image(second).items():
                    j = target_index[(a, b)]
                    vector[j] = vector.get(j, 0) + coeff * x * y
        return target_relations.contains(vector)

    def extend(level: int) -> bool:
        if level == len(touched):
            return True
        pair = touched[level]
        for matrix in signed_permutations(len(blocks[pair])):
            assignment[pair] = matrix
            if all(carried(row) for row in checks_at.get(level, [])) and extend(level + 1):
                return True
        del assignment[pair]
        return False

    if not extend(0):
        return None
    return {pair: assignment.get(pair, _identity(len(ids))) for pair, ids in blocks.items()}


def _not_isomorphic(witness: str, values: Optional[Tuple[Any, Any]], tried: Tuple[VertexMap, ...] = ()) -> IsoCertificate:
    return IsoCertificate(NOT_ISOMORPHIC, witness=witness, values=values, tried=tried)


def is_isomorphic(first: AlgebraLike, second: AlgebraLike) -> IsoCertificate:
    """
    Decide whether two algebras are isomorphic.

    Raises:
        UnsupportedPresentationError: If an input is outside the quadratic family
        SoundnessError: If an Isomorphic certificate fails re-verification
    """
    algebra, other = _subalgebra(first), _subalgebra(second)
    # Step 1: dimensions
    if algebra.dim != other.dim:
        return _not_isomorphic(DIMENSION, (algebra.dim, other.dim))
    layers, other_layers = algebra.radical_power_dims(), other.radical_power_dims()
    if layers != other_layers:
        return _not_isomorphic(RADICAL_LAYERS, (tuple(layers), tuple(other_layers)))

    # Step 2: Ext quivers
    quiver, other_quiver = skeleton_quiver(first), skeleton_quiver(second)
    sigmas: List[VertexMap] = []
    if quiver_key(quiver) == quiver_key(other_quiver):
        sigmas = quiver_isomorphisms(quiver, other_quiver)
    if not sigmas:
        signature, other_signature = quiver_signature(quiver), quiver_signature(other_quiver)
        if signature != other_signature:
            return _not_isomorphic(EXT_QUIVER_CLASS, (signature, other_signature))
        return _not_isomorphic(EXT_QUIVER_MATCH, (True, False))

    # Step 3: hereditary inputs
    if algebra.dim == path_count(quiver):
        source, target = _presentation(first, verify=False), _presentation(second, verify=False)
        sigma = sigmas[0]
        matrices = {pair: _identity(len(ids)) for pair, ids in _blocks(source.quiver).items()}
        return _certified(IsoCertificate(ISOMORPHIC, sigma, matrices), source, target)

    # Step 4: relation layers
    source, target = _presentation(first, verify=True), _presentation(second, verify=True)
    rel_dims, other_rel_dims = relation_layer_dims(source), relation_layer_dims(target)
    if rel_dims != other_rel_dims:
        return _not_isomorphic(RELATION_LAYERS, (rel_dims, other_rel_dims))

    # Step 5: arrow-space search per σ
    for sigma in sigmas:
        matrices = _search_matrices(source, target, sigma)
        if matrices is not None:
            return _certified(IsoCertificate(ISOMORPHIC, sigma, matrices), source, target)
    return _not_isomorphic(EXHAUSTED, None, tried=tuple(sigmas))


def _certified(certificate: IsoCertificate, source: Presentation, target: Presentation) -> IsoCertificate:
    if not verify_certificate(certificate, source, target):
        raise SoundnessError(f"isomorphism certificate failed re-verification: {certificate.to_dict()}")
    return certificate


def witness_value(witness: str, item: AlgebraLike, reference: AlgebraLike) -> Any:
    """
    Re-evaluate a NotIsomorphic witness on one input.

    The Ext-quiver class is the signature of the Ext quiver. The Ext-quiver
    match, used only when two signatures collide, is evaluated as "Ext quiver
    isomorphic to the reference's".
    """
    algebra = _subalgebra(item)
    if witness == DIMENSION:
        return algebra.dim
    if witness == RADICAL_LAYERS:
        return tuple(algebra.radical_power_dims())
    if witness == EXT_QUIVER_CLASS:
        return quiver_signature(skeleton_quiver(item))
    if witness == EXT_QUIVER_MATCH:
        return bool(quiver_isomorphisms(skeleton_quiver(reference), skeleton_quiver(item)))
    if witness == RELATION_LAYERS:
        return relation_layer_dims(_presentation(item, verify=True))
    raise ValueError(f"witness {witness!r} has no single-input evaluation")


def _monomial_basis(presentation: Presentation) -> Tuple[List[Tuple[Label, Label, GammaPath]], List[Element], Subspace]:
    """Γ-paths whose evaluations form a basis, with a tracked span for coordinates."""
    quiver = presentation.quiver
    span = Subspace(presentation.ambient.dim, track=True)
    basis: List[Tuple[Label, Label, GammaPath]] = []
    values: List[Element] = []
    frontier: List[Tuple[Label, Label, GammaPath, Element]] = []
    for vertex in quiver.vertices:
        element = presentation.vertex_dict[vertex]
        frontier.append((vertex, vertex, (), element))
    while frontier:
        grown = []
        for source, target, path, value in frontier:
            if span.add(value.coeffs, tag=len(basis)):
                basis.append((source, target, path))
                values.append(value)
            for arrow in quiver.out_arrows(target):
                extended = value * presentation.arrow_dict[arrow.id]
                if extended:
                    grown.append((source, arrow.target, path + (arrow.id,), extended))
        frontier = grown
    return basis, values, span


def verify_certificate(certificate: IsoCertificate, first: AlgebraLike, second: AlgebraLike) -> bool:
    """
    Independent check of an Isomorphic certificate.

    Builds ψ on a monomial basis of the first algebra from σ and the arrow-space
    matrices, then checks: images lie in the second algebra between the right
    idempotents; they form a basis; the unit maps to the unit; ψ(xy) = ψ(x)ψ(y)
    on every composable basis pair (other pairs multiply to zero on both sides
    by the idempotent placement).
    """
    if not certificate.is_isomorphic or certificate.sigma is None:
        return False
    source = _presentation(first, verify=False)
    target = _presentation(second, verify=False)
    sigma = certificate.sigma
    target_algebra = target.subalgebra
    target_ambient = target.ambient
    blocks = _blocks(source.quiver)
    target_blocks = _blocks(target.quiver)

    arrow_image: Dict[str, Element] = {}
    for pair, ids in blocks.items():
        matrix = certificate.matrices[pair]
        target_ids = target_blocks.get((sigma(pair[0]), sigma(pair[1])), [])
        if len(target_ids) != len(ids):
            return False
        for col, arrow_id in enumerate(ids):
            value = target_ambient.zero()
            for row, target_id in enumerate(target_ids):
                if matrix[row][col]:
                    value = value + matrix[row][col] * target.arrow_dict[target_id]
            arrow_image[arrow_id] = value

    basis, values, span = _monomial_basis(source)
    if len(basis) != source.subalgebra.dim or len(basis) != target_algebra.dim:
        return False

    def psi(entry: Tuple[Label, Label, GammaPath]) -> Element:
        start, _, path = entry
        value = target.vertex_dict[sigma(start)]
        for arrow_id in path:
            value = value * arrow_image[arrow_id]
        return value

    images = [psi(entry) for entry in basis]
    image_span = Subspace(target_ambient.dim)
    for (start, end, _), image in zip(basis, images):
        if not target_algebra.contains(image):
            return False
        left, right = target.vertex_dict[sigma(start)], target.vertex_dict[sigma(end)]
        if left * image * right != image:
            return False
        image_span.add(image.coeffs)
    if image_span.dim != target_algebra.dim:
        return False

    unit = target_ambient.zero()
    for vertex in source.quiver.vertices:
        unit = unit + target.vertex_dict[sigma(vertex)]
    if unit != target_ambient.unit():
        return False

    for i, (_, end, _) in enumerate(basis):
        for j, (start, _, _) in enumerate(basis):
            if end != start:
                continue
            product_value = values[i] * values[j]
            expected = target_ambient.zero()
            for k, coeff in span.coordinates(product_value.coeffs).items():
                expected = expected + coeff * images[k]
            if images[i] * images[j] != expected:
                return False
    return True
