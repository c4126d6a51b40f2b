"""
Maximal Subalgebras

The two families of codimension-one subalgebras of a basic algebra B = kQ/I:

- separable A(u+v): the idempotents e_u, e_v are fused into e_u + e_v
- split A(u, v, U): the arrow space u kQ1 v is cut down to a codimension-one
  subspace U, everything of radical length >= 2 is kept

plus enumeration of one representative per index on a type-A quiver and the
Ext quiver of a subalgebra.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from msa.algebra import Element, Path, PathAlgebra, Subalgebra, build_path_algebra, graded_hom_dim
from msa.exceptions import SpecError
from msa.linalg import Subspace
from msa.quiver import Arrow, Label, Quiver


@dataclass(frozen=True)
class SeparableSpec:
    """Unordered pair {u, v} of distinct vertices, stored in the quiver's vertex order."""

    u: Label
    v: Label

    def validate(self, quiver: Quiver) -> None:
        if self.u == self.v:
            raise SpecError(f"separable spec needs two distinct vertices, got u = v = {self.u!r}")
        for vertex in (self.u, self.v):
            if not quiver.has_vertex(vertex):
                raise SpecError(f"vertex {vertex!r} is not in the quiver")


@dataclass(frozen=True)
class SplitSpec:
    """
    Ordered pair (u, v) with arrows u -> v and a codimension-one subspace U of u kQ1 v.

    U is given by spanning elements of the ambient algebra; the empty tuple is U = {0}.
    """

    u: Label
    v: Label
    subspace: Tuple[Element, ...] = field(default=(), compare=False)

    def arrows(self, quiver: Quiver) -> List[Arrow]:
        return quiver.arrows_between(self.u, self.v)

    def validate(self, ambient: PathAlgebra) -> Subspace:
        """
        Returns:
            The echelonized span of U

        Raises:
            SpecError: If (u, v) has no arrow or U is not codimension one in u kQ1 v
        """
        arrows = self.arrows(ambient.quiver)
        if not arrows:
            raise SpecError(f"no arrow {self.u!r} -> {self.v!r}")
        arrow_indices = {ambient.index[Path(a.source, a.target, (a.id,))] for a in arrows}
        span = Subspace(ambient.dim)
        for element in self.subspace:
            if not set(element.coeffs) <= arrow_indices:
                raise SpecError(f"{element!r} is not in the arrow span {self.u!r} -> {self.v!r}")
            span.add(element.coeffs)
        if span.dim != len(arrows) - 1:
            raise SpecError(
                f"U must have codimension 1 in the {len(arrows)}-dimensional arrow span, "
                f"got dim U = {span.dim}"
            )
        return span


@dataclass(frozen=True)
class RepresentativeTag:
    """
    Index of an enumerated representative.

    kind is 'separable' with index (i, j), i before j in vertex order, or 'split'
    with index (i,), the left endpoint of the edge.
    """

    kind: str
    index: Tuple[Label, ...]
    spec: Union[SeparableSpec, SplitSpec] = field(compare=False, repr=False, default=None)  # type: ignore[assignment]

    def __str__(self) -> str:
        prefix = "sep" if self.kind == "separable" else "split"
        return f"{prefix}({','.join(str(i) for i in self.index)})"


def build_separable(ambient: PathAlgebra, spec: SeparableSpec) -> Subalgebra:
    """A(u+v) = k(e_u + e_v) ⊕ (⊕_{w ≠ u, v} k e_w) ⊕ J(B)."""
    spec.validate(ambient.quiver)
    basis = [ambient.vertex(spec.u) + ambient.vertex(spec.v)]
    basis += [ambient.vertex(w) for w in ambient.quiver.vertices if w not in (spec.u, spec.v)]
    basis += [ambient.element({k: 1}) for k in ambient.indices_of_length(1).tolist()]
    return Subalgebra(ambient, basis)


def build_split(ambient: PathAlgebra, spec: SplitSpec) -> Subalgebra:
    """A(u, v, U) = kQ0 ⊕ U ⊕ (⊕_{(x,y) ≠ (u,v)} x kQ1 y) ⊕ J(B)^2."""
    spec.validate(ambient)
    basis: List[Element] = [ambient.vertex(w) for w in ambient.quiver.vertices]
    basis += list(spec.subspace)
    for arrow in ambient.quiver.arrows:
        if (arrow.source, arrow.target) != (spec.u, spec.v):
            basis.append(ambient.arrow(arrow.id))
    basis += [ambient.element({k: 1}) for k in ambient.indices_of_length(2).tolist()]
    return Subalgebra(ambient, basis)


def build(ambient: PathAlgebra, spec: Union[SeparableSpec, SplitSpec]) -> Subalgebra:
    if isinstance(spec, SeparableSpec):
        return build_separable(ambient, spec)
    return build_split(ambient, spec)


def representative_tags(quiver: Quiver) -> List[RepresentativeTag]:
    """
    Tags of all representatives of a type-A quiver: separable pairs first, then splits.

    Raises:
        SpecError: If the quiver is not a type-A path in its vertex order
    """
    if not quiver.is_path_shaped():
        raise SpecError(
            "enumeration needs a type-A quiver with vertices in path order; "
            "use build_separable/build_split directly for other quivers"
        )
    vertices = quiver.vertices
    tags = [
        RepresentativeTag("separable", (u, v), SeparableSpec(u, v))
        for i, u in enumerate(vertices)
        for v in vertices[i + 1:]
    ]
    for left, right in zip(vertices, vertices[1:]):
        (arrow,) = quiver.arrows_between(left, right) + quiver.arrows_between(right, left)
        tags.append(RepresentativeTag("split", (left,), SplitSpec(arrow.source, arrow.target)))
    return tags


def enumerate_representatives(
    quiver: Quiver, ambient: Optional[PathAlgebra] = None
) -> List[Tuple[RepresentativeTag, Subalgebra]]:
    """One maximal subalgebra per separable pair and per arrow, U = {0} for splits."""
    tags = representative_tags(quiver)
    ambient = ambient or build_path_algebra(quiver)
    return [(tag, build(ambient, tag.spec)) for tag in tags]


def ext_arrow_id(source: Label, target: Label, position: int) -> str:
    return f"{source}>{target}:{position}"


def ext_quiver(algebra: Subalgebra) -> Quiver:
    """
    Ext quiver: one vertex per primitive idempotent, dim e(J/J^2)f arrows e -> f.

    Raises:
        AlgebraError: If the subalgebra is not basic
    """
    labels = list(algebra.idempotents)
    arrows = []
    for e in labels:
        for f in labels:
            count = graded_hom_dim(algebra, e, f, 1)
            arrows.extend(Arrow(ext_arrow_id(e, f, t), e, f) for t in range(count))
    return Quiver(tuple(labels), tuple(arrows))


def is_connected_ext(algebra: Subalgebra) -> bool:
    return ext_quiver(algebra).is_connected()
