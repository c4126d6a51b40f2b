"""
Bound Quiver Presentations

A Presentation records a quiver Γ, homogeneous relations (formal combinations
of Γ-paths) and the elements of the subalgebra that Γ's vertices and arrows
stand for. Three constructions:

- present_separable: glue u and v; relations are the monomials a*b with a into
  one glued vertex and b out of the other (plus the truncation generators)
- present_split_hereditary: arrow surgery around the removed arrow direction
- present_subalgebra: lifts of a basis of e(J/J^2)f for any based subalgebra

verify_presentation checks that kΓ/(relations) has the radical layers of the
subalgebra, that relations vanish and that the arrows generate it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple

from msa.algebra import Element, PathAlgebra, Subalgebra
from msa.exceptions import AlgebraError, SoundnessError, UnsupportedPresentationError
from msa.linalg import Subspace, linear_relations
from msa.maxsub import (
    SeparableSpec,
    SplitSpec,
    build_separable,
    build_split,
    ext_arrow_id,
    ext_quiver,
)
from msa.quiver import Arrow, Label, Quiver, glued_label

GammaPath = Tuple[str, ...]
Relation = Dict[GammaPath, Fraction]


@dataclass
class Presentation:
    """
    Quiver with relations together with its realization inside a subalgebra.

    Attributes:
        quiver: The quiver Γ
        relations: Homogeneous relations, each {Γ-path: coefficient}
        arrow_dict: Γ-arrow id -> element of the subalgebra
        vertex_dict: Γ-vertex -> primitive idempotent
        subalgebra: The presented subalgebra
    """

    quiver: Quiver
    relations: List[Relation]
    arrow_dict: Dict[str, Element]
    vertex_dict: Dict[Label, Element]
    subalgebra: Subalgebra
    _evaluations: Dict[GammaPath, Element] = field(default_factory=dict, repr=False)

    @property
    def ambient(self) -> PathAlgebra:
        return self.subalgebra.ambient

    def relation_degrees(self) -> List[int]:
        degrees = []
        for relation in self.relations:
            lengths = {len(path) for path in relation}
            if len(lengths) != 1:
                raise UnsupportedPresentationError("relation is not homogeneous")
            degrees.append(lengths.pop())
        return degrees

    def is_quadratic(self) -> bool:
        return all(degree == 2 for degree in self.relation_degrees())

    def evaluate(self, path: GammaPath) -> Element:
        """Image of a positive-length Γ-path in the ambient algebra."""
        if path in self._evaluations:
            return self._evaluations[path]
        if len(path) == 1:
            value = self.arrow_dict[path[0]]
        else:
            value = self.evaluate(path[:-1]) * self.arrow_dict[path[-1]]
        self._evaluations[path] = value
        return value

    def evaluate_relation(self, relation: Relation) -> Element:
        total = self.ambient.zero()
        for path, coeff in relation.items():
            total = total + coeff * self.evaluate(path)
        return total

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quiver": self.quiver.to_dict(),
            "relations": [
                [{"path": list(path), "coeff": str(coeff)} for path, coeff in sorted(rel.items())]
                for rel in self.relations
            ],
            "arrow_dict": {
                arrow_id: self.arrow_dict[arrow_id].to_dict()
                for arrow_id in sorted(self.arrow_dict)
            },
            "vertex_dict": {str(v): e.to_dict() for v, e in self.vertex_dict.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any], subalgebra: Subalgebra) -> "Presentation":
        """Rebuild a presentation whose elements live in the given subalgebra's ambient."""
        ambient = subalgebra.ambient
        by_name = {str(path): index for index, path in enumerate(ambient.paths)}

        def element(raw: Mapping[str, str]) -> Element:
            return Element(ambient, {by_name[name]: Fraction(c) for name, c in raw.items()})

        quiver = Quiver.from_dict(data["quiver"])
        relations = [
            {tuple(term["path"]): Fraction(term["coeff"]) for term in rel}
            for rel in data["relations"]
        ]
        labels = {str(v): v for v in quiver.vertices}
        return cls(
            quiver=quiver,
            relations=relations,
            arrow_dict={k: element(v) for k, v in data["arrow_dict"].items()},
            vertex_dict={labels[k]: element(v) for k, v in data["vertex_dict"].items()},
            subalgebra=subalgebra,
        )


def gamma_paths(quiver: Quiver, degree: int) -> List[GammaPath]:
    """All Γ-paths of a positive degree, extending in arrow order."""
    layer: List[Tuple[Label, GammaPath]] = [(a.target, (a.id,)) for a in quiver.arrows]
    for _ in range(degree - 1):
        layer = [
            (a.target, path + (a.id,)) for target, path in layer for a in quiver.out_arrows(target)
        ]
    return [path for _, path in layer]


@dataclass
class PresentationCheck:
    """Outcome of verify_presentation."""

    quotient_dims: List[int]
    expected_dims: List[int]
    relations_vanish: bool
    generates: bool
    matches_ext_quiver: bool
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def _multiply_by_arrows(
    rows: List[Dict[int, Fraction]],
    paths: List[GammaPath],
    quiver: Quiver,
    index: Dict[GammaPath, int],
) -> List[Dict[int, Fraction]]:
    """Right and left products of degree-(d-1) vectors with every arrow."""
    products = []
    for row in rows:
        for arrow in quiver.arrows:
            right: Dict[int, Fraction] = {}
            left: Dict[int, Fraction] = {}
            for k, c in row.items():
                path = paths[k]
                if quiver.arrow(path[-1]).target == arrow.source:
                    right[index[path + (arrow.id,)]] = c
                if arrow.target == quiver.arrow(path[0]).source:
                    left[index[(arrow.id,) + path]] = c
            for product in (right, left):
                if product:
                    products.append(product)
    return products


def verify_presentation(presentation: Presentation) -> PresentationCheck:
    """
    Soundness of a presentation.

    Checks, degree by degree up to the nilpotency index D of the subalgebra:
    dim (kΓ/I)_d equals dim J^d / J^{d+1}, with I_d = R_d + I_{d-1}Γ1 + Γ1 I_{d-1};
    every relation evaluates to zero; Γ-paths span the subalgebra; Γ agrees with
    the Ext quiver.
    """
    algebra = presentation.subalgebra
    quiver = presentation.quiver
    problems: List[str] = []
    dims = algebra.radical_power_dims()
    expected = [dims[d] - dims[d + 1] for d in range(len(dims) - 1)] + [0]
    top = len(expected) - 1

    by_degree: Dict[int, List[Relation]] = {}
    try:
        for relation, degree in zip(presentation.relations, presentation.relation_degrees()):
            by_degree.setdefault(degree, []).append(relation)
    except UnsupportedPresentationError as exc:
        problems.append(str(exc))
    if any(degree < 2 for degree in by_degree):
        problems.append("relation of degree below 2")

    # Step 1: graded quotient dimensions
    quotient = [len(quiver.vertices)]
    ideal_rows: List[Dict[int, Fraction]] = []
    previous_paths: List[GammaPath] = []
    for degree in range(1, top + 1):
        paths = gamma_paths(quiver, degree)
        index = {path: k for k, path in enumerate(paths)}
        ideal = Subspace(len(paths))
        for relation in by_degree.get(degree, []):
            ideal.add({index[path]: coeff for path, coeff in relation.items()})
        if degree > 1:
            ideal.add_all(_multiply_by_arrows(ideal_rows, previous_paths, quiver, index))
        quotient.append(len(paths) - ideal.dim)
        ideal_rows, previous_paths = ideal.rows(), paths
    if quotient != expected:
        problems.append(f"graded quotient dims {quotient} differ from radical layers {expected}")

    # Step 2: relations vanish
    vanish = all(not presentation.evaluate_relation(rel) for rel in presentation.relations)
    if not vanish:
        problems.append("a relation does not vanish in the subalgebra")

    # Step 3: arrows and vertices generate the subalgebra
    span = Subspace(presentation.ambient.dim)
    for element in presentation.vertex_dict.values():
        span.add(element.coeffs)
    frontier: List[GammaPath] = [(a.id,) for a in quiver.arrows]
    while frontier:
        grown = []
        for path in frontier:
            value = presentation.evaluate(path)
            if value:
                span.add(value.coeffs)
                grown.extend(path + (a.id,) for a in quiver.out_arrows(quiver.arrow(path[-1]).target))
        frontier = grown
    generates = span == algebra.space
    if not generates:
        problems.append("Γ-paths do not span the subalgebra")

    # Step 4: Γ against the Ext quiver
    ext = ext_quiver(algebra)
    matches = set(ext.vertices) == set(quiver.vertices) and all(
        len(ext.arrows_between(s, t)) == len(quiver.arrows_between(s, t))
        for s in ext.vertices
        for t in ext.vertices
    )
    if not matches:
        problems.append("Γ differs from the Ext quiver of the subalgebra")

    return PresentationCheck(quotient, expected, vanish, generates, matches, problems)


def _checked(presentation: Presentation) -> Presentation:
    check = verify_presentation(presentation)
    if not check.ok:
        raise SoundnessError("presentation failed verification: " + "; ".join(check.problems))
    return presentation


def present_separable(ambient: PathAlgebra, spec: SeparableSpec) -> Presentation:
    """
    Presentation of A(u+v): glue u and v.

    Relations are a*b for a into u and b out of v, or a into v and b out of u;
    over a truncated ambient the generators of J(Q)^n are appended verbatim.
    """
    algebra = build_separable(ambient, spec)
    quiver = ambient.quiver
    u, v = sorted((spec.u, spec.v), key=quiver.vertices.index)
    glued = glued_label((u, v))

    def image(vertex: Label) -> Label:
        return glued if vertex in (u, v) else vertex

    vertices = tuple(image(w) for w in quiver.vertices if w != v)
    arrows = tuple(Arrow(a.id, image(a.source), image(a.target)) for a in quiver.arrows)
    gamma = Quiver(vertices, arrows)

    relations: List[Relation] = []
    for first, second in ((u, v), (v, u)):
        for a in quiver.in_arrows(first):
            for b in quiver.out_arrows(second):
                relations.append({(a.id, b.id): Fraction(1)})
    for path in ambient.ideal_generators():
        relations.append({path.arrows: Fraction(1)})

    vertex_dict = {image(w): ambient.vertex(w) for w in quiver.vertices if w not in (u, v)}
    vertex_dict[glued] = ambient.vertex(u) + ambient.vertex(v)
    vertex_dict = {w: vertex_dict[w] for w in vertices}
    arrow_dict = {a.id: ambient.arrow(a.id) for a in quiver.arrows}
    return _checked(Presentation(gamma, relations, arrow_dict, vertex_dict, algebra))


def present_split_hereditary(
    ambient: PathAlgebra, spec: SplitSpec, complement: Optional[str] = None
) -> Presentation:
    """
    Presentation of A(u, v, U) over a hereditary ambient.

    With c the complement arrow of U in u kQ1 v, the arrows u -> v are replaced by
    a basis of U, every arrow g into u gains a partner over_g = g*c and every arrow
    g out of v a partner under_g = c*g. Relations are over_b*g - b*under_g.

    Args:
        complement: Arrow id to use as c; defaults to the first arrow u -> v
            outside the span of U

    Raises:
        AlgebraError: If the ambient algebra is not hereditary
        SpecError: If the spec is invalid
    """
    if not ambient.is_hereditary:
        raise AlgebraError("split presentations need a hereditary ambient algebra")
    span_u = spec.validate(ambient)
    algebra = build_split(ambient, spec)
    quiver = ambient.quiver
    parallel = spec.arrows(quiver)
    outside = [a for a in parallel if not span_u.contains(ambient.arrow(a.id).coeffs)]
    if complement is None:
        chosen = outside[0]
    else:
        matches = [a for a in outside if a.id == complement]
        if not matches:
            raise AlgebraError(f"{complement!r} is not an arrow u -> v outside U")
        chosen = matches[0]
    c = ambient.arrow(chosen.id)

    arrows: List[Arrow] = []
    arrow_dict: Dict[str, Element] = {}
    for arrow in quiver.arrows:
        if (arrow.source, arrow.target) != (spec.u, spec.v):
            arrows.append(arrow)
            arrow_dict[arrow.id] = ambient.arrow(arrow.id)
    for k, row in enumerate(span_u.rows()):
        element = Element(ambient, row)
        arrow_name = f"U{k}"
        if element.is_unit_vector():
            arrow_name = ambient.paths[next(iter(row))].arrows[0]
        arrows.append(Arrow(arrow_name, spec.u, spec.v))
        arrow_dict[arrow_name] = element
    into_u = quiver.in_arrows(spec.u)
    out_of_v = quiver.out_arrows(spec.v)
    for g in into_u:
        arrows.append(Arrow(f"over_{g.id}", g.source, spec.v))
        arrow_dict[f"over_{g.id}"] = ambient.arrow(g.id) * c
    for g in out_of_v:
        arrows.append(Arrow(f"under_{g.id}", spec.u, g.target))
        arrow_dict[f"under_{g.id}"] = c * ambient.arrow(g.id)
    gamma = Quiver(quiver.vertices, tuple(arrows))

    relations: List[Relation] = [
        {(f"over_{b.id}", g.id): Fraction(1), (b.id, f"under_{g.id}"): Fraction(-1)}
        for b in into_u
        for g in out_of_v
    ]
    vertex_dict = {w: ambient.vertex(w) for w in quiver.vertices}
    presentation = Presentation(gamma, relations, arrow_dict, vertex_dict, algebra)

    ext = ext_quiver(algebra)
    if len(ext.arrows_between(spec.u, spec.v)) != len(parallel) - 1:
        raise SoundnessError(f"Ext quiver does not have {len(parallel) - 1} arrows u -> v")
    return _checked(presentation)


def present_subalgebra(algebra: Subalgebra, verify: bool = True) -> Presentation:
    """
    Lift-based presentation of a based subalgebra.

    Arrows e -> f are lifts of a basis of e(J/J^2)f chosen greedily from the
    echelon basis of eJf; relations are the degree-2 kernel of evaluation. The
    quiver is ext_quiver(algebra), arrow ids included.

    Raises:
        UnsupportedPresentationError: If the subalgebra is not graded by the
            lifts or the kernel is not generated in degree 2
    """
    ambient = algebra.ambient
    gamma = ext_quiver(algebra)
    first, second = algebra.peirce(1), algebra.peirce(2)
    arrow_dict: Dict[str, Element] = {}
    for e in gamma.vertices:
        for f in gamma.vertices:
            piece = first.get((e, f))
            if piece is None:
                continue
            below = second.get((e, f), Subspace(ambient.dim)).copy()
            lifts = [row for row in piece.rows() if below.add(row)]
            for t, row in enumerate(lifts):
                arrow_dict[ext_arrow_id(e, f, t)] = Element(ambient, row)
    presentation = Presentation(gamma, [], arrow_dict, dict(algebra.idempotents), algebra)

    # Step 1: graded pieces must form a direct sum
    total = Subspace(ambient.dim, (e.coeffs for e in presentation.vertex_dict.values()))
    graded_rank = total.dim
    degree = 1
    paths = gamma_paths(gamma, 1)
    while paths:
        values = [presentation.evaluate(p) for p in paths]
        if degree == 2:
            for relation in linear_relations([v.coeffs for v in values], ambient.dim):
                presentation.relations.append({paths[k]: c for k, c in relation.items()})
        piece_rank = Subspace(ambient.dim, (v.coeffs for v in values)).dim
        if piece_rank == 0:
            break
        graded_rank += piece_rank
        total.add_all(v.coeffs for v in values)
        degree += 1
        if degree > algebra.nilpotency_index:
            break
        paths = gamma_paths(gamma, degree)
    if graded_rank != algebra.dim or total.dim != algebra.dim:
        raise UnsupportedPresentationError("subalgebra is not graded by the chosen lifts")
    if verify:
        check = verify_presentation(presentation)
        if not check.ok:
            raise UnsupportedPresentationError("; ".join(check.problems))
    return presentation
