"""
Path Algebras and Subalgebras

Responsibilities:
- Path basis and structure constants of kQ and its truncations kQ/J(Q)^n
- Exact element arithmetic
- Subalgebras given by a spanning set: closure, radical filtration,
  primitive idempotents and Peirce pieces
- An independent radical computation through the trace form

Paths compose left to right: for arrows a: x -> y and b: y -> z the product a*b
is the path x -> z, and e_x * p * e_y = p exactly when p runs from x to y.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from msa.exceptions import AlgebraError
from msa.linalg import Subspace, Vector, clean, linear_relations
from msa.quiver import Label, Quiver, glued_label

ZERO = -1


@dataclass(frozen=True)
class Path:
    """A path of a quiver; trivial paths have no arrows and source == target."""

    source: Label
    target: Label
    arrows: Tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows

    def compose(self, other: "Path") -> Optional["Path"]:
        """self followed by other, or None when the endpoints do not meet."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def __str__(self) -> str:
        if self.is_trivial:
            return f"e{self.source}"
        return "*".join(self.arrows)


class Element:
    """
    Element of a path algebra: sparse exact coefficients over the path basis.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "PathAlgebra", coeffs: Optional[Mapping[int, object]] = None):
        self.algebra = algebra
        self.coeffs: Vector = clean(coeffs or {})

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.coeffs)
        for key, value in other.coeffs.items():
            out[key] = out.get(key, 0) + value
        return Element(self.algebra, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: Union["Element", int, Fraction]) -> "Element":
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return Element(self.algebra, {k: v * other for k, v in self.coeffs.items()})

    def __rmul__(self, scalar: Union[int, Fraction]) -> "Element":
        return Element(self.algebra, {k: v * scalar for k, v in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_unit_vector(self) -> bool:
        return len(self.coeffs) == 1 and next(iter(self.coeffs.values())) == 1

    def to_dict(self) -> Dict[str, str]:
        """Sparse {path-id: 'p/q'} map ordered by basis index."""
        return {
            str(self.algebra.paths[k]): str(self.coeffs[k]) for k in sorted(self.coeffs)
        }

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs):
            coeff = self.coeffs[k]
            name = str(self.algebra.paths[k])
            terms.append(name if coeff == 1 else f"{coeff}*{name}")
        return " + ".join(terms)


class PathAlgebra:
    """
    Path algebra kQ of an acyclic quiver, optionally truncated to kQ/J(Q)^n.

    Basis paths are ordered by length, then by the order in which they are
    reached extending shorter paths along the quiver's arrow order.
    """

    def __init__(self, quiver: Quiver, truncation: Optional[int] = None):
        if not quiver.is_acyclic():
            raise AlgebraError("not acyclic: path algebra would be infinite-dimensional")
        if truncation is not None and truncation < 2:
            raise AlgebraError(
                f"truncation degree must be at least 2 (ideal not admissible), got {truncation}"
            )
        self.quiver = quiver
        self.truncation = truncation
        self.paths, self._overflow = self._enumerate_paths()
        self.index: Dict[Path, int] = {p: i for i, p in enumerate(self.paths)}
        self.lengths = np.array([p.length for p in self.paths], dtype=int)
        self.table = self._multiplication_table()
        self._rows: List[List[int]] = self.table.tolist()
        self._vertex_index = {v: self.index[Path(v, v)] for v in quiver.vertices}

    def _enumerate_paths(self) -> Tuple[List[Path], List[Path]]:
        layer = [Path(v, v) for v in self.quiver.vertices]
        paths = list(layer)
        while layer:
            extended = [
                Path(p.source, a.target, p.arrows + (a.id,))
                for p in layer
                for a in self.quiver.out_arrows(p.target)
            ]
            if self.truncation is not None and extended and extended[0].length >= self.truncation:
                return paths, extended
            paths.extend(extended)
            layer = extended
        return paths, []

    def _multiplication_table(self) -> np.ndarray:
        dim = len(self.paths)
        table = np.full((dim, dim), ZERO, dtype=int)
        by_source: Dict[Label, List[int]] = {}
        for j, path in enumerate(self.paths):
            by_source.setdefault(path.source, []).append(j)
        for i, left in enumerate(self.paths):
            for j in by_source.get(left.target, ()):
                product = left.compose(self.paths[j])
                table[i, j] = self.index.get(product, ZERO)
        return table

    @property
    def dim(self) -> int:
        return len(self.paths)

    @property
    def is_hereditary(self) -> bool:
        return not self._overflow

    def ideal_generators(self) -> List[Path]:
        """Paths of length equal to the truncation degree (generators of J(Q)^n)."""
        return list(self._overflow)

    def element(self, coeffs: Mapping[int, object]) -> Element:
        return Element(self, coeffs)

    def zero(self) -> Element:
        return Element(self)

    def unit(self) -> Element:
        return Element(self, {self._vertex_index[v]: 1 for v in self.quiver.vertices})

    def vertex(self, label: Label) -> Element:
        try:
            return Element(self, {self._vertex_index[label]: 1})
        except KeyError:
            raise AlgebraError(f"unknown vertex {label!r}") from None

    def path(self, arrows: Sequence[str]) -> Element:
        """Basis element of a composable arrow sequence (zero if truncated away)."""
        if not arrows:
            raise AlgebraError("use vertex() for trivial paths")
        first = self.quiver.arrow(arrows[0])
        current = Path(first.source, first.target, (first.id,))
        for arrow_id in arrows[1:]:
            arrow = self.quiver.arrow(arrow_id)
            composed = current.compose(Path(arrow.source, arrow.target, (arrow.id,)))
            if composed is None:
                raise AlgebraError(f"arrows {tuple(arrows)} are not composable")
            current = composed
        if current not in self.index:
            return self.zero()
        return Element(self, {self.index[current]: 1})

    def arrow(self, arrow_id: str) -> Element:
        return self.path([arrow_id])

    def indices_of_length(self, minimum: int) -> np.ndarray:
        return np.nonzero(self.lengths >= minimum)[0]

    def multiply(self, x: Element, y: Element) -> Element:
        out: Dict[int, Fraction] = {}
        for i, a in x.coeffs.items():
            row = self._rows[i]
            for j, b in y.coeffs.items():
                k = row[j]
                if k != ZERO:
                    out[k] = out.get(k, 0) + a * b
        return Element(self, out)

    @cached_property
    def out_path_counts(self) -> Dict[Label, int]:
        """Number of basis paths starting at each vertex (trace of left multiplication)."""
        counts = {v: 0 for v in self.quiver.vertices}
        for path in self.paths:
            counts[path.source] += 1
        return counts

    def radical_power_dims(self) -> List[int]:
        """dim J^r for r = 0, 1, ... down to the first 0."""
        counts = np.bincount(self.lengths)
        tail = np.cumsum(counts[::-1])[::-1].tolist()
        return [int(d) for d in tail] + [0]


def build_path_algebra(quiver: Quiver) -> PathAlgebra:
    return PathAlgebra(quiver)


def truncate(quiver: Quiver, n: int) -> PathAlgebra:
    """Truncated path algebra kQ/J(Q)^n (paths of length >= n deleted)."""
    return PathAlgebra(quiver, truncation=n)


def _as_vector(item: Union[Element, Mapping[int, object]]) -> Mapping[int, object]:
    return item.coeffs if isinstance(item, Element) else item


class Subalgebra:
    """
    Unital subalgebra of a path algebra, stored as an exact subspace.

    Args:
        ambient: The path algebra B
        vectors: Spanning set (Elements or sparse vectors) or a ready Subspace
        check: Verify unit, closure and the based-algebra structure on construction
    """

    def __init__(
        self,
        ambient: PathAlgebra,
        vectors: Union[Subspace, Iterable[Union[Element, Mapping[int, object]]]],
        check: bool = True,
    ):
        self.ambient = ambient
        if isinstance(vectors, Subspace):
            self.space = vectors
        else:
            self.space = Subspace(ambient.dim, (_as_vector(v) for v in vectors))
        self._peirce: Dict[int, Dict[Tuple[Label, Label], Subspace]] = {}
        if check:
            self.verify()

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> List[Element]:
        return [Element(self.ambient, row) for row in self.space.rows()]

    def contains(self, x: Union[Element, Mapping[int, object]]) -> bool:
        return self.space.contains(_as_vector(x))

    def __repr__(self) -> str:
        return f"Subalgebra(dim={self.dim}, ambient_dim={self.ambient.dim})"

    def _product_span(self, left: List[Vector], right: List[Vector]) -> Subspace:
        """Span of all products x*y, x in left, y in right."""
        result = Subspace(self.ambient.dim)
        left_units, left_other = _split_units(left)
        right_units, right_other = _split_units(right)
        if left_units and right_units:
            block = self.ambient.table[np.ix_(left_units, right_units)]
            for k in np.unique(block[block != ZERO]).tolist():
                result.add({k: 1})
        for x in left_other:
            for y in right:
                result.add(self.ambient.multiply(Element(self.ambient, x), Element(self.ambient, y)).coeffs)
        for y in right_other:
            for x in left:
                if len(x) == 1 and next(iter(x.values())) == 1:
                    result.add(self.ambient.multiply(Element(self.ambient, x), Element(self.ambient, y)).coeffs)
        return result

    def verify(self) -> None:
        """
        Check unit, closure and based structure.

        Raises:
            AlgebraError: If any check fails
        """
        if not self.contains(self.ambient.unit()):
            raise AlgebraError("not a based subalgebra: does not contain the unit")
        rows = self.space.rows()
        products = self._product_span(rows, rows)
        if not self.space.contains_space(products):
            raise AlgebraError("not a based subalgebra: not closed under multiplication")
        # Step 1: nilpotent radical; Step 2: split semisimple quotient
        _ = self.radical_powers
        idempotents = self.idempotents
        if self.dim - self.radical.dim != len(idempotents):
            raise AlgebraError(
                "not a based subalgebra: quotient by the radical has dimension "
                f"{self.dim - self.radical.dim}, expected {len(idempotents)}"
            )

    @cached_property
    def radical(self) -> Subspace:
        """
        J(A) = A ∩ J(B): rows of the echelon basis pivoting at a positive-length path.
        """
        positive = set(self.ambient.indices_of_length(1).tolist())
        radical = Subspace(self.ambient.dim)
        for pivot, row in zip(self.space.pivots, self.space.rows()):
            if pivot in positive:
                radical.add(row)
        return radical

    @cached_property
    def radical_powers(self) -> List[Subspace]:
        """[J, J^2, ..., J^D] where J^D = 0."""
        powers = [self.radical]
        first = self.radical.rows()
        while powers[-1].dim:
            if len(powers) > self.ambient.dim:
                raise AlgebraError("not a based subalgebra: radical is not nilpotent")
            next_power = self._product_span(powers[-1].rows(), first)
            if not powers[-1].contains_space(next_power) or next_power.dim == powers[-1].dim:
                raise AlgebraError("not a based subalgebra: radical is not nilpotent")
            powers.append(next_power)
        return powers

    def radical_power_dims(self) -> List[int]:
        return [self.dim] + [power.dim for power in self.radical_powers]

    @property
    def nilpotency_index(self) -> int:
        return len(self.radical_powers)

    def radical_power(self, r: int) -> Subspace:
        if r <= 0:
            return self.space
        if r > len(self.radical_powers):
            return Subspace(self.ambient.dim)
        return self.radical_powers[r - 1]

    @cached_property
    def vertex_blocks(self) -> List[Tuple[Label, ...]]:
        """
        Partition of the ambient vertices read off the projection of A onto kQ0.

        Raises:
            AlgebraError: If the projection is not spanned by block indicators
        """
        vertices = self.ambient.quiver.vertices
        index = {v: self.ambient.index[Path(v, v)] for v in vertices}
        vertex_coords = set(index.values())
        projection = Subspace(self.ambient.dim)
        for row in self.space.rows():
            projection.add({k: c for k, c in row.items() if k in vertex_coords})
        proj_rows = projection.rows()
        groups: Dict[Tuple[Fraction, ...], List[Label]] = {}
        for v in vertices:
            signature = tuple(row.get(index[v], Fraction(0)) for row in proj_rows)
            if not any(signature):
                raise AlgebraError(f"not a based subalgebra: vertex {v!r} is not covered")
            groups.setdefault(signature, []).append(v)
        blocks = [tuple(group) for group in groups.values()]
        if len(blocks) != projection.dim:
            raise AlgebraError("not a based subalgebra: vertex projection is not split")
        for block in blocks:
            if not self.contains({index[v]: 1 for v in block}):
                raise AlgebraError(
                    f"not a based subalgebra: idempotent of block {block} is not in A"
                )
        return blocks

    @cached_property
    def idempotents(self) -> Dict[Label, Element]:
        """Primitive orthogonal idempotents, keyed by vertex label or glued label."""
        out: Dict[Label, Element] = {}
        for block in self.vertex_blocks:
            label: Label = block[0] if len(block) == 1 else glued_label(block)
            element = self.ambient.zero()
            for v in block:
                element = element + self.ambient.vertex(v)
            out[label] = element
        return out

    @cached_property
    def block_of(self) -> Dict[Label, Label]:
        """Ambient vertex -> label of the idempotent containing it."""
        out: Dict[Label, Label] = {}
        for label, block in zip(self.idempotents, self.vertex_blocks):
            for v in block:
                out[v] = label
        return out

    def peirce(self, r: int) -> Dict[Tuple[Label, Label], Subspace]:
        """
        e J(A)^r f for all pairs of primitive idempotents (missing pairs are zero).

        Idempotents are sums of vertices, so e x f keeps the part of x running
        from e's vertices to f's vertices.
        """
        if r in self._peirce:
            return self._peirce[r]
        pieces: Dict[Tuple[Label, Label], Subspace] = {}
        paths = self.ambient.paths
        for row in self.radical_power(r).rows():
            parts: Dict[Tuple[Label, Label], Dict[int, Fraction]] = {}
            for k, c in row.items():
                key = (self.block_of[paths[k].source], self.block_of[paths[k].target])
                parts.setdefault(key, {})[k] = c
            for key, part in parts.items():
                pieces.setdefault(key, Subspace(self.ambient.dim)).add(part)
        self._peirce[r] = pieces
        return pieces

    def idempotent_label(self, e: Union[Label, Element]) -> Label:
        """
        Resolve an idempotent given by label or element.

        Raises:
            AlgebraError: If the input is not one of A's primitive idempotents
        """
        if isinstance(e, Element):
            if e * e != e:
                raise AlgebraError(f"non-idempotent input: {e!r}")
            for label, element in self.idempotents.items():
                if element == e:
                    return label
            raise AlgebraError(f"{e!r} is not a primitive idempotent of the subalgebra")
        if e not in self.idempotents:
            raise AlgebraError(f"unknown idempotent label {e!r}")
        return e


def _split_units(rows: List[Vector]) -> Tuple[List[int], List[Vector]]:
    units: List[int] = []
    other: List[Vector] = []
    for row in rows:
        if len(row) == 1:
            (k, c), = row.items()
            if c == 1:
                units.append(k)
                continue
        other.append(row)
    return units, other


def radical_power_dims(algebra: Union[PathAlgebra, Subalgebra]) -> List[int]:
    """dim J^r for r = 0, 1, ..., ending with 0."""
    return algebra.radical_power_dims()


def subalgebra_from_spanning_set(
    ambient: PathAlgebra, gens: Sequence[Union[Element, Mapping[int, object]]]
) -> Subalgebra:
    """
    Smallest unital subalgebra containing the generators.

    Raises:
        AlgebraError: If the closure fails the based-subalgebra checks
    """
    space = Subspace(ambient.dim)
    queue: List[Vector] = []
    for item in [ambient.unit()] + list(gens):
        vector = clean(_as_vector(item))
        if space.add(vector):
            queue.append(vector)
    known = list(queue)
    while queue:
        x = Element(ambient, queue.pop())
        for other in list(known):
            y = Element(ambient, other)
            for product in (x * y, y * x):
                if product and space.add(product.coeffs):
                    queue.append(product.coeffs)
                    known.append(product.coeffs)
    return Subalgebra(ambient, space)


def graded_hom_dim(
    algebra: Subalgebra, u: Union[Label, Element], v: Union[Label, Element], layer: int
) -> int:
    """dim u (J^r / J^{r+1}) v for primitive idempotents u, v of the subalgebra."""
    e = algebra.idempotent_label(u)
    f = algebra.idempotent_label(v)
    upper = algebra.peirce(layer).get((e, f))
    lower = algebra.peirce(layer + 1).get((e, f))
    return (upper.dim if upper else 0) - (lower.dim if lower else 0)


def radical_by_trace_form(algebra: Subalgebra) -> Subspace:
    """
    Radical as the kernel of (x, y) -> Tr_B(L_{xy}) on A (characteristic 0).

    Tr_B(L_z) only sees the vertex part of z, and the vertex part of a product is
    the coordinatewise product of the vertex parts.
    """
    ambient = algebra.ambient
    weights = {
        ambient.index[Path(v, v)]: count for v, count in ambient.out_path_counts.items()
    }
    rows = algebra.space.rows()
    vertex_parts = [{k: c for k, c in row.items() if k in weights} for row in rows]
    gram = []
    for left in vertex_parts:
        gram_row = {}
        for j, right in enumerate(vertex_parts):
            value = sum(
                (c * right[k] * weights[k] for k, c in left.items() if k in right), Fraction(0)
            )
            if value:
                gram_row[j] = value
        gram.append(gram_row)
    radical = Subspace(ambient.dim)
    for relation in linear_relations(gram, len(rows)):
        combined: Dict[int, Fraction] = {}
        for index, coeff in relation.items():
            for k, c in rows[index].items():
                combined[k] = combined.get(k, 0) + coeff * c
        radical.add(combined)
    return radical
