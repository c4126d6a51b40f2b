"""
Exact Rational Subspaces

Sparse vectors are dicts {coordinate: Fraction}. Row reduction, ranks and
kernels run on sympy's DomainMatrix over QQ. A Subspace keeps the reduced
row-echelon basis keyed by pivot (the smallest coordinate of each row), so two
subspaces are equal iff their row dicts are equal.

A tracked Subspace reduces its generators with an identity block appended, so
every basis row also records the combination of generators it came from.
"""

from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Dict[int, Fraction]
Combination = Dict[Hashable, Fraction]


def clean(vector: Mapping[int, object]) -> Vector:
    return {k: Fraction(v) for k, v in vector.items() if v}  # type: ignore[arg-type]


def _to_qq(value: Fraction) -> Any:
    return QQ(value.numerator, value.denominator)


def _from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(vectors: Sequence[Mapping[int, object]], width: int) -> DomainMatrix:
    """Sparse DomainMatrix over QQ with one row per vector."""
    rows = {}
    for i, vector in enumerate(vectors):
        row = {k: _to_qq(v) for k, v in clean(vector).items()}
        if row:
            rows[i] = row
    return DomainMatrix(rows, (len(vectors), width), QQ)


def from_domain_matrix(matrix: DomainMatrix) -> List[Vector]:
    return [{k: _from_qq(v) for k, v in enumerate(row) if v} for row in matrix.to_list()]


def echelon(vectors: Sequence[Mapping[int, object]], width: int) -> Dict[int, Vector]:
    """Nonzero rows of the reduced row-echelon form, keyed by pivot column."""
    if not vectors or width == 0:
        return {}
    reduced, pivots = to_domain_matrix(vectors, width).rref()
    rows = from_domain_matrix(reduced)
    return {pivot: rows[i] for i, pivot in enumerate(pivots)}


class Subspace:
    """
    Subspace of Q^dim in reduced row-echelon form.

    Args:
        dim: Ambient dimension
        vectors: Initial spanning vectors
        track: Record generator combinations per row (generators are tagged 0, 1, ...)
    """

    def __init__(self, dim: int, vectors: Iterable[Mapping[int, object]] = (), track: bool = False):
        self.ambient_dim = dim
        self.track = track
        self._rows: Dict[int, Vector] = {}
        self._combos: Dict[int, Combination] = {}
        generators = [clean(v) for v in vectors]
        if generators:
            self._rebuild(generators, list(range(len(generators))))

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    @property
    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def rows(self) -> List[Vector]:
        """Basis rows ordered by pivot."""
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def copy(self) -> "Subspace":
        other = Subspace(self.ambient_dim, track=self.track)
        other._rows = {p: dict(row) for p, row in self._rows.items()}
        other._combos = {p: dict(combo) for p, combo in self._combos.items()}
        return other

    def _rebuild(self, vectors: List[Vector], tags: List[Hashable]) -> None:
        """Re-echelonize the current basis together with new tagged generators."""
        current = [self._rows[p] for p in sorted(self._rows)]
        if not self.track:
            self._rows = echelon(current + vectors, self.ambient_dim)
            return
        combos = [self._combos[p] for p in sorted(self._rows)]
        columns: Dict[Hashable, int] = {}
        for tag in [t for combo in combos for t in combo] + tags:
            columns.setdefault(tag, self.ambient_dim + len(columns))
        augmented = [
            {**row, **{columns[t]: c for t, c in combo.items()}}
            for row, combo in zip(current, combos)
        ]
        augmented += [{**vector, columns[tag]: Fraction(1)} for vector, tag in zip(vectors, tags)]
        tag_of = {column: tag for tag, column in columns.items()}
        self._rows, self._combos = {}, {}
        for pivot, row in echelon(augmented, self.ambient_dim + len(columns)).items():
            if pivot >= self.ambient_dim:
                continue
            self._rows[pivot] = {k: v for k, v in row.items() if k < self.ambient_dim}
            self._combos[pivot] = {tag_of[k]: v for k, v in row.items() if k >= self.ambient_dim}

    def reduce(self, vector: Mapping[int, object]) -> Vector:
        """Remainder of a vector modulo the subspace."""
        out = clean(vector)
        for pivot in [p for p in out if p in self._rows]:
            scale = out.get(pivot)
            if not scale:
                continue
            for key, value in self._rows[pivot].items():
                updated = out.get(key, 0) - scale * value
                if updated:
                    out[key] = updated
                else:
                    out.pop(key, None)
        return out

    def contains(self, vector: Mapping[int, object]) -> bool:
        return not self.reduce(vector)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.rows())

    def add(self, vector: Mapping[int, object], tag: Hashable = None) -> bool:
        """
        Add a vector; returns True if the dimension grew.

        With tracking, the vector is recorded as generator `tag`.
        """
        if not self.reduce(vector):
            return False
        self._rebuild([clean(vector)], [tag])
        return True

    def add_all(self, vectors: Iterable[Mapping[int, object]]) -> "Subspace":
        if self.track:
            for vector in vectors:
                self.add(vector)
            return self
        fresh = [clean(v) for v in vectors]
        if fresh:
            self._rebuild(fresh, [None] * len(fresh))
        return self

    def coordinates(self, vector: Mapping[int, object]) -> Combination:
        """
        Express a vector in the tracked generators.

        Raises:
            ValueError: If tracking is off or the vector is outside the span
        """
        if not self.track:
            raise ValueError("coordinates require a tracked subspace")
        if self.reduce(vector):
            raise ValueError("vector is not in the subspace")
        combo: Combination = {}
        for pivot, scale in clean(vector).items():
            if pivot not in self._combos:
                continue
            for key, value in self._combos[pivot].items():
                updated = combo.get(key, 0) + scale * value
                if updated:
                    combo[key] = updated
                else:
                    combo.pop(key, None)
        return combo


def rank(vectors: Iterable[Mapping[int, object]], dim: int) -> int:
    rows = list(vectors)
    if not rows or dim == 0:
        return 0
    return to_domain_matrix(rows, dim).rank()


def linear_relations(vectors: List[Mapping[int, object]], dim: int) -> List[Combination]:
    """
    Basis of the relations sum_k c_k v_k = 0 among the given vectors.

    Each relation is scaled so its largest index has coefficient 1; relations
    are ordered by that index. The keys are indices into `vectors`.
    """
    if not vectors:
        return []
    if dim == 0:
        return [{k: Fraction(1)} for k in range(len(vectors))]
    kernel = to_domain_matrix(vectors, dim).transpose().nullspace()
    relations = []
    for row in from_domain_matrix(kernel):
        lead = row[max(row)]
        relations.append({k: v / lead for k, v in row.items()})
    relations.sort(key=max)
    return relations


def span_sum(first: Subspace, second: Subspace) -> Subspace:
    return first.copy().add_all(second.rows())
