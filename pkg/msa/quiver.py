"""
Quivers and Quiver Isomorphisms

Responsibilities:
- Finite directed multigraphs with labelled vertices and arrows
- Type-A quivers from orientation words
- All isomorphisms between two quivers (VF2 backtracking via networkx)
- JSON serialization
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from networkx.algorithms.isomorphism import MultiDiGraphMatcher

from msa.exceptions import QuiverError
from msa.words import BinaryWord

Label = Union[int, str]


def label_key(label: Label) -> Tuple[int, Any]:
    """Total order on mixed int/str labels: integers first."""
    if isinstance(label, int):
        return (0, label)
    return (1, str(label))


def glued_label(labels: Sequence[Label]) -> str:
    """Label of a vertex obtained by gluing several vertices, e.g. '-2+1'."""
    return "+".join(str(label) for label in labels)


@dataclass(frozen=True)
class Arrow:
    """An arrow id: source -> target."""

    id: str
    source: Label
    target: Label


@dataclass(frozen=True)
class Quiver:
    """
    Finite quiver.

    Attributes:
        vertices: Vertex labels in a fixed order
        arrows: Arrows in a fixed order (the enumeration order of paths follows it)
    """

    vertices: Tuple[Label, ...]
    arrows: Tuple[Arrow, ...] = ()
    _arrow_index: Dict[str, Arrow] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError(f"duplicate vertex labels in {self.vertices}")
        vertex_set = set(self.vertices)
        for arrow in self.arrows:
            if arrow.id in self._arrow_index:
                raise QuiverError(f"duplicate arrow id {arrow.id!r}")
            if arrow.source not in vertex_set or arrow.target not in vertex_set:
                raise QuiverError(
                    f"arrow {arrow.id!r} has endpoint outside the vertex set: "
                    f"{arrow.source!r} -> {arrow.target!r}"
                )
            self._arrow_index[arrow.id] = arrow

    def arrow(self, arrow_id: str) -> Arrow:
        try:
            return self._arrow_index[arrow_id]
        except KeyError:
            raise QuiverError(f"unknown arrow {arrow_id!r}") from None

    def has_vertex(self, label: Label) -> bool:
        return label in set(self.vertices)

    def arrows_between(self, source: Label, target: Label) -> List[Arrow]:
        return [a for a in self.arrows if a.source == source and a.target == target]

    def out_arrows(self, vertex: Label) -> List[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def in_arrows(self, vertex: Label) -> List[Arrow]:
        return [a for a in self.arrows if a.target == vertex]

    def arrow_pairs(self) -> List[Tuple[Label, Label]]:
        """Ordered pairs (u, v) with at least one arrow u -> v, in arrow order."""
        pairs: List[Tuple[Label, Label]] = []
        for arrow in self.arrows:
            pair = (arrow.source, arrow.target)
            if pair not in pairs:
                pairs.append(pair)
        return pairs

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows:
            graph.add_edge(arrow.source, arrow.target, key=arrow.id)
        return graph

    def underlying_graph(self) -> nx.Graph:
        """Simple undirected graph (loops and multiplicities dropped)."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(
            (a.source, a.target) for a in self.arrows if a.source != a.target
        )
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return nx.is_weakly_connected(self.to_networkx())

    def is_path_shaped(self) -> bool:
        """True when the underlying graph (with multiplicity) is a path in vertex order."""
        if len(self.arrows) != max(len(self.vertices) - 1, 0):
            return False
        for left, right in zip(self.vertices, self.vertices[1:]):
            if len(self.arrows_between(left, right)) + len(self.arrows_between(right, left)) != 1:
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"id": a.id, "src": a.source, "tgt": a.target}
                for a in sorted(self.arrows, key=lambda a: a.id)
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Quiver":
        try:
            vertices = tuple(data["vertices"])
            arrows = tuple(Arrow(a["id"], a["src"], a["tgt"]) for a in data["arrows"])
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
        return cls(vertices, arrows)


@dataclass(frozen=True)
class VertexMap:
    """
    Bijection between the vertex sets of two quivers, with the induced arrow map.

    Parallel arrows are matched positionally in arrow order.
    """

    pairs: Tuple[Tuple[Label, Label], ...]
    arrow_pairs: Optional[Tuple[Tuple[str, str], ...]] = None

    def __post_init__(self):
        images = [target for _, target in self.pairs]
        if len(set(images)) != len(images):
            raise QuiverError(f"vertex map is not injective: {self.pairs}")

    @property
    def vertex_map(self) -> Dict[Label, Label]:
        return dict(self.pairs)

    @property
    def arrow_map(self) -> Dict[str, str]:
        return dict(self.arrow_pairs or ())

    def __call__(self, vertex: Label) -> Label:
        return self.vertex_map[vertex]

    def image_of_arrow(self, arrow_id: str) -> str:
        if self.arrow_pairs is None:
            raise QuiverError("vertex map carries no arrow map")
        return self.arrow_map[arrow_id]

    def is_identity(self) -> bool:
        return all(source == target for source, target in self.pairs)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": [[str(s), str(t)] for s, t in self.pairs],
            "arrows": [[s, t] for s, t in (self.arrow_pairs or ())],
        }


def induced_arrow_map(q1: Quiver, q2: Quiver, mapping: Mapping[Label, Label]) -> Optional[Dict[str, str]]:
    """Arrow bijection induced by a vertex bijection, or None if multiplicities differ."""
    arrow_map: Dict[str, str] = {}
    for source, target in q1.arrow_pairs():
        left = q1.arrows_between(source, target)
        right = q2.arrows_between(mapping[source], mapping[target])
        if len(left) != len(right):
            return None
        arrow_map.update({a.id: b.id for a, b in zip(left, right)})
    if len(arrow_map) != len(q2.arrows):
        return None
    return arrow_map


def quiver_isomorphisms(q1: Quiver, q2: Quiver) -> List[VertexMap]:
    """
    All isomorphisms q1 -> q2 respecting direction and arrow multiplicity.

    Maps are ordered by the positions of the images in q2's vertex order, so the
    identity comes first when q1 == q2.
    """
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return []
    matcher = MultiDiGraphMatcher(q1.to_networkx(), q2.to_networkx())
    position = {label: index for index, label in enumerate(q2.vertices)}
    found: List[Tuple[Tuple[int, ...], VertexMap]] = []
    for mapping in matcher.isomorphisms_iter():
        arrow_map = induced_arrow_map(q1, q2, mapping)
        if arrow_map is None:
            continue
        key = tuple(position[mapping[v]] for v in q1.vertices)
        vertex_map = VertexMap(
            tuple((v, mapping[v]) for v in q1.vertices),
            tuple((a.id, arrow_map[a.id]) for a in q1.arrows),
        )
        found.append((key, vertex_map))
    found.sort(key=lambda item: item[0])
    return [vertex_map for _, vertex_map in found]


def aut_group(quiver: Quiver) -> List[VertexMap]:
    """Automorphisms of a quiver, identity first."""
    return quiver_isomorphisms(quiver, quiver)


def arrow_id(position: int) -> str:
    """Id of the arrow on the edge between a position and its successor."""
    return f"a{position}"


def word_to_quiver(word: BinaryWord) -> Quiver:
    """
    Type-A quiver of an orientation word.

    Example:
        '+-' gives -1 -> 0 <- 1.
    """
    labels = word.labels()
    arrows = []
    for index, letter in enumerate(word.letters):
        left, right = labels[index], labels[index + 1]
        source, target = (left, right) if letter == 1 else (right, left)
        arrows.append(Arrow(arrow_id(left), source, target))
    return Quiver(tuple(labels), tuple(arrows))


def quiver_key(quiver: Quiver) -> Tuple[Any, ...]:
    """Isomorphism-invariant fingerprint used to prune quiver_isomorphisms calls."""
    degrees = []
    for vertex in quiver.vertices:
        loops = len(quiver.arrows_between(vertex, vertex))
        degrees.append((len(quiver.in_arrows(vertex)), len(quiver.out_arrows(vertex)), loops))
    multiplicities = sorted(
        len(quiver.arrows_between(s, t)) for s, t in quiver.arrow_pairs()
    )
    return (len(quiver.vertices), len(quiver.arrows), tuple(sorted(degrees)), tuple(multiplicities))


def quiver_signature(quiver: Quiver) -> Tuple[Tuple[Any, ...], str]:
    """
    quiver_key plus a Weisfeiler-Lehman hash of the arrow multigraph.

    Equal signatures do not imply isomorphic quivers; different ones rule it out.
    """
    graph = nx.DiGraph()
    for vertex in quiver.vertices:
        loops = len(quiver.arrows_between(vertex, vertex))
        degree = f"{len(quiver.in_arrows(vertex))}/{len(quiver.out_arrows(vertex))}/{loops}"
        graph.add_node(vertex, degree=degree)
    for source, target in quiver.arrow_pairs():
        if source != target:
            graph.add_edge(source, target, count=str(len(quiver.arrows_between(source, target))))
    digest = nx.weisfeiler_lehman_graph_hash(
        graph, node_attr="degree", edge_attr="count", iterations=max(1, len(quiver.vertices))
    )
    return quiver_key(quiver), digest
