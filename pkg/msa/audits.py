"""
Structural Audits

Checks every representative of a word against the structure a maximal
subalgebra A of B must have:

- dim A = dim B - 1
- J(A) = A ∩ J(B), equal to the trace-form radical, and nilpotent
- J(B)^2 ⊆ J(A) ⊆ J(B) and J(B)^2 ⊆ A
- split representatives: for all vertex pairs (w, x)
  dim w(J(A)/J(A)^2)x = dim w(J(A)/J(B)^2)x + dim w(J(B)^2/J(A)^2)x
- split representatives: the Ext quiver has dim u kQ1 v - 1 arrows u -> v
"""

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, Iterable, List, Optional

from msa.algebra import Path, PathAlgebra, Subalgebra, build_path_algebra, radical_by_trace_form
from msa.linalg import Subspace
from msa.maxsub import SplitSpec, build_split, enumerate_representatives, ext_quiver
from msa.quiver import word_to_quiver
from msa.words import BinaryWord, all_words

CHECKS = (
    "dimension",
    "radical_intersection",
    "trace_form_radical",
    "radical_square_contained",
    "radical_in_ambient_radical",
    "ambient_radical_square_in_algebra",
    "peirce_identity",
    "split_arrow_count",
)


@dataclass
class AuditResult:
    """Violation counts per check over a set of representatives."""

    words: int = 0
    representatives: int = 0
    violations: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in CHECKS})
    examples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    def record(self, check: str, detail: str) -> None:
        self.violations[check] += 1
        if len(self.examples) < 20:
            self.examples.append(f"{check}: {detail}")

    def merge(self, other: "AuditResult") -> None:
        self.words += other.words
        self.representatives += other.representatives
        for name, count in other.violations.items():
            self.violations[name] += count
        self.examples.extend(other.examples[: max(0, 20 - len(self.examples))])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "words": self.words,
            "representatives": self.representatives,
            "violations": dict(self.violations),
            "examples": list(self.examples),
            "passed": self.passed,
        }


def _ambient_radical_square(ambient: PathAlgebra) -> Subspace:
    return Subspace(ambient.dim, ({k: 1} for k in ambient.indices_of_length(2).tolist()))


def _restrict(space: Subspace, ambient: PathAlgebra, source: Any, target: Any) -> Subspace:
    """Part of a path-supported subspace running from source to target vertex."""
    out = Subspace(ambient.dim)
    for row in space.rows():
        part = {
            k: c for k, c in row.items()
            if ambient.paths[k].source == source and ambient.paths[k].target == target
        }
        if part:
            out.add(part)
    return out


def peirce_identity_violations(algebra: Subalgebra) -> List[str]:
    """Vertex pairs where the split Peirce dimension identity fails."""
    ambient = algebra.ambient
    radical = algebra.radical_power(1)
    radical_sq = algebra.radical_power(2)
    ambient_sq = _ambient_radical_square(ambient)
    failures = []
    for w in ambient.quiver.vertices:
        for x in ambient.quiver.vertices:
            j1 = _restrict(radical, ambient, w, x)
            j2 = _restrict(radical_sq, ambient, w, x)
            b2 = _restrict(ambient_sq, ambient, w, x)
            top = j1.dim - j2.dim
            first = j1.copy().add_all(b2.rows()).dim - b2.dim
            second = b2.copy().add_all(j2.rows()).dim - j2.dim
            if top != first + second or not j1.contains_space(b2) or not b2.contains_space(j2):
                failures.append(f"({w}, {x})")
    return failures


def audit_split_arrow_counts(ambient: PathAlgebra, spec: SplitSpec) -> bool:
    """Ext quiver of A(u, v, U) has exactly dim u kQ1 v - 1 arrows u -> v."""
    algebra = build_split(ambient, spec)
    expected = len(spec.arrows(ambient.quiver)) - 1
    return len(ext_quiver(algebra).arrows_between(spec.u, spec.v)) == expected


def audit_word(word: BinaryWord) -> AuditResult:
    """Run every structural check on every representative of one word."""
    result = AuditResult(words=1)
    quiver = word_to_quiver(word)
    ambient = build_path_algebra(quiver)
    ambient_sq = _ambient_radical_square(ambient)
    vertex_indices = {ambient.index[Path(v, v)] for v in quiver.vertices}
    for tag, algebra in enumerate_representatives(quiver, ambient):
        result.representatives += 1
        name = f"{word} {tag}"
        if algebra.dim != ambient.dim - 1:
            result.record("dimension", name)
        radical = algebra.radical
        if any(k in vertex_indices for row in radical.rows() for k in row):
            result.record("radical_in_ambient_radical", name)
        if radical_by_trace_form(algebra) != radical:
            result.record("trace_form_radical", name)
        intersection = Subspace(ambient.dim)
        for row in algebra.space.rows():
            if not any(k in vertex_indices for k in row):
                intersection.add(row)
        if not radical.contains_space(intersection) or not intersection.contains_space(radical):
            result.record("radical_intersection", name)
        if algebra.radical_powers[-1].dim != 0:
            result.record("radical_intersection", f"{name} (not nilpotent)")
        if not radical.contains_space(ambient_sq):
            result.record("radical_square_contained", name)
        if not algebra.space.contains_space(ambient_sq):
            result.record("ambient_radical_square_in_algebra", name)
        if tag.kind == "split":
            for pair in peirce_identity_violations(algebra):
                result.record("peirce_identity", f"{name} {pair}")
            if not audit_split_arrow_counts(ambient, tag.spec):
                result.record("split_arrow_count", name)
    return result


def _audit_string(text: str) -> AuditResult:
    return audit_word(BinaryWord.from_string(text))


def audit_corpus(max_len: int, workers: Optional[int] = 1, words: Optional[Iterable[BinaryWord]] = None) -> AuditResult:
    """Audit every word of length 0..max_len (or the given words)."""
    chosen = list(words) if words is not None else [
        w for length in range(max_len + 1) for w in all_words(length)
    ]
    total = AuditResult()
    texts = [str(w) for w in chosen]
    if workers == 1:
        results: Iterable[AuditResult] = map(_audit_string, texts)
        for result in results:
            total.merge(result)
        return total
    with Pool(processes=workers) as pool:
        for result in pool.imap(_audit_string, texts, chunksize=8):
            total.merge(result)
    return total
