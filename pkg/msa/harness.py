"""
Orbit/Isoclass Verification Harness

For one orientation word:
- Build kQ and one representative per separable pair and per arrow
- Orbit partition under Aut(Q); every merge is checked by transporting the
  subalgebra and by a certified isomorphism
- Isoclass partition of the connected representatives by certified testing
- Verdict: pass iff the two partitions agree on connected representatives

Disconnected representatives are partitioned too and any isomorphic pair in
different orbits is noted; they never affect the verdict.
"""

import os
import time
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple

from msa.algebra import Subalgebra, build_path_algebra
from msa.exceptions import SoundnessError
from msa.isomorphism import is_isomorphic
from msa.maxsub import RepresentativeTag, enumerate_representatives, ext_quiver
from msa.orbits import OrbitPartition, check_transport, orbits
from msa.quiver import Label, Quiver, VertexMap, glued_label, quiver_key, word_to_quiver
from msa.words import BinaryWord, all_words
from utils.logging_config import StructuredLogger

PASS = "pass"
FAIL = "fail"


@dataclass
class RepresentativeInfo:
    tag: str
    dim: int
    connected: bool
    ext_quiver: Dict[str, Any]


@dataclass
class VerificationReport:
    """Per-word record; verdict is 'pass' iff orbits and isoclasses agree on connected reps."""

    word: str
    n: int
    reps: List[RepresentativeInfo]
    orbits: List[List[str]]
    isoclasses: List[List[str]]
    verdict: str
    notes: List[str] = field(default_factory=list)
    disconnected_isoclasses: List[List[str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "VerificationReport":
        return cls(
            word=data["word"],
            n=data["n"],
            reps=[RepresentativeInfo(**rep) for rep in data["reps"]],
            orbits=[list(block) for block in data["orbits"]],
            isoclasses=[list(block) for block in data["isoclasses"]],
            verdict=data["verdict"],
            notes=list(data.get("notes", [])),
            disconnected_isoclasses=[list(b) for b in data.get("disconnected_isoclasses", [])],
        )


def negated_label(label: Label) -> Label:
    if isinstance(label, int):
        return -label
    parts = sorted(-int(part) for part in str(label).split("+"))
    return glued_label(parts)


def is_negation(sigma: VertexMap) -> bool:
    return all(target == negated_label(source) for source, target in sigma.pairs)


def _partition_key(blocks: List[List[str]]) -> Set[FrozenSet[str]]:
    return {frozenset(block) for block in blocks}


class WordVerifier:
    """
    Orbit/isoclass comparison for a single word.

    Usage:
        report = WordVerifier(BinaryWord.from_string("+-+")).run()
    """

    def __init__(self, word: BinaryWord):
        self.word = word
        self.quiver: Quiver = word_to_quiver(word)
        self.ambient = build_path_algebra(self.quiver)
        self.reps: List[Tuple[RepresentativeTag, Subalgebra]] = enumerate_representatives(
            self.quiver, self.ambient
        )
        self.by_tag = {tag: algebra for tag, algebra in self.reps}
        self.notes: List[str] = []
        self._ext = {tag: ext_quiver(algebra) for tag, algebra in self.reps}
        self._keys = {
            tag: (algebra.dim, tuple(algebra.radical_power_dims()), quiver_key(self._ext[tag]))
            for tag, algebra in self.reps
        }

    def connected(self, tag: RepresentativeTag) -> bool:
        return self._ext[tag].is_connected()

    def check_orbit_merges(self, partition: OrbitPartition) -> None:
        """
        Raises:
            SoundnessError: If a merge does not transport or is not isomorphic
        """
        for merge in partition.merges:
            source, target = self.by_tag[merge.source], self.by_tag[merge.target]
            check_transport(source, target, merge.sigma)
            certificate = is_isomorphic(source, target)
            if not certificate.is_isomorphic:
                raise SoundnessError(
                    f"{self.word}: {merge.source} and {merge.target} share an orbit "
                    f"but were separated by {certificate.witness}"
                )

    def isoclasses(self, tags: List[RepresentativeTag]) -> List[List[RepresentativeTag]]:
        """Partition by certified isomorphism, comparing against one member per class."""
        classes: List[List[RepresentativeTag]] = []
        for tag in tags:
            for block in classes:
                head = block[0]
                if self._keys[head] != self._keys[tag]:
                    continue
                certificate = is_isomorphic(self.by_tag[head], self.by_tag[tag])
                if certificate.is_isomorphic:
                    self._check_negation(head, tag, certificate.sigma)
                    block.append(tag)
                    break
            else:
                classes.append([tag])
        return classes

    def _check_negation(self, head: RepresentativeTag, tag: RepresentativeTag, sigma: Optional[VertexMap]) -> None:
        if sigma is None or not self.connected(tag):
            return
        if is_negation(sigma) and not self.word.is_symmetric():
            self.notes.append(
                f"negation certificate between {head} and {tag} on a non-symmetric word"
            )

    def run(self) -> VerificationReport:
        # Step 1: orbits and the orbit => isomorphic direction
        tags = [tag for tag, _ in self.reps]
        partition = orbits(self.quiver, tags)
        self.check_orbit_merges(partition)

        # Step 2: isoclasses
        connected = [tag for tag in tags if self.connected(tag)]
        disconnected = [tag for tag in tags if not self.connected(tag)]
        iso_blocks = self.isoclasses(connected)
        loose_blocks = self.isoclasses(disconnected)
        for block in loose_blocks:
            for other in block[1:]:
                if not partition.same_orbit(block[0], other):
                    self.notes.append(
                        f"disconnected pair {block[0]} ≅ {other} in different orbits "
                        "(excluded from the verdict)"
                    )

        # Step 3: compare on connected representatives
        connected_set = set(connected)
        orbit_blocks = [
            [str(tag) for tag in block if tag in connected_set] for block in partition.blocks
        ]
        orbit_blocks = [block for block in orbit_blocks if block]
        iso_strings = [[str(tag) for tag in block] for block in iso_blocks]
        verdict = PASS if _partition_key(orbit_blocks) == _partition_key(iso_strings) else FAIL
        if verdict == FAIL:
            self.notes.append(
                f"orbit partition {orbit_blocks} differs from isoclass partition {iso_strings}"
            )
        if any(note.startswith("negation certificate") for note in self.notes):
            verdict = FAIL

        return VerificationReport(
            word=str(self.word),
            n=self.word.n,
            reps=[
                RepresentativeInfo(
                    tag=str(tag),
                    dim=algebra.dim,
                    connected=self.connected(tag),
                    ext_quiver=self._ext[tag].to_dict(),
                )
                for tag, algebra in self.reps
            ],
            orbits=partition.as_strings(),
            isoclasses=iso_strings,
            verdict=verdict,
            notes=list(self.notes),
            disconnected_isoclasses=[[str(tag) for tag in block] for block in loose_blocks],
        )


def verify_word(word: BinaryWord) -> VerificationReport:
    return WordVerifier(word).run()


def _verify_string(text: str) -> VerificationReport:
    return verify_word(BinaryWord.from_string(text))


def sweep_words(max_n: int) -> List[str]:
    """Every word with 1..max_n vertices, shortest first."""
    return [str(w) for length in range(max_n) for w in all_words(length)]


def iter_verify(words: List[str], workers: Optional[int] = None) -> Iterator[VerificationReport]:
    """Reports in word order; workers=1 runs in-process."""
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        for text in words:
            yield _verify_string(text)
        return
    with Pool(processes=workers) as pool:
        yield from pool.imap(_verify_string, words, chunksize=4)


def verify_theorem(
    max_n: int, workers: Optional[int] = None, logger: Optional[StructuredLogger] = None
) -> List[VerificationReport]:
    """
    Verify every word with up to max_n vertices.

    Raises:
        ValueError: If max_n < 2
        SoundnessError: If an orbit merge fails transport or isomorphism
    """
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    words = sweep_words(max_n)
    if logger:
        logger.log_sweep_start(max_n, len(words))
    reports = []
    started = time.perf_counter()
    last = started
    for report in iter_verify(words, workers):
        now = time.perf_counter()
        if logger:
            logger.log_word_complete(report.word, (now - last) * 1000, report.verdict)
            for note in report.notes:
                logger.log_warning(report.word, "report_note", note)
        last = now
        reports.append(report)
    if logger:
        logger.log_performance("verify_theorem", (time.perf_counter() - started) * 1000)
    return reports
