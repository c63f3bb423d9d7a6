"""Core data model: framed 4-graphs encoded as double-occurrence cyclic words.

A diagram is a finite sequence of components.  Each component is a cyclic
word of chord labels; the empty word is a free loop.  Every label occurs
exactly twice across all components.  Components are considered up to
rotation and reflection, the component sequence up to reordering, and
labels up to renaming; ``canonical_code`` realizes that equality as a
string.

Text format (``parse_gauss`` / ``to_text``): components separated by ``;``,
labels separated by single spaces, a free loop written as ``@``.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    BudgetExceededError,
    GaussSyntaxError,
    LabelCountError,
    UnknownChordError,
)

FREE_LOOP_TOKEN = "@"

#: Largest chord count census() enumerates unless explicitly unlocked;
#: (2n-1)!! pairings are generated before canonical dedup.
CENSUS_LIMIT = 8


def label_sort_key(label: str) -> tuple:
    """Sort numeric labels numerically, all other tokens lexically after."""
    if label.isdigit():
        return (0, int(label), "")
    return (1, 0, label)


@dataclass(frozen=True)
class FramedDiagram:
    """Immutable multi-circle double-occurrence word.

    ``components`` is a tuple of cyclic words (tuples of labels); an empty
    word is a free loop.  Structural equality is tuple equality; equality
    of the underlying framed graphs is ``canonical_code(a) ==
    canonical_code(b)``.
    """

    components: tuple[tuple[str, ...], ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise GaussSyntaxError("a diagram has at least one component")
        counts = Counter(lab for word in self.components for lab in word)
        for lab, cnt in counts.items():
            if not lab or not lab.isalnum():
                raise GaussSyntaxError(f"illegal label {lab!r}")
            if cnt != 2:
                raise LabelCountError(f"label {lab!r} occurs {cnt} times, expected 2")

    @property
    def chords(self) -> tuple[str, ...]:
        """All chord labels, sorted."""
        seen = {lab for word in self.components for lab in word}
        return tuple(sorted(seen, key=label_sort_key))

    @property
    def chord_count(self) -> int:
        return len(self.chords)

    def occurrences(self, label: str) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two (component index, position) occurrences of ``label``."""
        occ = [
            (ci, p)
            for ci, word in enumerate(self.components)
            for p, lab in enumerate(word)
            if lab == label
        ]
        if not occ:
            raise UnknownChordError(f"no chord {label!r} in diagram")
        return occ[0], occ[1]

    def __str__(self) -> str:
        return to_text(self)


def build_diagram(components: Iterable[Iterable[str]]) -> FramedDiagram:
    """Build a FramedDiagram from any nested iterables of labels."""
    return FramedDiagram(tuple(tuple(word) for word in components))


#: The trivial diagram: a single free loop with no chords.
G0 = FramedDiagram(((),))


def parse_gauss(text: str) -> FramedDiagram:
    """Parse the Gauss-code text format.

    Raises GaussSyntaxError for structural problems and LabelCountError
    when a label does not occur exactly twice.
    """
    comps: list[tuple[str, ...]] = []
    for part in text.split(";"):
        tokens = part.split()
        if not tokens:
            raise GaussSyntaxError(
                "empty component (write '@' for a free loop)"
            )
        if tokens == [FREE_LOOP_TOKEN]:
            comps.append(())
            continue
        for tok in tokens:
            if tok == FREE_LOOP_TOKEN:
                raise GaussSyntaxError("'@' must stand alone in its component")
            if not tok.isalnum():
                raise GaussSyntaxError(f"illegal token {tok!r}")
        comps.append(tuple(tokens))
    return FramedDiagram(tuple(comps))


def to_text(diag: FramedDiagram) -> str:
    """Inverse of parse_gauss up to canonical equivalence."""
    return " ; ".join(
        " ".join(word) if word else FREE_LOOP_TOKEN for word in diag.components
    )


def unicursal_count(diag: FramedDiagram) -> int:
    """Number of components, free loops included."""
    return len(diag.components)


@dataclass(frozen=True)
class InterlacementMatrix:
    """Symmetric zero-diagonal matrix over Z2 recording which chords link.

    Two chords link when both lie on the same component and their endpoint
    occurrences alternate around it; chords that span or sit on different
    components never link.
    """

    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def entry(self, a: str, b: str) -> int:
        return self.rows[self._idx(a)][self._idx(b)]

    def incident(self, a: str) -> frozenset[str]:
        """Labels linked with ``a`` (a chord is never incident to itself)."""
        i = self._idx(a)
        return frozenset(
            lab for j, lab in enumerate(self.labels) if self.rows[i][j]
        )

    def degree(self, a: str) -> int:
        return sum(self.rows[self._idx(a)])

    def _idx(self, a: str) -> int:
        try:
            return self.labels.index(a)
        except ValueError:
            raise UnknownChordError(f"no chord {a!r} in matrix") from None


def interlacement(diag: FramedDiagram) -> InterlacementMatrix:
    """Compute the chord interlacement matrix of a diagram."""
    labels = diag.chords
    where: dict[str, list[tuple[int, int]]] = {lab: [] for lab in labels}
    for ci, word in enumerate(diag.components):
        for p, lab in enumerate(word):
            where[lab].append((ci, p))
    n = len(labels)
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if _linked(where[labels[i]], where[labels[j]]):
            rows[i][j] = rows[j][i] = 1
    return InterlacementMatrix(labels, tuple(tuple(r) for r in rows))


def _linked(occ_a: list[tuple[int, int]], occ_b: list[tuple[int, int]]) -> bool:
    (ca1, pa1), (ca2, pa2) = occ_a
    (cb1, pb1), (cb2, pb2) = occ_b
    if not (ca1 == ca2 == cb1 == cb2):
        return False
    lo, hi = min(pa1, pa2), max(pa1, pa2)
    inside = (lo < pb1 < hi) + (lo < pb2 < hi)
    return inside == 1


def _cyclic_variants(word: tuple[str, ...]) -> list[tuple[str, ...]]:
    """All rotations of the word and of its reversal."""
    out = []
    for w in (word, word[::-1]):
        for r in range(len(w)):
            out.append(w[r:] + w[:r])
    return out


def _relabel_encoding(words: tuple[tuple[str, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Encode labels as 1..n in order of first appearance."""
    mapping: dict[str, int] = {}
    out = []
    for word in words:
        enc = []
        for lab in word:
            if lab not in mapping:
                mapping[lab] = len(mapping) + 1
            enc.append(mapping[lab])
        out.append(tuple(enc))
    return tuple(out)


def canonical_code(diag: FramedDiagram) -> str:
    """Deterministic string constant on each equivalence orbit.

    Minimal relabelled encoding over all rotations/reflections of each
    component and all orderings of the non-loop components; free loops
    sort first and labels are forced to decimal 1..n.
    """
    loops = sum(1 for word in diag.components if not word)
    words = [word for word in diag.components if word]
    parts = [FREE_LOOP_TOKEN] * loops
    if words:
        best: tuple[tuple[int, ...], ...] | None = None
        variant_lists = [_cyclic_variants(w) for w in words]
        for order in itertools.permutations(range(len(words))):
            for combo in itertools.product(*(variant_lists[i] for i in order)):
                enc = _relabel_encoding(combo)
                if best is None or enc < best:
                    best = enc
        assert best is not None
        parts.extend(" ".join(str(v) for v in word) for word in best)
    return " ; ".join(parts)


def canonically_equal(a: FramedDiagram, b: FramedDiagram) -> bool:
    """Equality of the underlying framed graphs."""
    return canonical_code(a) == canonical_code(b)


def smooth(diag: FramedDiagram, label: str, kind: str) -> FramedDiagram:
    """Remove chord ``label`` and resplice the strands.

    With both occurrences on one component reading ``v P v Q``, kind "A"
    splits into the two components P and Q while kind "B" joins them into
    the single component P + reversed(Q).  With the occurrences on two
    components ``v P`` and ``v Q``, kind "A" joins into P + Q and kind "B"
    into P + reversed(Q).  Emptied words become free loops.
    """
    if kind not in ("A", "B"):
        raise ValueError(f"smoothing kind must be 'A' or 'B', got {kind!r}")
    (c1, p1), (c2, p2) = diag.occurrences(label)
    comps = list(diag.components)
    if c1 == c2:
        word = comps[c1]
        i, j = sorted((p1, p2))
        part_p = word[i + 1 : j]
        part_q = word[j + 1 :] + word[:i]
        if kind == "A":
            new = (part_p, part_q)
        else:
            new = (part_p + part_q[::-1],)
        return FramedDiagram(tuple(comps[:c1]) + new + tuple(comps[c1 + 1 :]))
    wa, wb = comps[c1], comps[c2]
    part_p = wa[p1 + 1 :] + wa[:p1]
    part_q = wb[p2 + 1 :] + wb[:p2]
    joined = part_p + (part_q if kind == "A" else part_q[::-1])
    rest = [w for ci, w in enumerate(comps) if ci not in (c1, c2)]
    return FramedDiagram((joined,) + tuple(rest))


def _perfect_matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    """All (2n-1)!! pairings, first free point matched to each partner."""
    if not points:
        yield []
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1 :]
        for sub in _perfect_matchings(rest):
            yield [(a, b)] + sub


@functools.lru_cache(maxsize=None)
def census(n: int, limit: int = CENSUS_LIMIT) -> frozenset[str]:
    """Canonical codes of all one-component diagrams with exactly n chords.

    Enumerates every pairing of 2n circle positions and dedups through
    canonical_code.  Guarded by ``limit``; raise the limit explicitly to
    go past CENSUS_LIMIT.
    """
    if n < 0:
        raise ValueError("chord count must be nonnegative")
    if n > limit:
        raise BudgetExceededError(
            f"census({n}) exceeds the guard of {limit} chords"
        )
    if n == 0:
        return frozenset({canonical_code(G0)})
    codes: set[str] = set()
    for matching in _perfect_matchings(tuple(range(2 * n))):
        word: list[str] = [""] * (2 * n)
        for idx, (a, b) in enumerate(matching, start=1):
            word[a] = word[b] = str(idx)
        codes.add(canonical_code(FramedDiagram((tuple(word),))))
    return frozenset(codes)
