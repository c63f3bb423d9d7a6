"""Mod-2 parity calculus on one-component diagrams.

A chord is even when it links an even number of other chords.  ``E_a``
(here ``incidence_set``) is the set of chords linked with ``a``; bunches
are the classes of the relation ``E_a + E_b in {0, {a,b}}``.  The
projection map deletes every odd chord at once; iterating it reaches an
all-even fixed point after ``filtration_index`` steps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import (
    FramedDiagram,
    interlacement,
    label_sort_key,
    unicursal_count,
)
from .errors import MultiComponentError, UnknownChordError, WrongComponentCountError


@dataclass(frozen=True)
class ParityVector:
    """Per-chord parity; ``odd`` and ``even`` partition the chords."""

    odd: frozenset[str]
    even: frozenset[str]

    def is_odd(self, label: str) -> bool:
        if label in self.odd:
            return True
        if label in self.even:
            return False
        raise UnknownChordError(f"no chord {label!r} in parity vector")

    def is_even(self, label: str) -> bool:
        return not self.is_odd(label)


@dataclass(frozen=True)
class BunchPartition:
    """Bunches plus their pairwise linking data.

    ``internally_linked[i]`` is True/False for classes of size >= 2 and
    None for singletons (vacuous).  ``pairing[i][j]`` is the common
    linking value between representatives of classes i and j; the
    diagonal is 0 by convention.
    """

    classes: tuple[frozenset[str], ...]
    internally_linked: tuple[bool | None, ...]
    pairing: tuple[tuple[int, ...], ...]

    def class_of(self, label: str) -> int:
        for i, cls in enumerate(self.classes):
            if label in cls:
                return i
        raise UnknownChordError(f"no chord {label!r} in partition")


def _require_knot(diag: FramedDiagram, what: str) -> None:
    if unicursal_count(diag) != 1:
        raise MultiComponentError(f"{what} is defined only for one component")


def parity_vector(diag: FramedDiagram) -> ParityVector:
    """Chord parities from interlacement row sums (one component only)."""
    _require_knot(diag, "parity")
    matrix = interlacement(diag)
    odd = frozenset(lab for lab in matrix.labels if matrix.degree(lab) % 2)
    even = frozenset(matrix.labels) - odd
    return ParityVector(odd, even)


def incidence_set(diag: FramedDiagram, label: str) -> frozenset[str]:
    """The chords linked with ``label``."""
    _require_knot(diag, "incidence")
    return interlacement(diag).incident(label)


def _bunch_related(ea: frozenset[str], eb: frozenset[str], a: str, b: str) -> bool:
    diff = ea ^ eb
    return not diff or diff == {a, b}


def bunches(diag: FramedDiagram) -> BunchPartition:
    """Partition the chords into bunches with their linking summary."""
    _require_knot(diag, "bunches")
    matrix = interlacement(diag)
    labels = matrix.labels
    inc = {lab: matrix.incident(lab) for lab in labels}
    parent = {lab: lab for lab in labels}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in itertools.combinations(labels, 2):
        if _bunch_related(inc[a], inc[b], a, b):
            parent[find(a)] = find(b)

    groups: dict[str, set[str]] = {}
    for lab in labels:
        groups.setdefault(find(lab), set()).add(lab)
    classes = tuple(
        frozenset(g)
        for g in sorted(
            groups.values(), key=lambda g: min(label_sort_key(x) for x in g)
        )
    )
    flags: list[bool | None] = []
    for cls in classes:
        if len(cls) < 2:
            flags.append(None)
            continue
        a, b = sorted(cls, key=label_sort_key)[:2]
        flags.append(bool(matrix.entry(a, b)))
    reps = [min(cls, key=label_sort_key) for cls in classes]
    size = len(classes)
    pairing = [[0] * size for _ in range(size)]
    for i, j in itertools.combinations(range(size), 2):
        val = matrix.entry(reps[i], reps[j])
        pairing[i][j] = pairing[j][i] = val
    return BunchPartition(classes, tuple(flags), tuple(tuple(r) for r in pairing))


@dataclass(frozen=True)
class OddnessReport:
    """Verdict with a witness on failure: an even chord, or a pair no
    third chord distinguishes."""

    ok: bool
    even_chord: str | None = None
    ambiguous_pair: tuple[str, str] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_irreducibly_odd(diag: FramedDiagram) -> OddnessReport:
    """Every chord odd and every chord pair told apart by a third chord.

    The chordless loop is rejected: with no chords there is nothing odd
    about the diagram and no minimality content.
    """
    _require_knot(diag, "irreducible oddness")
    matrix = interlacement(diag)
    labels = matrix.labels
    if not labels:
        return OddnessReport(False, reason="no chords")
    for lab in labels:
        if matrix.degree(lab) % 2 == 0:
            return OddnessReport(False, even_chord=lab, reason="even chord")
    for a, b in itertools.combinations(labels, 2):
        if not any(
            matrix.entry(a, c) != matrix.entry(b, c)
            for c in labels
            if c not in (a, b)
        ):
            return OddnessReport(
                False, ambiguous_pair=(a, b), reason="indistinguishable pair"
            )
    return OddnessReport(True)


def project_odd(diag: FramedDiagram) -> FramedDiagram:
    """Delete all odd chords at once (never splits the circle)."""
    odd = parity_vector(diag).odd
    word = tuple(lab for lab in diag.components[0] if lab not in odd)
    return FramedDiagram((word,))


def filtration_index(diag: FramedDiagram) -> int:
    """Iterations of project_odd needed to reach an all-even diagram."""
    current = diag
    count = 0
    while parity_vector(current).odd:
        current = project_odd(current)
        count += 1
    return count


def link_crossing_parity(diag: FramedDiagram) -> int:
    """Parity of the chords shared by the two components of a free link."""
    if unicursal_count(diag) != 2:
        raise WrongComponentCountError(
            "link crossing parity needs exactly two components"
        )
    shared = 0
    for lab in diag.chords:
        (c1, _), (c2, _) = diag.occurrences(lab)
        if c1 != c2:
            shared += 1
    return shared % 2
