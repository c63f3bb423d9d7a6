"""Enumeration and application of the three Reidemeister moves.

Sites are word-level: an *arc* ``(c, p)`` is the gap of component ``c``
between positions ``p`` and ``(p+1) % len``, an *insertion slot* ``(c, s)``
the gap before position ``s``.  All enumerations are deterministic, and
applying any enumerated site preserves the number of components.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum

from .diagram import FramedDiagram, label_sort_key
from .errors import StaleSiteError


class MoveKind(str, Enum):
    R1_ADD = "R1_ADD"
    R1_DEL = "R1_DEL"
    R2_ADD = "R2_ADD"
    R2_DEL = "R2_DEL"
    R3 = "R3"


PARALLEL = "parallel"
CROSSED = "crossed"


@dataclass(frozen=True)
class MoveSite:
    """One applicable move.

    ``locus`` holds (component, position) pairs whose meaning depends on
    the kind: the two occurrence positions for R1_DEL, witness arcs for
    R2_DEL, the three corner arcs for R3, insertion slots for the ADD
    kinds.  ``variant`` is the chord pattern for R2 ("parallel" or
    "crossed").
    """

    kind: MoveKind
    labels: tuple[str, ...] = ()
    locus: tuple[tuple[int, int], ...] = ()
    variant: str | None = field(default=None)

    def to_text(self) -> str:
        """One-line form: KIND [labels] [variant] @ c:p c:p ..."""
        head = [self.kind.value, *self.labels]
        if self.variant:
            head.append(self.variant)
        spots = " ".join(f"{c}:{p}" for c, p in self.locus)
        return " ".join(head) + " @ " + spots if spots else " ".join(head)

    @classmethod
    def from_text(cls, line: str) -> "MoveSite":
        tokens = line.split()
        if not tokens:
            raise ValueError("empty move-site line")
        kind = MoveKind(tokens[0])
        at = tokens.index("@") if "@" in tokens else len(tokens)
        head = tokens[1:at]
        # labels come first and their count is fixed by the kind, so a
        # chord legally named "parallel" cannot confuse the variant slot
        expected = {
            MoveKind.R1_DEL: 1,
            MoveKind.R2_DEL: 2,
            MoveKind.R3: 3,
            MoveKind.R1_ADD: 0,
            MoveKind.R2_ADD: 0,
        }[kind]
        labels = tuple(head[:expected])
        rest = head[expected:]
        variant = None
        if rest:
            if len(rest) > 1 or rest[0] not in (PARALLEL, CROSSED):
                raise ValueError(f"malformed move-site line {line!r}")
            variant = rest[0]
        locus = []
        for tok in tokens[at + 1 :]:
            c, p = tok.split(":")
            locus.append((int(c), int(p)))
        return cls(kind, labels, tuple(locus), variant)


def _arcs(diag: FramedDiagram) -> list[tuple[int, int, str, str]]:
    """All gaps (component, position, left label, right label), len >= 2."""
    out = []
    for ci, word in enumerate(diag.components):
        size = len(word)
        if size < 2:
            continue
        for p in range(size):
            out.append((ci, p, word[p], word[(p + 1) % size]))
    return out


def _arc_positions(diag: FramedDiagram, c: int, p: int) -> tuple[tuple[int, int], tuple[int, int]]:
    size = len(diag.components[c])
    return (c, p), (c, (p + 1) % size)


def find_r1_del(diag: FramedDiagram) -> list[MoveSite]:
    """One site per chord whose occurrences are cyclically adjacent."""
    sites = []
    seen: set[str] = set()
    for ci, p, x, y in _arcs(diag):
        if x == y and x not in seen:
            seen.add(x)
            sites.append(
                MoveSite(MoveKind.R1_DEL, (x,), _arc_positions(diag, ci, p))
            )
    return sites


def _r2_pairs(diag: FramedDiagram) -> dict[tuple[str, str], list[tuple[int, int, str, str]]]:
    pairs: dict[tuple[str, str], list[tuple[int, int, str, str]]] = {}
    for ci, p, x, y in _arcs(diag):
        if x == y:
            continue
        key = tuple(sorted((x, y), key=label_sort_key))
        pairs.setdefault(key, []).append((ci, p, x, y))
    return pairs


def find_r2_del(diag: FramedDiagram) -> list[MoveSite]:
    """One site per chord pair spanning a bigon.

    A bigon is two position-disjoint arcs both reading the pair; both the
    parallel and the crossed pattern qualify, across any components.
    """
    sites = []
    for (a, b), arcs in sorted(_r2_pairs(diag).items()):
        if len(arcs) < 2:
            continue
        found = None
        for u, v in itertools.combinations(arcs, 2):
            pu = set(_arc_positions(diag, u[0], u[1]))
            pv = set(_arc_positions(diag, v[0], v[1]))
            if pu & pv:
                continue
            variant = PARALLEL if (u[2], u[3]) == (v[3], v[2]) else CROSSED
            found = MoveSite(
                MoveKind.R2_DEL,
                (a, b),
                ((u[0], u[1]), (v[0], v[1])),
                variant,
            )
            break
        if found:
            sites.append(found)
    return sites


def find_r3(diag: FramedDiagram) -> list[MoveSite]:
    """One site per triangle: three disjoint arcs realizing the three pairs.

    Disjointness forces the two arcs meeting each chord onto its two
    different occurrences, which is what a triangle corner at a 4-valent
    vertex requires.
    """
    by_pair = _r2_pairs(diag)
    chords = diag.chords
    sites = []
    for a, b, c in itertools.combinations(chords, 3):
        arcs_ab = by_pair.get((a, b), [])
        arcs_bc = by_pair.get((b, c), [])
        arcs_ca = by_pair.get((a, c), [])
        for u, v, w in itertools.product(arcs_ab, arcs_bc, arcs_ca):
            pu = set(_arc_positions(diag, u[0], u[1]))
            pv = set(_arc_positions(diag, v[0], v[1]))
            pw = set(_arc_positions(diag, w[0], w[1]))
            if pu & pv or pv & pw or pu & pw:
                continue
            sites.append(
                MoveSite(
                    MoveKind.R3,
                    (a, b, c),
                    ((u[0], u[1]), (v[0], v[1]), (w[0], w[1])),
                )
            )
    return sites


def _slots(diag: FramedDiagram) -> list[tuple[int, int]]:
    return [
        (ci, s)
        for ci, word in enumerate(diag.components)
        for s in range(max(len(word), 1))
    ]


def enumerate_add(diag: FramedDiagram) -> list[MoveSite]:
    """All loop additions and all bigon additions (both patterns)."""
    slots = _slots(diag)
    sites = [MoveSite(MoveKind.R1_ADD, (), (slot,)) for slot in slots]
    for s1, s2 in itertools.product(slots, repeat=2):
        for variant in (PARALLEL, CROSSED):
            sites.append(MoveSite(MoveKind.R2_ADD, (), (s1, s2), variant))
    return sites


def find_all_sites(diag: FramedDiagram, include_adds: bool = True) -> list[MoveSite]:
    sites = find_r1_del(diag) + find_r2_del(diag) + find_r3(diag)
    if include_adds:
        sites += enumerate_add(diag)
    return sites


def _fresh_labels(diag: FramedDiagram, count: int) -> list[str]:
    used = {lab for word in diag.components for lab in word}
    fresh = []
    k = 1
    while len(fresh) < count:
        if str(k) not in used:
            fresh.append(str(k))
        k += 1
    return fresh


def _check(cond: bool, why: str) -> None:
    if not cond:
        raise StaleSiteError(why)


def _validate_arc(diag: FramedDiagram, arc: tuple[int, int], pair: set[str]) -> set[tuple[int, int]]:
    c, p = arc
    _check(0 <= c < len(diag.components), "component index out of range")
    word = diag.components[c]
    _check(len(word) >= 2 and 0 <= p < len(word), "arc position out of range")
    q = (p + 1) % len(word)
    _check({word[p], word[q]} == pair, "arc does not read the expected chords")
    return {(c, p), (c, q)}


def apply(diag: FramedDiagram, site: MoveSite) -> FramedDiagram:
    """Apply a move site, validating it against the diagram first."""
    comps = [list(word) for word in diag.components]
    if site.kind == MoveKind.R1_DEL:
        _check(len(site.labels) == 1 and len(site.locus) == 2, "malformed site")
        (lab,) = site.labels
        (c1, p1), (c2, p2) = site.locus
        _check(c1 == c2 and 0 <= c1 < len(comps), "bad component")
        word = comps[c1]
        _check(
            0 <= p1 < len(word)
            and p2 == (p1 + 1) % len(word)
            and word[p1] == word[p2] == lab,
            "loop occurrences not adjacent",
        )
        comps[c1] = [x for x in word if x != lab]
        return FramedDiagram(tuple(tuple(w) for w in comps))

    if site.kind == MoveKind.R2_DEL:
        _check(len(site.labels) == 2 and len(site.locus) == 2, "malformed site")
        a, b = site.labels
        _check(a != b, "bigon needs two distinct chords")
        s1 = _validate_arc(diag, site.locus[0], {a, b})
        s2 = _validate_arc(diag, site.locus[1], {a, b})
        _check(not (s1 & s2), "bigon arcs overlap")
        gone = {a, b}
        new = [[x for x in word if x not in gone] for word in comps]
        return FramedDiagram(tuple(tuple(w) for w in new))

    if site.kind == MoveKind.R3:
        _check(len(site.labels) == 3 and len(site.locus) == 3, "malformed site")
        a, b, c = site.labels
        _check(len({a, b, c}) == 3, "triangle needs three distinct chords")
        spans = [
            _validate_arc(diag, site.locus[0], {a, b}),
            _validate_arc(diag, site.locus[1], {b, c}),
            _validate_arc(diag, site.locus[2], {a, c}),
        ]
        for u, v in itertools.combinations(spans, 2):
            _check(not (u & v), "triangle arcs overlap")
        for ci, p in site.locus:
            word = comps[ci]
            q = (p + 1) % len(word)
            word[p], word[q] = word[q], word[p]
        return FramedDiagram(tuple(tuple(w) for w in comps))

    if site.kind == MoveKind.R1_ADD:
        _check(len(site.locus) == 1, "malformed site")
        c, s = site.locus[0]
        _check(0 <= c < len(comps), "bad component")
        _check(0 <= s < max(len(comps[c]), 1), "slot out of range")
        (fresh,) = _fresh_labels(diag, 1)
        comps[c][s:s] = [fresh, fresh]
        return FramedDiagram(tuple(tuple(w) for w in comps))

    if site.kind == MoveKind.R2_ADD:
        _check(len(site.locus) == 2, "malformed site")
        _check(site.variant in (PARALLEL, CROSSED), "missing chord pattern")
        (c1, s1), (c2, s2) = site.locus
        for c, s in site.locus:
            _check(0 <= c < len(comps), "bad component")
            _check(0 <= s < max(len(comps[c]), 1), "slot out of range")
        x, y = _fresh_labels(diag, 2)
        first = [x, y]
        second = [y, x] if site.variant == PARALLEL else [x, y]
        if c1 == c2 and s1 == s2:
            comps[c1][s1:s1] = first + second
        elif c1 == c2:
            # insert at the later slot first so the earlier index stays valid
            if s1 < s2:
                comps[c1][s2:s2] = second
                comps[c1][s1:s1] = first
            else:
                comps[c1][s1:s1] = first
                comps[c1][s2:s2] = second
        else:
            comps[c1][s1:s1] = first
            comps[c2][s2:s2] = second
        return FramedDiagram(tuple(tuple(w) for w in comps))

    raise StaleSiteError(f"unknown move kind {site.kind!r}")


def random_walk_with_sites(
    diag: FramedDiagram,
    steps: int,
    seed: int,
    max_chords: int = 10,
) -> tuple[list[FramedDiagram], list[MoveSite]]:
    """Seeded equivalence walk; returns the diagrams and the sites taken.

    Each step draws uniformly from the applicable sites; the increasing
    kinds are suppressed once the chord count reaches ``max_chords``.
    """
    rng = random.Random(seed)
    trail = [diag]
    taken: list[MoveSite] = []
    current = diag
    for _ in range(steps):
        include_adds = current.chord_count < max_chords
        sites = find_all_sites(current, include_adds=include_adds)
        if not sites:
            trail.append(current)
            continue
        site = rng.choice(sites)
        current = apply(current, site)
        taken.append(site)
        trail.append(current)
    return trail, taken


def random_walk(
    diag: FramedDiagram,
    steps: int,
    seed: int,
    max_chords: int = 10,
) -> list[FramedDiagram]:
    """Seeded equivalence walk: ``steps + 1`` diagrams of the same knot."""
    trail, _ = random_walk_with_sites(diag, steps, seed, max_chords)
    return trail
