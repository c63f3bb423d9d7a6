"""Shared test helpers: random diagrams and an independent equality oracle."""

from __future__ import annotations

import itertools
import random

import pytest

from freeknots import FramedDiagram, census, parse_gauss


def random_diagram(
    rng: random.Random,
    max_chords: int = 6,
    max_components: int = 2,
    min_chords: int = 0,
) -> FramedDiagram:
    """Uniform-ish random double-occurrence word split into components."""
    n = rng.randint(min_chords, max_chords)
    m = rng.randint(1, max_components)
    tokens = [str(i + 1) for i in range(n)] * 2
    rng.shuffle(tokens)
    cuts = sorted(rng.randint(0, 2 * n) for _ in range(m - 1))
    bounds = [0] + cuts + [2 * n]
    comps = tuple(tuple(tokens[bounds[i] : bounds[i + 1]]) for i in range(m))
    return FramedDiagram(comps)


def _word_variants(word: tuple[str, ...]) -> list[tuple[str, ...]]:
    out = []
    for w in (word, word[::-1]):
        for r in range(max(len(w), 1)):
            out.append(w[r:] + w[:r])
    return out


def orbit_equal(a: FramedDiagram, b: FramedDiagram) -> bool:
    """Exhaustive equality oracle, independent of canonical_code.

    Tries to superpose b onto a: reorder components, rotate/reflect each,
    and rename chords through one consistent bijection.
    """
    ca, cb = list(a.components), list(b.components)
    if sorted(map(len, ca)) != sorted(map(len, cb)):
        return False
    for perm in itertools.permutations(range(len(cb))):
        if [len(cb[i]) for i in perm] != [len(w) for w in ca]:
            continue
        for combo in itertools.product(*[_word_variants(cb[i]) for i in perm]):
            fwd: dict[str, str] = {}
            bwd: dict[str, str] = {}
            ok = True
            for wa, wb in zip(ca, combo):
                for x, y in zip(wa, wb):
                    if fwd.setdefault(y, x) != x or bwd.setdefault(x, y) != y:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def census_diagrams(n: int) -> list[FramedDiagram]:
    return [parse_gauss(code) for code in sorted(census(n))]


def _pairings(points: tuple[int, ...]):
    if not points:
        yield frozenset()
        return
    a = points[0]
    for k in range(1, len(points)):
        b = points[k]
        rest = points[1:k] + points[k + 1 :]
        for sub in _pairings(rest):
            yield sub | {frozenset((a, b))}


def dihedral_pairing_orbits(n: int) -> int:
    """Census oracle: count pairings of 2n circle positions up to the
    dihedral group, never touching words or canonical codes."""
    m = 2 * n
    transforms = [(lambda i, k=k: (i + k) % m) for k in range(m)]
    transforms += [(lambda i, k=k: (k - i) % m) for k in range(m)]
    seen: set[frozenset] = set()
    orbits = 0
    for pairing in _pairings(tuple(range(m))):
        if pairing in seen:
            continue
        orbits += 1
        for t in transforms:
            seen.add(frozenset(frozenset(t(i) for i in pair) for pair in pairing))
    return orbits


@pytest.fixture(scope="session")
def small_census():
    """Parsed census diagrams keyed by chord count, up to 5 chords."""
    return {n: census_diagrams(n) for n in range(6)}
