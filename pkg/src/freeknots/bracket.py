"""The smoothing state sum valued in diagrams modulo the second move only.

For a one-component diagram the bracket smooths every even chord both
ways, keeps the states with exactly one unicursal component, reduces each
through decreasing second moves, and accumulates canonical codes mod 2.
The value is unchanged by all three Reidemeister moves, which turns the
hard equivalence problem into the easy one: diagrams modulo the second
move alone have a unique irreducible representative.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .diagram import (
    FramedDiagram,
    canonical_code,
    smooth,
    unicursal_count,
)
from .errors import BudgetExceededError, MultiComponentError
from .moves import apply, find_r2_del
from .parity import is_irreducibly_odd, parity_vector

#: Even chords smoothed per bracket call unless overridden (2^k states).
DEFAULT_BRACKET_BUDGET = 20

G0_CODE = "@"


@dataclass(frozen=True)
class Z2GClass:
    """A mod-2 set of canonical codes of irreducible one-component diagrams."""

    codes: frozenset[str]

    def serialize(self) -> str:
        """Count line followed by the sorted member codes, newline-joined."""
        return "\n".join([str(len(self.codes))] + sorted(self.codes))

    def __len__(self) -> int:
        return len(self.codes)


def z2g_equal(x: Z2GClass, y: Z2GClass) -> bool:
    return x.codes == y.codes


def reduce_r2(diag: FramedDiagram, rng: random.Random | None = None) -> FramedDiagram:
    """Apply decreasing second moves until none remain.

    The order is irrelevant to the result; pass ``rng`` to randomize it
    (used to check exactly that).
    """
    current = diag
    while True:
        sites = find_r2_del(current)
        if not sites:
            return current
        site = rng.choice(sites) if rng else sites[0]
        current = apply(current, site)


def smoothing_states(
    diag: FramedDiagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> list[FramedDiagram]:
    """All ways of smoothing every even chord of ``diag`` (2^k states)."""
    if unicursal_count(diag) != 1:
        raise MultiComponentError("the bracket needs a one-component diagram")
    evens = sorted(parity_vector(diag).even, key=lambda s: (len(s), s))
    if len(evens) > budget:
        raise BudgetExceededError(
            f"{len(evens)} even chords exceed the budget of {budget}"
        )
    states: list[FramedDiagram] = []

    def descend(state: FramedDiagram, depth: int) -> None:
        if depth == len(evens):
            states.append(state)
            return
        for kind in ("A", "B"):
            descend(smooth(state, evens[depth], kind), depth + 1)

    descend(diag, 0)
    return states


def smoothing_survivors(
    diag: FramedDiagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> list[FramedDiagram]:
    """The smoothing states with exactly one unicursal component."""
    return [s for s in smoothing_states(diag, budget) if unicursal_count(s) == 1]


def bracket(diag: FramedDiagram, budget: int = DEFAULT_BRACKET_BUDGET) -> Z2GClass:
    """The invariant value of a one-component diagram.

    Chord parities are fixed in the input diagram; odd chords are never
    smoothed and survive into every state.
    """
    acc: set[str] = set()
    for state in smoothing_survivors(diag, budget):
        code = canonical_code(reduce_r2(state))
        acc ^= {code}
    return Z2GClass(frozenset(acc))


#: Bracket value of the trivial knot.
G0_CLASS = Z2GClass(frozenset({G0_CODE}))


class Nontriviality(Enum):
    PROVABLY_NONTRIVIAL = "provably_nontrivial"
    INCONCLUSIVE = "inconclusive"


def nontriviality_test(
    diag: FramedDiagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> Nontriviality:
    """Provably nontrivial when the bracket differs from the trivial knot's.

    The converse direction stays inconclusive: a trivial-looking bracket
    proves nothing.
    """
    if z2g_equal(bracket(diag, budget), G0_CLASS):
        return Nontriviality.INCONCLUSIVE
    return Nontriviality.PROVABLY_NONTRIVIAL


@dataclass(frozen=True)
class MinimalityCertificate:
    """Witness that every representative of the knot needs >= chord_count
    chords, and some smoothing of it has exactly chord_count."""

    subject: str
    chord_count: int
    basis: str


@dataclass(frozen=True)
class CertificateRefusal:
    subject: str
    even_chord: str | None
    ambiguous_pair: tuple[str, str] | None
    reason: str


def minimality_certificate(
    diag: FramedDiagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> MinimalityCertificate | CertificateRefusal:
    """Certify chord-count minimality of an irreducibly odd diagram.

    Requires both the oddness property and the bracket fixed point; any
    failure is returned as a refusal carrying the parity witness.
    """
    code = canonical_code(diag)
    report = is_irreducibly_odd(diag)
    if not report:
        return CertificateRefusal(
            code, report.even_chord, report.ambiguous_pair, report.reason
        )
    value = bracket(diag, budget)
    if value.codes != frozenset({code}):
        return CertificateRefusal(
            code, None, None, "bracket is not the diagram itself"
        )
    n = diag.chord_count
    return MinimalityCertificate(
        code,
        n,
        (
            "irreducibly odd and bracket-fixed: every representative of this "
            f"free knot has at least {n} chords and admits a smoothing with "
            f"exactly {n} chords"
        ),
    )
