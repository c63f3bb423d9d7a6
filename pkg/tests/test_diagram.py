"""Parsing, canonical forms, interlacement, smoothing, census."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from freeknots import (
    G0,
    BudgetExceededError,
    FramedDiagram,
    GaussSyntaxError,
    LabelCountError,
    UnknownChordError,
    canonical_code,
    canonically_equal,
    census,
    build_diagram,
    interlacement,
    parse_gauss,
    smooth,
    to_text,
    unicursal_count,
)
from conftest import census_diagrams, dihedral_pairing_orbits, orbit_equal, random_diagram


# ---------------------------------------------------------------- parsing

def test_parse_two_crossing_word():
    d = parse_gauss("1 2 1 2")
    assert d.components == (("1", "2", "1", "2"),)
    assert d.chord_count == 2


def test_parse_free_loop():
    assert parse_gauss("@") == G0


def test_parse_two_component_link():
    d = parse_gauss("1 ; 1")
    assert d.components == (("1",), ("1",))
    assert unicursal_count(d) == 2


def test_parse_label_count_error():
    with pytest.raises(LabelCountError):
        parse_gauss("1 2 1")


@pytest.mark.parametrize("text", ["", "  ", "1 1 ;", ";", "1 @ 1", "a! a!"])
def test_parse_syntax_errors(text):
    with pytest.raises(GaussSyntaxError):
        parse_gauss(text)


def test_empty_diagram_rejected():
    with pytest.raises(GaussSyntaxError):
        FramedDiagram(())


def test_letter_labels_accepted():
    d = parse_gauss("a b a b")
    assert canonical_code(d) == "1 2 1 2"


# ---------------------------------------------------------------- to_text

def test_round_trip_g0():
    assert to_text(G0) == "@"


@pytest.mark.parametrize("text", ["1 2 1 2", "1 ; 1", "@ ; 1 1", "1 2 3 2 1 3"])
def test_round_trip_canonical(text):
    d = parse_gauss(text)
    assert canonically_equal(parse_gauss(to_text(d)), d)


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(50):
        d = random_diagram(rng, max_chords=6, max_components=3)
        assert canonically_equal(parse_gauss(to_text(d)), d)


# ---------------------------------------------------------- interlacement

def test_interlacement_alternating():
    m = interlacement(parse_gauss("1 2 1 2"))
    assert m.entry("1", "2") == 1


def test_interlacement_nested():
    m = interlacement(parse_gauss("1 1 2 2"))
    assert m.entry("1", "2") == 0


def test_interlacement_cross_component_is_zero():
    m = interlacement(parse_gauss("1 ; 1 2 2"))
    assert m.entry("1", "2") == 0
    assert m.degree("1") == 0 and m.degree("2") == 0


def test_interlacement_symmetric_zero_diagonal():
    rng = random.Random(13)
    for _ in range(30):
        d = random_diagram(rng, max_chords=6)
        m = interlacement(d)
        n = len(m.labels)
        for i in range(n):
            assert m.rows[i][i] == 0
            for j in range(n):
                assert m.rows[i][j] == m.rows[j][i]


def test_interlacement_unknown_chord():
    with pytest.raises(UnknownChordError):
        interlacement(parse_gauss("1 1")).entry("1", "9")


def test_interlacement_invariant_under_canonical_transformations():
    """Rotating, reflecting and relabelling transports the matrix along
    the relabelling without changing any entry."""
    rng = random.Random(17)
    for _ in range(40):
        d = random_diagram(rng, max_chords=6, max_components=2)
        comps = list(d.components)
        rng.shuffle(comps)
        new = []
        for word in comps:
            w = list(word)
            if w:
                r = rng.randrange(len(w))
                w = w[r:] + w[:r]
            if rng.random() < 0.5:
                w = w[::-1]
            new.append(tuple(w))
        table = {lab: f"x{i}" for i, lab in enumerate(sorted(d.chords))}
        moved = FramedDiagram(tuple(tuple(table[x] for x in w) for w in new))
        before = interlacement(d)
        after = interlacement(moved)
        for a in d.chords:
            for b in d.chords:
                if a != b:
                    assert after.entry(table[a], table[b]) == before.entry(a, b)


# -------------------------------------------------------- canonical codes

def test_canonical_relabel_rotate():
    assert canonical_code(parse_gauss("2 1 2 1")) == canonical_code(parse_gauss("1 2 1 2"))


def test_canonical_rotation_merges():
    assert canonical_code(parse_gauss("1 2 2 1")) == canonical_code(parse_gauss("1 1 2 2"))


def test_canonical_distinguishes():
    assert canonical_code(parse_gauss("1 2 1 2")) != canonical_code(parse_gauss("1 1 2 2"))


def test_canonical_free_loops_first():
    code = canonical_code(parse_gauss("1 1 ; @"))
    assert code.startswith("@")


def test_canonical_matches_orbit_oracle_small():
    """canonical_code equality must coincide with exhaustive orbit equality."""
    pool = []
    for n in range(4):
        pool.extend(census_diagrams(n))
    rng = random.Random(3)
    for _ in range(40):
        pool.append(random_diagram(rng, max_chords=3, max_components=2))
    for a in pool:
        for b in pool:
            assert (canonical_code(a) == canonical_code(b)) == orbit_equal(a, b), (
                to_text(a),
                to_text(b),
            )


@st.composite
def diagrams_st(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    m = draw(st.integers(min_value=1, max_value=2))
    tokens = draw(st.permutations([str(i + 1) for i in range(n)] * 2))
    cuts = sorted(
        draw(st.lists(st.integers(0, 2 * n), min_size=m - 1, max_size=m - 1))
    )
    bounds = [0] + cuts + [2 * n]
    return FramedDiagram(
        tuple(tuple(tokens[bounds[i] : bounds[i + 1]]) for i in range(m))
    )


@settings(max_examples=80, deadline=None)
@given(diagrams_st(), st.randoms(use_true_random=False))
def test_canonical_constant_on_orbits(d, rng):
    """Random rotations/reflections/relabellings/reorders keep the code."""
    comps = list(d.components)
    rng.shuffle(comps)
    new = []
    for word in comps:
        w = list(word)
        if w:
            r = rng.randrange(len(w))
            w = w[r:] + w[:r]
        if rng.random() < 0.5:
            w = w[::-1]
        new.append(tuple(w))
    labels = sorted({lab for w in new for lab in w})
    renames = [str(i + 101) for i in range(len(labels))]
    rng.shuffle(renames)
    table = dict(zip(labels, renames))
    transformed = FramedDiagram(
        tuple(tuple(table[lab] for lab in w) for w in new)
    )
    assert canonical_code(transformed) == canonical_code(d)


# ------------------------------------------------------------- smoothing

def test_smooth_kink_both_kinds():
    kink = parse_gauss("1 1")
    assert to_text(smooth(kink, "1", "A")) == "@ ; @"
    assert to_text(smooth(kink, "1", "B")) == "@"


def test_smooth_crossing_pair():
    d = parse_gauss("1 2 1 2")
    assert to_text(smooth(d, "1", "A")) == "2 ; 2"
    assert to_text(smooth(d, "1", "B")) == "2 2"


def test_smooth_join_two_components():
    d = parse_gauss("1 2 1 2 3 ; 3 4 4")
    joined_a = smooth(d, "3", "A")
    joined_b = smooth(d, "3", "B")
    assert unicursal_count(joined_a) == 1
    assert unicursal_count(joined_b) == 1
    assert joined_a.components[0] == ("1", "2", "1", "2", "4", "4")
    assert joined_b.components[0] == ("1", "2", "1", "2", "4", "4")


def test_smooth_unknown_chord():
    with pytest.raises(UnknownChordError):
        smooth(parse_gauss("1 1"), "2", "A")


def test_smooth_bad_kind():
    with pytest.raises(ValueError):
        smooth(parse_gauss("1 1"), "1", "X")


def test_smooth_properties_random():
    """Chord count drops by one; split/join rule for the component count."""
    rng = random.Random(99)
    for _ in range(120):
        d = random_diagram(rng, max_chords=6, max_components=2, min_chords=1)
        v = rng.choice(d.chords)
        (c1, _), (c2, _) = d.occurrences(v)
        a = smooth(d, v, "A")
        b = smooth(d, v, "B")
        assert a.chord_count == d.chord_count - 1
        assert b.chord_count == d.chord_count - 1
        if c1 == c2:
            assert unicursal_count(a) == unicursal_count(d) + 1
            assert unicursal_count(b) == unicursal_count(d)
        else:
            assert unicursal_count(a) == unicursal_count(d) - 1
            assert unicursal_count(b) == unicursal_count(d) - 1


# ---------------------------------------------------------------- census

def test_census_zero_and_one():
    assert census(0) == frozenset({"@"})
    assert census(1) == frozenset({"1 1"})


def test_census_two():
    # oracle: the 3 pairings of 4 points collapse to 2 dihedral orbits
    assert census(2) == frozenset({"1 1 2 2", "1 2 1 2"})


def test_census_sizes_match_orbit_oracle():
    """The oracle counts position pairings up to the dihedral group; the
    n = 6 value is frozen from the same oracle (it takes a few seconds)."""
    for n in range(6):
        assert len(census(n)) == dihedral_pairing_orbits(n)
    assert [len(census(n)) for n in range(7)] == [1, 1, 2, 5, 17, 79, 554]


def test_census_members_are_canonical_one_component():
    for n in range(4):
        for code in census(n):
            d = parse_gauss(code)
            assert unicursal_count(d) == 1
            assert d.chord_count == n
            assert canonical_code(d) == code


def test_census_budget_guard():
    with pytest.raises(BudgetExceededError):
        census(9)


def test_diagram_builder():
    d = build_diagram([["1", "2"], ["2", "1"]])
    assert unicursal_count(d) == 2
