"""Jackets, degree computations, and the amplitude exponent."""

from __future__ import annotations

from fractions import Fraction

import pytest

from tensorgraphs.graphs import ColoredGraph, Edge, GraphError, connected_components
from tensorgraphs.jackets import (
    amplitude_exponent,
    boundary_degree,
    canonical_cycle,
    degree_lower_bound,
    enumerate_jackets,
    gurau_degree,
    is_melonic,
)
from tensorgraphs.models import (
    build_dipole,
    build_melon,
    build_necklace,
    build_o,
    build_r1,
    build_tg,
)

from conftest import (
    CLOSED_3COLOR_FIXTURES,
    CLOSED_4COLOR_FIXTURES,
    load_fixture,
)


# -------------------------------------------------------------- cycles

def test_canonical_cycle_normalizes_rotation_and_reversal():
    assert canonical_cycle((2, 3, 0, 1)) == (0, 1, 2, 3)
    assert canonical_cycle((0, 3, 2, 1)) == (0, 1, 2, 3)
    assert canonical_cycle((1, 0, 2, 3)) == (0, 1, 3, 2)
    # idempotent
    assert canonical_cycle((0, 1, 3, 2)) == (0, 1, 3, 2)


# -------------------------------------------------------- enumeration

def test_jacket_count_three_colors():
    assert len(enumerate_jackets(build_dipole(3))) == 1


def test_jacket_count_four_colors():
    assert len(enumerate_jackets(build_melon())) == 3


def test_jacket_count_five_colors():
    assert len(enumerate_jackets(build_dipole(5, base=0))) == 12


def test_jackets_require_closed_graph():
    with pytest.raises(GraphError, match="closed"):
        enumerate_jackets(load_fixture("t1.cg"))


def test_jacket_cycles_are_canonical_and_distinct():
    jackets = enumerate_jackets(build_necklace())
    cycles = [j.cycle for j in jackets]
    assert cycles == sorted(cycles)
    assert len(set(cycles)) == len(cycles)
    assert all(j.cycle == canonical_cycle(j.cycle) for j in jackets)


# ------------------------------------------------------------- degrees

def test_necklace_jacket_profile():
    by_cycle = {j.cycle: j for j in enumerate_jackets(build_necklace())}
    assert len(by_cycle[(0, 1, 2, 3)].faces) == 6
    assert by_cycle[(0, 1, 2, 3)].genus == 0
    assert len(by_cycle[(0, 2, 1, 3)].faces) == 4
    assert by_cycle[(0, 2, 1, 3)].genus == 1
    assert len(by_cycle[(0, 1, 3, 2)].faces) == 6
    assert by_cycle[(0, 1, 3, 2)].genus == 0
    # each face is a 2-bubble of cyclically adjacent colors
    for j in by_cycle.values():
        adjacent = {
            tuple(sorted((j.cycle[i], j.cycle[(i + 1) % len(j.cycle)])))
            for i in range(len(j.cycle))
        }
        assert all(f.colors in adjacent for f in j.faces)


def test_necklace_degree_report():
    rep = gurau_degree(build_necklace())
    assert rep.degree == 1
    assert rep.face_count_degree == 1
    assert rep.amplitude_exponent == Fraction(2)


def test_r1_degree():
    rep = gurau_degree(build_r1())
    assert [j.genus for j in rep.jackets] == [1]
    assert rep.degree == 1
    assert rep.face_count_degree == 1


def test_melon_is_melonic():
    assert gurau_degree(build_melon()).degree == 0
    assert is_melonic(build_melon())
    assert is_melonic(build_dipole(3))
    assert not is_melonic(build_necklace())
    assert not is_melonic(build_r1())


@pytest.mark.parametrize(
    "name",
    [n for n in CLOSED_3COLOR_FIXTURES + CLOSED_4COLOR_FIXTURES if n != "m.cg"],
)
def test_face_formula_agrees_with_jacket_sum(name):
    g = load_fixture(name)
    assert len(connected_components(g)) == 1
    rep = gurau_degree(g)
    assert rep.degree == rep.face_count_degree


def test_degree_is_additive_for_m():
    # m.cg is two disjoint copies of p.cg: jacket genera add up
    m, p = load_fixture("m.cg"), load_fixture("p.cg")
    assert gurau_degree(m).degree == 2 * gurau_degree(p).degree


# ------------------------------------------------------ amplitude exponent

def test_amplitude_exponent_matrix_case():
    for g in range(6):
        assert amplitude_exponent(2, g) == 2 - 2 * g


def test_amplitude_exponent_general_values():
    assert amplitude_exponent(3, 0) == Fraction(3)
    assert amplitude_exponent(3, 1) == Fraction(2)
    assert amplitude_exponent(4, 1) == Fraction(4) - Fraction(2, 6)
    assert amplitude_exponent(5, 3) == Fraction(19, 4)
    assert isinstance(amplitude_exponent(4, 1), Fraction)


# ------------------------------------------------------------ degree bounds

def test_degree_lower_bound_requires_four_colors():
    with pytest.raises(GraphError, match="exactly 4 colors"):
        degree_lower_bound(build_dipole(3))


def test_degree_lower_bound_on_four_color_fixtures():
    for name in CLOSED_4COLOR_FIXTURES:
        g = load_fixture(name)
        assert degree_lower_bound(g) <= gurau_degree(g).degree


def four_colored_o():
    """Close the quartic chi = 0 block with a parallel color-3 matching."""
    o = build_o()
    whites, blacks = sorted(o.whites()), sorted(o.blacks())
    extra = [Edge(f"m{i}", 3, w, b) for i, (w, b) in enumerate(zip(whites, blacks))]
    return ColoredGraph((0, 1, 2, 3), o.vertices, list(o.edges.values()) + extra)


def test_degree_lower_bound_nontrivial_case():
    g4 = four_colored_o()
    rep = gurau_degree(g4)
    bound = degree_lower_bound(g4)
    assert bound == 3
    assert rep.degree == 6
    assert bound <= rep.degree
    assert rep.degree == rep.face_count_degree


# --------------------------------------------------------- open boundary

def test_boundary_degree_requires_open_graph():
    with pytest.raises(GraphError, match="open"):
        boundary_degree(build_dipole(3))


def test_boundary_degree_values():
    assert boundary_degree(build_tg(1)) == 3
    assert boundary_degree(load_fixture("twopoint.cg")) == 0
    assert boundary_degree(load_fixture("l-2-3.cg")) == 3 * (2 + 3)
