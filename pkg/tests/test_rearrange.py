import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from graphrearrange.audit import plus_function
from graphrearrange.graph import WindowError, build_grid_window
from graphrearrange.orderings import spiral_ordering
from graphrearrange.rearrange import (INF, LatticeFunction, coarea_l1, grad_energy, grad_lp_norm,
                                      gradient, lp_energy, lp_norm, modified_coarea, parse_p,
                                      rearrange, superlevel_set)

GRID = build_grid_window(5)
SPIRAL = spiral_ordering(GRID)
INTERIOR = [v for v in GRID.interior_vertices()]

values = st.fractions(min_value=Fraction(1, 50), max_value=10, max_denominator=50)
functions = st.dictionaries(st.sampled_from(INTERIOR[:40]), values, max_size=12).map(
    lambda d: LatticeFunction(GRID, d))


@pytest.mark.parametrize("text,expected", [("1", 1), ("2", 2), ("inf", INF), ("3/2", Fraction(3, 2)),
                                           ("1.5", Fraction(3, 2)), (3, 3)])
def test_parse_p(text, expected):
    assert parse_p(text) == expected


@pytest.mark.parametrize("text", ["0", "1/2", "-1", "abc"])
def test_parse_p_rejects(text):
    with pytest.raises(ValueError):
        parse_p(text)


def test_ladder_example_snake(snake):
    f = LatticeFunction.from_coords(snake.graph, {(0, 0): 2, (0, 1): 1, (1, 0): 1})
    fs = rearrange(f, snake)
    assert fs.by_coord() == {(0, 0): 2, (0, 1): 1, (1, 1): 1}
    assert (grad_lp_norm(f, 1), grad_lp_norm(fs, 1)) == (5, 5)
    assert (grad_lp_norm(f, INF), grad_lp_norm(fs, INF)) == (1, 2)


def test_plus_example_spiral(spiral):
    f = LatticeFunction.from_coords(spiral.graph, {(0, 0): 2, (0, 1): 1, (1, 0): 1, (-1, 0): 1,
                                                   (0, -1): 1})
    fs = rearrange(f, spiral)
    assert fs.by_coord() == {(0, 0): 2, (1, 0): 1, (1, 1): 1, (0, 1): 1, (-1, 1): 1}
    assert grad_lp_norm(f, INF) == 1
    assert grad_lp_norm(fs, INF) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 7, Fraction(5, 2)])
def test_plus_energy(n):
    f = plus_function(GRID, n)
    assert grad_energy(f, 2) == 4 * n * n - 8 * n + 16


def test_norms_of_indicator():
    f = LatticeFunction.from_coords(GRID, {(0, 0): 1, (1, 0): 1})
    assert lp_energy(f, 2) == 2
    assert lp_norm(f, 1) == 2
    assert lp_norm(f, INF) == 1
    assert grad_lp_norm(f, 1) == 6
    assert grad_energy(f, 3) == 6
    assert math.isclose(grad_lp_norm(f, 2), math.sqrt(6), rel_tol=1e-15)
    assert math.isclose(grad_lp_norm(f, Fraction(3, 2)), 6 ** (2 / 3), rel_tol=1e-12)


def test_gradient_lists_every_edge_once():
    f = LatticeFunction.from_coords(GRID, {(0, 0): 3})
    assert sorted(gradient(f)) == [3, 3, 3, 3]


def test_zero_function():
    z = LatticeFunction.zero(GRID)
    assert rearrange(z, SPIRAL).values == {}
    assert grad_lp_norm(z, INF) == 0
    assert coarea_l1(z) == 0


def test_support_must_be_interior():
    with pytest.raises(WindowError):
        LatticeFunction.from_coords(GRID, {(5, 5): 1})
    with pytest.raises(ValueError):
        LatticeFunction.from_coords(GRID, {(0, 0): -1})


def test_rearrange_needs_valid_prefix():
    g = build_grid_window(2)
    o = spiral_ordering(g)
    f = LatticeFunction.from_coords(g, {(0, 0): 1, (1, 0): 2})
    with pytest.raises(WindowError):
        rearrange(f, o)


def test_superlevel_rejects_nonpositive():
    with pytest.raises(ValueError):
        superlevel_set(LatticeFunction.zero(GRID), 0)


def test_modified_coarea_needs_unit_max():
    f = LatticeFunction.from_coords(GRID, {(0, 0): 2})
    with pytest.raises(ValueError):
        modified_coarea(f, 2)


@settings(max_examples=60, deadline=None)
@given(functions)
def test_rearrangement_preserves_distribution(f):
    fs = rearrange(f, SPIRAL)
    assert sorted(fs.values.values()) == sorted(f.values.values())
    assert lp_energy(fs, 3) == lp_energy(f, 3)
    assert lp_norm(fs, INF) == lp_norm(f, INF)
    assert rearrange(fs, SPIRAL) == fs


@settings(max_examples=60, deadline=None)
@given(functions, values)
def test_superlevel_sets_of_rearrangement_are_prefixes(f, s):
    level = superlevel_set(rearrange(f, SPIRAL), s)
    assert level == SPIRAL.prefix(len(level))
    assert len(level) == len(superlevel_set(f, s))


@settings(max_examples=60, deadline=None)
@given(functions)
def test_coarea(f):
    assert coarea_l1(f) == grad_lp_norm(f, 1)
    if f.values:
        g = f.scaled(1 / f.max())
        for p in (1, 2, 3):
            assert modified_coarea(g, p) == grad_energy(g, p)
        assert math.isclose(float(modified_coarea(g, Fraction(3, 2))),
                            float(grad_energy(g, Fraction(3, 2))), rel_tol=1e-12)


@settings(max_examples=40, deadline=None)
@given(functions, st.fractions(min_value=Fraction(1, 10), max_value=5, max_denominator=10))
def test_homogeneity(f, t):
    assert grad_lp_norm(f.scaled(t), 1) == t * grad_lp_norm(f, 1)
    assert rearrange(f.scaled(t), SPIRAL) == rearrange(f, SPIRAL).scaled(t)
