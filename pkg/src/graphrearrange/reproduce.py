"""Recompute every tabulated value and worked example, compare with the published numbers."""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import io as gio
from .audit import (l2_counterexample, polya_szego_suite, random_functions, random_ordering,
                    theorem2_audit, theorem3_audit, theorem4_audit)
from .graph import build_grid_window, build_ladder, build_path, build_regular_tree, edge_boundary
from .isoperimetry import (closed_form_profile, congruent, min_edge_boundary, min_vertex_boundary)
from .orderings import (containment_index, diamond_ordering, lex_ordering, path_ordering,
                        snake_ordering, spiral_ordering, tree_bfs_ordering)
from .rearrange import INF, LatticeFunction, grad_energy, grad_lp_norm, rearrange

P_PENTOMINO = ((0, 0), (1, 0), (1, 1), (0, 1), (-1, 1))
LADDER_F = {(0, 0): 2, (0, 1): 1, (1, 0): 1}
LADDER_FSTAR = {(0, 0): 2, (0, 1): 1, (1, 1): 1}
PLUS_F = {(0, 0): 2, (0, 1): 1, (1, 0): 1, (-1, 0): 1, (0, -1): 1}
PLUS_FSTAR = {(0, 0): 2, (1, 0): 1, (1, 1): 1, (0, 1): 1, (-1, 1): 1}
VERTEX_PROFILE_ROW = (4, 6, 7, 8, 8, 9)
SPIRAL_M_ROW = (8, 11, 14, 15, 18, 19)


def _fmt(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{_fmt(k)}: {_fmt(v)}" for k, v in sorted(value.items())) + "}"
    return str(value)


@dataclass
class Check:
    name: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _checks(seed: int, suite_size: int) -> list[Check]:
    out: list[Check] = []
    add = lambda name, expected, computed: out.append(Check(name, expected, computed))

    grid = build_grid_window(8)
    spiral = spiral_ordering(grid)
    diamond = diamond_ordering(grid)

    pent = frozenset(grid.vertex(c) for c in P_PENTOMINO)
    add("pentomino #boundary_E(A)", 10, len(edge_boundary(grid, pent)))
    res = min_edge_boundary("grid", 5)
    add("pentomino edge-isoperimetric minimum N=5", 10, res.minimum)
    add("pentomino witness congruent to the published set", True,
        congruent(res.witness_coords(), P_PENTOMINO))

    add("profile table vertex profile N=1..6", VERTEX_PROFILE_ROW,
        tuple(min_vertex_boundary("grid", n, 13).minimum for n in range(1, 7)))
    add("profile table spiral containment index M N=1..6", SPIRAL_M_ROW,
        tuple(containment_index(spiral, n) for n in range(1, 7)))
    add("profile table diamond ranks 1..13", (
        (0, 0), (0, 1), (1, 0), (-1, 0), (0, -1), (1, 1), (-1, 1), (0, 2), (2, 0), (1, -1),
        (-2, 0), (-1, -1), (0, -2)), tuple(diamond.coord_at(k) for k in range(1, 14)))

    for n in range(1, 7):
        add(f"grid edge closed form = oracle N={n}",
            closed_form_profile("grid", "edge", n), min_edge_boundary("grid", n).minimum)
        add(f"tree d=3 edge closed form = oracle N={n}",
            closed_form_profile("tree", "edge", n, degree=3),
            min_edge_boundary("tree", n, degree=3).minimum)
        add(f"tree d=3 vertex closed form = oracle N={n}",
            closed_form_profile("tree", "vertex", n, degree=3),
            min_vertex_boundary("tree", n, degree=3).minimum)
    for n in range(1, 9):
        add(f"ladder edge closed form = oracle N={n}",
            closed_form_profile("ladder", "edge", n), min_edge_boundary("ladder", n).minimum)

    ladder = build_ladder(16)
    snake = snake_ordering(ladder)
    f9 = LatticeFunction.from_coords(ladder, LADDER_F)
    f9s = rearrange(f9, snake)
    add("ladder example snake rearrangement", LADDER_FSTAR, f9s.by_coord())
    add("ladder example ||grad f||_1", 5, grad_lp_norm(f9, 1))
    add("ladder example ||grad f*||_1", 5, grad_lp_norm(f9s, 1))
    add("ladder example ||grad f||_inf", 1, grad_lp_norm(f9, INF))
    add("ladder example ||grad f*||_inf", 2, grad_lp_norm(f9s, INF))

    f10 = LatticeFunction.from_coords(grid, PLUS_F)
    f10s = rearrange(f10, spiral)
    add("plus example spiral rearrangement", PLUS_FSTAR, f10s.by_coord())
    add("plus example ||grad f||_inf", 1, grad_lp_norm(f10, INF))
    add("plus example ||grad f*||_inf", 2, grad_lp_norm(f10s, INF))

    for n in range(1, 6):
        plus = LatticeFunction.from_coords(grid, {**{c: 1 for c in PLUS_F}, (0, 0): n})
        add(f"plus-shape energy 4n^2-8n+16 at n={n}", 4 * n * n - 8 * n + 16, grad_energy(plus, 2))
    ce = l2_counterexample(diamond)
    add("center-plus energy of f*", 12, grad_energy(ce.rearranged, 2))
    add("block energy of f", 10, grad_energy(ce.witness, 2))
    add("center-plus ratio^2", Fraction(6, 5), ce.ratio_squared)
    add("spiral L2 ratio >= 1.01", True, l2_counterexample(spiral).ratio >= 1.01)

    t2 = theorem2_audit(spiral, 6)
    add("spiral theorem 2 (alpha, beta) on N<=6", (1, 0), (t2.alpha, t2.beta))
    add("spiral theorem 3 c on N<=6", 2, theorem3_audit(spiral, 6).c)
    add("spiral theorem 4 fails", False, theorem4_audit(spiral, 6).theorem4_holds)
    add("snake theorem 2 (alpha, beta) on N<=8", (1, 0),
        (theorem2_audit(snake, 8).alpha, theorem2_audit(snake, 8).beta))
    lex = lex_ordering(ladder)
    add("lex theorem 2 (alpha, beta) on N<=8", (1, 0),
        (theorem2_audit(lex, 8).alpha, theorem2_audit(lex, 8).beta))
    add("snake theorem 3 c on N<=8", 2, theorem3_audit(snake, 8).c)
    add("lex theorem 3 c on N<=8", 1, theorem3_audit(lex, 8).c)
    path = path_ordering(build_path(31))
    add("path theorem 4 on N<=10", True, theorem4_audit(path, 10).theorem4_holds)
    add("path containment M = N + 2", tuple(n + 2 for n in range(1, 11)),
        tuple(containment_index(path, n) for n in range(1, 11)))
    for d in (3, 4):
        tree = tree_bfs_ordering(build_regular_tree(d, 4))
        add(f"tree-bfs d={d} theorem 4 on N<=8", True, theorem4_audit(tree, 8).theorem4_holds)

    # seeded property suites behind corollaries 1 and 2
    tree = tree_bfs_ordering(build_regular_tree(3, 4))
    fs = random_functions(tree.graph, suite_size, seed, max_support=tree.valid_prefix_len)
    suite = polya_szego_suite(tree, fs, [1, Fraction(3, 2), 2, 3, INF])
    for p, s in suite.items():
        add(f"corollary 1 tree-bfs p={p} violations", 0, s.violations)
    fs = random_functions(ladder, suite_size, seed)
    for o in (snake, lex):
        suite = polya_szego_suite(o, fs, [1, INF])
        for p, s in suite.items():
            add(f"corollary 2 {o.name} p={p} violations", 0, s.violations)

    rng = random.Random(seed)
    small = build_grid_window(4)
    ratios = [l2_counterexample(random_ordering(small, rng)).ratio for _ in range(20)]
    add("proposition: 20 random orderings reach ratio >= 1.01", True, min(ratios) >= 1.01)
    return out


def run(out_dir: str | os.PathLike, seed: int = 0, suite_size: int = 1000,
        echo: Callable[[str], None] = print) -> bool:
    """Write ``checks.csv`` plus supporting tables into ``out_dir``; True iff nothing mismatched."""
    t0 = time.perf_counter()
    os.makedirs(out_dir, exist_ok=True)
    checks = _checks(seed, suite_size)
    gio.write_csv([(c.name, _fmt(c.expected), _fmt(c.computed), "ok" if c.ok else "MISMATCH")
                   for c in checks],
                  ["check", "published", "computed", "status"], os.path.join(out_dir, "checks.csv"))

    grid = build_grid_window(6)
    spiral = spiral_ordering(grid)
    gio.write_csv(
        [(n, min_vertex_boundary("grid", n, 13).minimum, containment_index(spiral, n))
         for n in range(1, 7)],
        ["N", "vertex_profile", "spiral_M"], os.path.join(out_dir, "vertex_profile.csv"))
    gio.write_csv(
        [(n, closed_form_profile("grid", "edge", n), min_edge_boundary("grid", n).minimum)
         for n in range(1, 9)],
        ["N", "closed_form", "oracle"], os.path.join(out_dir, "grid_edge_profile.csv"))

    bad = [c for c in checks if not c.ok]
    for c in checks:
        echo(f"{'ok      ' if c.ok else 'MISMATCH'} {c.name}: "
             f"published={_fmt(c.expected)} computed={_fmt(c.computed)}")
    echo(f"{len(checks) - len(bad)}/{len(checks)} checks match ({time.perf_counter() - t0:.1f}s)")
    return not bad
