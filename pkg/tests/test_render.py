import re

import pytest

from graphrearrange.graph import build_grid_window, build_regular_tree
from graphrearrange.orderings import spiral_ordering
from graphrearrange.render import RenderError, heatmap_svg, ordering_svg
from graphrearrange.rearrange import LatticeFunction

G = build_grid_window(2)
PLUS = LatticeFunction.from_coords(G, {(0, 0): 2, (0, 1): 1, (1, 0): 1, (-1, 0): 1, (0, -1): 1})


def test_heatmap_is_deterministic():
    assert heatmap_svg(PLUS) == heatmap_svg(LatticeFunction(G, dict(PLUS.values)))


def test_center_is_brightest():
    svg = heatmap_svg(PLUS)
    fills = re.findall(r'fill="#([0-9a-f]{6})"><title>(\S+)</title>', svg)
    assert sorted(fills) == [("808080", "1")] * 4 + [("ffffff", "2")]


def test_empty_function_has_axes_only():
    svg = heatmap_svg(LatticeFunction.zero(G))
    assert svg.count("<line") == 2
    assert "<title>1</title>" not in svg


def test_spiral_labels_at_lattice_positions():
    o = spiral_ordering(build_grid_window(3))
    svg = ordering_svg(o, 16)
    labels = re.findall(r'<text x="(\d+)" y="(\d+)"[^>]*>(\d+)</text>', svg)
    assert len(labels) == 16
    pos = {int(k): (int(x), int(y)) for x, y, k in labels}
    # rank 2 sits one cell right of rank 1, rank 4 one cell above it
    assert pos[2][0] - pos[1][0] == 40 and pos[2][1] == pos[1][1]
    assert pos[1][1] - pos[4][1] == 40 and pos[4][0] == pos[1][0]


def test_trees_are_rejected():
    with pytest.raises(RenderError):
        heatmap_svg(LatticeFunction.zero(build_regular_tree(3, 2)))
