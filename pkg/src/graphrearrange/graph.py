"""Finite windows of the four infinite graph families and their boundary operators.

Every graph here stands in for an infinite graph (the grid Z^2, the ladder
N x {0,1}, the line Z, or the infinite d-regular tree).  A vertex is flagged
*interior* when all of its neighbours in the infinite graph are present in the
window, so boundary counts of sets made of interior vertices are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Coord = Tuple[int, int]
Edge = Tuple[int, int]


class Family(str, enum.Enum):
    GRID = "grid"
    LADDER = "ladder"
    PATH = "path"
    TREE = "tree"


class GraphError(ValueError):
    """Invalid graph parameters or malformed graph data."""


class WindowError(ValueError):
    """A query reached the truncated border of a finite window."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with dense integer vertex ids.

    ``coords[v]`` is the lattice point of ``v`` for grid, ladder and path
    graphs.  Tree vertices carry ``(depth, index within level)`` instead, which
    is only used as a stable label for file I/O.
    """

    family: Family
    params: Tuple[int, ...]
    coords: Tuple[Coord, ...]
    adjacency: Tuple[Tuple[int, ...], ...]
    interior: Tuple[bool, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not (len(self.coords) == len(self.adjacency) == len(self.interior)):
            raise GraphError("coords, adjacency and interior differ in length")
        index = {c: v for v, c in enumerate(self.coords)}
        if len(index) != len(self.coords):
            raise GraphError("duplicate vertex coordinates")
        object.__setattr__(self, "_index", index)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def is_lattice(self) -> bool:
        return self.family is not Family.TREE

    def vertex(self, coord: Coord) -> int:
        try:
            return self._index[tuple(coord)]
        except KeyError:
            raise KeyError(f"{coord} is not a vertex of this {self.family.value} window") from None

    def has_coord(self, coord: Coord) -> bool:
        return tuple(coord) in self._index

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[Edge]:
        for u, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if u < w:
                    yield (u, w)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def infinite_degree(self, v: int) -> int:
        """Degree of ``v`` in the infinite graph this window is cut from."""
        if self.family is Family.GRID:
            return 4
        if self.family is Family.PATH:
            return 2
        if self.family is Family.LADDER:
            return 2 if self.coords[v][0] == 0 else 3
        return self.params[0]

    def interior_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.interior[v]]

    def describe(self) -> str:
        return f"{self.family.value}:{','.join(map(str, self.params))}"


def _from_coords(family: Family, params: Tuple[int, ...], coords: Sequence[Coord],
                 steps: Iterable[Coord], infinite_degree) -> Graph:
    index = {c: i for i, c in enumerate(coords)}
    steps = tuple(steps)
    adjacency = []
    for (x, y) in coords:
        nbrs = []
        for dx, dy in steps:
            w = index.get((x + dx, y + dy))
            if w is not None:
                nbrs.append(w)
        adjacency.append(tuple(sorted(nbrs)))
    interior = tuple(len(adjacency[v]) == infinite_degree(coords[v]) for v in range(len(coords)))
    return Graph(family, params, tuple(coords), tuple(adjacency), interior)


_LATTICE_STEPS = ((1, 0), (-1, 0), (0, 1), (0, -1))


def build_grid_window(half_width: int) -> Graph:
    """The window ``|x| <= w, |y| <= w`` of the grid graph (Z^2, l1)."""
    if half_width < 1:
        raise GraphError("grid half_width must be >= 1")
    w = half_width
    coords = [(x, y) for x in range(-w, w + 1) for y in range(-w, w + 1)]
    return _from_coords(Family.GRID, (w,), coords, _LATTICE_STEPS, lambda c: 4)


def build_ladder(length: int) -> Graph:
    """Columns ``0 .. length-1`` of N x {0,1}.  Only the last column is truncated."""
    if length < 1:
        raise GraphError("ladder length must be >= 1")
    coords = [(x, y) for x in range(length) for y in (0, 1)]
    return _from_coords(Family.LADDER, (length,), coords, _LATTICE_STEPS,
                        lambda c: 2 if c[0] == 0 else 3)


def path_offsets(length: int) -> range:
    lo = -((length - 1) // 2)
    return range(lo, lo + length)


def build_path(length: int) -> Graph:
    """``length`` consecutive integers of Z centred at 0 (left-biased for even lengths)."""
    if length < 1:
        raise GraphError("path length must be >= 1")
    coords = [(x, 0) for x in path_offsets(length)]
    return _from_coords(Family.PATH, (length,), coords, ((1, 0), (-1, 0)), lambda c: 2)


def build_regular_tree(degree: int, depth: int) -> Graph:
    """Ball of radius ``depth`` around the root of the infinite ``degree``-regular tree.

    Vertex ids follow breadth-first order: the root is 0, its children are
    1..d, and the children of each later vertex follow in parent order.
    """
    if degree < 3:
        raise GraphError("tree degree must be >= 3")
    if depth < 0:
        raise GraphError("tree depth must be >= 0")
    coords: list[Coord] = [(0, 0)]
    parent: list[Optional[int]] = [None]
    level_start = 0
    for k in range(1, depth + 1):
        level_end = len(coords)
        index = 0
        for p in range(level_start, level_end):
            for _ in range(degree if p == 0 else degree - 1):
                coords.append((k, index))
                parent.append(p)
                index += 1
        level_start = level_end
    adjacency: list[list[int]] = [[] for _ in coords]
    for v, p in enumerate(parent):
        if p is not None:
            adjacency[v].append(p)
            adjacency[p].append(v)
    interior = tuple(c[0] < depth for c in coords)
    return Graph(Family.TREE, (degree, depth), tuple(coords),
                 tuple(tuple(sorted(a)) for a in adjacency), interior)


_ARITY = {"grid": 1, "ladder": 1, "path": 1, "tree": 2}


def build(family: str | Family, *params: int) -> Graph:
    family = Family(family)
    if len(params) != _ARITY[family.value]:
        raise GraphError(f"{family.value} takes {_ARITY[family.value]} parameter(s), got {len(params)}")
    if family is Family.GRID:
        return build_grid_window(*params)
    if family is Family.LADDER:
        return build_ladder(*params)
    if family is Family.PATH:
        return build_path(*params)
    return build_regular_tree(*params)


def _check_interior(g: Graph, a: Iterable[int]) -> frozenset:
    members = frozenset(a)
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex id {v} out of range")
        if not g.interior[v]:
            raise WindowError(
                f"vertex {g.coords[v]} is on the window border; its boundary would be truncated")
    return members


def edge_boundary(g: Graph, a: Iterable[int]) -> list[Edge]:
    """Edges with exactly one endpoint in ``a``, as ``(inside, outside)`` pairs.

    Raises :class:`WindowError` if ``a`` contains a border vertex, since the
    window would silently drop some of its boundary edges.
    """
    members = _check_interior(g, a)
    return [(u, w) for u in sorted(members) for w in g.adjacency[u] if w not in members]


def vertex_boundary(g: Graph, a: Iterable[int]) -> frozenset:
    """Vertices outside ``a`` adjacent to some member of ``a``."""
    members = _check_interior(g, a)
    return frozenset(w for u in members for w in g.adjacency[u] if w not in members)
