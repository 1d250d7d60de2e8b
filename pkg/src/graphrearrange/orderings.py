"""Named vertex orderings and the neighbour-containment index of their prefixes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Tuple

from .graph import Coord, Family, Graph, GraphError, WindowError

# Ranks 1..13 of the nested vertex-isoperimetric minimizers on Z^2, fixed by
# hand.  Later ranks fill each l1 sphere by descending y, then ascending x.
_DIAMOND_HEAD: Tuple[Coord, ...] = (
    (0, 0), (0, 1), (1, 0), (-1, 0), (0, -1),
    (1, 1), (-1, 1), (0, 2), (2, 0), (1, -1), (-2, 0), (-1, -1), (0, -2),
)


class OrderingError(ValueError):
    pass


@dataclass(frozen=True)
class Ordering:
    """A prefix ``v_1, v_2, ...`` of a vertex permutation, stored 0-based.

    ``valid_prefix_len`` is the largest ``N`` such that ``v_1..v_N`` and all
    their neighbours are interior vertices of the window.
    """

    graph: Graph
    ranks: Tuple[int, ...]
    name: str = "custom"
    rank_of: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    valid_prefix_len: int = field(default=0, init=False, compare=False)

    def __post_init__(self):
        rank_of = {}
        for k, v in enumerate(self.ranks, start=1):
            if not 0 <= v < self.graph.n:
                raise OrderingError(f"unknown vertex id {v}")
            if v in rank_of:
                raise OrderingError(f"vertex {self.graph.coords[v]} ranked twice")
            rank_of[v] = k
        object.__setattr__(self, "rank_of", rank_of)
        interior = self.graph.interior
        valid = 0
        for v in self.ranks:
            if not interior[v] or not all(interior[w] for w in self.graph.adjacency[v]):
                break
            valid += 1
        object.__setattr__(self, "valid_prefix_len", valid)

    def __len__(self) -> int:
        return len(self.ranks)

    def vertex_at(self, rank: int) -> int:
        """Vertex id carrying 1-based ``rank``."""
        if not 1 <= rank <= len(self.ranks):
            raise IndexError(f"rank {rank} outside 1..{len(self.ranks)}")
        return self.ranks[rank - 1]

    def coord_at(self, rank: int) -> Coord:
        return self.graph.coords[self.vertex_at(rank)]

    def prefix(self, n: int) -> frozenset:
        return frozenset(self.ranks[:n])


def _truncate(g: Graph, cells: Iterable[Coord], name: str) -> Ordering:
    """Rank window cells along an infinite cell sequence until it first leaves the window."""
    ranks = []
    for c in cells:
        if not g.has_coord(c):
            break
        ranks.append(g.vertex(c))
        if len(ranks) == g.n:
            break
    return Ordering(g, tuple(ranks), name)


def _require(g: Graph, family: Family) -> None:
    if g.family is not family:
        raise OrderingError(f"ordering needs a {family.value} graph, got {g.family.value}")


def spiral_cells() -> Iterator[Coord]:
    """Counterclockwise square spiral from the origin: east first, then turn left when free."""
    x, y = 0, 0
    visited = {(0, 0)}
    yield (0, 0)
    dx, dy = 1, 0
    while True:
        lx, ly = -dy, dx
        if (x + lx, y + ly) not in visited and (x, y) != (0, 0):
            dx, dy = lx, ly
        x, y = x + dx, y + dy
        visited.add((x, y))
        yield (x, y)


def diamond_cells() -> Iterator[Coord]:
    yield from _DIAMOND_HEAD
    for r in itertools.count(3):
        sphere = [(x, y) for y in range(r, -r - 1, -1) for x in range(-r, r + 1)
                  if abs(x) + abs(y) == r]
        yield from sphere


def snake_cells() -> Iterator[Coord]:
    for x in itertools.count():
        yield from ((x, 0), (x, 1)) if x % 2 == 0 else ((x, 1), (x, 0))


def lex_cells() -> Iterator[Coord]:
    for x in itertools.count():
        yield (x, 0)
        yield (x, 1)


def path_cells() -> Iterator[Coord]:
    yield (0, 0)
    for k in itertools.count(1):
        yield (-k, 0)
        yield (k, 0)


def spiral_ordering(g: Graph) -> Ordering:
    _require(g, Family.GRID)
    return _truncate(g, spiral_cells(), "spiral")


def diamond_ordering(g: Graph) -> Ordering:
    _require(g, Family.GRID)
    return _truncate(g, diamond_cells(), "diamond")


def snake_ordering(g: Graph) -> Ordering:
    _require(g, Family.LADDER)
    return _truncate(g, snake_cells(), "snake")


def lex_ordering(g: Graph) -> Ordering:
    _require(g, Family.LADDER)
    return _truncate(g, lex_cells(), "lex")


def path_ordering(g: Graph) -> Ordering:
    _require(g, Family.PATH)
    return _truncate(g, path_cells(), "path")


def tree_bfs_ordering(g: Graph) -> Ordering:
    """Root first, then breadth-first; children of earlier-ranked parents come first."""
    _require(g, Family.TREE)
    root = 0
    ranks = [root]
    seen = {root}
    head = 0
    while head < len(ranks):
        u = ranks[head]
        head += 1
        # within a parent, children in id order (= child index)
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                ranks.append(w)
    return Ordering(g, tuple(ranks), "tree-bfs")


def from_list(g: Graph, vertices: Sequence, name: str = "custom") -> Ordering:
    """Ordering from coordinates (lattice graphs) or vertex ids (any graph)."""
    ranks = []
    for item in vertices:
        if isinstance(item, int):
            if not 0 <= item < g.n:
                raise OrderingError(f"unknown vertex id {item}")
            ranks.append(item)
        else:
            try:
                ranks.append(g.vertex(tuple(item)))
            except KeyError:
                raise OrderingError(f"unknown vertex {tuple(item)}") from None
    return Ordering(g, tuple(ranks), name)


BUILDERS = {
    "spiral": spiral_ordering,
    "diamond": diamond_ordering,
    "snake": snake_ordering,
    "lex": lex_ordering,
    "path": path_ordering,
    "tree-bfs": tree_bfs_ordering,
}


def named_ordering(g: Graph, name: str) -> Ordering:
    try:
        return BUILDERS[name](g)
    except KeyError:
        raise OrderingError(f"unknown ordering {name!r}; choose from {sorted(BUILDERS)}") from None


def containment_index(o: Ordering, n: int) -> int:
    """Smallest ``M`` such that every neighbour of ``v_1..v_n`` has rank at most ``M``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > o.valid_prefix_len:
        raise WindowError(
            f"n={n} exceeds the valid prefix length {o.valid_prefix_len}; enlarge the window")
    g = o.graph
    m = n
    for v in o.ranks[:n]:
        for w in g.adjacency[v]:
            r = o.rank_of.get(w)
            if r is None:
                raise WindowError(f"neighbour {g.coords[w]} of the prefix is unranked")
            m = max(m, r)
    return m
