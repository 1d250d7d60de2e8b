"""Plain-text formats for graphs, orderings and functions.

Graph files::

    grid 4              # family and parameters
    0 -4 -4 0           # id x y interior   (trees: id depth index interior)
    ...
    0 1                 # id id, one line per edge

Orderings are CSV ``rank,x,y`` (trees: ``rank,vertex_id``) and functions are
CSV ``x,y,value`` (trees: ``vertex_id,value``).  Readers also accept
whitespace-separated columns and skip ``#`` comments and a header line.
Values are exact rationals written as ``num/den`` or decimals.
"""

from __future__ import annotations

import csv
import io
import os
from fractions import Fraction
from typing import IO, Iterator, Union

from .graph import Family, Graph, GraphError, build
from .orderings import Ordering, from_list
from .rearrange import LatticeFunction

PathLike = Union[str, os.PathLike]


def parse_graph_spec(text: str) -> Graph:
    """``grid:W``, ``ladder:L``, ``path:L`` or ``tree:D,H``."""
    try:
        family, _, rest = text.partition(":")
        params = [int(t) for t in rest.replace(",", " ").split()]
        return build(Family(family.strip().lower()), *params)
    except (ValueError, TypeError) as exc:
        raise GraphError(f"bad graph spec {text!r}: {exc}") from None


def _rows(handle: IO[str]) -> Iterator[list[str]]:
    for raw in handle:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield [t for t in line.replace(",", " ").split()]


def _data_rows(handle: IO[str]) -> Iterator[list[str]]:
    first = True
    for row in _rows(handle):
        if first and not _is_number(row[0]):
            first = False
            continue
        first = False
        yield row


def _is_number(token: str) -> bool:
    try:
        Fraction(token)
    except ValueError:
        return False
    return True


def _open(target, mode):
    if hasattr(target, "read") or hasattr(target, "write"):
        return _NoClose(target)
    return open(target, mode, newline="" if "w" in mode else None, encoding="utf-8")


class _NoClose:
    def __init__(self, handle):
        self.handle = handle

    def __enter__(self):
        return self.handle

    def __exit__(self, *exc):
        return False


# --- graphs ---------------------------------------------------------------------

def dump_graph(g: Graph) -> str:
    lines = [" ".join([g.family.value, *map(str, g.params)])]
    for v, (x, y) in enumerate(g.coords):
        lines.append(f"{v} {x} {y} {int(g.interior[v])}")
    lines.extend(f"{u} {w}" for u, w in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    rows = list(_rows(io.StringIO(text)))
    if not rows:
        raise GraphError("empty graph file")
    family = Family(rows[0][0])
    params = tuple(int(t) for t in rows[0][1:])
    coords, interior, edges = [], [], []
    for row in rows[1:]:
        nums = [int(t) for t in row]
        if len(nums) == 4:
            if nums[0] != len(coords):
                raise GraphError(f"vertex ids must be dense and ordered, got {nums[0]}")
            coords.append((nums[1], nums[2]))
            interior.append(bool(nums[3]))
        elif len(nums) == 2:
            edges.append(tuple(nums))
        else:
            raise GraphError(f"cannot parse graph line {' '.join(row)!r}")
    adjacency = [set() for _ in coords]
    for u, w in edges:
        if u == w or not (0 <= u < len(coords) and 0 <= w < len(coords)):
            raise GraphError(f"bad edge {u} {w}")
        adjacency[u].add(w)
        adjacency[w].add(u)
    return Graph(family, params, tuple(coords), tuple(tuple(sorted(a)) for a in adjacency),
                 tuple(interior))


def write_graph(g: Graph, target) -> None:
    with _open(target, "w") as fh:
        fh.write(dump_graph(g))


def read_graph(source) -> Graph:
    with _open(source, "r") as fh:
        return load_graph(fh.read())


# --- orderings ------------------------------------------------------------------

def write_ordering(o: Ordering, target) -> None:
    with _open(target, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if o.graph.is_lattice:
            w.writerow(["rank", "x", "y"])
            for k, v in enumerate(o.ranks, start=1):
                w.writerow([k, *o.graph.coords[v]])
        else:
            w.writerow(["rank", "vertex_id"])
            for k, v in enumerate(o.ranks, start=1):
                w.writerow([k, v])


def read_ordering(g: Graph, source, name: str = "file") -> Ordering:
    with _open(source, "r") as fh:
        rows = list(_data_rows(fh))
    rows.sort(key=lambda r: int(r[0]))
    if [int(r[0]) for r in rows] != list(range(1, len(rows) + 1)):
        raise ValueError("ordering ranks must be 1..n without gaps")
    if g.is_lattice:
        items = [(int(r[1]), int(r[2])) for r in rows]
    else:
        items = [int(r[1]) for r in rows]
    return from_list(g, items, name)


# --- functions ------------------------------------------------------------------

def write_function(f: LatticeFunction, target) -> None:
    with _open(target, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        if f.graph.is_lattice:
            w.writerow(["x", "y", "value"])
            for v, val in sorted(f.values.items(), key=lambda kv: f.graph.coords[kv[0]]):
                w.writerow([*f.graph.coords[v], str(val)])
        else:
            w.writerow(["vertex_id", "value"])
            for v, val in f.values.items():
                w.writerow([v, str(val)])


def read_function(g: Graph, source) -> LatticeFunction:
    values = {}
    with _open(source, "r") as fh:
        for row in _data_rows(fh):
            if g.is_lattice:
                v = g.vertex((int(row[0]), int(row[1])))
                val = Fraction(row[2])
            else:
                v = int(row[0])
                val = Fraction(row[1])
            if v in values:
                raise ValueError(f"vertex {g.coords[v]} listed twice")
            values[v] = val
    return LatticeFunction(g, values)


def write_csv(rows, header, target) -> None:
    with _open(target, "w") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
