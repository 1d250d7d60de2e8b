"""Finitely supported functions on graph windows, rearrangement, gradient norms, coarea."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .graph import Coord, Graph, WindowError, edge_boundary
from .orderings import Ordering

INF = math.inf
Exponent = Union[int, Fraction, float]
Value = Fraction


def parse_p(text: str | Exponent) -> Exponent:
    """``"inf"`` -> ``math.inf``; ``"3/2"`` and ``"1.5"`` -> ``Fraction(3, 2)``; integers stay ints."""
    if isinstance(text, (int, Fraction)) or text == INF:
        p = text
    elif isinstance(text, float):
        p = Fraction(text).limit_denominator(10**6)
    else:
        t = str(text).strip().lower()
        p = INF if t in ("inf", "infinity", "oo") else Fraction(t)
    if p != INF:
        p = Fraction(p)
        if p.denominator == 1:
            p = int(p)
    if p < 1:
        raise ValueError(f"exponent must be >= 1, got {text}")
    return p


def _is_integer(p: Exponent) -> bool:
    return p != INF and Fraction(p).denominator == 1


@dataclass(frozen=True)
class LatticeFunction:
    """Nonnegative rational function with finite support on a graph window.

    Only positive values are stored.  Support vertices must be interior so
    that every gradient term of the infinite graph is visible in the window.
    """

    graph: Graph
    values: Mapping[int, Fraction]
    support: frozenset = field(init=False, compare=False)

    def __post_init__(self):
        clean = {}
        for v, val in self.values.items():
            val = Fraction(val)
            if val < 0:
                raise ValueError(f"negative value {val} at vertex {v}")
            if val == 0:
                continue
            if not 0 <= v < self.graph.n:
                raise ValueError(f"vertex id {v} out of range")
            if not self.graph.interior[v]:
                raise WindowError(
                    f"support vertex {self.graph.coords[v]} lies on the window border")
            clean[v] = val
        object.__setattr__(self, "values", dict(sorted(clean.items())))
        object.__setattr__(self, "support", frozenset(clean))

    @classmethod
    def from_coords(cls, g: Graph, values: Mapping[Coord, object]) -> "LatticeFunction":
        return cls(g, {g.vertex(c): Fraction(val) for c, val in values.items()})

    @classmethod
    def zero(cls, g: Graph) -> "LatticeFunction":
        return cls(g, {})

    def __call__(self, v: int) -> Fraction:
        return self.values.get(v, Fraction(0))

    def at(self, coord: Coord) -> Fraction:
        return self(self.graph.vertex(coord))

    def max(self) -> Fraction:
        return max(self.values.values(), default=Fraction(0))

    def scaled(self, factor) -> "LatticeFunction":
        factor = Fraction(factor)
        return LatticeFunction(self.graph, {v: val * factor for v, val in self.values.items()})

    def by_coord(self) -> dict:
        return {self.graph.coords[v]: val for v, val in self.values.items()}


def rearrange(f: LatticeFunction, o: Ordering) -> LatticeFunction:
    """Place the k-th largest value of ``f`` on the vertex of rank k."""
    if o.graph is not f.graph and o.graph != f.graph:
        raise ValueError("function and ordering live on different graphs")
    k = len(f.support)
    if k > o.valid_prefix_len:
        raise WindowError(
            f"support of size {k} exceeds the ordering's valid prefix {o.valid_prefix_len}")
    # a sorted multiset makes f* independent of how ties in f are visited
    ordered = sorted(f.values.values(), reverse=True)
    return LatticeFunction(f.graph, dict(zip(o.ranks, ordered)))


def _power_sum(diffs: Iterable[Fraction], p: Exponent):
    if _is_integer(p):
        return sum((d ** int(p) for d in diffs), Fraction(0))
    return math.fsum(float(d) ** float(p) for d in diffs)


def _root(total, p: Exponent):
    if p == 1:
        return total
    return float(total) ** (1.0 / float(p))


def lp_energy(f: LatticeFunction, p: Exponent):
    """``sum_v f(v)^p``; exact for integer ``p``."""
    if p == INF:
        raise ValueError("energy is undefined for p = inf")
    return _power_sum(f.values.values(), p)


def lp_norm(f: LatticeFunction, p: Exponent):
    """Exact ``Fraction`` for p in {1, inf}, float otherwise."""
    if p == INF:
        return f.max()
    return _root(lp_energy(f, p), p)


def gradient(f: LatticeFunction) -> list[Fraction]:
    """``|f(v) - f(w)|`` for each edge touching the support, each edge once."""
    g = f.graph
    vals = f.values
    out = []
    for u in sorted(f.support):
        fu = vals[u]
        for w in g.adjacency[u]:
            if w in vals:
                if u < w:
                    out.append(abs(fu - vals[w]))
            else:
                out.append(fu)
    return out


def grad_energy(f: LatticeFunction, p: Exponent):
    """``sum_{edges} |f(v) - f(w)|^p``; exact for integer ``p``."""
    if p == INF:
        raise ValueError("energy is undefined for p = inf")
    return _power_sum(gradient(f), p)


def grad_lp_norm(f: LatticeFunction, p: Exponent):
    """``||grad f||_p``.  Exact ``Fraction`` for p in {1, inf}, float otherwise."""
    if p == INF:
        return max(gradient(f), default=Fraction(0))
    return _root(grad_energy(f, p), p)


def superlevel_set(f: LatticeFunction, s) -> frozenset:
    """``{v : f(v) >= s}`` for ``s > 0``."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("superlevel sets with s <= 0 are infinite")
    return frozenset(v for v, val in f.values.items() if val >= s)


def _levels(f: LatticeFunction) -> list[Fraction]:
    return [Fraction(0)] + sorted(set(f.values.values()))


def coarea_l1(f: LatticeFunction) -> Fraction:
    """Integral over ``s`` of ``#boundary{f >= s}``, summed exactly level by level."""
    levels = _levels(f)
    total = Fraction(0)
    for lo, hi in zip(levels, levels[1:]):
        # {f >= s} is constant for s in (lo, hi]
        total += (hi - lo) * len(edge_boundary(f.graph, superlevel_set(f, hi)))
    return total


def modified_coarea(f: LatticeFunction, p: Exponent):
    """``p * int_0^1 sum_{e in boundary{f>=s}} |grad min(f, s)(e)|^(p-1) ds`` for ``max f = 1``.

    Between consecutive distinct values of ``f`` the boundary edge set is fixed
    and each edge with lower endpoint value ``a`` integrates
    ``p (s - a)^(p-1)`` in closed form to ``(s - a)^p``.
    """
    if p == INF:
        raise ValueError("the modified coarea formula needs p < inf")
    if f.max() != 1:
        raise ValueError(f"f must be normalized to max value 1, got {f.max()}")
    exact = _is_integer(p)
    pp = int(p) if exact else float(p)
    levels = _levels(f)
    terms = []
    for lo, hi in zip(levels, levels[1:]):
        for u, w in edge_boundary(f.graph, superlevel_set(f, hi)):
            a = f(w)
            if exact:
                terms.append((hi - a) ** pp - (lo - a) ** pp)
            else:
                terms.append(float(hi - a) ** pp - float(lo - a) ** pp)
    return sum(terms, Fraction(0)) if exact else math.fsum(terms)
