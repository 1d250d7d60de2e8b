"""Finite-range audits of an ordering against the rearrangement theorems' hypotheses.

All constants are certified only for ``N <= nmax``; the theorems themselves
quantify over every ``N``, which no finite computation can check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graph import Family, Graph, WindowError, edge_boundary, vertex_boundary
from .isoperimetry import (MAX_ORACLE_N, Kind, UnsupportedProfile, closed_form_profile,
                           profile_value)
from .orderings import Ordering, containment_index
from .rearrange import (INF, LatticeFunction, grad_energy, grad_lp_norm, rearrange)

FRACTIONAL_P_RTOL = 1e-12

DEFAULT_NMAX = {Family.GRID: 6, Family.LADDER: 8, Family.PATH: 10, Family.TREE: 8}


class AuditRangeError(ValueError):
    pass


class HypothesisError(RuntimeError):
    """A theorem hypothesis the audit depends on fails on the tested range."""


@dataclass
class AuditRow:
    n: int
    prefix_edge: Optional[int] = None
    edge_min: Optional[int] = None
    prefix_vertex: Optional[int] = None
    vertex_min: Optional[int] = None
    containment: Optional[int] = None
    theorem4: Optional[bool] = None


@dataclass
class AuditReport:
    ordering: str
    graph: str
    nmax: int
    rows: list = field(default_factory=list)
    alpha: Optional[Fraction] = None
    beta: Optional[int] = None
    c: Optional[int] = None
    profile_monotone: Optional[bool] = None
    theorem4_holds: Optional[bool] = None
    theorem4_first_failure: Optional[int] = None
    # first N violating each of the two conditions separately
    theorem4_first_profile_failure: Optional[int] = None
    theorem4_first_containment_failure: Optional[int] = None
    caveats: list = field(default_factory=list)

    def row(self, n: int) -> AuditRow:
        return self.rows[n - 1]

    @property
    def failed(self) -> bool:
        """True if some audited hypothesis fails (used for the CLI exit code)."""
        return ((self.alpha is not None and (self.alpha > 1 or self.beta > 0))
                or self.theorem4_holds is False
                or self.profile_monotone is False)

    def merge(self, other: "AuditReport") -> "AuditReport":
        for mine, theirs in zip(self.rows, other.rows):
            for name, value in vars(theirs).items():
                if value is not None:
                    setattr(mine, name, value)
        for name in ("alpha", "beta", "c", "profile_monotone", "theorem4_holds",
                     "theorem4_first_failure", "theorem4_first_profile_failure",
                     "theorem4_first_containment_failure"):
            value = getattr(other, name)
            if value is not None:
                setattr(self, name, value)
        for note in other.caveats:
            if note not in self.caveats:
                self.caveats.append(note)
        return self


def _start(o: Ordering, nmax: int) -> AuditReport:
    if nmax < 1:
        raise AuditRangeError("nmax must be positive")
    if nmax > o.valid_prefix_len:
        raise AuditRangeError(
            f"nmax={nmax} exceeds the ordering's valid prefix {o.valid_prefix_len}; enlarge the window")
    report = AuditReport(o.name, o.graph.describe(), nmax, [AuditRow(n) for n in range(1, nmax + 1)])
    report.caveats.append(f"constants certified on 1 <= N <= {nmax} only")
    return report


def _profile(o: Ordering, kind: Kind, n: int) -> int:
    try:
        value, _ = profile_value(o.graph, kind, n)
    except ValueError as exc:
        if n > MAX_ORACLE_N:
            raise AuditRangeError(str(exc)) from None
        raise
    return value


def theorem2_audit(o: Ordering, nmax: int) -> AuditReport:
    """Smallest alpha (with beta = 0) and smallest beta (with alpha = 1) for the edge hypothesis."""
    report = _start(o, nmax)
    alpha = Fraction(1)
    beta = 0
    for row in report.rows:
        row.prefix_edge = len(edge_boundary(o.graph, o.prefix(row.n)))
        row.edge_min = _profile(o, Kind.EDGE, row.n)
        alpha = max(alpha, Fraction(row.prefix_edge, row.edge_min))
        beta = max(beta, row.prefix_edge - row.edge_min)
    report.alpha, report.beta = alpha, beta
    return report


def _vertex_profile(o: Ordering, report: AuditReport) -> bool:
    if report.nmax > MAX_ORACLE_N:
        # fail before spending minutes on the oracle for the smaller N
        try:
            g = o.graph
            closed_form_profile(g.family, Kind.VERTEX, 1,
                                degree=g.params[0] if g.family is Family.TREE else None)
        except UnsupportedProfile:
            raise AuditRangeError(
                f"nmax={report.nmax} exceeds the oracle guard {MAX_ORACLE_N} and the "
                f"{o.graph.family.value} vertex profile has no closed form") from None
    previous = 0
    monotone = True
    for row in report.rows:
        row.vertex_min = _profile(o, Kind.VERTEX, row.n)
        monotone = monotone and row.vertex_min >= previous
        previous = row.vertex_min
    report.profile_monotone = monotone
    report.caveats.append(f"vertex profile monotonicity checked on 1..{report.nmax} only (empirical)")
    return monotone


def theorem3_audit(o: Ordering, nmax: int) -> AuditReport:
    """Smallest integer c with containment_index(N) <= N + c * vertex_profile(N)."""
    report = _start(o, nmax)
    if not _vertex_profile(o, report):
        raise HypothesisError("the vertex-isoperimetric profile is not non-decreasing on the range")
    c = 1
    for row in report.rows:
        row.containment = containment_index(o, row.n)
        c = max(c, -(-(row.containment - row.n) // row.vertex_min))
    report.c = c
    return report


def theorem4_audit(o: Ordering, nmax: int) -> AuditReport:
    """Check vertex_profile(N) == #edge_boundary(prefix) and the neighbour-containment condition."""
    report = _start(o, nmax)
    _vertex_profile(o, report)
    profile_fail = containment_fail = None
    for row in report.rows:
        row.prefix_edge = len(edge_boundary(o.graph, o.prefix(row.n)))
        row.containment = containment_index(o, row.n)
        equal = row.vertex_min == row.prefix_edge
        contained = row.containment <= row.n + row.vertex_min
        row.theorem4 = equal and contained
        if not equal and profile_fail is None:
            profile_fail = row.n
        if not contained and containment_fail is None:
            containment_fail = row.n
    fails = [n for n in (profile_fail, containment_fail) if n is not None]
    report.theorem4_first_failure = min(fails, default=None)
    report.theorem4_holds = not fails
    report.theorem4_first_profile_failure = profile_fail
    report.theorem4_first_containment_failure = containment_fail
    return report


def audit(o: Ordering, nmax: int, theorems: Iterable[int] = (2, 3, 4)) -> AuditReport:
    report = _start(o, nmax)
    for t in sorted(set(theorems)):
        step = {2: theorem2_audit, 3: theorem3_audit, 4: theorem4_audit}[t]
        report.merge(step(o, nmax))
    for row in report.rows:
        row.prefix_vertex = len(vertex_boundary(o.graph, o.prefix(row.n)))
    return report


# --- constants used by the inequality checks -----------------------------------

@dataclass(frozen=True)
class OrderingConstants:
    alpha: Fraction
    c: int
    theorem4: bool
    nmax: int


_CONSTANTS: dict = {}


def default_constants(o: Ordering) -> OrderingConstants:
    """Audited (alpha, c, Theorem-4 flag) on the family's default range, cached per ordering."""
    key = (o.name, o.graph.describe(), o.ranks)
    if key not in _CONSTANTS:
        nmax = min(DEFAULT_NMAX[o.graph.family], o.valid_prefix_len)
        report = audit(o, nmax)
        _CONSTANTS[key] = OrderingConstants(report.alpha, report.c, report.theorem4_holds, nmax)
    return _CONSTANTS[key]


@dataclass(frozen=True)
class InequalityCheck:
    lhs: object
    rhs: object
    holds: bool
    bound: str
    exact: bool


def polya_szego_check(f: LatticeFunction, o: Ordering, p, constants: OrderingConstants = None
                      ) -> InequalityCheck:
    """Compare ``||grad f*||_p`` with the bound the audited constants give for this ordering.

    p = 1 uses alpha * ||grad f||_1, p = inf uses c * ||grad f||_inf.  For
    1 < p < inf, orderings passing the Theorem-4 audit get ||grad f||_p;
    the rest get the interpolated bound alpha^(1/p) c^(1-1/p) ||grad f||_1.
    """
    k = constants or default_constants(o)
    fs = rearrange(f, o)
    if p == INF:
        lhs, rhs = grad_lp_norm(fs, INF), k.c * grad_lp_norm(f, INF)
        return InequalityCheck(lhs, rhs, lhs <= rhs, f"{k.c}*||grad f||_inf", True)
    if p == 1:
        lhs, rhs = grad_lp_norm(fs, 1), k.alpha * grad_lp_norm(f, 1)
        return InequalityCheck(lhs, rhs, lhs <= rhs, f"{k.alpha}*||grad f||_1", True)
    exact = Fraction(p).denominator == 1
    if k.theorem4:
        bound = f"||grad f||_{p}"
        lhs_p, rhs_p = grad_energy(fs, p), grad_energy(f, p)
    else:
        bound = f"{k.alpha}^(1/{p})*{k.c}^(1-1/{p})*||grad f||_1"
        l1 = grad_lp_norm(f, 1)
        lhs_p = grad_energy(fs, p)
        if exact:
            rhs_p = k.alpha * Fraction(k.c) ** (int(p) - 1) * l1 ** int(p)
        else:
            rhs_p = float(k.alpha) * float(k.c) ** (float(p) - 1) * float(l1) ** float(p)
    lhs = float(lhs_p) ** (1 / float(p))
    rhs = float(rhs_p) ** (1 / float(p))
    if exact:
        holds = lhs_p <= rhs_p
    else:
        holds = lhs_p <= rhs_p * (1 + FRACTIONAL_P_RTOL)
    return InequalityCheck(lhs, rhs, holds, bound, exact)


# --- the L2 counterexample engine -------------------------------------------------

class CounterexampleError(RuntimeError):
    pass


@dataclass(frozen=True)
class Counterexample:
    ratio_squared: Fraction
    witness: LatticeFunction
    rearranged: LatticeFunction
    case: str
    n: Optional[int] = None

    @property
    def ratio(self) -> float:
        return math.sqrt(self.ratio_squared)


_PLUS = ((1, 0), (0, 1), (-1, 0), (0, -1))
_BLOCK = ((0, 0), (1, 0), (1, 1), (0, 1), (0, -1))
MIN_L2_RATIO = 1.01


def plus_function(g: Graph, n, center=(0, 0)) -> LatticeFunction:
    cx, cy = center
    values = {center: n}
    values.update({(cx + dx, cy + dy): 1 for dx, dy in _PLUS})
    return LatticeFunction.from_coords(g, values)


def is_center_plus(o: Ordering) -> bool:
    g = o.graph
    return len(o) >= 5 and set(g.adjacency[o.ranks[0]]) == set(o.ranks[1:5]) \
        and len(g.adjacency[o.ranks[0]]) == 4


def l2_counterexample(o: Ordering, n_max: int = 64) -> Counterexample:
    """Build a function whose rearrangement along ``o`` raises the L2 gradient norm by >= 1%."""
    g = o.graph
    if g.family is not Family.GRID:
        raise ValueError("the L2 counterexample is specific to the grid graph")
    if o.valid_prefix_len < 6 or g.params[0] < 2:
        raise WindowError("the first six ranks and the witness need an interior margin; enlarge the window")
    if is_center_plus(o):
        f = LatticeFunction.from_coords(g, {c: 1 for c in _BLOCK})
        fs = rearrange(f, o)
        result = Counterexample(Fraction(grad_energy(fs, 2), grad_energy(f, 2)), f, fs, "center-plus")
    else:
        result = None
        for n in range(2, n_max + 1):
            f = plus_function(g, n)
            fs = rearrange(f, o)
            ratio2 = Fraction(grad_energy(fs, 2), grad_energy(f, 2))
            if result is None or ratio2 > result.ratio_squared:
                result = Counterexample(ratio2, f, fs, "plus-sweep", n)
    if result.ratio < MIN_L2_RATIO:
        raise CounterexampleError(f"ratio {result.ratio:.6f} below {MIN_L2_RATIO}")
    return result


# --- seeded random-function harness ---------------------------------------------

def _origin(g: Graph) -> int:
    return 0 if g.family is Family.TREE else g.vertex((0, 0))


def ball(g: Graph, center: int, radius: int) -> list[int]:
    dist = {center: 0}
    frontier = [center]
    while frontier:
        nxt = []
        for u in frontier:
            if dist[u] == radius:
                continue
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return sorted(dist)


def random_function(g: Graph, rng: random.Random, max_support: int = 20, radius: int = 5,
                    denominator: int = 64) -> LatticeFunction:
    """Random support inside the interior ball of ``radius``; values k/denominator, 1 <= k <= denominator."""
    pool = [v for v in ball(g, _origin(g), radius) if g.interior[v]]
    size = rng.randint(1, min(max_support, len(pool)))
    support = rng.sample(pool, size)
    return LatticeFunction(g, {v: Fraction(rng.randint(1, denominator), denominator) for v in support})


def random_functions(g: Graph, count: int, seed: int, **kwargs) -> list[LatticeFunction]:
    rng = random.Random(seed)
    return [random_function(g, rng, **kwargs) for _ in range(count)]


def random_ordering(g: Graph, rng: random.Random, radius: int = 2, name: str = "random") -> Ordering:
    """Uniformly shuffled cells of the square ``|x|, |y| <= radius`` of a grid window."""
    cells = [g.vertex((x, y)) for x in range(-radius, radius + 1) for y in range(-radius, radius + 1)]
    rng.shuffle(cells)
    return Ordering(g, tuple(cells), name)


@dataclass
class SuiteResult:
    p: object
    cases: int = 0
    violations: int = 0
    max_ratio: float = 0.0
    examples: list = field(default_factory=list)


def polya_szego_suite(o: Ordering, functions: Sequence[LatticeFunction], ps: Sequence,
                      constants: OrderingConstants = None) -> dict:
    """Run ``polya_szego_check`` over ``functions`` for each ``p``; counts violations and max lhs/rhs."""
    constants = constants or default_constants(o)
    out = {p: SuiteResult(p) for p in ps}
    for f in functions:
        for p in ps:
            res = polya_szego_check(f, o, p, constants)
            s = out[p]
            s.cases += 1
            if float(res.rhs) > 0:
                s.max_ratio = max(s.max_ratio, float(res.lhs) / float(res.rhs))
            if not res.holds:
                s.violations += 1
                if len(s.examples) < 3:
                    s.examples.append(f)
    return out
