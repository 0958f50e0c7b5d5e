"""Necessary conditions for vertex-minimal 5-regular counterexamples.

A vertex-minimal 5-regular graph without a (4,1)-coloring (or without a
{4,1}-factor) must satisfy a list of structural conditions.  Each condition
here is a pair of functions: ``find`` looks for a violation and returns a
witness, ``confirm`` re-checks a witness against the defining predicate
independently of how it was found.  A report with violations only says that
the graph cannot be a vertex-minimal counterexample; it never says that a
graph without violations is one.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .coloring import ColoringSpec
from .enumeration import enumerate_bounded, enumerate_regular, EnumSpec
from .errors import InvalidArgument
from .graph import (
    Pseudograph, connected_components, is_connected, is_k_edge_connected,
    is_regular, minimal_edge_cuts, _cut_sides,
)
from .solver import SUBGRAPH_CAP, SearchBudget, Status, find_regular_subgraph, perfect_matching, solve_coloring, solve_factor

HOLDS = "holds"
VIOLATED = "violated"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Witness:
    vertices: tuple[int, ...] = ()
    edges: tuple[int, ...] = ()

    def to_obj(self):
        return {"vertices": list(self.vertices), "edges": list(self.edges)}


@dataclass(frozen=True)
class ConditionEntry:
    name: str
    verdict: str
    witness: Witness | None = None
    detail: str = ""

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED


@dataclass(frozen=True)
class ConditionReport:
    mode: str
    entries: tuple[ConditionEntry, ...]

    @property
    def violations(self) -> list[ConditionEntry]:
        return [e for e in self.entries if e.violated]

    def __getitem__(self, name: str) -> ConditionEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


class _Skip(Exception):
    pass


@dataclass(frozen=True)
class Condition:
    name: str
    summary: str
    find: Callable[[Pseudograph], Witness | None]
    confirm: Callable[[Pseudograph, Witness], bool]
    needs_connected: bool = False


# ---------------------------------------------------------------------------
# small helpers


def _mult(g, a, b):
    return g.multiplicity[a][b]


def _adjacent(g, a, b):
    return a != b and g.multiplicity[a][b] > 0


def _loop_vertices(g):
    return [v for v in range(g.vertex_count) if g.loop_counts[v]]


def _disconnects(g, removed):
    return len(_cut_sides(g, set(removed))) >= 2


def _is_minimal_cut(g, eids):
    eids = set(eids)
    if not eids or not _disconnects(g, eids):
        return False
    return all(not _disconnects(g, eids - {e}) for e in eids)


def _bridge_ids(g):
    return sorted(next(iter(c.edge_ids)) for c in minimal_edge_cuts(g, 1))


def _induced_edge_ids(g, vertices):
    vs = set(vertices)
    return [i for i, (a, b) in enumerate(g.edges) if a in vs and b in vs]


# ---------------------------------------------------------------------------
# connectivity conditions (shared by both modes)


def _find_disconnected(g):
    comps = connected_components(g)
    if len(comps) > 1:
        return Witness(vertices=tuple(comps[0]))
    return None


def _confirm_disconnected(g, w):
    side = set(w.vertices)
    if not side or len(side) == g.vertex_count:
        return False
    return all((a in side) == (b in side) for a, b in g.edges)


def _find_four_edge_connected(g):
    return Witness() if is_k_edge_connected(g, 4) else None


def _confirm_four_edge_connected(g, w):
    return is_k_edge_connected(g, 4)


def _find_two_cut(g):
    for cut in minimal_edge_cuts(g, 2):
        if cut.size == 2:
            return Witness(edges=tuple(sorted(cut.edge_ids)))
    return None


def _confirm_two_cut(g, w):
    return len(set(w.edges)) == 2 and _is_minimal_cut(g, w.edges)


def _find_two_bridges(g):
    found = _bridge_ids(g)
    if len(found) >= 2:
        return Witness(edges=tuple(found[:2]))
    return None


def _confirm_two_bridges(g, w):
    return len(set(w.edges)) == 2 and all(_is_minimal_cut(g, [e]) for e in w.edges)


def _double_loop_ends(g, eid):
    a, b = g.edges[eid]
    return sum(1 for x in (a, b) if g.loop_counts[x] == 2)


def _find_bad_bridge(g):
    for eid in _bridge_ids(g):
        if _double_loop_ends(g, eid) != 1:
            return Witness(vertices=g.edges[eid], edges=(eid,))
    return None


def _confirm_bad_bridge(g, w):
    (eid,) = w.edges
    return _is_minimal_cut(g, [eid]) and _double_loop_ends(g, eid) != 1


def _looped_common_vertex(g, eids):
    common = set(g.edges[eids[0]])
    for e in eids[1:]:
        common &= set(g.edges[e])
    return any(g.loop_counts[x] for x in common)


def _find_bad_three_cut(g):
    for cut in minimal_edge_cuts(g, 3):
        if cut.size == 3:
            eids = sorted(cut.edge_ids)
            if not _looped_common_vertex(g, eids):
                return Witness(edges=tuple(eids))
    return None


def _confirm_bad_three_cut(g, w):
    return len(set(w.edges)) == 3 and _is_minimal_cut(g, w.edges) and not _looped_common_vertex(g, list(w.edges))


# ---------------------------------------------------------------------------
# local structure conditions


def _find_four_regular_subgraph(g):
    if g.vertex_count > SUBGRAPH_CAP:
        raise _Skip(f"subgraph search is capped at {SUBGRAPH_CAP} vertices")
    sub = find_regular_subgraph(g, 4, min_vertices=2)
    if sub is None:
        return None
    return Witness(vertices=tuple(sorted(sub.vertices)), edges=tuple(sorted(sub.edge_ids)))


def _confirm_four_regular_subgraph(g, w):
    vs = set(w.vertices)
    if len(vs) < 2 or len(set(w.edges)) != len(w.edges):
        return False
    deg = dict.fromkeys(vs, 0)
    for e in w.edges:
        a, b = g.edges[e]
        if a not in vs or b not in vs:
            return False
        deg[a] += 1
        deg[b] += 1
    return all(d == 4 for d in deg.values())


def _find_parallel(k):
    def find(g):
        for (a, b), ids in g.bundles.items():
            if a != b and len(ids) >= k:
                return Witness(vertices=(a, b), edges=tuple(ids[:k]))
        return None
    return find


def _confirm_parallel(k):
    def confirm(g, w):
        if len(set(w.edges)) != k:
            return False
        ends = {g.edges[e] for e in w.edges}
        return len(ends) == 1 and len(set(next(iter(ends)))) == 2
    return confirm


def _find_double_path(g):
    n = g.vertex_count
    for p in itertools.permutations(range(n), 4):
        if p[0] < p[3] and all(_mult(g, p[i], p[i + 1]) >= 2 for i in range(3)):
            return Witness(vertices=p)
    return None


def _confirm_double_path(g, w):
    p = w.vertices
    return len(p) == 4 and len(set(p)) == 4 and all(_mult(g, p[i], p[i + 1]) >= 2 for i in range(3))


def _find_loop_on_double(g):
    for v in _loop_vertices(g):
        for x in range(g.vertex_count):
            if x != v and _mult(g, v, x) >= 2:
                return Witness(vertices=(v, x))
    return None


def _confirm_loop_on_double(g, w):
    v, x = w.vertices
    return v != x and g.loop_counts[v] > 0 and _mult(g, v, x) >= 2


def _find_adjacent_loops(g):
    for a, b in itertools.combinations(_loop_vertices(g), 2):
        if _adjacent(g, a, b):
            return Witness(vertices=(a, b))
    return None


def _confirm_adjacent_loops(g, w):
    a, b = w.vertices
    return g.loop_counts[a] > 0 and g.loop_counts[b] > 0 and _adjacent(g, a, b)


def _find_few_loops(g):
    loops = tuple(i for i, (a, b) in enumerate(g.edges) if a == b)
    return Witness(edges=loops) if len(loops) < 5 else None


def _confirm_few_loops(g, w):
    return sum(1 for a, b in g.edges if a == b) < 5


def _find_k33_loops(g):
    looped = _loop_vertices(g)
    for us in itertools.combinations(looped, 3):
        common = [x for x in range(g.vertex_count)
                  if x not in us and all(_adjacent(g, u, x) for u in us)]
        if len(common) >= 3:
            return Witness(vertices=us + tuple(common[:3]))
    return None


def _confirm_k33_loops(g, w):
    if len(w.vertices) != 6 or len(set(w.vertices)) != 6:
        return False
    us, vs = w.vertices[:3], w.vertices[3:]
    return all(g.loop_counts[u] for u in us) and all(_adjacent(g, u, v) for u in us for v in vs)


def _find_many_loop_neighbors(g):
    for v in range(g.vertex_count):
        near = sorted(x for x in g.neighbors(v) if x != v and g.loop_counts[x])
        if len(near) > 3:
            return Witness(vertices=(v, *near[:4]))
    return None


def _confirm_many_loop_neighbors(g, w):
    v, *near = w.vertices
    return len(set(near)) == 4 and v not in near and all(g.loop_counts[x] and _adjacent(g, v, x) for x in near)


def _find_dense_four(g):
    for quad in itertools.combinations(range(g.vertex_count), 4):
        eids = _induced_edge_ids(g, quad)
        if len(eids) >= 8:
            return Witness(vertices=quad, edges=tuple(eids))
    return None


def _confirm_dense_four(g, w):
    return len(set(w.vertices)) == 4 and len(_induced_edge_ids(g, w.vertices)) >= 8


def _find_k4(g):
    for quad in itertools.combinations(range(g.vertex_count), 4):
        if all(_adjacent(g, a, b) for a, b in itertools.combinations(quad, 2)):
            return Witness(vertices=quad)
    return None


def _confirm_k4(g, w):
    quad = w.vertices
    return len(set(quad)) == 4 and all(_adjacent(g, a, b) for a, b in itertools.combinations(quad, 2))


# ---------------------------------------------------------------------------
# the two suites

CONNECTED = Condition("connected", "the graph is connected", _find_disconnected, _confirm_disconnected)
HAS_THREE_CUT = Condition("has-3-edge-cut", "not 4-edge-connected", _find_four_edge_connected,
                          _confirm_four_edge_connected, True)
NO_TWO_CUT = Condition("no-minimal-2-cut", "no minimal edge cut of size 2", _find_two_cut, _confirm_two_cut, True)
NOT_TWO_BRIDGES = Condition("not-two-bridges", "at most one bridge", _find_two_bridges, _confirm_two_bridges, True)
BRIDGE_ENDS = Condition("bridge-double-loop-end", "each bridge has exactly one endpoint with two loops",
                        _find_bad_bridge, _confirm_bad_bridge, True)
THREE_CUTS = Condition("3-cut-looped-apex", "each minimal 3-cut shares an endpoint that has a loop",
                       _find_bad_three_cut, _confirm_bad_three_cut, True)
NO_FOUR_REGULAR = Condition("no-4-regular-subgraph", "no 4-regular subgraph on 2 or more vertices",
                            _find_four_regular_subgraph, _confirm_four_regular_subgraph)
NO_TRIPLE_EDGE = Condition("no-3-parallel", "no three parallel non-loop edges", _find_parallel(3), _confirm_parallel(3))
NO_DOUBLE_PATH = Condition("no-double-3-path", "no path of three double edges on four vertices",
                           _find_double_path, _confirm_double_path)
NO_LOOP_DOUBLE = Condition("no-loop-on-double-edge", "no vertex with a loop lies on a double edge",
                           _find_loop_on_double, _confirm_loop_on_double)
NO_ADJ_LOOPS = Condition("no-adjacent-loop-vertices", "no two vertices with loops are adjacent",
                         _find_adjacent_loops, _confirm_adjacent_loops)
FIVE_LOOPS = Condition("at-least-5-loops", "at least five loops in total", _find_few_loops, _confirm_few_loops)
NO_K33 = Condition("no-K33-with-loops", "no K_{3,3} whose one side carries a loop on every vertex",
                   _find_k33_loops, _confirm_k33_loops)
FEW_LOOP_NEIGHBORS = Condition("at-most-3-loop-neighbors", "no vertex has four neighbors with loops",
                               _find_many_loop_neighbors, _confirm_many_loop_neighbors)
NO_DENSE_FOUR = Condition("no-dense-4-subgraph", "no four vertices span 8 or more edges (loops included)",
                          _find_dense_four, _confirm_dense_four)
NO_K4 = Condition("no-K4", "no copy of K_4", _find_k4, _confirm_k4)
NO_DOUBLE_EDGE = Condition("no-parallel-edges", "no parallel non-loop edges", _find_parallel(2), _confirm_parallel(2))

_CUTS = (CONNECTED, HAS_THREE_CUT, NO_TWO_CUT, NOT_TWO_BRIDGES, BRIDGE_ENDS, THREE_CUTS)

COLORING_CONDITIONS = _CUTS + (
    NO_FOUR_REGULAR, NO_TRIPLE_EDGE, NO_DOUBLE_PATH, NO_LOOP_DOUBLE, NO_ADJ_LOOPS,
    FIVE_LOOPS, NO_K33, FEW_LOOP_NEIGHBORS, NO_DENSE_FOUR,
)
FACTOR_CONDITIONS = _CUTS + (NO_K4, NO_DOUBLE_EDGE, NO_ADJ_LOOPS, FIVE_LOOPS, NO_K33)

SUITES = {"coloring": COLORING_CONDITIONS, "factor": FACTOR_CONDITIONS}


def evaluate(g: Pseudograph, cond: Condition) -> ConditionEntry:
    if cond.needs_connected and not is_connected(g):
        return ConditionEntry(cond.name, SKIPPED, detail="graph is disconnected")
    try:
        w = cond.find(g)
    except _Skip as exc:
        return ConditionEntry(cond.name, SKIPPED, detail=str(exc))
    if w is None:
        return ConditionEntry(cond.name, HOLDS)
    assert cond.confirm(g, w), f"witness for {cond.name} does not re-check"
    return ConditionEntry(cond.name, VIOLATED, w, cond.summary)


def check_conditions(g: Pseudograph, mode: str) -> ConditionReport:
    if mode not in SUITES:
        raise InvalidArgument(f"mode must be one of {', '.join(SUITES)} (got {mode!r})")
    if not is_regular(g, 5):
        raise InvalidArgument("condition suites apply to 5-regular graphs only")
    return ConditionReport(mode, tuple(evaluate(g, c) for c in SUITES[mode]))


def check_coloring_conditions(g: Pseudograph) -> ConditionReport:
    return check_conditions(g, "coloring")


def check_factor_conditions(g: Pseudograph) -> ConditionReport:
    return check_conditions(g, "factor")


def confirm_witness(g: Pseudograph, name: str, w: Witness) -> bool:
    for cond in COLORING_CONDITIONS + FACTOR_CONDITIONS:
        if cond.name == name:
            return cond.confirm(g, w)
    raise InvalidArgument(f"unknown condition {name!r}")


# ---------------------------------------------------------------------------
# the 4-vertex search


SEVEN_FILTERS = (NO_FOUR_REGULAR, NO_TRIPLE_EDGE, NO_DOUBLE_PATH, NO_LOOP_DOUBLE, NO_ADJ_LOOPS)


@dataclass(frozen=True)
class ReductionShape:
    """A perfect matching of H, two attachment vertices u != v and an edge of H - {u, v}."""

    matching: frozenset[int]
    u: int
    v: int
    edge: int


def seven_graphs_search() -> list[Pseudograph]:
    """4-vertex graphs with max degree 5 and at least 8 edges passing the five local filters."""
    found = []
    for h in enumerate_bounded(4, 5, 8):
        if all(c.find(h) is None for c in SEVEN_FILTERS):
            found.append(h)
    return found


def reduction_shape(h: Pseudograph, r: int = 5) -> ReductionShape | None:
    pm = perfect_matching(h)
    if not pm.sat:
        return None
    attach = [x for x in range(h.vertex_count) if h.degrees[x] < r]
    for u, v in itertools.combinations(attach, 2):
        for eid, (a, b) in enumerate(h.edges):
            if a != b and not {a, b} & {u, v}:
                return ReductionShape(pm.witness.edge_ids, u, v, eid)
    return None


# ---------------------------------------------------------------------------
# counterexample hunting


@dataclass(frozen=True)
class HuntRecord:
    n: int
    index: int
    graph: Pseudograph
    status: Status | None
    violations: tuple[str, ...] = field(default=())
    nodes: int = 0


def _hunt_one(args):
    mode, r, t, g, budget, prefilter, minimal_only = args
    violations = ()
    if prefilter:
        report = check_conditions(g, mode)
        violations = tuple(e.name for e in report.violations)
        if minimal_only and violations:
            return None, violations, 0
    if mode == "coloring":
        res = solve_coloring(g, ColoringSpec(r, t), budget)
    else:
        res = solve_factor(g, {r - t, t}, budget)
    return res.status, violations, res.nodes


def hunt(mode: str, r: int, t: int, n_max: int, budget: SearchBudget | None = None,
         minimal_only: bool = False, n_min: int = 1, jobs: int = 1) -> Iterator[HuntRecord]:
    """Run the exact solver over all connected r-regular graphs with n_min..n_max vertices.

    The condition suite is consulted when (r, t) = (5, 1).  With
    ``minimal_only`` graphs that violate a necessary condition are not solved
    (their status is None).
    """
    if mode not in SUITES:
        raise InvalidArgument(f"mode must be one of {', '.join(SUITES)} (got {mode!r})")
    ColoringSpec(r, t)
    prefilter = (r, t) == (5, 1)
    if minimal_only and not prefilter:
        raise InvalidArgument("minimal-only hunting needs the 5-regular suite (r=5, t=1)")
    for n in range(n_min, n_max + 1):
        graphs = enumerate_regular(EnumSpec(r, n, connected_only=True))
        work = [(mode, r, t, g, budget, prefilter, minimal_only) for g in graphs]
        results = _map(_hunt_one, work, jobs)
        for i, (g, (status, violations, nodes)) in enumerate(zip(graphs, results)):
            yield HuntRecord(n, i, g, status, violations, nodes)


def _map(fn, items, jobs):
    if jobs <= 1 or len(items) < 2:
        return map(fn, items)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


__all__ = [
    "HOLDS", "VIOLATED", "SKIPPED", "Witness", "ConditionEntry", "ConditionReport", "Condition",
    "COLORING_CONDITIONS", "FACTOR_CONDITIONS", "check_conditions", "check_coloring_conditions",
    "check_factor_conditions", "confirm_witness", "seven_graphs_search", "reduction_shape",
    "ReductionShape", "HuntRecord", "hunt",
]
