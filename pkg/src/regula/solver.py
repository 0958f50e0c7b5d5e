"""Exact search engines for colorings, factors, matchings and regular subgraphs.

All searches are complete.  A search that runs out of budget reports
``Status.EXHAUSTED``, which is never to be read as UNSAT.
"""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coloring import ColoringSpec, EdgeColoring, FactorWitness, verify_coloring, verify_factor
from .errors import InvalidArgument, UnsupportedSize
from .graph import Pseudograph, _components, connected_components, is_regular

TUTTE_CAP = 16
SUBGRAPH_CAP = 14


class Status(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    EXHAUSTED = "EXHAUSTED"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = None
    time_limit: float | None = None


@dataclass
class SolveResult:
    status: Status
    witness: object = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def sat(self) -> bool:
        return self.status is Status.SAT

    @property
    def unsat(self) -> bool:
        return self.status is Status.UNSAT


class _Exhausted(Exception):
    pass


class _Meter:
    def __init__(self, budget: SearchBudget | None):
        budget = budget or SearchBudget()
        self.node_limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.start = time.monotonic()
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Exhausted
        if self.deadline is not None and (self.nodes & 255) == 0 and time.monotonic() > self.deadline:
            raise _Exhausted

    def result(self, status, witness=None):
        return SolveResult(status, witness, self.nodes, time.monotonic() - self.start)


def _bundle_list(g: Pseudograph):
    """(u, v, edge ids) per endpoint pair, plus per-vertex bundle index lists."""
    bundles = [(u, v, ids) for (u, v), ids in g.bundles.items()]
    at = [[] for _ in range(g.vertex_count)]
    for b, (u, v, _) in enumerate(bundles):
        at[u].append(b)
        if v != u:
            at[v].append(b)
    return bundles, at


# ---------------------------------------------------------------------------
# (r-t, t)-colorings


class _ColoringSearch:
    """Backtracking over color multisets of parallel bundles.

    A bundle between u and v (or a loop bundle at u) receives a multiset of
    at most two colors.  Per-vertex pruning keeps every vertex completable
    to exactly {r-t of one color, t of another}, accounting for loops adding
    incidences in steps of two.
    """

    FAIL_CACHE = 1 << 18

    def __init__(self, g: Pseudograph, spec: ColoringSpec, meter: _Meter):
        self.g = g
        self.spec = spec
        self.meter = meter
        self.major, self.minor = spec.major, spec.t
        self.bundles, self.at = _bundle_list(g)
        n = g.vertex_count
        self.counts = [dict() for _ in range(n)]
        self.und1 = [0] * n
        self.und2 = [0] * n
        for u, v, ids in self.bundles:
            if u == v:
                self.und2[u] += len(ids)
            else:
                self.und1[u] += len(ids)
                self.und1[v] += len(ids)
        self.undecided_at = [len(a) for a in self.at]
        self.assign = [None] * len(self.bundles)
        self.color_use = {}  # color -> number of bundles using it
        self.n_used = 0      # unordered mode: colors are exactly 1..n_used
        self.trail = []      # (bundle, n_used before it) in assignment order
        self.failed = set()  # region keys known to have no completion

    # -- per-vertex feasibility --------------------------------------------

    def _fits(self, need_major, need_minor, loops):
        if need_major < 0 or need_minor < 0:
            return False
        lo = max(0, loops - need_minor // 2)
        hi = min(loops, need_major // 2)
        return lo <= hi

    def _order_ok(self, maj_color, min_color):
        return not self.spec.ordered or self.major == self.minor or maj_color < min_color

    def vertex_ok(self, v):
        items = [(c, k) for c, k in self.counts[v].items() if k]
        loops = self.und2[v]
        M, m = self.major, self.minor
        if len(items) > 2:
            return False
        if len(items) == 2:
            (a, ka), (b, kb) = items
            return ((self._fits(M - ka, m - kb, loops) and self._order_ok(a, b))
                    or (self._fits(M - kb, m - ka, loops) and self._order_ok(b, a)))
        if len(items) == 1:
            (a, ka), = items
            return self._fits(M - ka, m, loops) or self._fits(M, m - ka, loops)
        return self._fits(M, m, loops) or self._fits(m, M, loops)

    def vertex_colors(self, v):
        return [c for c, k in self.counts[v].items() if k]

    # -- assignment ----------------------------------------------------------

    def apply(self, b, multiset, sign):
        u, v, ids = self.bundles[b]
        loop = u == v
        weight = 2 if loop else 1
        for col, k in multiset:
            for x in ((u,) if loop else (u, v)):
                self.counts[x][col] = self.counts[x].get(col, 0) + sign * k * weight
            self.color_use[col] = self.color_use.get(col, 0) + sign
            if self.color_use[col] == 0:
                del self.color_use[col]
        mu = len(ids)
        if loop:
            self.und2[u] -= sign * mu
            self.undecided_at[u] -= sign
        else:
            self.und1[u] -= sign * mu
            self.und1[v] -= sign * mu
            self.undecided_at[u] -= sign
            self.undecided_at[v] -= sign

    # -- choice heuristics ---------------------------------------------------

    def choose(self, scope):
        best = None
        for v in scope:
            if not self.undecided_at[v]:
                continue
            decided = self.spec.r - self.und1[v] - 2 * self.und2[v]
            key = (-decided, self.undecided_at[v], v)
            if best is None or key < best[0]:
                best = (key, v)
        if best is None:
            return None
        v = best[1]
        pick = None
        for b in self.at[v]:
            if self.assign[b] is not None:
                continue
            u, w, ids = self.bundles[b]
            other = w if u == v else u
            decided = self.spec.r - self.und1[other] - 2 * self.und2[other]
            key = (-decided, -len(ids), b)
            if pick is None or key < pick[0]:
                pick = (key, b)
        return pick[1]

    def palette(self, b):
        """Candidate colors for bundle b, and the set of colors that are new."""
        u, v, _ = self.bundles[b]
        allowed = None
        for x in {u, v}:
            cols = self.vertex_colors(x)
            if len(cols) >= 2:
                allowed = set(cols) if allowed is None else allowed & set(cols)
        if self.spec.ordered:
            return self._ordered_palette(allowed)
        cap = self.spec.max_colors
        if allowed is not None:
            return sorted(allowed), ()
        new = [self.n_used + 1, self.n_used + 2]
        if cap is not None:
            new = [c for c in new if c <= cap]
        return list(range(1, self.n_used + 1)) + new, tuple(new)

    def _ordered_palette(self, allowed):
        if allowed is not None:
            return sorted(allowed), ()
        used = sorted(self.color_use)
        cap = self.spec.max_colors
        room = None if cap is None else cap - len(used)
        if room is not None and room <= 0:
            return used, ()
        # one representative per gap between used colors
        if not used:
            gaps = [(Fraction(0), Fraction(2))]
        else:
            gaps = [(used[0] - 2, used[0])]
            gaps += list(zip(used, used[1:]))
            gaps.append((used[-1], used[-1] + 2))
        return used, gaps

    def options(self, b):
        """Color multisets for bundle b, each as a tuple of (color, count)."""
        _, _, ids = self.bundles[b]
        mu = len(ids)
        cols, extra = self.palette(b)
        out = []
        if self.spec.ordered:
            old = list(cols)
            gaps = list(extra)
            singles = old + [(lo + hi) / 2 for lo, hi in gaps]
            for c in singles:
                out.append(((c, mu),))
            if mu >= 2:
                room = None if self.spec.max_colors is None else self.spec.max_colors - len(old)
                pairs = set()
                for c1, c2 in itertools.combinations(sorted(singles), 2):
                    new_count = (c1 not in old) + (c2 not in old)
                    if room is not None and new_count > room:
                        continue
                    pairs.add((c1, c2))
                if room is None or room >= 2:
                    for lo, hi in gaps:
                        step = (hi - lo) / 3
                        pairs.add((lo + step, lo + 2 * step))
                for c1, c2 in sorted(pairs):
                    for j in range(1, mu):
                        out.append(((c1, j), (c2, mu - j)))
            return out
        new = set(extra)
        top = max(new) if len(new) == 2 else None
        for c in cols:
            if c == top:
                continue  # a lone new color is always the lower one
            out.append(((c, mu),))
        if mu >= 2:
            for c1, c2 in itertools.combinations(cols, 2):
                for j in range(1, mu):
                    if c2 == top:
                        if c1 != min(new) or j < mu - j:
                            continue
                    out.append(((c1, j), (c2, mu - j)))
        return out

    def run(self):
        if not all(self.vertex_ok(v) for v in range(self.g.vertex_count)):
            return False
        return self._search(range(self.g.vertex_count))

    def _regions(self, scope):
        """Split the vertices of scope with undecided bundles into linked regions."""
        seen = set()
        regions = []
        for s in scope:
            if s in seen or not self.undecided_at[s]:
                continue
            seen.add(s)
            stack, part = [s], [s]
            while stack:
                x = stack.pop()
                for b in self.at[x]:
                    if self.assign[b] is not None:
                        continue
                    u, v, _ = self.bundles[b]
                    y = v if u == x else u
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
                        part.append(y)
            regions.append(part)
        return regions

    def _search(self, scope):
        # Without a color cap, regions that share no undecided bundle are
        # independent: fresh colors in one can always be renamed apart from
        # the other's, and in ordered mode squeezed into the same gap.
        if self.spec.max_colors is None:
            regions = self._regions(scope)
            if len(regions) > 1:
                mark = len(self.trail)
                for part in sorted(regions, key=len):
                    if not self._search(part):
                        self._undo(mark)
                        return False
                return True
            if not regions:
                return True
            scope = regions[0]
            key = self._region_key(scope)
            if key in self.failed:
                return False
        else:
            key = None
        b = self.choose(scope)
        if b is None:
            return True
        u, v, _ = self.bundles[b]
        for ms in self.options(b):
            self.meter.tick()
            mark = len(self.trail)
            self._do(b, ms)
            if self.vertex_ok(u) and (u == v or self.vertex_ok(v)):
                if self._search(scope):
                    return True
            self._undo(mark)
        if key is not None and len(self.failed) < self.FAIL_CACHE:
            self.failed.add(key)
        return False

    def _region_key(self, region):
        """What a region's feasibility depends on: its open bundles and the
        colors already present at its vertices, up to renaming."""
        region = sorted(region)
        open_bundles = tuple(sorted({b for x in region for b in self.at[x] if self.assign[b] is None}))
        if self.spec.ordered:
            present = sorted({c for x in region for c, k in self.counts[x].items() if k})
            rename = {c: i for i, c in enumerate(present)}
        else:
            rename = {}
            for x in region:
                for c in sorted(self.counts[x]):
                    if self.counts[x][c] and c not in rename:
                        rename[c] = len(rename)
        state = tuple(tuple(sorted((rename[c], k) for c, k in self.counts[x].items() if k)) for x in region)
        return open_bundles, state

    def _do(self, b, ms):
        self.apply(b, ms, +1)
        self.assign[b] = ms
        self.trail.append((b, self.n_used))
        if not self.spec.ordered:
            self.n_used = max([self.n_used] + [c for c, _ in ms])

    def _undo(self, mark):
        while len(self.trail) > mark:
            b, saved = self.trail.pop()
            self.n_used = saved
            self.apply(b, self.assign[b], -1)
            self.assign[b] = None

    def witness(self) -> EdgeColoring:
        colors = [0] * self.g.m
        for b, ms in enumerate(self.assign):
            ids = self.bundles[b][2]
            seq = [c for c, k in sorted(ms) for _ in range(k)]
            for eid, c in zip(ids, seq):
                colors[eid] = c
        rank = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return EdgeColoring(tuple(rank[c] for c in colors))


def solve_coloring(g: Pseudograph, spec: ColoringSpec, budget: SearchBudget | None = None) -> SolveResult:
    """Decide whether g has an (r-t, t)-coloring satisfying ``spec``.

    Complete up to color renaming; SAT witnesses use colors 1..k.
    """
    if not is_regular(g, spec.r):
        raise InvalidArgument(f"solve_coloring needs an {spec.r}-regular graph")
    meter = _Meter(budget)
    search = _ColoringSearch(g, spec, meter)
    try:
        found = search.run()
    except _Exhausted:
        return meter.result(Status.EXHAUSTED)
    if not found:
        return meter.result(Status.UNSAT)
    c = search.witness()
    verdict = verify_coloring(g, c, spec)
    assert verdict, f"solver produced an invalid coloring: {verdict}"
    return meter.result(Status.SAT, c)


# ---------------------------------------------------------------------------
# S-factors


class _FactorSearch:
    """Backtracking over per-bundle multiplicities with propagation.

    Each vertex keeps its current degree and the undecided multiplicity
    around it; a vertex is alive while some allowed degree is reachable.
    When all allowed degrees share a parity, every component of the
    undecided structure must have an even total parity demand.  Components
    that share no undecided bundle are solved independently.
    """

    def __init__(self, g: Pseudograph, degree_set, meter: _Meter):
        self.g = g
        self.S = sorted(set(degree_set))
        self.meter = meter
        parities = {d % 2 for d in self.S}
        self.parity = parities.pop() if len(parities) == 1 else None
        self.bundles, self.at = _bundle_list(g)
        n = g.vertex_count
        self.deg = [0] * n
        self.und1 = [0] * n
        self.und2 = [0] * n
        for u, v, ids in self.bundles:
            if u == v:
                self.und2[u] += len(ids)
            else:
                self.und1[u] += len(ids)
                self.und1[v] += len(ids)
        self.value = [None] * len(self.bundles)
        self.trail = []

    def _set(self, b, k):
        u, v, ids = self.bundles[b]
        mu = len(ids)
        self.value[b] = k
        if u == v:
            self.deg[u] += 2 * k
            self.und2[u] -= mu
        else:
            self.deg[u] += k
            self.deg[v] += k
            self.und1[u] -= mu
            self.und1[v] -= mu
        self.trail.append(b)

    def _undo_to(self, mark):
        while len(self.trail) > mark:
            b = self.trail.pop()
            u, v, ids = self.bundles[b]
            mu, k = len(ids), self.value[b]
            self.value[b] = None
            if u == v:
                self.deg[u] -= 2 * k
                self.und2[u] += mu
            else:
                self.deg[u] -= k
                self.deg[v] -= k
                self.und1[u] += mu
                self.und1[v] += mu

    def needs(self, v):
        """Feasible extra degrees at v given its undecided bundles."""
        top = self.und1[v] + 2 * self.und2[v]
        even_only = self.und1[v] == 0
        out = []
        for d in self.S:
            x = d - self.deg[v]
            if 0 <= x <= top and (not even_only or x % 2 == 0):
                out.append(x)
        return out

    def propagate(self, vertices):
        queue = list(vertices)
        while queue:
            v = queue.pop()
            need = self.needs(v)
            if not need:
                return False
            top = self.und1[v] + 2 * self.und2[v]
            if top == 0:
                continue
            if need == [0]:
                forced = 0
            elif need == [top]:
                forced = None  # every undecided bundle at v is full
            else:
                continue
            for b in self.at[v]:
                if self.value[b] is None:
                    u, w, ids = self.bundles[b]
                    self._set(b, 0 if forced == 0 else len(ids))
                    queue.append(w if u == v else u)
            queue.append(v)
        return True

    def components(self, bundle_ids):
        """Split undecided bundles into groups that share no vertex."""
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b in bundle_ids:
            u, v, _ = self.bundles[b]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups = {}
        for b in bundle_ids:
            groups.setdefault(find(self.bundles[b][0]), []).append(b)
        return list(groups.values())

    def parity_ok(self, group):
        if self.parity is None:
            return True
        verts = set()
        for b in group:
            u, v, _ = self.bundles[b]
            verts.add(u)
            verts.add(v)
        return sum(self.parity - self.deg[v] for v in verts) % 2 == 0

    def touched(self, bundle_ids):
        verts = set()
        for b in bundle_ids:
            u, v, _ = self.bundles[b]
            verts.add(u)
            verts.add(v)
        return verts

    def solve(self, bundle_ids):
        self.meter.tick()
        mark = len(self.trail)
        if not self.propagate(self.touched(bundle_ids)):
            self._undo_to(mark)
            return False
        rest = [b for b in bundle_ids if self.value[b] is None]
        if not rest:
            return True
        groups = self.components(rest)
        if not all(self.parity_ok(gr) for gr in groups):
            self._undo_to(mark)
            return False
        if len(groups) > 1:
            for gr in sorted(groups, key=len):
                if not self.solve(gr):
                    self._undo_to(mark)
                    return False
            return True
        b = self.choose(rest)
        u, v, ids = self.bundles[b]
        for k in range(len(ids) + 1):
            sub = len(self.trail)
            self._set(b, k)
            if self.needs(u) and self.needs(v) and self.solve(rest):
                return True
            self._undo_to(sub)
        self._undo_to(mark)
        return False

    def choose(self, rest):
        count = {}
        for b in rest:
            u, v, _ = self.bundles[b]
            count[u] = count.get(u, 0) + 1
            if v != u:
                count[v] = count.get(v, 0) + 1
        v = min(count, key=lambda x: (count[x], x))
        return min(b for b in rest if v in self.bundles[b][:2])

    def run(self):
        n = self.g.vertex_count
        for v in range(n):
            if not self.needs(v):
                return False
        all_b = list(range(len(self.bundles)))
        if not all_b:
            return True
        return self.solve(all_b)

    def witness(self):
        eids = []
        for b, k in enumerate(self.value):
            eids.extend(self.bundles[b][2][:k])
        return FactorWitness.of(eids, self.S)


def solve_factor(g: Pseudograph, degree_set: Iterable[int], budget: SearchBudget | None = None) -> SolveResult:
    """Decide whether g has a spanning subgraph with every degree in ``degree_set``."""
    degree_set = frozenset(degree_set)
    if not degree_set or min(degree_set) < 0:
        raise InvalidArgument("degree_set must be a nonempty set of non-negative integers")
    meter = _Meter(budget)
    search = _FactorSearch(g, degree_set, meter)
    try:
        found = search.run()
    except _Exhausted:
        return meter.result(Status.EXHAUSTED)
    if not found:
        return meter.result(Status.UNSAT)
    w = search.witness()
    assert verify_factor(g, w), "solver produced an invalid factor"
    return meter.result(Status.SAT, w)


# ---------------------------------------------------------------------------
# perfect matchings and the Tutte condition


def perfect_matching(g: Pseudograph) -> SolveResult:
    """Perfect matching by backtracking on the lowest unmatched vertex.

    Loops are ignored; parallel edges are collapsed to their lowest id.
    """
    meter = _Meter(None)
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for (u, v), ids in g.bundles.items():
        if u != v:
            adj[u].append((v, ids[0]))
            adj[v].append((u, ids[0]))
    for lst in adj:
        lst.sort()
    full = (1 << n) - 1
    failed = set()
    chosen = []

    def match(mask):
        if mask == full:
            return True
        if mask in failed:
            return False
        meter.tick()
        v = (~mask & (mask + 1)).bit_length() - 1
        for w, eid in adj[v]:
            if not mask >> w & 1:
                chosen.append(eid)
                if match(mask | 1 << v | 1 << w):
                    return True
                chosen.pop()
        failed.add(mask)
        return False

    if n % 2 == 0 and match(0):
        return meter.result(Status.SAT, FactorWitness.of(chosen, {1}))
    return meter.result(Status.UNSAT)


def odd_components(g: Pseudograph, removed: Iterable[int]) -> int:
    skip = frozenset(removed)
    comps = _components(g.vertex_count, g.edges, skip)
    return sum(len(c) % 2 for c in comps)


def tutte_violator(g: Pseudograph, cap: int = TUTTE_CAP) -> set[int] | None:
    """Smallest (then lexicographically first) S with odd(G - S) > |S|, else None."""
    n = g.vertex_count
    if n > cap:
        raise UnsupportedSize(f"tutte_violator is capped at {cap} vertices (got {n})")
    for size in range(n + 1):
        for S in itertools.combinations(range(n), size):
            if odd_components(g, S) > size:
                return set(S)
    return None


# ---------------------------------------------------------------------------
# constructive t-factors for even regularity


def euler_circuit(g: Pseudograph, start: int) -> list[tuple[int, int, int]]:
    """Closed walk using every edge of start's component once, as (tail, head, edge id)."""
    used = [False] * g.m
    ptr = [0] * g.vertex_count
    stack = [(start, None)]
    walk = []
    while stack:
        v, via = stack[-1]
        inc = g.incidence[v]
        while ptr[v] < len(inc) and used[inc[ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(inc):
            stack.pop()
            if via is not None:
                walk.append(via)
            continue
        eid = inc[ptr[v]]
        used[eid] = True
        w = g.other_end(eid, v)
        stack.append((w, (v, w, eid)))
    walk.reverse()
    return walk


def _bipartite_perfect_matching(n, arcs, alive):
    """Augmenting-path matching between tails and heads of the alive arcs."""
    adj = [[] for _ in range(n)]
    for idx, (a, b, _) in enumerate(arcs):
        if alive[idx]:
            adj[a].append((b, idx))
    match_head = [None] * n

    def augment(a, seen):
        for b, idx in adj[a]:
            if b in seen:
                continue
            seen.add(b)
            if match_head[b] is None or augment(arcs[match_head[b]][0], seen):
                match_head[b] = idx
                return True
        return False

    for a in range(n):
        if not augment(a, set()):
            raise AssertionError("regular bipartite multigraph without a perfect matching")
    return [idx for idx in match_head if idx is not None]


def two_factorization(g: Pseudograph) -> list[frozenset[int]]:
    """Split an even-regular pseudograph into r/2 edge-disjoint 2-factors."""
    degs = set(g.degrees)
    if len(degs) > 1:
        raise InvalidArgument("two_factorization needs a regular graph")
    r = degs.pop() if degs else 0
    if r % 2:
        raise InvalidArgument(f"two_factorization needs even regularity (got {r})")
    arcs = []
    for comp in connected_components(g):
        arcs.extend(euler_circuit(g, comp[0]))
    alive = [True] * len(arcs)
    factors = []
    for _ in range(r // 2):
        picked = _bipartite_perfect_matching(g.vertex_count, arcs, alive)
        for idx in picked:
            alive[idx] = False
        factors.append(frozenset(arcs[idx][2] for idx in picked))
    return factors


def even_t_factor(g: Pseudograph, t: int) -> FactorWitness:
    """Constructive t-factor of an r-regular graph, r and t even (after Petersen)."""
    degs = set(g.degrees)
    if len(degs) > 1:
        raise InvalidArgument("even_t_factor needs a regular graph")
    r = degs.pop() if degs else 0
    if r % 2 or t % 2 or t <= 0:
        raise InvalidArgument(f"even_t_factor needs even r and even positive t (r={r}, t={t})")
    if t > r:
        raise InvalidArgument(f"t={t} exceeds r={r}")
    factors = two_factorization(g)
    edges = frozenset().union(*factors[: t // 2])
    w = FactorWitness(edges, frozenset({t}))
    assert verify_factor(g, w), "constructed t-factor fails verification"
    return w


# ---------------------------------------------------------------------------
# 3-regular subgraphs


@dataclass(frozen=True)
class Subgraph:
    vertices: frozenset[int]
    edge_ids: frozenset[int]


def find_regular_subgraph(g: Pseudograph, k: int, min_vertices: int = 1,
                          cap: int = SUBGRAPH_CAP) -> Subgraph | None:
    """Some sub-pseudograph with at least ``min_vertices`` vertices, all of degree k."""
    n = g.vertex_count
    if n > cap:
        raise UnsupportedSize(f"regular subgraph search is capped at {cap} vertices (got {n})")
    candidates = [v for v in range(n) if g.degrees[v] >= k]
    for size in range(max(1, min_vertices), len(candidates) + 1):
        if (k * size) % 2:
            continue
        for W in itertools.combinations(candidates, size):
            sub, verts, eids = g.induced(W)
            res = solve_factor(sub, {k})
            if res.sat:
                return Subgraph(frozenset(verts), frozenset(eids[e] for e in res.witness.edge_ids))
    return None


def find_3_regular_subgraph(g: Pseudograph, cap: int = SUBGRAPH_CAP) -> Subgraph | None:
    return find_regular_subgraph(g, 3, cap=cap)
