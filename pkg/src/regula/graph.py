"""Pseudograph representation and structural operations.

A pseudograph is an undirected multigraph in which loops and parallel edges
are allowed.  Every edge has a stable dense id (its position in ``edges``);
parallel edges and loops are separate records.  A loop adds two to the
degree of its vertex.
"""

from __future__ import annotations

import itertools
import struct
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidArgument, UnsupportedSize

CANONICAL_CAP = 10


@dataclass(frozen=True)
class Pseudograph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidArgument("vertex_count must be non-negative")
        normalized = []
        for pair in self.edges:
            u, v = pair
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidArgument(f"edge {pair} has an endpoint outside 0..{self.vertex_count - 1}")
            normalized.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(normalized))

    def __repr__(self):
        return f"Pseudograph({self.vertex_count}, {list(self.edges)})"

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex; a loop is listed once."""
        inc = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def loop_counts(self) -> tuple[int, ...]:
        loops = [0] * self.vertex_count
        for u, v in self.edges:
            if u == v:
                loops[u] += 1
        return tuple(loops)

    @cached_property
    def multiplicity(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix: off-diagonal parallel counts, diagonal loop counts."""
        mat = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for u, v in self.edges:
            mat[u][v] += 1
            if u != v:
                mat[v][u] += 1
        return tuple(tuple(row) for row in mat)

    @cached_property
    def bundles(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Edge ids grouped by endpoint pair, in id order."""
        groups = defaultdict(list)
        for eid, pair in enumerate(self.edges):
            groups[pair].append(eid)
        return {pair: tuple(ids) for pair, ids in sorted(groups.items())}

    def neighbors(self, v: int) -> set[int]:
        """Distinct vertices other than v joined to v by at least one edge."""
        out = set()
        for eid in self.incidence[v]:
            a, b = self.edges[eid]
            if a != b:
                out.add(b if a == v else a)
        return out

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise InvalidArgument(f"vertex {v!r} out of range for {self.vertex_count} vertices")

    def check_edge(self, eid: int) -> None:
        if not (isinstance(eid, int) and 0 <= eid < len(self.edges)):
            raise InvalidArgument(f"edge id {eid!r} out of range for {len(self.edges)} edges")

    # -- derived graphs ---------------------------------------------------

    @classmethod
    def from_matrix(cls, mat: Sequence[Sequence[int]]) -> "Pseudograph":
        """Build from a symmetric multiplicity matrix (diagonal = loop count)."""
        n = len(mat)
        edges = []
        for i in range(n):
            for j in range(i, n):
                edges.extend([(i, j)] * mat[i][j])
        return cls(n, tuple(edges))

    def relabel(self, perm: Sequence[int]) -> "Pseudograph":
        """Vertex v becomes perm[v]; edge ids are kept."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise InvalidArgument("relabel needs a permutation of the vertex set")
        return Pseudograph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges))

    def with_edge_order(self, order: Sequence[int]) -> "Pseudograph":
        """New graph whose edge i is old edge order[i]."""
        return Pseudograph(self.vertex_count, tuple(self.edges[i] for i in order))

    def induced(self, vertices: Iterable[int]) -> tuple["Pseudograph", list[int], list[int]]:
        """Induced sub-pseudograph.

        Returns the subgraph, the list of original vertices (new index ->
        old vertex) and the list of original edge ids (new edge id -> old).
        """
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges, edge_ids = [], []
        for eid, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                edges.append((index[u], index[v]))
                edge_ids.append(eid)
        return Pseudograph(len(keep), tuple(edges)), keep, edge_ids

    def remove_edges(self, eids: Iterable[int]) -> "Pseudograph":
        drop = set(eids)
        return Pseudograph(self.vertex_count,
                           tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def disjoint_union(self, other: "Pseudograph") -> "Pseudograph":
        shift = self.vertex_count
        return Pseudograph(shift + other.vertex_count,
                           self.edges + tuple((u + shift, v + shift) for u, v in other.edges))


# ---------------------------------------------------------------------------
# degrees and connectivity


def degree(g: Pseudograph, v: int) -> int:
    g.check_vertex(v)
    return g.degrees[v]


def is_regular(g: Pseudograph, r: int) -> bool:
    return all(d == r for d in g.degrees)


def _components(n: int, edges: Iterable[tuple[int, int]], skip_vertices=frozenset()) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        if u in skip_vertices or v in skip_vertices:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups = defaultdict(list)
    for v in range(n):
        if v not in skip_vertices:
            groups[find(v)].append(v)
    return sorted(groups.values())


def connected_components(g: Pseudograph) -> list[list[int]]:
    """Vertex partition into components, each sorted, ordered by smallest vertex."""
    return _components(g.vertex_count, g.edges)


def is_connected(g: Pseudograph) -> bool:
    return len(connected_components(g)) <= 1


def _require_connected(g: Pseudograph, what: str) -> None:
    if not is_connected(g):
        raise InvalidArgument(f"{what} needs a connected graph")


def cut_vertices(g: Pseudograph) -> set[int]:
    """Articulation points (Hopcroft-Tarjan low-link, iterative)."""
    _require_connected(g, "cut_vertices")
    n = g.vertex_count
    if n <= 2:
        return set()
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    result = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if parent == root:
            root_children += 1
        elif low[v] >= disc[parent]:
            result.add(parent)
    if root_children >= 2:
        result.add(root)
    return result


def is_two_connected(g: Pseudograph) -> bool:
    return g.vertex_count >= 2 and is_connected(g) and not cut_vertices(g)


@dataclass(frozen=True)
class EdgeCut:
    edge_ids: frozenset[int]
    minimal: bool
    sides: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.edge_ids)


def _cut_sides(g: Pseudograph, removed: set[int]) -> list[list[int]]:
    return _components(g.vertex_count, (e for i, e in enumerate(g.edges) if i not in removed))


def minimal_edge_cuts(g: Pseudograph, max_size: int) -> list[EdgeCut]:
    """All minimal edge cuts with at most ``max_size`` edges.

    A minimal cut never contains a loop, and it contains either all or none
    of the edges of a parallel bundle, so the enumeration runs over subsets of
    non-loop bundles whose total multiplicity is at most ``max_size``.
    """
    _require_connected(g, "minimal_edge_cuts")
    if max_size > 4:
        raise UnsupportedSize("minimal_edge_cuts enumerates cuts of size at most 4")
    groups = [ids for (u, v), ids in g.bundles.items() if u != v and len(ids) <= max_size]
    found = []

    def visit(start, chosen, size):
        if chosen:
            removed = set(itertools.chain.from_iterable(chosen))
            sides = _cut_sides(g, removed)
            if len(sides) >= 2:
                if len(sides) == 2 and _every_edge_crosses(g, removed, sides):
                    found.append(EdgeCut(frozenset(removed), True, tuple(tuple(s) for s in sides)))
                # supersets of a cut are never minimal
                return
        for i in range(start, len(groups)):
            if size + len(groups[i]) <= max_size:
                chosen.append(groups[i])
                visit(i + 1, chosen, size + len(groups[i]))
                chosen.pop()

    visit(0, [], 0)
    found.sort(key=lambda c: (c.size, sorted(c.edge_ids)))
    return found


def _every_edge_crosses(g: Pseudograph, removed: set[int], sides) -> bool:
    side_of = {}
    for idx, side in enumerate(sides):
        for v in side:
            side_of[v] = idx
    return all(side_of[g.edges[e][0]] != side_of[g.edges[e][1]] for e in removed)


def bridges(g: Pseudograph) -> list[int]:
    return sorted(next(iter(c.edge_ids)) for c in minimal_edge_cuts(g, 1))


def is_k_edge_connected(g: Pseudograph, k: int) -> bool:
    """True iff no edge cut with fewer than k edges exists (k <= 4)."""
    if k > 4:
        raise UnsupportedSize("is_k_edge_connected supports k <= 4")
    if k <= 0:
        return True
    if not is_connected(g):
        return False
    if g.vertex_count <= 1:
        return True
    return not minimal_edge_cuts(g, k - 1)


# ---------------------------------------------------------------------------
# adhesions


def edge_adhesion(g1: Pseudograph, e1: int, g2: Pseudograph, e2: int) -> Pseudograph:
    """Subdivide e1 and e2 and identify the two subdivision vertices.

    Layout: g1's vertices, then g2's (shifted), then the join vertex w.
    Edges: g1 minus e1, g2 minus e2, then u1-w, v1-w, u2-w, v2-w.
    """
    g1.check_edge(e1)
    g2.check_edge(e2)
    shift = g1.vertex_count
    w = shift + g2.vertex_count
    u1, v1 = g1.edges[e1]
    u2, v2 = g2.edges[e2]
    edges = [e for i, e in enumerate(g1.edges) if i != e1]
    edges += [(a + shift, b + shift) for i, (a, b) in enumerate(g2.edges) if i != e2]
    edges += [(u1, w), (v1, w), (u2 + shift, w), (v2 + shift, w)]
    return Pseudograph(w + 1, tuple(edges))


def loop_adhesion(g: Pseudograph, e: int) -> Pseudograph:
    """Subdivide e with a new last vertex x and put a loop on x."""
    g.check_edge(e)
    x = g.vertex_count
    u, v = g.edges[e]
    edges = [f for i, f in enumerate(g.edges) if i != e]
    edges += [(u, x), (v, x), (x, x)]
    return Pseudograph(x + 1, tuple(edges))


# ---------------------------------------------------------------------------
# canonical form

CanonicalCode = bytes


def _encode(mat, order) -> bytes:
    n = len(order)
    vals = [n]
    for i in range(n):
        row = mat[order[i]]
        for j in range(i, n):
            vals.append(row[order[j]])
    return struct.pack(f">{len(vals)}H", *vals)


def _refine(mat, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    n = len(mat)
    while True:
        cell_of = [0] * n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sigs = {}
            for v in cell:
                row = mat[v]
                counts = [0] * len(cells)
                for w in range(n):
                    if row[w] and w != v:
                        counts[cell_of[w]] += row[w]
                sigs.setdefault(tuple(counts), []).append(v)
            if len(sigs) > 1:
                changed = True
                for key in sorted(sigs):
                    new_cells.append(sigs[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def _orbit_rep(autos, fixed, v, explored):
    """True if v is in the orbit of some explored vertex under automorphisms fixing ``fixed``."""
    gens = [a for a in autos if all(a[x] == x for x in fixed)]
    if not gens:
        return False
    seen = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for a in gens:
            y = a[x]
            if y not in seen:
                if y in explored:
                    return True
                seen.add(y)
                frontier.append(y)
    return False


def canonical_labeling(g: Pseudograph, cap: int = CANONICAL_CAP) -> tuple[CanonicalCode, tuple[int, ...]]:
    """Canonical code and a vertex order realizing it.

    ``order[i]`` is the vertex of g placed at canonical position i.  The
    code is the lexicographically smallest multiplicity-matrix encoding over
    all orders compatible with the refined (degree, loop) partition, found by
    individualization-refinement with automorphism pruning.
    """
    n = g.vertex_count
    if n > cap:
        raise UnsupportedSize(f"canonical form is capped at {cap} vertices (got {n})")
    mat = g.multiplicity
    classes = defaultdict(list)
    for v in range(n):
        classes[(g.degrees[v], g.loop_counts[v])].append(v)
    cells = _refine(mat, [classes[k] for k in sorted(classes)])
    best: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def search(cells, fixed):
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            code = _encode(mat, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                auto = [0] * n
                for a, b in zip(best[1], order):
                    auto[a] = b
                autos.append(tuple(auto))
            return
        pos = cells.index(target)
        explored = set()
        for v in list(target):
            if explored and _orbit_rep(autos, fixed, v, explored):
                continue
            explored.add(v)
            rest = [w for w in target if w != v]
            child = cells[:pos] + [[v], rest] + cells[pos + 1:]
            search(_refine(mat, child), fixed + [v])

    search(cells, [])
    if n == 0:
        return _encode(mat, ()), ()
    return best[0], best[1]


def canonical_form(g: Pseudograph, cap: int = CANONICAL_CAP) -> CanonicalCode:
    return canonical_labeling(g, cap)[0]


def canonical_graph(g: Pseudograph, cap: int = CANONICAL_CAP) -> Pseudograph:
    """The representative of g's isomorphism class in canonical labeling."""
    _, order = canonical_labeling(g, cap)
    perm = [0] * g.vertex_count
    for pos, v in enumerate(order):
        perm[v] = pos
    mat = g.relabel(perm).multiplicity
    return Pseudograph.from_matrix(mat)


def isomorphism(g: Pseudograph, h: Pseudograph, cap: int = CANONICAL_CAP) -> list[int] | None:
    """A vertex map phi with h == g relabeled by phi (as multisets of edges), or None."""
    if g.vertex_count != h.vertex_count or g.m != h.m:
        return None
    cg, og = canonical_labeling(g, cap)
    ch, oh = canonical_labeling(h, cap)
    if cg != ch:
        return None
    phi = [0] * g.vertex_count
    for a, b in zip(og, oh):
        phi[a] = b
    return phi


def same_structure(g: Pseudograph, h: Pseudograph, phi: Sequence[int]) -> bool:
    """True iff phi maps the multiplicity matrix of g onto that of h."""
    if g.vertex_count != h.vertex_count or len(phi) != g.vertex_count:
        return False
    if sorted(phi) != list(range(g.vertex_count)):
        return False
    mg, mh = g.multiplicity, h.multiplicity
    n = g.vertex_count
    return all(mg[i][j] == mh[phi[i]][phi[j]] for i in range(n) for j in range(i, n))
