"""Isomorph-free exhaustive generation of small pseudographs.

Graphs are generated vertex by vertex as symmetric multiplicity matrices
(diagonal = loop count, a loop adding 2 to the row's degree).  A labeled
matrix is kept only when its column-wise string

    col_j = (A[0][j], A[1][j], ..., A[j-1][j], A[j][j])

concatenated over j is lexicographically maximal among all vertex
permutations.  The leading principal submatrix of a maximal matrix is again
maximal, so non-maximal prefixes are pruned without losing any class, and
every class reaches the output exactly once.  The output is then
deduplicated a second time with the graph-core canonical form and sorted by
it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidArgument, UnsupportedSize
from .graph import CANONICAL_CAP, Pseudograph, canonical_form, is_connected

ENUM_CAP = CANONICAL_CAP


@dataclass(frozen=True)
class EnumSpec:
    r: int
    n: int
    connected_only: bool = False
    max_multiplicity: int | None = None
    max_loops: int | None = None

    def __post_init__(self):
        if self.r < 0 or self.n < 1:
            raise InvalidArgument("need r >= 0 and n >= 1")


def _is_max_prefix(A, k, twins_ok=True) -> bool:
    """True iff the leading k x k block of A has the maximal column string."""
    used = [False] * k
    sigma = [0] * k

    def place(p):
        target_loop = A[p][p]
        for x in range(k):
            if used[x]:
                continue
            row = A[x]
            # compare permuted column p with the identity's column p
            cmp = 0
            for i in range(p):
                a = row[sigma[i]]
                b = A[i][p]
                if a != b:
                    cmp = 1 if a > b else -1
                    break
            if cmp == 0:
                a, b = row[x], target_loop
                if a != b:
                    cmp = 1 if a > b else -1
            if cmp > 0:
                return False
            if cmp < 0:
                continue
            if p + 1 == k:
                continue
            used[x] = True
            sigma[p] = x
            ok = place(p + 1)
            used[x] = False
            if not ok:
                return False
        return True

    return place(0)


def _orderly(n, cap, exact, min_edges=0, max_edges=None, max_mult=None, max_loops=None):
    """Yield maximal-string multiplicity matrices (as fresh lists)."""
    A = [[0] * n for _ in range(n)]
    deg = [0] * n
    mult_cap = cap if max_mult is None else min(cap, max_mult)
    loop_cap = cap // 2 if max_loops is None else min(cap // 2, max_loops)
    edges_so_far = [0]

    def remaining_room(j):
        # upper bound on edges still addable once columns 0..j are fixed
        free_old = sum(cap - deg[i] for i in range(j + 1))
        later = n - 1 - j
        return (free_old + later * cap) // 2

    def column(j, i):
        if i == j:
            # loops at j
            room = cap - deg[j]
            hi = min(loop_cap, room // 2)
            opts = range(hi, -1, -1)
            if exact and j == n - 1:
                if room % 2 or room // 2 > loop_cap:
                    return
                opts = [room // 2]
            for lp in opts:
                A[j][j] = lp
                deg[j] += 2 * lp
                edges_so_far[0] += lp
                if _column_done(j):
                    yield from vertex(j + 1)
                deg[j] -= 2 * lp
                edges_so_far[0] -= lp
            A[j][j] = 0
            return
        hi = min(mult_cap, cap - deg[i], cap - deg[j])
        lo = 0
        if exact and j == n - 1:
            need = cap - deg[i]
            if need > hi:
                return
            lo = hi = need
        for x in range(hi, lo - 1, -1):
            A[i][j] = A[j][i] = x
            deg[i] += x
            deg[j] += x
            edges_so_far[0] += x
            if not exact or _old_feasible(i, j):
                yield from column(j, i + 1)
            deg[i] -= x
            deg[j] -= x
            edges_so_far[0] -= x
        A[i][j] = A[j][i] = 0

    def _old_feasible(i, j):
        # vertex i gets no more edges from columns < j; later vertices can fill its deficit
        later = n - 1 - j
        return deg[i] == cap or later > 0

    def _column_done(j):
        if exact:
            later = n - 1 - j
            deficit = sum(cap - deg[i] for i in range(j + 1))
            if later == 0 and deficit:
                return False
            if deficit > later * cap:
                return False
            # each later vertex has cap stubs; what is not used on old vertices pairs up among later ones
            if (later * cap - deficit) % 2:
                return False
        else:
            if max_edges is not None and edges_so_far[0] > max_edges:
                return False
            if edges_so_far[0] + remaining_room(j) < min_edges:
                return False
        return _is_max_prefix(A, j + 1)

    def vertex(j):
        if j == n:
            if not exact and edges_so_far[0] < min_edges:
                return
            if max_edges is not None and edges_so_far[0] > max_edges:
                return
            yield [row[:] for row in A]
            return
        yield from column(j, 0)

    yield from vertex(0)


def _finish(mats, connected_only):
    seen = {}
    for mat in mats:
        g = Pseudograph.from_matrix(mat)
        if connected_only and not is_connected(g):
            continue
        code = canonical_form(g)
        if code in seen:
            raise AssertionError("orderly generation emitted an isomorphism class twice")
        seen[code] = g
    return [seen[c] for c in sorted(seen)]


def _check_cap(n):
    if n > ENUM_CAP:
        raise UnsupportedSize(f"enumeration is capped at {ENUM_CAP} vertices (got {n})")


def enumerate_regular(spec: EnumSpec) -> list[Pseudograph]:
    """One r-regular pseudograph on n vertices per isomorphism class."""
    _check_cap(spec.n)
    if (spec.r * spec.n) % 2:
        return []
    mats = _orderly(spec.n, spec.r, True, max_mult=spec.max_multiplicity, max_loops=spec.max_loops)
    return _finish(mats, spec.connected_only)


def iter_regular(r: int, n_max: int, connected_only: bool = True, n_min: int = 1, **caps) -> Iterator[Pseudograph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_regular(EnumSpec(r, n, connected_only, **caps))


def enumerate_bounded(n: int, max_degree: int, min_edges: int = 0, max_edges: int | None = None,
                      connected_only: bool = False, max_multiplicity: int | None = None,
                      max_loops: int | None = None) -> list[Pseudograph]:
    """All pseudographs on n vertices with degrees <= max_degree and at least min_edges edges."""
    _check_cap(n)
    if n < 1:
        raise InvalidArgument("n must be positive")
    mats = _orderly(n, max_degree, False, min_edges, max_edges, max_multiplicity, max_loops)
    return _finish(mats, connected_only)
