"""Generators for the graph families used throughout the package.

Vertex layouts are fixed so that tests and certificates can name vertices:

* ``theorem41_graph(r, t)`` for odd r: v = 0, u = 1, u_i = 1 + i (i = 1..t+1).
* ``theorem42_graph(r)``: copy i (0-based) of K_{r+1} - e occupies vertices
  i*(r+1) .. i*(r+1)+r, its two degree r-1 vertices being the first two;
  the apex (or the triangle u_0, u_1, u_2) comes last.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coloring import EdgeColoring
from .decompose import double_cycle
from .errors import InvalidArgument
from .graph import Pseudograph, is_regular

__all__ = [
    "double_cycle", "complete_graph", "complete_minus_edge", "theorem41_graph",
    "theorem42_graph", "theorem42_coloring", "random_regular_pseudograph",
    "FamilyParams", "build_family", "FAMILIES",
]


def complete_graph(n: int) -> Pseudograph:
    if n < 1:
        raise InvalidArgument("complete graph needs n >= 1")
    return Pseudograph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_minus_edge(n: int) -> Pseudograph:
    """K_n with the edge {0, 1} removed."""
    if n < 2:
        raise InvalidArgument("complete_minus_edge needs n >= 2")
    return Pseudograph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)))


def theorem41_graph(r: int, t: int) -> Pseudograph:
    """An r-regular graph with no (r-t, t)-coloring (t odd, t <= r/2)."""
    if t < 1 or t % 2 == 0:
        raise InvalidArgument(f"t must be odd and positive (got {t})")
    if 2 * t > r:
        raise InvalidArgument(f"need t <= r/2 (got r={r}, t={t})")
    if r % 2 == 0:
        return Pseudograph(1, ((0, 0),) * (r // 2))
    bound = (t + 2) * (t + 1)
    if r < bound:
        raise InvalidArgument(f"odd r needs r >= (t+2)(t+1) = {bound} (got r={r})")
    v, u = 0, 1
    edges = []
    for i in range(1, t + 2):
        ui = 1 + i
        edges += [(v, ui)] * (t + 2)
        edges += [(ui, ui)] * ((r - t - 2) // 2)
    edges += [(v, u)] * (r - bound)
    edges += [(u, u)] * (bound // 2)
    g = Pseudograph(t + 3, tuple(edges))
    assert is_regular(g, r)
    return g


def _check42(r):
    if r % 2 or r < 6:
        raise InvalidArgument(f"theorem42_graph needs even r >= 6 (got {r})")


def _copy_count(r):
    half = r // 2
    return half if half % 2 else 3 * (half - 1)


def theorem42_graph(r: int) -> Pseudograph:
    """An (r-1,1)-colorable r-regular graph of even order with no {r-1,1}-factor."""
    _check42(r)
    half = r // 2
    k = r + 1
    base = complete_minus_edge(k)
    copies = _copy_count(r)
    edges = []
    for i in range(copies):
        off = i * k
        edges += [(a + off, b + off) for a, b in base.edges]
    hub = copies * k
    if half % 2:
        for i in range(copies):
            edges += [(i * k, hub), (i * k + 1, hub)]
        g = Pseudograph(hub + 1, tuple(edges))
    else:
        u = [hub, hub + 1, hub + 2]
        edges += [(u[0], u[1]), (u[0], u[2]), (u[1], u[2])]
        for i in range(1, copies + 1):
            j = next(j for j in range(3) if j * (half - 1) < i <= (j + 1) * (half - 1))
            off = (i - 1) * k
            edges += [(off, u[j]), (off + 1, u[j])]
        g = Pseudograph(hub + 3, tuple(edges))
    assert is_regular(g, r) and g.vertex_count % 2 == 0
    return g


RED, GREEN, BLUE = 1, 2, 3


def theorem42_coloring(r: int) -> EdgeColoring:
    """Three-color (r-1,1)-coloring of ``theorem42_graph(r)``.

    Inside each copy: the K_r on vertices 1..r is red, vertex 0 sends blue
    edges into it; the attachment edges are green.  One designated copy per
    hub sends a blue attachment edge from its vertex 1, which gives the hub
    its single minority edge.  In the triangle case only u_0 uses a
    designated copy; u_1 and u_2 get their minority edge from the blue
    triangle edge u_1u_2.
    """
    g = theorem42_graph(r)
    k = r + 1
    hub = _copy_count(r) * k
    colors = []
    # copy 0 hangs on the apex, or on u_0 in the triangle case
    special = 0
    for eid, (a, b) in enumerate(g.edges):
        if a < hub and b < hub:
            off = (a // k) * k
            colors.append(BLUE if a == off else RED)
        elif a < hub:
            copy = a // k
            is_one = a == copy * k + 1
            colors.append(BLUE if (copy == special and is_one) else GREEN)
        else:
            # triangle edges; u_1 u_2 is the only one not touching u_0
            colors.append(BLUE if (a, b) == (hub + 1, hub + 2) else GREEN)
    return EdgeColoring(tuple(colors))


def random_regular_pseudograph(r: int, n: int, seed: int) -> Pseudograph:
    """Configuration model: a uniform random pairing of the r*n stubs."""
    if r < 0 or n < 0:
        raise InvalidArgument("r and n must be non-negative")
    if (r * n) % 2:
        raise InvalidArgument(f"r*n must be even (got r={r}, n={n})")
    stubs = [v for v in range(n) for _ in range(r)]
    random.Random(seed).shuffle(stubs)
    edges = tuple((stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2))
    return Pseudograph(n, edges)


@dataclass(frozen=True)
class FamilyParams:
    family: str
    n: int | None = None
    r: int | None = None
    t: int | None = None
    seed: int | None = None


def _need(p: FamilyParams, *names):
    missing = [x for x in names if getattr(p, x) is None]
    if missing:
        raise InvalidArgument(f"family {p.family!r} needs --{' --'.join(missing)}")


def build_family(p: FamilyParams) -> Pseudograph:
    if p.family not in FAMILIES:
        raise InvalidArgument(f"unknown family {p.family!r}; known: {', '.join(FAMILIES)}")
    return FAMILIES[p.family](p)


def _fam_double_cycle(p):
    _need(p, "n")
    return double_cycle(p.n)


def _fam_thm41(p):
    _need(p, "r", "t")
    return theorem41_graph(p.r, p.t)


def _fam_thm42(p):
    _need(p, "r")
    return theorem42_graph(p.r)


def _fam_complete(p):
    _need(p, "n")
    return complete_graph(p.n)


def _fam_complete_minus(p):
    _need(p, "n")
    return complete_minus_edge(p.n)


def _fam_random(p):
    _need(p, "r", "n")
    return random_regular_pseudograph(p.r, p.n, 0 if p.seed is None else p.seed)


FAMILIES = {
    "double-cycle": _fam_double_cycle,
    "thm41": _fam_thm41,
    "thm42": _fam_thm42,
    "complete": _fam_complete,
    "complete-minus-edge": _fam_complete_minus,
    "random-regular": _fam_random,
}
