"""(r-t, t)-colorings, S-factors and the correspondence between them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import AmbiguousSplit, InvalidArgument
from .graph import Pseudograph, is_regular


@dataclass(frozen=True)
class ColoringSpec:
    """Contract for an (r-t, t)-coloring of an r-regular graph.

    When ``ordered`` is set, the majority color must be the smaller integer
    at every vertex.
    """

    r: int
    t: int
    ordered: bool = False
    max_colors: int | None = None

    def __post_init__(self):
        if self.r < 1 or self.t < 1:
            raise InvalidArgument("r and t must be positive")
        if self.t >= self.r:
            raise InvalidArgument(f"need t < r (got r={self.r}, t={self.t})")
        if self.max_colors is not None and self.max_colors < 1:
            raise InvalidArgument("max_colors must be positive")

    @property
    def major(self) -> int:
        return self.r - self.t


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], m: int) -> "EdgeColoring":
        missing = [e for e in range(m) if e not in mapping]
        if missing:
            raise InvalidArgument(f"coloring is partial: edge {missing[0]} has no color")
        extra = [e for e in mapping if not 0 <= e < m]
        if extra:
            raise InvalidArgument(f"coloring names unknown edge {extra[0]}")
        return cls(tuple(mapping[e] for e in range(m)))

    def __getitem__(self, eid: int) -> int:
        return self.colors[eid]

    def __len__(self):
        return len(self.colors)

    def used(self) -> set[int]:
        return set(self.colors)

    def recolor(self, mapping: Mapping[int, int]) -> "EdgeColoring":
        return EdgeColoring(tuple(mapping[c] for c in self.colors))


@dataclass(frozen=True)
class FactorWitness:
    edge_ids: frozenset[int]
    degree_set: frozenset[int]

    @classmethod
    def of(cls, edge_ids: Iterable[int], degree_set: Iterable[int]) -> "FactorWitness":
        return cls(frozenset(edge_ids), frozenset(degree_set))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    vertex: int | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "OK" if self.ok else f"FAIL {self.reason}"


OK = Verdict(True)


def _as_coloring(g: Pseudograph, c) -> EdgeColoring:
    if isinstance(c, EdgeColoring):
        if len(c) != g.m:
            raise InvalidArgument(f"coloring has {len(c)} entries for {g.m} edges")
        return c
    if isinstance(c, Mapping):
        return EdgeColoring.from_mapping(c, g.m)
    seq = tuple(c)
    if len(seq) != g.m or any(x is None for x in seq):
        raise InvalidArgument("coloring is partial")
    return EdgeColoring(seq)


def incidence_profile(g: Pseudograph, c, v: int) -> Counter:
    """Colors seen at v as a multiset; a loop contributes its color twice."""
    g.check_vertex(v)
    c = _as_coloring(g, c)
    prof = Counter()
    for eid in g.incidence[v]:
        a, b = g.edges[eid]
        prof[c[eid]] += 2 if a == b else 1
    return prof


def verify_coloring(g: Pseudograph, c, spec: ColoringSpec) -> Verdict:
    """Check an (r-t, t)-coloring; report the first violation found."""
    if not is_regular(g, spec.r):
        raise InvalidArgument(f"graph is not {spec.r}-regular")
    try:
        c = _as_coloring(g, c)
    except InvalidArgument as exc:
        return Verdict(False, str(exc))
    if any(not isinstance(x, int) or x < 1 for x in c.colors):
        return Verdict(False, "colors must be positive integers")
    used = c.used()
    if len(used) < 2:
        return Verdict(False, "fewer than two colors used globally")
    if spec.max_colors is not None and len(used) > spec.max_colors:
        return Verdict(False, f"{len(used)} colors used, at most {spec.max_colors} allowed")
    for v in range(g.vertex_count):
        prof = incidence_profile(g, c, v)
        counts = sorted(prof.values())
        if len(prof) != 2 or counts != sorted((spec.major, spec.t)):
            shown = ",".join(f"{col}x{k}" for col, k in sorted(prof.items()))
            return Verdict(False, f"vertex {v} sees {{{shown}}}, needs {spec.major}+{spec.t}", v)
        if spec.ordered:
            (c1, k1), (c2, k2) = sorted(prof.items())
            majority = c1 if k1 == spec.major else c2
            minority = c2 if majority == c1 else c1
            if spec.major == spec.t:
                continue
            if not majority < minority:
                return Verdict(False, f"vertex {v}: majority color {majority} is not below minority {minority}", v)
    return OK


def factor_degrees(g: Pseudograph, edge_ids: Iterable[int]) -> list[int]:
    deg = [0] * g.vertex_count
    for eid in edge_ids:
        u, v = g.edges[eid]
        deg[u] += 1
        deg[v] += 1
    return deg


def verify_factor(g: Pseudograph, w: FactorWitness) -> Verdict:
    for eid in w.edge_ids:
        g.check_edge(eid)
    for v, d in enumerate(factor_degrees(g, w.edge_ids)):
        if d not in w.degree_set:
            return Verdict(False, f"vertex {v} has factor degree {d}, allowed {sorted(w.degree_set)}", v)
    return OK


FACTOR_COLOR = 2
REST_COLOR = 1


def factor_to_coloring(g: Pseudograph, w: FactorWitness, spec: ColoringSpec) -> EdgeColoring:
    """Color factor edges 2 and the remaining edges 1.

    A t-factor becomes an ordered coloring: the t minority edges carry the
    larger color at every vertex.
    """
    if spec.t == spec.major:
        raise AmbiguousSplit("t = r - t: majority and minority cannot be told apart")
    if not is_regular(g, spec.r):
        raise InvalidArgument(f"graph is not {spec.r}-regular")
    if not (w.degree_set <= {spec.t, spec.major}):
        raise InvalidArgument("witness degree set is not within {r-t, t}")
    if not verify_factor(g, w):
        raise InvalidArgument("witness is not a valid factor")
    return EdgeColoring(tuple(FACTOR_COLOR if e in w.edge_ids else REST_COLOR for e in range(g.m)))


def coloring_to_factor(g: Pseudograph, c, spec: ColoringSpec) -> FactorWitness:
    """Inverse of factor_to_coloring for colorings with exactly two colors.

    The edges carrying the larger of the two colors form the factor.
    """
    if spec.t == spec.major:
        raise AmbiguousSplit("t = r - t: majority and minority cannot be told apart")
    c = _as_coloring(g, c)
    used = sorted(c.used())
    if len(used) != 2:
        raise InvalidArgument(f"expected exactly two colors, found {len(used)}")
    high = used[1]
    return FactorWitness.of((e for e in range(g.m) if c[e] == high), {spec.t, spec.major})
