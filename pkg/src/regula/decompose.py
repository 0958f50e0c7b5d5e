"""Deciding (3,1)-colorability of connected 4-regular pseudographs.

A connected 4-regular pseudograph has no (3,1)-coloring exactly when it is
built from odd double cycles by repeated edge adhesion.  ``decide_31``
returns either a verified coloring or an adhesion tree whose recomposition
is isomorphic to the input.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import Union

from .coloring import ColoringSpec, EdgeColoring, Verdict, verify_coloring
from .errors import InvalidArgument
from .graph import (CANONICAL_CAP, Pseudograph, canonical_labeling, connected_components,
                    cut_vertices, edge_adhesion, is_connected, is_regular, same_structure)
from .solver import Status, solve_coloring

SPEC_31 = ColoringSpec(4, 1)
CERT_SCHEMA = 1


@dataclass(frozen=True)
class Leaf:
    n: int


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"
    e_left: int
    e_right: int


Tree = Union[Leaf, Node]


@dataclass(frozen=True)
class AdhesionTree:
    """An adhesion tree plus the map from its recomposition onto the target."""

    root: Tree
    vertex_map: tuple[int, ...]


@dataclass(frozen=True)
class Colorable:
    coloring: EdgeColoring


@dataclass(frozen=True)
class NonColorable:
    tree: AdhesionTree


Certificate = Union[Colorable, NonColorable]


def double_cycle_order(g: Pseudograph) -> list[int] | None:
    """Vertex sequence around the double cycle, or None if g is not one."""
    n = g.vertex_count
    if n == 0 or g.m != 2 * n:
        return None
    mat = g.multiplicity
    if n == 1:
        return [0] if mat[0][0] == 2 else None
    if n == 2:
        return [0, 1] if mat[0][1] == 4 else None
    for v in range(n):
        if mat[v][v]:
            return None
        partners = [w for w in range(n) if w != v and mat[v][w]]
        if len(partners) != 2 or any(mat[v][w] != 2 for w in partners):
            return None
    order = [0]
    prev = None
    cur = 0
    while True:
        nxt = [w for w in range(n) if w != cur and mat[cur][w] and w != prev]
        if prev is None:
            nxt = nxt[:1]
        if nxt[0] == 0:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order if len(order) == n else None


def recognize_double_cycle(g: Pseudograph) -> int | None:
    order = double_cycle_order(g)
    return None if order is None else len(order)


def double_cycle(n: int) -> Pseudograph:
    """Cycle on n vertices with every edge doubled (one vertex with two loops for n=1)."""
    if n < 1:
        raise InvalidArgument("double cycle needs n >= 1")
    if n == 1:
        return Pseudograph(1, ((0, 0), (0, 0)))
    if n == 2:
        return Pseudograph(2, ((0, 1),) * 4)
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n)] * 2
    return Pseudograph(n, tuple(edges))


@dataclass(frozen=True)
class Split:
    """Result of cutting a 4-regular graph at a cut vertex.

    ``maps[i][x]`` is the vertex of the original graph that vertex x of
    ``parts[i]`` came from; ``join_edges[i]`` is the added edge.
    """

    parts: tuple[Pseudograph, Pseudograph]
    join_edges: tuple[int, int]
    maps: tuple[tuple[int, ...], tuple[int, ...]]


def decompose_at(g: Pseudograph, w: int) -> Split:
    """Undo an edge adhesion at the cut vertex w."""
    g.check_vertex(w)
    if not is_regular(g, 4) or not is_connected(g):
        raise InvalidArgument("decompose_at needs a connected 4-regular graph")
    comps = connected_components(g.induced([v for v in range(g.vertex_count) if v != w])[0])
    if len(comps) < 2:
        raise InvalidArgument(f"vertex {w} is not a cut vertex")
    assert len(comps) == 2, "a cut vertex of a 4-regular graph leaves exactly two components"
    rest = [v for v in range(g.vertex_count) if v != w]
    parts, joins, maps = [], [], []
    for comp in comps:
        members = [rest[i] for i in comp]
        sub, verts, _ = g.induced(members)
        index = {v: i for i, v in enumerate(verts)}
        ends = []
        for eid in g.incidence[w]:
            a, b = g.edges[eid]
            assert a != b, "a cut vertex of a 4-regular graph carries no loop"
            x = b if a == w else a
            if x in index:
                ends.append(index[x])
        assert len(ends) == 2, "each side of a cut vertex receives exactly two edges"
        part = Pseudograph(sub.vertex_count, sub.edges + ((ends[0], ends[1]),))
        parts.append(part)
        joins.append(part.m - 1)
        maps.append(tuple(verts))
    return Split(tuple(parts), tuple(joins), tuple(maps))


# ---------------------------------------------------------------------------
# recomposition and verification


def recompose(tree: Tree) -> Pseudograph:
    if isinstance(tree, Leaf):
        if tree.n < 1:
            raise InvalidArgument("leaf size must be positive")
        return double_cycle(tree.n)
    left, right = recompose(tree.left), recompose(tree.right)
    return edge_adhesion(left, tree.e_left, right, tree.e_right)


def _leaves(tree: Tree, path="root"):
    if isinstance(tree, Leaf):
        yield path, tree
    else:
        yield from _leaves(tree.left, path + ".left")
        yield from _leaves(tree.right, path + ".right")


def verify_certificate(g: Pseudograph, cert: Certificate) -> Verdict:
    if isinstance(cert, Colorable):
        return verify_coloring(g, cert.coloring, SPEC_31)
    if not isinstance(cert, NonColorable):
        return Verdict(False, "unknown certificate kind")
    tree = cert.tree
    for path, leaf in _leaves(tree.root):
        if leaf.n < 1 or leaf.n % 2 == 0:
            return Verdict(False, f"{path}: leaf n={leaf.n} is not an odd double cycle")
    try:
        h = recompose(tree.root)
    except InvalidArgument as exc:
        return Verdict(False, f"tree does not recompose: {exc}")
    if not same_structure(h, g, tree.vertex_map):
        return Verdict(False, "stored vertex map is not an isomorphism onto the graph")
    if h.vertex_count <= CANONICAL_CAP and canonical_labeling(h)[0] != canonical_labeling(g)[0]:
        return Verdict(False, "recomposition and graph have different canonical codes")
    return Verdict(True)


# ---------------------------------------------------------------------------
# decision procedure


class _Memo:
    """Canonical code -> (tree, recomposition order); safe for concurrent use."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            self._data[key] = value


_NO = object()


class Decider:
    def __init__(self):
        self.memo = _Memo()
        self.stats = {"memo_hits": 0, "splits_tried": 0}

    def noncolorable_tree(self, g: Pseudograph):
        """(tree, map recomposition -> g) if g is built from odd double cycles, else None."""
        key = None
        order = None
        if g.vertex_count <= CANONICAL_CAP:
            key, order = canonical_labeling(g)
            hit = self.memo.get(key)
            if hit is not None:
                self.stats["memo_hits"] += 1
                if hit is _NO:
                    return None
                tree, rec_order = hit
                phi = [0] * g.vertex_count
                for a, b in zip(rec_order, order):
                    phi[a] = b
                return tree, tuple(phi)
        found = self._decide(g)
        if key is not None:
            if found is None:
                self.memo.put(key, _NO)
            else:
                tree, phi = found
                inv = [0] * g.vertex_count
                for a, b in enumerate(phi):
                    inv[b] = a
                # order of the recomposition's vertices matching g's canonical order
                self.memo.put(key, (tree, tuple(inv[v] for v in order)))
        return found

    def _decide(self, g: Pseudograph):
        cyc = double_cycle_order(g)
        if cyc is not None:
            if len(cyc) % 2 == 0:
                return None
            return Leaf(len(cyc)), tuple(cyc)
        cuts = sorted(cut_vertices(g))
        for w in cuts:
            self.stats["splits_tried"] += 1
            split = decompose_at(g, w)
            sides = []
            for part in split.parts:
                res = self.noncolorable_tree(part)
                if res is None:
                    break
                sides.append(res)
            if len(sides) < 2:
                continue
            return self._join(g, w, split, sides)
        return None

    @staticmethod
    def _join(g, w, split, sides):
        (t1, phi1), (t2, phi2) = sides
        p1, p2 = split.parts
        r1_n = len(phi1)
        inv1 = {b: a for a, b in enumerate(phi1)}
        inv2 = {b: a for a, b in enumerate(phi2)}
        r1, r2 = recompose(t1), recompose(t2)
        e1 = _matching_edge(r1, inv1, p1.edges[split.join_edges[0]])
        e2 = _matching_edge(r2, inv2, p2.edges[split.join_edges[1]])
        phi = [0] * (r1_n + len(phi2) + 1)
        for x in range(r1_n):
            phi[x] = split.maps[0][phi1[x]]
        for x in range(len(phi2)):
            phi[r1_n + x] = split.maps[1][phi2[x]]
        phi[-1] = w
        return Node(t1, t2, e1, e2), tuple(phi)


def _matching_edge(rec: Pseudograph, inv: dict, pair) -> int:
    a, b = inv[pair[0]], inv[pair[1]]
    want = (min(a, b), max(a, b))
    for eid, e in enumerate(rec.edges):
        if e == want:
            return eid
    raise AssertionError("recomposition lacks the join edge")


def decide_31(g: Pseudograph, decider: Decider | None = None) -> Certificate:
    """Certificate of (3,1)-colorability or of its impossibility."""
    if not is_regular(g, 4):
        raise InvalidArgument("decide_31 needs a 4-regular graph")
    if not is_connected(g) or g.vertex_count == 0:
        raise InvalidArgument("decide_31 needs a connected graph")
    decider = decider or Decider()
    found = decider.noncolorable_tree(g)
    if found is not None:
        tree, phi = found
        return NonColorable(AdhesionTree(tree, phi))
    res = solve_coloring(g, SPEC_31)
    if res.status is not Status.SAT:
        raise AssertionError(f"structural decision says colorable but solver returned {res.status}")
    return Colorable(res.witness)


# ---------------------------------------------------------------------------
# serialization


def _tree_to_obj(tree: Tree):
    if isinstance(tree, Leaf):
        return {"kind": "leaf", "n": tree.n}
    return {"kind": "node", "e_left": tree.e_left, "e_right": tree.e_right,
            "left": _tree_to_obj(tree.left), "right": _tree_to_obj(tree.right)}


def _tree_from_obj(obj, path="root") -> Tree:
    if not isinstance(obj, dict):
        raise InvalidArgument(f"{path}: expected a record")
    kind = obj.get("kind")
    if kind == "leaf":
        n = obj.get("n")
        if not isinstance(n, int):
            raise InvalidArgument(f"{path}: leaf needs an integer n")
        return Leaf(n)
    if kind == "node":
        for k in ("e_left", "e_right"):
            if not isinstance(obj.get(k), int):
                raise InvalidArgument(f"{path}: node needs integer {k}")
        return Node(_tree_from_obj(obj.get("left"), path + ".left"),
                    _tree_from_obj(obj.get("right"), path + ".right"),
                    obj["e_left"], obj["e_right"])
    raise InvalidArgument(f"{path}: unknown kind {kind!r}")


def certificate_to_obj(cert: Certificate) -> dict:
    if isinstance(cert, Colorable):
        return {"schema": CERT_SCHEMA, "kind": "colorable", "coloring": list(cert.coloring.colors)}
    return {"schema": CERT_SCHEMA, "kind": "noncolorable",
            "tree": _tree_to_obj(cert.tree.root), "vertex_map": list(cert.tree.vertex_map)}


def certificate_from_obj(obj) -> Certificate:
    if not isinstance(obj, dict) or obj.get("schema") != CERT_SCHEMA:
        raise InvalidArgument(f"certificate must be a record with schema {CERT_SCHEMA}")
    kind = obj.get("kind")
    if kind == "colorable":
        colors = obj.get("coloring")
        if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
            raise InvalidArgument("colorable certificate needs an integer list 'coloring'")
        return Colorable(EdgeColoring(tuple(colors)))
    if kind == "noncolorable":
        vm = obj.get("vertex_map")
        if not isinstance(vm, list) or not all(isinstance(x, int) for x in vm):
            raise InvalidArgument("noncolorable certificate needs an integer list 'vertex_map'")
        return NonColorable(AdhesionTree(_tree_from_obj(obj.get("tree")), tuple(vm)))
    raise InvalidArgument(f"unknown certificate kind {kind!r}")


def dump_certificate(cert: Certificate) -> str:
    return json.dumps(certificate_to_obj(cert), indent=1, sort_keys=True) + "\n"


def load_certificate(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"certificate is not valid JSON: {exc}") from None
    return certificate_from_obj(obj)
