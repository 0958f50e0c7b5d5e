import itertools
import json
from concurrent.futures import ThreadPoolExecutor

import pytest

from oracles import random_relabel, seeded
from regula.coloring import ColoringSpec
from regula.constructions import complete_graph, double_cycle
from regula.decompose import (AdhesionTree, Colorable, Decider, Leaf, Node, NonColorable, certificate_from_obj,
                              certificate_to_obj, decide_31, decompose_at, dump_certificate, load_certificate,
                              recognize_double_cycle, recompose, verify_certificate)
from regula.enumeration import iter_regular
from regula.errors import InvalidArgument
from regula.graph import (Pseudograph, canonical_form, cut_vertices, edge_adhesion, is_regular, is_two_connected)
from regula.solver import solve_coloring

SPEC = ColoringSpec(4, 1)


def test_recognize_examples():
    assert recognize_double_cycle(Pseudograph(1, ((0, 0), (0, 0)))) == 1
    assert recognize_double_cycle(Pseudograph(2, ((0, 1),) * 4)) == 2
    assert recognize_double_cycle(complete_graph(5)) is None
    assert recognize_double_cycle(Pseudograph(2, ((0, 0), (0, 1), (0, 1), (1, 1)))) is None
    two_triangles = double_cycle(3).disjoint_union(double_cycle(3))
    assert recognize_double_cycle(two_triangles) is None


def test_recognize_relabeled_double_cycles():
    rng = seeded(1)
    for n in range(1, 12):
        g, _ = random_relabel(double_cycle(n), rng)
        assert recognize_double_cycle(g) == n


def test_decompose_inverts_adhesion():
    g = edge_adhesion(double_cycle(3), 1, double_cycle(3), 4)
    w = g.vertex_count - 1
    split = decompose_at(g, w)
    assert [recognize_double_cycle(p) for p in split.parts] == [3, 3]
    assert sum(p.vertex_count for p in split.parts) == g.vertex_count - 1
    assert sum(p.m for p in split.parts) == g.m - 2


def test_decompose_rejects_non_cut_vertex():
    with pytest.raises(InvalidArgument):
        decompose_at(double_cycle(4), 0)
    with pytest.raises(InvalidArgument):
        decompose_at(complete_graph(4), 0)


def test_cut_vertices_never_carry_loops_and_splits_recompose():
    splits = 0
    for g in iter_regular(4, 6):
        for w in cut_vertices(g):
            assert g.loop_counts[w] == 0
            split = decompose_at(g, w)
            p1, p2 = split.parts
            assert is_regular(p1, 4) and is_regular(p2, 4)
            back = edge_adhesion(p1, split.join_edges[0], p2, split.join_edges[1])
            assert canonical_form(back) == canonical_form(g)
            splits += 1
    assert splits > 50


def test_decide_examples():
    cert = decide_31(double_cycle(1))
    assert isinstance(cert, NonColorable) and cert.tree.root == Leaf(1)
    g = edge_adhesion(double_cycle(3), 0, double_cycle(3), 0)
    cert = decide_31(g)
    assert isinstance(cert, NonColorable)
    assert isinstance(cert.tree.root, Node)
    assert cert.tree.root.left == Leaf(3) and cert.tree.root.right == Leaf(3)
    assert verify_certificate(g, cert)
    cert = decide_31(double_cycle(2))
    assert isinstance(cert, Colorable) and verify_certificate(double_cycle(2), cert)


def test_decide_preconditions():
    with pytest.raises(InvalidArgument):
        decide_31(complete_graph(4))
    with pytest.raises(InvalidArgument):
        decide_31(double_cycle(3).disjoint_union(double_cycle(1)))


def test_decide_agrees_with_solver_up_to_six_vertices():
    count = 0
    for g in iter_regular(4, 6):
        cert = decide_31(g)
        assert isinstance(cert, Colorable) == solve_coloring(g, SPEC).sat
        assert verify_certificate(g, cert)
        if is_two_connected(g) and recognize_double_cycle(g) is None:
            assert isinstance(cert, Colorable)
        count += 1
    assert count == 1 + 2 + 4 + 10 + 28 + 97


def test_decide_is_isomorphism_invariant():
    rng = seeded(9)
    graphs = list(iter_regular(4, 6))
    for _ in range(150):
        g = rng.choice(graphs)
        h, _ = random_relabel(g, rng)
        a, b = decide_31(g), decide_31(h)
        assert type(a) is type(b)
        assert verify_certificate(h, b)


def _adhesion_closure(max_nodes):
    """All graphs built from leaves {1, 3} with at most max_nodes adhesions, up to isomorphism."""
    levels = [{}]
    for n in (1, 3):
        g = double_cycle(n)
        levels[0][canonical_form(g)] = g
    for k in range(1, max_nodes + 1):
        found = {}
        for i in range(k):
            j = k - 1 - i
            for a in levels[i].values():
                for b in levels[j].values():
                    for e1, e2 in itertools.product(range(a.m), range(b.m)):
                        h = edge_adhesion(a, e1, b, e2)
                        found.setdefault(canonical_form(h, cap=20), h)
        levels.append(found)
    return levels


def test_adhesions_of_odd_double_cycles_are_not_colorable():
    levels = _adhesion_closure(2)
    total = 0
    for level in levels:
        for g in level.values():
            assert solve_coloring(g, SPEC).unsat
            total += 1
    # three adhesions: sample the edge choices
    rng = seeded(4)
    pool = [g for level in levels for g in level.values()]
    for _ in range(60):
        a, b = rng.choice(pool), rng.choice(pool)
        if a.vertex_count + b.vertex_count > 14:
            continue
        h = edge_adhesion(a, rng.randrange(a.m), b, rng.randrange(b.m))
        assert solve_coloring(h, SPEC).unsat
        total += 1
    assert total > 50


def test_certificate_rejections():
    g = double_cycle(3)
    assert not verify_certificate(double_cycle(2), NonColorable(AdhesionTree(Leaf(2), (0, 1))))
    wrong = NonColorable(AdhesionTree(Leaf(5), tuple(range(5))))
    assert not verify_certificate(g, wrong)
    bad_map = NonColorable(AdhesionTree(Leaf(3), (0, 0, 1)))
    assert not verify_certificate(g, bad_map)
    h = edge_adhesion(double_cycle(3), 0, double_cycle(1), 0)
    wrong_tree = NonColorable(AdhesionTree(Node(Leaf(3), Leaf(3), 0, 0), tuple(range(7))))
    assert not verify_certificate(h, wrong_tree)
    bad_colors = Colorable(decide_31(double_cycle(4)).coloring.recolor({1: 1, 2: 1, 3: 1}))
    assert not verify_certificate(double_cycle(4), bad_colors)


def test_certificate_json_round_trip():
    g = edge_adhesion(edge_adhesion(double_cycle(3), 0, double_cycle(1), 0), 2, double_cycle(5), 3)
    cert = decide_31(g)
    text = dump_certificate(cert)
    obj = json.loads(text)
    assert obj["schema"] == 1 and obj["kind"] == "noncolorable"
    again = load_certificate(text)
    assert again == cert and verify_certificate(g, again)
    col = decide_31(double_cycle(6))
    assert load_certificate(dump_certificate(col)) == col


@pytest.mark.parametrize("obj, where", [
    ({"schema": 2, "kind": "colorable", "coloring": [1]}, "schema"),
    ({"schema": 1, "kind": "noncolorable", "vertex_map": [0], "tree": {"kind": "node", "e_left": 0,
      "e_right": 0, "left": {"kind": "leaf", "n": 1}, "right": {"kind": "twig"}}}, "root.right"),
    ({"schema": 1, "kind": "noncolorable", "vertex_map": [0], "tree": {"kind": "leaf"}}, "root"),
    ({"schema": 1, "kind": "mystery"}, "kind"),
])
def test_malformed_certificates(obj, where):
    with pytest.raises(InvalidArgument) as info:
        certificate_from_obj(obj)
    assert where in str(info.value)
    with pytest.raises(InvalidArgument):
        load_certificate("{not json")


def test_recompose_rejects_bad_designation():
    with pytest.raises(InvalidArgument):
        recompose(Node(Leaf(1), Leaf(1), 5, 0))


def test_shared_memo_under_threads():
    graphs = list(iter_regular(4, 6))
    decider = Decider()
    with ThreadPoolExecutor(max_workers=4) as pool:
        certs = list(pool.map(lambda g: decide_31(g, decider), graphs))
    for g, cert in zip(graphs, certs):
        assert verify_certificate(g, cert)
        assert type(cert) is type(decide_31(g))
    assert decider.stats["memo_hits"] > 0
    assert certificate_to_obj(certs[0])["schema"] == 1
