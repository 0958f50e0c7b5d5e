import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import (brute_code, brute_cut_vertices, brute_minimal_cuts, connected, disconnects,
                     nx_isomorphic, random_relabel, seeded)
from regula.constructions import complete_graph, double_cycle, theorem42_graph
from regula.enumeration import EnumSpec, enumerate_bounded, enumerate_regular
from regula.errors import InvalidArgument, UnsupportedSize
from regula.graph import (Pseudograph, bridges, canonical_form, canonical_graph, connected_components,
                          cut_vertices, degree, edge_adhesion, is_connected, is_k_edge_connected,
                          is_regular, is_two_connected, isomorphism, loop_adhesion, minimal_edge_cuts,
                          same_structure)


def pseudographs(max_n=6, max_m=9):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        return Pseudograph(n, tuple(draw(st.lists(pair, max_size=max_m))))
    return build()


def path(n):
    return Pseudograph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    return Pseudograph(n, tuple((i, (i + 1) % n) for i in range(n)))


BOWTIE = Pseudograph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))


# -- construction and degrees ---------------------------------------------------


def test_edges_are_normalized_and_ids_stable():
    g = Pseudograph(3, ((2, 0), (1, 1), (0, 2)))
    assert g.edges == ((0, 2), (1, 1), (0, 2))
    assert g.bundles == {(0, 2): (0, 2), (1, 1): (1,)}


def test_out_of_range_endpoint_rejected():
    with pytest.raises(InvalidArgument):
        Pseudograph(2, ((0, 2),))


def test_degree_examples():
    assert degree(Pseudograph(1, ((0, 0), (0, 0))), 0) == 4
    assert degree(Pseudograph(1), 0) == 0
    assert degree(cycle(3), 1) == 2
    with pytest.raises(InvalidArgument):
        degree(cycle(3), 3)


def test_is_regular_examples():
    assert is_regular(double_cycle(3), 4)
    assert is_regular(path(2), 1)
    assert not is_regular(path(3), 1)
    assert is_regular(Pseudograph(0), 7)


@given(pseudographs())
def test_degree_sum_is_twice_edge_count(g):
    assert sum(g.degrees) == 2 * g.m


# -- connectivity -------------------------------------------------------------


def test_components_examples():
    two_loops = Pseudograph(2, ((0, 0), (1, 1)))
    assert len(connected_components(two_loops)) == 2
    assert len(connected_components(double_cycle(5))) == 1
    assert is_connected(complete_graph(4))


def test_cut_vertices_examples():
    assert cut_vertices(BOWTIE) == {2}
    assert cut_vertices(complete_graph(5)) == set()
    g = edge_adhesion(double_cycle(3), 0, double_cycle(3), 0)
    assert cut_vertices(g) == {g.vertex_count - 1}
    with pytest.raises(InvalidArgument):
        cut_vertices(Pseudograph(2))


def test_cut_vertices_match_definition_on_enumerated_graphs():
    checked = 0
    for n in range(1, 7):
        for g in enumerate_bounded(n, 4, 0, 9, connected_only=True):
            assert cut_vertices(g) == brute_cut_vertices(g)
            checked += 1
    assert checked > 1000


@given(pseudographs())
def test_cut_vertices_property(g):
    if connected(g):
        assert cut_vertices(g) == brute_cut_vertices(g)


def test_two_connected():
    assert is_two_connected(complete_graph(4))
    assert not is_two_connected(BOWTIE)
    assert not is_two_connected(Pseudograph(1, ((0, 0),)))


# -- edge cuts ----------------------------------------------------------------


def _blob():
    # K_4 with a loop on vertex 0: degrees 5,3,3,3
    return Pseudograph(4, tuple(itertools.combinations(range(4), 2)) + ((0, 0),))


def test_single_bridge_between_blobs():
    a = _blob()
    g = Pseudograph(8, a.edges + tuple((u + 4, v + 4) for u, v in a.edges) + ((1, 5),))
    cuts = minimal_edge_cuts(g, 1)
    assert [sorted(c.edge_ids) for c in cuts] == [[g.m - 1]]
    assert bridges(g) == [g.m - 1]


def test_no_small_cuts_in_k6():
    assert minimal_edge_cuts(complete_graph(6), 3) == []
    assert is_k_edge_connected(complete_graph(6), 4)


def test_edge_connectivity_examples():
    assert not is_k_edge_connected(path(3), 2)
    assert is_k_edge_connected(cycle(5), 2)
    assert not is_k_edge_connected(cycle(5), 3)
    assert not is_k_edge_connected(Pseudograph(2), 1)


def test_apex_construction_two_cuts():
    g = theorem42_graph(6)
    hub = g.vertex_count - 1
    cuts = [c for c in minimal_edge_cuts(g, 2) if c.size == 2]
    assert len(cuts) == 3
    for cut in cuts:
        assert all(hub in g.edges[e] for e in cut.edge_ids)
        assert disconnects(g, cut.edge_ids)
    assert not minimal_edge_cuts(g, 1)


def test_minimal_cuts_match_brute_force():
    rng = seeded(7)
    tried = 0
    for n in range(2, 7):
        for g in enumerate_bounded(n, 4, 0, 8, connected_only=True):
            if rng.random() > 0.3:
                continue
            got = {c.edge_ids for c in minimal_edge_cuts(g, 3)}
            assert got == set(brute_minimal_cuts(g, 3))
            tried += 1
    assert tried > 200


@given(pseudographs(6, 8))
def test_minimal_cut_properties(g):
    if not connected(g) or g.vertex_count < 2:
        return
    for cut in minimal_edge_cuts(g, 3):
        assert all(g.edges[e][0] != g.edges[e][1] for e in cut.edge_ids)
        assert disconnects(g, cut.edge_ids)
        assert all(not disconnects(g, cut.edge_ids - {e}) for e in cut.edge_ids)
        assert cut.minimal and len(cut.sides) == 2


def test_cut_precondition():
    with pytest.raises(InvalidArgument):
        minimal_edge_cuts(Pseudograph(2), 2)
    with pytest.raises(UnsupportedSize):
        minimal_edge_cuts(cycle(4), 5)


# -- adhesions -----------------------------------------------------------------


def test_edge_adhesion_of_one_vertex_double_cycles():
    g = edge_adhesion(double_cycle(1), 0, double_cycle(1), 1)
    assert (g.vertex_count, g.m) == (3, 6)
    assert is_regular(g, 4)
    assert g.degrees[2] == 4


def test_loop_adhesion_on_loop():
    g = Pseudograph(1, ((0, 0), (0, 0)))
    h = loop_adhesion(g, 0)
    assert h.vertex_count == 2 and h.m == 4
    assert h.multiplicity[0][1] == 2 and h.loop_counts[1] == 1
    assert is_regular(h, 4)


def test_adhesion_bad_edge():
    with pytest.raises(InvalidArgument):
        edge_adhesion(double_cycle(2), 4, double_cycle(2), 0)
    with pytest.raises(InvalidArgument):
        loop_adhesion(double_cycle(2), -1)


@given(pseudographs(5, 7), pseudographs(5, 7), st.data())
def test_adhesion_count_formulas(g1, g2, data):
    if not g1.m or not g2.m:
        return
    e1 = data.draw(st.integers(0, g1.m - 1))
    e2 = data.draw(st.integers(0, g2.m - 1))
    h = edge_adhesion(g1, e1, g2, e2)
    assert (h.vertex_count, h.m) == (g1.vertex_count + g2.vertex_count + 1, g1.m + g2.m + 2)
    assert h.degrees[-1] == 4
    assert h.degrees[:g1.vertex_count] == g1.degrees
    assert h.degrees[g1.vertex_count:-1] == g2.degrees
    l = loop_adhesion(g1, e1)
    assert (l.vertex_count, l.m) == (g1.vertex_count + 1, g1.m + 2)
    assert l.degrees[:-1] == g1.degrees and l.degrees[-1] == 4


def test_adhesions_preserve_four_regularity():
    graphs = enumerate_regular(EnumSpec(4, 3, True))
    for a, b in itertools.product(graphs, repeat=2):
        for e1 in range(a.m):
            assert is_regular(edge_adhesion(a, e1, b, 0), 4)
            assert is_regular(loop_adhesion(a, e1), 4)


# -- canonical form -------------------------------------------------------------


def test_canonical_distinguishes_multiplicities():
    triangle_loops = Pseudograph(3, ((0, 1), (1, 2), (0, 2), (0, 0), (1, 1), (2, 2)))
    assert canonical_form(double_cycle(3)) != canonical_form(triangle_loops)


def test_canonical_two_vertex_four_regular():
    a = Pseudograph(2, ((0, 1),) * 4)
    b = Pseudograph(2, ((0, 0), (1, 1), (0, 1), (0, 1)))
    assert canonical_form(a) != canonical_form(b)


def test_canonical_cap():
    with pytest.raises(UnsupportedSize):
        canonical_form(cycle(11))
    assert canonical_form(cycle(11), cap=11) == canonical_form(cycle(11).relabel([10, *range(10)]), cap=11)


@given(pseudographs(7, 12), st.integers(0, 10 ** 6))
def test_canonical_invariant_under_relabeling(g, seed):
    h, perm = random_relabel(g, seeded(seed))
    assert canonical_form(g) == canonical_form(h)
    phi = isomorphism(g, h)
    assert phi is not None and same_structure(g, h, phi)


@given(pseudographs(5, 7), pseudographs(5, 7))
def test_canonical_agrees_with_networkx(g, h):
    same = g.vertex_count == h.vertex_count and canonical_form(g) == canonical_form(h)
    assert same == nx_isomorphic(g, h)


def test_canonical_agrees_with_permutation_minimum():
    rng = seeded(3)
    pool = [g for n in range(1, 6) for g in enumerate_bounded(n, 4, 0, 7)]
    sample = rng.sample(pool, 400)
    for g in sample:
        h, _ = random_relabel(g, rng)
        assert brute_code(canonical_graph(g)) == brute_code(g)
        assert canonical_graph(h).multiplicity == canonical_graph(g).multiplicity
    codes = {canonical_form(g) for g in pool}
    assert len(codes) == len(pool) == len({brute_code(g) for g in pool})


def test_isomorphism_none_for_different_graphs():
    assert isomorphism(double_cycle(4), complete_graph(4).disjoint_union(Pseudograph(0))) is None
