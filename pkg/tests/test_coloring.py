import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_factor, is_rt_coloring, seeded
from regula.coloring import (ColoringSpec, EdgeColoring, FactorWitness, coloring_to_factor, factor_degrees,
                             factor_to_coloring,
                             incidence_profile, verify_coloring, verify_factor)
from regula.constructions import complete_graph, double_cycle
from regula.errors import AmbiguousSplit, InvalidArgument
from regula.graph import Pseudograph
from regula.solver import perfect_matching, solve_factor
from test_graph import pseudographs

PETERSEN = Pseudograph(10, tuple(
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
))


def k7_witness():
    """K_6 on vertices 1..6 red, five spokes blue, the last spoke green."""
    g = complete_graph(7)
    colors = []
    for a, b in g.edges:
        if a == 0:
            colors.append(3 if b == 6 else 2)
        else:
            colors.append(1)
    return g, EdgeColoring(tuple(colors))


def test_spec_validation():
    with pytest.raises(InvalidArgument):
        ColoringSpec(4, 4)
    with pytest.raises(InvalidArgument):
        ColoringSpec(4, 0)
    with pytest.raises(InvalidArgument):
        ColoringSpec(4, 1, max_colors=0)
    assert ColoringSpec(5, 1).major == 4


def test_profile_counts_loops_twice():
    g = Pseudograph(2, ((0, 0), (0, 1), (1, 1), (1, 1)))
    assert incidence_profile(g, [1, 2, 1, 1], 0) == {1: 2, 2: 1}
    g, c = k7_witness()
    for v in range(1, 7):
        prof = incidence_profile(g, c, v)
        assert prof[1] == 5 and sum(prof.values()) == 6
    mono = EdgeColoring((1,) * g.m)
    assert incidence_profile(g, mono, 3) == {1: 6}


def test_profile_rejects_partial():
    with pytest.raises(InvalidArgument):
        incidence_profile(double_cycle(2), {0: 1, 1: 1}, 0)


@given(pseudographs(5, 8), st.integers(0, 1000))
def test_profile_size_is_degree(g, seed):
    rng = seeded(seed)
    colors = [rng.randint(1, 3) for _ in range(g.m)]
    for v in range(g.vertex_count):
        assert sum(incidence_profile(g, colors, v).values()) == g.degrees[v]


def test_verify_examples():
    g = double_cycle(2)
    assert verify_coloring(g, [2, 1, 1, 1], ColoringSpec(4, 1))
    bad = verify_coloring(g, [1, 1, 1, 1], ColoringSpec(4, 1))
    assert not bad and "two colors" in bad.reason
    g7, c7 = k7_witness()
    assert verify_coloring(g7, c7, ColoringSpec(6, 1))
    assert len(c7.used()) == 3


def test_verify_names_vertex():
    g = double_cycle(3)
    v = verify_coloring(g, [1, 2, 1, 1, 1, 1], ColoringSpec(4, 1))
    assert not v and v.vertex is not None and str(v).startswith("FAIL")


def test_verify_rejects_partial_and_non_regular():
    assert not verify_coloring(double_cycle(2), {0: 1}, ColoringSpec(4, 1))
    with pytest.raises(InvalidArgument):
        verify_coloring(double_cycle(2), [1, 2, 1, 1], ColoringSpec(5, 1))


def test_ordered_rule():
    g = double_cycle(2)
    assert verify_coloring(g, [2, 1, 1, 1], ColoringSpec(4, 1, ordered=True))
    assert not verify_coloring(g, [1, 2, 2, 2], ColoringSpec(4, 1, ordered=True))
    assert verify_coloring(g, [1, 2, 2, 2], ColoringSpec(4, 1))


def test_max_colors():
    g7, c7 = k7_witness()
    v = verify_coloring(g7, c7, ColoringSpec(6, 1, max_colors=2))
    assert not v and "at most 2" in v.reason


@given(st.permutations([1, 2, 3, 4, 5]))
def test_verify_invariant_under_renaming(perm):
    g7, c7 = k7_witness()
    mapping = dict(zip([1, 2, 3, 4, 5], perm))
    assert verify_coloring(g7, c7.recolor(mapping), ColoringSpec(6, 1))
    order_preserving = {1: 4, 2: 7, 3: 9}
    assert verify_coloring(g7, c7.recolor(order_preserving), ColoringSpec(6, 1, ordered=True))


def test_verify_agrees_with_oracle_on_random_colorings():
    rng = seeded(11)
    graphs = [double_cycle(n) for n in (1, 2, 3, 4)] + [complete_graph(5)]
    for _ in range(3000):
        g = rng.choice(graphs)
        colors = [rng.randint(1, 3) for _ in range(g.m)]
        ordered = rng.random() < 0.5
        assert bool(verify_coloring(g, colors, ColoringSpec(4, 1, ordered))) == is_rt_coloring(g, colors, 4, 1, ordered)


def test_verify_factor_examples():
    c4 = Pseudograph(4, ((0, 1), (1, 2), (2, 3), (0, 3)))
    assert verify_factor(c4, FactorWitness.of({0, 2}, {1}))
    assert not verify_factor(c4, FactorWitness.of({0, 1}, {1}))
    assert verify_factor(Pseudograph(3), FactorWitness.of((), {0}))
    loop = Pseudograph(1, ((0, 0), (0, 0)))
    assert verify_factor(loop, FactorWitness.of({0}, {2}))
    with pytest.raises(InvalidArgument):
        verify_factor(c4, FactorWitness.of({9}, {1}))


def test_k7_has_no_51_factor_by_brute_force():
    # odd order and odd degrees: a parity argument, checked exhaustively
    assert brute_factor(complete_graph(7), {5, 1}) is None


def test_petersen_bridge():
    res = solve_factor(PETERSEN, {2, 1})
    spec = ColoringSpec(3, 1)
    c = factor_to_coloring(PETERSEN, res.witness, spec)
    assert verify_coloring(PETERSEN, c, spec)
    ordered = ColoringSpec(3, 1, ordered=True, max_colors=2)
    one_factor = all(d == 1 for d in factor_degrees(PETERSEN, res.witness.edge_ids))
    assert bool(verify_coloring(PETERSEN, c, ordered)) == one_factor
    m = perfect_matching(PETERSEN).witness
    assert verify_coloring(PETERSEN, factor_to_coloring(PETERSEN, m, spec), ordered)
    back = coloring_to_factor(PETERSEN, c, spec)
    assert back.edge_ids == res.witness.edge_ids


def test_matching_of_double_edge_graph_bridges_to_coloring():
    g = double_cycle(2)
    c = factor_to_coloring(g, FactorWitness.of({0}, {1, 3}), ColoringSpec(4, 1))
    assert c.colors == (2, 1, 1, 1)


def test_bridge_ambiguity_and_errors():
    g = double_cycle(2)
    with pytest.raises(AmbiguousSplit):
        factor_to_coloring(g, FactorWitness.of({0, 1}, {2}), ColoringSpec(4, 2))
    with pytest.raises(AmbiguousSplit):
        coloring_to_factor(g, [1, 1, 2, 2], ColoringSpec(4, 2))
    with pytest.raises(InvalidArgument):
        factor_to_coloring(g, FactorWitness.of({0, 1}, {1, 3}), ColoringSpec(4, 1))
    with pytest.raises(InvalidArgument):
        coloring_to_factor(g, [1, 2, 3, 1], ColoringSpec(4, 1))


def test_bridge_round_trip_on_all_factors_of_small_regular_graphs():
    graphs = [double_cycle(n) for n in (2, 4)] + [complete_graph(6), PETERSEN]
    for g in graphs:
        r = g.degrees[0]
        for t in range(1, (r + 1) // 2):
            if 2 * t == r:
                continue
            spec = ColoringSpec(r, t)
            for k in range(g.m + 1):
                for S in itertools.combinations(range(g.m), k):
                    w = FactorWitness.of(S, {t, r - t})
                    if not verify_factor(g, w):
                        continue
                    c = factor_to_coloring(g, w, spec)
                    assert verify_coloring(g, c, ColoringSpec(r, t, max_colors=2))
                    assert coloring_to_factor(g, c, spec).edge_ids == w.edge_ids
