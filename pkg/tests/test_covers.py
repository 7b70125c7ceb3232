import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from prymcheck.checks import random_symmetric_graph
from prymcheck.covers import (
    BaseType,
    CoverCounts,
    DualGraph,
    GraphAutomorphism,
    arithmetic_genus,
    check_fundamental_subgraph,
    check_star_star,
    classify_fiber,
    cover_genus,
    cycle_graph,
    enumerate_candidates,
    fiber_catalog,
    fundamental_subgraph,
    hurwitz_cover_genus,
    order_p_subgroups_of_plane,
    polarization_type,
    prym_dim,
    sylow_7_subgroup_count_of_S7,
    torus_dims,
    x_of_e_kernel_order,
)


def test_arithmetic_genus_examples():
    assert arithmetic_genus(DualGraph((1,), ((0, 0),))) == 2
    assert arithmetic_genus(DualGraph((0, 0), ((0, 1),) * 3)) == 2
    assert arithmetic_genus(cycle_graph(7, genus=1)) == 8


@pytest.mark.parametrize("base", list(BaseType))
def test_base_types_have_genus_two(base):
    assert arithmetic_genus(base.graph) == 2


def test_seven_base_types():
    assert len(BaseType) == 7


@settings(max_examples=50)
@given(st.permutations(range(5)))
def test_genus_invariant_under_relabeling(perm):
    g = BaseType.TWO_NODAL_RATIONAL.graph
    big = DualGraph(g.genera + (1, 2, 0), g.edges + ((1, 2), (2, 3), (3, 3)))
    assert arithmetic_genus(big.relabel(perm)) == arithmetic_genus(big)


def test_hurwitz_examples():
    assert cover_genus(2, r=0) == 8
    assert hurwitz_cover_genus(1, 0, 0) == 1
    assert cover_genus(2, r=1) == 11


@given(st.integers(0, 4), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_hurwitz_chain(gN, r, n1, n7):
    # p_a(C~) - 1 = p_a(N~) - 1 + 7 n1 + n7 and p_a(C) - 1 = p_a(N) - 1 + n1 + n7
    pa_cover = hurwitz_cover_genus(gN, r, n7) + 7 * n1 + n7
    pa_base = gN + n1 + n7
    assert pa_cover == cover_genus(pa_base, r)


def test_star_star_examples():
    assert check_star_star(CoverCounts(n1=1, n7=0, comp1=1, comp7=0))
    assert not check_star_star(CoverCounts(n1=1, n7=0, comp1=1, comp7=0, r=1))
    assert not check_star_star(CoverCounts(n1=2, n7=0, comp1=1, comp7=0))


def test_torus_dims_examples():
    assert torus_dims(CoverCounts(1, 0, 1, 0)) == (1, 1)
    assert torus_dims(CoverCounts(2, 0, 1, 0)) == (8, 2)
    assert torus_dims(CoverCounts(0, 1, 0, 1)) == (1, 1)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_torus_dims_equal_iff_comp1_n1(n1, n7, c1, c7):
    up, down = torus_dims(CoverCounts(n1, n7, c1, c7))
    assert (up == down) == (c1 == n1)


def test_prym_numbers():
    assert prym_dim(2) == 6
    assert polarization_type(2) == (1, 1, 1, 1, 1, 7)
    assert polarization_type(3).count(7) == 2 and polarization_type(3).count(1) == 10
    with pytest.raises(ValueError):
        prym_dim(1)


@given(st.integers(2, 12))
def test_polarization_type_shape(g):
    t = polarization_type(g)
    assert len(t) == prym_dim(g)
    prod = 1
    for x in t:
        prod *= x
    assert prod == 7 ** (g - 1)


def test_group_counts():
    assert x_of_e_kernel_order() == 49
    assert x_of_e_kernel_order(3) == 9
    assert sylow_7_subgroup_count_of_S7() == 120
    assert order_p_subgroups_of_plane() == 8


def test_classification_table():
    assert classify_fiber(BaseType.SMOOTH).types == ()
    assert classify_fiber(BaseType.ELLIPTIC_ONE_NODE).types == ("i",)
    assert classify_fiber(BaseType.RATIONAL_TWO_NODES).types == ()
    assert classify_fiber(BaseType.TWO_ELLIPTIC).types == ("ii",)
    assert classify_fiber(BaseType.ELLIPTIC_NODAL_RATIONAL).types == ("iii", "iv")
    assert classify_fiber(BaseType.TWO_NODAL_RATIONAL).types == ()
    assert classify_fiber(BaseType.TWO_RATIONAL_THREE_POINTS).types == ()


def test_type_i_cover_is_seven_cycle():
    for c in classify_fiber(BaseType.ELLIPTIC_ONE_NODE).witnesses:
        assert c.cover.genera == (1,) * 7
        assert c.cover.betti() == 1 and c.cover.is_connected()


def test_type_iii_structure():
    (c,) = [w for w in classify_fiber(BaseType.ELLIPTIC_NODAL_RATIONAL).witnesses if w.label == "iii"]
    assert sorted(c.cover.genera) == [0] + [1] * 7
    assert c.indices == (1, 7)


def test_rejection_reasons():
    reasons = {c.rejection for c in enumerate_candidates(BaseType.TWO_RATIONAL_THREE_POINTS)}
    assert "no node of index 1" in reasons
    assert None not in reasons
    smooth = list(enumerate_candidates(BaseType.SMOOTH))
    assert [c.rejection for c in smooth] == ["no node of index 1"] * len(smooth)


def test_all_rational_covers_are_rejected():
    for base in (BaseType.RATIONAL_TWO_NODES, BaseType.TWO_NODAL_RATIONAL, BaseType.TWO_RATIONAL_THREE_POINTS):
        for c in enumerate_candidates(base):
            if c.cover is not None and c.cover.is_connected():
                assert c.cover.betti() > base.graph.betti()


def test_surviving_covers_satisfy_invariants():
    for base in BaseType:
        for c in classify_fiber(base).witnesses:
            assert check_star_star(c.counts)
            assert arithmetic_genus(c.cover) == 7 * arithmetic_genus(base.graph) - 6 == 8
            up, down = torus_dims(c.counts)
            assert up == down


def test_catalog():
    cat = fiber_catalog()
    assert cat.types == ("i", "ii", "iii", "iv")
    assert cat.unique == ("iii", "iv")
    assert cat.strata["S1"] == ("i", "iv")
    assert cat.strata["S2"] == ("ii", "iii", "iv")
    assert cat.intersection() == ("iv",)
    assert len(cat.nonempty_bases) == 3


# fundamental subgraphs ----------------------------------------------------------


def rotation(n, step):
    return GraphAutomorphism(tuple((v + step) % n for v in range(n)))


def brute_force_fundamental(g, s, size):
    """All connected vertex sets of the given size meeting the postconditions."""
    return [
        set(sub) for sub in combinations(range(g.n_vertices), size)
        if check_fundamental_subgraph(g, s, set(sub))
    ]


def test_seven_cycle():
    g = cycle_graph(7)
    sub = fundamental_subgraph(g, rotation(7, 1))
    assert len(sub) == 1


def test_fourteen_cycle_rotation_by_two():
    g = cycle_graph(14)
    s = rotation(14, 2)
    sub = fundamental_subgraph(g, s)
    assert len(sub) == 2 and check_fundamental_subgraph(g, s, sub)
    oracle = brute_force_fundamental(g, s, 2)
    assert set(sub) in oracle
    assert all(abs(a - b) in (1, 13) for a, b in map(sorted, oracle))


def test_seven_edges_into_fourteen_cycle():
    # 7 disjoint edges {2k, 2k+1} linked by edges {2k+1, 2k+2} into a 14-cycle
    edges = tuple((2 * k, 2 * k + 1) for k in range(7)) + tuple((2 * k + 1, (2 * k + 2) % 14) for k in range(7))
    g = DualGraph((0,) * 14, edges)
    s = rotation(14, 2)
    sub = fundamental_subgraph(g, s)
    assert set(sub) in brute_force_fundamental(g, s, 2)


def test_fundamental_preconditions():
    with pytest.raises(ValueError):
        fundamental_subgraph(DualGraph((0,) * 7, ()), rotation(7, 1))
    with pytest.raises(ValueError):
        fundamental_subgraph(cycle_graph(7), GraphAutomorphism(tuple(range(7))))
    with pytest.raises(ValueError):
        # rotation by one step of a 14-cycle has order 14, not 7
        fundamental_subgraph(cycle_graph(14), rotation(14, 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_fundamental_random(seed):
    g, s = random_symmetric_graph(random.Random(seed))
    assert g.n_vertices <= 21
    assert check_fundamental_subgraph(g, s, fundamental_subgraph(g, s))
